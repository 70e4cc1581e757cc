import os
import tempfile
import unittest

from quiver_fixtures import a3_ar_quiver

from ar_window.errors import ParseError, QuiverError
from ar_window.quiver.textio import dumps, loads, read_quiver, write_quiver
from ar_window.quiver.translation_quiver import build, is_valid, validate


class TestBuild(unittest.TestCase):

    def test_parallel_unvalued_arrows_merge(self):
        """Test repeated (a, b) entries become one arrow with valuation (m, m)"""
        q = build([1, 2], [(1, 2), (1, 2), (1, 2)], [])
        self.assertEqual(len(q.arrows), 1)
        self.assertEqual(q.valuation(1, 2), (3, 3))

    def test_duplicate_vertex(self):
        """Test duplicate vertex ids are rejected"""
        with self.assertRaises(QuiverError):
            build([1, 1], [], [])

    def test_dangling_arrow(self):
        """Test arrows must end at known vertices"""
        with self.assertRaises(QuiverError):
            build([1], [(1, 2)], [])

    def test_non_positive_valuation(self):
        with self.assertRaises(QuiverError):
            build([1, 2], [(1, 2, 0, 1)], [])

    def test_tau_defined_twice(self):
        with self.assertRaises(QuiverError):
            build([1, 2, 3], [], [(3, 1), (3, 2)])

    def test_tau_not_injective(self):
        """Test two vertices may not share a translate"""
        with self.assertRaises(QuiverError):
            build([1, 2, 3], [], [(2, 1), (3, 1)])

    def test_flags(self):
        """Test projective and injective flags follow the translation"""
        q = a3_ar_quiver()
        self.assertEqual(q.projectives(), (0, 1, 2))
        self.assertEqual(q.injectives(), (2, 4, 5))
        self.assertEqual(q.tau_inverse(0), 3)
        self.assertEqual(q.tau_power(5, 2), 0)
        self.assertEqual(q.tau_power(0, -2), 5)
        self.assertIsNone(q.tau_power(0, 1))

    def test_truncated_vertex_is_neither_projective_nor_injective(self):
        q = build([1, 2], [(1, 2)], [], boundary=[1])
        flags = q.flags(1)
        self.assertTrue(flags.truncated)
        self.assertFalse(flags.projective)
        self.assertFalse(flags.injective)

    def test_unknown_vertex(self):
        q = a3_ar_quiver()
        with self.assertRaises(QuiverError):
            q.successors(99)

    def test_full_subquiver_marks_cut_vertices(self):
        """Test dropping a neighbour puts the vertex on the boundary"""
        q = a3_ar_quiver()
        sub = q.full_subquiver([0, 1, 3])
        self.assertEqual(set(sub.vertices), {0, 1, 3})
        self.assertIn(1, sub.boundary)
        self.assertIn(3, sub.boundary)
        self.assertEqual(sub.tau(3), 0)


class TestValidate(unittest.TestCase):

    def test_ar_quiver_is_valid(self):
        """Test the A3 AR quiver satisfies the translation axiom"""
        self.assertEqual(validate(a3_ar_quiver()), [])
        self.assertTrue(is_valid(a3_ar_quiver()))

    def test_missing_partner_arrow(self):
        """Test a mesh missing one of its arrows is reported"""
        q = build([0, 1, 2], [(0, 1)], [(2, 0)])
        violations = validate(q)
        self.assertEqual(len(violations), 1)
        self.assertEqual(violations[0].axiom, "translation-axiom")
        self.assertEqual(violations[0].vertex, 2)
        self.assertEqual(violations[0].arrow, (0, 1))

    def test_mirrored_valuation(self):
        """Test y->z valued (a, b) needs tau z->y valued (b, a)"""
        good = build([0, 1, 2], [(0, 1, 1, 2), (1, 2, 2, 1)], [(2, 0)])
        self.assertEqual(validate(good), [])
        bad = build([0, 1, 2], [(0, 1, 1, 2), (1, 2, 1, 2)], [(2, 0)])
        self.assertEqual([v.axiom for v in validate(bad)], ["translation-axiom"])

    def test_boundary_vertex_is_skipped(self):
        """Test truncated vertices are exempt from the axiom"""
        q = build([0, 1, 2], [(0, 1)], [(2, 0)], boundary=[2])
        self.assertEqual(validate(q), [])

    def test_violation_text(self):
        q = build([0, 1, 2], [(0, 1)], [(2, 0)])
        text = str(validate(q)[0])
        self.assertIn("vertex 2", text)
        self.assertIn("arrow 0->1", text)


class TestQuiverText(unittest.TestCase):

    def test_dump_and_load(self):
        """Test the text format keeps labels, valuations, tau and truncation"""
        q = build([(0, "P 3"), (1, "x"), (2, "y")], [(0, 1, 2, 1), (1, 2)], [(2, 0)], [1])
        again = loads(dumps(q))
        self.assertEqual(again, q)
        self.assertEqual(again.label(0), "P 3")

    def test_dump_is_deterministic(self):
        self.assertEqual(dumps(a3_ar_quiver()), dumps(a3_ar_quiver()))

    def test_comments_and_blank_lines(self):
        q = loads("# header\n\nv 1 a\nv 2 b  # trailing\na 1 2 1 1\n")
        self.assertEqual(q.vertices, (1, 2))
        self.assertTrue(q.has_arrow(1, 2))

    def test_bad_record(self):
        """Test unknown record types report their line"""
        with self.assertRaises(ParseError) as ctx:
            loads("v 1 a\nx 1 2\n", "bad.tq")
        self.assertEqual(ctx.exception.line, 2)
        self.assertIn("bad.tq:2", str(ctx.exception))

    def test_non_integer(self):
        with self.assertRaises(ParseError):
            loads("v one a\n")

    def test_structural_error_becomes_parse_error(self):
        with self.assertRaises(ParseError):
            loads("v 1 a\na 1 2 1 1\n")

    def test_file_round_trip(self):
        tmp = tempfile.mkdtemp()
        path = write_quiver(a3_ar_quiver(), os.path.join(tmp, "sub", "a3.tq"))
        self.assertTrue(path.exists())
        self.assertEqual(read_quiver(path), a3_ar_quiver())


if __name__ == "__main__":
    unittest.main()
