import unittest

from ar_window.errors import GeneratorError
from ar_window.families import family_registry
from ar_window.quiver.generators import dynkin, parse_delta, stable_tube, z_delta_window
from ar_window.quiver.translation_quiver import validate


class TestDelta(unittest.TestCase):

    def test_dynkin_shapes(self):
        """Test A, D and E diagrams have n vertices and n-1 edges"""
        for name, n in (("A1", 1), ("A4", 4), ("D5", 5), ("E6", 6), ("E8", 8)):
            delta = dynkin(name)
            self.assertEqual(len(delta.vertices), n)
            self.assertEqual(len(delta.arrows), n - 1)

    def test_dynkin_orientation(self):
        delta = dynkin("A3", orientation=[True, False])
        self.assertEqual(delta.arrows, (("x1", "x2"), ("x3", "x2")))

    def test_bad_dynkin(self):
        for name in ("A0", "D3", "E9", "F4", "A"):
            with self.assertRaises(GeneratorError):
                dynkin(name)

    def test_parse_explicit_arrows(self):
        """Test chains and isolated fragments in the explicit syntax"""
        delta = parse_delta("a->b->c, b->d")
        self.assertEqual(delta.vertices, ("a", "b", "c", "d"))
        self.assertEqual(len(delta.arrows), 3)

    def test_delta_must_be_connected_and_acyclic(self):
        with self.assertRaises(GeneratorError):
            parse_delta("a->b, c->d")
        with self.assertRaises(GeneratorError):
            parse_delta("a->b->a")
        with self.assertRaises(GeneratorError):
            parse_delta("a->a")


class TestZDeltaWindow(unittest.TestCase):

    def test_a2_window(self):
        """Test ZA2 on layers 0..3 has 8 vertices and truncated outer layers"""
        q = z_delta_window(dynkin("A2"), 0, 3)
        self.assertEqual(len(q), 8)
        self.assertEqual(len(q.boundary), 4)
        # 4 arrows inside layers, 3 between them
        self.assertEqual(len(q.arrows), 7)
        self.assertEqual(len(q.tau_map), 6)

    def test_window_is_valid(self):
        """Test every inner mesh of a ZDelta window is complete"""
        for name in ("A3", "D4", "E6"):
            q = z_delta_window(dynkin(name), -1, 3)
            self.assertEqual(validate(q), [], name)

    def test_no_projectives_in_window(self):
        q = z_delta_window(dynkin("A3"), 0, 4)
        self.assertEqual(q.projectives(), ())
        self.assertEqual(q.injectives(), ())

    def test_empty_window(self):
        with self.assertRaises(GeneratorError):
            z_delta_window(dynkin("A2"), 3, 1)


class TestStableTube(unittest.TestCase):

    def test_tube_size(self):
        """Test a rank 3 tube cut at level 4 has 12 vertices"""
        q = stable_tube(3, 4)
        self.assertEqual(len(q), 12)
        self.assertEqual(len(q.boundary), 3)
        self.assertEqual(len(q.tau_map), 12)

    def test_tube_is_valid(self):
        for rank, depth in ((1, 3), (2, 4), (3, 4)):
            self.assertEqual(validate(stable_tube(rank, depth)), [])

    def test_translation_is_periodic(self):
        q = stable_tube(3, 2)
        for v in q.vertices:
            self.assertEqual(q.tau_power(v, 3), v)

    def test_bad_parameters(self):
        with self.assertRaises(GeneratorError):
            stable_tube(0, 2)


class TestFamilyRegistry(unittest.TestCase):

    def test_registered_families(self):
        self.assertEqual(family_registry.names(), ["tube", "zdelta"])

    def test_generate(self):
        """Test string parameters reach the generators"""
        self.assertEqual(len(family_registry.generate("zdelta", ["A2", "0", "3"])), 8)
        self.assertEqual(len(family_registry.generate("tube", ["3", "4"])), 12)

    def test_parameter_errors(self):
        with self.assertRaises(GeneratorError):
            family_registry.generate("tube", ["3"])
        with self.assertRaises(GeneratorError):
            family_registry.generate("tube", ["three", "4"])
        with self.assertRaises(GeneratorError):
            family_registry.generate("cylinder", [])


if __name__ == "__main__":
    unittest.main()
