import unittest

import numpy as np
from quiver_fixtures import (
    SAMPLES,
    ground_field,
    path_algebra_a2,
    path_algebra_a3,
    truncated_loop,
)

from ar_window.errors import (
    DecomposableInputError,
    ParseError,
    PresentationError,
    RepresentationError,
)
from ar_window.modcat.algebra import AlgebraPresentation, QPath
from ar_window.modcat.annihilator import annihilator, is_faithful
from ar_window.modcat.decomposition import (
    are_isomorphic,
    decompose,
    indecomposable_summands,
    is_indecomposable,
)
from ar_window.modcat.duality import (
    ar_inverse,
    ar_translate,
    dual,
    dual_morphism,
    minimal_projective_presentation,
    transpose,
)
from ar_window.modcat.homs import Morphism, end, hom, top_dimension_of_end
from ar_window.modcat.linalg import MAX_FIELD_ORDER, check_field_order, matmul_mod
from ar_window.modcat.representation import (
    Representation,
    direct_sum,
    injective,
    is_sincere,
    projective,
    regular_module,
    simple,
    standard_modules,
)
from ar_window.modcat.submodules import (
    cokernel,
    image,
    kernel,
    quotient,
    radical_of_module,
    socle,
    socle_vector,
    submodule,
    top,
    top_vector,
)
from ar_window.modcat.textio import (
    dumps_algebra,
    dumps_module,
    loads_algebra,
    loads_module,
    parse_relation,
    read_algebra,
)


class TestAlgebra(unittest.TestCase):

    def test_dimensions(self):
        """Test dim kQ/I and the nilpotence index of the radical"""
        cases = [
            (path_algebra_a2(), 3, 2),
            (path_algebra_a3(), 6, 3),
            (truncated_loop(2), 2, 2),
            (truncated_loop(4), 4, 4),
            (ground_field(), 1, 1),
        ]
        for a, dim, index in cases:
            self.assertEqual(a.algebra.dimension, dim)
            self.assertEqual(a.nilpotence_index, index)

    def test_commutativity_relation(self):
        """Test a commutative square has one path from source to sink"""
        a = AlgebraPresentation(
            [1, 2, 3, 4],
            [("a", 1, 2), ("b", 2, 4), ("c", 1, 3), ("d", 3, 4)],
            [[(1, ("a", "b")), (-1, ("c", "d"))]],
            p=11,
        )
        self.assertEqual(len(a.algebra.basis_paths(1, 4)), 1)
        self.assertEqual(projective(a, 1).dim_vector, (1, 1, 1, 1))

    def test_non_admissible(self):
        with self.assertRaises(PresentationError):
            AlgebraPresentation([1], [("x", 1, 1)], [], p=11, nilpotence_bound=4).algebra
        with self.assertRaises(PresentationError):
            AlgebraPresentation([1, 2], [("a", 1, 2)], [[(1, ("a",))]], p=11)

    def test_bad_presentations(self):
        with self.assertRaises(PresentationError):
            AlgebraPresentation([1], [], [], p=12)
        with self.assertRaises(PresentationError):
            AlgebraPresentation([1, 1], [], [], p=11)
        with self.assertRaises(PresentationError):
            AlgebraPresentation([1], [("a", 1, 2)], [], p=11)
        with self.assertRaises(PresentationError):
            AlgebraPresentation(
                [1, 2, 3],
                [("a", 1, 2), ("b", 2, 3), ("c", 2, 2)],
                [[(1, ("a", "b")), (1, ("a", "c"))]],
                p=11,
            )

    def test_opposite(self):
        a = path_algebra_a3()
        op = a.opposite()
        self.assertEqual(op.arrow("a").source, 2)
        self.assertIs(op.opposite(), a)
        self.assertEqual(op.algebra.dimension, 6)


class TestRepresentations(unittest.TestCase):

    def test_standard_modules_of_a2(self):
        """Test P1 = I2, P2 = S2 and I1 = S1 for 1 -> 2"""
        a = path_algebra_a2()
        self.assertEqual(projective(a, 1).dim_vector, (1, 1))
        self.assertEqual(projective(a, 2).dim_vector, (0, 1))
        self.assertEqual(injective(a, 1).dim_vector, (1, 0))
        self.assertEqual(injective(a, 2).dim_vector, (1, 1))
        self.assertTrue(are_isomorphic(projective(a, 1), injective(a, 2)))
        self.assertTrue(are_isomorphic(projective(a, 2), simple(a, 2)))

    def test_standard_modules_of_a3(self):
        a = path_algebra_a3()
        dims = [m.dim_vector for m in standard_modules(a)]
        self.assertEqual(
            dims,
            [(1, 1, 1), (0, 1, 1), (0, 0, 1), (1, 0, 0), (1, 1, 0), (1, 1, 1)],
        )

    def test_loop_projective(self):
        a = truncated_loop(3)
        p = projective(a, 1)
        self.assertEqual(p.total_dim, 3)
        x = p.matrix("x")
        self.assertFalse(np.linalg.matrix_power(x, 3).any())
        self.assertTrue(np.linalg.matrix_power(x, 2).any())

    def test_relations_are_checked(self):
        with self.assertRaises(RepresentationError):
            Representation(truncated_loop(2), {1: 1}, {"x": [[1]]})

    def test_shape_errors(self):
        a = path_algebra_a2()
        with self.assertRaises(RepresentationError):
            Representation(a, {1: 1, 2: 1}, {"a": [[1, 0]]})
        with self.assertRaises(RepresentationError):
            Representation(a, {3: 1})
        with self.assertRaises(RepresentationError):
            Representation(a, {1: 1}, {"z": [[1]]})

    def test_direct_sum_and_regular_module(self):
        a = path_algebra_a3()
        self.assertEqual(regular_module(a).total_dim, a.algebra.dimension)
        with self.assertRaises(RepresentationError):
            direct_sum([simple(a, 1), simple(path_algebra_a2(), 1)])

    def test_sincere(self):
        a = path_algebra_a3()
        self.assertTrue(is_sincere([projective(a, 1)]))
        self.assertFalse(is_sincere([simple(a, 1), simple(a, 2)]))
        self.assertFalse(is_sincere([]))


class TestHoms(unittest.TestCase):

    def setUp(self):
        self.a = path_algebra_a2()
        self.p1 = projective(self.a, 1)
        self.s1 = simple(self.a, 1)
        self.s2 = simple(self.a, 2)

    def test_hom_dimensions(self):
        self.assertEqual(hom(self.p1, self.s1).dim, 1)
        self.assertEqual(hom(self.s1, self.p1).dim, 0)
        self.assertEqual(hom(self.s2, self.p1).dim, 1)
        self.assertEqual(hom(self.s1, self.s2).dim, 0)
        self.assertEqual(end(projective(truncated_loop(3), 1)).dim, 3)

    def test_basis_elements_are_homomorphisms(self):
        for m in standard_modules(path_algebra_a3()):
            for n in standard_modules(m.algebra):
                for f in hom(m, n).basis:
                    self.assertTrue(f.is_homomorphism())

    def test_coordinates(self):
        space = end(projective(truncated_loop(3), 1))
        f = space.element([2, 0, 5])
        self.assertEqual(list(space.coordinates(f)), [2, 0, 5])

    def test_morphism_checks(self):
        with self.assertRaises(RepresentationError):
            Morphism(self.s1, self.p1, {1: np.array([[1]])}, check=True)
        ident = Morphism.identity(self.p1)
        self.assertTrue(ident.is_isomorphism())
        self.assertTrue(Morphism.zero(self.p1, self.s1).is_zero())

    def test_top_of_endomorphism_ring(self):
        """Test End/rad End is k for indecomposables and a product for sums"""
        self.assertEqual(top_dimension_of_end(self.p1), 1)
        self.assertEqual(top_dimension_of_end(direct_sum([self.s1, self.s2])), 2)
        self.assertEqual(top_dimension_of_end(direct_sum([self.s1, self.s1])), 4)


class TestSubmodules(unittest.TestCase):

    def setUp(self):
        self.a = path_algebra_a2()
        self.p1 = projective(self.a, 1)

    def test_radical_top_socle(self):
        self.assertEqual(radical_of_module(self.p1).module.dim_vector, (0, 1))
        self.assertEqual(top(self.p1).module.dim_vector, (1, 0))
        self.assertEqual(socle(self.p1).module.dim_vector, (0, 1))
        self.assertEqual(top_vector(self.p1), (1, 0))
        self.assertEqual(socle_vector(self.p1), (0, 1))

    def test_kernel_image_cokernel(self):
        (f,) = hom(simple(self.a, 2), self.p1).basis
        self.assertTrue(kernel(f).module.is_zero())
        self.assertEqual(image(f).module.dim_vector, (0, 1))
        self.assertTrue(are_isomorphic(cokernel(f).module, simple(self.a, 1)))

    def test_quotient_by_socle(self):
        """Test P/soc P of k[x]/x^3 is uniserial of length 2"""
        p = projective(truncated_loop(3), 1)
        q = quotient(p, socle(p).bases).module
        self.assertEqual(q.total_dim, 2)
        self.assertTrue(is_indecomposable(q))

    def test_not_a_submodule(self):
        with self.assertRaises(RepresentationError):
            submodule(self.p1, {1: np.array([[1]])})


class TestDecomposition(unittest.TestCase):

    def test_indecomposables(self):
        a = path_algebra_a3()
        for m in standard_modules(a):
            self.assertTrue(is_indecomposable(m), m.describe())
        self.assertFalse(is_indecomposable(regular_module(a)))

    def test_regular_module_splits_into_projectives(self):
        a = path_algebra_a3()
        summands = indecomposable_summands(regular_module(a), seed=1)
        self.assertEqual(sorted(m.dim_vector for m in summands), [(0, 0, 1), (0, 1, 1), (1, 1, 1)])

    def test_decompose_with_multiplicities(self):
        a = path_algebra_a2()
        m = direct_sum([simple(a, 1), projective(a, 1), simple(a, 1)])
        found = decompose(m, seed=3)
        self.assertEqual([(s.dim_vector, k) for s, k in found], [((1, 0), 2), ((1, 1), 1)])

    def test_isomorphism(self):
        a = path_algebra_a2()
        self.assertFalse(are_isomorphic(simple(a, 1), simple(a, 2)))
        self.assertFalse(are_isomorphic(direct_sum([simple(a, 1), simple(a, 2)]), projective(a, 1)))
        twisted = Representation(a, {1: 1, 2: 1}, {"a": [[7]]})
        self.assertTrue(are_isomorphic(twisted, projective(a, 1)))

    def test_zero_module(self):
        a = path_algebra_a2()
        with self.assertRaises(RepresentationError):
            is_indecomposable(Representation(a, {}))


class TestTranslations(unittest.TestCase):

    def test_a2(self):
        """Test tau S1 = S2 and tau- S2 = S1 for 1 -> 2"""
        a = path_algebra_a2()
        self.assertTrue(are_isomorphic(ar_translate(a, simple(a, 1)), simple(a, 2)))
        self.assertTrue(are_isomorphic(ar_inverse(a, simple(a, 2)), simple(a, 1)))
        self.assertTrue(ar_translate(a, projective(a, 1)).is_zero())
        self.assertTrue(ar_inverse(a, injective(a, 2)).is_zero())

    def test_a3_meshes(self):
        a = path_algebra_a3()
        s2, s3 = simple(a, 2), simple(a, 3)
        self.assertTrue(are_isomorphic(ar_inverse(a, s3), s2))
        self.assertTrue(are_isomorphic(ar_inverse(a, projective(a, 2)), injective(a, 2)))
        self.assertTrue(are_isomorphic(ar_translate(a, simple(a, 1)), s2))

    def test_truncated_loops_are_tau_stable(self):
        """Test every non-projective over k[x]/x^n is fixed by tau"""
        for n in (2, 3):
            a = truncated_loop(n)
            p = projective(a, 1)
            for m in (simple(a, 1), radical_of_module(p).module):
                if m.total_dim == n:
                    continue
                self.assertTrue(are_isomorphic(ar_translate(a, m), m))
                self.assertTrue(are_isomorphic(ar_inverse(a, m), m))

    def test_round_trip(self):
        a = path_algebra_a3()
        for m in (simple(a, 1), simple(a, 2), injective(a, 2)):
            back = ar_inverse(a, ar_translate(a, m))
            self.assertTrue(are_isomorphic(back, m), m.describe())

    def test_decomposable_input(self):
        a = path_algebra_a2()
        with self.assertRaises(DecomposableInputError):
            ar_translate(a, direct_sum([simple(a, 1), simple(a, 2)]))
        with self.assertRaises(RepresentationError):
            ar_translate(a, Representation(a, {}))

    def test_presentation_and_transpose(self):
        a = path_algebra_a2()
        pres = minimal_projective_presentation(a, simple(a, 1))
        self.assertEqual(pres.p0_vertices, (1,))
        self.assertEqual(pres.p1_vertices, (2,))
        self.assertTrue(transpose(a, projective(a, 1)).is_zero())
        self.assertIs(transpose(a, simple(a, 1)).algebra, a.opposite())

    def test_dual(self):
        a = path_algebra_a3()
        d = dual(a, projective(a, 1))
        self.assertIs(d.algebra, a.opposite())
        self.assertEqual(d.dim_vector, (1, 1, 1))
        self.assertIs(dual(a.opposite(), d).algebra, a)


class TestModuleCategoryLaws(unittest.TestCase):
    """Structural identities of mod A on small algebras"""

    def test_tau_inverse_of_tau(self):
        """Test ττ⁻M ≅ M for every indecomposable non-injective M"""
        a = path_algebra_a3()
        for m in (projective(a, 2), projective(a, 3), simple(a, 2)):
            self.assertTrue(are_isomorphic(ar_translate(a, ar_inverse(a, m)), m), m.describe())
        loop = truncated_loop(3)
        m = radical_of_module(projective(loop, 1)).module
        self.assertTrue(are_isomorphic(ar_translate(loop, ar_inverse(loop, m)), m))

    def test_hom_is_additive(self):
        for a in (path_algebra_a3(), truncated_loop(3)):
            modules = standard_modules(a)
            for m in modules:
                for n in modules:
                    both = direct_sum([m, n])
                    for x in modules:
                        self.assertEqual(hom(both, x).dim, hom(m, x).dim + hom(n, x).dim)
                        self.assertEqual(hom(x, both).dim, hom(x, m).dim + hom(x, n).dim)

    def test_krull_schmidt_across_seeds(self):
        """Test two seeds find the same summands up to isomorphism"""
        a = path_algebra_a3()
        s2 = simple(a, 2)
        m = direct_sum([projective(a, 1), s2, injective(a, 2), s2, projective(a, 3)])
        first = decompose(m, seed=1)
        second = decompose(m, seed=7)
        self.assertEqual(
            [(s.dim_vector, k) for s, k in first], [(s.dim_vector, k) for s, k in second]
        )
        for (x, _), (y, _) in zip(first, second):
            self.assertTrue(are_isomorphic(x, y))
        self.assertEqual(sum(k for _, k in first), 5)

    def test_decompose_is_idempotent(self):
        a = path_algebra_a3()
        m = direct_sum([simple(a, 1), projective(a, 2), simple(a, 1)])
        found = decompose(m, seed=2)
        for summand, _ in found:
            (again,) = decompose(summand, seed=5)
            self.assertEqual(again[1], 1)
            self.assertTrue(are_isomorphic(again[0], summand))
        rebuilt = direct_sum([s for s, k in found for _ in range(k)])
        refound = decompose(rebuilt, seed=9)
        self.assertEqual(
            [(s.dim_vector, k) for s, k in refound], [(s.dim_vector, k) for s, k in found]
        )

    def test_duality_is_exact(self):
        """Test D turns 0 -> P2 -> P1 -> S1 -> 0 into an exact sequence"""
        a = path_algebra_a3()
        (f,) = hom(projective(a, 2), projective(a, 1)).basis
        self.assertTrue(kernel(f).module.is_zero())
        g = cokernel(f).map
        self.assertTrue(are_isomorphic(g.target, simple(a, 1)))

        df, dg = dual_morphism(a, f), dual_morphism(a, g)
        self.assertIs(df.source.algebra, a.opposite())
        self.assertTrue(df.compose(dg).is_zero())
        self.assertTrue(kernel(dg).module.is_zero())
        self.assertTrue(cokernel(df).module.is_zero())
        self.assertEqual(image(dg).module.total_dim, kernel(df).module.total_dim)

    def test_radical_square_zero_example(self):
        a = read_algebra(SAMPLES / "example.alg")
        s1, s2, s3 = (simple(a, i) for i in (1, 2, 3))
        p4 = projective(a, 4)
        self.assertEqual(hom(s3, p4).dim, 2)
        ((summand, count),) = decompose(radical_of_module(p4).module, seed=1)
        self.assertTrue(are_isomorphic(summand, s3))
        self.assertEqual(count, 2)
        self.assertTrue(are_isomorphic(projective(a, 2), injective(a, 1)))
        self.assertTrue(are_isomorphic(ar_translate(a, s2), s1))


class TestFieldOrderBound(unittest.TestCase):

    LARGEST = 2**31 - 1

    def test_too_large(self):
        with self.assertRaises(ValueError):
            check_field_order(4294967311)
        with self.assertRaises(PresentationError):
            AlgebraPresentation([1], [], [], 4294967311)
        self.assertEqual(check_field_order(self.LARGEST), self.LARGEST)
        self.assertLess(self.LARGEST, MAX_FIELD_ORDER)

    def test_products_near_the_bound(self):
        """Test sums of products of entries close to p stay exact"""
        p = self.LARGEST
        row = np.array([[p - 1] * 4], dtype=np.int64)
        self.assertEqual(matmul_mod(row, row.T, p)[0, 0], 4)
        self.assertEqual(matmul_mod(np.array([[p - 1]]), np.array([[p - 1]]), p)[0, 0], 1)

    def test_homs_near_the_bound(self):
        p = self.LARGEST
        a = AlgebraPresentation([1, 2], [("a", 1, 2)], [], p)
        m = Representation(a, {1: 1, 2: 1}, {"a": [[1]]})
        n = Representation(a, {1: 1, 2: 1}, {"a": [[p - 1]]})
        space = hom(m, n)
        self.assertEqual(space.dim, 1)
        for f in space.basis:
            self.assertTrue(f.is_homomorphism())
            self.assertTrue(f.is_isomorphism())


class TestAnnihilator(unittest.TestCase):

    def test_annihilator_of_simple(self):
        a = path_algebra_a2()
        ideal = annihilator(a, [simple(a, 1)])
        self.assertEqual(ideal.dim, 2)
        self.assertTrue(ideal.contains_path(QPath(1, 2, ("a",))))
        self.assertFalse(ideal.contains_path(QPath(1, 1)))
        self.assertTrue(ideal.annihilates(simple(a, 1)))
        self.assertTrue(ideal.is_two_sided())

    def test_faithful(self):
        a = path_algebra_a2()
        self.assertTrue(is_faithful(a, [projective(a, 1), projective(a, 2)]))
        self.assertFalse(is_faithful(a, [simple(a, 1), simple(a, 2)]))

    def test_loop(self):
        a = truncated_loop(2)
        ideal = annihilator(a, [simple(a, 1)])
        self.assertEqual(ideal.dim, 1)
        self.assertTrue(ideal.contains_path(QPath(1, 1, ("x",))))


class TestAlgebraText(unittest.TestCase):

    def test_parse_relation(self):
        self.assertEqual(
            parse_relation("2*a.b - c.d = 0"), [(2, ("a", "b")), (-1, ("c", "d"))]
        )
        self.assertEqual(
            parse_relation("1*a.b + -1*c.d = 0"), [(1, ("a", "b")), (-1, ("c", "d"))]
        )
        with self.assertRaises(ValueError):
            parse_relation("a.b = 1")

    def test_loads_algebra(self):
        text = "field 5\nvertex 1 x\nvertex 2\narrow a 1 2\n"
        a = loads_algebra(text)
        self.assertEqual(a.p, 5)
        self.assertEqual(a.label(1), "x")
        self.assertEqual(loads_algebra(text, p=7).p, 7)
        self.assertEqual(loads_algebra("vertex 1\n", default_p=13).p, 13)

    def test_dump_and_load(self):
        a = loads_algebra(dumps_algebra(truncated_loop(3)))
        self.assertEqual(a.algebra.dimension, 3)
        self.assertEqual(len(a.relations), 1)

    def test_errors(self):
        with self.assertRaises(ParseError) as ctx:
            loads_algebra("vertex 1\nedge a 1 1\n", "bad.alg")
        self.assertEqual(ctx.exception.line, 2)
        with self.assertRaises(ParseError):
            loads_algebra("vertex 1\narrow a 1\n")
        with self.assertRaises(ParseError):
            loads_algebra("vertex 1\narrow a 1 1\nrelation a.a = 2\n")
        with self.assertRaises(PresentationError) as ctx:
            loads_algebra("vertex 1\narrow a 1 1\n", "loop.alg", nilpotence_bound=3)
        self.assertIn("loop.alg", str(ctx.exception))

    def test_samples(self):
        a = read_algebra(SAMPLES / "example.alg", p=101)
        self.assertEqual(a.vertices, (1, 2, 3, 4, 5))
        self.assertEqual(a.nilpotence_index, 2)
        self.assertEqual(a.p, 101)
        self.assertEqual(read_algebra(SAMPLES / "loop3.alg").algebra.dimension, 3)

    def test_module_text(self):
        a = path_algebra_a2()
        m = loads_module("name M\ndim 1 1\ndim 2 1\nmatrix a 1 1 1\n", a)
        self.assertEqual(m.name, "M")
        self.assertTrue(are_isomorphic(m, projective(a, 1)))
        self.assertEqual(loads_module(dumps_module(m), a), m)
        with self.assertRaises(ParseError):
            loads_module("dim 1 1\ndim 2 1\nmatrix a 1 1 1 2\n", a)
        with self.assertRaises(ParseError):
            loads_module("dim 1 1\nmatrix x 1 1 1\n", truncated_loop(2))


if __name__ == "__main__":
    unittest.main()
