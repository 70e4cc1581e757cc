import itertools
import json
import unittest

import numpy as np
from quiver_fixtures import ground_field, path_algebra_a2, path_algebra_a3, truncated_loop

from ar_window.analysis.paths import sectional_paths
from ar_window.analysis.theorem import Verdict
from ar_window.errors import NotRadicalError, QuiverError, RepresentationError
from ar_window.knitting.knit import knit
from ar_window.knitting.table import KnitLimits
from ar_window.modcat.homs import Morphism, hom
from ar_window.modcat.linalg import column_basis
from ar_window.radical.checks import harada_sai_check, is_generalized_standard
from ar_window.radical.cycles import (
    BEYOND_MAX_POWER,
    UNBOUNDED,
    ShortCycleCatalog,
    ShortCyclePair,
    directing_modules,
    short_cycle_bound,
    short_cycles,
)
from ar_window.radical.depth import depth, path_composite
from ar_window.radical.export import (
    compare_windows,
    depth_matrix_csv,
    power_dims_csv,
    radical_report,
)
from ar_window.radical.filtration import (
    BEYOND_CAP,
    MODE_EXACT,
    MODE_WINDOW,
    STABLE_NONZERO,
    radical_filtration,
)
from ar_window.radical.slices import slice_report


def knitted_filtration(a, limits=None, workers=1):
    table, q = knit(a, limits=limits, seed=1)
    return radical_filtration(table, max_power=16, workers=workers), q


def reduce_maps(maps, source, target):
    """A basis (as morphisms) of the span of ``maps``"""
    if not maps:
        return []
    stacked = np.stack([m.flat() for m in maps], axis=1)
    basis = column_basis(stacked, source.p)
    return [Morphism.from_flat(source, target, basis[:, k]) for k in range(basis.shape[1])]


def non_invertible_endomorphisms(m):
    """rad End(m) by enumerating End(m) and keeping the non-isomorphisms"""
    space = hom(m, m)
    maps = []
    for coefficients in itertools.product(range(m.p), repeat=space.dim):
        f = space.element(coefficients)
        if not f.is_isomorphism():
            maps.append(f)
    return reduce_maps(maps, m, m)


def explicit_radical_powers(table, max_n=16):
    """
    dims[(i, j)][n - 1] = dim rad^n(X_i, X_j), built by composing explicit
    radical bases along every chain of table entries until all powers vanish
    """
    modules = [entry.module for entry in table]
    size = len(modules)
    rad = {}
    for i, j in itertools.product(range(size), repeat=2):
        if i == j:
            rad[(i, j)] = non_invertible_endomorphisms(modules[i])
        else:
            rad[(i, j)] = list(hom(modules[i], modules[j]).basis)
    current = dict(rad)
    dims = {pair: [len(basis)] for pair, basis in rad.items()}
    for _ in range(max_n):
        if not any(current.values()):
            break
        following = {}
        for i, j in itertools.product(range(size), repeat=2):
            composites = [
                g.compose(f)
                for k in range(size)
                for f in current[(i, k)]
                for g in rad[(k, j)]
            ]
            following[(i, j)] = reduce_maps(composites, modules[i], modules[j])
            dims[(i, j)].append(len(following[(i, j)]))
        current = following
    return dims


def explicit_max_power(dims):
    nonzero = [n for n, d in enumerate(dims, start=1) if d]
    return max(nonzero) if nonzero else None


class TestFiltration(unittest.TestCase):

    def test_ground_field(self):
        f, _ = knitted_filtration(ground_field())
        self.assertEqual(f.mode, MODE_EXACT)
        self.assertEqual(f.nilpotence_index, 1)
        self.assertEqual(f.max_nonzero_power(0, 0), None)

    def test_a2(self):
        """Test rad² vanishes on A2 and every radical map has depth 1"""
        f, _ = knitted_filtration(path_algebra_a2())
        self.assertTrue(f.exact)
        self.assertEqual(f.nilpotence_index, 2)
        self.assertEqual(f.stable_index, 2)
        self.assertFalse(f.max_power_exceeded)
        self.assertEqual(f.stable_nonzero, [])
        for i in range(f.size):
            for j in range(f.size):
                self.assertIn(f.max_nonzero_power(i, j), (None, 1))

    def test_square_zero_loop(self):
        """Test multiplication by a on P has depth 2 and rad³ = 0"""
        a = truncated_loop(2)
        f, _ = knitted_filtration(a)
        table = f.table
        p = table.index_of_name("P1")
        self.assertEqual(f.nilpotence_index, 3)
        self.assertEqual(f.dims(p, p), [2, 1, 1, 0])

        module = table[p].module
        mult = Morphism(module, module, {1: module.matrix("x")}, check=True)
        report = depth(f, p, p, mult)
        self.assertEqual(report.depth, 2)
        self.assertFalse(report.lower_bound)

    def test_uniserial_loop_nilpotence(self):
        """Test the radical of mod k[x]/x^n vanishes exactly at power 2n - 1"""
        for n in range(2, 5):
            f, _ = knitted_filtration(truncated_loop(n))
            p = f.table.index_of_name("P1")
            self.assertEqual(f.nilpotence_index, 2 * n - 1)
            self.assertEqual(f.max_nonzero_power(p, p), 2 * n - 2)

    def test_parallel_targets(self):
        serial, _ = knitted_filtration(path_algebra_a3(), workers=1)
        parallel, _ = knitted_filtration(path_algebra_a3(), workers=3)
        for pair in serial.pairs():
            self.assertEqual(serial.dims(*pair), parallel.dims(*pair))

    def test_power_cap(self):
        table, _ = knit(truncated_loop(3), seed=1)
        f = radical_filtration(table, max_power=2, workers=1)
        self.assertTrue(f.max_power_exceeded)
        self.assertIsNone(f.nilpotence_index)
        self.assertEqual(f.summary()["max_power_exceeded"], True)

    def test_power_cap_is_not_stable_nonzero(self):
        """Test a pair cut off by max_power is reported apart from rad^∞ ≠ 0"""
        table, _ = knit(truncated_loop(3), seed=1)
        f = radical_filtration(table, max_power=2, workers=1)
        p = table.index_of_name("P1")
        self.assertEqual(f.max_nonzero_power(p, p), BEYOND_CAP)
        self.assertEqual(short_cycle_bound(short_cycles(f)), BEYOND_MAX_POWER)

        rows = [line.split(",") for line in depth_matrix_csv(f).splitlines()[1:]]
        self.assertEqual(rows[p][1 + p], ">2")
        self.assertNotIn("inf", depth_matrix_csv(f))

    def test_exact_tables_have_no_markers(self):
        for n in range(2, 5):
            f, _ = knitted_filtration(truncated_loop(n))
            for i, j in f.pairs():
                self.assertNotIn(f.max_nonzero_power(i, j), (STABLE_NONZERO, BEYOND_CAP))

    def test_window_mode(self):
        f, _ = knitted_filtration(path_algebra_a3(), limits=KnitLimits(max_modules=4))
        self.assertEqual(f.mode, MODE_WINDOW)
        self.assertEqual(is_generalized_standard(f).verdict, Verdict.UNKNOWN)


class TestDepth(unittest.TestCase):

    def test_sectional_composites(self):
        """Test composites along sectional paths have depth equal to their length"""
        for a in (path_algebra_a3(), truncated_loop(3)):
            f, q = knitted_filtration(a)
            checked = 0
            for x in q.vertices:
                for y in q.vertices:
                    for path in sectional_paths(q, x, y).paths:
                        if path.length < 1:
                            continue
                        composite = path_composite(f, path.vertices)
                        report = depth(f, x, y, composite)
                        self.assertEqual(report.depth, path.length, str(path))
                        checked += 1
            self.assertGreater(checked, 0)

    def test_a3_long_sectional_path(self):
        f, _ = knitted_filtration(path_algebra_a3())
        table = f.table
        path = [table.index_of_name(n) for n in ("P3", "P2", "P1")]
        composite = path_composite(f, path)
        self.assertEqual(depth(f, path[0], path[-1], composite).depth, 2)

    def test_identity_is_not_radical(self):
        f, _ = knitted_filtration(path_algebra_a2())
        with self.assertRaises(NotRadicalError):
            depth(f, 0, 0, Morphism.identity(f.table[0].module))

    def test_zero_map_has_infinite_depth(self):
        f, _ = knitted_filtration(path_algebra_a2())
        zero = Morphism.zero(f.table[0].module, f.table[2].module)
        report = depth(f, 0, 2, zero)
        self.assertTrue(report.infinite)
        self.assertIn("inf", str(report))

    def test_shape_mismatch(self):
        f, _ = knitted_filtration(path_algebra_a2())
        with self.assertRaises(RepresentationError):
            depth(f, 0, 2, np.zeros(5, dtype=np.int64))

    def test_composite_needs_an_arrow(self):
        f, _ = knitted_filtration(path_algebra_a2())
        with self.assertRaises(RepresentationError):
            path_composite(f, [0])
        with self.assertRaises(RepresentationError):
            path_composite(f, [2, 0])


class TestShortCycles(unittest.TestCase):

    def test_square_zero_loop_bound(self):
        f, _ = knitted_filtration(truncated_loop(2))
        catalog = short_cycles(f)
        self.assertEqual(short_cycle_bound(catalog), 2)
        self.assertEqual(len(catalog.pairs), 2)
        self.assertEqual(directing_modules(f), frozenset())

    def test_directed_algebras(self):
        f, _ = knitted_filtration(path_algebra_a3())
        catalog = short_cycles(f)
        self.assertEqual(catalog.pairs, [])
        self.assertIsNone(short_cycle_bound(catalog))
        self.assertEqual(len(directing_modules(f)), 6)

    def test_bound_grows_with_loop_length(self):
        """Test the bound on k[x]/x^n is 2n - 2, strictly increasing in n"""
        bounds = []
        for n in range(2, 5):
            f, _ = knitted_filtration(truncated_loop(n))
            bounds.append(short_cycle_bound(short_cycles(f)))
        self.assertEqual(bounds, [2, 4, 6])

    def test_depth_markers(self):
        stable = ShortCyclePair(0, 1, STABLE_NONZERO, 3)
        capped = ShortCyclePair(0, 2, 2, BEYOND_CAP)
        finite = ShortCyclePair(1, 1, 4, 4)
        self.assertTrue(stable.unbounded)
        self.assertFalse(stable.capped)
        self.assertTrue(capped.capped)
        self.assertFalse(capped.unbounded)
        self.assertEqual(finite.depth, 4)
        labels = [p.depth_label() for p in (stable, capped, finite)]
        self.assertEqual(labels, ["inf", BEYOND_MAX_POWER, 4])

        self.assertEqual(short_cycle_bound(ShortCycleCatalog([finite], MODE_WINDOW)), 4)
        self.assertEqual(
            short_cycle_bound(ShortCycleCatalog([finite, capped], MODE_WINDOW)), BEYOND_MAX_POWER
        )
        self.assertEqual(
            short_cycle_bound(ShortCycleCatalog([capped, stable], MODE_WINDOW)), UNBOUNDED
        )
        self.assertIsNone(short_cycle_bound(ShortCycleCatalog([], MODE_WINDOW)))

    def test_depth_below_harada_sai_bound(self):
        """Test every short-cycle depth stays below 2^b for the largest module dimension b"""
        algebras = [ground_field(), path_algebra_a2(), path_algebra_a3()]
        algebras += [truncated_loop(n) for n in range(2, 5)]
        for a in algebras:
            f, _ = knitted_filtration(a)
            b = max(entry.module.total_dim for entry in f.table)
            for pair in short_cycles(f).pairs:
                self.assertGreaterEqual(pair.depth, 1)
                self.assertLess(pair.depth, 2**b)
            self.assertLessEqual(f.nilpotence_index, 2**b)


class TestExplicitRadicalPowers(unittest.TestCase):
    """Filtration dimensions against products of explicit radical bases"""

    ALGEBRAS = {
        "field": ground_field,
        "A2": path_algebra_a2,
        "A3": path_algebra_a3,
        "loop2": lambda: truncated_loop(2),
        "loop3": lambda: truncated_loop(3),
    }

    def test_power_dimensions(self):
        for name, build in self.ALGEBRAS.items():
            f, _ = knitted_filtration(build())
            explicit = explicit_radical_powers(f.table)
            for (i, j), dims in explicit.items():
                computed = [f.rad_dim(i, j, n) for n in range(1, len(dims) + 1)]
                self.assertEqual(computed, dims, f"{name} {i}->{j}")

    def test_nilpotence_index(self):
        for name, build in self.ALGEBRAS.items():
            f, _ = knitted_filtration(build())
            explicit = explicit_radical_powers(f.table)
            index = 1 + max((explicit_max_power(d) or 0) for d in explicit.values())
            self.assertEqual(f.nilpotence_index, index, name)

    def test_short_cycle_bound(self):
        for name, build in self.ALGEBRAS.items():
            f, _ = knitted_filtration(build())
            explicit = explicit_radical_powers(f.table)
            depths = []
            for i in range(f.size):
                for j in range(i, f.size):
                    forward = explicit_max_power(explicit[(i, j)])
                    backward = explicit_max_power(explicit[(j, i)])
                    self.assertEqual(f.max_nonzero_power(i, j), forward, f"{name} {i}->{j}")
                    if forward is not None and backward is not None:
                        depths.append(max(forward, backward))
            expected = max(depths) if depths else None
            self.assertEqual(short_cycle_bound(short_cycles(f)), expected, name)


class TestChecks(unittest.TestCase):

    def test_generalized_standard(self):
        for a in (path_algebra_a3(), truncated_loop(2)):
            f, _ = knitted_filtration(a)
            report = is_generalized_standard(f)
            self.assertEqual(report.verdict, Verdict.TRUE)
            self.assertEqual(report.obstructions, [])

    def test_harada_sai(self):
        f, _ = knitted_filtration(truncated_loop(2))
        report = harada_sai_check(f, 2)
        self.assertEqual(report.verdict, Verdict.TRUE)
        self.assertEqual(report.chain_length, 3)
        self.assertEqual(report.vanished_at, 3)

        small = harada_sai_check(f, 1)
        self.assertEqual(small.modules, [f.table.index_of_name("S1")])
        self.assertEqual(small.verdict, Verdict.TRUE)

    def test_harada_sai_on_a3(self):
        f, _ = knitted_filtration(path_algebra_a3())
        report = harada_sai_check(f, 3)
        self.assertEqual(report.verdict, Verdict.TRUE)
        self.assertEqual(len(report.modules), 6)

    def test_harada_sai_rejects_bound(self):
        f, _ = knitted_filtration(path_algebra_a2())
        with self.assertRaises(ValueError):
            harada_sai_check(f, 0)


class TestSliceReport(unittest.TestCase):

    def test_projective_slice_of_a3(self):
        """Test the projectives form a faithful sincere cut with no predecessors"""
        f, q = knitted_filtration(path_algebra_a3())
        delta = [f.table.index_of_name(n) for n in ("P1", "P2", "P3")]
        report = slice_report(f, q, delta)
        self.assertTrue(report.cut)
        self.assertTrue(report.sincere)
        self.assertEqual(report.convex, Verdict.TRUE)
        self.assertTrue(report.hom_to_translate_vanishes)
        self.assertTrue(report.faithful)
        self.assertEqual(report.predecessors, frozenset())
        self.assertTrue(report.predecessors_annihilated)
        self.assertEqual(report.as_dict(f.table.labels())["annihilator_dim"], 0)

    def test_translated_slice_of_a3(self):
        """Test τ⁻ of the projective slice has predecessors and ann(Δ) kills them"""
        f, q = knitted_filtration(path_algebra_a3())
        table = f.table
        p3, p2, p1 = (table.index_of_name(n) for n in ("P3", "P2", "P1"))
        s2, i2 = table.index_of_name("S2"), table.index_of_name("I2")
        self.assertEqual((q.tau_inverse(p3), q.tau_inverse(p2)), (s2, i2))
        self.assertIsNone(q.tau_inverse(p1))

        report = slice_report(f, q, [s2, i2, p1])
        self.assertTrue(report.cut)
        self.assertTrue(report.sincere)
        self.assertEqual(report.convex, Verdict.TRUE)
        expected = {(v, t): 0 for v in (s2, i2, p1) for t in (p3, p2)}
        self.assertEqual(report.hom_to_translate, expected)
        self.assertTrue(report.faithful)
        self.assertEqual(report.predecessors, frozenset({p3, p2}))
        self.assertTrue(report.predecessors_annihilated)
        self.assertEqual(report.unannihilated_predecessors, [])

    def test_simple_slice(self):
        f, q = knitted_filtration(path_algebra_a3())
        s1 = f.table.index_of_name("S1")
        report = slice_report(f, q, [s1])
        self.assertFalse(report.faithful)
        self.assertFalse(report.sincere)
        self.assertTrue(report.predecessors)
        self.assertFalse(report.predecessors_annihilated)

    def test_bad_subquivers(self):
        f, q = knitted_filtration(path_algebra_a2())
        with self.assertRaises(QuiverError):
            slice_report(f, q, [])
        with self.assertRaises(QuiverError):
            slice_report(f, q, [42])


class TestRadicalExport(unittest.TestCase):

    def test_report(self):
        f, _ = knitted_filtration(path_algebra_a3())
        report = radical_report(f)
        self.assertEqual(report.assertion_failures, [])
        self.assertIsNone(report.bound)
        data = json.loads(report.to_json())
        self.assertEqual(data["mode"], MODE_EXACT)
        self.assertEqual(data["filtration"]["nilpotence_index"], 3)
        self.assertEqual(len(data["directing"]), 6)

    def test_loop_report(self):
        f, _ = knitted_filtration(truncated_loop(2))
        data = radical_report(f).as_dict()
        self.assertEqual(data["short_cycle_bound"], 2)
        self.assertEqual(data["harada_sai"]["verdict"], "true")

    def test_depth_matrix(self):
        f, _ = knitted_filtration(path_algebra_a2())
        lines = depth_matrix_csv(f).splitlines()
        self.assertEqual(lines[0], ",P1=I2,P2=S2,I1=S1")
        self.assertEqual(lines[1], "P1=I2,,,1")
        self.assertEqual(lines[2], "P2=S2,1,,")
        self.assertEqual(lines[3], "I1=S1,,,")

    def test_power_dims(self):
        f, _ = knitted_filtration(path_algebra_a2())
        lines = power_dims_csv(f).splitlines()
        self.assertEqual(lines[0], "source,target,rad0,rad1,rad2")
        self.assertEqual(lines[1:], ["P1=I2,I1=S1,1,1,0", "P2=S2,P1=I2,1,1,0"])

    def test_compare_windows(self):
        """Test depths and short cycles only grow with the window"""
        a = path_algebra_a3()
        small, _ = knitted_filtration(a, limits=KnitLimits(max_modules=4))
        large, _ = knitted_filtration(a)
        self.assertEqual(compare_windows(small, large), [])
        self.assertTrue(compare_windows(large, small))

    def test_compare_other_algebra(self):
        first, _ = knitted_filtration(path_algebra_a2())
        second, _ = knitted_filtration(path_algebra_a2())
        with self.assertRaises(ValueError):
            compare_windows(first, second)


if __name__ == "__main__":
    unittest.main()
