"""
Indecomposability, Krull-Schmidt decomposition and isomorphism tests.

A module is indecomposable iff End(M) is local. With q = dim End/rad End,
q = 1 settles it at once; otherwise a seeded random endomorphism x is drawn
and its minimal polynomial factored over GF(p). Two distinct irreducible
factors split M by Fitting's lemma; a single factor of degree q proves that
End/rad End is a field.
"""

from __future__ import annotations

import itertools
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy import Poly, symbols

from ar_window.config.settings import settings
from ar_window.errors import RepresentationError
from ar_window.modcat.homs import HomSpace, Morphism, end, endomorphism_radical, hom
from ar_window.modcat.linalg import solve_mod
from ar_window.modcat.representation import Representation
from ar_window.modcat.submodules import image, kernel
from ar_window.utils.logger import logger

_T = symbols("t")

Factor = Tuple[List[int], int]  # coefficients low -> high, multiplicity


def _setting(value: Optional[int], key: str, default: int) -> int:
    return int(settings.get(key, default)) if value is None else int(value)


def _rng(seed: Optional[int]) -> np.random.Generator:
    return np.random.default_rng(_setting(seed, "run.seed", 0))


def random_element(space: HomSpace, rng: np.random.Generator) -> Morphism:
    return space.element(rng.integers(0, space.source.p, size=space.dim))


def evaluate(coeffs: Sequence[int], x: Morphism) -> Morphism:
    """Σ c_i x^i for an endomorphism x"""
    result = Morphism.zero(x.source, x.source)
    power = Morphism.identity(x.source)
    for c in coeffs:
        if c % x.p:
            result = result + power.scale(c)
        power = x.compose(power)
    return result


def minimal_polynomial(x: Morphism) -> List[int]:
    """Monic minimal polynomial of an endomorphism, coefficients low -> high"""
    if x.source is not x.target and x.source != x.target:
        raise RepresentationError("Minimal polynomial needs an endomorphism")
    p = x.p
    powers = [Morphism.identity(x.source).flat()]
    current = x
    while True:
        columns = np.stack(powers, axis=1)
        target = current.flat()
        try:
            c = solve_mod(columns, target, p)[:, 0]
        except ValueError:
            powers.append(target)
            current = x.compose(current)
            continue
        return [int(-v) % p for v in c] + [1]


def factor_mod_p(coeffs: Sequence[int], p: int) -> List[Factor]:
    """Monic irreducible factors over GF(p) with multiplicities"""
    poly = Poly(list(reversed(list(coeffs))), _T, modulus=p)
    _, factors = poly.factor_list()
    out = []
    for f, e in factors:
        monic = f.monic()
        out.append(([int(c) % p for c in reversed(monic.all_coeffs())], int(e)))
    return sorted(out, key=lambda fe: (len(fe[0]), fe[0]))


def _power_coeffs(coeffs: Sequence[int], e: int, p: int) -> List[int]:
    poly = Poly(list(reversed(list(coeffs))), _T, modulus=p) ** e
    return [int(c) % p for c in reversed(poly.all_coeffs())]


def splitting_endomorphism(
    m: Representation, seed: Optional[int] = None, attempts: Optional[int] = None
) -> Optional[Morphism]:
    """
    None when End(m) is local; otherwise an endomorphism φ with
    m = ker φ ⊕ im φ and both summands nonzero.
    """
    if m.is_zero():
        raise RepresentationError("Zero module has no indecomposability status")
    attempts = _setting(attempts, "modcat.split_attempts", 40)
    space = end(m)
    q = space.dim - endomorphism_radical(m, space).shape[1]
    if q == 1:
        return None
    rng = _rng(seed)
    for attempt in range(attempts):
        x = random_element(space, rng)
        factors = factor_mod_p(minimal_polynomial(x), m.p)
        if len(factors) >= 2:
            coeffs, e = factors[0]
            logger.debug(f"Split {m.describe()} on attempt {attempt + 1}")
            return evaluate(_power_coeffs(coeffs, e, m.p), x)
        if len(factors[0][0]) - 1 == q:
            return None
    raise RepresentationError(
        f"Locality of End({m.describe()}) undecided after {attempts} attempts"
    )


def is_indecomposable(
    m: Representation, seed: Optional[int] = None, attempts: Optional[int] = None
) -> bool:
    return splitting_endomorphism(m, seed, attempts) is None


def indecomposable_summands(
    m: Representation, seed: Optional[int] = None, attempts: Optional[int] = None
) -> List[Representation]:
    rng_seed = _setting(seed, "run.seed", 0)
    pending = [m]
    found: List[Representation] = []
    while pending:
        current = pending.pop(0)
        phi = splitting_endomorphism(current, rng_seed, attempts)
        if phi is None:
            found.append(current)
            continue
        pending.extend([kernel(phi).module, image(phi).module])
    return found


def are_isomorphic(
    m: Representation,
    n: Representation,
    seed: Optional[int] = None,
    attempts: Optional[int] = None,
    exhaustive_threshold: Optional[int] = None,
    exhaustive_budget: Optional[int] = None,
) -> bool:
    """
    Randomized search for an invertible map m -> n. When the Hom space is small
    the grid {0..D}^d (D = dim m) is searched completely, which is exact: the
    determinant has degree at most D in every coordinate.
    """
    if m.algebra is not n.algebra:
        raise RepresentationError("Modules live over different algebras")
    if m.dim_vector != n.dim_vector:
        return False
    if m.is_zero():
        return True
    space = hom(m, n)
    if space.dim == 0:
        return False

    rng = _rng(seed)
    for _ in range(_setting(attempts, "modcat.iso_attempts", 8)):
        if random_element(space, rng).is_isomorphism():
            return True

    threshold = _setting(exhaustive_threshold, "modcat.iso_exhaustive_threshold", 3)
    budget = _setting(exhaustive_budget, "modcat.iso_exhaustive_budget", 20000)
    grid = m.total_dim + 1
    if space.dim <= threshold and grid**space.dim <= budget:
        for coeffs in itertools.product(range(grid), repeat=space.dim):
            if any(coeffs) and space.element(coeffs).is_isomorphism():
                return True
        return False

    logger.warning(
        f"Isomorphism check {m.describe()} ~ {n.describe()} inconclusive; "
        "treating as non-isomorphic"
    )
    return False


def decompose(
    m: Representation, seed: Optional[int] = None, attempts: Optional[int] = None
) -> List[Tuple[Representation, int]]:
    """Pairwise non-isomorphic indecomposable summands with multiplicities"""
    groups: List[List[Representation]] = []
    for summand in indecomposable_summands(m, seed, attempts):
        for group in groups:
            if are_isomorphic(group[0], summand, seed):
                group.append(summand)
                break
        else:
            groups.append([summand])
    result = [(group[0], len(group)) for group in groups]
    return sorted(result, key=lambda rm: (rm[0].dim_vector, -rm[1]))
