"""Idealization R(+)M and brute-force verification of its structure facts.

Pair (r, x) is encoded as r*|M| + x; zero is (0,0) and unity (1,0). The
four verifiers (units, ideal shape, prime criterion, ideal products) are
exhaustive checks; on correct inputs they must return True, so any False
is an implementation bug and carries the offending witness.
"""

from __future__ import annotations

from .errors import CapacityExceeded, ScalarMismatch
from .modules import FiniteModule, all_submodules, submodule_generated
from .rings import (
    DEFAULT_SIZE_CAP,
    FiniteRing,
    Ideal,
    all_ideals,
    ideal_product,
    is_prime_ideal,
    is_unit,
    units,
)


def idealize(R: FiniteRing, M: FiniteModule, *, cap: int = DEFAULT_SIZE_CAP) -> FiniteRing:
    if M.ring is not R:
        raise ScalarMismatch(f"module {M.label} is not over {R.label}")
    size = R.size * M.size
    if size > cap:
        raise CapacityExceeded(f"idealization size {size} exceeds cap {cap}")
    nm = M.size

    def add(a, b):
        ar, ax = divmod(a, nm)
        br, bx = divmod(b, nm)
        return R.add(ar, br) * nm + M.add(ax, bx)

    def mul(a, b):
        ar, ax = divmod(a, nm)
        br, bx = divmod(b, nm)
        return R.mul(ar, br) * nm + M.add(M.act(ar, bx), M.act(br, ax))

    def neg(a):
        ar, ax = divmod(a, nm)
        return R.neg(ar) * nm + M.neg(ax)

    def render(a):
        ar, ax = divmod(a, nm)
        return f"({R.render(ar)},{M.render(ax)})"

    return FiniteRing(
        size, add, mul, neg,
        one=R.one * nm,
        label=f"{R.label}(+){M.label}",
        render=render,
    )


def pair_of(T: FiniteRing, M: FiniteModule, a: int) -> tuple[int, int]:
    return divmod(a, M.size)


def verify_unit_criterion(R: FiniteRing, M: FiniteModule) -> tuple[bool, dict]:
    """(r,x) is a unit of R(+)M iff r is a unit of R."""
    T = idealize(R, M)
    ru = units(R)
    for a in T.elements():
        r, _ = divmod(a, M.size)
        if is_unit(T, a) != (r in ru):
            return False, {"pair": a, "rendered": T.render(a)}
    return True, {}


def _shape_members(R: FiniteRing, M: FiniteModule, I: frozenset, N: frozenset) -> frozenset:
    return frozenset(r * M.size + x for r in I for x in N)


def _acts_into(R: FiniteRing, M: FiniteModule, I: frozenset, N: frozenset) -> bool:
    return all(M.act(r, x) in N for r in I for x in M.elements())


def _homogeneous_ideals(
    R: FiniteRing, M: FiniteModule
) -> list[tuple[frozenset, frozenset]]:
    """All (I, N) with IM <= N; these are exactly the product-form ideals.

    Non-product ideals of R(+)M also exist (e.g. <(2,1)> in Z4(+)Z4),
    so the shape statement is checked on product sets, not asserted for
    the whole lattice.
    """
    out = []
    for I in all_ideals(R):
        for N in all_submodules(M):
            if _acts_into(R, M, I.members, N):
                out.append((I.members, N))
    return out


def verify_ideal_shape(R: FiniteRing, M: FiniteModule) -> tuple[bool, dict]:
    """A product set I x N is an ideal of R(+)M exactly when IM <= N."""
    from .rings import is_ideal

    T = idealize(R, M)
    homogeneous = set()
    for I in all_ideals(R):
        for N in all_submodules(M):
            shaped = _shape_members(R, M, I.members, N)
            expected = _acts_into(R, M, I.members, N)
            if is_ideal(T, shaped) != expected:
                return False, {
                    "I": sorted(I.members), "N": sorted(N),
                    "IM_in_N": expected,
                }
            if expected:
                homogeneous.add(shaped)
    lattice = {J.members for J in all_ideals(T)}
    if homogeneous - lattice:
        bad = min(homogeneous - lattice, key=sorted)
        return False, {"reason": "product ideal missing from lattice",
                       "members": sorted(bad)}
    return True, {"homogeneous": len(homogeneous), "total_ideals": len(lattice)}


def _decompose(T: FiniteRing, M: FiniteModule, J: frozenset) -> tuple[frozenset, frozenset]:
    I = frozenset(divmod(a, M.size)[0] for a in J)
    N = frozenset(divmod(a, M.size)[1] for a in J)
    return I, N


def verify_prime_criterion(R: FiniteRing, M: FiniteModule) -> tuple[bool, dict]:
    """Primes of R(+)M are exactly I x M with I prime in R.

    (Every prime contains the square-zero ideal 0 x M, which pins the
    module component to all of M.)
    """
    T = idealize(R, M)
    for J in all_ideals(T):
        I, _ = _decompose(T, M, J.members)
        lhs = is_prime_ideal(T, J)
        rhs = (
            J.members == _shape_members(R, M, I, frozenset(M.elements()))
            and is_prime_ideal(R, Ideal(R, I))
        )
        if lhs != rhs:
            return False, {"ideal": J.sorted(), "prime_in_T": lhs,
                           "IxM_with_I_prime": rhs}
    return True, {}


def verify_ideal_product(R: FiniteRing, M: FiniteModule) -> tuple[bool, dict]:
    """(I1 x N1)(I2 x N2) = (I1 I2) x (I1 N2 + I2 N1) on product-form ideals."""
    T = idealize(R, M)
    homogeneous = _homogeneous_ideals(R, M)
    for I1, N1 in homogeneous:
        J1 = Ideal(T, _shape_members(R, M, I1, N1))
        for I2, N2 in homogeneous:
            J2 = Ideal(T, _shape_members(R, M, I2, N2))
            lhs = ideal_product(T, J1, J2).members
            I12 = ideal_product(R, Ideal(R, I1), Ideal(R, I2)).members
            acted = {M.act(r, x) for r in I1 for x in N2}
            acted |= {M.act(r, x) for r in I2 for x in N1}
            N12 = submodule_generated(M, acted)
            rhs = _shape_members(R, M, I12, N12)
            if lhs != rhs:
                return False, {"J1": J1.sorted(), "J2": J2.sorted(),
                               "lhs": sorted(lhs), "rhs": sorted(rhs)}
    return True, {}
