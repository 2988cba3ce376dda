"""Finite commutative rings with dense element indexing.

Elements are integers 0..size-1; index 0 is always the additive zero and
``ring.one`` marks the multiplicative unity (1 for the basic
constructions, fixed by the pair encoding for idealizations and
products). All carriers are immutable after construction; derived data
(units, ideal lattices, ...) is memoized on the ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import CapacityExceeded, InvalidConstruction, InvalidIdeal

DEFAULT_SIZE_CAP = 4096
IDEAL_COUNT_CAP = 100_000


class FiniteRing:
    def __init__(
        self,
        size: int,
        add: Callable[[int, int], int],
        mul: Callable[[int, int], int],
        neg: Callable[[int], int],
        *,
        one: int = 1,
        backend: str = "dense",
        label: str = "",
        render: Callable[[int], str] | None = None,
    ):
        self.size = size
        self.add = add
        self.mul = mul
        self.neg = neg
        self.zero = 0
        self.one = one if size > 1 else 0
        self.backend = backend
        self.label = label or f"ring{size}"
        self._render = render or str
        self._cache: dict = {}

    @property
    def is_dense(self) -> bool:
        return self.backend == "dense"

    def elements(self) -> range:
        return range(self.size)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def render(self, a: int) -> str:
        return self._render(a)

    def from_int(self, c: int) -> int:
        """Image of the integer c under the unique map Z -> R."""
        acc = self.zero
        for _ in range(c % self.char()):
            acc = self.add(acc, self.one)
        return acc

    def char(self) -> int:
        if "char" not in self._cache:
            k, acc = 1, self.one
            while acc != self.zero:
                acc = self.add(acc, self.one)
                k += 1
            self._cache["char"] = k
        return self._cache["char"]

    def __repr__(self):
        return f"FiniteRing({self.label}, size={self.size})"


@dataclass(frozen=True)
class Ideal:
    ring: FiniteRing
    members: frozenset

    def __contains__(self, a: int) -> bool:
        return a in self.members

    def __len__(self):
        return len(self.members)

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def __le__(self, other: "Ideal") -> bool:
        return self.members <= other.members

    def __lt__(self, other: "Ideal") -> bool:
        return self.members < other.members


# ---------------------------------------------------------------------------
# constructions


def make_zn(n: int) -> FiniteRing:
    if n < 2:
        raise InvalidConstruction(f"Z_n needs n >= 2, got {n}")
    return FiniteRing(
        n,
        lambda a, b: (a + b) % n,
        lambda a, b: (a * b) % n,
        lambda a: (-a) % n,
        label=f"Z{n}",
    )


def make_product(R: FiniteRing, S: FiniteRing, *, cap: int = DEFAULT_SIZE_CAP) -> FiniteRing:
    size = R.size * S.size
    if size > cap:
        raise CapacityExceeded(f"product size {size} exceeds cap {cap}")
    ns = S.size

    def add(a, b):
        ar, as_ = divmod(a, ns)
        br, bs = divmod(b, ns)
        return R.add(ar, br) * ns + S.add(as_, bs)

    def mul(a, b):
        ar, as_ = divmod(a, ns)
        br, bs = divmod(b, ns)
        return R.mul(ar, br) * ns + S.mul(as_, bs)

    def neg(a):
        ar, as_ = divmod(a, ns)
        return R.neg(ar) * ns + S.neg(as_)

    def render(a):
        ar, as_ = divmod(a, ns)
        return f"({R.render(ar)},{S.render(as_)})"

    return FiniteRing(
        size, add, mul, neg,
        one=R.one * ns + S.one,
        label=f"{R.label} x {S.label}",
        render=render,
    )


def make_polyquot(R: FiniteRing, monic_poly: Iterable[int], *, cap: int = DEFAULT_SIZE_CAP) -> FiniteRing:
    """R[t]/(f) for a monic f given by coefficients, constant term first."""
    coeffs = list(monic_poly)
    if len(coeffs) < 2:
        raise InvalidConstruction("modulus must have degree >= 1")
    if coeffs[-1] != R.one:
        raise InvalidConstruction("modulus must be monic")
    d = len(coeffs) - 1
    size = R.size ** d
    if size > cap:
        raise CapacityExceeded(f"polyquot size {size} exceeds cap {cap}")
    n = R.size

    def decode(a):
        v = []
        for _ in range(d):
            a, c = divmod(a, n)
            v.append(c)
        return v

    def encode(v):
        a = 0
        for c in reversed(v):
            a = a * n + c
        return a

    def add(a, b):
        va, vb = decode(a), decode(b)
        return encode([R.add(x, y) for x, y in zip(va, vb)])

    def neg(a):
        return encode([R.neg(x) for x in decode(a)])

    def mul(a, b):
        va, vb = decode(a), decode(b)
        conv = [R.zero] * (2 * d - 1)
        for i, x in enumerate(va):
            if x == R.zero:
                continue
            for j, y in enumerate(vb):
                conv[i + j] = R.add(conv[i + j], R.mul(x, y))
        # reduce mod the monic modulus: t^d = -(c_{d-1} t^{d-1} + ... + c_0)
        for k in range(2 * d - 2, d - 1, -1):
            c = conv[k]
            if c == R.zero:
                continue
            conv[k] = R.zero
            for j in range(d):
                conv[k - d + j] = R.sub(conv[k - d + j], R.mul(c, coeffs[j]))
        return encode(conv[:d])

    def render(a):
        v = decode(a)
        terms = []
        for i, c in enumerate(v):
            if c == R.zero:
                continue
            if i == 0:
                terms.append(R.render(c))
            else:
                tpow = "t" if i == 1 else f"t^{i}"
                terms.append(tpow if c == R.one else f"{R.render(c)}{tpow}")
        return "+".join(terms) if terms else "0"

    return FiniteRing(size, add, mul, neg, label=f"{R.label}[t]/(deg{d})", render=render)


def is_ideal(R: FiniteRing, members: frozenset) -> bool:
    if R.zero not in members:
        return False
    mem = members
    for a in mem:
        for b in mem:
            if R.add(a, b) not in mem:
                return False
        for r in R.elements():
            if R.mul(r, a) not in mem:
                return False
    return True


def quotient_ring(R: FiniteRing, I: Ideal | frozenset) -> FiniteRing:
    members = I.members if isinstance(I, Ideal) else frozenset(I)
    if not is_ideal(R, members):
        raise InvalidIdeal(f"{sorted(members)} is not an ideal of {R.label}")
    ideal = sorted(members)
    rep = [min(R.add(a, i) for i in ideal) for a in R.elements()]
    reps = sorted(set(rep))
    index = {r: k for k, r in enumerate(reps)}

    def add(a, b):
        return index[rep[R.add(reps[a], reps[b])]]

    def mul(a, b):
        return index[rep[R.mul(reps[a], reps[b])]]

    def neg(a):
        return index[rep[R.neg(reps[a])]]

    return FiniteRing(
        len(reps), add, mul, neg,
        one=index[rep[R.one]],
        label=f"{R.label}/I{len(ideal)}",
        render=lambda a: f"[{R.render(reps[a])}]",
    )


# ---------------------------------------------------------------------------
# units and ideal theory


def units(R: FiniteRing) -> frozenset:
    if "units" not in R._cache:
        us = set()
        for a in R.elements():
            for b in R.elements():
                if R.mul(a, b) == R.one:
                    us.add(a)
                    break
        R._cache["units"] = frozenset(us)
    return R._cache["units"]


def is_unit(R: FiniteRing, a: int) -> bool:
    return a in units(R)


def nonunits(R: FiniteRing) -> frozenset:
    return frozenset(R.elements()) - units(R)


def principal_ideal(R: FiniteRing, a: int) -> Ideal:
    # in a commutative unital ring, <a> = {ra : r in R}
    key = ("pid", a)
    if key not in R._cache:
        R._cache[key] = Ideal(R, frozenset(R.mul(r, a) for r in R.elements()))
    return R._cache[key]


def _close_under_addition(R: FiniteRing, seed: set) -> frozenset:
    members = set(seed)
    members.add(R.zero)
    frontier = list(members)
    while frontier:
        x = frontier.pop()
        for y in list(members):
            s = R.add(x, y)
            if s not in members:
                members.add(s)
                frontier.append(s)
    return frozenset(members)


def generated_ideal(R: FiniteRing, gens: Iterable[int]) -> Ideal:
    seed = set()
    for g in gens:
        seed |= principal_ideal(R, g).members
    return Ideal(R, _close_under_addition(R, seed))


def ideal_sum(R: FiniteRing, I: Ideal, J: Ideal) -> Ideal:
    return Ideal(R, frozenset(R.add(a, b) for a in I.members for b in J.members))


def ideal_product(R: FiniteRing, I: Ideal, J: Ideal) -> Ideal:
    prods = {R.mul(a, b) for a in I.members for b in J.members}
    return Ideal(R, _close_under_addition(R, prods))


def ideal_power(R: FiniteRing, I: Ideal, k: int) -> Ideal:
    acc = Ideal(R, frozenset(R.elements()))
    for _ in range(k):
        acc = ideal_product(R, acc, I)
    return acc


def all_ideals(R: FiniteRing, *, cap: int = IDEAL_COUNT_CAP) -> list[Ideal]:
    """The full ideal lattice, by closing principal ideals under sums."""
    if "all_ideals" not in R._cache:
        seen = {principal_ideal(R, a).members for a in R.elements()}
        worklist = list(seen)
        while worklist:
            cur = worklist.pop()
            for other in list(seen):
                s = frozenset(R.add(a, b) for a in cur for b in other)
                if s not in seen:
                    if len(seen) >= cap:
                        raise CapacityExceeded(
                            f"ideal count exceeded cap {cap} on {R.label} "
                            f"(partial count {len(seen)})"
                        )
                    seen.add(s)
                    worklist.append(s)
        R._cache["all_ideals"] = sorted(
            (Ideal(R, m) for m in seen), key=lambda I: (len(I.members), I.sorted())
        )
    return R._cache["all_ideals"]


def is_prime_ideal(R: FiniteRing, I: Ideal) -> bool:
    if len(I.members) == R.size:
        return False
    mem = I.members
    for a in R.elements():
        if a in mem:
            continue
        for b in R.elements():
            if b not in mem and R.mul(a, b) in mem:
                return False
    return True


def maximal_ideals(R: FiniteRing) -> list[Ideal]:
    if "maximal_ideals" not in R._cache:
        lattice = all_ideals(R)
        proper = [I for I in lattice if len(I.members) < R.size]
        maxi = [
            I for I in proper
            if not any(I.members < J.members for J in proper)
        ]
        primes = [I for I in lattice if is_prime_ideal(R, I)]
        minp = [
            I for I in primes
            if not any(J.members < I.members for J in primes)
        ]
        # dimension zero: both computations must agree on finite rings
        if {I.members for I in maxi} != {I.members for I in minp}:
            raise AssertionError(f"maximal/min-prime mismatch on {R.label}")
        R._cache["maximal_ideals"] = maxi
        R._cache["min_primes"] = minp
    return R._cache["maximal_ideals"]


def min_primes(R: FiniteRing) -> list[Ideal]:
    maximal_ideals(R)
    return R._cache["min_primes"]


def nilradical(R: FiniteRing) -> Ideal:
    if "nilradical" not in R._cache:
        nil = set()
        for a in R.elements():
            p = a
            for _ in range(R.size):
                if p == R.zero:
                    nil.add(a)
                    break
                p = R.mul(p, a)
        R._cache["nilradical"] = Ideal(R, frozenset(nil))
    return R._cache["nilradical"]


def is_reduced(R: FiniteRing) -> bool:
    return len(nilradical(R).members) == 1


def jacobson_radical(R: FiniteRing) -> Ideal:
    mem = frozenset(R.elements())
    for I in maximal_ideals(R):
        mem &= I.members
    return Ideal(R, mem)


def annihilator(R: FiniteRing, a: int) -> Ideal:
    return Ideal(R, frozenset(b for b in R.elements() if R.mul(b, a) == R.zero))


def is_local(R: FiniteRing) -> bool:
    via_lattice = len(maximal_ideals(R)) == 1
    # cross-check: local iff the nonunits are closed under addition
    nu = nonunits(R)
    closed = all(R.add(a, b) in nu for a in nu for b in nu)
    if via_lattice != closed:
        raise AssertionError(f"is_local cross-check failed on {R.label}")
    return via_lattice


def maximal_ideal(R: FiniteRing) -> Ideal:
    if not is_local(R):
        raise InvalidIdeal(f"{R.label} is not local")
    return maximal_ideals(R)[0]


def is_field(R: FiniteRing) -> bool:
    if R.size == 1:
        return False
    via_units = len(units(R)) == R.size - 1
    # finite rings: field iff domain
    domain = all(
        R.mul(a, b) != R.zero
        for a in range(1, R.size)
        for b in range(1, R.size)
    )
    if via_units != domain:
        raise AssertionError(f"is_field cross-check failed on {R.label}")
    return via_units


def is_spir(R: FiniteRing) -> bool:
    """Special principal ideal ring: local, all ideals principal, m nilpotent."""
    if not is_local(R):
        return False
    pids = {principal_ideal(R, a).members for a in R.elements()}
    if any(I.members not in pids for I in all_ideals(R)):
        return False
    m = maximal_ideal(R)
    p = m
    for _ in range(R.size):
        if p.members == {R.zero}:
            return True
        p = ideal_product(R, p, m)
    return p.members == frozenset({R.zero})


def check_ring_axioms(R: FiniteRing, *, cap: int = 64) -> None:
    """Exhaustive commutative-ring axiom check; raises on failure."""
    if R.size > cap:
        raise CapacityExceeded(f"axiom check capped at size {cap}")
    els = list(R.elements())
    for a in els:
        assert R.add(a, R.zero) == a
        assert R.add(a, R.neg(a)) == R.zero
        assert R.mul(a, R.one) == a
        for b in els:
            assert R.add(a, b) == R.add(b, a)
            assert R.mul(a, b) == R.mul(b, a)
            for c in els:
                assert R.add(R.add(a, b), c) == R.add(a, R.add(b, c))
                assert R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c))
                assert R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c))
