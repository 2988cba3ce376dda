"""Property reports: the full predicate vector for one ring, plus replay.

JSON is the canonical format; every witness carries enough indices to be
re-validated by direct arithmetic against a ring rebuilt from the spec
text (see ``recheck_report``).
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass

from . import __version__
from .errors import InvalidQuery
from .factor import (
    bouvier_class,
    is_accp,
    is_atomic,
    is_bfr,
    is_presimplifiable,
    is_ufr_bouvier,
    is_ufr_direct,
    u_boundedness_of_zero,
)
from .rings import (
    FiniteRing,
    is_field,
    is_local,
    is_reduced,
    is_spir,
    is_unit,
    min_primes,
    nonunits,
    units,
)
from .specparse import build_ring, parse_spec, to_text

REPORT_FIELDS = [
    "spec", "size", "unit_count", "reduced", "local", "spir", "field",
    "presimplifiable", "accp", "accp_height", "bfr", "atomic", "ufr_direct",
    "ufr_bouvier", "bouvier_class", "u_bounded_max_len", "min_prime_count",
    "version",
]


@dataclass
class PropertyReport:
    spec: str
    size: int
    unit_count: int
    reduced: bool
    local: bool
    spir: bool
    field: bool
    presimplifiable: bool
    presimplifiable_witness: dict | None
    accp: bool
    accp_height: int
    bfr: bool
    bfr_witness: dict | None
    atomic: bool
    ufr_direct: bool
    ufr_witness: dict | None
    ufr_bouvier: bool
    bouvier_class: str
    u_bounded_max_len: int
    u_bounded_example: list | None
    min_prime_count: int
    version: str

    def to_dict(self) -> dict:
        return asdict(self)

    def violations(self) -> list[str]:
        """Implication-lattice checks; all must be empty on correct code."""
        out = []
        if self.bfr and not self.presimplifiable:
            out.append("BFR but not presimplifiable")
        if self.ufr_direct and not self.bfr:
            out.append("UFR but not BFR")
        if self.bfr and not self.accp:
            out.append("BFR but not ACCP")
        if self.size <= 512 and self.ufr_direct != self.ufr_bouvier:
            out.append("ufr_direct disagrees with Bouvier classification")
        return out


def analyze_ring(R: FiniteRing, spec_text: str) -> PropertyReport:
    pres, pres_wit = is_presimplifiable(R)
    accp, height = is_accp(R)
    bfr, bfr_wit = is_bfr(R)
    atomic, _ = is_atomic(R)
    ufr, ufr_wit = is_ufr_direct(R)
    bclass = bouvier_class(R)
    _, umax, uexample = u_boundedness_of_zero(R)
    return PropertyReport(
        spec=spec_text,
        size=R.size,
        unit_count=len(units(R)),
        reduced=is_reduced(R),
        local=is_local(R),
        spir=is_spir(R),
        field=is_field(R),
        presimplifiable=pres,
        presimplifiable_witness=pres_wit or None,
        accp=accp,
        accp_height=height,
        bfr=bfr,
        bfr_witness=bfr_wit or None,
        atomic=atomic,
        ufr_direct=ufr,
        ufr_witness=ufr_wit or None,
        ufr_bouvier=is_ufr_bouvier(R),
        bouvier_class=bclass,
        u_bounded_max_len=umax,
        u_bounded_example=list(uexample) if uexample else None,
        min_prime_count=len(min_primes(R)),
        version=__version__,
    )


def analyze_spec(text: str, *, cap: int = 4096) -> tuple[dict, float]:
    ast = parse_spec(text)
    canonical = to_text(ast)
    R = build_ring(ast, cap=cap)
    if not isinstance(R, FiniteRing):
        raise InvalidQuery("structured backends opt out of exhaustive analysis")
    t0 = time.perf_counter()
    report = analyze_ring(R, canonical)
    return report.to_dict(), time.perf_counter() - t0


# ---------------------------------------------------------------------------
# witness replay


def _replay_presimplifiable(R: FiniteRing, w: dict) -> bool:
    a, b = w["a"], w["b"]
    return a != R.zero and not is_unit(R, b) and R.mul(a, b) == a


def _replay_cycle(R: FiniteRing, w: dict) -> bool:
    cycle, labels = w["cycle"], w["labels"]
    if not cycle or len(cycle) != len(labels):
        return False
    nus = nonunits(R)
    for k, a in enumerate(cycle):
        s = labels[k]
        t = cycle[(k + 1) % len(cycle)]
        if a == R.zero or s not in nus or R.mul(s, t) != a:
            return False
    return True


def _replay_u_bounded(R: FiniteRing, factors: list) -> bool:
    nus = nonunits(R)
    if any(f not in nus for f in factors):
        return False
    prod = R.one
    for f in factors:
        prod = R.mul(prod, f)
    if prod != R.zero:
        return False
    for k in range(len(factors)):
        sub = R.one
        for j, f in enumerate(factors):
            if j != k:
                sub = R.mul(sub, f)
        if sub == R.zero and len(factors) > 1:
            return False
    return True


def _replay_ufr_witness(R: FiniteRing, w: dict) -> bool:
    reason = w.get("reason")
    if reason == "not_bfr":
        return _replay_cycle(R, w)
    if reason == "not_atomic":
        return w["element"] != R.zero and not is_unit(R, w["element"])
    if reason == "non_unique":
        a = w["element"]
        seen = set()
        for multiset in w["multisets"]:
            prod = R.one
            for f in multiset:
                prod = R.mul(prod, f)
            if prod != a:
                return False
            seen.add(tuple(sorted(multiset)))
        return len(seen) == len(w["multisets"])
    return False


def recheck_report(report: dict, *, cap: int = 4096) -> list[str]:
    """Rebuild the ring from the report's spec and re-validate witnesses.

    Returns a list of failure descriptions (empty means everything replays).
    """
    failures = []
    R = build_ring(parse_spec(report["spec"]), cap=cap)
    if report["size"] != R.size:
        failures.append("size mismatch")
    if not report["presimplifiable"]:
        if not _replay_presimplifiable(R, report["presimplifiable_witness"]):
            failures.append("presimplifiable witness does not replay")
    if not report["bfr"]:
        if not _replay_cycle(R, report["bfr_witness"]):
            failures.append("bfr cycle witness does not replay")
    if not report["ufr_direct"]:
        if not _replay_ufr_witness(R, report["ufr_witness"]):
            failures.append("ufr witness does not replay")
    if report["u_bounded_example"] is not None:
        if not _replay_u_bounded(R, report["u_bounded_example"]):
            failures.append("u-bounded example does not replay")
    # classification fields are cheap to recompute, so recheck them outright
    if report["unit_count"] != len(units(R)):
        failures.append("unit count mismatch")
    if report["bouvier_class"] != bouvier_class(R):
        failures.append("bouvier class mismatch")
    if report["ufr_direct"] != (report["bouvier_class"] != "none"):
        failures.append("ufr flag inconsistent with bouvier class")
    return failures
