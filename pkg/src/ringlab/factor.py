"""Factorization predicates over finite rings.

The workhorse is the divisor graph: a directed graph on the nonzero
carrier with an edge a -> t labeled s whenever a = s*t for a nonunit s.
Factorizations of a nonzero nonunit into n nonunits correspond to paths
of n-1 edges through nonzero nonunit suffixes, ending at the last
(nonunit) factor; an element has unbounded factorization length exactly
when a cycle is reachable from it. Zero is excluded everywhere here and
handled by the minimal-factorization machinery instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx

from .errors import CapacityExceeded, InvalidQuery, UnboundedElement
from .idealization import idealize
from .modules import FiniteModule, is_bfm, is_semisimple
from .rings import (
    FiniteRing,
    Ideal,
    ideal_product,
    is_field,
    is_local,
    is_reduced,
    is_spir,
    is_unit,
    maximal_ideal,
    min_primes,
    nonunits,
    principal_ideal,
    units,
)

# ---------------------------------------------------------------------------
# associates and atoms


def associates(R: FiniteRing, a: int, b: int) -> bool:
    return principal_ideal(R, a).members == principal_ideal(R, b).members


def associate_class_rep(R: FiniteRing) -> dict[int, int]:
    """Map each element to the minimal index generating the same principal ideal."""
    if "assoc_rep" not in R._cache:
        by_ideal: dict[frozenset, int] = {}
        rep = {}
        for a in R.elements():
            mem = principal_ideal(R, a).members
            if mem not in by_ideal:
                by_ideal[mem] = a
            rep[a] = by_ideal[mem]
        R._cache["assoc_rep"] = rep
    return R._cache["assoc_rep"]


def is_atom(R: FiniteRing, a: int) -> bool:
    if is_unit(R, a):
        raise InvalidQuery("atoms are nonunits")
    for b in R.elements():
        for c in R.elements():
            if R.mul(b, c) == a and not (associates(R, a, b) or associates(R, a, c)):
                return False
    return True


def atoms(R: FiniteRing) -> frozenset:
    if "atoms" not in R._cache:
        R._cache["atoms"] = frozenset(a for a in sorted(nonunits(R)) if is_atom(R, a))
    return R._cache["atoms"]


# ---------------------------------------------------------------------------
# presimplifiable / ACCP


def is_presimplifiable(R: FiniteRing) -> tuple[bool, dict]:
    witness = None
    nus = nonunits(R)
    for b in sorted(nus):
        for a in range(1, R.size):
            if R.mul(a, b) == a:
                witness = {"a": a, "b": b}
                break
        if witness:
            break
    # graph form: a self-loop a -> a labeled b is the same relation
    G = divisor_graph(R)
    has_loop = any(G.has_edge(v, v) for v in G.nodes)
    if (witness is None) != (not has_loop):
        raise AssertionError(f"presimplifiable cross-check failed on {R.label}")
    return (witness is None), (witness or {})


def is_accp(R: FiniteRing) -> tuple[bool, int]:
    """Always true at finite scale; returns the principal-ideal chain height."""
    pids = sorted({principal_ideal(R, a).members for a in R.elements()}, key=len)
    height = {}
    for i, s in enumerate(pids):
        height[i] = max((height[j] + 1 for j in range(i) if pids[j] < s), default=0)
    return True, max(height.values(), default=0)


# ---------------------------------------------------------------------------
# divisor graph and BF analysis


def divisor_graph(R: FiniteRing) -> nx.DiGraph:
    """Nodes: nonzero elements. Edge a -> t labeled s iff a = s*t, s nonunit."""
    if "divisor_graph" not in R._cache:
        nus = sorted(nonunits(R))
        G = nx.DiGraph()
        G.add_nodes_from(range(1, R.size))
        for t in range(1, R.size):
            for s in nus:
                a = R.mul(s, t)
                if a != R.zero and not G.has_edge(a, t):
                    G.add_edge(a, t, label=s)
        R._cache["divisor_graph"] = G
    return R._cache["divisor_graph"]


def _nonunit_subgraph(R: FiniteRing) -> nx.DiGraph:
    if "nonunit_graph" not in R._cache:
        G = divisor_graph(R)
        nus = nonunits(R)
        R._cache["nonunit_graph"] = G.subgraph([v for v in G.nodes if v in nus]).copy()
    return R._cache["nonunit_graph"]


def _cycle_witness(G: nx.DiGraph) -> dict:
    edges = nx.find_cycle(G)
    return {
        "cycle": [u for u, _ in edges],
        "labels": [G.edges[u, v]["label"] for u, v in edges],
    }


def max_factorization_length(R: FiniteRing, a: int) -> tuple[int | None, dict]:
    """Sup of n over factorizations a = r_1 ... r_n into nonunits.

    None means unbounded; the witness is then a reachable cycle, else an
    explicit factor list realizing the maximum.
    """
    if a == R.zero or is_unit(R, a):
        raise InvalidQuery("BF analysis applies to nonzero nonunits")
    G = _nonunit_subgraph(R)
    reach = nx.descendants(G, a) | {a}
    sub = G.subgraph(reach)
    if not nx.is_directed_acyclic_graph(sub):
        return None, _cycle_witness(sub)
    best: dict[int, int] = {}
    succ: dict[int, int | None] = {}
    for v in reversed(list(nx.topological_sort(sub))):
        best[v], succ[v] = 1, None
        for _, t in sorted(sub.out_edges(v)):
            if 1 + best[t] > best[v]:
                best[v], succ[v] = 1 + best[t], t
    factors, v = [], a
    while succ[v] is not None:
        t = succ[v]
        factors.append(sub.edges[v, t]["label"])
        v = t
    factors.append(v)
    return best[a], {"factors": factors}


def is_bfr(R: FiniteRing) -> tuple[bool, dict]:
    """BFR iff the nonzero-nonunit divisor graph is acyclic."""
    G = _nonunit_subgraph(R)
    if nx.is_directed_acyclic_graph(G):
        return True, {}
    w = _cycle_witness(G)
    w["element"] = w["cycle"][0]
    return False, w


def bf_lengths_oracle(R: FiniteRing, *, cap: int | None = None) -> dict[int, int | None]:
    """Independent brute force: layered products of exactly k nonunits.

    Depth cap |R|+1 is complete by pigeonhole on suffix products. Returns
    the max length per nonzero nonunit, None for unbounded.
    """
    depth_cap = cap if cap is not None else R.size + 1
    nus = sorted(nonunits(R))
    targets = {a for a in range(1, R.size) if a in set(nus)}
    reach: dict[int, int] = {a: 0 for a in targets}
    layer = set(nus) - {R.zero}
    k = 1
    for a in layer:
        if a in reach:
            reach[a] = 1
    while layer and k < depth_cap:
        k += 1
        layer = {R.mul(s, t) for s in nus for t in layer} - {R.zero}
        for a in layer:
            if a in reach:
                reach[a] = k
    return {a: (None if v >= depth_cap else v) for a, v in reach.items()}


# ---------------------------------------------------------------------------
# minimal factorizations of zero / U-boundedness


def minimal_factorizations_of_zero(
    R: FiniteRing, *, max_nodes: int = 2_000_000
) -> list[tuple[int, ...]]:
    """Minimal factorizations 0 = a_1 ... a_n into nonunits, up to associates.

    Factors range over associate-class representatives only: replacing a
    factor by an associate multiplies every sub-multiset product by a
    unit, which preserves both zeroness and minimality, so lengths and
    existence are unaffected. A multiset is extended only while all of
    its sub-multiset products stay nonzero (any zero proper sub-product
    kills minimality). A repeated prefix product is pruned too: the
    factors between two equal prefix products could be dropped without
    changing the product, so the branch cannot end minimal; this bounds
    the depth by |R|.
    """
    rep = associate_class_rep(R)
    reps = sorted({rep[a] for a in nonunits(R)})
    found: list[tuple[int, ...]] = []
    budget = [max_nodes]

    def extend(prefix: list[int], strict_prods: frozenset, prefix_prods: frozenset,
               full_prod: int, start: int):
        if budget[0] <= 0:
            raise CapacityExceeded("minimal-factorization search budget exhausted")
        budget[0] -= 1
        for i in range(start, len(reps)):
            a = reps[i]
            pa = R.mul(full_prod, a)
            strict_times_a = {R.mul(p, a) for p in strict_prods}
            if pa == R.zero:
                if R.zero not in strict_times_a:
                    found.append(tuple(prefix + [a]))
                continue
            if R.zero in strict_times_a or pa in prefix_prods:
                continue
            extend(
                prefix + [a],
                strict_prods | strict_times_a | {full_prod},
                prefix_prods | {pa},
                pa,
                i,
            )

    extend([], frozenset(), frozenset({R.one}), R.one, 0)
    return sorted(found, key=lambda f: (len(f), f))


def u_boundedness_of_zero(R: FiniteRing) -> tuple[bool, int, tuple[int, ...] | None]:
    """(always-true flag, max minimal factorization length of 0, witness)."""
    facts = minimal_factorizations_of_zero(R)
    if not facts:
        return True, 0, None
    best = max(facts, key=len)
    return True, len(best), best


# ---------------------------------------------------------------------------
# atomicity and UFR


def is_atomic(R: FiniteRing) -> tuple[bool, dict]:
    """Every nonzero nonunit is a product of atoms (least fixpoint)."""
    ats = atoms(R)
    nus = nonunits(R)
    targets = [a for a in range(1, R.size) if a in nus]
    good = set(a for a in targets if a in ats)
    changed = True
    while changed:
        changed = False
        for a in targets:
            if a in good:
                continue
            for p in ats:
                if p == R.zero:
                    continue
                hit = False
                for t in good:
                    if R.mul(p, t) == a:
                        good.add(a)
                        changed = hit = True
                        break
                if hit:
                    break
    bad = [a for a in targets if a not in good]
    if bad:
        return False, {"element": bad[0]}
    return True, {}


def atom_factorizations(R: FiniteRing, a: int) -> set[tuple[int, ...]]:
    """All atom multisets with product a, canonicalized by associate-class reps.

    Requires a to have bounded factorization length (the recursion walks
    the acyclic part of the divisor graph).
    """
    if a == R.zero or is_unit(R, a):
        raise InvalidQuery("atom factorizations apply to nonzero nonunits")
    length, _ = max_factorization_length(R, a)
    if length is None:
        raise UnboundedElement(f"element {a} has unbounded factorization length")
    ats = sorted(p for p in atoms(R) if p != R.zero)
    rep = associate_class_rep(R)
    nus = nonunits(R)
    memo: dict[int, set] = {}

    def fac(x: int) -> set:
        if x in memo:
            return memo[x]
        res: set[tuple[int, ...]] = set()
        memo[x] = res
        if x in atoms(R):
            res.add((rep[x],))
        for p in ats:
            for t in range(1, R.size):
                if t in nus and R.mul(p, t) == x:
                    for rest in fac(t):
                        res.add(tuple(sorted((rep[p],) + rest)))
        return res

    return fac(a)


def is_ufr_direct(R: FiniteRing) -> tuple[bool, dict]:
    """Unique factorization ring, decided from first principles."""
    bfr, wit = is_bfr(R)
    if not bfr:
        return False, {"reason": "not_bfr", **wit}
    atomic, wit = is_atomic(R)
    if not atomic:
        return False, {"reason": "not_atomic", **wit}
    nus = nonunits(R)
    for a in range(1, R.size):
        if a not in nus:
            continue
        facs = atom_factorizations(R, a)
        if len(facs) != 1:
            two = sorted(facs)[:2]
            return False, {"reason": "non_unique", "element": a, "multisets": two}
    return True, {}


def bouvier_class(R: FiniteRing) -> str:
    """Bouvier's trichotomy; a finite UFD is a field."""
    if is_field(R):
        return "field-UFD"
    if is_local(R):
        m = maximal_ideal(R)
        if ideal_product(R, m, m).members == frozenset({R.zero}):
            return "local-squarezero"
    if is_spir(R):
        return "SPIR"
    return "none"


def is_ufr_bouvier(R: FiniteRing) -> bool:
    return bouvier_class(R) != "none"


# ---------------------------------------------------------------------------
# theorem checkers


@dataclass
class UfrTheoremReport:
    ufr_direct: bool
    local_m2_mM: bool
    local_m2_semisimple: bool
    presimplifiable_all_atoms: bool
    all_agree: bool
    witness: dict = field(default_factory=dict)


def check_theorem_ufr(R: FiniteRing, M: FiniteModule) -> UfrTheoremReport:
    """Four-way UFR equivalence for R(+)M with M nonzero."""
    if M.size <= 1:
        raise InvalidQuery("the UFR equivalence needs a nonzero module")
    T = idealize(R, M)

    c1, w1 = is_ufr_direct(T)

    c2 = c3 = False
    if is_local(R):
        m = maximal_ideal(R)
        m2_zero = ideal_product(R, m, m).members == frozenset({R.zero})
        if m2_zero:
            c2 = all(M.act(r, x) == M.zero for r in m.members for x in M.elements())
            c3 = is_semisimple(M)

    pres, _ = is_presimplifiable(T)
    c4 = pres
    if c4:
        nus = nonunits(T)
        for a in range(1, T.size):
            if a in nus and not is_atom(T, a):
                c4 = False
                break

    agree = c1 == c2 == c3 == c4
    return UfrTheoremReport(c1, c2, c3, c4, agree, w1 if not c1 else {})


@dataclass
class BfrPropositionReport:
    bfr_T: bool
    bfr_R: bool
    bfm_M: bool
    zero_max_minimal_len: int
    impl_a_premise: bool
    impl_a_ok: bool
    impl_b_premise: bool
    impl_b_ok: bool


def check_prop_bfr(R: FiniteRing, M: FiniteModule) -> BfrPropositionReport:
    """Both implications relating BFR(R(+)M) to BFR(R), BFM(M), U-bounded 0."""
    T = idealize(R, M)
    bfr_T, _ = is_bfr(T)
    bfr_R, _ = is_bfr(R)
    bfm_M, _ = is_bfm(M)
    _, maxlen, _ = u_boundedness_of_zero(R)
    # 0 is always U-bounded at finite scale, so premise (b) reduces to the first two
    impl_a_ok = (not bfr_T) or (bfr_R and bfm_M)
    impl_b_premise = bfr_R and bfm_M
    impl_b_ok = (not impl_b_premise) or bfr_T
    return BfrPropositionReport(
        bfr_T, bfr_R, bfm_M, maxlen, bfr_T, impl_a_ok, impl_b_premise, impl_b_ok
    )


@dataclass
class UboundedLemmaReport:
    reduced: bool
    min_prime_count: int
    zero_max_minimal_len: int
    refinement_bound_holds: bool | None


def check_lemma_ubounded(R: FiniteRing) -> UboundedLemmaReport:
    """Part 1 is vacuous at finite scale; part 2 bounds minimal lengths by |Min(R)|."""
    reduced = is_reduced(R)
    nmin = len(min_primes(R))
    _, maxlen, _ = u_boundedness_of_zero(R)
    holds = (maxlen <= nmin) if reduced else None
    return UboundedLemmaReport(reduced, nmin, maxlen, holds)


def check_theorem_accp(R: FiniteRing, M: FiniteModule) -> dict:
    """ACCP(R(+)M) <=> ACCP(R) and ACCC(M); vacuously true at finite scale."""
    from .modules import is_accc

    T = idealize(R, M)
    accp_T, height_T = is_accp(T)
    accp_R, height_R = is_accp(R)
    accc_M, height_M = is_accc(M)
    return {
        "accp_T": accp_T,
        "accp_R": accp_R,
        "accc_M": accc_M,
        "equivalence_holds": accp_T == (accp_R and accc_M),
        "heights": {"T": height_T, "R": height_R, "M": height_M},
    }
