"""Finite modules over finite rings.

Same dense indexing conventions as rings: element 0 is the zero of the
module. Bounded-factorization analysis runs on the module divisor graph
(edges x -> y labeled by a nonunit r with x = r*y; node 0 excluded, since
a chain through 0 would force the source to be 0).
"""

from __future__ import annotations

from typing import Callable, Iterable

import networkx as nx

from .errors import CapacityExceeded
from .rings import DEFAULT_SIZE_CAP, FiniteRing, Ideal, jacobson_radical, nonunits


class FiniteModule:
    def __init__(
        self,
        ring: FiniteRing,
        size: int,
        add: Callable[[int, int], int],
        neg: Callable[[int], int],
        act: Callable[[int, int], int],
        *,
        label: str = "",
        render: Callable[[int], str] | None = None,
    ):
        self.ring = ring
        self.size = size
        self.add = add
        self.neg = neg
        self.act = act
        self.zero = 0
        self.label = label or f"mod{size}"
        self._render = render or str
        self._cache: dict = {}

    def elements(self) -> range:
        return range(self.size)

    def render(self, x: int) -> str:
        return self._render(x)

    def __repr__(self):
        return f"FiniteModule({self.label} over {self.ring.label}, size={self.size})"


def make_self_module(R: FiniteRing) -> FiniteModule:
    return FiniteModule(R, R.size, R.add, R.neg, R.mul, label=f"{R.label}-self", render=R.render)


def make_free(R: FiniteRing, k: int, *, cap: int = DEFAULT_SIZE_CAP) -> FiniteModule:
    if k == 1:
        return make_self_module(R)
    size = R.size ** k
    if size > cap:
        raise CapacityExceeded(f"free module size {size} exceeds cap {cap}")
    n = R.size

    def decode(x):
        v = []
        for _ in range(k):
            x, c = divmod(x, n)
            v.append(c)
        return v

    def encode(v):
        x = 0
        for c in reversed(v):
            x = x * n + c
        return x

    def add(x, y):
        return encode([R.add(a, b) for a, b in zip(decode(x), decode(y))])

    def neg(x):
        return encode([R.neg(a) for a in decode(x)])

    def act(r, x):
        return encode([R.mul(r, a) for a in decode(x)])

    def render(x):
        return "(" + ",".join(R.render(a) for a in decode(x)) + ")"

    return FiniteModule(R, size, add, neg, act, label=f"{R.label}^{k}", render=render)


def submodule_generated(M: FiniteModule, gens: Iterable[int]) -> frozenset:
    R = M.ring
    members = {M.zero}
    for g in gens:
        members |= {M.act(r, g) for r in R.elements()}
    frontier = list(members)
    while frontier:
        x = frontier.pop()
        for y in list(members):
            s = M.add(x, y)
            if s not in members:
                members.add(s)
                frontier.append(s)
    return frozenset(members)


def cyclic_submodule(M: FiniteModule, x: int) -> frozenset:
    # Rx is already closed under addition and the action
    return frozenset(M.act(r, x) for r in M.ring.elements())


def annihilator_of(M: FiniteModule, x: int) -> Ideal:
    R = M.ring
    return Ideal(R, frozenset(r for r in R.elements() if M.act(r, x) == M.zero))


def quotient_module(M: FiniteModule, gens: Iterable[int]) -> FiniteModule:
    N = sorted(submodule_generated(M, gens))
    rep = [min(M.add(x, y) for y in N) for x in M.elements()]
    reps = sorted(set(rep))
    index = {r: k for k, r in enumerate(reps)}

    def add(x, y):
        return index[rep[M.add(reps[x], reps[y])]]

    def neg(x):
        return index[rep[M.neg(reps[x])]]

    def act(r, x):
        return index[rep[M.act(r, reps[x])]]

    return FiniteModule(
        M.ring, len(reps), add, neg, act,
        label=f"{M.label}/N{len(N)}",
        render=lambda x: f"[{M.render(reps[x])}]",
    )


def all_submodules(M: FiniteModule) -> list[frozenset]:
    if "all_submodules" not in M._cache:
        seen = {cyclic_submodule(M, x) for x in M.elements()}
        worklist = list(seen)
        while worklist:
            cur = worklist.pop()
            for other in list(seen):
                s = frozenset(M.add(x, y) for x in cur for y in other)
                if s not in seen:
                    seen.add(s)
                    worklist.append(s)
        M._cache["all_submodules"] = sorted(seen, key=lambda m: (len(m), sorted(m)))
    return M._cache["all_submodules"]


# ---------------------------------------------------------------------------
# semisimplicity


def is_semisimple(M: FiniteModule) -> bool:
    """J(R)M = 0 criterion (R/J(R) is a finite product of fields)."""
    J = jacobson_radical(M.ring)
    return all(M.act(r, x) == M.zero for r in J.members for x in M.elements())


def is_semisimple_oracle(M: FiniteModule, *, cap: int = 4096) -> bool:
    """Definitional check: the simple submodules sum to M."""
    if M.ring.size * M.size > cap:
        raise CapacityExceeded("semisimple oracle capped")
    simples = []
    for x in M.elements():
        N = cyclic_submodule(M, x)
        if len(N) == 1:
            continue
        if all(cyclic_submodule(M, y) == N for y in N if y != M.zero):
            simples.append(N)
    total = {M.zero}
    for N in simples:
        total = set(_close_add(M, total | set(N)))
    return len(total) == M.size


def _close_add(M: FiniteModule, seed: set) -> frozenset:
    members = set(seed)
    frontier = list(members)
    while frontier:
        x = frontier.pop()
        for y in list(members):
            s = M.add(x, y)
            if s not in members:
                members.add(s)
                frontier.append(s)
    return frozenset(members)


# ---------------------------------------------------------------------------
# chain conditions and bounded factorization


def is_accc(M: FiniteModule) -> tuple[bool, int]:
    """Always true at finite scale; returns the cyclic-submodule chain height."""
    subs = sorted({cyclic_submodule(M, x) for x in M.elements()}, key=len)
    height = {}
    for i, s in enumerate(subs):
        height[i] = max(
            (height[j] + 1 for j in range(i) if subs[j] < s),
            default=0,
        )
    return True, max(height.values(), default=0)


def module_divisor_graph(M: FiniteModule) -> nx.DiGraph:
    if "divisor_graph" not in M._cache:
        R = M.ring
        nus = sorted(nonunits(R))
        G = nx.DiGraph()
        G.add_nodes_from(range(1, M.size))
        for y in range(1, M.size):
            for r in nus:
                x = M.act(r, y)
                if x != M.zero and not G.has_edge(x, y):
                    G.add_edge(x, y, label=r)
        M._cache["divisor_graph"] = G
    return M._cache["divisor_graph"]


def is_bfm(M: FiniteModule) -> tuple[bool, dict]:
    """Bounded-factorization property, via acyclicity of the divisor graph.

    Witness: a reachable cycle when unbounded, otherwise the per-element
    bound vector (longest path counts the nonunit scalars consumed).
    """
    G = module_divisor_graph(M)
    if not nx.is_directed_acyclic_graph(G):
        edges = nx.find_cycle(G)
        cycle = [u for u, _ in edges]
        labels = [G.edges[u, v]["label"] for u, v in edges]
        return False, {"cycle": cycle, "labels": labels}
    order = list(nx.topological_sort(G))
    bound = {v: 0 for v in G.nodes}
    for v in reversed(order):
        for _, t in G.out_edges(v):
            bound[v] = max(bound[v], 1 + bound[t])
    return True, {"bounds": {x: bound[x] for x in sorted(bound)}}


def bfm_bounds_oracle(M: FiniteModule, *, cap: int = 1024) -> dict:
    """Depth-capped brute force; complete by pigeonhole on suffix values.

    Returns per nonzero element the max chain length, None for unbounded.
    """
    if M.ring.size * M.size > cap:
        raise CapacityExceeded("bfm oracle capped")
    R = M.ring
    nus = sorted(nonunits(R))
    depth_cap = M.size + 1
    reach = {x: 0 for x in range(1, M.size)}
    layer = set(range(1, M.size))
    for k in range(1, depth_cap + 1):
        layer = {M.act(r, y) for r in nus for y in layer} - {M.zero}
        for x in layer:
            reach[x] = k
        if not layer:
            break
    return {x: (None if v >= depth_cap else v) for x, v in reach.items()}


def check_module_axioms(M: FiniteModule, *, cap: int = 4096) -> None:
    if M.ring.size * M.size > cap:
        raise CapacityExceeded("module axiom check capped")
    R = M.ring
    for x in M.elements():
        assert M.add(x, M.zero) == x
        assert M.add(x, M.neg(x)) == M.zero
        assert M.act(R.one, x) == x
        for y in M.elements():
            assert M.add(x, y) == M.add(y, x)
    for r in R.elements():
        for s in R.elements():
            for x in M.elements():
                assert M.act(R.add(r, s), x) == M.add(M.act(r, x), M.act(s, x))
                assert M.act(R.mul(r, s), x) == M.act(r, M.act(s, x))
        for x in M.elements():
            for y in M.elements():
                assert M.act(r, M.add(x, y)) == M.add(M.act(r, x), M.act(r, y))
