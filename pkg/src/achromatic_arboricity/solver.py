"""Exhaustive search for complete acyclic colorings of small complete graphs.

Colorings are enumerated as set partitions of the edge list in canonical
form: class ``c`` is the one holding the smallest edge not in classes
``0..c-1``. This is the same representative the first-use color order picks
(an edge may only open color ``c`` once ``0..c-1`` are in use), built one
class at a time so that pairwise conditions are checked as soon as a class
is closed.

Pruning rules, all necessary conditions on a valid coloring:

* every class is a forest;
* every class is nonempty, and at most one class is a single edge (two
  single edges never close a cycle);
* a class ``A`` needs ``2(k-1)`` endpoints of other edges inside ``V(A)``
  (see below), and a forest with ``s`` edges leaves at most ``s(2n-4)`` such
  endpoints, so every class has at least ``ceil((k-1)/(n-2))`` edges;
* a closed class forms a cycle with every earlier class;
* a cycle through classes ``A`` and ``B`` changes color at two or more
  vertices of ``A``, so ``B`` has at least two edge-endpoints in ``V(A)``.
  Every class still to be built draws from the unassigned edges, so those
  edges need ``2 * (classes left)`` endpoints inside ``V(A)`` for every
  closed class ``A``.

Class 0 always holds the edge ``{0, 1}``, and nothing else is fixed yet, so
two candidates for class 0 that differ by a vertex permutation preserving
``{0, 1}`` have isomorphic subtrees. Only the first candidate of each such
orbit is expanded; ``_first_class_key`` is a canonical form for the orbit.
"""

from __future__ import annotations

import enum
import functools
import time
from dataclasses import dataclass, field
from typing import Optional

from .bounds import largest_plane_prime, upper_bound_lemma1
from .construction import arboricity_coloring, build_coloring, greedy_extend
from .graphcore import EdgeColoring, all_edges, num_edges, verify_coloring

DEFAULT_MAX_NODES = 10**8


class SearchStatus(enum.Enum):
    FOUND = "found"
    NOT_EXISTS = "not-exists"
    TIMEOUT = "timeout"


@dataclass
class SearchOutcome:
    status: SearchStatus
    coloring: Optional[EdgeColoring] = None
    nodes: int = 0
    elapsed: float = 0.0

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND


def _tree_code(adj, v, parent) -> str:
    return "(" + "".join(sorted(_tree_code(adj, c, v) for c in adj[v] if c != parent)) + ")"


def _first_class_key(pairs: list[tuple[int, int]]) -> tuple:
    """Canonical form of a forest containing ``{0, 1}`` under permutations fixing ``{0, 1}``.

    The tree through ``{0, 1}`` is encoded as the unordered pair of the two
    rooted halves; every other tree is encoded from its center (or central
    edge). Isolated vertices are implied by the edge count.
    """
    adj: dict[int, list[int]] = {}
    for u, v in pairs:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    main = tuple(sorted((_tree_code(adj, 0, 1), _tree_code(adj, 1, 0))))
    seen = set()
    stack = [0, 1]
    while stack:
        x = stack.pop()
        if x not in seen:
            seen.add(x)
            stack.extend(adj[x])
    others = []
    for root in sorted(adj):
        if root in seen:
            continue
        comp = []
        stack = [root]
        while stack:
            x = stack.pop()
            if x not in seen:
                seen.add(x)
                comp.append(x)
                stack.extend(adj[x])
        # peel leaves down to the center
        deg = {x: len(adj[x]) for x in comp}
        layer = [x for x in comp if deg[x] <= 1]
        remaining = len(comp)
        while remaining > 2:
            remaining -= len(layer)
            nxt = []
            for x in layer:
                for y in adj[x]:
                    deg[y] -= 1
                    if deg[y] == 1:
                        nxt.append(y)
            layer = nxt
        if len(layer) == 1:
            others.append(_tree_code(adj, layer[0], None))
        else:
            a, b = layer
            others.append("|".join(sorted((_tree_code(adj, a, b), _tree_code(adj, b, a)))))
    return main, tuple(sorted(others))


class _BudgetExhausted(Exception):
    pass


class _Found(Exception):
    pass


class _BlockSearch:
    def __init__(self, n: int, k: int, max_nodes: int | None, deadline: float | None):
        self.n, self.k = n, k
        self.edges = all_edges(n)
        self.emask = [(1 << u) | (1 << v) for u, v in self.edges]
        self.max_nodes = max_nodes
        self.deadline = deadline
        self.nodes = 0
        # closed classes: (edge ids, component labels, vertex mask)
        self.blocks: list[tuple[list[int], list[int], int]] = []
        self.singletons = 0
        self.first_seen: set[tuple] = set()
        self.min_size = max(1, -(-(k - 1) // (n - 2))) if n > 2 else 1

    def _tick(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _BudgetExhausted
        if self.deadline is not None and not self.nodes & 0xFFF and time.monotonic() > self.deadline:
            raise _BudgetExhausted

    def _cycle_with(self, labels: list[int], ids: list[int]) -> bool:
        # union of a forest (given by component labels) and another edge set
        parent = {}
        edges = self.edges
        for e in ids:
            u, v = edges[e]
            a, b = labels[u], labels[v]
            if a == b:
                return True
            while a in parent:
                a = parent[a]
            while b in parent:
                b = parent[b]
            if a == b:
                return True
            parent[a] = b
        return False

    def _incidence(self, vmask: int, ids) -> int:
        em = self.emask
        total = 0
        for e in ids:
            x = em[e] & vmask
            if x:
                total += 1 if x & (x - 1) == 0 else 2
        return total

    def run(self) -> list[list[int]] | None:
        e_total = len(self.edges)
        if self.k > e_total or self.k < 1:
            return None
        try:
            self._place(list(range(e_total)))
        except _Found:
            return [b[0] for b in self.blocks]
        return None

    def _feasible_after(self, remaining: list[int], left: int) -> bool:
        if left == 0:
            return not remaining
        if self.min_size > 1:
            need = self.min_size * left
        else:
            need = 2 * left - (0 if self.singletons else 1)
        if len(remaining) < need:
            return False
        for _, _, vmask in self.blocks:
            if self._incidence(vmask, remaining) < 2 * left:
                return False
        return True

    def _close(self, ids: list[int], labels: list[int], vmask: int) -> bool:
        if len(ids) < self.min_size or (len(ids) == 1 and self.singletons):
            return False
        for _, lab, _ in self.blocks:
            if not self._cycle_with(lab, ids):
                return False
        return True

    def _place(self, free: list[int]) -> None:
        self._tick()
        left = self.k - len(self.blocks)
        n = self.n
        if left == 1:
            labels = list(range(n))
            for e in free:
                u, v = self.edges[e]
                a, b = labels[u], labels[v]
                if a == b:
                    return
                labels = [a if x == b else x for x in labels]
            vmask = 0
            for e in free:
                vmask |= self.emask[e]
            if self._close(free, labels, vmask):
                self.blocks.append((list(free), labels, vmask))
                raise _Found
            return

        first, rest = free[0], free[1:]
        u, v = self.edges[first]
        labels = list(range(n))
        labels[v] = u
        # endpoint budget that unassigned edges still offer each closed class
        budgets = [self._incidence(vm, rest) for _, _, vm in self.blocks]
        self._grow(rest, 0, [first], labels, self.emask[first], [], budgets, left)

    def _grow(self, rest, pos, ids, labels, vmask, excluded, budgets, left):
        self._tick()
        if pos == len(rest):
            if not self._close(ids, labels, vmask):
                return
            if not self.blocks:
                key = _first_class_key([self.edges[e] for e in ids])
                if key in self.first_seen:
                    return
                self.first_seen.add(key)
            single = len(ids) == 1
            self.blocks.append((ids, labels, vmask))
            self.singletons += single
            if self._feasible_after(excluded, left - 1):
                self._place(excluded)
            self.blocks.pop()
            self.singletons -= single
            return

        e = rest[pos]
        a, b = self.edges[e]
        la, lb = labels[a], labels[b]
        undecided = len(rest) - pos - 1
        # include e, if it keeps a forest and leaves enough for later classes
        if la != lb and len(excluded) + undecided >= (left - 1) * self.min_size:
            em = self.emask[e]
            new_budgets = []
            ok = True
            for (_, _, vm), bud in zip(self.blocks, budgets):
                x = em & vm
                if x:
                    bud -= 1 if x & (x - 1) == 0 else 2
                    if bud < 2 * (left - 1):
                        ok = False
                        break
                new_budgets.append(bud)
            if ok:
                new_labels = [la if x == lb else x for x in labels]
                ids.append(e)
                self._grow(rest, pos + 1, ids, new_labels, vmask | em, excluded,
                           new_budgets, left)
                ids.pop()
        # leave e for a later class
        excluded.append(e)
        self._grow(rest, pos + 1, ids, labels, vmask, excluded, budgets, left)
        excluded.pop()


def exists_coloring(
    n: int,
    k: int,
    max_nodes: int | None = DEFAULT_MAX_NODES,
    max_seconds: float | None = None,
) -> SearchOutcome:
    """Decide whether ``K_n`` has a complete acyclic coloring with ``k`` colors.

    ``NOT_EXISTS`` means the canonical search space was exhausted. A found
    witness is verified before it is returned.
    """
    if n < 2 or k < 1:
        raise ValueError(f"need n >= 2 and k >= 1, got n={n}, k={k}")
    start = time.monotonic()
    if k > num_edges(n):
        return SearchOutcome(SearchStatus.NOT_EXISTS, nodes=0, elapsed=0.0)
    deadline = None if max_seconds is None else start + max_seconds
    search = _BlockSearch(n, k, max_nodes, deadline)
    try:
        blocks = search.run()
    except _BudgetExhausted:
        return SearchOutcome(SearchStatus.TIMEOUT, nodes=search.nodes,
                             elapsed=time.monotonic() - start)
    elapsed = time.monotonic() - start
    if blocks is None:
        return SearchOutcome(SearchStatus.NOT_EXISTS, nodes=search.nodes, elapsed=elapsed)
    edges = search.edges
    coloring = EdgeColoring(n, [sorted(edges[e] for e in b) for b in blocks])
    report = verify_coloring(coloring)
    if not report.is_valid:
        raise RuntimeError(f"search produced an invalid witness: {report.summary()}")
    return SearchOutcome(SearchStatus.FOUND, coloring, search.nodes, elapsed)


class ExactStatus(enum.Enum):
    EXACT = "exact"
    BRACKET = "bracket"
    TIMED_OUT = "timed-out"


@dataclass
class ExactResult:
    """Outcome of :func:`exact_value`.

    ``lower`` is always witnessed by ``witness``. ``upper`` is certified: every
    ``k`` above it is either beyond the counting bound or was refuted.
    """

    n: int
    status: ExactStatus
    lower: int
    upper: int
    witness: Optional[EdgeColoring]
    nodes_explored: int
    elapsed: float
    attempts: list[tuple[int, SearchStatus, int]] = field(default_factory=list)

    @property
    def value(self) -> int | None:
        return self.lower if self.status is ExactStatus.EXACT else None

    def describe(self) -> str:
        if self.status is ExactStatus.EXACT:
            head = f"Exact({self.lower})"
        elif self.status is ExactStatus.BRACKET:
            head = f"Bracket({self.lower}, {self.upper})"
        else:
            head = f"TimedOut({self.lower}, {self.upper})"
        return f"n={self.n}: {head} [{self.nodes_explored} nodes, {self.elapsed:.2f}s]"


def search_upper_start(n: int) -> int:
    return upper_bound_lemma1(n) if n >= 5 else num_edges(n)


@functools.lru_cache(maxsize=None)
def _k7_seven_colors() -> EdgeColoring | None:
    outcome = exists_coloring(7, 7, max_nodes=DEFAULT_MAX_NODES)
    return outcome.coloring


def seed_witness(n: int) -> EdgeColoring:
    """Best constructive witness for ``K_n`` without searching at ``n`` itself.

    Hamiltonian paths give ``ceil(n/2)`` colors. From n = 8 on, a searched
    7-color coloring of ``K_7`` or a plane coloring is extended one color per
    vertex.
    """
    best = arboricity_coloring(n)
    candidates = []
    if n >= 8:
        base = _k7_seven_colors()
        if base is not None:
            candidates.append(greedy_extend(base, n))
    q = largest_plane_prime(n)
    if q is not None:
        candidates.append(greedy_extend(build_coloring(q), n))
    for c in candidates:
        if c.k > best.k:
            best = c
    return best


def exact_value(
    n: int,
    max_nodes: int | None = DEFAULT_MAX_NODES,
    max_seconds: float | None = None,
    seed: bool = True,
) -> ExactResult:
    """Determine ``A_alpha(K_n)`` or bracket it.

    ``k`` descends from the counting bound (``n(n-1)/2`` below n = 5); each
    ``k`` gets its own search with ``max_nodes`` nodes, all sharing the
    ``max_seconds`` wall-clock budget. The first ``k`` with a coloring is the
    answer if every larger ``k`` was refuted; an unfinished search leaves a
    bracket. The descent stops at the seed witness's color count.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    start = time.monotonic()
    deadline = None if max_seconds is None else start + max_seconds
    witness = seed_witness(n) if seed else None
    lower = witness.k if witness is not None else 0
    open_k: list[int] = []
    attempts = []
    nodes = 0
    out_of_time = False

    for k in range(search_upper_start(n), lower, -1):
        remaining = None
        if deadline is not None:
            remaining = deadline - time.monotonic()
            if remaining <= 0:
                out_of_time = True
                open_k.extend(range(lower + 1, k + 1))
                break
        outcome = exists_coloring(n, k, max_nodes=max_nodes, max_seconds=remaining)
        nodes += outcome.nodes
        attempts.append((k, outcome.status, outcome.nodes))
        if outcome.found:
            witness, lower = outcome.coloring, k
            break
        if outcome.status is SearchStatus.TIMEOUT:
            open_k.append(k)
            if deadline is not None and time.monotonic() >= deadline:
                out_of_time = True

    elapsed = time.monotonic() - start
    if not open_k:
        status, upper = ExactStatus.EXACT, lower
    else:
        status = ExactStatus.TIMED_OUT if out_of_time else ExactStatus.BRACKET
        upper = max(open_k)
    return ExactResult(n, status, lower, upper, witness, nodes, elapsed, attempts)
