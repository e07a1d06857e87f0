"""Edge model for complete graphs and the validity check for edge colorings.

A coloring of ``K_n`` is valid (complete acyclic) when every color class is
a forest and the union of every two classes contains a cycle. Vertices are
the integers ``0..n-1``; an edge is the tuple ``(u, v)`` with ``u < v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

Edge = tuple[int, int]


def make_edge(u: int, v: int) -> Edge:
    """Return the canonical form of the edge ``{u, v}``.

    >>> make_edge(3, 1)
    (1, 3)
    """
    if u == v:
        raise ValueError(f"loop edge ({u}, {v}) is not an edge of a simple graph")
    return (u, v) if u < v else (v, u)


def all_edges(n: int) -> list[Edge]:
    """Return the ``n(n-1)/2`` edges of ``K_n`` in lexicographic order."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return list(combinations(range(n), 2))


def num_edges(n: int) -> int:
    return n * (n - 1) // 2


class DisjointSet:
    """Union-find over arbitrary hashable items, created lazily on first use.

    >>> ds = DisjointSet()
    >>> ds.union(0, 1)
    True
    >>> ds.union(1, 0)
    False
    """

    __slots__ = ("_parent",)

    def __init__(self, parent: dict | None = None):
        self._parent = {} if parent is None else parent

    def find(self, x):
        parent = self._parent
        root = parent.setdefault(x, x)
        if root == x:
            return x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y) -> bool:
        """Merge the sets of ``x`` and ``y``; return False if already merged."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self._parent[ry] = rx
        return True

    def components(self) -> int:
        return sum(1 for x in list(self._parent) if self.find(x) == x)


def is_forest(edges: Iterable[Edge], n: int | None = None) -> bool:
    """True iff the edge set contains no cycle.

    ``n`` is accepted for interface symmetry; the union-find only tracks the
    vertices the edges touch.
    """
    ds = DisjointSet()
    for u, v in edges:
        if not ds.union(u, v):
            return False
    return True


def union_contains_cycle(a: Iterable[Edge], b: Iterable[Edge], n: int | None = None) -> bool:
    """True iff the union of the two (disjoint) edge sets contains a cycle."""
    ds = DisjointSet()
    for u, v in a:
        if not ds.union(u, v):
            return True
    for u, v in b:
        if not ds.union(u, v):
            return True
    return False


def forest_labels(edges: Iterable[Edge]) -> dict[int, int] | None:
    """Map every touched vertex to a component representative.

    Returns None when the edges contain a cycle.
    """
    ds = DisjointSet()
    for u, v in edges:
        if not ds.union(u, v):
            return None
    return {x: ds.find(x) for x in list(ds._parent)}


@dataclass(frozen=True)
class EdgeColoring:
    """An assignment of the edges of ``K_n`` to ``k`` color classes.

    Construction does not enforce the partition property: candidate colorings
    read from disk may be malformed and :func:`verify_coloring` is what reports
    on them. Edges are canonicalized to ``u < v`` but otherwise kept as given.
    """

    n: int
    classes: tuple[tuple[Edge, ...], ...]

    def __init__(self, n: int, classes: Iterable[Iterable[Sequence[int]]]):
        object.__setattr__(self, "n", int(n))
        normalized = []
        for cls in classes:
            normalized.append(tuple(
                (int(u), int(v)) if u <= v else (int(v), int(u)) for u, v in cls
            ))
        object.__setattr__(self, "classes", tuple(normalized))

    @property
    def k(self) -> int:
        return len(self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def color_of(self) -> dict[Edge, int]:
        """Edge -> class index map (last class wins on duplicates)."""
        return {e: c for c, cls in enumerate(self.classes) for e in cls}

    def class_sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    @classmethod
    def from_color_map(cls, n: int, colors: dict[Edge, int]) -> "EdgeColoring":
        k = max(colors.values(), default=-1) + 1
        classes: list[list[Edge]] = [[] for _ in range(k)]
        for e in sorted(colors):
            classes[colors[e]].append(e)
        return cls(n, classes)

    def sorted(self) -> "EdgeColoring":
        """Same coloring with edges sorted inside each class."""
        return EdgeColoring(self.n, (sorted(c) for c in self.classes))


@dataclass
class VerificationReport:
    partition_ok: bool
    acyclic_failures: list[int] = field(default_factory=list)
    pair_failures: list[tuple[int, int]] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return self.partition_ok and not self.acyclic_failures and not self.pair_failures

    def summary(self) -> str:
        status = "valid" if self.is_valid else "INVALID"
        return (
            f"{status}: partition_ok={self.partition_ok}, "
            f"{len(self.acyclic_failures)} cyclic classes, "
            f"{len(self.pair_failures)} pairs without a cycle"
        )


def _check_partition(c: EdgeColoring) -> list[str]:
    problems = []
    n = c.n
    if n < 1:
        return [f"vertex count must be >= 1, got {n}"]
    seen: dict[Edge, int] = {}
    for idx, cls in enumerate(c.classes):
        if not cls:
            problems.append(f"class {idx} is empty")
        for u, v in cls:
            if u == v:
                problems.append(f"class {idx} contains loop ({u}, {v})")
                continue
            if u < 0 or v >= n:
                problems.append(f"class {idx} has edge ({u}, {v}) outside 0..{n - 1}")
                continue
            if (u, v) in seen:
                problems.append(
                    f"edge ({u}, {v}) appears in class {seen[(u, v)]} and class {idx}"
                )
                continue
            seen[(u, v)] = idx
    expected = num_edges(n)
    if len(seen) != expected:
        missing = [e for e in combinations(range(n), 2) if e not in seen]
        shown = ", ".join(map(str, missing[:5]))
        more = "" if len(missing) <= 5 else f" (+{len(missing) - 5} more)"
        problems.append(f"{len(missing)} edges of K_{n} are uncolored: {shown}{more}")
    return problems


def _pair_has_cycle(labels_a: dict[int, int], b: Sequence[Edge]) -> bool:
    # Contract class a to its components, then look for a cycle in b.
    ds = DisjointSet()
    for u, v in b:
        ru = labels_a.get(u, ~u)
        rv = labels_a.get(v, ~v)
        if ru == rv or not ds.union(ru, rv):
            return True
    return False


def verify_coloring(c: EdgeColoring) -> VerificationReport:
    """Check partition, per-class acyclicity and pairwise cycles.

    Never raises on malformed colorings; problems are reported in the
    returned :class:`VerificationReport` with failure lists sorted ascending.
    """
    diagnostics = _check_partition(c)
    report = VerificationReport(partition_ok=not diagnostics, diagnostics=diagnostics)

    labels: list[dict[int, int] | None] = []
    for idx, cls in enumerate(c.classes):
        lab = forest_labels(e for e in cls if e[0] != e[1])
        labels.append(lab)
        if lab is None:
            report.acyclic_failures.append(idx)

    for i, j in combinations(range(c.k), 2):
        li, lj = labels[i], labels[j]
        if li is None or lj is None:
            # a cyclic class makes every union it joins cyclic
            continue
        a, b = c.classes[i], c.classes[j]
        if len(a) < len(b):
            found = _pair_has_cycle(lj, a)
        else:
            found = _pair_has_cycle(li, b)
        if not found:
            report.pair_failures.append((i, j))
    return report
