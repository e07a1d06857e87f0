"""Explicit complete acyclic colorings of complete graphs.

The main construction pairs up the lines of PG(2, q) (q an odd prime) into
triplets ``(p, l, m)`` with ``p`` the meet of ``l`` and ``m``. One line is left
over. Every line is a copy of ``K_{q+1}`` inside ``K_n`` and is split into
``(q+1)/2`` Hamiltonian paths; a triplet's two lines share their path colors,
so each color class there is two paths glued at ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphcore import Edge, EdgeColoring, make_edge, verify_coloring
from .projplane import (
    AffinePoint,
    InfinityLine,
    InfLinePoint,
    NotPrimeError,
    PlaneLine,
    PlanePoint,
    ProjectivePlane,
    SlopedLine,
    VerticalLine,
    build_plane,
    is_prime,
    mod_inverse,
)


@dataclass(frozen=True)
class PathFactorization:
    m: int
    paths: tuple[tuple[int, ...], ...]

    def path_edges(self, j: int) -> list[Edge]:
        p = self.paths[j]
        return [make_edge(a, b) for a, b in zip(p, p[1:])]


def hamiltonian_path_factorization(m: int) -> PathFactorization:
    """Split ``K_m`` (m even) into m/2 Hamiltonian paths.

    Path ``j`` is the zigzag ``j, j+1, j-1, j+2, j-2, ..., j+m/2`` taken mod m;
    its steps have lengths 1, 2, ..., m-1 with alternating sign, so the m/2
    rotations use every edge exactly once.
    """
    if m < 2 or m % 2:
        raise ValueError(f"a Hamiltonian path factorization needs an even m >= 2, got {m}")
    half = m // 2
    paths = []
    for j in range(half):
        seq = [j]
        for step in range(1, half + 1):
            seq.append((j + step) % m)
            if step < half:
                seq.append((j - step) % m)
        paths.append(tuple(seq))
    return PathFactorization(m, tuple(paths))


@dataclass(frozen=True)
class Triplet:
    p: PlanePoint
    l: PlaneLine
    m: PlaneLine

    def __str__(self):
        return f"({self.p}, {self.l}, {self.m})"


@dataclass(frozen=True)
class Decomposition:
    standalone: PlaneLine
    triplets: tuple[Triplet, ...]

    def covered_lines(self) -> list[PlaneLine]:
        out = [self.standalone]
        for t in self.triplets:
            out.extend((t.l, t.m))
        return out


def _require_odd_prime(q: int) -> None:
    if not is_prime(q):
        raise NotPrimeError(f"q must be an odd prime, got {q}")
    if q == 2:
        raise ValueError("q must be an odd prime, got 2")


def triplet_decomposition(plane: ProjectivePlane) -> Decomposition:
    """Pair the lines of ``plane`` into triplets, leaving ``VerticalLine(0)`` alone.

    Triplets come in five groups, in this order (i ranges over 1..(q-1)/2
    unless noted, divisions are modular):

    * ``(P0, [0,0], L)``
    * ``(P_i, [i,0], [i,2i-1])``
    * ``((i, i^2+2i-1), L_i, [(i^2-1)/i, 2i])``
    * ``((i, i^2+2i-t), [(i^2-t+1)/i, 2i-1], [(i^2-t)/i, 2i])`` for t != 1
    * ``((i, i^2), [i,0], L_i)`` for i in (q+1)/2..q-1
    """
    q = plane.q
    _require_odd_prime(q)
    half = (q - 1) // 2
    lower = range(1, half + 1)

    def sl(a, b):
        return SlopedLine(a % q, b % q)

    triplets = [Triplet(InfLinePoint(0), sl(0, 0), InfinityLine())]
    triplets += [Triplet(InfLinePoint(i), sl(i, 0), sl(i, 2 * i - 1)) for i in lower]
    for i in lower:
        inv = mod_inverse(i, q)
        triplets.append(Triplet(
            AffinePoint(i, (i * i + 2 * i - 1) % q),
            VerticalLine(i),
            sl((i * i - 1) * inv, 2 * i),
        ))
    for i in lower:
        inv = mod_inverse(i, q)
        for t in range(q):
            if t == 1:
                continue
            triplets.append(Triplet(
                AffinePoint(i, (i * i + 2 * i - t) % q),
                sl((i * i - t + 1) * inv, 2 * i - 1),
                sl((i * i - t) * inv, 2 * i),
            ))
    triplets += [
        Triplet(AffinePoint(i, (i * i) % q), sl(i, 0), VerticalLine(i))
        for i in range(half + 1, q)
    ]
    return Decomposition(VerticalLine(0), tuple(triplets))


def _relabel(path_edges: Sequence[Edge], vertices: Sequence[int]) -> list[Edge]:
    return [make_edge(vertices[a], vertices[b]) for a, b in path_edges]


def build_coloring(q: int, *, check: bool = False) -> EdgeColoring:
    """Coloring of ``K_{q^2+q+1}`` with ``(q+1)(q^2+q+2)/4`` classes.

    Each line's points are sorted by index and path vertex ``s`` is mapped to
    the ``s``-th point. With ``check=True`` the result is verified and a
    ``RuntimeError`` is raised if it is not a complete acyclic coloring.
    """
    _require_odd_prime(q)
    plane = build_plane(q)
    deco = triplet_decomposition(plane)
    fact = hamiltonian_path_factorization(q + 1)
    paths = [fact.path_edges(j) for j in range(len(fact.paths))]

    classes: list[list[Edge]] = []
    base = plane.line_vertices(deco.standalone)
    classes.extend(_relabel(p, base) for p in paths)
    for t in deco.triplets:
        lv, mv = plane.line_vertices(t.l), plane.line_vertices(t.m)
        for p in paths:
            classes.append(_relabel(p, lv) + _relabel(p, mv))

    coloring = EdgeColoring(plane.n, classes)
    if check:
        report = verify_coloring(coloring)
        if not report.is_valid:
            raise RuntimeError(f"construction for q={q} failed verification: {report.summary()}")
    return coloring


def greedy_extend(c: EdgeColoring, n: int) -> EdgeColoring:
    """Extend a valid coloring of ``K_m`` to ``K_n``, one vertex at a time.

    The edges of each new vertex ``v`` are taken in order ``(0, v), (1, v), ...``
    and all receive the color opened for ``v``. That class is a star, hence a
    forest, and for any older class with an edge ``ab`` the triangle
    ``a b v`` closes a cycle. Every added vertex therefore adds one color.
    """
    m = c.n
    if n < m:
        raise ValueError(f"cannot extend a coloring of K_{m} down to K_{n}")
    report = verify_coloring(c)
    if not report.is_valid:
        raise ValueError(f"refusing to extend an invalid coloring: {report.summary()}")
    if m < 2 and n > m:
        # no existing class to close triangles with
        if n == 1:
            return c
        return greedy_extend(EdgeColoring(2, [[(0, 1)]]), n)

    classes = [list(cls) for cls in c.classes]
    for v in range(m, n):
        classes.append([(u, v) for u in range(v)])
    return EdgeColoring(n, classes)


def arboricity_coloring(n: int) -> EdgeColoring:
    """Valid coloring of ``K_n`` with ``ceil(n/2)`` classes.

    For even n these are the Hamiltonian paths; two of them have ``2n-2``
    edges on n vertices, so their union has a cycle. Odd n adds a star.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    even = n - n % 2
    fact = hamiltonian_path_factorization(even)
    c = EdgeColoring(even, [fact.path_edges(j) for j in range(len(fact.paths))])
    return greedy_extend(c, n)


__all__ = [
    "Decomposition",
    "PathFactorization",
    "Triplet",
    "arboricity_coloring",
    "build_coloring",
    "greedy_extend",
    "hamiltonian_path_factorization",
    "triplet_decomposition",
]
