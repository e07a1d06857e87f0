"""The algebraic projective plane PG(2, q) over the integers mod a prime q.

Coordinates follow the affine-plus-infinity description:

* ``InfinityPoint`` is the point P; ``InfinityLine`` is the line L through it.
* ``InfLinePoint(i)`` are the other q points of L.
* ``VerticalLine(i)`` are the other q lines through P; ``VerticalLine(i)``
  contains P and the affine points ``(i, y)``.
* ``SlopedLine(a, b)`` contains ``InfLinePoint(a)`` and the affine points with
  ``y = a*x + b (mod q)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Union


class NotPrimeError(ValueError):
    """Raised when a plane order is not a prime number."""


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    d = 3
    while d * d <= q:
        if q % d == 0:
            return False
        d += 2
    return True


def mod_inverse(a: int, q: int) -> int:
    """Inverse of ``a`` modulo ``q`` by the extended Euclidean algorithm."""
    old_r, r = a % q, q
    old_s, s = 1, 0
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_s, s = s, old_s - quot * s
    if old_r != 1:
        raise ZeroDivisionError(f"{a} has no inverse modulo {q}")
    return old_s % q


@dataclass(frozen=True, order=True)
class InfinityPoint:
    def __str__(self):
        return "P"


@dataclass(frozen=True, order=True)
class InfLinePoint:
    i: int

    def __str__(self):
        return f"P{self.i}"


@dataclass(frozen=True, order=True)
class AffinePoint:
    x: int
    y: int

    def __str__(self):
        return f"({self.x},{self.y})"


@dataclass(frozen=True, order=True)
class InfinityLine:
    def __str__(self):
        return "L"


@dataclass(frozen=True, order=True)
class VerticalLine:
    i: int

    def __str__(self):
        return f"L{self.i}"


@dataclass(frozen=True, order=True)
class SlopedLine:
    a: int
    b: int

    def __str__(self):
        return f"[{self.a},{self.b}]"


PlanePoint = Union[InfinityPoint, InfLinePoint, AffinePoint]
PlaneLine = Union[InfinityLine, VerticalLine, SlopedLine]


def incident(p: PlanePoint, l: PlaneLine, q: int) -> bool:
    """Incidence between a point and a line of PG(2, q)."""
    if isinstance(l, InfinityLine):
        return isinstance(p, (InfinityPoint, InfLinePoint))
    if isinstance(l, VerticalLine):
        if isinstance(p, InfinityPoint):
            return True
        return isinstance(p, AffinePoint) and p.x == l.i
    # sloped line
    if isinstance(p, InfLinePoint):
        return p.i == l.a
    if isinstance(p, AffinePoint):
        return (l.a * p.x + l.b - p.y) % q == 0
    return False


class ProjectivePlane:
    """PG(2, q) for prime q, with a fixed point numbering.

    Point indices: P is 0, ``InfLinePoint(i)`` is ``1 + i`` and
    ``AffinePoint(x, y)`` is ``1 + q + x*q + y``. These indices are the vertex
    labels of ``K_n`` with ``n = q^2 + q + 1``.
    """

    def __init__(self, q: int):
        q = int(q)
        if not is_prime(q):
            raise NotPrimeError(f"plane order must be prime, got {q}")
        self.q = q
        self.points: list[PlanePoint] = (
            [InfinityPoint()]
            + [InfLinePoint(i) for i in range(q)]
            + [AffinePoint(x, y) for x in range(q) for y in range(q)]
        )
        self.lines: list[PlaneLine] = (
            [InfinityLine()]
            + [VerticalLine(i) for i in range(q)]
            + [SlopedLine(a, b) for a in range(q) for b in range(q)]
        )
        self.point_index: dict[PlanePoint, int] = {p: i for i, p in enumerate(self.points)}

    @property
    def n(self) -> int:
        return self.q * self.q + self.q + 1

    def __repr__(self):
        return f"ProjectivePlane(q={self.q})"

    def index(self, p: PlanePoint) -> int:
        return self.point_index[p]

    def incident(self, p: PlanePoint, l: PlaneLine) -> bool:
        return incident(p, l, self.q)

    def line_points(self, l: PlaneLine) -> list[PlanePoint]:
        """The q+1 points on ``l``, in point-index order."""
        q = self.q
        if isinstance(l, InfinityLine):
            return [InfinityPoint()] + [InfLinePoint(i) for i in range(q)]
        if isinstance(l, VerticalLine):
            return [InfinityPoint()] + [AffinePoint(l.i, y) for y in range(q)]
        return [InfLinePoint(l.a)] + [AffinePoint(x, (l.a * x + l.b) % q) for x in range(q)]

    def line_vertices(self, l: PlaneLine) -> list[int]:
        """Point indices of ``l``, sorted ascending."""
        return sorted(self.point_index[p] for p in self.line_points(l))

    @cached_property
    def _lines_through(self) -> dict[PlanePoint, list[PlaneLine]]:
        through: dict[PlanePoint, list[PlaneLine]] = {p: [] for p in self.points}
        for l in self.lines:
            for p in self.line_points(l):
                through[p].append(l)
        return through

    def lines_through(self, p: PlanePoint) -> list[PlaneLine]:
        return list(self._lines_through[p])

    def line_intersection(self, l: PlaneLine, m: PlaneLine) -> PlanePoint:
        """The unique common point of two distinct lines, in closed form."""
        if l == m:
            raise ValueError(f"intersection of a line with itself is undefined: {l}")
        q = self.q
        if isinstance(m, InfinityLine) or (
            isinstance(m, VerticalLine) and isinstance(l, SlopedLine)
        ):
            l, m = m, l
        if isinstance(l, InfinityLine):
            if isinstance(m, VerticalLine):
                return InfinityPoint()
            return InfLinePoint(m.a)
        if isinstance(l, VerticalLine):
            if isinstance(m, VerticalLine):
                return InfinityPoint()
            return AffinePoint(l.i, (m.a * l.i + m.b) % q)
        # both sloped
        if l.a == m.a:
            return InfLinePoint(l.a)
        x = (m.b - l.b) * mod_inverse(l.a - m.a, q) % q
        return AffinePoint(x, (l.a * x + l.b) % q)


def build_plane(q: int) -> ProjectivePlane:
    return ProjectivePlane(q)
