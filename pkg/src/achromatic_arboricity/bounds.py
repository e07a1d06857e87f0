"""Upper and lower bounds on the achromatic arboricity of ``K_n``.

Upper bound: let ``x`` be the size of the smallest color class. Then
``k <= f(x) = n(n-1)/(2x)`` (the classes partition the edges) and
``k <= g(x) = x(n-x-1) + 1`` (counting classes that can meet the smallest
one), so ``k <= max_x min(f(x), g(x))``.

Lower bounds are constructive: projective-plane colorings for an odd prime
``q`` with ``q^2+q+1 <= n``, extended one vertex (one color) at a time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .projplane import NotPrimeError, is_prime

# A_alpha(K_n) for 2 <= n <= 7, re-derived by the exact solver.
KNOWN_EXACT = {2: 1, 3: 2, 4: 3, 5: 4, 6: 6, 7: 7}


def f_partition(n: int, x) -> Fraction:
    return Fraction(n * (n - 1), 2) / x


def g_incidence(n: int, x: int) -> int:
    return x * (n - x - 1) + 1


def upper_bound_lemma1(n: int) -> int:
    """``max`` over integer ``x >= 1`` of ``min(floor(f(x)), g(x))``, exactly.

    On ``1 <= x <= (n-1)/2`` the floor of ``f`` falls and ``g`` rises, so the
    minimum peaks where they cross; binary search finds that ``x``. Larger
    ``x`` cannot win: ``g(x) = g(n-1-x)`` while ``f(x) < f(n-1-x)``.
    """
    if n < 5:
        raise ValueError(f"the counting bound needs n >= 5, got {n}")
    m = n * (n - 1) // 2

    def value(x: int) -> int:
        return min(m // x, x * (n - x - 1) + 1)

    # first x in 1..hi with floor(f(x)) <= g(x)
    lo, hi = 1, (n - 1) // 2
    while lo < hi:
        mid = (lo + hi) // 2
        if m // mid <= mid * (n - mid - 1) + 1:
            hi = mid
        else:
            lo = mid + 1
    return max(value(x) for x in (lo - 1, lo) if x >= 1)


def upper_bound_scan(n: int) -> int:
    """Same bound by a plain scan over ``x = 1..n-2``."""
    if n < 5:
        raise ValueError(f"the counting bound needs n >= 5, got {n}")
    m = n * (n - 1) // 2
    return max(min(m // x, x * (n - x - 1) + 1) for x in range(1, n - 1))


def crossing_point(n: int) -> float:
    """Smallest positive ``x`` with ``f(x) = g(x)``, by bisection to float precision.

    Diagnostic only; the integer bound never uses it. The crossing sits near
    ``sqrt((n + 5/8)/2) + 1/4``.
    """
    if n < 5:
        raise ValueError(f"n must be >= 5, got {n}")

    def h(x: float) -> float:
        return n * (n - 1) / (2 * x) - (x * (n - x - 1) + 1)

    # h > 0 near 0; at the peak of g, h < 0 for every n >= 5
    lo, hi = 1e-9, (n - 1) / 2
    if h(hi) > 0:
        raise ArithmeticError(f"no crossing of f and g found for n={n}")
    while True:
        mid = (lo + hi) / 2
        if mid <= lo or mid >= hi:
            break
        if h(mid) > 0:
            lo = mid
        else:
            hi = mid
    return lo if abs(h(lo)) <= abs(h(hi)) else hi


x0_diagnostic = crossing_point


def asymptotic_upper(n: int) -> float:
    """Leading term ``n^(3/2) / sqrt(2)`` of the upper bound."""
    return n ** 1.5 / math.sqrt(2)


def lower_bound_prime(q: int) -> int:
    """Number of colors of the plane construction, ``(q+1)(q^2+q+2)/4``."""
    if not is_prime(q) or q == 2:
        raise NotPrimeError(f"q must be an odd prime, got {q}")
    return (q + 1) * (q * q + q + 2) // 4


def largest_plane_prime(n: int) -> int | None:
    """Largest odd prime ``q`` with ``q^2 + q + 1 <= n``, or None."""
    q = math.isqrt(n)
    while q >= 3:
        if q * q + q + 1 <= n and is_prime(q) and q % 2:
            return q
        q -= 1
    return None


@dataclass(frozen=True)
class LowerSource:
    """Where a lower bound comes from.

    ``kind`` is ``"known-exact"``, ``"arboricity"`` or ``"prime-construction"``;
    ``base_n`` is the order of the base witness and ``extended_by`` the number
    of vertices added to it, one color each.
    """

    kind: str
    base_n: int
    extended_by: int = 0
    q: int | None = None

    def __str__(self):
        name = {
            "known-exact": "KnownExact",
            "arboricity": "Arboricity",
            "prime-construction": f"PrimeConstruction({self.q})",
        }[self.kind]
        if self.extended_by:
            name += f" on K_{self.base_n} + {self.extended_by} vertices"
        return name


def best_lower_bound(n: int) -> tuple[int, LowerSource]:
    """Best witnessed lower bound on ``A_alpha(K_n)`` and its source.

    Candidates: ``ceil(n/2)`` (Hamiltonian paths), the exact value when
    ``n <= 7``, and any base coloring on ``K_b`` extended by one color per
    extra vertex. Bases are ``K_7`` with 7 colors and the plane coloring for
    the largest usable prime; a plane construction wins ties.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    candidates = [((n + 1) // 2, LowerSource("arboricity", n))]
    if n in KNOWN_EXACT:
        candidates.append((KNOWN_EXACT[n], LowerSource("known-exact", n)))
    elif n > 7:
        candidates.append((KNOWN_EXACT[7] + n - 7, LowerSource("known-exact", 7, n - 7)))
    q = largest_plane_prime(n)
    if q is not None:
        base = q * q + q + 1
        candidates.append(
            (lower_bound_prime(q) + n - base, LowerSource("prime-construction", base, n - base, q))
        )
    best = candidates[0]
    for cand in candidates[1:]:
        if cand[0] > best[0] or (cand[0] == best[0] and cand[1].kind == "prime-construction"):
            best = cand
    return best


@dataclass(frozen=True)
class BoundsSummary:
    """``upper`` is the counting bound for n >= 5 and the exact value below."""

    n: int
    upper: int
    lower: int
    lower_source: LowerSource
    exact: int | None = None

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "upper": self.upper,
            "lower": self.lower,
            "lower_source": str(self.lower_source),
            "exact": self.exact,
        }


def bounds_summary(n: int) -> BoundsSummary:
    lower, src = best_lower_bound(n)
    exact = KNOWN_EXACT.get(n)
    upper = upper_bound_lemma1(n) if n >= 5 else exact
    return BoundsSummary(n, upper, lower, src, exact)
