"""Quantum SU(2) data at the root of unity q = exp(2*pi*i/r), r odd.

Conventions (fixed once here, used everywhere):

* level r is an odd integer >= 3; the color set is
  I_r = {0, 2, 4, ..., r - 3}, of size (r - 1) / 2 (colors are twice the
  spins that survive at odd levels);
* quantum integers are kept real:  {n} := 2 sin(2 pi n / r),
  with zeta := {1} = 2 sin(2 pi / r) > 0 and balanced brackets
  [n] := {n} / {1};
* quantum factorials {n}! = prod_{i=1..n} {i}, {0}! = 1.  {r} = 0, so
  factorials vanish from n = r on; internally the caches extend beyond r
  because summation numerators reach {z+1}! with z+1 up to 2r - 5, while
  every denominator argument stays below r (where nothing vanishes);
* eta = 2 sin(2 pi / r) / sqrt(r) is the sphere normalization entering
  state sums and the bounded bridge.

A triple (i, j, k) of colors is admissible when it satisfies the triangle
inequalities and i + j + k <= 2 (r - 2).  For an admissible triple,

    Delta(i, j, k) = sqrt(zeta) * sqrt({P1}! {P2}! {P3}! / {S+1}!)

with P1 = (i+j-k)/2 etc., S = (i+j+k)/2, taking the principal square root
(the radicand may be negative, making Delta purely imaginary; only even
powers of Delta are convention-independent).

The six-j symbol of a tuple (i, j, k, l, m, n), with faces
(i,j,k), (j,l,n), (i,m,n), (k,l,m), is

    |i j k; l m n| = zeta^{-1} (sqrt(-1))^lambda prod_faces Delta(F)
                     * sum_z (-1)^z {z+1}! / (prod_b {z-T_b}! prod_c {Q_c-z}!),

lambda = i+j+k+l+m+n, T_b the half-sums of the faces, Q_c the half-sums of
the three quadrilaterals, z running from max T to min Q (an empty range
gives 0).  The all-zero tuple evaluates to 1.

State sums use the square-consistent regrouping of the same data: the theta
graph theta(i,j,k) = (-1)^S [S+1]! [P1]! [P2]! [P3]! / ([i]![j]![k]!) and
the tetrahedral net

    Tet = (prod_{b,c} [Q_c - T_b]! / prod_edges [e]!) *
          sum_z (-1)^z [z+1]! / (prod_b [z-T_b]! prod_c [Q_c-z]!).

Because the twelve numbers Q_c - T_b are exactly the twelve face parameters
P, one has  |i j k; l m n|^2 = Tet^2 / prod_faces theta  identically, which
is why a closed state sum may divide by theta once per face instead of
carrying square roots.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

from .errors import DomainError

__all__ = [
    "RootContext",
    "quantum_integer",
    "quantum_factorial",
    "is_admissible",
    "delta",
    "theta",
    "tet_symbol",
    "six_j",
]

# index slots of the four faces and three quadrilaterals of (i,j,k,l,m,n)
_FACES = ((0, 1, 2), (1, 3, 5), (0, 4, 5), (2, 3, 4))
_QUADS = ((0, 1, 3, 4), (0, 2, 3, 5), (1, 2, 4, 5))


def _two_sin_two_pi(n: int, r: int) -> float:
    """2 sin(2 pi n / r) with the angle reduced exactly into [0, pi/2].

    Reducing the rational multiple of pi before rounding keeps half-turn
    symmetries exact in floating point: {n} = 0 exactly when r divides n,
    {r - n} = -{n} bit for bit, and small levels hit correctly rounded
    algebraic values (at r = 3, {1} equals math.sqrt(3), so eta = 1.0).
    """
    x = Fraction(2 * n, r) % 2  # the angle is pi * x with x in [0, 2)
    sign = 1.0
    if x >= 1:  # sin(pi (1 + t)) = -sin(pi t)
        x -= 1
        sign = -1.0
    if 2 * x > 1:  # sin(pi (1 - t)) = sin(pi t)
        x = 1 - x
    return sign * 2.0 * math.sin(math.pi * float(x))


class RootContext:
    """Cached quantum data at level r (odd, >= 3)."""

    def __init__(self, r: int):
        if not isinstance(r, int) or r < 3 or r % 2 == 0:
            raise DomainError(f"level r must be an odd integer >= 3, got {r!r}")
        self.r = r
        self.zeta = _two_sin_two_pi(1, r)
        self.eta = self.zeta / math.sqrt(r)
        self.colors = tuple(range(0, r - 2, 2))

        # {n} and {n}! for 0 <= n <= 2r - 4 ({n} = 0 exactly at multiples of r)
        top = 2 * r - 3
        self._qint = [_two_sin_two_pi(n, r) for n in range(top + 1)]
        self._qfact = [1.0] * (top + 1)
        for n in range(1, top + 1):
            self._qfact[n] = self._qfact[n - 1] * self._qint[n]
        self._bracket = [v / self.zeta for v in self._qint]
        self._bfact = [1.0] * (top + 1)
        for n in range(1, top + 1):
            self._bfact[n] = self._bfact[n - 1] * self._bracket[n]

    def __repr__(self) -> str:
        return f"RootContext(r={self.r})"

    def _check_color(self, c: int) -> None:
        if c % 2 != 0 or not 0 <= c <= self.r - 3:
            raise DomainError(f"color {c} is not in I_{self.r} = {{0, 2, ..., {self.r - 3}}}")


def quantum_integer(ctx: RootContext, n: int) -> float:
    """{n} = 2 sin(2 pi n / r) for 0 <= n <= r."""
    if not 0 <= n <= ctx.r:
        raise DomainError(f"quantum_integer defined for 0 <= n <= r = {ctx.r}, got {n}")
    return ctx._qint[n]


def quantum_factorial(ctx: RootContext, n: int) -> float:
    """{n}! = {1}{2}...{n}, with {0}! = 1, for 0 <= n <= r."""
    if not 0 <= n <= ctx.r:
        raise DomainError(f"quantum_factorial defined for 0 <= n <= r = {ctx.r}, got {n}")
    return ctx._qfact[n]


def is_admissible(ctx: RootContext, i: int, j: int, k: int) -> bool:
    """Admissibility of a color triple at level r."""
    for c in (i, j, k):
        ctx._check_color(c)
    return (
        i <= j + k
        and j <= i + k
        and k <= i + j
        and i + j + k <= 2 * (ctx.r - 2)
    )


def _require_admissible(ctx: RootContext, i: int, j: int, k: int) -> None:
    if not is_admissible(ctx, i, j, k):
        raise DomainError(f"triple ({i}, {j}, {k}) is not admissible at r = {ctx.r}")


def delta(ctx: RootContext, i: int, j: int, k: int) -> complex:
    """Delta(i, j, k), principal square root; may be purely imaginary."""
    _require_admissible(ctx, i, j, k)
    s = (i + j + k) // 2
    rad = (
        ctx._qfact[(i + j - k) // 2]
        * ctx._qfact[(i + k - j) // 2]
        * ctx._qfact[(j + k - i) // 2]
        / ctx._qfact[s + 1]
    )
    return math.sqrt(ctx.zeta) * cmath.sqrt(complex(rad, 0.0))


def theta(ctx: RootContext, i: int, j: int, k: int) -> float:
    """Theta graph weight of an admissible triple (real)."""
    _require_admissible(ctx, i, j, k)
    s = (i + j + k) // 2
    sign = -1.0 if s % 2 else 1.0
    return (
        sign
        * ctx._bfact[s + 1]
        * ctx._bfact[(i + j - k) // 2]
        * ctx._bfact[(i + k - j) // 2]
        * ctx._bfact[(j + k - i) // 2]
        / (ctx._bfact[i] * ctx._bfact[j] * ctx._bfact[k])
    )


def _half_sums(tup: tuple[int, int, int, int, int, int]) -> tuple[list[int], list[int]]:
    T = [sum(tup[s] for s in face) // 2 for face in _FACES]
    Q = [sum(tup[s] for s in quad) // 2 for quad in _QUADS]
    return T, Q


def _validate_tuple(ctx: RootContext, tup: tuple[int, ...]) -> None:
    if len(tup) != 6:
        raise DomainError(f"six-j tuple must have 6 colors, got {len(tup)}")
    for face in _FACES:
        _require_admissible(ctx, *(tup[s] for s in face))


def tet_symbol(ctx: RootContext, *tup: int) -> float:
    """Tetrahedral net evaluation of an admissible tuple (real)."""
    _validate_tuple(ctx, tup)
    T, Q = _half_sums(tup)
    lo, hi = max(T), min(Q)
    if lo > hi:
        return 0.0
    interaction = math.prod(ctx._bfact[q - t] for q in Q for t in T)
    edges = math.prod(ctx._bfact[c] for c in tup)
    racah = 0.0
    for z in range(lo, hi + 1):
        term = ctx._bfact[z + 1]
        for t in T:
            term /= ctx._bfact[z - t]
        for q in Q:
            term /= ctx._bfact[q - z]
        racah += -term if z % 2 else term
    return interaction / edges * racah


def six_j(ctx: RootContext, *tup: int) -> complex:
    """Root-of-unity six-j symbol |i j k; l m n| of an admissible tuple.

    Symmetric under column permutations and simultaneous upper/lower
    exchange of two columns; the all-zero tuple gives 1.
    """
    _validate_tuple(ctx, tup)
    T, Q = _half_sums(tup)
    lo, hi = max(T), min(Q)
    if lo > hi:
        return 0.0j
    racah = 0.0
    for z in range(lo, hi + 1):
        term = ctx._qfact[z + 1]
        for t in T:
            term /= ctx._qfact[z - t]
        for q in Q:
            term /= ctx._qfact[q - z]
        racah += -term if z % 2 else term
    lam = sum(tup)
    prefactor = (1j ** lam) / ctx.zeta
    for face in _FACES:
        prefactor *= delta(ctx, *(tup[s] for s in face))
    return prefactor * racah
