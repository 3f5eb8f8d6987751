"""Lower bounds and asymptotics of the real invariant along level sequences.

For a bounded symbol whose congruence system has solution set B with modulus
A = lcm(a_j), the invariant of the orientation double at a level r = k A
(odd) dominates

    bound(r) = (k A)^{a_eps g - 1} * 2 |B| k prod_j a_j / 2^{2n + a_eps g - 1},

and the closed double's modulus-squared invariant dominates bound(r)^2.
Both grow polynomially in r whenever B is nonempty, which forces the
normalized logarithm

    LTV(r) = (2 pi / r) * log |TV_r|

to converge to zero along the sequence r = A, 3A, 5A, ...; the scan helper
samples LTV at given levels and least-squares fits log |TV_r| against log r,
estimating the polynomial growth exponent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .congruence import enumerate_solutions, system_modulus
from .errors import DegenerateSystemError, DomainError
from .symbols import SeifertSymbol, double
from .tv import tv_bounded, tv_closed

__all__ = ["LowerBound", "lower_bound", "LemmaCheck", "verify_lemma", "LtvSample", "ltv_scan"]


@dataclass(frozen=True)
class LowerBound:
    value: float
    r: int
    modulus: int
    multiplier: int
    cardinality: int
    warnings: tuple[str, ...] = ()


def lower_bound(symbol: SeifertSymbol, r: int) -> LowerBound:
    """Growth lower bound for a bounded symbol at an admissible level r = k A."""
    if not symbol.has_boundary:
        raise DomainError("the lower bound applies to symbols with boundary")
    if not symbol.fibers or any(a < 2 for a, _ in symbol.fibers):
        raise DomainError(
            "the lower bound needs at least one fiber and every multiplicity >= 2; "
            "normalize the symbol to absorb unit fibers"
        )
    if r < 3 or r % 2 == 0:
        raise DomainError(f"level r must be an odd integer >= 3, got {r!r}")
    A = system_modulus(symbol.fibers)
    if r % A:
        raise DomainError(f"level {r} is not a multiple of the system modulus {A}")
    k = r // A

    n = symbol.fiber_count
    a_eps = 2 if symbol.epsilon == "o" else 1
    certificate = enumerate_solutions(symbol.fibers)
    cardinality = 0 if certificate is None else certificate.cardinality
    if cardinality == 0:
        raise DegenerateSystemError(
            "the congruence system has no solutions (B is empty), so the "
            "divisibility hypothesis fails and no positive lower bound exists"
        )
    value = (
        float(r) ** (a_eps * symbol.genus - 1)
        * 2.0
        * cardinality
        * k
        * math.prod(a for a, _ in symbol.fibers)
        / 2.0 ** (2 * n + a_eps * symbol.genus - 1)
    )
    return LowerBound(
        value=value,
        r=r,
        modulus=A,
        multiplier=k,
        cardinality=cardinality,
    )


@dataclass(frozen=True)
class LemmaCheck:
    r: int
    bound: float
    tv_bounded_value: float
    tv_closed_double_value: float

    @property
    def satisfied(self) -> bool:
        return (
            self.tv_bounded_value >= self.bound
            and self.tv_closed_double_value >= self.bound**2
        )


def verify_lemma(symbol: SeifertSymbol, r: int) -> LemmaCheck:
    """Compare the bound against the actual invariants at level r."""
    bound = lower_bound(symbol, r)
    open_value = tv_bounded(symbol, r)
    closed_value = tv_closed(double(symbol), r)
    return LemmaCheck(
        r=r,
        bound=bound.value,
        tv_bounded_value=float(open_value.value.real),
        tv_closed_double_value=float(closed_value.value.real),
    )


@dataclass(frozen=True)
class LtvSample:
    r: int
    tv_value: float
    ltv: float


def ltv_scan(symbol: SeifertSymbol, levels: list[int]) -> tuple[tuple[LtvSample, ...], float | None]:
    """Sample LTV(r) = (2 pi / r) log |TV_r| at the given levels.

    Returns the samples and, when at least two levels are given, the
    least-squares slope of log |TV_r| against log r (None otherwise).  The
    slope estimates the polynomial growth exponent of the invariant; a
    finite exponent is what forces LTV to 0 along the sampled sequence.
    """
    if not levels:
        raise DomainError("ltv_scan needs at least one level")
    samples = []
    for r in levels:
        inv = tv_bounded(symbol, r) if symbol.has_boundary else tv_closed(symbol, r)
        magnitude = abs(float(inv.value.real))
        if magnitude == 0.0:
            raise DomainError(f"invariant vanishes at r={r}; LTV is undefined")
        samples.append(LtvSample(r=r, tv_value=float(inv.value.real), ltv=2.0 * math.pi / r * math.log(magnitude)))

    slope: float | None = None
    if len(samples) >= 2:
        xs = np.log([s.r for s in samples])
        ys = np.log([abs(s.tv_value) for s in samples])
        slope = float(np.polyfit(xs, ys, 1)[0])
    return tuple(samples), slope
