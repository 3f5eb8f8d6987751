"""Seifert symbols for oriented Seifert fibered 3-manifolds.

A Seifert fibered space over a closed base surface is presented here by an
unnormalized symbol

    (epsilon, g; (a_1, b_1), ..., (a_n, b_n))

where epsilon is 'o' for an orientable base of genus g > 0 and 'n' for a
non-orientable base of genus g > 0, and each pair of coprime integers
(a_j, b_j) records a fiber with multiplicity a_j >= 1 (a_j = 1 fibers are
ordinary, a_j >= 2 are exceptional).  A symbol may additionally be flagged as
having boundary, in which case the base surface has one boundary circle and
the manifold is a Seifert fibration over a surface with boundary.

Unnormalized symbols are not unique.  Three moves preserve the fibration:

  1. add or delete a fiber (1, 0);
  2. replace a transient pair (0, +-1) by (0, -+1);
  3. replace (a_j, b_j) by (a_j, b_j + k_j * a_j), where the integers k_j
     must satisfy sum(k_j) = 0 when the symbol is closed (with boundary the
     shifts are unconstrained).

``normalize`` reduces a symbol to a canonical representative under these
moves.  The rational Euler number e(M) = -sum(b_j / a_j) is a complete
obstruction bookkeeping quantity for closed symbols and is preserved by the
moves; orientation reversal negates every b_j and hence e(M).

The double of a bounded symbol glues two copies of the manifold along their
boundary: D(M) doubles the base genus and adjoins the orientation-reversed
fibers, giving the closed symbol

    (epsilon, 2g; (a_1, b_1), ..., (a_n, b_n), (a_1, -b_1), ..., (a_n, -b_n))

whose Euler number vanishes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Iterable

from .errors import DomainError, MalformedInputError

__all__ = [
    "SeifertSymbol",
    "euler_number",
    "orbifold_euler_characteristic",
    "double",
    "reverse_orientation",
    "normalize",
    "symbol_to_dict",
    "symbol_from_dict",
    "symbol_to_json",
    "symbol_from_json",
]


@dataclass(frozen=True)
class SeifertSymbol:
    """An unnormalized Seifert symbol.

    Attributes:
        epsilon: 'o' (orientable base) or 'n' (non-orientable base).
        genus: genus of the base surface, > 0.
        fibers: tuple of (a, b) pairs, gcd(a, b) = 1, a >= 0.  Pairs with
            a = 0 (necessarily (0, +-1)) are legal in a symbol but rejected
            by every invariant computation; they exist so that normalization
            moves can be expressed.
        boundary: True if the base surface has a boundary circle.
    """

    epsilon: str
    genus: int
    fibers: tuple[tuple[int, int], ...] = field(default=())
    boundary: bool = False

    def __post_init__(self) -> None:
        if self.epsilon not in ("o", "n"):
            raise DomainError(f"epsilon must be 'o' or 'n', got {self.epsilon!r}")
        if not isinstance(self.genus, int) or self.genus <= 0:
            raise DomainError(f"genus must be a positive integer, got {self.genus!r}")
        fibers = tuple((int(a), int(b)) for a, b in self.fibers)
        object.__setattr__(self, "fibers", fibers)
        for a, b in fibers:
            if a < 0:
                raise DomainError(f"fiber multiplicity must be >= 0, got ({a}, {b})")
            if math.gcd(a, b) != 1:
                raise DomainError(f"fiber ({a}, {b}) is not a coprime pair")

    @property
    def fiber_count(self) -> int:
        return len(self.fibers)

    @property
    def has_boundary(self) -> bool:
        return self.boundary

    def __str__(self) -> str:
        fib = ", ".join(f"({a},{b})" for a, b in self.fibers)
        tail = "; boundary" if self.boundary else ""
        return f"({self.epsilon}, {self.genus}; [{fib}]{tail})"


def _require_multiplicities(symbol: SeifertSymbol) -> None:
    for a, b in symbol.fibers:
        if a < 1:
            raise DomainError(
                f"fiber ({a}, {b}) has multiplicity 0; normalize the symbol first"
            )


def euler_number(symbol: SeifertSymbol) -> Fraction:
    """Rational Euler number e(M) = -sum(b_j / a_j), exact."""
    _require_multiplicities(symbol)
    return -sum((Fraction(b, a) for a, b in symbol.fibers), start=Fraction(0))


def orbifold_euler_characteristic(symbol: SeifertSymbol) -> Fraction:
    """Orbifold Euler characteristic 2 - 2g - sum(1 - 1/a_j) of the base.

    The genus enters through 2 - 2g for both base types; the non-orientable
    base uses the same convention as the orientable one in this library.
    """
    _require_multiplicities(symbol)
    return (
        2
        - 2 * symbol.genus
        - sum((1 - Fraction(1, a) for a, _ in symbol.fibers), start=Fraction(0))
    )


def double(symbol: SeifertSymbol) -> SeifertSymbol:
    """Double of a bounded symbol along its boundary.

    Doubles the base genus and adjoins the orientation-reversed fibers; the
    result is closed and has Euler number 0.
    """
    if not symbol.has_boundary:
        raise DomainError("double() requires a symbol with boundary")
    mirrored = tuple((a, -b) for a, b in symbol.fibers)
    return SeifertSymbol(
        epsilon=symbol.epsilon,
        genus=2 * symbol.genus,
        fibers=symbol.fibers + mirrored,
        boundary=False,
    )


def reverse_orientation(symbol: SeifertSymbol) -> SeifertSymbol:
    """The same fibration with reversed orientation: every b_j is negated."""
    return replace(symbol, fibers=tuple((a, -b) for a, b in symbol.fibers))


def normalize(symbol: SeifertSymbol) -> SeifertSymbol:
    """Canonical representative of a symbol under the three moves.

    Steps: (0, -1) pairs become (0, 1); input (1, 0) pairs are dropped; each
    b_j is reduced into 0 <= b_j < a_j.  For closed symbols the reduction
    shifts must cancel, so the residual total shift is carried on the last
    fiber of multiplicity >= 2 (unit fibers always reduce to (1, 0) and are
    dropped; only when no multiple fiber exists does the last unit fiber keep
    the residual).  Idempotent, and equivalent symbols share one canonical
    form.
    """
    fibers = [(a, 1) if a == 0 else (a, b) for a, b in symbol.fibers]
    fibers = [(a, b) for a, b in fibers if (a, b) != (1, 0)]

    if symbol.has_boundary:
        reduced = [(a, b % a) if a >= 1 else (a, b) for a, b in fibers]
    else:
        carriers = [j for j, (a, _) in enumerate(fibers) if a >= 2]
        if not carriers:
            carriers = [j for j, (a, _) in enumerate(fibers) if a >= 1]
        carrier = carriers[-1] if carriers else None
        reduced = []
        total_shift = 0
        for j, (a, b) in enumerate(fibers):
            if a == 0 or j == carrier:
                reduced.append((a, b))
                continue
            bp = b % a
            total_shift += (bp - b) // a
            reduced.append((a, bp))
        if carrier is not None:
            a, b = reduced[carrier]
            # the carrier absorbs k = -total_shift so the shifts sum to zero
            reduced[carrier] = (a, b - total_shift * a)

    reduced = [(a, b) for a, b in reduced if (a, b) != (1, 0)]
    return replace(symbol, fibers=tuple(reduced))


# -- serialization ------------------------------------------------------------

def symbol_to_dict(symbol: SeifertSymbol) -> dict[str, Any]:
    return {
        "epsilon": symbol.epsilon,
        "genus": symbol.genus,
        "fibers": [[a, b] for a, b in symbol.fibers],
        "boundary": symbol.boundary,
    }


def symbol_from_dict(data: Any) -> SeifertSymbol:
    if not isinstance(data, dict):
        raise MalformedInputError(f"symbol must be an object, got {type(data).__name__}")
    missing = {"epsilon", "genus", "fibers", "boundary"} - set(data)
    if missing:
        raise MalformedInputError(f"symbol is missing fields: {sorted(missing)}")
    fibers = data["fibers"]
    if not isinstance(fibers, Iterable) or isinstance(fibers, (str, bytes)):
        raise MalformedInputError("fibers must be a list of [a, b] pairs")
    pairs = []
    for entry in fibers:
        entry = list(entry)
        if len(entry) != 2 or not all(isinstance(x, int) for x in entry):
            raise MalformedInputError(f"bad fiber entry {entry!r}")
        pairs.append((entry[0], entry[1]))
    genus = data["genus"]
    if not isinstance(genus, int) or isinstance(genus, bool):
        raise MalformedInputError(f"genus must be an integer, got {genus!r}")
    if not isinstance(data["boundary"], bool):
        raise MalformedInputError("boundary must be true or false")
    return SeifertSymbol(
        epsilon=data["epsilon"],
        genus=genus,
        fibers=tuple(pairs),
        boundary=data["boundary"],
    )


def symbol_to_json(symbol: SeifertSymbol) -> str:
    return json.dumps(symbol_to_dict(symbol), sort_keys=True)


def symbol_from_json(text: str) -> SeifertSymbol:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"invalid JSON for symbol: {exc}") from exc
    return symbol_from_dict(data)
