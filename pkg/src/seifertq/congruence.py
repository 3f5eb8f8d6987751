"""Modular arithmetic underlying the fiber congruence system.

For a symbol with fibers (a_j, b_j), write b_j* for the inverse of b_j modulo
a_j reduced into {0, ..., a_j - 1}.  The central object is the system

    gamma + mu_j * b_j*  ==  0  (mod a_j)      for all j,

over gamma in {1, ..., A - 1} with A = lcm(a_j) and sign vectors
mu in {+1, -1}^n.  Solutions (gamma, mu) index the summands of the
Reshetikhin-Turaev sum of the doubled symbol that survive total cancellation,
so the solvability of this system is exactly what a growth certificate
records.

The solution set is closed under the involution (gamma, mu) ->
(A - gamma, -mu); fibers with a_j = 1 impose no constraint and contribute a
free sign, doubling the solution count per unit fiber.

Dedekind sums follow the convention

    s(b, a) = (1/4a) * sum_{l=1}^{a-1} cot(pi*l/a) * cot(pi*l*b/a),

computed exactly through the equivalent sawtooth form
s(b, a) = sum ((l/a)) ((lb/a)) with ((x)) = x - floor(x) - 1/2 off the
integers and 0 on them.  Every constructed value is cross-checked against
the floating-point cotangent sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Any, Optional, Sequence

from .errors import (
    DegenerateSystemError,
    DomainError,
    NonInvertibleError,
    NumericInconsistencyError,
)

__all__ = [
    "mod_inverse",
    "dedekind_sum",
    "system_modulus",
    "solve_system",
    "CongruenceCertificate",
    "enumerate_solutions",
    "SystemClassification",
    "classify_system",
    "certificate_to_dict",
]

Fiber = tuple[int, int]


def mod_inverse(b: int, a: int) -> int:
    """Inverse of b modulo a, reduced into {0, ..., a-1}; 0 when a = 1."""
    if a < 1:
        raise DomainError(f"modulus must be >= 1, got {a}")
    try:
        return pow(b, -1, a)
    except ValueError as exc:
        raise NonInvertibleError(f"{b} is not invertible modulo {a}") from exc


def _sawtooth(x: Fraction) -> Fraction:
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)


def dedekind_sum(b: int, a: int) -> Fraction:
    """Dedekind sum s(b, a) as an exact rational.

    Requires a >= 1 and gcd(a, b) = 1.  The value is antisymmetric in b
    (s(-b, a) = -s(b, a)), periodic in b modulo a, and satisfies the
    reciprocity law

        s(b, a) + s(a, b) = -1/4 + (a/b + b/a + 1/(ab)) / 12.
    """
    if a < 1:
        raise DomainError(f"dedekind_sum needs a >= 1, got a={a}")
    if math.gcd(a, b) != 1:
        raise DomainError(f"dedekind_sum needs gcd(a, b) = 1, got ({b}, {a})")
    total = Fraction(0)
    for l in range(1, a):
        total += _sawtooth(Fraction(l, a)) * _sawtooth(Fraction(l * b, a))

    # cotangent cross-check; gcd(a, b) = 1 keeps every cotangent finite
    if a > 1:
        cot = math.fsum(
            (1.0 / math.tan(math.pi * l / a)) * (1.0 / math.tan(math.pi * l * b / a))
            for l in range(1, a)
        ) / (4.0 * a)
        if abs(float(total) - cot) > 1e-12:
            raise NumericInconsistencyError(
                f"dedekind_sum({b}, {a}): sawtooth {float(total)!r} vs cotangent {cot!r}"
            )
    return total


def _fiber_constraints(fibers: Sequence[Fiber]) -> list[tuple[int, int]]:
    """(modulus, b*) per fiber; validates multiplicities and coprimality."""
    out = []
    for a, b in fibers:
        if a < 1:
            raise DomainError(f"fiber ({a}, {b}) has multiplicity < 1")
        out.append((a, mod_inverse(b % a, a)))
    return out


def system_modulus(fibers: Sequence[Fiber]) -> int:
    """A = lcm of the fiber multiplicities (1 for an empty list)."""
    return math.lcm(*(a for a, _ in _fiber_constraints(fibers)))


def solve_system(fibers: Sequence[Fiber], mu: Sequence[int]) -> Optional[tuple[int, int]]:
    """Solve gamma + mu_j b_j* == 0 (mod a_j) for all j by iterated CRT.

    Returns (gamma, A) with gamma the least non-negative solution modulo
    A = lcm(a_j), or None when the system is incompatible.  Compatibility of
    a pair of congruences is the pairwise condition
    mu_s b_s* == mu_t b_t* (mod gcd(a_s, a_t)); the iterated merge below
    realizes exactly that criterion.
    """
    if len(mu) != len(fibers):
        raise DomainError(f"sign vector length {len(mu)} != fiber count {len(fibers)}")
    if any(m not in (1, -1) for m in mu):
        raise DomainError(f"sign vector entries must be +-1, got {tuple(mu)}")
    residue, modulus = 0, 1
    for (a, bstar), m in zip(_fiber_constraints(fibers), mu):
        target = (-m * bstar) % a
        g = math.gcd(modulus, a)
        if (target - residue) % g != 0:
            return None
        step = modulus // g
        lift = ((target - residue) // g * mod_inverse(step % (a // g), a // g)) % (a // g)
        residue += modulus * lift
        modulus = math.lcm(modulus, a)
        residue %= modulus
    return residue, modulus


@dataclass(frozen=True)
class CongruenceCertificate:
    """Witness that the fiber congruence system is solvable.

    gamma/mu is one solution (the least gamma, ties broken by sign vector);
    set_b lists every solution (gamma, mu) with gamma in {1, ..., A-1},
    sorted.  modulus is A = lcm(a_j).  degenerate marks systems with no
    fiber of multiplicity >= 2, where the gamma range is empty by convention
    and the certificate carries no solutions.
    """

    gamma: int
    mu: tuple[int, ...]
    modulus: int
    set_b: tuple[tuple[int, tuple[int, ...]], ...]
    degenerate: bool = False

    @property
    def cardinality(self) -> int:
        return len(self.set_b)


def enumerate_solutions(fibers: Sequence[Fiber]) -> Optional[CongruenceCertificate]:
    """All solutions of the congruence system, or None when there are none.

    A symbol with no fiber of multiplicity >= 2 yields a degenerate
    certificate: A = 1 (or every congruence vacuous), an empty solution set,
    and gamma = 0 as a placeholder.
    """
    constraints = _fiber_constraints(fibers)
    n = len(fibers)
    if all(a == 1 for a, _ in constraints):
        return CongruenceCertificate(
            gamma=0, mu=(1,) * n, modulus=1, set_b=(), degenerate=True
        )
    solutions = []
    for mu in product((1, -1), repeat=n):
        solved = solve_system(fibers, mu)
        if solved is not None and solved[0] != 0:
            solutions.append((solved[0], mu))
    if not solutions:
        return None
    solutions.sort()
    gamma, mu = solutions[0]
    modulus = math.lcm(*(a for a, _ in constraints))
    return CongruenceCertificate(
        gamma=gamma, mu=mu, modulus=modulus, set_b=tuple(solutions)
    )


@dataclass(frozen=True)
class SystemClassification:
    """Which sufficient solvability condition a fiber list satisfies.

    case is one of:
      'pairwise-coprime' : the a_j are pairwise coprime (solvable for every
                           sign vector; 2^n solutions);
      'equal-moduli'     : all multiple fibers share one modulus a and the
                           mu_j b_j* can be made congruent mod a;
      'pairwise-gcd'     : solvable by the general pairwise-gcd criterion;
      'no-solution'      : the system is incompatible for every sign vector.
    """

    case: str
    certificate: Optional[CongruenceCertificate]
    warnings: tuple[str, ...] = ()


def classify_system(fibers: Sequence[Fiber]) -> SystemClassification:
    """Classify the congruence system attached to a fiber list."""
    constraints = _fiber_constraints(fibers)
    certificate = enumerate_solutions(fibers)
    moduli = [a for a, _ in constraints]

    warnings = []
    if certificate is not None and certificate.modulus % 2 == 0:
        warnings.append(
            f"A = {certificate.modulus} is even; no odd level r is divisible by A"
        )
    if certificate is not None and certificate.degenerate:
        warnings.append("no fiber of multiplicity >= 2: congruence system is vacuous")

    pairwise_coprime = all(
        math.gcd(moduli[s], moduli[t]) == 1
        for s in range(len(moduli))
        for t in range(s + 1, len(moduli))
    )
    if pairwise_coprime:
        case = "pairwise-coprime"
    else:
        multiple = [(a, bs) for a, bs in constraints if a >= 2]
        all_equal = len({a for a, _ in multiple}) == 1
        if all_equal and certificate is not None:
            case = "equal-moduli"
        elif certificate is not None:
            case = "pairwise-gcd"
        else:
            case = "no-solution"
    return SystemClassification(
        case=case, certificate=certificate, warnings=tuple(warnings)
    )


def certificate_to_dict(certificate: CongruenceCertificate) -> dict[str, Any]:
    return {
        "gamma": certificate.gamma,
        "mu": list(certificate.mu),
        "modulus": certificate.modulus,
        "set_B": [[gamma, list(mu)] for gamma, mu in certificate.set_b],
        "cardinality": certificate.cardinality,
        "degenerate": certificate.degenerate,
    }
