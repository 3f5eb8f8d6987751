"""Congruence systems, certificates, and Dedekind sums.

The solver is cross-checked against a brute-force oracle that scans every
residue class modulo lcm(a_j) directly.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product

import pytest

from seifertq import (
    CongruenceCertificate,
    DomainError,
    NonInvertibleError,
    classify_system,
    dedekind_sum,
    enumerate_solutions,
    mod_inverse,
    solve_system,
    system_modulus,
)
from seifertq.congruence import certificate_to_dict


# -- oracles -------------------------------------------------------------------


def brute_solutions(fibers, mu):
    """Every gamma in {0..A-1} satisfying gamma + mu_j b_j* == 0 (mod a_j)."""
    A = math.lcm(*(a for a, _ in fibers))
    inverses = [pow(b % a, -1, a) if a > 1 else 0 for a, b in fibers]
    return [
        gamma
        for gamma in range(A)
        if all((gamma + m * bs) % a == 0 for (a, _), m, bs in zip(fibers, mu, inverses))
    ]


def cotangent_dedekind(b, a):
    """Float s(b, a) via the cotangent sum, independent of the exact code path."""
    if a == 1:
        return 0.0
    return math.fsum(
        (1.0 / math.tan(math.pi * l / a)) * (1.0 / math.tan(math.pi * l * b / a))
        for l in range(1, a)
    ) / (4.0 * a)


# -- mod_inverse ----------------------------------------------------------------


@pytest.mark.parametrize("a", [2, 3, 5, 7, 12, 30])
def test_mod_inverse_inverts(a):
    for b in range(1, a):
        if math.gcd(a, b) == 1:
            inv = mod_inverse(b, a)
            assert 0 <= inv < a
            assert (b * inv) % a == 1


def test_mod_inverse_trivial_modulus():
    assert mod_inverse(7, 1) == 0


def test_mod_inverse_rejects_non_coprime():
    with pytest.raises(NonInvertibleError):
        mod_inverse(4, 6)
    with pytest.raises(DomainError):
        mod_inverse(1, 0)


# -- dedekind sums ---------------------------------------------------------------


def test_dedekind_known_values():
    assert dedekind_sum(1, 3) == Fraction(1, 18)
    assert dedekind_sum(1, 1) == 0
    assert dedekind_sum(0, 1) == 0
    assert dedekind_sum(1, 2) == 0


def test_dedekind_antisymmetry_and_periodicity():
    for a in (3, 5, 7, 12):
        for b in range(1, a):
            if math.gcd(a, b) == 1:
                assert dedekind_sum(a - b, a) == -dedekind_sum(b, a)
                assert dedekind_sum(b + a, a) == dedekind_sum(b, a)
                assert dedekind_sum(-b, a) == -dedekind_sum(b, a)


def test_dedekind_reciprocity():
    for a in range(1, 25):
        for b in range(1, 25):
            if math.gcd(a, b) == 1:
                lhs = dedekind_sum(b, a) + dedekind_sum(a, b)
                rhs = Fraction(-1, 4) + (
                    Fraction(a, b) + Fraction(b, a) + Fraction(1, a * b)
                ) / 12
                assert lhs == rhs, (a, b)


def test_dedekind_matches_cotangent_oracle():
    for a in (5, 7, 9, 31):
        for b in range(1, a):
            if math.gcd(a, b) == 1:
                assert float(dedekind_sum(b, a)) == pytest.approx(
                    cotangent_dedekind(b, a), abs=1e-11
                )


def test_dedekind_rejects_bad_input():
    with pytest.raises(DomainError):
        dedekind_sum(2, 4)
    with pytest.raises(DomainError):
        dedekind_sum(1, 0)


# -- solve_system ----------------------------------------------------------------


@pytest.mark.parametrize(
    "fibers",
    [
        ((3, 1), (5, 1)),
        ((5, 1), (5, 3)),
        ((5, 1), (5, 4)),
        ((4, 1), (6, 1)),
        ((2, 1), (3, 2), (5, 4)),
        ((9, 2), (6, 5)),
    ],
)
def test_solve_system_matches_brute_force(fibers):
    for mu in product((1, -1), repeat=len(fibers)):
        expected = brute_solutions(fibers, mu)
        got = solve_system(fibers, mu)
        if not expected:
            assert got is None
        else:
            gamma, modulus = got
            assert modulus == math.lcm(*(a for a, _ in fibers))
            assert expected == [gamma]  # CRT solution is unique modulo A


def test_solve_system_validates_mu():
    with pytest.raises(DomainError):
        solve_system(((3, 1),), (1, 1))
    with pytest.raises(DomainError):
        solve_system(((3, 1),), (2,))


def test_system_modulus():
    assert system_modulus(((3, 1), (5, 1))) == 15
    assert system_modulus(((4, 1), (6, 1))) == 12
    assert system_modulus(()) == 1


# -- enumerate_solutions -----------------------------------------------------------


def test_solution_set_frozen_example():
    cert = enumerate_solutions(((3, 1), (5, 1)))
    assert cert is not None
    assert cert.modulus == 15
    assert cert.set_b == (
        (1, (-1, -1)),
        (4, (-1, 1)),
        (11, (1, -1)),
        (14, (1, 1)),
    )
    assert cert.cardinality == 4
    assert (cert.gamma, cert.mu) == (1, (-1, -1))


def test_solution_set_closed_under_involution():
    for fibers in [((3, 1), (5, 1)), ((5, 1), (5, 4)), ((2, 1), (3, 1), (5, 1))]:
        cert = enumerate_solutions(fibers)
        members = set(cert.set_b)
        for gamma, mu in members:
            mirrored = (cert.modulus - gamma, tuple(-m for m in mu))
            assert mirrored in members


@pytest.mark.parametrize(
    "fibers",
    [
        ((2, 1), (3, 1)),
        ((2, 1), (3, 1), (5, 1)),
        ((3, 2), (5, 3)),
        ((2, 1), (3, 2), (5, 4), (7, 1)),
    ],
)
def test_pairwise_coprime_cardinality_is_power_of_two(fibers):
    cert = enumerate_solutions(fibers)
    assert cert.cardinality == 2 ** len(fibers)


def test_no_solution_system_returns_none():
    assert enumerate_solutions(((5, 1), (5, 3))) is None


def test_degenerate_system():
    cert = enumerate_solutions(((1, 0), (1, 5)))
    assert cert.degenerate
    assert cert.modulus == 1
    assert cert.set_b == ()
    assert cert.cardinality == 0


def test_unit_fibers_double_the_solution_count():
    plain = enumerate_solutions(((3, 1),))
    padded = enumerate_solutions(((3, 1), (1, 0)))
    assert padded.cardinality == 2 * plain.cardinality


# -- classification ----------------------------------------------------------------


def test_classify_pairwise_coprime():
    cls = classify_system(((3, 1), (5, 1), (7, 1)))
    assert cls.case == "pairwise-coprime"
    assert cls.certificate is not None
    assert cls.warnings == ()


def test_classify_even_modulus_warns():
    cls = classify_system(((2, 1), (3, 1), (5, 1)))
    assert cls.case == "pairwise-coprime"
    assert any("even" in warning for warning in cls.warnings)


def test_classify_equal_moduli():
    cls = classify_system(((5, 1), (5, 4)))
    assert cls.case == "equal-moduli"
    assert cls.certificate is not None
    assert cls.certificate.cardinality == 2


def test_classify_pairwise_gcd_with_even_modulus_warning():
    cls = classify_system(((4, 1), (6, 1)))
    assert cls.case == "pairwise-gcd"
    assert cls.certificate is not None
    assert any("even" in w for w in cls.warnings)


def test_classify_no_solution():
    cls = classify_system(((5, 1), (5, 3)))
    assert cls.case == "no-solution"
    assert cls.certificate is None


def test_classify_degenerate_warns():
    cls = classify_system(((1, 0),))
    assert cls.certificate.degenerate
    assert any("vacuous" in w for w in cls.warnings)


def test_certificate_serialization():
    cert = enumerate_solutions(((3, 1), (5, 1)))
    data = certificate_to_dict(cert)
    assert data["gamma"] == 1
    assert data["modulus"] == 15
    assert data["cardinality"] == 4
    assert data["set_B"][0] == [1, [-1, -1]]
    assert data["degenerate"] is False
