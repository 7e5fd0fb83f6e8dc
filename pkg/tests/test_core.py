import random
from fractions import Fraction
from math import comb, gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mwcpower import (
    DuplicateMember,
    EmptyCoalitionMember,
    EmptyFamily,
    NotAntichain,
    ValidationError,
    VoterSet,
    WeightedGame,
    ZeroDenominator,
    rational_reduce,
    validate_mwc_set,
)
from mwcpower.core import format_rational, members_of, parse_rational

from conftest import EEC_NAMES


def test_eec_mwc_set_validates():
    voters = VoterSet(EEC_NAMES)
    cands = [voters.coalition(c) for c in ("FGI", "FGBN", "FIBN", "GIBN")]
    system = validate_mwc_set(voters, cands)
    assert system.m == 4
    assert system.members == tuple(cands)


def test_not_antichain_reports_pair():
    voters = VoterSet.of_size(2)
    with pytest.raises(NotAntichain) as info:
        validate_mwc_set(voters, [0b01, 0b11])
    assert (info.value.i, info.value.j) == (0, 1)


@pytest.mark.parametrize(
    "cands, error",
    [([], EmptyFamily), ([0], EmptyCoalitionMember), ([0b01, 0b01], DuplicateMember)],
)
def test_structural_errors(cands, error):
    with pytest.raises(error):
        validate_mwc_set(VoterSet.of_size(2), cands)


def test_member_outside_voter_range():
    with pytest.raises(ValidationError):
        validate_mwc_set(VoterSet.of_size(2), [0b100])


def test_voter_set_rules():
    with pytest.raises(ValidationError):
        VoterSet(())
    with pytest.raises(ValidationError):
        VoterSet(("a", "a"))
    with pytest.raises(ValidationError):
        VoterSet(("a", ""))
    with pytest.raises(ValidationError, match="TooManyVoters"):
        VoterSet.of_size(65)
    assert VoterSet.of_size(64).grand == 2**64 - 1


def test_validation_idempotent_and_order_preserving():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(1, 8)
        pool = [rng.randrange(1, 1 << n) for _ in range(10)]
        chosen = []
        for c in pool:
            if c not in chosen and all((c & v) not in (c, v) for v in chosen):
                chosen.append(c)
        voters = VoterSet.of_size(n)
        first = validate_mwc_set(voters, chosen)
        assert list(first.members) == chosen
        assert validate_mwc_set(voters, first.members) == first
        for i in range(first.m):
            for j in range(i + 1, first.m):
                a, b = first.members[i], first.members[j]
                assert a & b not in (a, b)
        assert first.m <= comb(n, n // 2)


@pytest.mark.parametrize(
    "num, den, expected",
    [(7, 30, Fraction(7, 30)), (0, 5, Fraction(0, 1)), (-11, 30, Fraction(-11, 30)), (6, -4, Fraction(-3, 2))],
)
def test_rational_reduce(num, den, expected):
    value = rational_reduce(num, den)
    assert value == expected
    assert value.denominator > 0
    assert gcd(value.numerator, value.denominator) == 1


def test_zero_denominator():
    with pytest.raises(ZeroDenominator):
        rational_reduce(1, 0)
    with pytest.raises(ZeroDenominator):
        parse_rational("1/0")


def test_canonical_zero():
    z = rational_reduce(0, -7)
    assert (z.numerator, z.denominator) == (0, 1)


_big = st.integers(min_value=-(2**127), max_value=2**127 - 1)
_pos = st.integers(min_value=1, max_value=2**127 - 1)


@given(_big, _pos, _big, _pos)
def test_rational_arithmetic_matches_cross_multiplication(a, b, c, d):
    total = rational_reduce(a, b) + rational_reduce(c, d)
    num, den = a * d + c * b, b * d
    g = gcd(num, den)
    assert (total.numerator, total.denominator) == (num // g, den // g)
    product = rational_reduce(a, b) * rational_reduce(c, d)
    assert product * b * d == a * c
    assert (rational_reduce(a, b) < rational_reduce(c, d)) == (a * d < c * b)


def test_rational_arithmetic_random_pairs():
    rng = random.Random(11)
    for _ in range(1000):
        a, c = rng.randrange(-(2**127), 2**127), rng.randrange(-(2**127), 2**127)
        b, d = rng.randrange(1, 2**128), rng.randrange(1, 2**128)
        total = rational_reduce(a, b) + rational_reduce(c, d)
        assert total * b * d == a * d + c * b


@pytest.mark.parametrize("text, expected", [("3/4", Fraction(3, 4)), (12, Fraction(12)), ("5", Fraction(5)), (" -2/6 ", Fraction(-1, 3))])
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("bad", [1.5, True, "x/2", None, [1]])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValidationError):
        parse_rational(bad)


def test_format_rational():
    assert format_rational(Fraction(10, 42)) == "5/21"
    assert format_rational(3) == "3/1"


def test_members_of():
    assert members_of(0b101001) == [0, 3, 5]
    assert members_of(0) == []


def test_weighted_game_invariants():
    voters = VoterSet.of_size(3)
    with pytest.raises(ValidationError):
        WeightedGame(voters, (1, 1, 1), 0)
    with pytest.raises(ValidationError):
        WeightedGame(voters, (1, 1, 1), 4)
    with pytest.raises(ValidationError):
        WeightedGame(voters, (1, -1, 1), 1)
    with pytest.raises(ValidationError):
        WeightedGame(voters, (1, 1), 1)
    game = WeightedGame(voters, ("1/2", "1/3", 1), "5/6")
    assert game.wins(0b011)
    assert not game.wins(0b010)
