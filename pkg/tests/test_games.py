import random
from fractions import Fraction

import pytest

from mwcpower import (
    TooManyVotersForDerivation,
    VoterSet,
    WeightedGame,
    count_winning,
    derive_mwc,
    enumerate_antichains,
    is_decisive,
    is_proper,
    is_winning,
    validate_mwc_set,
)

from conftest import brute_winning, random_systems


def definitional_proper(system):
    grand = system.voters.grand
    return not any(
        brute_winning(system.members, a) and brute_winning(system.members, grand ^ a)
        for a in range(grand + 1)
    )


def brute_count(system):
    return sum(brute_winning(system.members, a) for a in range(1 << system.n))


def brute_mwc(game):
    n = game.voters.n
    out = []
    for a in range(1 << n):
        if game.wins(a) and all(not game.wins(a & ~(1 << i)) for i in range(n) if a >> i & 1):
            out.append(a)
    return sorted(out, key=lambda c: (bin(c).count("1"), c))


def random_game(rng, n):
    weights = [Fraction(rng.randint(0, 12), rng.choice([1, 1, 2, 3])) for _ in range(n)]
    if not any(weights):
        weights[0] = Fraction(1)
    total = sum(weights)
    quota = Fraction(rng.randint(1, 4 * total.numerator), 4 * total.denominator)
    return WeightedGame(VoterSet.of_size(n), tuple(weights), quota)


def test_is_winning_examples(eec):
    v = eec.voters
    assert is_winning(eec, v.coalition("FGI"))
    assert not is_winning(eec, 0)
    assert is_winning(eec, v.grand)
    assert not is_winning(eec, v.coalition("FGBL"))


def test_is_decisive_examples(eec):
    v = eec.voters
    fgi = v.coalition("FGI")
    for w in range(3):
        assert is_decisive(eec, w, fgi)
    assert not is_decisive(eec, v.index("L"), v.grand)
    assert not is_decisive(eec, v.index("B"), fgi)
    # L never swings anywhere
    assert not any(is_decisive(eec, 5, a) for a in range(64))


def test_derive_eec(eec_game):
    system = derive_mwc(eec_game)
    assert system.as_names() == [["F", "G", "I"], ["F", "G", "B", "N"], ["F", "I", "B", "N"], ["G", "I", "B", "N"]]


def test_derive_unanimity_and_dictator():
    voters = VoterSet.of_size(5)
    assert derive_mwc(WeightedGame(voters, (1,) * 5, 5)).members == (0b11111,)
    assert derive_mwc(WeightedGame(VoterSet.of_size(3), (1, 0, 0), 1)).members == (0b001,)


def test_derive_quota_boundary_is_inclusive():
    game = WeightedGame(VoterSet.of_size(3), ("1/3", "1/3", "1/3"), "2/3")
    assert derive_mwc(game).members == (0b011, 0b101, 0b110)


def test_derive_voter_cap():
    game = WeightedGame(VoterSet.of_size(25), (1,) * 25, 13)
    with pytest.raises(TooManyVotersForDerivation):
        derive_mwc(game)


def test_derive_huge_weights_fall_back_to_exact_path():
    game = WeightedGame(VoterSet.of_size(3), (2**70, 2**70, 1), 2**70 + 1)
    assert derive_mwc(game).members == (0b011, 0b101, 0b110)


def test_derive_matches_brute_force_and_round_trips():
    rng = random.Random(5)
    for _ in range(60):
        game = random_game(rng, rng.randint(1, 9))
        system = derive_mwc(game)
        assert list(system.members) == brute_mwc(game)
        for v in system.members:
            assert game.wins(v)
            for i in range(game.voters.n):
                if v >> i & 1:
                    assert not game.wins(v & ~(1 << i))


def test_derived_system_reproduces_weighted_winning_family():
    rng = random.Random(9)
    for _ in range(10):
        game = random_game(rng, rng.randint(10, 12))
        system = derive_mwc(game)
        for a in range(1 << game.voters.n):
            assert is_winning(system, a) == game.wins(a)


def test_is_proper_examples(eec):
    assert is_proper(eec)
    assert definitional_proper(eec)
    assert not is_proper(validate_mwc_set(VoterSet.of_size(2), [0b01, 0b10]))
    assert is_proper(validate_mwc_set(VoterSet.of_size(3), [0b111]))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_is_proper_matches_definition_exhaustively(n):
    for system in enumerate_antichains(n):
        assert is_proper(system) == definitional_proper(system)


def test_count_winning_examples(eec):
    assert count_winning(eec) == 14 == brute_count(eec)
    for n in (1, 4, 9):
        voters = VoterSet.of_size(n)
        assert count_winning(validate_mwc_set(voters, [1])) == 2 ** (n - 1)
        assert count_winning(validate_mwc_set(voters, [voters.grand])) == 1


def test_count_winning_all_four_voter_systems():
    for system in enumerate_antichains(4):
        assert count_winning(system) == brute_count(system)


def test_count_winning_random():
    for system in random_systems(17, 100, m_range=(1, 14)):
        assert count_winning(system) == brute_count(system)


def test_monotone_closure():
    for system in random_systems(23, 8, n_range=(8, 12), m_range=(1, 12)):
        n = system.n
        for a in range(1 << n):
            if is_winning(system, a):
                for i in range(n):
                    assert is_winning(system, a | 1 << i)
