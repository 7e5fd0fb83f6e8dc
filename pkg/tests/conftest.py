import random

import pytest

from mwcpower import VoterSet, WeightedGame, derive_mwc, validate_mwc_set

EEC_NAMES = ("F", "G", "I", "B", "N", "L")


@pytest.fixture
def eec_game():
    return WeightedGame(VoterSet(EEC_NAMES), (4, 4, 4, 2, 2, 1), 12)


@pytest.fixture
def eec(eec_game):
    return derive_mwc(eec_game)


def brute_winning(members, a):
    return any(v & a == v for v in members)


def random_antichain(rng: random.Random, n: int, m: int, attempts: int = 5000):
    """Greedy random antichain over ``n`` voters with up to ``m`` members."""
    chosen = []
    for _ in range(attempts):
        if len(chosen) == m:
            break
        # mostly middle-sized coalitions, where antichains can grow large
        if rng.random() < 0.3:
            k = rng.randint(1, n)
        else:
            k = max(1, sum(rng.random() < 0.5 for _ in range(n)))
        c = sum(1 << i for i in rng.sample(range(n), k))
        if all((c & v) not in (c, v) for v in chosen):
            chosen.append(c)
    return validate_mwc_set(VoterSet.of_size(n), chosen)


def random_systems(seed: int, count: int, n_range=(1, 12), m_range=(1, 20)):
    rng = random.Random(seed)
    return [
        random_antichain(rng, rng.randint(*n_range), rng.randint(*m_range))
        for _ in range(count)
    ]


_CRITERIA = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if name.startswith("test_criterion_"):
        _CRITERIA[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA, key=lambda s: int(s.split("_")[2])):
        terminalreporter.write_line(f"{_CRITERIA[name]}  {name}")
