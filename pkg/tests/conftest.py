import pytest

from powerlab.enumeration import CorpusSpec, enumerate_games
from powerlab.games import from_minimal_winning, weighted_game


@pytest.fixture(scope="session")
def family():
    # parents F=1, M=2, children A=3, B=4; one of each group must agree
    return from_minimal_winning(4, [[1, 3], [1, 4], [2, 3], [2, 4]])


@pytest.fixture(scope="session")
def committee():
    return weighted_game(51, 47, 36, 17)


@pytest.fixture(scope="session")
def lm_game():
    return weighted_game(51, 35, 20, 15, 15, 15)


@pytest.fixture(scope="session")
def g211():
    return weighted_game(3, 2, 1, 1)


@pytest.fixture(scope="session")
def dictator():
    return weighted_game(1, 1, 0, 0)


@pytest.fixture(scope="session")
def corpus_upto4():
    return [g for n in range(1, 5) for g in enumerate_games(CorpusSpec("simple", n))]


@pytest.fixture(scope="session")
def simple4():
    return list(enumerate_games(CorpusSpec("simple", 4)))


@pytest.fixture(scope="session")
def weighted_upto5():
    return [g for n in range(1, 6) for g in enumerate_games(CorpusSpec("weighted", n))]
