import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running verification campaigns")


@pytest.fixture(scope="session")
def small_corpus():
    """All graphs on 3..7 vertices, parsed once."""
    from hamtough.corpus import CORPUS_SMALL, iter_corpus
    from hamtough.graph6 import parse_graph6

    return [(line, parse_graph6(line)) for _, line in iter_corpus(CORPUS_SMALL)]


@pytest.fixture(scope="session")
def connected8_lines():
    from hamtough.corpus import CORPUS_CONNECTED_8, iter_corpus

    return list(iter_corpus(CORPUS_CONNECTED_8))
