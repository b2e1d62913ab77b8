import itertools
import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from triangpoly.complexes import chain_complex, chain_from_json, from_facets  # noqa: E402
from triangpoly.embedding import datum_from_json  # noqa: E402
from triangpoly.fixtures import load_fixture  # noqa: E402


def fixture_complex(name):
    return chain_from_json(load_fixture(name))


def fixture_datum(name):
    return datum_from_json(load_fixture(name))


def random_complex(rng: random.Random, nverts=6, dim=2, nfacets=None):
    """Downward closure of random facets on ``nverts`` vertices."""
    pool = list(itertools.combinations(range(nverts), dim + 1))
    k = nfacets if nfacets is not None else rng.randint(1, min(len(pool), 10))
    return from_facets(rng.sample(pool, k))


@pytest.fixture(scope="session")
def torus7_datum():
    return fixture_datum("torus7-embedding")


@pytest.fixture(scope="session")
def torus7_complex():
    return fixture_complex("torus7")


@pytest.fixture
def rng():
    return random.Random(20261016)


# one summary line per acceptance criterion

_CRITERIA: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion covered by a test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    num, text = mark.args
    prev = _CRITERIA.get(num, (text, True))[1]
    if rep.when == "call" or rep.failed:
        _CRITERIA[num] = (text, prev and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        text, ok = _CRITERIA[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {text}")
