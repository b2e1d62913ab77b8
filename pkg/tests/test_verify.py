import random

import pytest

from triangpoly.complexes import chain_complex, from_facets
from triangpoly.verify import (identity_suite, matroid_suite, p_duality_suite, pbar_laws,
                               specialize_suite, sphere_suite)

from conftest import fixture_complex, fixture_datum
from datagen import random_datum

# a triangle next to a hollow 3-cycle: b_1 = 1, so no sphere duality
NOT_A_SPHERE = [[0, 1, 2], [3, 4], [4, 5], [3, 5]]


def _all_pass(results):
    return all(r.passed for r in results) and results


@pytest.mark.parametrize("name", ["bd3simplex", "bd4simplex"])
def test_sphere_suite_passes(name):
    res = sphere_suite(fixture_complex(name))
    assert _all_pass(res)
    assert all(r.counterexample is None for r in res)


def test_sphere_suite_reports_counterexample():
    res = sphere_suite(chain_complex(from_facets(NOT_A_SPHERE)))
    failed = [r for r in res if not r.passed]
    assert failed
    per_sel = [r for r in failed if "per-selector" in r.name]
    assert per_sel and per_sel[0].counterexample is not None
    assert "counterexample selector 0x" in per_sel[0].line()
    assert per_sel[0].to_json()["counterexample"].startswith("0x")


@pytest.mark.parametrize("name, n", [("bd3simplex", 1), ("bd4simplex", 1), ("triangle", 1)])
def test_matroid_suite_passes(name, n):
    assert _all_pass(matroid_suite(fixture_complex(name), n))


def test_matroid_suite_fails_with_mask_off_spheres():
    res = matroid_suite(chain_complex(from_facets(NOT_A_SPHERE)), 1)
    bad = [r for r in res if not r.passed]
    assert len(bad) == 1 and bad[0].counterexample is not None


@pytest.mark.parametrize("name", ["cp2-embedding", "s2xs2-embedding", "torus-2loop-embedding"])
def test_embedding_suites_on_handles(name):
    e = fixture_datum(name)
    assert _all_pass(p_duality_suite(e))
    assert _all_pass(identity_suite(e))
    assert _all_pass(specialize_suite(e))
    if e.n % 2 == 0:
        assert _all_pass(pbar_laws(e))


def test_p_duality_reports_counterexample_on_non_manifold_data():
    e = random_datum(random.Random(0), 1)
    res = p_duality_suite(e)
    bad = [r for r in res if not r.passed]
    assert bad
    assert any(r.counterexample is not None for r in bad)


def test_identity_suite_counts_every_selector():
    e = fixture_datum("s2xs2-embedding")
    res = identity_suite(e)
    assert {r.selectors for r in res} == {4}
