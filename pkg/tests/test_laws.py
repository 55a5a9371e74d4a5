import pytest

from arcop.laws import SUITES, run_suite


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_law_suites(suite):
    res = run_suite(suite, 25, seed=11)
    assert res["failures"] == [], res["failures"][:1]


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope", 1, 0)
