from fractions import Fraction

import pytest

from qhankel import suite


def test_schedule_keys_unique():
    keys = [k for k, _ in suite.SCHEDULE]
    assert len(keys) == len(set(keys))


def test_run_suite_key_filter():
    reports = suite.run_suite(keys=["dilcher-jiu"])
    assert reports
    assert all(r.identity == "bernoulli-odd-center-closed" for r in reports)
    assert all(r.ok for r in reports)


def test_run_suite_max_n_zero_trivial():
    reports = suite.run_suite(max_n=0)
    assert reports
    assert all(r.ok for r in reports)
    assert all(r.elapsed_ms is None for r in reports)


def test_run_suite_timings_attached():
    reports = suite.run_suite(keys=["median"], max_n=1, timings=True)
    assert all(r.elapsed_ms is not None for r in reports)


def test_rng_reproducible():
    a = suite.rng_for(5, "x").random()
    b = suite.rng_for(5, "x").random()
    c = suite.rng_for(5, "y").random()
    assert a == b
    assert a != c


def test_random_rational_bounds():
    rng = suite.rng_for(0, "bounds")
    for _ in range(200):
        value = suite.random_rational(rng)
        assert 1 <= value.numerator <= 9
        assert 1 <= value.denominator <= 9
    avoided = suite.random_rational(rng, avoid=(Fraction(1),))
    assert avoided != 1


def test_table_renderers_are_stable():
    assert suite.table1_lines() == suite.table1_lines()
    assert len(suite.table1_lines()) == 3
    assert len(suite.table2_lines()) == 7
    assert len(suite.table3_lines()) == 4
    assert suite.table2_lines()[0].startswith("x^6: ")
    assert suite.table3_lines()[-1].startswith("x^0: ")


def test_golden_tables_match_fixtures():
    for which in (1, 2, 3):
        for report in suite.check_golden_table(which):
            assert report.ok, report.line()


def test_golden_table_missing_fixture(monkeypatch):
    def missing(name):
        raise FileNotFoundError(name)

    monkeypatch.setattr(suite, "fixture_lines", missing)
    reports = suite.check_golden_table(1)
    assert len(reports) == 1
    assert not reports[0].ok
    assert "missing" in reports[0].detail


def test_golden_table_bad_number():
    with pytest.raises(ValueError):
        suite.check_golden_table(4)


def test_full_registry_green():
    reports = suite.run_suite(seed=0)
    bad = [r for r in reports if not r.ok]
    assert not bad, "\n".join(r.line() for r in bad)
    assert len(reports) > 350
