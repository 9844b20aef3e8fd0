import pytest

from hardyx.verify import CheckResult, run_appendix, run_suite, run_wiener


def test_appendix_suite_all_green():
    results = run_appendix(n_grid=60)
    assert results and all(r.passed for r in results)
    names = {r.name for r in results}
    assert "appendix/H-positive" in names
    assert "appendix/tp-band" in names


def test_wiener_suite_small_sample():
    results = run_wiener(n_polys=8)
    assert all(isinstance(r, CheckResult) for r in results)
    assert all(r.passed for r in results)
    # the fixed-point families keep the equality branch of the bound honest
    assert any(r.name.startswith("wiener/fixed-points") for r in results)


def test_unknown_suite_name():
    with pytest.raises(ValueError):
        run_suite("bogus")
