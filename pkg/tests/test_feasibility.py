import pytest

from dipising.data.catalog import builtin_catalog, find_system, inline_system
from dipising.data.feasibility import gate_report, sweep_distance
from dipising.errors import BadRangeError, ZeroCouplingError


@pytest.fixture
def catalog():
    return builtin_catalog()


@pytest.mark.parametrize(
    "name,d,expected",
    [("BH2+", 1e-7, 26010.0), ("Rb87", 1e-6, 8.5), ("Rb87", 1e-7, 8.5e-3), ("NV", 1e-8, 3.6e-6)],
)
def test_case_study_gate_times(catalog, name, d, expected):
    assert gate_report(find_system(catalog, name), d).t_cz == pytest.approx(expected, rel=0.02)


@pytest.mark.parametrize(
    "name,d,ratio,verdict",
    [("Rb87", 1e-7, 2470.0, "favorable"), ("NV", 1e-8, 0.083, "unfavorable"), ("BH2+", 1e-7, None, "unknown")],
)
def test_verdicts(catalog, name, d, ratio, verdict):
    report = gate_report(find_system(catalog, name), d)
    assert report.verdict == verdict
    if ratio is None:
        assert report.coherence_ratio is None
    else:
        assert report.coherence_ratio == pytest.approx(ratio, rel=0.02)


def test_zero_coupling_is_propagated():
    with pytest.raises(ZeroCouplingError):
        gate_report(inline_system(1e10, 1e10, 0, 0), 1e-7)


def test_gate_report_rejects_non_positive_distance(catalog):
    with pytest.raises(BadRangeError):
        gate_report(catalog[1], 0.0)


def test_sweep_endpoints(catalog):
    reports = sweep_distance(find_system(catalog, "Rb87"), 1e-7, 1e-6, 2)
    assert [report.d for report in reports] == [1e-7, 1e-6]
    assert reports[0].t_cz == pytest.approx(8.5e-3, rel=0.02)
    assert reports[-1].t_cz == pytest.approx(8.5, rel=0.02)


@pytest.mark.parametrize("name", ["BH2+", "Rb87", "NV"])
def test_sweep_follows_cubic_law(catalog, name):
    reports = sweep_distance(find_system(catalog, name), 1e-9, 1e-6, 7)
    for first, second in zip(reports, reports[1:]):
        assert second.d > first.d
        assert second.t_cz > first.t_cz
        assert second.t_cz / first.t_cz == pytest.approx((second.d / first.d) ** 3, rel=1e-12)


def test_sweep_in_parallel_keeps_order(catalog):
    system = find_system(catalog, "NV")
    assert sweep_distance(system, 1e-9, 1e-7, 9, max_workers=4) == sweep_distance(system, 1e-9, 1e-7, 9)


@pytest.mark.parametrize(
    "d_min,d_max,points",
    [(1e-7, 1e-7, 2), (1e-6, 1e-7, 5), (0.0, 1e-7, 5), (1e-8, 1e-7, 1)],
)
def test_sweep_rejects_bad_ranges(catalog, d_min, d_max, points):
    with pytest.raises(BadRangeError):
        sweep_distance(catalog[1], d_min, d_max, points)


def test_reports_are_deterministic(catalog):
    assert gate_report(catalog[2], 1e-8) == gate_report(catalog[2], 1e-8)
