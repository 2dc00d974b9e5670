"""Verification-suite reports: content, invariants, determinism."""

import json

import numpy as np
import pytest

from numrange.checks import (
    CheckReport,
    check_block_diagonalization,
    check_conjecture,
    check_pair_ellipse_axes,
    check_eigenvector_lifting,
    check_hull_convergence,
    check_range_negation_symmetry,
    check_selfadjoint_convergence,
    check_stadium_identity,
    check_stadium_support_widths,
    check_spectrum_union,
    check_stadium_separation,
    check_truncation_containment,
    random_period_specs,
    reports_to_lines,
    run_all,
)
from numrange.operators import (
    PeriodSpec,
    build_block_unitary,
    build_circulant,
    build_symbol,
    phi_grid,
)
from numrange.sweep import NotSelfAdjointError, SweepConfig

CFG = SweepConfig(num_theta=192, num_phi=192)
WORD01 = PeriodSpec.from_word("01")


def test_report_invariant_and_serialization():
    good = CheckReport(name="x", metric=0.5, tolerance=0.5)
    assert good.passed
    bad = CheckReport(name="x", metric=0.5000001, tolerance=0.5)
    assert not bad.passed
    record = json.loads(good.to_json())
    assert record == {
        "name": "x",
        "parameters": {},
        "metric": 0.5,
        "tolerance": 0.5,
        "passed": True,
    }
    lines = reports_to_lines([good, bad]).splitlines()
    assert len(lines) == 2 and all(json.loads(line) for line in lines)


def test_block_diagonalization_passes():
    assert check_block_diagonalization(WORD01, 4).passed
    spec = PeriodSpec(a=(-1, 1, 1), b=(1, -1, 1), c=(1, 1, -1))
    report = check_block_diagonalization(spec, 6)
    assert report.passed
    assert report.parameters["s"] == 6


def test_block_diagonalization_negative_control():
    # corrupting a circulant corner must break the similarity
    spec = PeriodSpec.from_word("001")
    s = 4
    cm = build_circulant(spec, s)
    cm[0, -1] += 0.5
    u = build_block_unitary(spec, s)
    blocks = np.zeros_like(cm)
    for k, phi in enumerate(phi_grid(s)):
        blocks[k * 3 : (k + 1) * 3, k * 3 : (k + 1) * 3] = build_symbol(spec, phi)
    defect = np.linalg.norm(u.conj().T @ cm @ u - blocks)
    assert defect > 1e-10 * (1 + np.linalg.norm(cm))


def test_lifting_and_spectrum_sweep():
    for spec, s in random_period_specs(6, seed=1):
        assert check_eigenvector_lifting(spec, s).passed
        assert check_spectrum_union(spec, s).passed


def test_spectrum_union_selfadjoint_uses_tight_tolerance():
    spec = PeriodSpec(a=(1.0, 1.0), b=0.0, c=(1.0, 1.0))
    report = check_spectrum_union(spec, 5)
    assert report.passed
    assert report.tolerance == 1e-8
    assert report.parameters["selfadjoint"] is True


def test_hull_convergence_word01():
    report = check_hull_convergence(WORD01, k_max=120, cfg=CFG)
    assert report.passed
    assert report.metric <= 0.05
    containment = check_truncation_containment(WORD01, k_max=120, cfg=CFG)
    assert containment.passed
    assert containment.metric <= 1e-6


def test_hull_convergence_word001():
    spec = PeriodSpec.from_word("001")
    report = check_hull_convergence(spec, k_max=120, cfg=CFG)
    assert report.passed
    assert report.parameters["containment_defect"] <= 1e-6


def test_hull_convergence_diagonal_spec_is_exact():
    spec = PeriodSpec(a=0, b=(1.0, 1j), c=0)
    report = check_hull_convergence(spec, k_max=8, cfg=SweepConfig(64, 16))
    assert report.metric <= 1e-12
    with pytest.raises(ValueError, match="k_max"):
        check_hull_convergence(spec, k_max=2, cfg=CFG)


def test_selfadjoint_theorem_and_shift():
    spec = PeriodSpec(a=1, b=0, c=1, p=2)
    report = check_selfadjoint_convergence(spec, k_max=400, cfg=SweepConfig(720, 720))
    assert report.passed
    lo, hi = report.parameters["interval"]
    assert (lo, hi) == pytest.approx((-2, 2), abs=1e-12)
    shifted = PeriodSpec(a=1, b=3.0, c=1, p=2)
    report2 = check_selfadjoint_convergence(shifted, k_max=400, cfg=SweepConfig(720, 720))
    lo2, hi2 = report2.parameters["interval"]
    assert (lo2, hi2) == pytest.approx((1, 5), abs=1e-12)
    with pytest.raises(NotSelfAdjointError):
        check_selfadjoint_convergence(WORD01, k_max=100, cfg=CFG)


def test_stadium_checks():
    assert check_stadium_identity(CFG).passed
    widths = check_stadium_support_widths(CFG)
    assert widths.passed and widths.metric <= 1e-3


def test_conjecture_small_n():
    for n in (1, 2):
        report = check_conjecture(n, CFG)
        assert report.passed
        assert report.tolerance == 0.02
        assert report.parameters["word"] == "0" * n + "1"


def test_conjecture_n4_is_advisory():
    report = check_conjecture(4, SweepConfig(96, 96))
    assert report.parameters["advisory"] is True
    assert report.tolerance == float("inf")
    assert report.passed  # advisory reports never gate
    for bad in (0, 5):
        with pytest.raises(ValueError):
            check_conjecture(bad, CFG)


def test_negation_symmetry():
    for n in (1, 2, 3):
        report = check_range_negation_symmetry(n, CFG)
        assert report.passed
        assert report.metric <= 1e-8


def test_pair_ellipse_axes():
    report = check_pair_ellipse_axes(CFG)
    assert report.passed
    assert report.metric <= 1e-6


def test_stadium_separation_negative_control():
    report = check_stadium_separation("11", CFG)
    assert report.passed
    assert report.parameters["hausdorff"] >= 0.1
    # word 01 matches the stadium, so the separation requirement must fail
    matching = check_stadium_separation("01", CFG)
    assert not matching.passed


def test_run_all_rejects_bad_inputs():
    with pytest.raises(ValueError, match="profile"):
        run_all("")
    with pytest.raises(ValueError, match="profile"):
        run_all("fast")
    with pytest.raises(ValueError, match="matches no check"):
        run_all("quick", only="nonexistent")


@pytest.fixture(scope="module")
def quick_reports():
    return run_all("quick", seed=0)


def test_run_all_quick_passes(quick_reports):
    failed = [r for r in quick_reports if not r.passed]
    assert failed == []
    names = [r.name for r in quick_reports]
    assert names == sorted(names)
    for expected in (
        "block_diagonalization",
        "eigenvector_lifting",
        "spectrum_union",
        "hull_convergence",
        "hull_containment",
        "selfadjoint_interval",
        "stadium_identity",
        "stadium_support_widths",
        "conjecture_hull",
        "conjecture_symmetry",
        "conjecture_ellipse_axes",
        "conjecture_negative_control",
    ):
        assert expected in names


def test_run_all_is_reproducible(quick_reports):
    again = run_all("quick", seed=0)
    assert reports_to_lines(again) == reports_to_lines(quick_reports)


def test_run_all_filter_and_n(quick_reports):
    conj = run_all("quick", only="conjecture", conjecture_n=2)
    names = {r.name for r in conj}
    assert names == {
        "conjecture_hull",
        "conjecture_symmetry",
        "conjecture_ellipse_axes",
        "conjecture_negative_control",
    }
    hulls = [r for r in conj if r.name == "conjecture_hull"]
    assert len(hulls) == 1 and hulls[0].parameters["n"] == 2
