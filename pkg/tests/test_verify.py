"""Tests for the identity verifiers: hand-checked small cases, mode
agreement, fault sensitivity, and report plumbing."""

import random
from fractions import Fraction

import pytest

from delpoly.bipoly import BiPoly, binom_poly
from delpoly.dcore import EvalPoint, d_direct
from delpoly.reports import Mode, VerifyReport
from delpoly.verify import (
    DEFAULT_DEPTHS,
    SUITE_IDS,
    SuiteConfig,
    deterministic_points,
    run_suite,
    verify_clausen_product,
    verify_hyper_bridge,
    verify_jacobi,
    verify_linearization,
    verify_meixner,
    verify_newform_consequences,
    verify_parametric_square,
    verify_recurrences,
    verify_shift_identities,
    verify_special_values,
    verify_square,
    verify_weighted_square_sum,
)

X = BiPoly.x()
R = BiPoly.r()

# Small depths keep this module quick; the stated acceptance depths run in
# tests/test_acceptance.py.
SMALL_DEPTH = {
    "square": 6,
    "linearization": 4,
    "inversion": 6,
    "jacobi": 6,
    "meixner": 6,
    "recurrences": 8,
    "special-values": 8,
    "shift-identities": 8,
    "parametric-square": 4,
    "weighted-square-sum": 6,
    "hyper-bridge": 5,
    "clausen-product": 4,
}


def random_points(count: int, seed: int) -> tuple[EvalPoint, ...]:
    """Random non-excluded rational points (odd numerator over 8 keeps 2r
    away from the integers)."""
    rng = random.Random(seed)
    points = []
    while len(points) < count:
        r = Fraction(2 * rng.randint(-10, 30) + 1, 8)
        x = Fraction(rng.randint(-40, 40), rng.choice([3, 5, 7, 8]))
        pt = EvalPoint(r, x)
        assert not pt.r_is_excluded_half_integer()
        points.append(pt)
    return tuple(points)


def test_square_hand_case():
    # n = 1: (1+2x)^2 = (1+2r)^2 + 4(x-r)(x+r+1) after clearing
    lhs = (1 + 2 * X) ** 2
    rhs = (1 + 2 * R) ** 2 + 4 * (X - R) * (X + R + 1)
    assert lhs == rhs
    assert verify_square(6).passed


def test_square_cross_checked_pointwise():
    report = verify_square(6, points=random_points(5, seed=1))
    assert report.passed
    assert report.mode is Mode.POINT_GRID


def test_linearization_hand_case():
    # m = n = 1: d_1^2 = 2 d_2 - (2r+1) d_0
    d2 = d_direct(2)
    assert (1 + 2 * X) ** 2 == 2 * d2 - (2 * R + 1)
    assert verify_linearization(4, 4).passed


def test_linearization_m_zero_reduces_to_identity():
    report = verify_linearization(0, 6)
    assert report.passed


def test_inversion_hand_case():
    # n = 1 after clearing: (-2r-1) + (1+2x) = 2(x-r)
    assert (-2 * R - 1) + (1 + 2 * X) == 2 * (X - R)
    report = verify_newform_consequences(6)
    assert report.passed
    assert report.mode is Mode.CLEARED_DENOMINATOR
    assert report.skipped  # the excluded half-integer set is recorded


def test_jacobi_verifier():
    assert verify_jacobi(6).passed


def test_recurrences_hand_cases():
    # two-term at n = 0: d_1 = (x+r+1) + (x-r)
    assert (X + R + 1) + (X - R) == 1 + 2 * X
    # combined at n = 1 (the (-1)^n factor is -1 here):
    # (1+2r) = (1+r-x)(1+2x) - (x-r)(1-2x)
    assert (1 + R - X) * (1 + 2 * X) - (X - R) * (1 - 2 * X) == 1 + 2 * R
    assert verify_recurrences(8).passed


def test_special_values_hand_cases():
    # d_2 at x = 1 is 5 + r; the closed form times (r+1) matches
    d2_at_1 = d_direct(2).subst_x_value(1)
    assert d2_at_1 == 5 + R
    assert (R + 1) * d2_at_1 == (5 + R) * binom_poly(R + 1, 1)
    assert verify_special_values(8).passed


def test_shift_identities_hand_case():
    # n = 1 difference shift: d_1(x) + d_1(-x) = 2 d_0
    assert (1 + 2 * X) + (1 - 2 * X) == BiPoly.const(2)
    assert verify_shift_identities(8).passed


def test_weighted_square_sum_hand_case():
    # n = 1: (1+2x)(2r+1) = (1+2r)(1+2x)
    # n = 2: (1+2x)[(2r+1)(2r+2)/2 + (2r+2)/2 (1+2x)^2] = (2+2r) d_2 d_1
    d2 = d_direct(2)
    lhs = (1 + 2 * X) * ((2 * R + 1) * (2 * R + 2) / 2 + (2 * R + 2) / 2 * (1 + 2 * X) ** 2)
    assert lhs == (2 + 2 * R) * d2 * (1 + 2 * X)
    assert verify_weighted_square_sum(6).passed


def test_meixner_verifier():
    report = verify_meixner(6)
    assert report.passed
    assert report.mode is Mode.INTERPOLATION_GRID
    assert report.degree_bound == 6
    assert report.sample_count == 49


def test_parametric_square_verifier():
    report = verify_parametric_square(4)
    assert report.passed
    assert report.mode is Mode.INTERPOLATION_GRID
    assert report.sample_count > report.degree_bound


def test_hyper_bridge_verifier():
    report = verify_hyper_bridge(6)
    assert report.passed
    report = verify_hyper_bridge(4, points=deterministic_points(10))
    assert report.passed


def test_clausen_verifier():
    assert verify_clausen_product(4).passed


def test_deterministic_points_avoid_exclusions():
    points = deterministic_points(50)
    assert len(points) == 50
    assert len(set(points)) == 50
    assert not any(p.r_is_excluded_half_integer() for p in points)


SYMBOLIC_IDS = (
    "square",
    "linearization",
    "inversion",
    "jacobi",
    "recurrences",
    "special-values",
    "shift-identities",
    "weighted-square-sum",
)


@pytest.mark.parametrize("identity_id", SYMBOLIC_IDS)
def test_point_grid_agrees_with_symbolic(identity_id):
    """Symbolic/cleared verdicts are spot-checked at >= 20 random points."""
    from delpoly.verify import _dispatch

    depth = SMALL_DEPTH[identity_id]
    symbolic = _dispatch(identity_id, depth, None)
    kwargs = {"points": random_points(20, seed=sum(map(ord, identity_id)))}
    if identity_id == "square":
        pointwise = verify_square(depth, **kwargs)
    elif identity_id == "linearization":
        pointwise = verify_linearization(depth, depth, **kwargs)
    elif identity_id == "inversion":
        pointwise = verify_newform_consequences(depth, **kwargs)
    elif identity_id == "jacobi":
        pointwise = verify_jacobi(depth, **kwargs)
    elif identity_id == "recurrences":
        pointwise = verify_recurrences(depth, **kwargs)
    elif identity_id == "special-values":
        pointwise = verify_special_values(depth, **kwargs)
    elif identity_id == "shift-identities":
        pointwise = verify_shift_identities(depth, **kwargs)
    else:
        pointwise = verify_weighted_square_sum(depth, **kwargs)
    assert symbolic.passed == pointwise.passed is True
    assert pointwise.mode is Mode.POINT_GRID


@pytest.mark.parametrize("identity_id", SUITE_IDS)
def test_fault_injection_flips_each_verifier(identity_id):
    """A +1 perturbation of one instance's reference side must fail with a
    concrete counterexample."""
    from delpoly.verify import _dispatch

    report = _dispatch(identity_id, SMALL_DEPTH[identity_id], 2)
    assert not report.passed
    ce = report.counterexample
    assert ce is not None
    assert ce["lhs"] != ce["rhs"]
    assert "instance" in ce and "params" in ce


def test_fault_injection_in_suite_fails_exactly_one():
    config = SuiteConfig(depths=SMALL_DEPTH, fault=("jacobi", 1))
    reports = run_suite(config)
    failed = [r.identity_id for r in reports if not r.passed]
    assert failed == ["jacobi"]


def test_run_suite_depth_zero_trivially_passes():
    config = SuiteConfig(depths={identity_id: 0 for identity_id in SUITE_IDS})
    reports = run_suite(config)
    assert all(r.passed for r in reports)
    assert [r.identity_id for r in reports] == list(SUITE_IDS)


def test_run_suite_selection_and_unknown_id():
    reports = run_suite(SuiteConfig(depths=SMALL_DEPTH, selection=("square", "jacobi")))
    assert [r.identity_id for r in reports] == ["square", "jacobi"]
    with pytest.raises(ValueError):
        run_suite(SuiteConfig(selection=("no-such-identity",)))


def test_default_depths_cover_all_ids():
    assert set(DEFAULT_DEPTHS) == set(SUITE_IDS)


def test_report_invariants():
    with pytest.raises(ValueError):
        VerifyReport("x", Mode.SYMBOLIC_POLY, "n<=1", True, counterexample={"lhs": 1})
    with pytest.raises(ValueError):
        VerifyReport("x", Mode.SYMBOLIC_POLY, "n<=1", False)
    with pytest.raises(ValueError):
        VerifyReport("x", Mode.INTERPOLATION_GRID, "n<=1", True)
    with pytest.raises(ValueError):
        VerifyReport(
            "x", Mode.INTERPOLATION_GRID, "n<=1", True, degree_bound=3, sample_count=3
        )


def test_report_json_lines_are_stable():
    report = verify_square(2)
    line1 = report.to_json_line()
    line2 = verify_square(2).to_json_line()
    assert line1 == line2
    assert '"id": "square"' in line1
    assert '"passed": true' in line1


def test_counterexample_values_are_concrete():
    report = verify_square(4, fault_index=3)
    ce = report.counterexample
    assert ce is not None
    # the recorded values differ at the recorded witness point
    assert ce["lhs"] != ce["rhs"]
    assert set(ce["params"]) >= {"n", "r", "x"}
