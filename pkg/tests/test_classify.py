"""The normal-form case engine: candidate templates, the curvature tangency
test, case eliminations, the exact parameter pin, and the survivor map."""

import random
from fractions import Fraction

import pytest

from nksl3.classify import (CaseCandidate, GridSpec, candidates,
                            claimed_case4_point, eliminate_case2, in_span,
                            match_survivors, pin_case4, tangency_test)
from nksl3.exactfield import ONE, SQRT3, ZERO, FieldElem
from nksl3.liealg import MVec, dphi, metric
from nksl3.nkgeom import J, curvature

RNG_SEED = 3


def _e(i):
    return MVec.basis(i)


def test_candidate_templates():
    templates = candidates()
    assert [c.case for c in templates] == [1, 2, 3, 4, 5]
    assert templates[0].instantiated and templates[4].instantiated
    assert templates[1].free_parameters == ("epsilon",)
    assert templates[2].free_parameters == ("epsilon",)
    assert templates[3].free_parameters == ("epsilon", "a", "b")


def test_candidate_validation():
    with pytest.raises(ValueError):
        CaseCandidate(6)
    with pytest.raises(ValueError):
        CaseCandidate(2, epsilon=2)
    with pytest.raises(ValueError):
        CaseCandidate(1, epsilon=1)
    with pytest.raises(ValueError):
        CaseCandidate(3, epsilon=1, a=ONE)
    with pytest.raises(ValueError):
        CaseCandidate(4, epsilon=1, a=ZERO, b=ZERO)
    with pytest.raises(ValueError):
        CaseCandidate(4, epsilon=1, a=-ONE, b=ZERO)


def test_uninstantiated_vector_raises():
    with pytest.raises(ValueError):
        CaseCandidate(2).vector()


def test_with_params():
    filled = CaseCandidate(4).with_params(epsilon=-1, a=ONE, b=ZERO)
    assert filled.instantiated
    assert filled.vector() == _e(1) + _e(3) + _e(5) * 0 + _e(6) * 0


def test_case_vectors_literal():
    half_sqrt2 = FieldElem(0, Fraction(1, 2))
    assert CaseCandidate(1).vector() == _e(1)
    assert CaseCandidate(2, epsilon=-1).vector() == -_e(1) + _e(5)
    assert CaseCandidate(3, epsilon=1).vector() == (_e(3) + _e(5)) * half_sqrt2
    assert CaseCandidate(5).vector() == _e(3)
    general = CaseCandidate(4, epsilon=1, a=FieldElem(2), b=FieldElem(-1))
    assert general.vector() == (_e(1) * 2 + _e(3) + _e(5) * Fraction(5, 2)
                                - _e(6))


def test_case4_norm_is_epsilon_for_all_parameters():
    rng = random.Random(RNG_SEED)
    for epsilon in (-1, 1):
        for _ in range(25):
            a = FieldElem(Fraction(rng.randint(1, 40), rng.randint(1, 9)))
            b = FieldElem(Fraction(rng.randint(-30, 30), rng.randint(1, 9)))
            candidate = CaseCandidate(4, epsilon=epsilon, a=a, b=b)
            assert metric(candidate.vector(), candidate.vector()) \
                == FieldElem(epsilon)


def test_expected_norms_match_metric():
    fixed = [CaseCandidate(1), CaseCandidate(2, epsilon=1),
             CaseCandidate(2, epsilon=-1), CaseCandidate(3, epsilon=1),
             CaseCandidate(3, epsilon=-1), claimed_case4_point(),
             CaseCandidate(5)]
    for candidate in fixed:
        x = candidate.vector()
        assert metric(x, x) == candidate.expected_norm(), candidate.label()


def test_in_span_decision_variants():
    hit = in_span(_e(1) * 2 - _e(2), _e(1), _e(2))
    assert hit.contained
    assert hit.coefficients == (FieldElem(2), FieldElem(-1))
    miss = in_span(_e(3), _e(1), _e(2))
    assert not miss.contained
    assert miss.coefficients is None
    assert miss.pivot_row is not None
    assert "rank 3" in miss.witness()


def test_tangency_verdicts():
    assert tangency_test(CaseCandidate(1)).in_span
    assert tangency_test(CaseCandidate(3, epsilon=1)).in_span
    assert tangency_test(CaseCandidate(3, epsilon=-1)).in_span
    assert tangency_test(CaseCandidate(5)).in_span
    assert tangency_test(claimed_case4_point()).in_span
    assert not tangency_test(CaseCandidate(2, epsilon=1)).in_span
    assert not tangency_test(CaseCandidate(2, epsilon=-1)).in_span


def test_case1_value():
    result = tangency_test(CaseCandidate(1))
    assert result.value == _e(1) * (-4)
    assert result.witness.coefficients == (FieldElem(-4), ZERO)


def test_case2_value_is_the_expected_combination():
    for epsilon in (-1, 1):
        x = CaseCandidate(2, epsilon=epsilon).vector()
        value = curvature(x, J.apply(x), J.apply(x))
        assert value == _e(1) * (-4 * epsilon) + _e(5) * 2


def test_case2_elimination_reports():
    reports = eliminate_case2()
    assert len(reports) == 4
    assert all(r.eliminated for r in reports)
    by_key = {(r.epsilon, r.representative): r for r in reports}
    direct = by_key[(1, "m1+m3")]
    assert direct.vector == _e(1) + _e(5)
    assert direct.value == _e(1) * (-4) + _e(5) * 2
    image = by_key[(1, "m1+m2 (dphi image)")]
    assert image.vector == dphi(direct.vector)
    assert image.vector == -_e(1) + _e(3)
    assert image.value == _e(1) * 4 + _e(3) * 2


def test_case2_image_value_is_dphi_of_value():
    # dphi is an isometry commuting with J on the relevant vectors, so the
    # curvature value of the image representative is the image of the value.
    for epsilon in (-1, 1):
        x = CaseCandidate(2, epsilon=epsilon).vector()
        value = curvature(x, J.apply(x), J.apply(x))
        y = dphi(x)
        image_value = curvature(y, J.apply(y), J.apply(y))
        assert image_value == dphi(value)


def test_claimed_case4_point_is_flat_direction():
    point = claimed_case4_point()
    assert point.epsilon == -1
    assert point.a == SQRT3 * Fraction(1, 3)
    assert point.a * point.a == FieldElem(Fraction(1, 3))
    assert point.b == ZERO
    x = point.vector()
    assert x == (_e(1) * (SQRT3 * Fraction(1, 3)) + _e(3)
                 + _e(5) * Fraction(-1, 3))
    assert curvature(x, J.apply(x), J.apply(x)) == MVec.zero()


def test_tangency_invariant_under_recombination():
    # the test is a property of the plane span{X, JX}: recombined bases of
    # the surviving planes must also pass
    rng = random.Random(RNG_SEED + 1)
    survivors = [CaseCandidate(1), CaseCandidate(3, epsilon=1),
                 claimed_case4_point()]
    for candidate in survivors:
        x = candidate.vector()
        jx = J.apply(x)
        for _ in range(5):
            alpha = FieldElem(rng.randint(1, 5))
            beta = FieldElem(rng.randint(-4, 4))
            xp = x * alpha + jx * beta
            jxp = J.apply(xp)
            value = curvature(xp, jxp, jxp)
            assert in_span(value, x, jx).contained, candidate.label()


def test_grid_spec_parse_and_counts():
    grid = GridSpec.parse("0:3:1/20,-3:3:1/20")
    assert grid == GridSpec()
    assert str(grid) == "0:3:1/20,-3:3:1/20"
    a_values = list(grid.a_values())
    b_values = list(grid.b_values())
    assert len(a_values) == 60
    assert len(b_values) == 121
    assert a_values[0] == Fraction(1, 20) and a_values[-1] == Fraction(3)
    assert b_values[0] == Fraction(-3) and b_values[-1] == Fraction(3)
    assert all(value > 0 for value in a_values)


def test_grid_spec_rejects_nonsense():
    with pytest.raises(ValueError):
        GridSpec.parse("1:2,3:4")
    with pytest.raises(ValueError):
        GridSpec.parse("0:3:0,-3:3:1")
    with pytest.raises(ValueError):
        GridSpec.parse("0:3:-1,-3:3:1")
    with pytest.raises(ValueError):
        GridSpec.parse("words")


def test_pin_case4_coarse_grid():
    grid = GridSpec.parse("0:1:1/3,-1:1:1/2")
    report = pin_case4(grid)
    assert report.claimed_point_passes
    assert report.cells == 2 * 3 * 5
    assert report.grid_passes == 0
    assert report.grid_failures == report.cells
    assert report.unexpected_passes == ()
    assert report.ok
    payload = report.to_dict()
    assert payload["cells"] == 30 and payload["passes"] == 0


def test_pin_case4_skips_nonpositive_a():
    grid = GridSpec.parse("-1:1:1/2,0:0:1")
    a_values = list(grid.a_values())
    assert a_values == [Fraction(1, 2), Fraction(1)]


def test_match_survivors():
    matches = match_survivors()
    assert set(matches) == {"1", "3+", "3-", "4", "5"}
    expected = {"1": "f1", "3+": "f2", "3-": "f3", "4": "f4", "5": "f5"}
    for label, match in matches.items():
        assert match.example == expected[label]
        assert match.tangency_pass and match.generator_match and match.ok


def test_candidate_labels():
    assert CaseCandidate(1).label() == "case 1"
    assert CaseCandidate(3, epsilon=-1).label() == "case 3, ε=-1"
    assert "a=" in claimed_case4_point().label()
