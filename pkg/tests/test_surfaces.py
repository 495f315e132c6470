"""The five orbit surfaces: generators, closed forms, the exponential
cross-check, second fundamental forms, and the certificates."""

import itertools
import math
import random
from fractions import Fraction

import numpy as np
import pytest
import scipy.linalg

from nksl3.exactfield import SQRT2, SQRT3, ZERO, FieldElem
from nksl3.liealg import MVec, bracket, metric, stabilizer_element
from nksl3.nkgeom import J
from nksl3.surfaces import (FAMILIES, Certificate, DegenerateSpanError,
                            certify, closed_form, coset_deviation, exp_check,
                            expm, family, generated_algebra_dimension,
                            generator, sff)

RNG_SEED = 5

ALL_IDS = ("f1", "f2", "f3", "f4", "f5")


def _e(i):
    return MVec.basis(i)


def test_family_ids_and_lookup():
    assert tuple(FAMILIES) == ALL_IDS
    assert family("f2").orbit_group == "SO(3)"
    with pytest.raises(ValueError):
        family("f9")


def test_generators_literal():
    inv_sqrt2 = SQRT2 * Fraction(1, 2)
    inv_sqrt3 = SQRT3 * Fraction(1, 3)
    x, jx = generator("f1")
    assert x == _e(1) and jx == -_e(2)
    x, jx = generator("f2")
    assert x == (_e(3) + _e(5)) * inv_sqrt2
    assert jx == (_e(4) + _e(6)) * inv_sqrt2
    x, jx = generator("f3")
    assert x == (_e(3) - _e(5)) * inv_sqrt2
    assert jx == (_e(4) - _e(6)) * inv_sqrt2
    x, jx = generator("f4")
    assert x == _e(1) * inv_sqrt3 + _e(3) + _e(5) * Fraction(-1, 3)
    assert jx == -_e(2) * inv_sqrt3 + _e(4) + _e(6) * Fraction(-1, 3)
    x, jx = generator("f5")
    assert x == _e(3) and jx == _e(4)


def test_generator_is_j_image():
    for fid in ALL_IDS:
        x, jx = generator(fid)
        assert jx == J.apply(x)


def test_generator_norms():
    expected = {"f1": -1, "f2": 1, "f3": -1, "f4": -1, "f5": 0}
    for fid, value in expected.items():
        x, _ = generator(fid)
        assert metric(x, x) == FieldElem(value), fid


def test_closed_forms_at_origin():
    for fid in ALL_IDS:
        assert np.allclose(closed_form(fid, 0.0, 0.0), np.eye(3), atol=1e-15)


def test_closed_form_spot_values():
    # f1 along v = 0 is the split one-parameter group diag(e^u, e^-u, 1)
    m = closed_form("f1", 0.7, 0.0)
    assert np.allclose(m, np.diag([math.exp(0.7), math.exp(-0.7), 1.0]),
                       atol=1e-12)
    # f2 at (pi/2, 0) is the 180-degree rotation diag(-1, 1, -1)
    m = closed_form("f2", math.pi / 2, 0.0)
    assert np.allclose(m, np.diag([-1.0, 1.0, -1.0]), atol=1e-12)
    # f5 is the unitriangular sheet
    m = closed_form("f5", 1.25, -0.5)
    assert np.array_equal(m, np.array([[1.0, 0.0, 1.25],
                                       [0.0, 1.0, -0.5],
                                       [0.0, 0.0, 1.0]]))


def test_closed_forms_land_in_special_linear_group():
    rng = random.Random(RNG_SEED)
    for fid in ALL_IDS:
        fam = family(fid)
        for _ in range(25):
            u = rng.uniform(*fam.u_range)
            v = rng.uniform(*fam.v_range)
            assert abs(np.linalg.det(closed_form(fid, u, v)) - 1.0) < 1e-9, fid


def test_f2_points_are_orthogonal():
    rng = random.Random(RNG_SEED + 1)
    for _ in range(25):
        m = closed_form("f2", rng.uniform(-2, 2), rng.uniform(0, 2 * math.pi))
        assert np.max(np.abs(m.T @ m - np.eye(3))) < 1e-12


def test_f3_points_preserve_lorentz_form():
    eta = np.diag([1.0, 1.0, -1.0])
    rng = random.Random(RNG_SEED + 2)
    for _ in range(25):
        m = closed_form("f3", rng.uniform(-2, 2), rng.uniform(0, 2 * math.pi))
        assert np.max(np.abs(m @ eta @ m.T - eta)) < 1e-9
        assert m[2, 2] >= 1.0 - 1e-12  # orthochronous sheet


def test_f1_fixes_third_coordinate():
    rng = random.Random(RNG_SEED + 3)
    for _ in range(25):
        m = closed_form("f1", rng.uniform(-2, 2), rng.uniform(0, 2 * math.pi))
        assert np.allclose(m[2], [0.0, 0.0, 1.0], atol=1e-15)
        assert np.allclose(m[:, 2], [0.0, 0.0, 1.0], atol=1e-15)


def test_expm_basic_identities():
    assert np.allclose(expm(np.zeros((3, 3))), np.eye(3), atol=1e-15)
    nilpotent = np.array([[0.0, 0.0, 2.0], [0.0, 0.0, -1.0], [0.0, 0.0, 0.0]])
    assert np.allclose(expm(nilpotent), np.eye(3) + nilpotent, atol=1e-15)


def test_expm_against_scipy():
    rng = np.random.default_rng(RNG_SEED)
    worst = 0.0
    for _ in range(50):
        a = rng.uniform(-2.0, 2.0, size=(3, 3))
        ours = expm(a)
        reference = scipy.linalg.expm(a)
        scale = max(1.0, float(np.max(np.abs(reference))))
        worst = max(worst, float(np.max(np.abs(ours - reference))) / scale)
    assert worst < 1e-10, worst


def test_expm_one_parameter_group():
    rng = np.random.default_rng(RNG_SEED + 1)
    a = rng.uniform(-1.0, 1.0, size=(3, 3))
    for s, t in ((0.5, 0.25), (1.0, -0.75)):
        left = expm((s + t) * a)
        right = expm(s * a) @ expm(t * a)
        assert np.max(np.abs(left - right)) < 1e-12


def test_coset_deviation_aligns_stabilizer_shift():
    base = closed_form("f1", 0.6, 1.1)
    shifted = base @ stabilizer_element(-0.3, -0.7)
    assert coset_deviation(base, base) == 0.0
    assert coset_deviation(shifted, base) < 1e-6
    assert coset_deviation(shifted, base @ np.diag([2.0, 1.0, 0.5])) > 1e-3


def test_exp_check_all_families():
    for fid in ALL_IDS:
        result = exp_check(fid, samples=100, tol=1e-8, seed=0)
        assert result.passed, (fid, result.max_dev)
        assert result.samples == 100


def test_exp_check_f5_is_exact():
    result = exp_check("f5", samples=60, tol=1e-12, seed=2)
    assert result.max_dev <= 1e-12


def test_exp_check_deterministic():
    a = exp_check("f3", samples=40, seed=9)
    b = exp_check("f3", samples=40, seed=9)
    assert a.max_dev == b.max_dev


def test_exp_check_rejects_bad_tolerance():
    with pytest.raises(ValueError):
        exp_check("f1", tol=0.0)


def test_sff_vanishes_on_nondegenerate_families():
    for fid in ("f1", "f2", "f3", "f4"):
        x, jx = generator(fid)
        span = [x, jx]
        for a, b in ((x, x), (x, jx), (jx, x), (jx, jx)):
            assert sff(span, a, b) == MVec.zero(), fid


def test_sff_degenerate_span_refused():
    x, jx = generator("f5")
    with pytest.raises(DegenerateSpanError):
        sff([x, jx], x, jx)


def test_sff_detects_curved_span():
    # e2 and the f2 generator span a nondegenerate plane whose bracket
    # escapes it, so the second fundamental form must be nonzero.
    x = _e(2)
    y, _ = generator("f2")
    value = sff([x, y], x, y)
    assert value != MVec.zero()
    assert value == (_e(4) - _e(6)) * (SQRT2 * Fraction(1, 4))


def test_sff_requires_span_membership():
    x, jx = generator("f1")
    with pytest.raises(ValueError):
        sff([x, jx], x, _e(3))


def test_orbit_algebra_dimensions():
    expected = {"f1": 3, "f2": 3, "f3": 3, "f4": 2, "f5": 2}
    for fid, dim in expected.items():
        x, jx = generator(fid)
        assert generated_algebra_dimension([x, jx]) == dim, fid
    full = [MVec.basis(i) for i in range(1, 7)]
    assert generated_algebra_dimension(full) == 8


def test_f4_generators_commute():
    x, jx = generator("f4")
    assert not bracket(x.to_matrix(), jx.to_matrix())


def test_f5_generators_commute():
    x, jx = generator("f5")
    assert not bracket(x.to_matrix(), jx.to_matrix())


def test_certificates_all_ok():
    for fid in ALL_IDS:
        cert = certify(fid, samples=50, tol=1e-8, seed=1)
        assert cert.ok, (fid, cert.to_dict())
        assert cert.almost_complex and cert.totally_geodesic


def test_certificate_details():
    cert = certify("f2", samples=20, seed=4)
    assert cert.method == "sff"
    assert cert.induced_signature == (2, 0, 0)
    assert cert.curvature == "1"
    assert cert.orbit_group == "SO(3)"
    assert cert.orbit_algebra_dim == 3
    cert5 = certify("f5", samples=20, seed=4)
    assert cert5.method == "canonical-embedding"
    assert cert5.induced_signature == (0, 0, 2)
    assert cert5.curvature == "degenerate"
    assert cert5.orbit_algebra_dim == 2


def test_certificate_signatures_and_curvatures():
    expected = {
        "f1": ((0, 2, 0), "4"),
        "f2": ((2, 0, 0), "1"),
        "f3": ((0, 2, 0), "1"),
        "f4": ((0, 2, 0), "0"),
        "f5": ((0, 0, 2), "degenerate"),
    }
    for fid, (signature, curvature) in expected.items():
        cert = certify(fid, samples=10, seed=6)
        assert cert.induced_signature == signature, fid
        assert cert.curvature == curvature, fid


def test_certificate_dict_schema():
    payload = certify("f1", samples=10, seed=0).to_dict()
    assert set(payload) == {"id", "almost_complex", "totally_geodesic",
                            "method", "induced_signature", "curvature",
                            "orbit_group", "orbit_algebra_dim", "exp_check"}
    assert set(payload["exp_check"]) == {"samples", "tol", "max_dev"}
