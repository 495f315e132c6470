"""The five totally geodesic almost complex surfaces through the base coset.

Each family carries an exact tangent generator pair (X, JX), the orbit
subgroup it sweeps out, and the closed-form coset representative of
π ∘ exp(·) in the parameters (u, v).  Certification combines exact tangent
algebra (almost complex spans, second fundamental form, induced signature,
sectional constants, orbit algebra closure) with a numeric cross-check of
the closed forms against a matrix exponential.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from . import linalg
from .exactfield import SQRT2, SQRT3, FieldElem
from .liealg import (AlgMat, MVec, basis_matrix, bracket, decompose,
                     m_component, metric, stabilizer_element)
from .nkgeom import J, sectional

_HALF = Fraction(1, 2)


class DegenerateSpanError(ValueError):
    """sff was asked to project onto a span with degenerate induced metric."""


@dataclass(frozen=True)
class SurfaceFamily:
    id: str
    orbit_group: str
    x: MVec
    jx: MVec
    expected_signature: tuple[int, int, int]
    expected_curvature: FieldElem | None
    closed_form: Callable[[float, float], np.ndarray]
    exp_argument: Callable[[float, float], np.ndarray]
    u_range: tuple[float, float]
    v_range: tuple[float, float]


def _mvec(*pairs: tuple[int, FieldElem | int | Fraction]) -> MVec:
    coeffs: list[FieldElem | int | Fraction] = [0] * 6
    for index, value in pairs:
        coeffs[index - 1] = value
    return MVec(coeffs)


_E_FLOAT = [basis_matrix(i).to_float() for i in range(1, 9)]

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


def _closed_f1(u: float, v: float) -> np.ndarray:
    ch, sh = math.cosh(u), math.sinh(u)
    return np.array([
        [ch + math.cos(v) * sh, math.sin(v) * sh, 0.0],
        [math.sin(v) * sh, ch - math.cos(v) * sh, 0.0],
        [0.0, 0.0, 1.0],
    ])


def _closed_f2(u: float, v: float) -> np.ndarray:
    cu, su = math.cos(u), math.sin(u)
    return np.array([
        [cu * cu - math.cos(2 * v) * su * su, -su * su * math.sin(2 * v),
         math.cos(v) * math.sin(2 * u)],
        [-su * su * math.sin(2 * v), cu * cu + math.cos(2 * v) * su * su,
         math.sin(2 * u) * math.sin(v)],
        [-math.cos(v) * math.sin(2 * u), -math.sin(2 * u) * math.sin(v),
         math.cos(2 * u)],
    ])


def _closed_f3(u: float, v: float) -> np.ndarray:
    ch, sh = math.cosh(u), math.sinh(u)
    return np.array([
        [ch * ch + math.cos(2 * v) * sh * sh, math.sin(2 * v) * sh * sh,
         math.cos(v) * math.sinh(2 * u)],
        [math.sin(2 * v) * sh * sh, ch * ch - math.cos(2 * v) * sh * sh,
         math.sin(v) * math.sinh(2 * u)],
        [math.cos(v) * math.sinh(2 * u), math.sin(v) * math.sinh(2 * u),
         math.cosh(2 * u)],
    ])


def _closed_f4(u: float, v: float) -> np.ndarray:
    ev, emv = math.exp(v), math.exp(-v)
    euv = math.exp(u + v)
    sh, ch = math.sinh(v), math.cosh(v)
    s3, s6 = math.sqrt(3.0), math.sqrt(6.0)
    core = np.array([
        [emv * (1 + ev * ev + 4 * euv) / 6.0, -sh / s3,
         -emv * (1 + ev * ev - 2 * euv) / s6],
        [-sh / s3, ch, math.sqrt(2.0) * sh],
        [-emv * (1 + ev * ev - 2 * euv) / (3.0 * s6), math.sqrt(2.0) * sh / 3.0,
         emv * (1 + ev * ev + euv) / 3.0],
    ])
    return math.exp(-u / 3.0) * core


def _closed_f5(u: float, v: float) -> np.ndarray:
    return np.array([[1.0, 0.0, u], [0.0, 1.0, v], [0.0, 0.0, 1.0]])


def _polar_argument(x: np.ndarray, y: np.ndarray, factor: float
                    ) -> Callable[[float, float], np.ndarray]:
    def argument(u: float, v: float) -> np.ndarray:
        return factor * u * (math.cos(v) * x + math.sin(v) * y)
    return argument


def _linear_argument(x: np.ndarray, y: np.ndarray
                     ) -> Callable[[float, float], np.ndarray]:
    def argument(u: float, v: float) -> np.ndarray:
        return u * x + v * y
    return argument


def _build_families() -> dict[str, SurfaceFamily]:
    inv_sqrt2 = SQRT2 * _HALF
    inv_sqrt3 = SQRT3 * Fraction(1, 3)
    third = Fraction(1, 3)

    x1 = _mvec((1, 1))
    x2 = _mvec((3, inv_sqrt2), (5, inv_sqrt2))
    x3 = _mvec((3, inv_sqrt2), (5, -inv_sqrt2))
    x4 = _mvec((1, inv_sqrt3), (3, 1), (5, -third))
    x5 = _mvec((3, 1))

    def fam(fid: str, group: str, x: MVec, signature: tuple[int, int, int],
            curvature: FieldElem | None, closed, argument, u_range, v_range
            ) -> SurfaceFamily:
        return SurfaceFamily(fid, group, x, J.apply(x), signature, curvature,
                             closed, argument, u_range, v_range)

    two_pi = 2.0 * math.pi
    families = [
        fam("f1", "SL(2,R)", x1, (0, 2, 0), FieldElem(4), _closed_f1,
            _polar_argument(_E_FLOAT[0], _E_FLOAT[1], 1.0),
            (-2.0, 2.0), (0.0, two_pi)),
        fam("f2", "SO(3)", x2, (2, 0, 0), FieldElem(1), _closed_f2,
            _polar_argument(x2.to_matrix().to_float(),
                            J.apply(x2).to_matrix().to_float(), 2.0),
            (-2.0, 2.0), (0.0, two_pi)),
        fam("f3", "SO+(2,1)", x3, (0, 2, 0), FieldElem(1), _closed_f3,
            _polar_argument(x3.to_matrix().to_float(),
                            J.apply(x3).to_matrix().to_float(), 2.0),
            (-2.0, 2.0), (0.0, two_pi)),
        # The f4 closed form's u-derivative at the origin is X/√3, not X:
        # its u coordinate runs along X/√3 (same span, same surface), so the
        # exponential argument must carry that scaling to match it pointwise.
        fam("f4", "R2", x4, (0, 2, 0), FieldElem(0), _closed_f4,
            _linear_argument(x4.to_matrix().to_float() / math.sqrt(3.0),
                             J.apply(x4).to_matrix().to_float()),
            (-2.0, 2.0), (-2.0, 2.0)),
        fam("f5", "R2-degenerate", x5, (0, 0, 2), None, _closed_f5,
            _linear_argument(_INV_SQRT2 * _E_FLOAT[2], _INV_SQRT2 * _E_FLOAT[3]),
            (-3.0, 3.0), (-3.0, 3.0)),
    ]
    return {family.id: family for family in families}


FAMILIES: dict[str, SurfaceFamily] = _build_families()

_ORBIT_DIMENSION = {"SL(2,R)": 3, "SO(3)": 3, "SO+(2,1)": 3,
                    "R2": 2, "R2-degenerate": 2}


def family(fid: str) -> SurfaceFamily:
    try:
        return FAMILIES[fid]
    except KeyError:
        raise ValueError(f"unknown surface family: {fid!r}") from None


def generator(fid: str) -> tuple[MVec, MVec]:
    fam = family(fid)
    return fam.x, fam.jx


def closed_form(fid: str, u: float, v: float) -> np.ndarray:
    return family(fid).closed_form(u, v)


def expm(a: np.ndarray) -> np.ndarray:
    """Matrix exponential by scaling and squaring of the power series."""
    a = np.asarray(a, dtype=float)
    norm = float(np.linalg.norm(a, ord=np.inf))
    squarings = max(0, int(math.ceil(math.log2(norm / 0.25))) if norm > 0.25 else 0)
    scaled = a / (2.0 ** squarings)
    result = np.eye(a.shape[0])
    term = np.eye(a.shape[0])
    for k in range(1, 30):
        term = term @ scaled / k
        result = result + term
        if float(np.linalg.norm(term, ord=np.inf)) < 1e-18:
            break
    for _ in range(squarings):
        result = result @ result
    return result


def _frobenius(a: np.ndarray) -> float:
    return float(np.linalg.norm(a, ord="fro"))


def coset_deviation(achieved: np.ndarray, target: np.ndarray) -> float:
    """Frobenius distance between coset representatives after aligning with
    the best stabilizer element h(t, s).

    The displays are exact representatives, so the identity alignment is
    expected to win already; the numeric minimization is a safety net for
    representative mismatches.
    """
    direct = _frobenius(achieved - target)
    if direct <= 1e-12:
        return direct
    from scipy.optimize import minimize

    def objective(params: np.ndarray) -> float:
        t, s = params
        return _frobenius(achieved @ stabilizer_element(t, s) - target)

    best = direct
    for t0 in (0.0, 0.5, -0.5):
        for s0 in (0.0, 0.5 * math.pi, math.pi, 1.5 * math.pi):
            outcome = minimize(objective, np.array([t0, s0]), method="Nelder-Mead",
                               options={"xatol": 1e-12, "fatol": 1e-15,
                                        "maxiter": 400})
            best = min(best, float(outcome.fun))
    return best


@dataclass(frozen=True)
class ExpCheckResult:
    id: str
    samples: int
    tol: float
    max_dev: float

    @property
    def passed(self) -> bool:
        return self.max_dev <= self.tol

    def to_dict(self) -> dict:
        return {"samples": self.samples, "tol": self.tol, "max_dev": self.max_dev}


def exp_check(fid: str, samples: int = 100, tol: float = 1e-8,
              seed: int = 0) -> ExpCheckResult:
    """Compare expm of the family's Lie-algebra argument against the closed
    form on seeded random (u, v), as cosets."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    fam = family(fid)
    rng = random.Random(seed)
    max_dev = 0.0
    for _ in range(samples):
        u = rng.uniform(*fam.u_range)
        v = rng.uniform(*fam.v_range)
        achieved = expm(fam.exp_argument(u, v))
        target = fam.closed_form(u, v)
        max_dev = max(max_dev, coset_deviation(achieved, target))
    return ExpCheckResult(fid, samples, tol, max_dev)


def sff(kbasis: Sequence[MVec], x: MVec, y: MVec) -> MVec:
    """Second fundamental form of the orbit at the base point:
    h(X, Y) = ½·[X, Y]_{k_m^⊥}, the metric-normal part of the bracket's
    tangent component."""
    vectors = [list(k.coeffs) for k in kbasis]
    for w in (x, y):
        coeffs, _ = linalg.solve_in_span(vectors, list(w.coeffs))
        if coeffs is None:
            raise ValueError("sff arguments must lie in span(kbasis)")
    gram = [[metric(ki, kj) for kj in kbasis] for ki in kbasis]
    try:
        inverse = linalg.invert(gram)
    except ValueError:
        raise DegenerateSpanError(
            "span has degenerate induced metric; use the canonical-embedding "
            "criterion instead") from None
    w = m_component(bracket(x.to_matrix(), y.to_matrix()))
    pairings = [metric(w, ki) for ki in kbasis]
    tangent = MVec.zero()
    for i, ki in enumerate(kbasis):
        coeff = sum((inverse[i][j] * pairings[j] for j in range(len(kbasis))),
                    start=FieldElem(0))
        if coeff:
            tangent = tangent + ki * coeff
    return (w - tangent) * _HALF


def generated_algebra_dimension(seeds: Sequence[MVec]) -> int:
    """Dimension of the Lie algebra generated by the seed tangent vectors."""
    generators: list[AlgMat] = [v.to_matrix() for v in seeds]
    rows = [list(decompose(mat).coeffs) for mat in generators]
    current = linalg.rank(rows)
    while True:
        new_mats = [bracket(a, b)
                    for i, a in enumerate(generators)
                    for b in generators[i + 1:]]
        candidate_rows = rows + [list(decompose(mat).coeffs)
                                 for mat in new_mats if mat]
        new_rank = linalg.rank(candidate_rows)
        if new_rank == current:
            return current
        generators.extend(mat for mat in new_mats if mat)
        rows = candidate_rows
        current = new_rank


def _canonically_embedded(span: Sequence[MVec]) -> bool:
    """The span, viewed inside the algebra, is closed under bracket with all
    components staying inside it (so k = (k ∩ h) ⊕ (k ∩ m) with k ∩ h = 0)."""
    vectors = [list(v.to_full().coeffs) for v in span]
    for i, a in enumerate(span):
        for b in span[i + 1:]:
            product = bracket(a.to_matrix(), b.to_matrix())
            coeffs, _ = linalg.solve_in_span(vectors,
                                             list(decompose(product).coeffs))
            if coeffs is None:
                return False
    return True


@dataclass(frozen=True)
class Certificate:
    id: str
    almost_complex: bool
    totally_geodesic: bool
    method: str
    induced_signature: tuple[int, int, int]
    curvature: str
    orbit_group: str
    orbit_algebra_dim: int
    orbit_dim_matches: bool
    exp_check: ExpCheckResult

    @property
    def ok(self) -> bool:
        fam = family(self.id)
        expected = "degenerate" if fam.expected_curvature is None \
            else str(fam.expected_curvature)
        return (self.almost_complex and self.totally_geodesic
                and self.induced_signature == fam.expected_signature
                and self.curvature == expected
                and self.orbit_dim_matches and self.exp_check.passed)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "almost_complex": self.almost_complex,
            "totally_geodesic": self.totally_geodesic,
            "method": self.method,
            "induced_signature": list(self.induced_signature),
            "curvature": self.curvature,
            "orbit_group": self.orbit_group,
            "orbit_algebra_dim": self.orbit_algebra_dim,
            "exp_check": self.exp_check.to_dict(),
        }


def certify(fid: str, samples: int = 100, tol: float = 1e-8,
            seed: int = 0) -> Certificate:
    """Exact certification of the family: J-stable span, totally geodesic
    (sff = 0, or canonical embedding when the span is degenerate), induced
    signature and curvature constant, orbit algebra dimension; plus the
    numeric exponential cross-check."""
    fam = family(fid)
    x, jx = fam.x, fam.jx
    span = [x, jx]
    vectors = [list(v.coeffs) for v in span]

    almost_complex = all(
        linalg.solve_in_span(vectors, list(J.apply(v).coeffs))[0] is not None
        for v in span)

    gram = [[metric(u, v) for v in span] for u in span]
    induced_signature = linalg.signature(gram)
    degenerate = induced_signature[2] > 0

    if degenerate:
        method = "canonical-embedding"
        totally_geodesic = _canonically_embedded(span)
        curvature_text = "degenerate"
    else:
        method = "sff"
        pairs = [(x, x), (x, jx), (jx, jx)]
        totally_geodesic = all(not sff(span, u, v) for u, v in pairs)
        curvature_text = str(sectional(x, jx))

    dim = generated_algebra_dimension(span)
    return Certificate(
        id=fid,
        almost_complex=almost_complex,
        totally_geodesic=totally_geodesic,
        method=method,
        induced_signature=induced_signature,
        curvature=curvature_text,
        orbit_group=fam.orbit_group,
        orbit_algebra_dim=dim,
        orbit_dim_matches=dim == _ORBIT_DIMENSION[fam.orbit_group],
        exp_check=exp_check(fid, samples=samples, tol=tol, seed=seed),
    )
