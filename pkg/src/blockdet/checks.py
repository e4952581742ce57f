"""One checker per determinantal inequality, with equality diagnostics.

Every checker returns a :class:`CheckReport` whose ``lhs`` is the side the
inequality claims dominates and whose ``rhs`` is the dominated side, so for
a holding instance ``margin = log|lhs| - log|rhs| >= 0``.  Comparisons run
entirely in the log domain: the counterexample families push determinants
to 1e8 and beyond, where raw subtraction in double precision is meaningless.

Where the inequality has a characterized equality case (cor_c0, lemma1,
thm2, drury, thm3), classification is structural-first: the checker computes
both the numeric margin and the structural condition, reports the verdict
from the structure, and attaches a discrepancy diagnostic if the two
disagree instead of silently trusting either.

All checkers are stateless pure functions over immutable inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    BlockUpperTriangular,
    ShapeError,
    SignedLogDet,
    SingularBlockError,
    Tolerances,
    abs_matrix,
    as_matrix,
    det,
    frobenius_norm,
    general_eigenvalues,
    hermitian_eigensystem,
    identity,
    predicates,
    schur_complement,
    singular_values,
    _clamp_psd_eigenvalues,
    _require_square,
)

__all__ = [
    "INEQUALITY_IDS",
    "Verdict",
    "Finding",
    "CheckReport",
    "BlockFamily",
    "check_fischer",
    "check_thm1",
    "check_thm1_schur_steps",
    "check_cor_c0",
    "check_cor_c1",
    "check_c1_proof_step",
    "check_lemma1",
    "check_djokovic",
    "check_thm2",
    "check_drury",
    "check_thm3",
    "check_log_major",
    "check_weyl",
    "check_schur_identity",
    "check_e21",
]

INEQUALITY_IDS = (
    "fischer",
    "thm1",
    "cor_c0",
    "cor_c1",
    "lemma1",
    "djokovic",
    "thm2",
    "drury",
    "thm3",
    "weyl",
    "log_major",
    "schur_identity",
    "e21",
)


class Verdict(str, Enum):
    HOLDS_STRICT = "holds_strict"
    EQUALITY = "equality"
    VIOLATED = "violated"
    PRECONDITION_FAILED = "precondition_failed"


@dataclass(frozen=True)
class Finding:
    """A named structural observation attached to a report."""

    name: str
    value: object

    def to_json_dict(self) -> dict:
        return {"name": self.name, "value": _json_value(self.value)}


def _json_value(v):
    if isinstance(v, np.bool_):
        return bool(v)
    if isinstance(v, (bool, str)) or v is None:
        return v
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        return int(v)
    f = float(v)
    if math.isinf(f):
        return "inf" if f > 0 else "-inf"
    return f


def _float_from_json(v):
    if v == "inf":
        return float("inf")
    if v == "-inf":
        return float("-inf")
    return float(v)


def _sld_to_json(s: SignedLogDet) -> dict:
    return {
        "phase_re": float(s.phase.real),
        "phase_im": float(s.phase.imag),
        "log_magnitude": float(s.log_magnitude),
        "is_zero": bool(s.is_zero),
    }


def _sld_from_json(doc: dict) -> SignedLogDet:
    if doc["is_zero"]:
        return SignedLogDet.zero()
    return SignedLogDet(complex(doc["phase_re"], doc["phase_im"]), float(doc["log_magnitude"]))


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one inequality evaluation.

    ``margin`` is log|lhs| - log|rhs| (+inf / -inf when exactly one side is a
    flagged zero, 0 when both are).  ``diagnostics`` carries named structural
    findings such as the off-diagonal mass that drives an equality verdict.
    """

    inequality_id: str
    lhs: SignedLogDet
    rhs: SignedLogDet
    margin: float
    verdict: Verdict
    diagnostics: tuple[Finding, ...] = ()

    def finding(self, name: str):
        for f in self.diagnostics:
            if f.name == name:
                return f.value
        raise KeyError(f"no diagnostic named {name!r}")

    def to_json_dict(self) -> dict:
        return {
            "inequality_id": self.inequality_id,
            "lhs": _sld_to_json(self.lhs),
            "rhs": _sld_to_json(self.rhs),
            "margin": _json_value(self.margin),
            "verdict": self.verdict.value,
            "diagnostics": [f.to_json_dict() for f in self.diagnostics],
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "CheckReport":
        return cls(
            inequality_id=doc["inequality_id"],
            lhs=_sld_from_json(doc["lhs"]),
            rhs=_sld_from_json(doc["rhs"]),
            margin=_float_from_json(doc["margin"]),
            verdict=Verdict(doc["verdict"]),
            diagnostics=tuple(Finding(d["name"], d["value"]) for d in doc["diagnostics"]),
        )


@dataclass(frozen=True)
class BlockFamily:
    """Conformally partitioned block upper-triangular matrices, shared (n, r)."""

    members: tuple[BlockUpperTriangular, ...]

    def __post_init__(self):
        if len(self.members) == 0:
            raise ShapeError("a block family needs at least one member")
        n, r = self.members[0].n, self.members[0].r
        for k, member in enumerate(self.members):
            if (member.n, member.r) != (n, r):
                raise ShapeError(
                    f"member {k} has partition (n={member.n}, r={member.r}), "
                    f"expected (n={n}, r={r})"
                )

    @property
    def n(self) -> int:
        return self.members[0].n

    @property
    def r(self) -> int:
        return self.members[0].r

    @property
    def m(self) -> int:
        return len(self.members)


# ---------------------------------------------------------------------------
# Verdict machinery


def _eq_window(lhs: SignedLogDet, tol: Tolerances) -> float:
    anchor = abs(lhs.log_magnitude) if not lhs.is_zero else 0.0
    return tol.eq_rel * max(1.0, anchor)


def _margin_verdict(margin: float, lhs: SignedLogDet, tol: Tolerances) -> Verdict:
    eps = _eq_window(lhs, tol)
    if margin < -eps:
        return Verdict.VIOLATED
    if abs(margin) <= eps:
        return Verdict.EQUALITY
    return Verdict.HOLDS_STRICT


def _structural_verdict(
    margin: float,
    lhs: SignedLogDet,
    structural_equality: bool,
    tol: Tolerances,
) -> tuple[Verdict, tuple[Finding, ...]]:
    """Equality from the structural condition; margin only decides violation.

    Returns extra findings when numeric and structural classification
    disagree, which is the signal the equality-condition tests key on.
    """
    eps = _eq_window(lhs, tol)
    numeric_equality = abs(margin) <= eps
    extra: tuple[Finding, ...] = ()
    if margin < -eps:
        verdict = Verdict.VIOLATED
        if structural_equality:
            extra = (Finding("structural_numeric_mismatch", True),)
    elif structural_equality:
        verdict = Verdict.EQUALITY
        if not numeric_equality:
            extra = (Finding("structural_numeric_mismatch", True),)
    else:
        verdict = Verdict.HOLDS_STRICT
        if numeric_equality:
            extra = (Finding("margin_within_equality_band", True),)
    return verdict, extra


def _report(
    inequality_id: str,
    lhs: SignedLogDet,
    rhs: SignedLogDet,
    tol: Tolerances,
    structural_equality: bool | None = None,
    diagnostics: tuple[Finding, ...] = (),
    force_verdict: Verdict | None = None,
) -> CheckReport:
    margin = lhs.log_ratio(rhs)
    if force_verdict is not None:
        verdict = force_verdict
    elif structural_equality is None:
        verdict = _margin_verdict(margin, lhs, tol)
    else:
        verdict, extra = _structural_verdict(margin, lhs, structural_equality, tol)
        diagnostics = diagnostics + extra
    return CheckReport(inequality_id, lhs, rhs, margin, verdict, diagnostics)


def _log_det_identity_plus_power(gram: np.ndarray, p: float, tol: Tolerances) -> SignedLogDet:
    """det(I + G^{p/2}) for a PSD Gram matrix G, evaluated spectrally.

    G^{p/2} is the p-th power of the PSD square root of G, so the value is
    the product of 1 + lambda^{p/2} over the eigenvalues of G; summing
    log1p terms keeps it exact in the log domain.
    """
    w, _ = hermitian_eigensystem(gram, tol)
    w = _clamp_psd_eigenvalues(w, tol, "det(I + |.|^p)")
    return SignedLogDet.from_log(float(np.sum(np.log1p(np.power(w, p / 2.0)))))


def _sum_gram(blocks: list[np.ndarray]) -> np.ndarray:
    acc = blocks[0].conj().T @ blocks[0]
    for b in blocks[1:]:
        acc = acc + b.conj().T @ b
    return acc


def _sum_conj_product(blocks: list[np.ndarray]) -> np.ndarray:
    acc = blocks[0].conj() @ blocks[0]
    for b in blocks[1:]:
        acc = acc + b.conj() @ b
    return acc


# ---------------------------------------------------------------------------
# Checkers


def check_fischer(a: np.ndarray, r: int, tol: Tolerances = DEFAULT_TOL) -> CheckReport:
    """det A11 * det A22 >= det A for PSD A split at r.

    Non-PSD input yields verdict ``precondition_failed`` with the offending
    minimum eigenvalue attached; both sides are still evaluated for context.
    """
    a = as_matrix(a)
    _require_square(a, "check_fischer")
    n = a.shape[0]
    if not 0 < r < n:
        raise ShapeError(f"block split must satisfy 0 < r < n, got r={r}, n={n}")
    preds = predicates(a, tol)
    diagnostics = [Finding("is_psd", preds.is_psd)]
    if preds.is_hermitian:
        w, _ = hermitian_eigensystem(a, tol)
        diagnostics.append(Finding("min_eigenvalue", float(w[-1])))
    lhs = det(a[:r, :r], tol) * det(a[r:, r:], tol)
    rhs = det(a, tol)
    force = None if preds.is_psd else Verdict.PRECONDITION_FAILED
    return _report("fischer", lhs, rhs, tol, diagnostics=tuple(diagnostics), force_verdict=force)


def check_thm1(family: BlockFamily, tol: Tolerances = DEFAULT_TOL) -> CheckReport:
    """det(sum T_k* T_k) >= det(sum X_k* X_k) * det(sum Z_k* Z_k).

    Holds for any conformally partitioned family; no equality condition is
    claimed.  The diagnostics flag a singular sum X_k* X_k, the case the
    proof handles by continuity.
    """
    full = [m.assemble() for m in family.members]
    lhs = det(_sum_gram(full), tol)
    rhs_x = det(_sum_gram([m.x for m in family.members]), tol)
    rhs_z = det(_sum_gram([m.z for m in family.members]), tol)
    diagnostics = (Finding("sum_xx_singular", bool(rhs_x.is_zero)),)
    return _report("thm1", lhs, rhs_x * rhs_z, tol, diagnostics=diagnostics)


def check_thm1_schur_steps(family: BlockFamily, tol: Tolerances = DEFAULT_TOL) -> tuple[Finding, ...]:
    """The two positivity facts behind the summed-Gram determinant bound.

    (i) the stacked Gram sum [[sum X*X, sum X*Y], [sum Y*X, sum Y*Y]] is PSD;
    (ii) the Schur complement of sum X*X in sum T*T dominates sum Z*Z in the
    PSD order.  A singular sum X*X short-circuits to a failed-precondition
    finding, since the complement then does not exist.
    """
    xs = [m.x for m in family.members]
    ys = [m.y for m in family.members]
    sum_xx = _sum_gram(xs)
    sigma = singular_values(sum_xx, tol)
    if float(sigma[-1]) <= tol.pivot_rel * float(sigma[0]):
        return (Finding("sum_xx_nonsingular", False),)
    r, s = family.r, family.n - family.r
    stacked = np.zeros((r + s, r + s), dtype=complex)
    stacked[:r, :r] = sum_xx
    sum_xy = sum(x.conj().T @ y for x, y in zip(xs, ys))
    stacked[:r, r:] = sum_xy
    stacked[r:, :r] = sum_xy.conj().T
    stacked[r:, r:] = sum(y.conj().T @ y for y in ys)
    gram_psd = predicates(stacked, tol).is_psd
    sum_tt = _sum_gram([m.assemble() for m in family.members])
    complement = schur_complement(sum_tt, family.r, tol)
    gap = complement - _sum_gram([m.z for m in family.members])
    gap = (gap + gap.conj().T) / 2.0
    w, _ = hermitian_eigensystem(gap, tol)
    scale = max(float(np.max(np.abs(w))) if w.size else 0.0, frobenius_norm(complement))
    dominates = bool(np.min(w) >= -tol.psd_rel * max(scale, 1e-300)) if w.size else True
    return (
        Finding("sum_xx_nonsingular", True),
        Finding("stacked_gram_sum_psd", bool(gram_psd)),
        Finding("schur_complement_dominates_zz", dominates),
    )


def _y_is_structurally_zero(t: BlockUpperTriangular, tol: Tolerances) -> tuple[bool, float]:
    y_norm = frobenius_norm(t.y)
    total = math.sqrt(
        frobenius_norm(t.x) ** 2 + frobenius_norm(t.y) ** 2 + frobenius_norm(t.z) ** 2
    )
    return y_norm <= tol.predicate_rel * (1.0 + total), y_norm


def check_cor_c0(t: BlockUpperTriangular, tol: Tolerances = DEFAULT_TOL) -> CheckReport:
    """det(I + T*T) >= det(I + X*X) * det(I + Z*Z), equality iff Y = 0."""
    full = t.assemble()
    n, r = t.n, t.r
    lhs = det(identity(n) + full.conj().T @ full, tol)
    rhs = det(identity(r) + t.x.conj().T @ t.x, tol) * det(
        identity(n - r) + t.z.conj().T @ t.z, tol
    )
    y_zero, y_norm = _y_is_structurally_zero(t, tol)
    diagnostics = (Finding("y_frobenius", y_norm),)
    return _report("cor_c0", lhs, rhs, tol, structural_equality=y_zero, diagnostics=diagnostics)


def check_cor_c1(
    family: BlockFamily,
    tol: Tolerances = DEFAULT_TOL,
    allow_hypothesis_violation: bool = False,
) -> CheckReport:
    """det(sum T_k* T_k) >= |det(sum conj(X_k) X_k)| * |det(sum conj(Z_k) Z_k)|.

    Requires every X_k and Z_k normal.  When the hypothesis fails the sides
    are still evaluated (that configuration is exactly what the violation
    search needs); the verdict is ``precondition_failed`` unless
    ``allow_hypothesis_violation`` is set, in which case the margin decides.
    The signed inner determinants are reported as diagnostics because the
    X-factor can be genuinely negative before the absolute value.
    """
    normal = all(
        predicates(m.x, tol).is_normal and predicates(m.z, tol).is_normal
        for m in family.members
    )
    lhs = det(_sum_gram([m.assemble() for m in family.members]), tol)
    inner_x = det(_sum_conj_product([m.x for m in family.members]), tol)
    inner_z = det(_sum_conj_product([m.z for m in family.members]), tol)
    rhs = inner_x.abs() * inner_z.abs()
    diagnostics = [
        Finding("blocks_all_normal", normal),
        Finding("det_xbar_x_re", float(inner_x.value.real)),
        Finding("det_xbar_x_im", float(inner_x.value.imag)),
        Finding("det_zbar_z_re", float(inner_z.value.real)),
        Finding("det_zbar_z_im", float(inner_z.value.imag)),
    ]
    force = None
    if not normal:
        diagnostics.append(Finding("hypothesis_violated", True))
        if not allow_hypothesis_violation:
            margin = lhs.log_ratio(rhs)
            diagnostics.append(
                Finding("evaluated_verdict", _margin_verdict(margin, lhs, tol).value)
            )
            force = Verdict.PRECONDITION_FAILED
    return _report("cor_c1", lhs, rhs, tol, diagnostics=tuple(diagnostics), force_verdict=force)


def check_c1_proof_step(family: BlockFamily, tol: Tolerances = DEFAULT_TOL) -> Finding:
    """PSD-ness of the 2x2 matrix of determinants built from the X blocks.

    The matrix is [[det sum conj(X)X', det sum conj(X)X],
                   [det sum X*X',      det sum X*X]].
    Scaling all four entries by the largest magnitude leaves positive
    semidefiniteness unchanged and avoids overflow at the 1e8 scales the
    counterexample family produces.
    """
    xs = [m.x for m in family.members]
    d11 = det(sum(x.conj() @ x.T for x in xs), tol)
    d12 = det(sum(x.conj() @ x for x in xs), tol)
    d21 = det(sum(x.conj().T @ x.T for x in xs), tol)
    d22 = det(sum(x.conj().T @ x for x in xs), tol)
    logs = [d.log_magnitude for d in (d11, d12, d21, d22) if not d.is_zero]
    shift = max(logs) if logs else 0.0
    def scaled(d: SignedLogDet) -> complex:
        if d.is_zero:
            return 0j
        return d.phase * math.exp(d.log_magnitude - shift)
    m2 = np.array([[scaled(d11), scaled(d12)], [scaled(d21), scaled(d22)]], dtype=complex)
    return Finding("det_gram_2x2_psd", bool(predicates(m2, tol).is_psd))


def check_lemma1(x: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> CheckReport:
    """det(I + X*X) >= det(I + conj(X) X), equality iff X is symmetric."""
    x = as_matrix(x)
    _require_square(x, "check_lemma1")
    n = x.shape[0]
    lhs = det(identity(n) + x.conj().T @ x, tol)
    rhs = det(identity(n) + x.conj() @ x, tol)
    asymmetry = frobenius_norm(x - x.T)
    symmetric = predicates(x, tol).is_symmetric
    diagnostics = (
        Finding("is_symmetric", symmetric),
        Finding("asymmetry_frobenius", asymmetry),
    )
    return _report("lemma1", lhs, rhs, tol, structural_equality=symmetric, diagnostics=diagnostics)


def _log1p_exp(log_mag: float) -> float:
    """log(1 + exp(log_mag)), overflow-safe."""
    if log_mag > 0.0:
        return log_mag + math.log1p(math.exp(-log_mag))
    return math.log1p(math.exp(log_mag))


def check_djokovic(x: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> CheckReport:
    """det(I + conj(X) X) >= 0.

    One-sided: rhs is the zero determinant and the margin is the signed,
    compressed value sign(Re det) * log1p(|det|) so that it is finite,
    positive exactly when the determinant is positive, and comparable
    across scales.  A determinant with a non-real phase beyond the equality
    window counts as a violation (the quantity is real in exact arithmetic).
    """
    x = as_matrix(x)
    _require_square(x, "check_djokovic")
    n = x.shape[0]
    d = det(identity(n) + x.conj() @ x, tol)
    rhs = SignedLogDet.zero()
    if d.is_zero:
        return CheckReport(
            "djokovic", d, rhs, 0.0, Verdict.EQUALITY, (Finding("det_is_zero", True),)
        )
    eps = _eq_window(d, tol)
    imag_ok = abs(d.phase.imag) <= tol.eq_rel
    real_part = d.phase.real
    compressed = math.copysign(_log1p_exp(d.log_magnitude), real_part)
    diagnostics = (
        Finding("phase_re", float(d.phase.real)),
        Finding("phase_im", float(d.phase.imag)),
    )
    if not imag_ok:
        verdict = Verdict.VIOLATED
    elif real_part * math.exp(min(d.log_magnitude, 700.0)) < -eps:
        verdict = Verdict.VIOLATED
    elif abs(real_part) * math.exp(min(d.log_magnitude, 700.0)) <= eps:
        verdict = Verdict.EQUALITY
        compressed = 0.0
    else:
        verdict = Verdict.HOLDS_STRICT
    return CheckReport("djokovic", d, rhs, compressed, verdict, diagnostics)


def check_thm2(t: BlockUpperTriangular, tol: Tolerances = DEFAULT_TOL) -> CheckReport:
    """det(I + T*T) >= det(I + conj(X) X) * det(I + conj(Z) Z).

    No absolute value on the right: each factor is itself nonnegative.
    Equality iff Y = 0 and both X and Z are symmetric.
    """
    full = t.assemble()
    n, r = t.n, t.r
    lhs = det(identity(n) + full.conj().T @ full, tol)
    rhs = det(identity(r) + t.x.conj() @ t.x, tol) * det(
        identity(n - r) + t.z.conj() @ t.z, tol
    )
    y_zero, y_norm = _y_is_structurally_zero(t, tol)
    x_sym = predicates(t.x, tol).is_symmetric
    z_sym = predicates(t.z, tol).is_symmetric
    diagnostics = (
        Finding("y_frobenius", y_norm),
        Finding("x_is_symmetric", x_sym),
        Finding("z_is_symmetric", z_sym),
    )
    return _report(
        "thm2", lhs, rhs, tol,
        structural_equality=y_zero and x_sym and z_sym,
        diagnostics=diagnostics,
    )


def check_drury(t: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> CheckReport:
    """det(I + T*T) >= prod(1 + |t_jj|^2) for upper triangular T.

    Equality iff T is diagonal.  A non-triangular input is a failed
    precondition; both sides are still evaluated for context.
    """
    t = as_matrix(t)
    _require_square(t, "check_drury")
    n = t.shape[0]
    triangular = predicates(t, tol).is_upper_triangular
    lhs = det(identity(n) + t.conj().T @ t, tol)
    diag_sq = np.abs(np.diagonal(t)) ** 2
    rhs = SignedLogDet.from_log(float(np.sum(np.log1p(diag_sq))))
    off_mass = float(np.linalg.norm(t - np.diag(np.diagonal(t))))
    diagonal = off_mass <= tol.predicate_rel * frobenius_norm(t)
    diagnostics = (Finding("off_diagonal_frobenius", off_mass),)
    if not triangular:
        diagnostics = diagnostics + (Finding("is_upper_triangular", False),)
        return _report("drury", lhs, rhs, tol, diagnostics=diagnostics,
                       force_verdict=Verdict.PRECONDITION_FAILED)
    return _report("drury", lhs, rhs, tol, structural_equality=diagonal, diagnostics=diagnostics)


def check_thm3(t: BlockUpperTriangular, p: float, tol: Tolerances = DEFAULT_TOL) -> CheckReport:
    """det(I + |T|^p) >= det(I + |X|^p) * det(I + |Z|^p) for p >= 1.

    Equality iff Y = 0.  Each side is the product of 1 + sigma^p over the
    singular values, evaluated through the Gram spectra (the spectral form
    of building |.| and then its p-th power; the matrix route is pinned to
    this one by tests).  p = 2 must agree with :func:`check_cor_c0`.
    """
    if p < 1.0:
        raise ValueError(f"the exponent must satisfy p >= 1, got {p}")
    full = t.assemble()
    lhs = _log_det_identity_plus_power(full.conj().T @ full, p, tol)
    rhs = _log_det_identity_plus_power(t.x.conj().T @ t.x, p, tol) * _log_det_identity_plus_power(
        t.z.conj().T @ t.z, p, tol
    )
    y_zero, y_norm = _y_is_structurally_zero(t, tol)
    diagnostics = (Finding("y_frobenius", y_norm), Finding("p", float(p)))
    return _report("thm3", lhs, rhs, tol, structural_equality=y_zero, diagnostics=diagnostics)


def _cumulative_logs(values: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore"):
        return np.cumsum(np.log(values))


def check_log_major(
    a: np.ndarray,
    b: np.ndarray,
    p: float,
    tol: Tolerances = DEFAULT_TOL,
) -> CheckReport:
    """prod(1 + b_j^p) >= prod(1 + a_j^p) when a is weakly log-majorized by b.

    Hypothesis: both sequences non-increasing and nonnegative, every partial
    product of a bounded by the matching partial product of b, with equal
    full products (each within ``tol.major_rel``).  A hypothesis failure is
    a failed precondition reporting the first violating prefix length.
    """
    if p < 1.0:
        raise ValueError(f"the exponent must satisfy p >= 1, got {p}")
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.ndim != 1 or b.ndim != 1 or a.shape != b.shape or a.size == 0:
        raise ShapeError(f"need two equal-length nonempty sequences, got {a.shape} and {b.shape}")
    for name, seq in (("a", a), ("b", b)):
        if np.any(seq < 0.0):
            raise ValueError(f"sequence {name} must be nonnegative")
        if np.any(np.diff(seq) > 0.0):
            raise ValueError(f"sequence {name} must be non-increasing")
    cum_a = _cumulative_logs(a)
    cum_b = _cumulative_logs(b)
    lhs = SignedLogDet.from_log(float(np.sum(np.log1p(np.power(b, p)))))
    rhs = SignedLogDet.from_log(float(np.sum(np.log1p(np.power(a, p)))))
    n = a.size
    for k in range(n):
        slack = tol.major_rel * max(1.0, abs(cum_b[k]) if math.isfinite(cum_b[k]) else 1.0)
        if cum_a[k] > cum_b[k] + slack:
            return _report(
                "log_major", lhs, rhs, tol,
                diagnostics=(Finding("first_violating_k", k + 1),),
                force_verdict=Verdict.PRECONDITION_FAILED,
            )
    final_gap = abs(cum_a[n - 1] - cum_b[n - 1])
    finite = math.isfinite(cum_a[n - 1]) and math.isfinite(cum_b[n - 1])
    both_zero = math.isinf(cum_a[n - 1]) and math.isinf(cum_b[n - 1])
    if not both_zero and (not finite or final_gap > tol.major_rel * max(1.0, abs(cum_b[n - 1]))):
        return _report(
            "log_major", lhs, rhs, tol,
            diagnostics=(Finding("final_products_differ", True),),
            force_verdict=Verdict.PRECONDITION_FAILED,
        )
    return _report("log_major", lhs, rhs, tol)


def check_weyl(a: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> CheckReport:
    """Eigenvalue moduli weakly log-majorized by singular values.

    For every prefix, the product of the top eigenvalue moduli is bounded by
    the product of the top singular values, and the full products agree.
    ``margin`` is the smallest strict-prefix gap in the log domain (the k = n
    gap is an identity and is reported as a diagnostic instead); for a normal
    matrix every prefix is tight and the verdict is ``equality``.
    """
    a = as_matrix(a)
    _require_square(a, "check_weyl")
    lam = np.abs(general_eigenvalues(a, tol))
    sig = singular_values(a, tol)
    cum_l = _cumulative_logs(lam)
    cum_s = _cumulative_logs(sig)
    n = lam.size
    lhs = SignedLogDet.zero() if math.isinf(cum_s[-1]) else SignedLogDet.from_log(float(cum_s[-1]))
    rhs = SignedLogDet.zero() if math.isinf(cum_l[-1]) else SignedLogDet.from_log(float(cum_l[-1]))
    gaps = cum_s[:-1] - cum_l[:-1]
    gaps = gaps[np.isfinite(gaps)]
    margin = float(np.min(gaps)) if gaps.size else 0.0
    final_gap = lhs.log_ratio(rhs)
    anchor = abs(cum_s[-1]) if math.isfinite(cum_s[-1]) else 0.0
    eps = tol.eq_rel * max(1.0, anchor)
    diagnostics = (Finding("final_product_gap", final_gap),)
    if margin < -eps or (math.isfinite(final_gap) and abs(final_gap) > eps):
        verdict = Verdict.VIOLATED
    elif abs(margin) <= eps:
        verdict = Verdict.EQUALITY
    else:
        verdict = Verdict.HOLDS_STRICT
    return CheckReport("weyl", lhs, rhs, margin, verdict, diagnostics)


def check_schur_identity(a: np.ndarray, r: int, tol: Tolerances = DEFAULT_TOL) -> CheckReport:
    """det A = det A11 * det(A / A11): both magnitudes and phases must match."""
    a = as_matrix(a)
    _require_square(a, "check_schur_identity")
    try:
        complement = schur_complement(a, r, tol)
    except SingularBlockError as err:
        return CheckReport(
            "schur_identity",
            SignedLogDet.zero(),
            SignedLogDet.zero(),
            0.0,
            Verdict.PRECONDITION_FAILED,
            (Finding("leading_block_condition", _json_value(err.condition_estimate)),),
        )
    lhs = det(a[:r, :r], tol) * det(complement, tol)
    rhs = det(a, tol)
    margin = lhs.log_ratio(rhs)
    diagnostics: tuple[Finding, ...] = ()
    if not lhs.is_zero and not rhs.is_zero:
        phase_gap = abs(lhs.phase - rhs.phase)
        diagnostics = (Finding("phase_distance", float(phase_gap)),)
        if phase_gap > tol.eq_rel:
            return CheckReport("schur_identity", lhs, rhs, margin, Verdict.VIOLATED, diagnostics)
    verdict = _margin_verdict(margin, lhs, tol)
    return CheckReport("schur_identity", lhs, rhs, margin, verdict, diagnostics)


def check_e21(family: BlockFamily, tol: Tolerances = DEFAULT_TOL) -> CheckReport:
    """det(|T1| + |T2|) vs det(|X1| + |X2|) * det(|Z1| + |Z2|).

    A candidate inequality that is false in general: the verdict simply
    reports which way the comparison falls on the given pair.
    """
    if family.m != 2:
        raise ShapeError(f"this comparison needs exactly two members, got {family.m}")
    t1, t2 = family.members
    lhs = det(abs_matrix(t1.assemble(), tol) + abs_matrix(t2.assemble(), tol), tol)
    rhs = det(abs_matrix(t1.x, tol) + abs_matrix(t2.x, tol), tol) * det(
        abs_matrix(t1.z, tol) + abs_matrix(t2.z, tol), tol
    )
    return _report("e21", lhs, rhs, tol)
