"""Self-contained dense complex linear algebra.

Everything downstream (inequality checkers, the fuzzer, the CLI) works on
plain ``numpy`` arrays of ``complex128``.  This module owns:

* validated arithmetic with explicit shape errors,
* determinants in signed-log form (phase plus log-magnitude), robust to
  magnitudes around 1e8 and beyond,
* a cyclic Jacobi eigensolver for Hermitian matrices and a Hessenberg +
  shifted-QR eigensolver for general complex matrices,
* singular values, PSD matrix functions (square root, powers), polar
  decomposition, Schur complements,
* structural predicates (Hermitian / PSD / normal / symmetric / triangular),
* the JSON matrix document format shared by every module.

All functions are pure: inputs are never mutated and there is no global
mutable state, so values can be shared freely across threads.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace

import numpy as np

__all__ = [
    "LinalgError",
    "ShapeError",
    "NotHermitianError",
    "NotPositiveSemidefiniteError",
    "ConvergenceError",
    "SingularBlockError",
    "MatrixFormatError",
    "Tolerances",
    "DEFAULT_TOL",
    "as_matrix",
    "identity",
    "adjoint",
    "conjugate",
    "transpose",
    "scale",
    "mat_add",
    "mat_mul",
    "frobenius_norm",
    "SignedLogDet",
    "det",
    "solve",
    "hermitian_eigensystem",
    "singular_values",
    "general_eigenvalues",
    "sort_by_modulus",
    "abs_matrix",
    "matrix_power_psd",
    "PolarFactors",
    "polar_decompose",
    "schur_complement",
    "MatrixPredicates",
    "predicates",
    "BlockUpperTriangular",
    "matrix_to_json_dict",
    "matrix_from_json_dict",
]


class LinalgError(ValueError):
    """Base class for everything this module rejects or fails to compute."""


class ShapeError(LinalgError):
    """Operands have incompatible or unacceptable shapes."""


class NotHermitianError(LinalgError):
    """Input required to be Hermitian deviates beyond tolerance."""


class NotPositiveSemidefiniteError(LinalgError):
    """Eigenvalue more negative than the PSD clamp window admits."""


class ConvergenceError(LinalgError):
    """Iterative solver exhausted its sweep/iteration budget.

    Carries ``residual`` (off-diagonal or subdiagonal mass at the point of
    failure) and ``iterations``.
    """

    def __init__(self, message: str, residual: float, iterations: int):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations


class SingularBlockError(LinalgError):
    """Leading block too close to singular for a Schur complement.

    ``condition_estimate`` is sigma_max / sigma_min of the leading block
    (``inf`` when the block is exactly rank deficient).
    """

    def __init__(self, message: str, condition_estimate: float):
        super().__init__(message)
        self.condition_estimate = condition_estimate


class MatrixFormatError(LinalgError):
    """Matrix JSON document malformed; message carries position info."""


@dataclass(frozen=True)
class Tolerances:
    """Every tolerance used by the package, in one record.

    The equality-detection semantics of the inequality checkers depend on
    these values, so they are centralized rather than scattered as literals.
    All *_rel quantities are relative to a scale stated in the consumer.
    """

    pivot_rel: float = 1e-12        # determinant zero flag, Schur leading-block gate
    hermitian_rel: float = 1e-12    # Hermiticity gate for the Jacobi eigensolver
    jacobi_off_rel: float = 1e-13   # converged when off-diagonal mass <= this * ||a||_F
    jacobi_max_sweeps: int = 60
    psd_rel: float = 1e-10          # eigenvalues in [-psd_rel * sigma_max, 0) clamp to 0
    predicate_rel: float = 1e-10    # structural predicates (symmetric, normal, ...)
    eq_rel: float = 1e-8            # log-domain equality window for check verdicts
    major_rel: float = 1e-10        # weak log-majorization hypothesis gate
    qr_iter_factor: int = 40        # shifted-QR budget: qr_iter_factor * n steps
    polar_null_rel: float = 1e-7    # sigma below this * sigma_max is a null direction;
                                    # the Gram route cannot resolve below sqrt(eps)

    def with_eq_rel(self, eq_rel: float) -> "Tolerances":
        if eq_rel <= 0.0:
            raise ValueError(f"tolerance override must be positive, got {eq_rel}")
        return replace(self, eq_rel=eq_rel)


DEFAULT_TOL = Tolerances()

_MASK64 = (1 << 64) - 1


def as_matrix(data) -> np.ndarray:
    """Validate and convert to a 2-D complex128 array with finite entries."""
    a = np.asarray(data, dtype=complex)
    if a.ndim != 2:
        raise ShapeError(f"expected a 2-D matrix, got ndim={a.ndim}")
    if a.shape[0] < 1 or a.shape[1] < 1:
        raise ShapeError(f"matrix dimensions must be positive, got {a.shape}")
    if not (np.all(np.isfinite(a.real)) and np.all(np.isfinite(a.imag))):
        raise LinalgError("matrix entries must be finite (no NaN or Inf)")
    return a


def _require_square(a: np.ndarray, what: str) -> None:
    if a.shape[0] != a.shape[1]:
        raise ShapeError(f"{what} requires a square matrix, got {a.shape}")


def identity(n: int) -> np.ndarray:
    if n < 1:
        raise ShapeError(f"identity dimension must be positive, got {n}")
    return np.eye(n, dtype=complex)


def adjoint(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return a.conj().T.copy()


def conjugate(a: np.ndarray) -> np.ndarray:
    """Entrywise conjugate."""
    return a.conj().copy()


def transpose(a: np.ndarray) -> np.ndarray:
    return a.T.copy()


def scale(a: np.ndarray, factor: complex) -> np.ndarray:
    return a * factor


def mat_add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape != b.shape:
        raise ShapeError(f"addition needs equal shapes, got {a.shape} and {b.shape}")
    return a + b


def mat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"product needs inner dimensions to match, got {a.shape} and {b.shape}")
    return a @ b


def frobenius_norm(a: np.ndarray) -> float:
    """sqrt of the sum of squared entry moduli; equals sqrt(tr a* a)."""
    return float(np.linalg.norm(a))


# ---------------------------------------------------------------------------
# Signed-log determinants


@dataclass(frozen=True)
class SignedLogDet:
    """A determinant stored as unit phase times exp(log_magnitude).

    Immune to overflow: products of determinants add log-magnitudes instead
    of multiplying raw values.  A zero determinant is flagged with
    ``is_zero`` (phase 0, log_magnitude 0 by convention).
    """

    phase: complex
    log_magnitude: float
    is_zero: bool = False

    def __post_init__(self):
        if self.is_zero:
            object.__setattr__(self, "phase", 0j)
            object.__setattr__(self, "log_magnitude", 0.0)
        else:
            mod = abs(self.phase)
            if not math.isfinite(mod) or mod == 0.0:
                raise LinalgError(f"phase must be a finite nonzero complex, got {self.phase}")
            if abs(mod - 1.0) > 1e-12:
                object.__setattr__(self, "phase", self.phase / mod)

    @classmethod
    def zero(cls) -> "SignedLogDet":
        return cls(0j, 0.0, True)

    @classmethod
    def one(cls) -> "SignedLogDet":
        return cls(1.0 + 0j, 0.0)

    @classmethod
    def from_value(cls, value: complex) -> "SignedLogDet":
        value = complex(value)
        mod = abs(value)
        if mod == 0.0:
            return cls.zero()
        return cls(value / mod, math.log(mod))

    @classmethod
    def from_log(cls, log_magnitude: float, phase: complex = 1.0 + 0j) -> "SignedLogDet":
        return cls(phase, log_magnitude)

    @property
    def value(self) -> complex:
        """Reconstructed raw determinant; may overflow to inf by design."""
        if self.is_zero:
            return 0j
        return self.phase * math.exp(self.log_magnitude) if self.log_magnitude < 709.0 else (
            self.phase * float("inf")
        )

    def __mul__(self, other: "SignedLogDet") -> "SignedLogDet":
        if self.is_zero or other.is_zero:
            return SignedLogDet.zero()
        return SignedLogDet(self.phase * other.phase, self.log_magnitude + other.log_magnitude)

    def abs(self) -> "SignedLogDet":
        """Drop the phase, keeping the magnitude."""
        if self.is_zero:
            return SignedLogDet.zero()
        return SignedLogDet(1.0 + 0j, self.log_magnitude)

    def log_ratio(self, other: "SignedLogDet") -> float:
        """log |self| - log |other| with -inf/+inf for zero sides, 0 if both zero."""
        if self.is_zero and other.is_zero:
            return 0.0
        if self.is_zero:
            return float("-inf")
        if other.is_zero:
            return float("inf")
        return self.log_magnitude - other.log_magnitude


def det(a: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> SignedLogDet:
    """Determinant by row elimination with partial pivoting, in signed-log form.

    The zero flag is raised as soon as a pivot modulus falls below
    ``tol.pivot_rel`` times the largest row norm of the input.
    """
    a = as_matrix(a)
    _require_square(a, "det")
    n = a.shape[0]
    work = a.copy()
    row_norms = np.sqrt(np.sum(np.abs(work) ** 2, axis=1))
    threshold = tol.pivot_rel * float(np.max(row_norms))
    phase = 1.0 + 0j
    log_mag = 0.0
    for k in range(n):
        col = np.abs(work[k:, k])
        pivot_offset = int(np.argmax(col))
        pivot = work[k + pivot_offset, k]
        if abs(pivot) <= threshold:
            return SignedLogDet.zero()
        if pivot_offset != 0:
            work[[k, k + pivot_offset], k:] = work[[k + pivot_offset, k], k:]
            phase = -phase
        phase *= pivot / abs(pivot)
        log_mag += math.log(abs(pivot))
        if k + 1 < n:
            work[k + 1:, k:] -= np.outer(work[k + 1:, k] / pivot, work[k, k:])
    return SignedLogDet(phase, log_mag)


def solve(a: np.ndarray, b: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Solve a x = b by Gaussian elimination with partial pivoting."""
    a = as_matrix(a)
    _require_square(a, "solve")
    b = as_matrix(b)
    if b.shape[0] != a.shape[0]:
        raise ShapeError(f"solve needs matching row counts, got {a.shape} and {b.shape}")
    n = a.shape[0]
    work = np.hstack([a.copy(), b.copy()])
    row_norms = np.sqrt(np.sum(np.abs(a) ** 2, axis=1))
    threshold = tol.pivot_rel * float(np.max(row_norms))
    for k in range(n):
        pivot_offset = int(np.argmax(np.abs(work[k:, k])))
        pivot = work[k + pivot_offset, k]
        if abs(pivot) <= threshold:
            raise SingularBlockError("solve: matrix is singular to working precision",
                                     condition_estimate=float("inf"))
        if pivot_offset != 0:
            work[[k, k + pivot_offset], k:] = work[[k + pivot_offset, k], k:]
        if k + 1 < n:
            work[k + 1:, k:] -= np.outer(work[k + 1:, k] / pivot, work[k, k:])
    x = np.zeros((n, b.shape[1]), dtype=complex)
    for k in range(n - 1, -1, -1):
        x[k] = (work[k, n:] - work[k, k + 1:n] @ x[k + 1:]) / work[k, k]
    return x


# ---------------------------------------------------------------------------
# Eigensystems


def _offdiag_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diagonal(a))))


def hermitian_eigensystem(a: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (descending, real) and unitary eigenvectors of a Hermitian matrix.

    Cyclic Jacobi with complex rotations.  The input must be Hermitian within
    ``tol.hermitian_rel * ||a||_F``; it is symmetrized before iterating.
    Convergence means the off-diagonal Frobenius mass fell below
    ``tol.jacobi_off_rel * ||a||_F``.
    """
    a = as_matrix(a)
    _require_square(a, "hermitian_eigensystem")
    n = a.shape[0]
    norm = frobenius_norm(a)
    deviation = frobenius_norm(a - a.conj().T)
    if deviation > tol.hermitian_rel * norm:
        raise NotHermitianError(
            f"matrix deviates from Hermitian by {deviation:.3e} (allowed {tol.hermitian_rel * norm:.3e})"
        )
    work = (a + a.conj().T) / 2.0
    v = np.eye(n, dtype=complex)
    if norm == 0.0:
        return np.zeros(n), v
    skip = (1e-14 / n) * norm
    converged = False
    sweeps = 0
    for sweeps in range(1, tol.jacobi_max_sweeps + 1):
        if _offdiag_norm(work) <= tol.jacobi_off_rel * norm:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = work[p, q]
                r = abs(g)
                if r <= skip:
                    continue
                phase = g / r
                alpha = work[p, p].real
                beta = work[q, q].real
                tau = (beta - alpha) / (2.0 * r)
                t = (1.0 if tau >= 0.0 else -1.0) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                col_p = work[:, p].copy()
                col_q = work[:, q].copy()
                work[:, p] = c * col_p - s * np.conj(phase) * col_q
                work[:, q] = s * phase * col_p + c * col_q
                row_p = work[p, :].copy()
                row_q = work[q, :].copy()
                work[p, :] = c * row_p - s * phase * row_q
                work[q, :] = s * np.conj(phase) * row_p + c * row_q
                work[p, q] = 0.0
                work[q, p] = 0.0
                work[p, p] = work[p, p].real
                work[q, q] = work[q, q].real
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * np.conj(phase) * vq
                v[:, q] = s * phase * vp + c * vq
    else:
        converged = _offdiag_norm(work) <= tol.jacobi_off_rel * norm
    if not converged:
        residual = _offdiag_norm(work)
        raise ConvergenceError(
            f"Jacobi did not converge in {tol.jacobi_max_sweeps} sweeps "
            f"(off-diagonal mass {residual:.3e}, target {tol.jacobi_off_rel * norm:.3e})",
            residual=residual,
            iterations=sweeps,
        )
    w = np.diagonal(work).real.copy()
    order = np.argsort(-w, kind="stable")
    return w[order], v[:, order]


def _clamp_psd_eigenvalues(w: np.ndarray, tol: Tolerances, context: str) -> np.ndarray:
    """Snap slightly negative eigenvalues to zero; reject genuinely negative ones.

    Eigenvalues in [-psd_rel * sigma_max, 0) are rounding debris from a
    mathematically PSD source; anything more negative signals a bug upstream.
    """
    if w.size == 0:
        return w
    sigma_max = float(np.max(np.abs(w)))
    floor = -tol.psd_rel * sigma_max
    if np.any(w < floor):
        worst = float(np.min(w))
        raise NotPositiveSemidefiniteError(
            f"{context}: eigenvalue {worst:.6e} below the PSD clamp window {floor:.6e}"
        )
    return np.where(w < 0.0, 0.0, w)


def singular_values(a: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Singular values, non-increasing, via the eigenvalues of a* a."""
    a = as_matrix(a)
    gram = a.conj().T @ a
    w, _ = hermitian_eigensystem(gram, tol)
    w = _clamp_psd_eigenvalues(w, tol, "singular_values")
    sigma = np.sqrt(w)
    return sigma[: min(a.shape)]


def sort_by_modulus(values: np.ndarray) -> np.ndarray:
    """Non-increasing modulus; ties by descending real part, then imaginary."""
    values = np.asarray(values, dtype=complex)
    order = np.lexsort((-values.imag, -values.real, -np.abs(values)))
    return values[order]


def _hessenberg(a: np.ndarray) -> np.ndarray:
    h = a.astype(complex).copy()
    n = h.shape[0]
    for k in range(n - 2):
        x = h[k + 1:, k]
        nx = float(np.linalg.norm(x))
        if nx == 0.0:
            continue
        first = x[0]
        lead = first / abs(first) if first != 0 else 1.0 + 0j
        v = x.copy()
        v[0] += lead * nx
        nv = float(np.linalg.norm(v))
        if nv == 0.0:
            continue
        v /= nv
        h[k + 1:, k:] -= 2.0 * np.outer(v, v.conj() @ h[k + 1:, k:])
        h[:, k + 1:] -= 2.0 * np.outer(h[:, k + 1:] @ v, v.conj())
    return h


def _eig2(a: complex, b: complex, c: complex, d: complex) -> tuple[complex, complex]:
    tr = a + d
    disc = cmath.sqrt((a - d) * (a - d) + 4.0 * b * c)
    return (tr + disc) / 2.0, (tr - disc) / 2.0


def _givens(f: complex, g: complex) -> tuple[float, complex]:
    if g == 0:
        return 1.0, 0j
    if f == 0:
        return 0.0, complex(np.conj(g) / abs(g))
    d = math.hypot(abs(f), abs(g))
    c = abs(f) / d
    s = (f / abs(f)) * np.conj(g) / d
    return c, complex(s)


def general_eigenvalues(a: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """All eigenvalues of a general complex square matrix.

    Householder Hessenberg reduction followed by explicitly shifted QR with
    Wilkinson shifts and deflation.  Output is sorted by non-increasing
    modulus with the deterministic tie-break of :func:`sort_by_modulus`.
    """
    a = as_matrix(a)
    _require_square(a, "general_eigenvalues")
    n = a.shape[0]
    h = _hessenberg(a)
    if float(np.linalg.norm(h)) == 0.0:
        return np.zeros(n, dtype=complex)
    eigs: list[complex] = []
    hi = n - 1
    iters = 0
    max_iters = tol.qr_iter_factor * n
    stall = 0
    while hi >= 0:
        lo = hi
        while lo > 0:
            sub = abs(h[lo, lo - 1])
            if sub <= 1e-15 * (abs(h[lo - 1, lo - 1]) + abs(h[lo, lo])) + 1e-300:
                h[lo, lo - 1] = 0.0
                break
            lo -= 1
        if lo == hi:
            eigs.append(complex(h[hi, hi]))
            hi -= 1
            stall = 0
            continue
        if lo == hi - 1:
            l1, l2 = _eig2(h[lo, lo], h[lo, hi], h[hi, lo], h[hi, hi])
            eigs.extend((l1, l2))
            hi -= 2
            stall = 0
            continue
        iters += 1
        if iters > max_iters:
            raise ConvergenceError(
                f"QR iteration exceeded {max_iters} steps on window [{lo}, {hi}] "
                f"(subdiagonal residual {abs(h[hi, hi - 1]):.3e})",
                residual=float(abs(h[hi, hi - 1])),
                iterations=iters,
            )
        l1, l2 = _eig2(h[hi - 1, hi - 1], h[hi - 1, hi], h[hi, hi - 1], h[hi, hi])
        mu = l1 if abs(l1 - h[hi, hi]) <= abs(l2 - h[hi, hi]) else l2
        stall += 1
        if stall % 12 == 0:
            # cycling guard: perturb the shift using the stuck subdiagonal
            mu = h[hi, hi] + abs(h[hi, hi - 1])
        m = hi - lo + 1
        r = h[lo:hi + 1, lo:hi + 1].copy()
        r[np.diag_indices(m)] -= mu
        rotations: list[tuple[float, complex, int]] = []
        for i in range(m - 1):
            c, s = _givens(r[i, i], r[i + 1, i])
            rotations.append((c, s, i))
            row_i = r[i, i:].copy()
            row_j = r[i + 1, i:].copy()
            r[i, i:] = c * row_i + s * row_j
            r[i + 1, i:] = -np.conj(s) * row_i + c * row_j
        for c, s, i in rotations:
            col_i = r[: i + 2, i].copy()
            col_j = r[: i + 2, i + 1].copy()
            r[: i + 2, i] = c * col_i + np.conj(s) * col_j
            r[: i + 2, i + 1] = -s * col_i + c * col_j
        r[np.diag_indices(m)] += mu
        h[lo:hi + 1, lo:hi + 1] = r
    return sort_by_modulus(np.array(eigs, dtype=complex))


# ---------------------------------------------------------------------------
# PSD matrix functions, polar decomposition, Schur complement


def abs_matrix(a: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """The PSD square root of a* a."""
    a = as_matrix(a)
    _require_square(a, "abs_matrix")
    gram = a.conj().T @ a
    w, v = hermitian_eigensystem(gram, tol)
    w = _clamp_psd_eigenvalues(w, tol, "abs_matrix")
    p = (v * np.sqrt(w)) @ v.conj().T
    return (p + p.conj().T) / 2.0


def matrix_power_psd(p_matrix: np.ndarray, p: float, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Spectral power of a Hermitian PSD matrix."""
    if p < 0.0:
        raise ValueError(f"exponent must be >= 0, got {p}")
    p_matrix = as_matrix(p_matrix)
    _require_square(p_matrix, "matrix_power_psd")
    w, v = hermitian_eigensystem(p_matrix, tol)
    w = _clamp_psd_eigenvalues(w, tol, "matrix_power_psd")
    powered = (v * np.power(w, p)) @ v.conj().T
    return (powered + powered.conj().T) / 2.0


@dataclass(frozen=True)
class PolarFactors:
    """Unitary factor and PSD factor with u @ p reconstructing the input."""

    u: np.ndarray
    p: np.ndarray


def polar_decompose(a: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> PolarFactors:
    """Polar factors via the SVD convention u = w v*, p = v sigma v*.

    Building u from the full SVD keeps it unitary even when the input is
    singular.  Singular values below ``polar_null_rel * sigma_max`` cannot be
    distinguished from zero through the Gram eigensystem; those directions
    get an exactly-zero sigma in p and an orthonormal completion column in w,
    which is what keeps u @ p within 1e-9 of the input on deficient matrices.
    """
    a = as_matrix(a)
    _require_square(a, "polar_decompose")
    n = a.shape[0]
    gram = a.conj().T @ a
    lam, v = hermitian_eigensystem(gram, tol)
    lam = _clamp_psd_eigenvalues(lam, tol, "polar_decompose")
    sigma = np.sqrt(lam)
    sigma_max = float(sigma[0]) if n else 0.0
    null_floor = tol.polar_null_rel * sigma_max
    sigma_eff = sigma.copy()
    w = np.zeros((n, n), dtype=complex)
    have: list[int] = []

    def _orthogonalized(col: np.ndarray) -> np.ndarray:
        for _ in range(2):
            for i in have:
                col = col - (w[:, i].conj() @ col) * w[:, i]
        return col

    for j in range(n):
        if sigma[j] > null_floor:
            col = _orthogonalized((a @ v[:, j]) / sigma[j])
            nc = float(np.linalg.norm(col))
            if nc > 0.5:
                w[:, j] = col / nc
                have.append(j)
                continue
        # null direction: zero its sigma, complete w with the basis vector
        # leaving the largest orthogonal residual (deterministic choice)
        sigma_eff[j] = 0.0
        best = None
        best_norm = -1.0
        for k in range(n):
            cand = np.zeros(n, dtype=complex)
            cand[k] = 1.0
            cand = _orthogonalized(cand)
            nc = float(np.linalg.norm(cand))
            if nc > best_norm:
                best_norm = nc
                best = cand
        w[:, j] = best / best_norm
        have.append(j)
    u = w @ v.conj().T
    p = (v * sigma_eff) @ v.conj().T
    p = (p + p.conj().T) / 2.0
    return PolarFactors(u=u, p=p)


def schur_complement(a: np.ndarray, r: int, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """a22 - a21 a11^{-1} a12 for the leading r-square block a11.

    Rejects a leading block whose smallest singular value is at or below
    ``tol.pivot_rel`` times its largest, reporting the condition estimate.
    """
    a = as_matrix(a)
    _require_square(a, "schur_complement")
    n = a.shape[0]
    if not 0 < r < n:
        raise ShapeError(f"block split must satisfy 0 < r < n, got r={r}, n={n}")
    a11 = a[:r, :r]
    sigma = singular_values(a11, tol)
    sigma_min = float(sigma[-1])
    sigma_max = float(sigma[0])
    if sigma_min <= tol.pivot_rel * sigma_max:
        estimate = sigma_max / sigma_min if sigma_min > 0.0 else float("inf")
        raise SingularBlockError(
            f"leading {r}x{r} block is singular to working precision "
            f"(condition estimate {estimate:.3e})",
            condition_estimate=estimate,
        )
    return a[r:, r:] - a[r:, :r] @ solve(a11, a[:r, r:], tol)


# ---------------------------------------------------------------------------
# Structural predicates


@dataclass(frozen=True)
class MatrixPredicates:
    is_hermitian: bool
    is_psd: bool
    is_normal: bool
    is_symmetric: bool
    is_upper_triangular: bool


def predicates(a: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> MatrixPredicates:
    """Tolerance-based structural classification of a square matrix.

    The zero matrix passes the Hermitian, PSD, normal, symmetric and
    triangular tests.  PSD requires Hermitian and smallest eigenvalue at
    least ``-psd_rel * sigma_max``.
    """
    a = as_matrix(a)
    _require_square(a, "predicates")
    norm = frobenius_norm(a)
    is_hermitian = frobenius_norm(a - a.conj().T) <= tol.predicate_rel * norm
    is_symmetric = frobenius_norm(a - a.T) <= tol.predicate_rel * norm
    commutator = a @ a.conj().T - a.conj().T @ a
    is_normal = frobenius_norm(commutator) <= tol.predicate_rel * norm * norm
    lower_mass = float(np.linalg.norm(np.tril(a, -1)))
    is_upper_triangular = lower_mass <= tol.predicate_rel * norm
    is_psd = False
    if is_hermitian:
        w, _ = hermitian_eigensystem(a, tol)
        sigma_max = float(np.max(np.abs(w))) if w.size else 0.0
        is_psd = bool(np.min(w) >= -tol.psd_rel * sigma_max) if w.size else True
    return MatrixPredicates(
        is_hermitian=bool(is_hermitian),
        is_psd=is_psd,
        is_normal=bool(is_normal),
        is_symmetric=bool(is_symmetric),
        is_upper_triangular=bool(is_upper_triangular),
    )


# ---------------------------------------------------------------------------
# Block upper-triangular structure


@dataclass(frozen=True)
class BlockUpperTriangular:
    """The (x, y, z) block decomposition of an upper block-triangular matrix.

    Assembled form is [[x, y], [0, z]] with x r-square, z (n-r)-square and an
    exactly-zero lower-left block.
    """

    x: np.ndarray
    y: np.ndarray
    z: np.ndarray

    def __post_init__(self):
        x = as_matrix(self.x)
        y = as_matrix(self.y)
        z = as_matrix(self.z)
        _require_square(x, "top-left block")
        _require_square(z, "bottom-right block")
        if y.shape != (x.shape[0], z.shape[0]):
            raise ShapeError(
                f"off-diagonal block must be {x.shape[0]}x{z.shape[0]}, got {y.shape}"
            )
        # own copies, frozen: callers' arrays must not be aliased or mutated
        for name, arr in (("x", x), ("y", y), ("z", z)):
            arr = arr.copy()
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def r(self) -> int:
        return self.x.shape[0]

    @property
    def n(self) -> int:
        return self.x.shape[0] + self.z.shape[0]

    @classmethod
    def from_matrix(cls, t: np.ndarray, r: int) -> "BlockUpperTriangular":
        """Split a full matrix; the lower-left block must be exactly zero."""
        t = as_matrix(t)
        _require_square(t, "block split")
        n = t.shape[0]
        if not 0 < r < n:
            raise ShapeError(f"block split must satisfy 0 < r < n, got r={r}, n={n}")
        lower_left = t[r:, :r]
        if np.any(lower_left != 0):
            raise ShapeError(
                f"lower-left {n - r}x{r} block must be exactly zero, "
                f"found mass {float(np.linalg.norm(lower_left)):.3e}"
            )
        return cls(x=t[:r, :r], y=t[:r, r:], z=t[r:, r:])

    def assemble(self) -> np.ndarray:
        n, r = self.n, self.r
        t = np.zeros((n, n), dtype=complex)
        t[:r, :r] = self.x
        t[:r, r:] = self.y
        t[r:, r:] = self.z
        return t


# ---------------------------------------------------------------------------
# Matrix JSON documents


def matrix_to_json_dict(a: np.ndarray) -> dict:
    """Serialize to {rows, cols, entries} with row-major [re, im] pairs."""
    a = as_matrix(a)
    entries = [[float(v.real), float(v.imag)] for v in a.ravel()]
    return {"rows": int(a.shape[0]), "cols": int(a.shape[1]), "entries": entries}


def matrix_from_json_dict(doc: dict) -> np.ndarray:
    """Parse the {rows, cols, entries} document, reporting the bad position."""
    if not isinstance(doc, dict):
        raise MatrixFormatError(f"matrix document must be an object, got {type(doc).__name__}")
    missing = {"rows", "cols", "entries"} - set(doc)
    if missing:
        raise MatrixFormatError(f"matrix document missing keys: {sorted(missing)}")
    rows, cols, entries = doc["rows"], doc["cols"], doc["entries"]
    if not isinstance(rows, int) or not isinstance(cols, int) or rows < 1 or cols < 1:
        raise MatrixFormatError(f"rows and cols must be positive integers, got {rows!r}, {cols!r}")
    if not isinstance(entries, list) or len(entries) != rows * cols:
        count = len(entries) if isinstance(entries, list) else "non-list"
        raise MatrixFormatError(f"expected {rows * cols} entries, got {count}")
    data = np.empty(rows * cols, dtype=complex)
    for i, pair in enumerate(entries):
        if (not isinstance(pair, (list, tuple)) or len(pair) != 2
                or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in pair)):
            raise MatrixFormatError(f"entry {i}: expected a [re, im] pair of reals, got {pair!r}")
        re, im = float(pair[0]), float(pair[1])
        if not (math.isfinite(re) and math.isfinite(im)):
            raise MatrixFormatError(f"entry {i}: non-finite component {pair!r}")
        data[i] = complex(re, im)
    return data.reshape(rows, cols)
