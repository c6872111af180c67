"""Cyclic Jacobi eigenvalue iteration for small symmetric / Hermitian matrices."""

from __future__ import annotations

import math

import numpy as np

from .errors import NumericInconclusive

EPS = np.finfo(float).eps


def _offdiag_norm(a: np.ndarray) -> float:
    # direct sum: subtracting the diagonal from the full norm cancels catastrophically
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def jacobi_symmetric(a, rel_tol: float = 1e-12, max_sweeps: int = 60):
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Returns ``(eigenvalues ascending, off_norm, frob_norm)``; ``off_norm`` is
    the Frobenius norm of what was left off the diagonal, which by Weyl's
    inequality bounds every eigenvalue's error (up to rounding).
    """
    a = np.array(a, dtype=float, copy=True)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("square matrix required")
    if not np.allclose(a, a.T, rtol=0, atol=0):
        raise ValueError("matrix is not symmetric")
    scale = float(np.linalg.norm(a))
    if n <= 1 or scale == 0.0:
        return np.sort(np.diag(a)), 0.0, scale
    for _ in range(max_sweeps):
        off = _offdiag_norm(a)
        if off <= rel_tol * scale:
            return np.sort(np.diag(a)), off, scale
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= EPS * 1e-3 * scale:
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
    off = _offdiag_norm(a)
    raise NumericInconclusive(
        f"Jacobi iteration did not converge in {max_sweeps} sweeps (off-diagonal {off:.3e})",
        value=np.sort(np.diag(a)),
        error_bound=off,
    )


def hermitian_eigenvalues(A, rel_tol: float = 1e-12):
    """Eigenvalues of a Hermitian matrix and a Weyl-type error bound.

    Complex input goes through the real symmetric embedding
    ``[[Re, -Im], [Im, Re]]``, whose spectrum is the original one doubled.
    """
    A = np.asarray(A)
    n = A.shape[0]
    if np.iscomplexobj(A) and np.any(A.imag != 0):
        big = np.block([[A.real, -A.imag], [A.imag, A.real]])
        ev, off, scale = jacobi_symmetric(big, rel_tol)
        ev = ev[::2]
    else:
        ev, off, scale = jacobi_symmetric(np.real(A), rel_tol)
    bound = off + 4 * n * EPS * scale
    return ev, bound
