"""Low-lying eigensolves with residual checks."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from rydwire.errors import DegenerateGroundStateError, NumericalError

DENSE_CUTOFF = 600
EIG_SEED = 20240817


@dataclass
class SpectrumResult:
    """Lowest eigenvalues (ascending) with vectors and residual norms."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # columns
    residuals: np.ndarray

    @property
    def ground_energy(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def ground_vector(self) -> np.ndarray:
        return self.eigenvectors[:, 0]

    def gap(self) -> float:
        return float(self.eigenvalues[1] - self.eigenvalues[0])


def _residuals(mat, vals, vecs) -> np.ndarray:
    res = mat.dot(vecs) - vecs * vals[None, :]
    return np.linalg.norm(res, axis=0)


def lowest_eigenpairs(ham, k: int, seed: int = EIG_SEED,
                      residual_tol: float | None = None) -> SpectrumResult:
    """k lowest eigenpairs of a SparseHamiltonian, sparse matrix, or ndarray.

    Small problems take the dense route; larger ones use implicitly restarted
    Lanczos with full reorthogonalization and a seeded start vector so
    degenerate-adjacent spectra reproduce run to run.
    """
    mat = ham.matrix() if hasattr(ham, "matrix") else sp.csr_matrix(ham)
    dim = mat.shape[0]
    if k >= dim:
        raise NumericalError(f"requested {k} eigenpairs of a {dim}-dim space")
    if dim <= DENSE_CUTOFF:
        vals, vecs = np.linalg.eigh(mat.toarray())
        vals, vecs = vals[:k], vecs[:, :k]
    else:
        v0 = np.random.default_rng(seed).standard_normal(dim)
        try:
            vals, vecs = spla.eigsh(mat, k=k, which="SA", v0=v0)
        except spla.ArpackNoConvergence as exc:
            raise NumericalError(f"Lanczos did not converge: {exc}") from exc
        order = np.argsort(vals)
        vals, vecs = vals[order], vecs[:, order]
    res = _residuals(mat, vals, vecs)
    if residual_tol is None:
        scale = float(abs(mat).max()) if mat.nnz else 1.0
        residual_tol = 1e-9 * max(scale, 1.0) * 100.0
    if np.any(res > residual_tol):
        raise NumericalError(f"eigenpair residual {res.max():.3e} above {residual_tol:.3e}")
    return SpectrumResult(eigenvalues=vals, eigenvectors=vecs, residuals=res)


def ground_state(ham, degeneracy_tol: float = 1e-10,
                 seed: int = EIG_SEED) -> tuple[float, np.ndarray]:
    """Unique ground state; raises if the lowest gap closes below tolerance."""
    res = lowest_eigenpairs(ham, k=2, seed=seed)
    if res.gap() < degeneracy_tol:
        raise DegenerateGroundStateError(
            f"ground gap {res.gap():.3e} below degeneracy tolerance")
    return res.ground_energy, res.ground_vector
