"""Dense complex linear algebra for small bipartite systems.

Everything here works on plain ``numpy`` arrays of dimension at most 16. The
Hermitian eigensolver is a cyclic Jacobi method with Brent-Luk (round-robin)
pair ordering, so each sweep applies ``n - 1`` batches of commuting plane
rotations as single matrix products.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .core import (
    TOL_HERM,
    DensityOperator,
    DimensionError,
    Dims,
    Ket,
    NotHermitianError,
    as_dims,
    hermiticity_error,
)

# eigenvalues closer than this are treated as one degenerate cluster
CLUSTER_TOL = 1e-9
# amplitudes below this are treated as zero when normalizing phases
ZERO_AMP = 1e-10

_MAX_SWEEPS = 60


def kron(a, b) -> np.ndarray:
    return np.kron(np.asarray(a), np.asarray(b))


def partial_transpose(m, dims) -> np.ndarray:
    """Transpose the second tensor factor of ``m``.

    Entry ``(i*dB + j, k*dB + l)`` of the result is entry ``(i*dB + l, k*dB + j)`` of ``m``.
    """
    m = np.asarray(m)
    dims = as_dims(dims)
    if m.ndim != 2 or m.shape != (dims.total, dims.total):
        raise DimensionError(f"matrix of shape {m.shape} does not match dims {dims.dA}x{dims.dB}")
    dA, dB = dims.dA, dims.dB
    return m.reshape(dA, dB, dA, dB).transpose(0, 3, 2, 1).reshape(dA * dB, dA * dB)


@lru_cache(maxsize=None)
def _round_robin(n: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Disjoint index pairs for each round of a round-robin tournament on ``n`` players."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        ps, qs = [], []
        for k in range(m // 2):
            a, b = players[k], players[m - 1 - k]
            if a < n and b < n:
                ps.append(min(a, b))
                qs.append(max(a, b))
        rounds.append((np.array(ps, dtype=int), np.array(qs, dtype=int)))
        players = [players[0]] + [players[-1]] + players[1:-1]
    return tuple(rounds)


def jacobi_eigh(m, want_vectors: bool = True, tol: float = 1e-15):
    """Eigen-decomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Returns ``(w, V)`` with ``m = V diag(w) V^dagger``. Eigenvalues come back in
    the (unsorted) order of the converged diagonal; ``V`` is ``None`` when
    ``want_vectors`` is false.
    """
    a = np.array(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    herm = hermiticity_error(a)
    if herm > TOL_HERM * max(1.0, float(np.max(np.abs(a))) if a.size else 1.0):
        raise NotHermitianError(f"matrix is not Hermitian (max |m - m^dagger| = {herm:.3e})", "hermiticity", herm)
    n = a.shape[0]
    a = 0.5 * (a + a.conj().T)
    v = np.eye(n, dtype=complex) if want_vectors else None
    if n < 2:
        return a.diagonal().real.copy(), v

    scale = np.linalg.norm(a)
    if scale == 0.0:
        return np.zeros(n), v
    iu = np.triu_indices(n, 1)
    rounds = _round_robin(n)
    for _ in range(_MAX_SWEEPS):
        off = np.linalg.norm(a[iu])
        if off <= tol * scale:
            break
        for p, q in rounds:
            apq = a[p, q]
            mag = np.abs(apq)
            active = mag > 1e-300
            if not np.any(active):
                continue
            p, q, apq, mag = p[active], q[active], apq[active], mag[active]
            phase = apq / mag
            app = a[p, p].real
            aqq = a[q, q].real
            theta = (aqq - app) / (2.0 * mag)
            t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
            t[theta == 0.0] = 1.0
            c = 1.0 / np.hypot(t, 1.0)
            s = t * c
            # J = D R with D = diag(1, conj(phase)) on each (p, q) plane
            rot = np.eye(n, dtype=complex)
            rot[p, p] = c
            rot[p, q] = s
            rot[q, p] = -s * phase.conj()
            rot[q, q] = c * phase.conj()
            a = rot.conj().T @ a @ rot
            a[p, q] = 0.0
            a[q, p] = 0.0
            if v is not None:
                v = v @ rot
    return a.diagonal().real.copy(), v


def eigvals_descending(m) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, sorted non-increasing."""
    w, _ = jacobi_eigh(m, want_vectors=False)
    return np.sort(w)[::-1]


def _first_nonzero(vec: np.ndarray) -> int:
    idx = np.flatnonzero(np.abs(vec) > ZERO_AMP)
    return int(idx[0]) if idx.size else 0


def normalize_phase(vec: np.ndarray) -> np.ndarray:
    """Rotate the global phase so that the first nonzero amplitude is real positive."""
    vec = np.asarray(vec, dtype=complex)
    a = vec[_first_nonzero(vec)]
    if abs(a) == 0.0:
        return vec.copy()
    return vec * (abs(a) / a)


def _canonical_cluster(vecs: np.ndarray) -> np.ndarray:
    """Basis of span(vecs) that depends only on the spanned subspace.

    Column-pivoted Gram-Schmidt on the projector columns ``P e_j``; ties in the
    pivot norm go to the lowest index.
    """
    k = vecs.shape[1]
    cand = vecs @ vecs.conj().T
    out = []
    for _ in range(k):
        norms = np.linalg.norm(cand, axis=0)
        j = int(np.flatnonzero(norms >= norms.max() - 1e-8)[0])
        u = cand[:, j] / norms[j]
        out.append(u)
        cand = cand - np.outer(u, u.conj() @ cand)
    basis = np.column_stack(out)

    def key(col):
        a = col[_first_nonzero(col)]
        return (round(-abs(a), 9), round(float(np.angle(a)), 9))

    order = sorted(range(k), key=lambda i: key(basis[:, i]))
    return basis[:, order]


def eigh_descending(m):
    """Hermitian eigen-decomposition with eigenvalues sorted non-increasing.

    Returns ``(values, vectors)`` where ``vectors[:, k]`` belongs to
    ``values[k]``. Each eigenvector has its first nonzero amplitude made real
    positive. Inside a degenerate cluster the basis is rebuilt from the
    cluster's projector, so the output does not depend on rotation order, and
    the vectors are ordered by ``(-|a|, arg a)`` of their first nonzero
    amplitude ``a``.
    """
    w, v = jacobi_eigh(m)
    order = np.argsort(-w, kind="stable")
    w, v = w[order], v[:, order]
    n = w.size
    start = 0
    while start < n:
        stop = start + 1
        while stop < n and w[stop - 1] - w[stop] <= CLUSTER_TOL:
            stop += 1
        if stop - start > 1:
            v[:, start:stop] = _canonical_cluster(v[:, start:stop])
        start = stop
    for k in range(n):
        v[:, k] = normalize_phase(v[:, k])
    return w, v


def min_eigpair(m) -> tuple[float, np.ndarray]:
    """Smallest eigenvalue and a unit eigenvector for it."""
    w, v = eigh_descending(m)
    lo = w[-1]
    k = int(np.flatnonzero(w - lo <= CLUSTER_TOL)[0])
    return float(w[k]), v[:, k]


def min_eigval(m) -> float:
    return float(eigvals_descending(m)[-1])


def expectation(m, rho: DensityOperator) -> complex:
    """``Tr(rho m)``."""
    m = np.asarray(m)
    r = rho.matrix if isinstance(rho, DensityOperator) else np.asarray(rho)
    if m.shape != r.shape:
        raise DimensionError(f"operator shape {m.shape} does not match state shape {r.shape}")
    return complex(np.einsum("ij,ji->", r, m))


def schmidt_values(psi: Ket) -> np.ndarray:
    """Schmidt coefficients of a bipartite pure state, descending."""
    dims = psi.dims
    return np.linalg.svd(psi.amplitudes.reshape(dims.dA, dims.dB), compute_uv=False)


def hyperspherical_ket(angles, dims) -> Ket:
    """Real unit vector from ``n - 1`` hyperspherical angles.

    With ``s_i = sin(angles[i-1])`` and ``c_i = cos(angles[i-1])``, component 0 is
    ``s_1 ... s_{n-1}`` and component ``k >= 1`` is ``s_1 ... s_{n-1-k} * c_{n-k}``,
    so the last component is ``c_1``.
    """
    dims = as_dims(dims)
    n = dims.total
    angles = np.asarray(angles, dtype=float).reshape(-1)
    if angles.size != n - 1:
        raise ValueError(f"expected {n - 1} angles for a {n}-dimensional ket, got {angles.size}")
    sines = np.concatenate(([1.0], np.cumprod(np.sin(angles))))
    amp = np.empty(n)
    amp[0] = sines[n - 1]
    for k in range(1, n):
        amp[k] = sines[n - 1 - k] * np.cos(angles[n - 1 - k])
    return Ket(amp.astype(complex), dims)


def dims_of(n: int, dims=None) -> Dims:
    if dims is None:
        raise DimensionError(f"bipartite dims required for a {n}-dimensional operator")
    d = as_dims(dims)
    d.check(n)
    return d
