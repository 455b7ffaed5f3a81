"""Finite-dimensional real Lie algebras presented by structure constants.

A :class:`LieAlgebra` is a named basis e_0, ..., e_{n-1} together with the
rank-3 tensor ``c`` of structure constants, brackets expanding as

    [e_i, e_j] = sum_k c[i, j, k] e_k.

Algebras can be built from an explicit basis of skew-Hermitian matrices
(:func:`from_matrix_basis`), from the fixed generator conventions for su(n)
and so(n) (:func:`build_su`, :func:`build_so`), from direct sums, or from a
JSON description (:func:`algebra_from_file`).  The Killing form, its
signature, semi-simplicity and the center are all decided numerically.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

# Entries below this magnitude are zeroed by the constructors.
ZERO_DROP = 1e-12
# Singular values / eigenvalues below RANK_RTOL * largest count as zero in
# rank and signature decisions (scale-free).
RANK_RTOL = 1e-9
# Skew-Hermitian and closure checks on matrix bases.
DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class LieAlgebra:
    """Structure-constant presentation of a real Lie algebra.

    ``c`` has shape (dim, dim, dim) and must be exactly antisymmetric in its
    first two indices.  The Jacobi identity is *not* enforced here, so that
    perturbed tensors can be constructed and measured with
    :func:`jacobi_defect`.
    """

    name: str
    dim: int
    c: np.ndarray

    def __post_init__(self):
        c = np.ascontiguousarray(np.asarray(self.c, dtype=float))
        n = self.dim
        if n < 1:
            raise ValueError("dimension must be a positive integer")
        if c.shape != (n, n, n):
            raise ValueError(f"structure tensor must have shape ({n}, {n}, {n})")
        if not np.array_equal(c, -c.swapaxes(0, 1)):
            raise ValueError("structure constants must satisfy c[i,j,k] == -c[j,i,k] exactly")
        object.__setattr__(self, "c", c)

    def bracket(self, x, y) -> np.ndarray:
        """Bracket of two coefficient vectors, returned as a coefficient vector."""
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if x.shape != (self.dim,) or y.shape != (self.dim,):
            raise ValueError(f"coefficient vectors must have length {self.dim}")
        return np.einsum("i,j,ijk->k", x, y, self.c)

    def ad(self, x) -> np.ndarray:
        """Matrix of ad(x): column j holds the coefficients of [x, e_j]."""
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dim,):
            raise ValueError(f"coefficient vector must have length {self.dim}")
        return np.einsum("i,ijk->kj", x, self.c)


@dataclass(frozen=True)
class KillingData:
    """Killing form of an algebra plus the derived structural decisions."""

    K: np.ndarray
    B: np.ndarray
    signature: tuple[int, int, int]  # (negatives, zeros, positives)
    semisimple: bool
    center_dim: int


@dataclass(frozen=True)
class MatrixBasis:
    """Basis of skew-Hermitian matrices spanning a matrix Lie algebra.

    Linear independence is checked where the basis is consumed
    (:func:`from_matrix_basis`), via the Gram matrix of the trace pairing
    <A, B> = -Re tr(AB).
    """

    matrices: tuple
    name: str = "matrix-basis"
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        mats = tuple(np.asarray(m, dtype=complex) for m in self.matrices)
        if not mats:
            raise ValueError("matrix basis must be non-empty")
        d = mats[0].shape[0]
        for m in mats:
            if m.ndim != 2 or m.shape != (d, d):
                raise ValueError("all basis matrices must be square and of equal size")
            if np.abs(m + m.conj().T).max() > self.tol:
                raise ValueError("basis matrices must be skew-Hermitian")
        object.__setattr__(self, "matrices", mats)

    @property
    def dim(self) -> int:
        return len(self.matrices)


def trace_gram(basis: MatrixBasis) -> np.ndarray:
    """Gram matrix of the pairing <A, B> = -Re tr(AB) over the basis."""
    stack = np.stack(basis.matrices)
    return -np.real(np.einsum("aij,bji->ab", stack, stack))


def from_matrix_basis(basis: MatrixBasis, tol: float = DEFAULT_TOL) -> LieAlgebra:
    """Expand all commutators of a matrix basis into structure constants.

    Each coefficient vector is obtained by solving the Gram system of the
    trace pairing; the expansion residual must stay below ``tol`` or the
    basis does not close under the commutator.
    """
    stack = np.stack(basis.matrices)
    n = basis.dim
    gram = trace_gram(basis)
    svals = np.linalg.svd(gram, compute_uv=False)
    if svals[-1] <= RANK_RTOL * svals[0]:
        raise ValueError("dependent basis: trace-pairing Gram matrix is singular")
    c = np.zeros((n, n, n))
    for i in range(n):
        for j in range(i + 1, n):
            comm = stack[i] @ stack[j] - stack[j] @ stack[i]
            rhs = -np.real(np.einsum("ij,kji->k", comm, stack))
            coef = np.linalg.solve(gram, rhs)
            recon = np.einsum("k,kij->ij", coef, stack)
            if np.abs(comm - recon).max() > tol:
                raise ValueError(
                    f"not a subalgebra: [M_{i}, M_{j}] does not expand in the basis"
                )
            coef[np.abs(coef) < ZERO_DROP] = 0.0
            c[i, j] = coef
            c[j, i] = -coef
    return LieAlgebra(basis.name, n, c)


def killing(algebra: LieAlgebra) -> KillingData:
    """Killing form K(e_i, e_j) = tr(ad e_i ad e_j) and structural flags.

    The signature counts eigenvalues below/at/above the scale-free zero
    threshold; ``semisimple`` requires no zero eigenvalues; the center is
    the kernel of x -> ad(x).
    """
    c = algebra.c
    K = np.einsum("iba,jab->ij", c, c)
    K = 0.5 * (K + K.T)  # contraction order can leave last-ulp asymmetry
    eigs = np.linalg.eigvalsh(K)
    thr = RANK_RTOL * np.abs(eigs).max() if eigs.size else 0.0
    negatives = int(np.sum(eigs < -thr))
    positives = int(np.sum(eigs > thr))
    zeros = algebra.dim - negatives - positives
    ad_map = c.reshape(algebra.dim, -1)
    svals = np.linalg.svd(ad_map, compute_uv=False)
    rank = int(np.sum(svals > RANK_RTOL * svals[0])) if svals[0] > 0 else 0
    return KillingData(
        K=K,
        B=-K,
        signature=(negatives, zeros, positives),
        semisimple=(zeros == 0),
        center_dim=algebra.dim - rank,
    )


def jacobi_defect(algebra_or_tensor) -> float:
    """Largest absolute Jacobi residual over all index quadruples.

    Accepts a :class:`LieAlgebra` or a raw (n, n, n) tensor; zero for
    genuine Lie algebras.
    """
    c = algebra_or_tensor.c if isinstance(algebra_or_tensor, LieAlgebra) else np.asarray(algebra_or_tensor, dtype=float)
    r = np.einsum("ijm,mkl->ijkl", c, c)
    resid = r + r.transpose(1, 2, 0, 3) + r.transpose(2, 0, 1, 3)
    return float(np.abs(resid).max()) if resid.size else 0.0


# ---------------------------------------------------------------------------
# Built-in constructors
# ---------------------------------------------------------------------------

def pauli_basis() -> MatrixBasis:
    """su(2) as -i times the Pauli matrices.

    The sign is fixed so that [E_1, E_2] = 2 E_3 together with its cyclic
    permutations; +i would flip all three brackets.
    """
    s1 = np.array([[0, 1], [1, 0]], dtype=complex)
    s2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
    s3 = np.array([[1, 0], [0, -1]], dtype=complex)
    return MatrixBasis(tuple(-1j * s for s in (s1, s2, s3)), name="su2")


def _hermitian_generators(n: int) -> list[np.ndarray]:
    """Generalized Gell-Mann matrices: symmetric pairs, antisymmetric pairs,
    then diagonal generators, each normalized to tr(G^2) = 2."""
    gens = []
    for j in range(n):
        for k in range(j + 1, n):
            g = np.zeros((n, n), dtype=complex)
            g[j, k] = g[k, j] = 1.0
            gens.append(g)
    for j in range(n):
        for k in range(j + 1, n):
            g = np.zeros((n, n), dtype=complex)
            g[j, k] = -1j
            g[k, j] = 1j
            gens.append(g)
    for l in range(1, n):
        diag = np.zeros(n)
        diag[:l] = 1.0
        diag[l] = -l
        gens.append(np.diag(diag).astype(complex) * np.sqrt(2.0 / (l * (l + 1))))
    return gens


def build_su(n: int) -> LieAlgebra:
    """su(n) from skew-Hermitian generators -i G_a, dim n^2 - 1.

    For n = 2 this reproduces the Pauli conventions of :func:`pauli_basis`,
    including [E_1, E_2] = 2 E_3.
    """
    if n < 2:
        raise ValueError("build_su requires n >= 2")
    mats = tuple(-1j * g for g in _hermitian_generators(n))
    return from_matrix_basis(MatrixBasis(mats, name=f"su{n}"))


def build_so(n: int) -> LieAlgebra:
    """so(n) on the basis E_ij - E_ji, i < j, ordered lexicographically."""
    if n < 3:
        raise ValueError("build_so requires n >= 3")
    mats = []
    for i in range(n):
        for j in range(i + 1, n):
            m = np.zeros((n, n), dtype=complex)
            m[i, j] = 1.0
            m[j, i] = -1.0
            mats.append(m)
    return from_matrix_basis(MatrixBasis(tuple(mats), name=f"so{n}"))


def abelian(dim: int, name: str | None = None) -> LieAlgebra:
    """Abelian algebra of the given dimension (all brackets vanish)."""
    if dim < 1:
        raise ValueError("abelian requires dim >= 1")
    return LieAlgebra(name or f"abelian{dim}", dim, np.zeros((dim, dim, dim)))


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    """Direct sum; cross-block structure constants are exactly zero."""
    n = a.dim + b.dim
    c = np.zeros((n, n, n))
    c[: a.dim, : a.dim, : a.dim] = a.c
    c[a.dim :, a.dim :, a.dim :] = b.c
    return LieAlgebra(f"{a.name}+{b.name}", n, c)


# ---------------------------------------------------------------------------
# Structure-constant files
# ---------------------------------------------------------------------------

def algebra_from_dict(obj: dict) -> LieAlgebra:
    """Build an algebra from the JSON structure-constant format.

    Expected keys: ``name``, ``dim`` and ``structure_constants`` as a list of
    ``[i, j, k, value]`` with 0-based indices.  Only i < j entries need be
    listed; the antisymmetric completion is applied.  Exact duplicates and
    mirror entries inconsistent with antisymmetry are rejected.
    """
    try:
        name = str(obj["name"])
        dim = int(obj["dim"])
        entries = obj["structure_constants"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"algebra file must define name, dim, structure_constants: {exc}")
    if dim < 1:
        raise ValueError("dim must be a positive integer")
    seen: dict[tuple[int, int, int], float] = {}
    for entry in entries:
        if len(entry) != 4:
            raise ValueError(f"structure constant entries must be [i, j, k, value], got {entry}")
        i, j, k = (int(v) for v in entry[:3])
        value = float(entry[3])
        if not np.isfinite(value):
            raise ValueError(f"non-finite structure constant at ({i}, {j}, {k})")
        if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
            raise ValueError(f"index out of range in entry ({i}, {j}, {k})")
        if i == j:
            raise ValueError(f"diagonal entry ({i}, {i}, {k}) violates antisymmetry")
        if (i, j, k) in seen:
            raise ValueError(f"duplicate entry for ({i}, {j}, {k})")
        seen[(i, j, k)] = value
    c = np.zeros((dim, dim, dim))
    for (i, j, k), value in seen.items():
        mirror = seen.get((j, i, k))
        if mirror is not None and mirror != -value:
            raise ValueError(f"entries ({i},{j},{k}) and ({j},{i},{k}) are not antisymmetric")
        c[i, j, k] = value
        c[j, i, k] = -value
    return LieAlgebra(name, dim, c)


def algebra_from_file(path: str | Path) -> LieAlgebra:
    """Load an algebra from a JSON structure-constant file."""
    with open(path, "r", encoding="utf-8") as fh:
        return algebra_from_dict(json.load(fh))


def algebra_to_dict(algebra: LieAlgebra) -> dict:
    """Serialize to the structure-constant file format (i < j entries only)."""
    entries = []
    n = algebra.dim
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                v = algebra.c[i, j, k]
                if v != 0.0:
                    entries.append([i, j, k, float(v)])
    return {"name": algebra.name, "dim": n, "structure_constants": entries}


_BUILTIN_RE = re.compile(r"^(su|so)(\d+)$")


def resolve_algebra(source: str | Path) -> LieAlgebra:
    """Resolve a built-in name (``su2``, ``so5``, ...) or a file path."""
    text = str(source)
    m = _BUILTIN_RE.match(text)
    if m:
        n = int(m.group(2))
        return build_su(n) if m.group(1) == "su" else build_so(n)
    path = Path(text)
    if path.exists():
        return algebra_from_file(path)
    raise ValueError(f"unknown algebra source: {text!r} (not a built-in name or readable file)")
