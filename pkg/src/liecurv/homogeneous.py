"""Curvature data for compact homogeneous quotients.

A quotient is described by a subalgebra and an orthogonal block
decomposition of its complement.  :func:`build_spec` reduces that geometry
to the quadruple consumed by the scalar curvature formula: block
dimensions, the Killing-to-metric ratios, the Casimir constants of the
subalgebra action, and the tensor of summed squared structure constants of
brackets between blocks.  The group itself is the special case of singleton
blocks with no subalgebra (:func:`group_as_homogeneous`).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .binorm import BiInvariantMetric, DiagonalMetric, OrthonormalModel, antisymmetry_defect, check_metric, killing_metric
from .curvature import CurvatureResult
from .lie_core import LieAlgebra, killing, resolve_algebra

DEFAULT_TOL = 1e-9
# Scalar-multiple test: off-diagonal max and diagonal spread relative to the
# diagonal mean.
SCALAR_RTOL = 1e-8


@dataclass(frozen=True)
class HomogeneousSpec:
    """Everything the homogeneous scalar curvature formula consumes.

    ``coupling[i, j, k]`` sums the squared orthonormal structure constants
    of complement-component brackets between blocks i, j read off against
    block k; ``killing_ratios[i]`` is the factor relating the negative
    Killing form to the reference metric on block i (zero exactly when the
    block sits in the center); ``casimirs[i]`` is the scalar by which the
    subalgebra Casimir operator acts on block i.
    """

    name: str
    s: int
    block_dims: np.ndarray
    killing_ratios: np.ndarray
    casimirs: np.ndarray
    coupling: np.ndarray
    provenance: str  # "from-algebra" | "raw-file"

    def __post_init__(self):
        d = np.asarray(self.block_dims, dtype=int)
        b = np.asarray(self.killing_ratios, dtype=float)
        c = np.asarray(self.casimirs, dtype=float)
        a = np.asarray(self.coupling, dtype=float)
        s = self.s
        if d.shape != (s,) or b.shape != (s,) or c.shape != (s,):
            raise ValueError("block data must all have length s")
        if a.shape != (s, s, s):
            raise ValueError(f"coupling tensor must have shape ({s}, {s}, {s})")
        if np.any(d < 1):
            raise ValueError("block dimensions must be positive integers")
        if np.any(c < 0):
            raise ValueError("Casimir constants must be nonnegative")
        if np.any(a < 0):
            raise ValueError("coupling tensor entries must be nonnegative")
        for name, arr in (("block_dims", d), ("killing_ratios", b), ("casimirs", c), ("coupling", a)):
            object.__setattr__(self, name, arr)

    def central_blocks(self, tol: float = DEFAULT_TOL) -> list[int]:
        """Indices of blocks contained in the center (vanishing Killing ratio)."""
        thr = tol * max(1.0, float(np.abs(self.killing_ratios).max()))
        return [i for i in range(self.s) if abs(self.killing_ratios[i]) <= thr]


@dataclass(frozen=True)
class SubalgebraEmbedding:
    """A subalgebra plus an orthogonal block decomposition of its complement.

    ``h_basis`` holds coefficient vectors spanning the subalgebra (possibly
    empty for the group case); ``blocks`` holds one list of spanning
    coefficient vectors per complement block.
    """

    parent: LieAlgebra
    h_basis: np.ndarray
    blocks: tuple

    def __post_init__(self):
        n = self.parent.dim
        h = np.asarray(self.h_basis, dtype=float).reshape(-1, n)
        blocks = tuple(np.asarray(b, dtype=float).reshape(-1, n) for b in self.blocks)
        if not blocks:
            raise ValueError("at least one complement block is required")
        for b in blocks:
            if b.shape[0] == 0:
                raise ValueError("complement blocks must be non-empty")
        object.__setattr__(self, "h_basis", h)
        object.__setattr__(self, "blocks", blocks)


def _orthonormal_rows(rows: np.ndarray, gram: np.ndarray, what: str) -> np.ndarray:
    """Orthonormalize spanning rows for the metric via Cholesky of their Gram."""
    if rows.shape[0] == 0:
        return rows
    g = rows @ gram @ rows.T
    try:
        L = np.linalg.cholesky(g)
    except np.linalg.LinAlgError:
        raise ValueError(f"{what} spanning vectors are linearly dependent")
    return np.linalg.solve(L, rows)


def _scalar_multiple(mat: np.ndarray, rtol: float = SCALAR_RTOL) -> tuple[bool, float]:
    """Decide whether a square matrix is a scalar multiple of the identity."""
    diag = np.diag(mat)
    mean = float(diag.mean())
    off = mat - np.diag(diag)
    atol = rtol * max(1.0, abs(mean))
    ok = np.abs(off).max() <= atol and np.abs(diag - mean).max() <= atol
    return bool(ok), mean


def build_spec(embedding: SubalgebraEmbedding, metric: BiInvariantMetric,
               tol: float = DEFAULT_TOL, name: str | None = None) -> HomogeneousSpec:
    """Reduce a quotient description to homogeneous curvature data.

    Verifies the two necessary conditions the formulas rely on (Casimir
    scalar on each block, Killing ratio constant on each block) rather than
    irreducibility itself; failures ask the caller to refine the blocks.
    """
    algebra = embedding.parent
    if algebra is not metric.base and algebra.dim != metric.base.dim:
        raise ValueError("embedding and metric refer to different algebras")
    check_metric(metric, tol)
    gram = metric.gram
    n = algebra.dim

    z = _orthonormal_rows(embedding.h_basis, gram, "subalgebra")
    frames = [_orthonormal_rows(b, gram, f"block {i}") for i, b in enumerate(embedding.blocks)]
    dims = np.array([f.shape[0] for f in frames], dtype=int)
    s = len(frames)

    # h must close under the bracket.
    for a in range(z.shape[0]):
        for b in range(a + 1, z.shape[0]):
            v = algebra.bracket(z[a], z[b])
            resid = v - (z @ gram @ v) @ z
            if np.sqrt(resid @ gram @ resid) > tol:
                raise ValueError("h is not a subalgebra: bracket leaves its span")

    # Mutual orthogonality and completeness in one Gram check.
    full = np.vstack([z] + frames)
    if full.shape[0] != n:
        raise ValueError(f"subalgebra and blocks span dimension {full.shape[0]}, expected {n}")
    g_full = full @ gram @ full.T
    if np.abs(g_full - np.eye(n)).max() > tol:
        raise ValueError("subalgebra and blocks are not mutually orthogonal")

    # Each block must be preserved by the subalgebra action.
    for i, frame in enumerate(frames):
        for a in range(z.shape[0]):
            for x in frame:
                v = algebra.bracket(z[a], x)
                resid = v - (frame @ gram @ v) @ frame
                if np.sqrt(resid @ gram @ resid) > tol:
                    raise ValueError(f"block {i} is not invariant under the subalgebra action")

    # Summed squared structure constants of complement brackets.
    em = np.vstack(frames)
    proj = em @ gram  # proj[g, k] = <e_k, E_g>
    cm = np.einsum("ai,bj,ijk,ck->abc", em, em, algebra.c, proj)
    owner = np.zeros((s, em.shape[0]))
    pos = 0
    for i, d in enumerate(dims):
        owner[i, pos:pos + d] = 1.0
        pos += d
    coupling = np.einsum("ia,jb,kc,abc->ijk", owner, owner, owner, cm * cm)

    # Killing ratio per block, verified constant.
    b_mat = killing(algebra).B
    ratios = np.zeros(s)
    for i, frame in enumerate(frames):
        restriction = frame @ b_mat @ frame.T
        ok, value = _scalar_multiple(restriction)
        if not ok:
            raise ValueError(
                f"block {i} not irreducible-compatible: refine decomposition "
                "(Killing ratio not constant on the block)")
        ratios[i] = value

    # Casimir constant per block, verified scalar.
    casimirs = np.zeros(s)
    for i, frame in enumerate(frames):
        cas = np.zeros((frame.shape[0], frame.shape[0]))
        for a in range(z.shape[0]):
            act = np.array([frame @ gram @ algebra.bracket(z[a], x) for x in frame]).T
            cas -= act @ act
        ok, value = _scalar_multiple(cas)
        if not ok:
            raise ValueError(
                f"block {i} not irreducible-compatible: refine decomposition "
                "(Casimir operator not scalar on the block)")
        casimirs[i] = max(value, 0.0)

    return HomogeneousSpec(
        name=name or f"{algebra.name}/h{z.shape[0]}",
        s=s,
        block_dims=dims,
        killing_ratios=ratios,
        casimirs=casimirs,
        coupling=coupling,
        provenance="from-algebra",
    )


def group_as_homogeneous(model: OrthonormalModel, tol: float = DEFAULT_TOL,
                         name: str | None = None) -> HomogeneousSpec:
    """Homogeneous data of the group itself: singleton blocks, no subalgebra.

    Coupling entries are the squared structure constants, Casimirs vanish,
    and the Killing ratios come straight from the Killing form of the
    orthonormal tensor.
    """
    if antisymmetry_defect(model) > tol * max(1.0, np.abs(model.c).max()):
        raise ValueError("basis not bi-invariant-orthonormal: structure tensor "
                         "is not totally antisymmetric")
    k = np.einsum("iba,jab->ij", model.c, model.c)
    return HomogeneousSpec(
        name=name or model.name,
        s=model.n,
        block_dims=np.ones(model.n, dtype=int),
        killing_ratios=-np.diag(k),
        casimirs=np.zeros(model.n),
        coupling=model.c * model.c,
        provenance="from-algebra",
    )


def _lambda_vector(lam, s: int) -> np.ndarray:
    values = lam.values if isinstance(lam, DiagonalMetric) else np.asarray(lam, dtype=float)
    if values.shape != (s,):
        raise ValueError(f"metric eigenvalue vector must have length {s}")
    if not np.all(values > 0):
        raise ValueError("metric eigenvalues must be positive")
    return values


def scalar_curvature_homogeneous(spec: HomogeneousSpec, lam) -> CurvatureResult:
    """Scalar curvature of the diagonal invariant metric with block ratios ``lam``."""
    values = _lambda_vector(lam, spec.s)
    inv = 1.0 / values
    r = 0.5 * float(np.dot(spec.killing_ratios * spec.block_dims, inv)) \
        - 0.25 * float(np.einsum("ijk,i,j,k->", spec.coupling, inv, inv, values))
    return CurvatureResult(R=r, method="homogeneous", algebra=spec.name, lam=values.copy())


def scalar_gradient_homogeneous(spec: HomogeneousSpec, lam) -> np.ndarray:
    """Analytic gradient of :func:`scalar_curvature_homogeneous` in ``lam``."""
    values = _lambda_vector(lam, spec.s)
    inv = 1.0 / values
    inv2 = inv * inv
    a = spec.coupling
    e1 = inv2 * np.einsum("mjk,j,k->m", a, inv, values)
    e2 = inv2 * np.einsum("imk,i,k->m", a, inv, values)
    e3 = np.einsum("ijm,i,j->m", a, inv, inv)
    return -0.5 * spec.killing_ratios * spec.block_dims * inv2 + 0.25 * (e1 + e2 - e3)


def sum_rule_defect(spec: HomogeneousSpec) -> np.ndarray:
    """Per-block residual of the coupling sum rule.

    For data built from a bi-invariant metric, summing the coupling tensor
    over its last two slots must reproduce b_i d_i - 2 c_i d_i.
    """
    lhs = spec.coupling.sum(axis=(1, 2))
    rhs = spec.block_dims * (spec.killing_ratios - 2.0 * spec.casimirs)
    return np.abs(lhs - rhs)


# ---------------------------------------------------------------------------
# Homogeneous spec files
# ---------------------------------------------------------------------------

def spec_from_dict(obj: dict, base_dir: str | Path = ".", name: str = "homogeneous-spec") -> HomogeneousSpec:
    """Load a homogeneous spec from its JSON form.

    Raw form: keys ``s``, ``d``, ``b``, ``c`` and ``A`` as sparse
    ``[i, j, k, value]`` triplets; accepted verbatim with provenance
    "raw-file" (the sum rule is reported downstream, not enforced).
    Derived form: keys ``algebra`` (built-in name or path relative to
    ``base_dir``), ``scale``, ``h_basis`` and ``blocks``; runs
    :func:`build_spec`.
    """
    if "s" in obj:
        s = int(obj["s"])
        a = np.zeros((s, s, s))
        seen = set()
        for entry in obj.get("A", []):
            if len(entry) != 4:
                raise ValueError(f"coupling entries must be [i, j, k, value], got {entry}")
            i, j, k = (int(v) for v in entry[:3])
            if not (0 <= i < s and 0 <= j < s and 0 <= k < s):
                raise ValueError(f"coupling index out of range in ({i}, {j}, {k})")
            if (i, j, k) in seen:
                raise ValueError(f"duplicate coupling entry for ({i}, {j}, {k})")
            seen.add((i, j, k))
            a[i, j, k] = float(entry[3])
        try:
            d, b, c = obj["d"], obj["b"], obj["c"]
        except KeyError as exc:
            raise ValueError(f"raw homogeneous spec needs keys d, b, c: missing {exc}")
        return HomogeneousSpec(
            name=name, s=s,
            block_dims=np.asarray(d, dtype=int),
            killing_ratios=np.asarray(b, dtype=float),
            casimirs=np.asarray(c, dtype=float),
            coupling=a,
            provenance="raw-file",
        )
    if "algebra" in obj:
        source = str(obj["algebra"])
        candidate = Path(base_dir) / source
        algebra = resolve_algebra(candidate if candidate.exists() else source)
        scale = float(obj.get("scale", 1.0))
        if "blocks" not in obj:
            raise ValueError("derived homogeneous spec needs a 'blocks' key")
        embedding = SubalgebraEmbedding(
            parent=algebra,
            h_basis=np.asarray(obj.get("h_basis", []), dtype=float).reshape(-1, algebra.dim),
            blocks=tuple(np.asarray(b, dtype=float) for b in obj["blocks"]),
        )
        return build_spec(embedding, killing_metric(algebra, scale), name=name)
    raise ValueError("homogeneous spec must be raw (key 's') or derived (key 'algebra')")


def spec_from_file(path: str | Path) -> HomogeneousSpec:
    """Load a homogeneous spec from a JSON file (raw or derived form)."""
    path = Path(path)
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    return spec_from_dict(obj, base_dir=path.parent, name=path.stem)
