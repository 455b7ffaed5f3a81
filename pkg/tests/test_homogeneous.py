import json

import numpy as np
import pytest
from numpy.testing import assert_allclose

import liecurv as lc


def test_su2_trivial_subalgebra_spec(group_specs):
    spec = group_specs["su2"]
    assert spec.s == 3
    assert_allclose(spec.block_dims, [1, 1, 1])
    assert_allclose(spec.casimirs, np.zeros(3), atol=1e-14)
    assert_allclose(spec.killing_ratios, [8.0, 8.0, 8.0], atol=1e-12)
    expected = np.zeros((3, 3, 3))
    for i, j, k in ((0, 1, 2), (1, 0, 2), (1, 2, 0), (2, 1, 0), (2, 0, 1), (0, 2, 1)):
        expected[i, j, k] = 4.0
    assert_allclose(spec.coupling, expected, atol=1e-12)
    assert spec.provenance == "from-algebra"


def test_sphere_spec_data(s2_spec):
    assert s2_spec.s == 1
    assert s2_spec.block_dims[0] == 2
    assert s2_spec.killing_ratios[0] == pytest.approx(8.0, abs=1e-12)
    assert s2_spec.casimirs[0] == pytest.approx(4.0, abs=1e-12)
    assert np.abs(s2_spec.coupling).max() <= 1e-14


def test_sphere_scalar_curvature(s2_spec):
    assert lc.scalar_curvature_homogeneous(s2_spec, [1.0]).R == pytest.approx(8.0, abs=1e-12)
    for t in (0.5, 1.0, 2.0):
        assert lc.scalar_curvature_homogeneous(s2_spec, [t]).R == pytest.approx(8.0 / t, abs=1e-12)
    # strictly decreasing in the stretch
    values = [lc.scalar_curvature_homogeneous(s2_spec, [t]).R for t in (0.5, 1.0, 2.0, 5.0)]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_abelian_blocks_flagged_not_rejected():
    algebra = lc.abelian(2)
    metric = lc.BiInvariantMetric(algebra, np.eye(2))
    embedding = lc.SubalgebraEmbedding(parent=algebra, h_basis=[],
                                       blocks=([[1.0, 0.0]], [[0.0, 1.0]]))
    spec = lc.build_spec(embedding, metric, name="torus")
    assert_allclose(spec.killing_ratios, [0.0, 0.0], atol=1e-14)
    assert np.all(spec.coupling == 0.0)
    assert spec.central_blocks() == [0, 1]


def test_group_shortcut_matches_full_construction(group_specs, su2_model):
    via_blocks = group_specs["su2"]
    shortcut = lc.group_as_homogeneous(su2_model)
    assert_allclose(shortcut.killing_ratios, via_blocks.killing_ratios, atol=1e-12)
    assert_allclose(shortcut.coupling, via_blocks.coupling, atol=1e-12)
    assert_allclose(shortcut.block_dims, via_blocks.block_dims)
    assert_allclose(shortcut.casimirs, via_blocks.casimirs, atol=1e-14)


@pytest.mark.parametrize("name", ["su2", "so4"])
def test_group_reduction_reproduces_closed_formula(name, group_models):
    model = group_models[name]
    spec = lc.group_as_homogeneous(model)
    rng = np.random.default_rng(37)
    for _ in range(100):
        lam = rng.uniform(0.2, 8.0, size=model.n)
        r_homog = lc.scalar_curvature_homogeneous(spec, lam).R
        r_closed = lc.scalar_curvature_closed(model, lam).R
        assert abs(r_homog - r_closed) <= 1e-10 * (1.0 + abs(r_closed))


def test_group_as_homogeneous_abelian():
    algebra = lc.abelian(2)
    model = lc.binormalize(algebra, lc.BiInvariantMetric(algebra, np.eye(2)))
    spec = lc.group_as_homogeneous(model)
    assert np.all(spec.killing_ratios == 0.0)
    assert np.all(spec.coupling == 0.0)
    assert lc.scalar_curvature_homogeneous(spec, [0.3, 7.0]).R == 0.0


@pytest.mark.parametrize("name", ["su3", "so4", "so5"])
def test_coupling_tensor_is_symmetric(name, group_specs):
    a = group_specs[name].coupling
    for perm in ((1, 0, 2), (0, 2, 1), (2, 1, 0)):
        assert np.abs(a - a.transpose(perm)).max() <= 1e-10


@pytest.mark.parametrize("name", ["su2", "su3", "so4", "so5"])
def test_sum_rule_for_groups(name, group_specs):
    assert lc.sum_rule_defect(group_specs[name]).max() <= 1e-9


def test_sum_rule_for_sphere(s2_spec):
    assert lc.sum_rule_defect(s2_spec).max() <= 1e-10


def test_sum_rule_detects_missing_casimir(s2_spec):
    doctored = lc.HomogeneousSpec(
        name="s2-no-casimir", s=1,
        block_dims=s2_spec.block_dims,
        killing_ratios=s2_spec.killing_ratios,
        casimirs=np.zeros(1),
        coupling=s2_spec.coupling,
        provenance="raw-file",
    )
    assert lc.sum_rule_defect(doctored)[0] == pytest.approx(16.0, abs=1e-12)


def test_central_block_in_direct_sum():
    algebra = lc.direct_sum(lc.build_su(2), lc.abelian(1))
    gram = np.diag([8.0, 8.0, 8.0, 1.0])  # invariant: killing part plus any scale on the center
    blocks = tuple([np.eye(4)[i]] for i in range(4))
    embedding = lc.SubalgebraEmbedding(parent=algebra, h_basis=[], blocks=blocks)
    spec = lc.build_spec(embedding, lc.BiInvariantMetric(algebra, gram), name="u2-like")
    assert spec.killing_ratios[3] == 0.0
    assert spec.central_blocks() == [3]


def test_subalgebra_closure_required(su2):
    embedding = lc.SubalgebraEmbedding(
        parent=su2, h_basis=[[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]],
        blocks=([[0.0, 0.0, 1.0]],))
    with pytest.raises(ValueError, match="not a subalgebra"):
        lc.build_spec(embedding, lc.killing_metric(su2, 0.125))


def test_casimir_must_be_scalar_on_blocks():
    algebra = lc.build_su(3)
    e = np.eye(8)
    # one diagonal generator as the subalgebra; the remaining seven vectors
    # mix inequivalent weight spaces, so the Casimir cannot be scalar
    embedding = lc.SubalgebraEmbedding(
        parent=algebra, h_basis=[e[6]],
        blocks=(np.vstack([e[i] for i in range(8) if i != 6]),))
    with pytest.raises(ValueError, match="not irreducible-compatible"):
        lc.build_spec(embedding, lc.killing_metric(algebra, 1.0))


def test_killing_ratio_must_be_constant_on_blocks():
    algebra = lc.direct_sum(lc.build_su(2), lc.build_su(2))
    gram = np.diag([8.0, 8.0, 8.0, 16.0, 16.0, 16.0])  # different scale per factor
    e = np.eye(6)
    embedding = lc.SubalgebraEmbedding(
        parent=algebra, h_basis=[],
        blocks=(np.vstack([e[0], e[3]]), [e[1]], [e[2]], [e[4]], [e[5]]))
    with pytest.raises(ValueError, match="not irreducible-compatible"):
        lc.build_spec(embedding, lc.BiInvariantMetric(algebra, gram))


def test_blocks_must_be_orthogonal(su2):
    embedding = lc.SubalgebraEmbedding(
        parent=su2, h_basis=[],
        blocks=([[1.0, 0.0, 0.0]], [[1.0, 1.0, 0.0]], [[0.0, 0.0, 1.0]]))
    with pytest.raises(ValueError, match="orthogonal"):
        lc.build_spec(embedding, lc.killing_metric(su2, 0.125))


def test_decomposition_must_span(su2):
    embedding = lc.SubalgebraEmbedding(
        parent=su2, h_basis=[],
        blocks=([[1.0, 0.0, 0.0]], [[0.0, 1.0, 0.0]]))
    with pytest.raises(ValueError, match="span"):
        lc.build_spec(embedding, lc.killing_metric(su2, 0.125))


def test_block_invariance_required():
    algebra = lc.build_su(3)
    e = np.eye(8)
    # the subalgebra moves single root vectors out of their spans
    embedding = lc.SubalgebraEmbedding(
        parent=algebra, h_basis=[e[6]],
        blocks=tuple([e[i]] for i in range(8) if i != 6))
    with pytest.raises(ValueError, match="not invariant"):
        lc.build_spec(embedding, lc.killing_metric(algebra, 1.0))


def test_four_sphere_from_so5():
    # SO(5)/SO(4): a symmetric space, so the complement brackets fall into
    # the subalgebra and the coupling vanishes.  The normal metric is the
    # round sphere of radius sqrt(6), hence scalar curvature 12/6 = 2.
    so5 = lc.build_so(5)
    pairs = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    e = np.eye(10)
    h_rows = [e[a] for a, (i, j) in enumerate(pairs) if j != 4]
    m_rows = [e[a] for a, (i, j) in enumerate(pairs) if j == 4]
    embedding = lc.SubalgebraEmbedding(parent=so5, h_basis=h_rows, blocks=(np.vstack(m_rows),))
    sphere = lc.build_spec(embedding, lc.killing_metric(so5, 1.0), name="s4")
    assert sphere.block_dims[0] == 4
    assert sphere.killing_ratios[0] == pytest.approx(1.0, abs=1e-12)
    assert sphere.casimirs[0] == pytest.approx(0.5, abs=1e-12)
    assert np.abs(sphere.coupling).max() <= 1e-12
    assert lc.scalar_curvature_homogeneous(sphere, [1.0]).R == pytest.approx(2.0, abs=1e-12)
    assert lc.sum_rule_defect(sphere).max() <= 1e-12


def test_flag_manifold_from_su3():
    # SU(3) over its torus: three 2-dim root blocks.  With the negative
    # Killing form as reference, each root has squared length 1/3, which is
    # the Casimir constant of the torus action on its root block.
    su3 = lc.build_su(3)
    e = np.eye(8)
    embedding = lc.SubalgebraEmbedding(
        parent=su3, h_basis=[e[6], e[7]],
        blocks=(np.vstack([e[0], e[3]]), np.vstack([e[1], e[4]]), np.vstack([e[2], e[5]])))
    flag = lc.build_spec(embedding, lc.killing_metric(su3, 1.0), name="flag")
    assert_allclose(flag.block_dims, [2, 2, 2])
    assert_allclose(flag.killing_ratios, [1.0, 1.0, 1.0], atol=1e-12)
    assert_allclose(flag.casimirs, [1.0 / 3.0] * 3, atol=1e-12)
    assert flag.coupling.sum() == pytest.approx(2.0, abs=1e-12)
    assert lc.scalar_curvature_homogeneous(flag, np.ones(3)).R == pytest.approx(2.5, abs=1e-12)
    assert lc.sum_rule_defect(flag).max() <= 1e-12
    # both deficit mechanisms are active on this space
    gb = lc.gap_breakdown(flag, [2.0, 1.5, 3.0])
    assert gb.casimir_part > 0.5 and gb.poly_part > 0.1
    assert gb.residual <= 1e-12
    assert lc.verify_rigidity(flag, n_starts=16, n_samples=2000, seed=0).certified


def test_reference_value_specialization(group_specs, s2_spec):
    for spec in (group_specs["so4"], s2_spec):
        expected = 0.5 * float(np.sum(spec.killing_ratios * spec.block_dims)) \
            - 0.25 * float(spec.coupling.sum())
        assert lc.scalar_curvature_homogeneous(spec, np.ones(spec.s)).R == expected


def test_diagonal_metric_wrapper_accepted(s2_spec, su2_model):
    wrapped = lc.DiagonalMetric(np.array([2.0]))
    assert lc.scalar_curvature_homogeneous(s2_spec, wrapped).R == pytest.approx(4.0)
    assert lc.scalar_curvature_closed(su2_model, lc.DiagonalMetric(np.ones(3))).R == 6.0


def test_homogeneous_lambda_validation(s2_spec):
    with pytest.raises(ValueError, match="length"):
        lc.scalar_curvature_homogeneous(s2_spec, [1.0, 1.0])
    with pytest.raises(ValueError, match="positive"):
        lc.scalar_curvature_homogeneous(s2_spec, [-1.0])


def test_gradient_matches_finite_differences(s2_spec, group_specs):
    h = 1e-5
    rng = np.random.default_rng(41)
    for spec in (s2_spec, group_specs["su3"]):
        for _ in range(10):
            lam = rng.uniform(0.5, 5.0, size=spec.s)
            grad = lc.scalar_gradient_homogeneous(spec, lam)
            for m in range(spec.s):
                up = lam.copy(); up[m] += h
                dn = lam.copy(); dn[m] -= h
                fd = (lc.scalar_curvature_homogeneous(spec, up).R
                      - lc.scalar_curvature_homogeneous(spec, dn).R) / (2.0 * h)
                assert abs(grad[m] - fd) <= 1e-6


# ---------------------------------------------------------------------------
# spec files
# ---------------------------------------------------------------------------

def test_raw_spec_file(tmp_path):
    raw = {"s": 1, "d": [2], "b": [8.0], "c": [0.0], "A": []}
    path = tmp_path / "probe.spec"
    path.write_text(json.dumps(raw), encoding="utf-8")
    spec = lc.spec_from_file(path)
    assert spec.provenance == "raw-file"
    assert spec.name == "probe"
    # the sum rule is reported, not enforced, for raw data
    assert lc.sum_rule_defect(spec)[0] == pytest.approx(16.0)


def test_derived_spec_file(tmp_path, s2_spec):
    derived = {
        "algebra": "su2",
        "scale": 0.125,
        "h_basis": [[0.0, 0.0, 1.0]],
        "blocks": [[[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]],
    }
    path = tmp_path / "s2.spec"
    path.write_text(json.dumps(derived), encoding="utf-8")
    spec = lc.spec_from_file(path)
    assert spec.provenance == "from-algebra"
    assert_allclose(spec.killing_ratios, s2_spec.killing_ratios, atol=1e-12)
    assert_allclose(spec.casimirs, s2_spec.casimirs, atol=1e-12)


def test_derived_spec_file_with_algebra_path(tmp_path):
    algebra_path = tmp_path / "alg.json"
    algebra_path.write_text(json.dumps(lc.algebra_to_dict(lc.build_su(2))), encoding="utf-8")
    derived = {
        "algebra": "alg.json",
        "scale": 0.125,
        "h_basis": [],
        "blocks": [[[1.0, 0.0, 0.0]], [[0.0, 1.0, 0.0]], [[0.0, 0.0, 1.0]]],
    }
    path = tmp_path / "group.spec"
    path.write_text(json.dumps(derived), encoding="utf-8")
    spec = lc.spec_from_file(path)
    assert_allclose(spec.killing_ratios, [8.0, 8.0, 8.0], atol=1e-12)


def test_raw_spec_duplicate_coupling_rejected(tmp_path):
    raw = {"s": 2, "d": [1, 1], "b": [1.0, 1.0], "c": [0.0, 0.0],
           "A": [[0, 0, 1, 1.0], [0, 0, 1, 1.0]]}
    path = tmp_path / "dup.spec"
    path.write_text(json.dumps(raw), encoding="utf-8")
    with pytest.raises(ValueError, match="duplicate"):
        lc.spec_from_file(path)


def test_spec_dict_requires_known_form():
    with pytest.raises(ValueError, match="raw .* or derived"):
        lc.spec_from_dict({"blocks": []})
