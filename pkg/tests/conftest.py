import numpy as np
import pytest

import liecurv as lc

# Canonical reference scales: the round normalization for su2, the negative
# Killing form itself everywhere else.
CANONICAL_SCALE = {"su2": 0.125}


def canonical_scale(name: str) -> float:
    return CANONICAL_SCALE.get(name, 1.0)


def canonical_model(name: str) -> lc.OrthonormalModel:
    algebra = lc.resolve_algebra(name)
    return lc.binormalize(algebra, lc.killing_metric(algebra, canonical_scale(name)))


@pytest.fixture(scope="session")
def su2():
    return lc.build_su(2)


@pytest.fixture(scope="session")
def su2_model(su2):
    return lc.binormalize(su2, lc.killing_metric(su2, 0.125))


@pytest.fixture(scope="session")
def group_models():
    return {name: canonical_model(name) for name in ("su2", "su3", "so4", "so5")}


@pytest.fixture(scope="session")
def group_specs(group_models):
    """Trivial-subalgebra specs with singleton blocks, one per test algebra."""
    out = {}
    for name in ("su2", "su3", "so4", "so5"):
        algebra = lc.resolve_algebra(name)
        blocks = tuple([np.eye(algebra.dim)[i]] for i in range(algebra.dim))
        embedding = lc.SubalgebraEmbedding(parent=algebra, h_basis=[], blocks=blocks)
        out[name] = lc.build_spec(embedding, lc.killing_metric(algebra, canonical_scale(name)), name=name)
    return out


@pytest.fixture(scope="session")
def s2_spec(su2):
    embedding = lc.SubalgebraEmbedding(
        parent=su2, h_basis=[[0.0, 0.0, 1.0]],
        blocks=([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]],),
    )
    return lc.build_spec(embedding, lc.killing_metric(su2, 0.125), name="s2")
