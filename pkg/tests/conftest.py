import numpy as np
import pytest

from semilink.digraph import Digraph


def random_digraph(n: int, density: float, seed: int) -> Digraph:
    rng = np.random.Generator(np.random.PCG64(seed))
    adj = rng.random((n, n)) < density
    np.fill_diagonal(adj, False)
    return Digraph(adj, copy=False)


def complete_digraph(n: int) -> Digraph:
    return Digraph(~np.eye(n, dtype=bool), copy=False)


@pytest.fixture(scope="session")
def reference_counterexample():
    from semilink.counterexample import build_counterexample
    return build_counterexample(42, 1764)
