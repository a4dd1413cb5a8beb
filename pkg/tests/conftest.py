import pytest

from znhg.arith import factorize_range
from znhg.hypergraph import build_intersection_hypergraph


@pytest.fixture(scope="session")
def builds5000():
    """(factorization, hypergraph) for every n in 2..5000, built once."""
    return {f.n: (f, build_intersection_hypergraph(f))
            for f in factorize_range(2, 5000)}
