import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from indepset.graph import Graph
from indepset.poset import from_relations


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@st.composite
def posets(draw, max_n=8):
    """Closure of a random DAG whose edges respect a random permutation."""
    n = draw(st.integers(0, max_n))
    perm = draw(st.permutations(range(n)))
    pairs = [(perm[i], perm[j]) for i, j in combinations(range(n), 2)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_relations(n, chosen)


@pytest.fixture
def rng():
    return random.Random(20240517)
