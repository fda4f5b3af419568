import pytest
from hypothesis import settings, strategies as st

from npd.perm import Permutation

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def perms(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return Permutation(draw(st.permutations(range(n))))


@st.composite
def perm_pairs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    a = Permutation(draw(st.permutations(range(n))))
    b = Permutation(draw(st.permutations(range(n))))
    return a, b


@st.composite
def partitions_st(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    parts = []
    left = n
    while left:
        p = draw(st.integers(min_value=1, max_value=left))
        parts.append(p)
        left -= p
    return tuple(sorted(parts, reverse=True))


@pytest.fixture
def rng():
    import random
    return random.Random(1234)
