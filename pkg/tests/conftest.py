import random

import pytest
from hypothesis import strategies as st

from zxcf.pauli import PauliString
from zxcf.sampling import random_tableau


@pytest.fixture
def rng():
    return random.Random(1234)


@st.composite
def paulis(draw, n=None, hermitian=False):
    if n is None:
        n = draw(st.integers(1, 6))
    x = draw(st.integers(0, (1 << n) - 1))
    z = draw(st.integers(0, (1 << n) - 1))
    p = PauliString(n, x, z, 0)
    iota = draw(st.sampled_from((0, 2)) if hermitian else st.integers(0, 3))
    # shift so that the Hermitian ones are exactly the even-sign ones
    return PauliString(n, x, z, (iota + p.ny) & 3 if hermitian else iota)


@st.composite
def tableaus(draw, max_n=6, min_n=1):
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(0, n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_tableau(n, k, random.Random(seed))
