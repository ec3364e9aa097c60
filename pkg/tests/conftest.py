import sys
from pathlib import Path

import numpy as np
from hypothesis import settings, strategies as st

from supercliff import Multivector

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

coefficients = st.complex_numbers(
    max_magnitude=4.0, allow_nan=False, allow_infinity=False
)


def multivectors(dim: int, max_blades: int = 6) -> st.SearchStrategy[Multivector]:
    masks = st.integers(min_value=0, max_value=(1 << dim) - 1)
    return st.dictionaries(masks, coefficients, max_size=max_blades).map(
        lambda coeffs: Multivector(dim, coeffs)
    )


@st.composite
def multivector_pairs(draw, max_dim: int = 5):
    dim = draw(st.integers(1, max_dim))
    return draw(multivectors(dim)), draw(multivectors(dim))


@st.composite
def multivector_triples(draw, max_dim: int = 5):
    dim = draw(st.integers(1, max_dim))
    strat = multivectors(dim)
    return draw(strat), draw(strat), draw(strat)


@st.composite
def real_vectors(draw, max_dim: int = 6):
    dim = draw(st.integers(1, max_dim))
    comps = st.floats(-4, 4, allow_nan=False)
    return np.array(draw(st.lists(comps, min_size=dim, max_size=dim)))
