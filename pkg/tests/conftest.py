from pathlib import Path

import pytest
from hypothesis import strategies as st

from posetdim.oracle import make_rng

FIXTURES = Path(__file__).parent / "fixtures"

seeds = st.integers(min_value=0, max_value=2**64 - 1)


@pytest.fixture
def fixture_path():
    return lambda name: str(FIXTURES / name)


def rng_for(seed):
    return make_rng(seed)
