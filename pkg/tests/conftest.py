from __future__ import annotations

import numpy as np
import pytest

from orliczlat.young import catalog, pair_from_spec


@pytest.fixture(scope="session")
def catalog_pairs():
    return catalog()


@pytest.fixture(scope="session")
def power_pair_2():
    return pair_from_spec({"family": "power", "p": 2.0})


@pytest.fixture(scope="session")
def power_pair_15():
    return pair_from_spec({"family": "power", "p": 1.5})


@pytest.fixture(scope="session")
def entropy_pair():
    return pair_from_spec({"family": "entropy"})


def seeded_rng(*key: int) -> np.random.Generator:
    return np.random.default_rng((20260808,) + key)
