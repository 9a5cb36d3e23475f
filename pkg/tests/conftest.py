import os

import pytest

from cyclopair.bernoulli import irregular_sweep
from cyclopair.cache import IrregularCache

SWEEP_JOBS = min(4, os.cpu_count() or 1)


@pytest.fixture(scope="session")
def sweep_cache_dir(tmp_path_factory):
    return tmp_path_factory.mktemp("irregular-cache")


@pytest.fixture(scope="session")
def sweep_25000(sweep_cache_dir):
    """Irregular sets for every odd prime 7 <= p < 25,000 (the heavy fixture)."""
    cache = IrregularCache(sweep_cache_dir)
    return list(irregular_sweep(25_000, jobs=SWEEP_JOBS, cache=cache))


@pytest.fixture(scope="session")
def sweep_1000(sweep_25000):
    return [irr for irr in sweep_25000 if irr.p < 1000]
