import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "normgap",
    deadline=None,  # first array call may trigger JIT compilation
    max_examples=80,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("normgap")


@pytest.fixture(scope="session")
def warm():
    """Hot kernels compiled before any timing-sensitive test runs."""
    from normgap import _kernels

    _kernels.warm_up()
    return _kernels.BACKEND


@pytest.fixture(scope="session")
def consts(warm):
    from normgap import constants

    return constants()
