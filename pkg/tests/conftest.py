import functools

import pytest
from hypothesis import settings

from lrsym.verify import lr_instances

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@functools.lru_cache(maxsize=None)
def small_lr(max_cells: int = 8):
    return tuple(lr_instances(max_cells))


@pytest.fixture(scope="session")
def lr8():
    return small_lr(8)
