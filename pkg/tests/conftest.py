import os
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

from pbzlab import catalog  # noqa: E402

settings.register_profile("ci", max_examples=40, deadline=None)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def cat():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = catalog(name)
        return cache[name]
    return get

