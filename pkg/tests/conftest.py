from __future__ import annotations

import pytest

from operad_calculus import configs as C
from operad_calculus.operad import seeded_rng


@pytest.fixture
def rng(request):
    """Deterministic generator seeded from the test's node id."""
    return seeded_rng(0, request.node.nodeid)


@pytest.fixture
def a1():
    return C.end_a1()


@pytest.fixture
def a2():
    return C.end_a2()
