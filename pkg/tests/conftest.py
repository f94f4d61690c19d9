from __future__ import annotations

import pytest

from clawcycles import enumerate_cubic_graphs
from clawcycles.fixtures import standard_fixtures


@pytest.fixture(scope="session")
def fixtures():
    return standard_fixtures()


@pytest.fixture(scope="session")
def cubic_by_n():
    """Connected cubic graphs for n = 4..14, enumerated once per session."""
    return {n: list(enumerate_cubic_graphs(n, connected_only=True)) for n in range(4, 15, 2)}
