import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from rainbowtri import build_barrel, build_fixture, build_strip


@pytest.fixture(scope="session")
def octahedron():
    return build_fixture("octahedron")


@pytest.fixture(scope="session")
def icosahedron():
    return build_fixture("icosahedron")


@pytest.fixture(scope="session")
def k4():
    return build_fixture("k4")


@pytest.fixture(scope="session")
def stacked_k4():
    return build_fixture("stacked_k4")


@pytest.fixture(scope="session")
def barrels():
    return {k: build_barrel(k) for k in range(5, 10)}


@pytest.fixture(scope="session")
def strips():
    return {n: build_strip(n) for n in range(3, 21)}
