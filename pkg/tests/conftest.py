from pathlib import Path

import pytest

from spiderkit import Graph, read_graph
from spiderkit.gen import complete_graph, cycle_graph, path_graph

DATA = Path(__file__).parent / "data"

# vertex names of the 10-vertex example spider (body 0,1,2; legs x,y,z; head path a-b-c-d) -> ids
NAMES = {name: i for i, name in enumerate("012xyzabcd")}


def spider10_graph() -> Graph:
    return read_graph(DATA / "spider10.txt")


def ids(names: str) -> tuple[int, ...]:
    return tuple(sorted(NAMES[c] for c in names))


@pytest.fixture
def spider10():
    return spider10_graph()


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def data_dir():
    return DATA
