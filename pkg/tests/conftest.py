import pathlib

import pytest

from symfa import interval_binding, parse_sfa, propositional_binding

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture
def two_state():
    """The committed two-state fixture: neat, normalized, det, complete."""
    return parse_sfa((DATA / "two_state.sfa").read_text())


@pytest.fixture
def interval():
    return interval_binding()


@pytest.fixture
def props3():
    return propositional_binding(["p1", "p2", "p3"])
