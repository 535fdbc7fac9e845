import pytest

from gtspace import core
from gtspace.mapping import make_mapping


def mask(space, *labels):
    return space.mask_from_labels(labels)


@pytest.fixture
def abc_space():
    """{∅, {a,b}, {b,c}, X}: a strong GT that is not a topology."""
    return core.validate_gt(3, [0b000, 0b011, 0b110, 0b111], "abc")


@pytest.fixture
def xyz_space():
    """μ = {X, {x,y}, {y,z}, ∅} on {x,y,z}."""
    return core.validate_gt(3, [0b111, 0b011, 0b110, 0b000], "xyz")


@pytest.fixture
def indiscrete_ab():
    return core.validate_gt(2, [0, 0b11], "ab")


def space(n, opens, labels=None):
    return core.validate_gt(n, opens, labels)


@pytest.fixture
def four_point_quotient():
    """({1,2,3,4}, {∅,{2,3},X}) onto the indiscrete {a,b,c} by 1→a, 2→b, 3,4→c."""
    dom = core.validate_gt(4, [0, 0b0110, 0b1111])
    cod = core.validate_gt(3, [0, 0b111], "abc")
    return make_mapping(dom, cod, [0, 1, 2, 2])


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
