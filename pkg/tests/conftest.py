from fractions import Fraction

import pytest

from oorep.drawing import Drawing
from oorep.generators import InstanceSpec, fan, generate
from oorep.graph import build_graph
from oorep.recognize import recognize


def quad_chord_drawing():
    # a(0,0) b(1,1) c(4,0) d(-2,-1) with chord ac
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    return Drawing(((0, 0), (1, 1), (4, 0), (-2, -1)), g)


def unit_square_drawing():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    return Drawing(((0, 0), (1, 0), (1, 1), (0, 1)), g)


def k3_drawing():
    return Drawing(((0, 0), (1, 0), (0, 1)), build_graph(3, [(0, 1), (1, 2), (0, 2)]))


def k4_star_graph():
    """K4 (inner vertex 3) with a triangle glued on each outer edge."""
    return build_graph(7, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3),
                           (0, 4), (1, 4), (1, 5), (2, 5), (0, 6), (2, 6)])


@pytest.fixture
def f6():
    return recognize(fan(6))


@pytest.fixture
def quad():
    return quad_chord_drawing()


@pytest.fixture
def square():
    return unit_square_drawing()


@pytest.fixture
def k4star():
    return recognize(k4_star_graph())


def F(x):
    return Fraction(x)


__all__ = ["quad_chord_drawing", "unit_square_drawing", "k3_drawing", "k4_star_graph", "generate", "InstanceSpec"]
