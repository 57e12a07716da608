import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from eqflag.complexes import ColoredRelativeComplex, GroupAction
from eqflag.doubleposet import DoublePoset
from eqflag.groups import Permutation, character_table, close_group

DATA = os.path.join(os.path.dirname(__file__), "data")


def fig1_complex():
    """Square boundary coned over a center vertex, minus the outer square:
    vertices a..e, colors (1,3,1,3,2), faces = the cone part only."""
    faces = [{4}, {0, 4}, {1, 4}, {2, 4}, {3, 4},
             {0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {0, 3, 4}]
    return ColoredRelativeComplex(list("abcde"), [1, 3, 1, 3, 2], 3, faces)


def fig1_z2():
    return close_group([Permutation([2, 3, 0, 1, 4])], degree=5)


@pytest.fixture(scope="session")
def fig1():
    return fig1_complex()


@pytest.fixture(scope="session")
def fig1_action(fig1):
    return GroupAction(fig1, fig1_z2())


@pytest.fixture(scope="session")
def fig1_table(fig1_action):
    return character_table(fig1_action.group)


def fig2_dposet():
    a, b, c, d = range(4)
    return DoublePoset(list("abcd"), [(a, b), (c, d), (c, b), (a, d)],
                       [(b, c), (d, a)])


def fig3_dposet():
    a, b, c, d = range(4)
    return DoublePoset(list("abcd"), [(b, a), (c, b), (c, d), (d, a)],
                       [(b, a), (d, c), (d, a), (b, c)])
