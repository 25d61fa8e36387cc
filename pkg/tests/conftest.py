import itertools

import pytest

from pretzelhfk import (chain_summary, euler_characteristic, fox_alexander,
                        reduce_two_lines, wirtinger)
from pretzelhfk.pretzel import FamilyTag, PretzelClass


def thm1_class(a, b, c):
    return PretzelClass(FamilyTag.THM1, a, b, c)


def thm1_grid(top):
    """All (a, b, c) with 1 <= a <= b <= c <= top."""
    return [(a, b, c)
            for a in range(1, top + 1)
            for b in range(a, top + 1)
            for c in range(b, top + 1)]


def cube_grid(top):
    return list(itertools.product(range(1, top + 1), repeat=3))


class GridData:
    """Per-knot computations, memoized across the whole session."""

    def __init__(self):
        self._summaries = {}
        self._fox = {}

    def summary(self, a, b, c, variant):
        key = (a, b, c, variant)
        if key not in self._summaries:
            self._summaries[key] = chain_summary(thm1_class(a, b, c), variant)
        return self._summaries[key]

    def table(self, a, b, c, variant="b"):
        return reduce_two_lines(self.summary(a, b, c, variant))

    def statesum_alex(self, a, b, c, variant="b"):
        return euler_characteristic(self.summary(a, b, c, variant))

    def fox_alex(self, triple):
        if triple not in self._fox:
            self._fox[triple] = fox_alexander(wirtinger(triple))
        return self._fox[triple]

    def thm1_fox(self, a, b, c):
        return self.fox_alex((-2 * a, 2 * b + 1, 2 * c + 1))

    def thm2_fox(self, a, b, c):
        return self.fox_alex((2 * a, -(2 * b + 1), 2 * c + 1))


@pytest.fixture(scope="session")
def grid():
    return GridData()
