from fractions import Fraction

import pytest
from hypothesis import settings

from rootableaux.roots import build_root_system

settings.register_profile("repo", max_examples=60, deadline=None)
settings.load_profile("repo")


def eps(n, j, i, plus=False):
    """e_j - e_i (or e_j + e_i) in R^n, 1-based."""
    v = [0] * n
    v[j - 1] += 1
    v[i - 1] += 1 if plus else -1
    return tuple(v)


HALF = Fraction(1, 2)


@pytest.fixture
def C2():
    return build_root_system("C", 2)
