import pytest

from curvegerm import branch, germ, zeta


@pytest.fixture
def cusp25():
    return branch(2, [(5, 1)], truncation=12)


@pytest.fixture
def cusp23():
    return branch(2, [(3, 1)], truncation=12)


@pytest.fixture
def genus2():
    return branch(4, [(6, 1), (7, 1)], truncation=12)


@pytest.fixture
def smooth_axis():
    return branch(1, [], truncation=24)


@pytest.fixture
def classify_corpus(cusp25, cusp23, genus2, smooth_axis):
    """Deterministic germ corpus with conclusive truncations everywhere."""
    parabola = branch(1, [(2, 1)], truncation=24)
    cubic = branch(1, [(3, 1)], truncation=24)
    line_p = branch(1, [(1, 1)], truncation=24)
    line_m = branch(1, [(1, -1)], truncation=24)
    return [
        germ([cusp25]),
        germ([cusp23]),
        germ([genus2]),
        germ([smooth_axis]),
        germ([branch(1, [], truncation=24), parabola]),
        germ([branch(1, [], truncation=24), branch(2, [(3, 1)], truncation=12)]),
        germ([line_p, line_m]),
        germ([branch(2, [(3, 1)], truncation=12), branch(2, [(3, 1), (4, 1)], truncation=12)]),
        germ([branch(3, [(4, zeta(3))], truncation=12)]),
        germ([branch(3, [(4, 1), (5, 1)], truncation=12)]),
        germ([branch(1, [], truncation=24), parabola, cubic]),
        germ([parabola, branch(1, [], truncation=24)]),
    ]
