import itertools

import pytest
from hypothesis import strategies as st

from stanleydepth.monomials import EqualIdeals, make_factor, minimalize


def monomials_up_to(n, cap):
    """Every exponent vector in n variables with entries at most cap."""
    return list(itertools.product(range(cap + 1), repeat=n))


@st.composite
def factors(draw, n_max=3, exp_max=3, gens_max=3, squarefree=False):
    n = draw(st.integers(1, n_max))
    top = 1 if squarefree else exp_max
    mono = st.tuples(*[st.integers(0, top)] * n)
    gi = draw(st.lists(mono.filter(any), min_size=1, max_size=gens_max))
    I = minimalize(gi, n)
    js = []
    for _ in range(draw(st.integers(0, gens_max))):
        f = draw(st.sampled_from(I.gens))
        m = draw(mono)
        js.append(tuple(min(a + b, top) for a, b in zip(f, m)))
    J = minimalize(js, n)
    try:
        return make_factor(I, J)
    except EqualIdeals:
        return make_factor(I, minimalize((), n))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def example_2_5():
    from stanleydepth import parse_factor
    return parse_factor("x1", "x1*x2^2")


@pytest.fixture
def example_2_6():
    from stanleydepth import parse_factor
    return parse_factor("x2", "x1^2*x2, x1*x2^2")


@pytest.fixture
def example_3_3():
    from stanleydepth import parse_factor
    return parse_factor("x1, x2, x3, x4, x5, x6", "x1^2, x1*x2, x1*x3, x1*x4, x1*x5, x1*x7", 7)
