import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from morsebetti.kernels import available_backends
from morsebetti.monomials import MonomialIdeal
from morsebetti.random_ideals import InfeasibleError, random_ideal

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES = []


def record_criterion(number, ok, detail):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(params=available_backends())
def backend(request):
    return request.param


@st.composite
def ideals(draw, max_n=5, max_r=6, max_exp=3):
    n = draw(st.integers(1, max_n))
    vec = st.lists(st.integers(0, max_exp), min_size=n, max_size=n).filter(lambda v: sum(v) > 0)
    gens = draw(st.lists(vec, min_size=1, max_size=max_r))
    return MonomialIdeal.from_generators(n, gens)


def mixed_corpus(count, seed, n_range=(2, 6), r_range=(1, 7), degrees=(1, 4)):
    """Seeded random ideals with generator degrees drawn per generator."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(*n_range)
        r = rng.randint(*r_range)
        try:
            out.append(random_ideal(n, r, degrees, seed=rng.randrange(1 << 30), max_draws=400))
        except InfeasibleError:
            continue
    return out


def ideal(n, *gens):
    return MonomialIdeal(n, tuple(tuple(g) for g in gens))
