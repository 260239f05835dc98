"""Seeded random monomial ideals for tests and benchmarks.

Protocol: generators are drawn uniformly from the monomials of the requested
degree (stars and bars), rejecting any draw comparable under divisibility
with one already kept, until ``r`` remain. With a degree range, each draw
first picks its degree uniformly from the range.
"""
from __future__ import annotations

from math import comb

import numpy as np

from .monomials import MonomialIdeal, divides

PROTOCOL = ("uniform degree-d monomials without replacement, incomparable draws only; "
            "degree range draws the degree uniformly per generator")


class InfeasibleError(ValueError):
    pass


def count_monomials(n: int, d: int) -> int:
    return comb(n + d - 1, d)


def _uniform_monomial(rng: np.random.Generator, n: int, d: int) -> tuple[int, ...]:
    # choose d bar positions among n + d - 1 slots
    bars = np.sort(rng.choice(n + d - 1, size=n - 1, replace=False)) if n > 1 else np.zeros(0, int)
    edges = np.concatenate(([-1], bars, [n + d - 1]))
    return tuple(int(x) for x in np.diff(edges) - 1)


def random_ideal(n: int, r: int, d: int | tuple[int, int], seed=None,
                 max_draws: int | None = None) -> MonomialIdeal:
    """``r`` minimal generators of degree ``d`` (or uniform in ``d = (lo, hi)``)."""
    lo, hi = (d, d) if isinstance(d, int) else d
    if n < 1 or r < 1 or lo < 1 or hi < lo:
        raise ValueError(f"need n, r >= 1 and 1 <= degree range, got n={n} r={r} d={d}")
    if lo == hi and r > count_monomials(n, lo):
        raise InfeasibleError(f"only {count_monomials(n, lo)} monomials of degree {lo} in {n} variables, asked for {r}")
    rng = np.random.default_rng(seed)
    if max_draws is None:
        max_draws = 200 * r + 1000
    kept: list[tuple[int, ...]] = []
    for _ in range(max_draws):
        deg = lo if lo == hi else int(rng.integers(lo, hi + 1))
        m = _uniform_monomial(rng, n, deg)
        if any(divides(k, m) or divides(m, k) for k in kept):
            continue
        kept.append(m)
        if len(kept) == r:
            return MonomialIdeal(n, tuple(kept))
    raise InfeasibleError(f"could not draw {r} incomparable generators within {max_draws} draws")


def random_squarefree_ideal(n: int, r: int, seed=None, max_size: int | None = None) -> MonomialIdeal:
    """Up to ``r`` random incomparable squarefree generators (fewer if the
    antichain saturates)."""
    rng = np.random.default_rng(seed)
    max_size = max_size or n
    kept: list[tuple[int, ...]] = []
    for _ in range(50 * r + 50):
        size = int(rng.integers(1, max_size + 1))
        support = rng.choice(n, size=size, replace=False)
        m = tuple(1 if k in support else 0 for k in range(n))
        if any(divides(k, m) or divides(m, k) for k in kept):
            continue
        kept.append(m)
        if len(kept) == r:
            break
    return MonomialIdeal(n, tuple(kept))
