"""Exact monomial arithmetic and monomial ideals.

A monomial is a tuple of non-negative exponents, one per variable.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

Monomial = tuple[int, ...]

MAX_EXPONENT = 1 << 16

_TERM = re.compile(r"x(\d+)(?:\^(-?\d+))?")


class MonomialError(ValueError):
    pass


def unit(n: int) -> Monomial:
    return (0,) * n


def degree(m: Monomial) -> int:
    return sum(m)


def _check_lengths(a: Monomial, b: Monomial) -> None:
    if len(a) != len(b):
        raise MonomialError(f"length mismatch: {len(a)} vs {len(b)}")


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_lengths(a, b)
    return tuple(x if x >= y else y for x, y in zip(a, b))


def lcm_all(ms: Iterable[Monomial], n: int) -> Monomial:
    out = [0] * n
    for m in ms:
        if len(m) != n:
            raise MonomialError(f"length mismatch: {len(m)} vs {n}")
        for k, e in enumerate(m):
            if e > out[k]:
                out[k] = e
    return tuple(out)


def divides(a: Monomial, b: Monomial) -> bool:
    _check_lengths(a, b)
    return all(x <= y for x, y in zip(a, b))


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """Return a / b; b must divide a."""
    if not divides(b, a):
        raise MonomialError(f"{format_monomial(b)} does not divide {format_monomial(a)}")
    return tuple(x - y for x, y in zip(a, b))


def parse_monomial(text: str, n: int) -> Monomial:
    """Parse ``x1^2*x3`` style text into an exponent vector of length n.

    The literal ``1`` is the unit monomial. Repeated factors add up.
    """
    if n < 1:
        raise MonomialError("number of variables must be positive")
    s = text.strip().replace(" ", "")
    if s == "1":
        return unit(n)
    if not s:
        raise MonomialError("empty monomial")
    exps = [0] * n
    for token in s.split("*"):
        match = _TERM.fullmatch(token)
        if match is None:
            raise MonomialError(f"malformed token {token!r} in {text!r}")
        idx = int(match.group(1))
        e = 1 if match.group(2) is None else int(match.group(2))
        if not 1 <= idx <= n:
            raise MonomialError(f"variable index {idx} out of range 1..{n}")
        if e < 1:
            raise MonomialError(f"exponent must be positive, got {e}")
        exps[idx - 1] += e
    return _validated(tuple(exps))


def format_monomial(m: Monomial) -> str:
    parts = []
    for k, e in enumerate(m):
        if e == 1:
            parts.append(f"x{k + 1}")
        elif e > 1:
            parts.append(f"x{k + 1}^{e}")
    return "*".join(parts) if parts else "1"


def _validated(m: Sequence[int]) -> Monomial:
    m = tuple(int(e) for e in m)
    for e in m:
        if e < 0:
            raise MonomialError(f"negative exponent in {m}")
        if e > MAX_EXPONENT:
            raise MonomialError(f"exponent {e} exceeds {MAX_EXPONENT}")
    return m


def minimalize_generators(gens: Sequence[Monomial]) -> list[Monomial]:
    """Drop duplicates and generators divisible by another one.

    Survivors keep their input order. A unit generator is rejected since the
    ideal would be the whole ring.
    """
    gens = [tuple(g) for g in gens]
    for g in gens:
        if degree(g) == 0:
            raise MonomialError("unit generator: the ideal is the whole ring")
    out: list[Monomial] = []
    seen = set()
    for k, g in enumerate(gens):
        if g in seen:
            continue
        seen.add(g)
        if any(h != g and divides(h, g) for h in gens):
            continue
        out.append(g)
    return out


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in ``n`` variables with an ordered minimal generating set.

    Build through :meth:`from_generators` to get minimalization; the plain
    constructor validates but does not repair.
    """

    n: int
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        if self.n < 1:
            raise MonomialError("number of variables must be positive")
        gens = tuple(_validated(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        for g in gens:
            if len(g) != self.n:
                raise MonomialError(f"generator {g} has length {len(g)}, expected {self.n}")
            if degree(g) == 0:
                raise MonomialError("unit generator: the ideal is the whole ring")
        for a in gens:
            for b in gens:
                if a is not b and divides(a, b):
                    raise MonomialError(
                        f"non-minimal generators: {format_monomial(a)} divides {format_monomial(b)}"
                    )

    @classmethod
    def from_generators(cls, n: int, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        gens = [_validated(g) for g in gens]
        return cls(n, tuple(minimalize_generators(gens)))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "MonomialIdeal":
        """Parse one monomial per line; ``#`` comments and blank lines are skipped.

        With ``n`` omitted the largest variable index in the text is used.
        """
        lines = [ln.strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("#")]
        if n is None:
            idx = [int(k) for ln in lines for k in re.findall(r"x(\d+)", ln)]
            n = max(idx, default=1)
        return cls.from_generators(n, [parse_monomial(ln, n) for ln in lines])

    @classmethod
    def from_json(cls, text: str | dict) -> "MonomialIdeal":
        data = json.loads(text) if isinstance(text, str) else text
        try:
            n = int(data["n"])
            gens = data["generators"]
        except (KeyError, TypeError) as exc:
            raise MonomialError("expected JSON object with 'n' and 'generators'") from exc
        return cls.from_generators(n, gens)

    def to_json(self) -> dict:
        return {"n": self.n, "generators": [list(g) for g in self.generators]}

    @property
    def r(self) -> int:
        return len(self.generators)

    @property
    def max_degree(self) -> int:
        return max((degree(g) for g in self.generators), default=0)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.generators for e in g)

    def permuted(self, order: Sequence[int]) -> "MonomialIdeal":
        return MonomialIdeal(self.n, tuple(self.generators[k] for k in order))

    def __str__(self):
        return "(" + ", ".join(format_monomial(g) for g in self.generators) + ")"


def polarize(ideal: MonomialIdeal) -> tuple[MonomialIdeal, tuple[int, ...]]:
    """Standard polarization.

    Variable ``x_i`` with maximal exponent ``e_i`` becomes ``e_i`` new
    variables; ``x_i^e`` maps to the product of the first ``e`` of them.
    Returns the squarefree ideal and, for each new variable, the 0-based
    index of the original variable it came from. Variables that never occur
    keep a single slot so the map stays surjective.
    """
    n = ideal.n
    widths = [max(1, max((g[k] for g in ideal.generators), default=0)) for k in range(n)]
    offsets = [0] * n
    for k in range(1, n):
        offsets[k] = offsets[k - 1] + widths[k - 1]
    total = sum(widths)
    back = tuple(k for k in range(n) for _ in range(widths[k]))
    gens = []
    for g in ideal.generators:
        v = [0] * total
        for k, e in enumerate(g):
            for t in range(e):
                v[offsets[k] + t] = 1
        gens.append(tuple(v))
    return MonomialIdeal(total, tuple(gens)), back


def depolarize(multidegree: Sequence[int], back: Sequence[int], n: int) -> Monomial:
    """Sum polarized exponents per original variable."""
    out = [0] * n
    for e, k in zip(multidegree, back):
        out[k] += e
    return tuple(out)
