"""Exact coefficient fields: the rationals and prime fields GF(p)."""
from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    pass


def is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin, exact for p < 3.3e24."""
    if p < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class ModP:
    """Residue class modulo a prime, kept in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.p = p
        self.value = value % p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise FieldError(f"mixed prime fields GF({self.p}) and GF({other.p})")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        raise FieldError(f"cannot combine GF({self.p}) element with {type(other).__name__}")

    def __add__(self, other):
        return ModP(self.value + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return ModP(self.value - self._coerce(other), self.p)

    def __rsub__(self, other):
        return ModP(self._coerce(other) - self.value, self.p)

    def __mul__(self, other):
        return ModP(self.value * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other) % self.p
        if b == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return ModP(self.value * pow(b, -1, self.p), self.p)

    def __rtruediv__(self, other):
        return ModP(self._coerce(other), self.p) / self

    def __neg__(self):
        return ModP(-self.value, self.p)

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"ModP({self.value}, {self.p})"


class RationalField:
    characteristic = 0
    name = "rational"

    def __call__(self, x) -> Fraction:
        if isinstance(x, ModP):
            raise FieldError("mixed field kinds: GF(p) element passed to the rationals")
        return Fraction(x)

    def contains(self, x) -> bool:
        return isinstance(x, Fraction)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "RationalField()"


class PrimeField:
    def __init__(self, p: int):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.characteristic = p
        self.name = f"prime:{p}"

    def __call__(self, x) -> ModP:
        if isinstance(x, ModP):
            if x.p != self.characteristic:
                raise FieldError(f"mixed prime fields GF({self.characteristic}) and GF({x.p})")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.characteristic == 0:
                raise FieldError(f"{x} has no image in GF({self.characteristic})")
            return ModP(x.numerator, self.characteristic) / x.denominator
        return ModP(int(x), self.characteristic)

    def contains(self, x) -> bool:
        return isinstance(x, ModP) and x.p == self.characteristic

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("GF", self.characteristic))

    def __repr__(self):
        return f"PrimeField({self.characteristic})"


Field = RationalField | PrimeField

QQ = RationalField()


def parse_field(text: str) -> Field:
    """``rational`` (alias ``QQ``, ``0``) or ``prime:<p>``."""
    t = text.strip().lower()
    if t in ("rational", "qq", "q", "0"):
        return QQ
    if t.startswith("prime:"):
        try:
            p = int(t.split(":", 1)[1])
        except ValueError:
            raise FieldError(f"bad prime in {text!r}") from None
        return PrimeField(p)
    raise FieldError(f"unknown field {text!r}; use 'rational' or 'prime:<p>'")


def is_zero(x) -> bool:
    return not x


def is_unit(x) -> bool:
    return bool(x)
