"""Laurent polynomials in ``q`` with integer coefficients.

``LaurentInt`` is the scalar ring for every algebra in the package.  Values
are immutable; the term map never stores a zero coefficient, so structural
equality is mathematical equality.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentInt",
    "lp_add",
    "lp_mul",
    "lp_signed_power",
    "lp_gcd",
    "ZERO",
    "ONE",
    "Q",
    "QHAT",
]

Scalar = Union["LaurentInt", int]


class LaurentInt:
    """An element of Z[q, q^-1], stored as a sparse exponent -> coefficient map."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        t: dict[int, int] = {}
        for e, c in items:
            if c:
                c = t.get(e, 0) + c
                if c:
                    t[e] = c
                else:
                    del t[e]
        self._t = dict(sorted(t.items()))
        self._hash = None

    @classmethod
    def _raw(cls, t: dict[int, int]) -> LaurentInt:
        # caller guarantees: no zero coefficients
        obj = object.__new__(cls)
        obj._t = dict(sorted(t.items()))
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, coeff: int, exp: int = 0) -> LaurentInt:
        return cls._raw({exp: coeff} if coeff else {})

    @classmethod
    def coerce(cls, x: Scalar) -> LaurentInt:
        if isinstance(x, LaurentInt):
            return x
        if isinstance(x, int):
            return cls.monomial(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentInt")

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        """Ascending exponent -> coefficient map (a copy)."""
        return dict(self._t)

    def items(self):
        return self._t.items()

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def __len__(self) -> int:
        return len(self._t)

    def min_exp(self) -> int:
        return next(iter(self._t))

    def max_exp(self) -> int:
        return next(reversed(self._t))

    def is_unit(self) -> bool:
        """True for +-q^k, the only units of Z[q, q^-1]."""
        return len(self._t) == 1 and abs(next(iter(self._t.values()))) == 1

    def constant(self) -> int | None:
        """The integer value if this is a constant, else None."""
        if not self._t:
            return 0
        if len(self._t) == 1 and 0 in self._t:
            return self._t[0]
        return None

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: Scalar) -> LaurentInt:
        if isinstance(other, int):
            other = LaurentInt.monomial(other)
        elif not isinstance(other, LaurentInt):
            return NotImplemented
        t = dict(self._t)
        for e, c in other._t.items():
            c += t.get(e, 0)
            if c:
                t[e] = c
            else:
                t.pop(e, None)
        return LaurentInt._raw(t)

    __radd__ = __add__

    def __neg__(self) -> LaurentInt:
        return LaurentInt._raw({e: -c for e, c in self._t.items()})

    def __sub__(self, other: Scalar) -> LaurentInt:
        if isinstance(other, int):
            other = LaurentInt.monomial(other)
        elif not isinstance(other, LaurentInt):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> LaurentInt:
        return LaurentInt.coerce(other) - self

    def __mul__(self, other: Scalar) -> LaurentInt:
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentInt._raw({e: c * other for e, c in self._t.items()})
        if not isinstance(other, LaurentInt):
            return NotImplemented
        t: dict[int, int] = {}
        for e1, c1 in self._t.items():
            for e2, c2 in other._t.items():
                e = e1 + e2
                t[e] = t.get(e, 0) + c1 * c2
        return LaurentInt._raw({e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def shift(self, k: int) -> LaurentInt:
        """Multiply by q^k."""
        return LaurentInt._raw({e + k: c for e, c in self._t.items()})

    def __pow__(self, k: int) -> LaurentInt:
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> LaurentInt:
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit in Z[q, q^-1]")
        (e, c), = self._t.items()
        return LaurentInt._raw({-e: c})

    def exact_div(self, other: LaurentInt) -> LaurentInt:
        """Divide exactly; raise ArithmeticError if ``other`` does not divide ``self``."""
        if not other:
            raise ZeroDivisionError("division by zero LaurentInt")
        if not self:
            return ZERO
        if len(other._t) == 1:
            (e0, c0), = other._t.items()
            t = {}
            for e, c in self._t.items():
                quo, rem = divmod(c, c0)
                if rem:
                    raise ArithmeticError(f"{other} does not divide {self}")
                t[e - e0] = quo
            return LaurentInt._raw(t)
        # long division on ordinary polynomials, leading term first
        lo_b = other.min_exp()
        den = [other._t.get(e, 0) for e in range(lo_b, other.max_exp() + 1)]
        lo_a = self.min_exp()
        num = [self._t.get(e, 0) for e in range(lo_a, self.max_exp() + 1)]
        db = len(den) - 1
        if len(num) - 1 < db:
            raise ArithmeticError(f"{other} does not divide {self}")
        lead = den[-1]
        quo = [0] * (len(num) - db)
        for i in range(len(num) - 1, db - 1, -1):
            c = num[i]
            if not c:
                continue
            qc, rem = divmod(c, lead)
            if rem:
                raise ArithmeticError(f"{other} does not divide {self}")
            quo[i - db] = qc
            for j in range(db + 1):
                num[i - db + j] -= qc * den[j]
        if any(num):
            raise ArithmeticError(f"{other} does not divide {self}")
        return LaurentInt._raw({k + lo_a - lo_b: c for k, c in enumerate(quo) if c})

    def divides(self, other: LaurentInt) -> bool:
        try:
            other.exact_div(self)
        except ArithmeticError:
            return False
        return True

    def content(self) -> int:
        return reduce(gcd, self._t.values(), 0)

    def normalize_unit(self) -> tuple[LaurentInt, LaurentInt]:
        """Split as (unit, rest) with rest having min exponent 0 and positive top coefficient."""
        if not self:
            return ONE, ZERO
        sign = 1 if self._t[self.max_exp()] > 0 else -1
        unit = LaurentInt._raw({self.min_exp(): sign})
        return unit, self.exact_div(unit)

    # -- comparison / hashing -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._t == ({0: other} if other else {})
        if not isinstance(other, LaurentInt):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._t.items()))
        return self._hash

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for e, c in sorted(self._t.items(), reverse=True):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = "q" if e == 1 else f"q^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentInt({str(self)!r})"


def lp_add(a: LaurentInt, b: LaurentInt) -> LaurentInt:
    return a + b


def lp_mul(a: LaurentInt, b: LaurentInt) -> LaurentInt:
    return a * b


def lp_signed_power(sign: int, k: int) -> LaurentInt:
    """(sign * q)^k for sign = +-1."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return LaurentInt._raw({k: sign if k % 2 else 1})


def _poly_gcd_q(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    # coefficient lists, index = degree; Euclid over Q
    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    a, b = trim(list(a)), trim(list(b))
    while b:
        r = list(a)
        while len(r) >= len(b) and r:
            f = r[-1] / b[-1]
            shift = len(r) - len(b)
            for i, c in enumerate(b):
                r[i + shift] -= f * c
            trim(r)
        a, b = b, r
    return a


def lp_gcd(a: LaurentInt, b: LaurentInt) -> LaurentInt:
    """Greatest common divisor, normalized to min exponent 0 and positive leading coefficient."""
    if not a:
        return b.normalize_unit()[1]
    if not b:
        return a.normalize_unit()[1]
    a0, b0 = a.normalize_unit()[1], b.normalize_unit()[1]
    g = _poly_gcd_q(
        [Fraction(a0._t.get(i, 0)) for i in range(a0.max_exp() + 1)],
        [Fraction(b0._t.get(i, 0)) for i in range(b0.max_exp() + 1)],
    )
    # primitive integer part of g, times the gcd of contents
    den = reduce(lambda x, y: x * y // gcd(x, y), (c.denominator for c in g), 1)
    ints = [int(c * den) for c in g]
    cont = reduce(gcd, ints, 0)
    prim = LaurentInt({i: c // cont for i, c in enumerate(ints)})
    prim = prim.normalize_unit()[1]
    return prim * gcd(a0.content(), b0.content())


ZERO = LaurentInt._raw({})
ONE = LaurentInt._raw({0: 1})
Q = LaurentInt._raw({1: 1})
QHAT = LaurentInt._raw({-1: -1, 1: 1})
