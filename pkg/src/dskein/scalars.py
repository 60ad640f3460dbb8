"""Exact arithmetic in the field Q(q) of rational functions in q.

Every coefficient in the package is a Scalar: a reduced fraction of
Laurent polynomials in q with rational coefficients.  The canonical form
(denominator an ordinary polynomial with positive constant term and
content 1, no common factor with the numerator) makes equality a plain
structural comparison.

The polynomial kernel is compiled (Cython) when available and falls back
to the pure-Python implementation otherwise; see benchmarks/bench_scalars.py
for a comparison of the two.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

if os.environ.get("DSKEIN_PURE_PYTHON"):
    from . import _poly_py as _k
else:
    try:
        from . import _poly_kernel as _k  # type: ignore[attr-defined]
    except ImportError:
        from . import _poly_py as _k

KERNEL = _k.KERNEL

ExponentOverflow = _k.ExponentOverflow


class ScalarDivisionError(ZeroDivisionError):
    """Division by the zero Scalar."""


def _freeze(d):
    return tuple(sorted(d.items()))


class LaurentPoly:
    """Laurent polynomial in q over Q: {exponent: nonzero Fraction}."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if isinstance(v, tuple):
                    n, d = v
                else:
                    f = Fraction(v)
                    n, d = f.numerator, f.denominator
                if n:
                    g = gcd(abs(n), d)
                    c[int(e)] = (n // g, d // g)
        self.coeffs = c
        self._hash = None

    @classmethod
    def _raw(cls, coeffs):
        p = cls.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({0: (1, 1)})

    @classmethod
    def q_power(cls, k):
        return cls._raw({int(k): (1, 1)})

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        return LaurentPoly._raw(_k.lp_add(self.coeffs, other.coeffs))

    def __sub__(self, other):
        return LaurentPoly._raw(_k.lp_sub(self.coeffs, other.coeffs))

    def __neg__(self):
        return LaurentPoly._raw(_k.lp_neg(self.coeffs))

    def __mul__(self, other):
        return LaurentPoly._raw(_k.lp_mul(self.coeffs, other.coeffs))

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(_freeze(self.coeffs))
        return self._hash

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            n, d = self.coeffs[e]
            c = f"{n}" if d == 1 else f"{n}/{d}"
            if e == 0:
                parts.append(c)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                parts.append(mono if (n, d) == (1, 1) else f"{c}*{mono}")
        return " + ".join(parts)


class Scalar:
    """Element of Q(q) in canonical reduced form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        if isinstance(num, LaurentPoly):
            nd = num.coeffs
        else:
            nd = LaurentPoly(num).coeffs if isinstance(num, dict) else None
            if nd is None:
                f = Fraction(num)
                nd = {0: (f.numerator, f.denominator)} if f else {}
        if den is None:
            dd = {0: (1, 1)}
        elif isinstance(den, LaurentPoly):
            dd = den.coeffs
        else:
            dd = LaurentPoly(den).coeffs if isinstance(den, dict) else None
            if dd is None:
                f = Fraction(den)
                dd = {0: (f.numerator, f.denominator)} if f else {}
        if not dd:
            raise ScalarDivisionError("zero denominator")
        n2, d2 = _k.frac_normalize(nd, dd)
        self.num = n2
        self.den = d2
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        s = cls.__new__(cls)
        s.num = num
        s.den = den
        s._hash = None
        return s

    @classmethod
    def zero(cls):
        return cls._raw({}, {0: (1, 1)})

    @classmethod
    def one(cls):
        return cls._raw({0: (1, 1)}, {0: (1, 1)})

    @classmethod
    def from_int(cls, n):
        return cls._raw({0: (n, 1)} if n else {}, {0: (1, 1)})

    @classmethod
    def q_power(cls, k):
        return cls._raw({int(k): (1, 1)}, {0: (1, 1)})

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == {0: (1, 1)} and self.den == {0: (1, 1)}

    def __add__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.den == other.den:
            return Scalar._raw(*_k.frac_normalize(_k.lp_add(self.num, other.num), self.den))
        n = _k.lp_add(_k.lp_mul(self.num, other.den), _k.lp_mul(other.num, self.den))
        return Scalar._raw(*_k.frac_normalize(n, _k.lp_mul(self.den, other.den)))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Scalar._raw(_k.lp_neg(self.num), self.den)

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        if not self.num or not other.num:
            return Scalar.zero()
        n = _k.lp_mul(self.num, other.num)
        d = _k.lp_mul(self.den, other.den)
        return Scalar._raw(*_k.frac_normalize(n, d))

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        if not other.num:
            raise ScalarDivisionError("division by zero Scalar")
        n = _k.lp_mul(self.num, other.den)
        d = _k.lp_mul(self.den, other.num)
        return Scalar._raw(*_k.frac_normalize(n, d))

    def inv(self):
        if not self.num:
            raise ScalarDivisionError("inverse of zero Scalar")
        return Scalar._raw(*_k.frac_normalize(self.den, self.num))

    def __pow__(self, n):
        if n == 0:
            return Scalar.one()
        base = self if n > 0 else self.inv()
        out = base
        for _ in range(abs(n) - 1):
            out = out * base
        return out

    def subs_neg_q(self):
        """The image under q -> -q (sign on odd exponents)."""
        f = lambda d: {e: ((-n, de) if e % 2 else (n, de)) for e, (n, de) in d.items()}
        return Scalar._raw(*_k.frac_normalize(f(self.num), f(self.den)))

    def __eq__(self, other):
        return isinstance(other, Scalar) and self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((_freeze(self.num), _freeze(self.den)))
        return self._hash

    def __repr__(self):
        n = repr(LaurentPoly._raw(self.num))
        if self.den == {0: (1, 1)}:
            return n
        return f"({n}) / ({LaurentPoly._raw(self.den)!r})"

    def to_json(self):
        enc = lambda d: [[e, f"{d[e][0]}/{d[e][1]}"] for e in sorted(d)]
        return {"num": enc(self.num), "den": enc(self.den)}

    @classmethod
    def from_json(cls, obj):
        dec = lambda pairs: {int(e): Fraction(s) for e, s in pairs}
        return cls(dec(obj["num"]), dec(obj["den"]))


ZERO = Scalar.zero()
ONE = Scalar.one()
Q = Scalar.q_power(1)
QINV = Scalar.q_power(-1)


def balanced_q_int(d: int) -> Scalar:
    """(q^d - q^-d)/(q - q^-1), computed as an explicit Laurent polynomial."""
    if d == 0:
        return Scalar.zero()
    s = 1 if d > 0 else -1
    n = abs(d)
    return Scalar._raw({s * (n - 1 - 2 * i): (s, 1) for i in range(n)}, {0: (1, 1)})


@dataclass(frozen=True)
class ParamSet:
    """Parameters of the skein categories at t = q^d."""

    d: int
    t: Scalar
    delta: Scalar

    def __post_init__(self):
        assert self.t == Scalar.q_power(self.d)
        qdiff = Q - QINV
        assert self.delta * qdiff == self.t - self.t.inv()


def params_for(d: int) -> ParamSet:
    """Parameter set with t = q^d and delta the balanced q-integer of d."""
    return ParamSet(d=d, t=Scalar.q_power(d), delta=balanced_q_int(d))
