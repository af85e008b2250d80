"""Exact integer Laurent polynomials in one variable t.

The coefficient map is a plain dict {exponent: coefficient} with no zero
entries.  All arithmetic is exact integer arithmetic; evaluation accepts
anything with ring operations (int, Fraction, complex).
"""

from __future__ import annotations

from fractions import Fraction


class LaurentPoly:
    """An integer Laurent polynomial, immutable once constructed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif isinstance(coeffs, int):
            coeffs = {0: coeffs}
        self.coeffs = {e: c for e, c in dict(coeffs).items() if c != 0}

    @classmethod
    def t(cls, exponent=1, coeff=1):
        return cls({exponent: coeff})

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def zero(cls):
        return cls({})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        r = dict(self.coeffs)
        for e, c in other.coeffs.items():
            r[e] = r.get(e, 0) + c
        return LaurentPoly(r)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        r = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                r[e] = r.get(e, 0) + c1 * c2
        return LaurentPoly(r)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers of a Laurent polynomial")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k):
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def reciprocal(self):
        """Substitute t -> 1/t."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def min_exp(self):
        return min(self.coeffs) if self.coeffs else 0

    def max_exp(self):
        return max(self.coeffs) if self.coeffs else 0

    def span(self):
        """max_exp - min_exp (0 for the zero polynomial)."""
        return self.max_exp() - self.min_exp() if self.coeffs else 0

    def __call__(self, value):
        """Evaluate at a ring element (int, Fraction, complex, ...)."""
        if not self.coeffs:
            return 0 * value if not isinstance(value, (int, float, complex)) else 0
        total = None
        for e, c in self.coeffs.items():
            if e >= 0:
                term = c * value**e
            else:
                if isinstance(value, int):
                    term = Fraction(c, 1) * Fraction(1, value) ** (-e)
                else:
                    term = c * value ** e
            total = term if total is None else total + term
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    def is_symmetric(self):
        """True when p(t) == p(1/t)."""
        return all(self.coeffs.get(-e, 0) == c for e, c in self.coeffs.items())

    def normalized(self):
        """The symmetric representative +/- t^k * p with value 1 at t=1.

        This is the standard normalization of an Alexander polynomial.
        Raises ValueError when no such representative exists (p(1) != +/-1
        or the coefficient vector is not palindromic).
        """
        if not self.coeffs:
            raise ValueError("cannot normalize the zero polynomial")
        lo, hi = self.min_exp(), self.max_exp()
        if (lo + hi) % 2 != 0:
            raise ValueError("coefficient span is odd; no symmetric representative")
        centered = self.shift(-(lo + hi) // 2)
        if not centered.is_symmetric():
            raise ValueError("not palindromic: %r" % (self,))
        at_one = centered(1)
        if at_one == 1:
            return centered
        if at_one == -1:
            return -centered
        raise ValueError("p(1) = %r, expected +/-1" % (at_one,))

    def serialize(self):
        """Wire format: sorted ``exp:coeff`` pairs, e.g. ``-1:-2,0:5,1:-2``."""
        if not self.coeffs:
            return "0:0"
        return ",".join("%d:%d" % (e, self.coeffs[e]) for e in sorted(self.coeffs))

    @classmethod
    def parse(cls, text):
        """Inverse of :meth:`serialize`."""
        text = text.strip()
        if not text:
            return cls.zero()
        coeffs = {}
        for chunk in text.split(","):
            e, _, c = chunk.partition(":")
            coeffs[int(e)] = coeffs.get(int(e), 0) + int(c)
        return cls(coeffs)

    def __repr__(self):
        return "LaurentPoly(%s)" % self.serialize()

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            if e == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                if e == 1:
                    term = "%st" % mag
                elif e == -1:
                    term = "%st^-1" % mag
                else:
                    term = "%st^%d" % (mag, e)
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        first_sign, first_term = parts[0]
        out = ("-" if first_sign == "-" else "") + first_term
        for sign, term in parts[1:]:
            out += " %s %s" % (sign, term)
        return out
