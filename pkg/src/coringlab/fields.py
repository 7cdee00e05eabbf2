"""Ground fields for exact computation: the rationals and prime fields.

Scalars are plain Python values. RationalField keeps integral values as
plain ints (int arithmetic is much faster than Fraction and mixes with it
exactly) and uses Fraction only for genuine non-integers; PrimeField works
on ints reduced mod p. Field objects only know how to coerce, invert,
format and parse scalars; Matrix does its own arithmetic inline for speed.
"""

from fractions import Fraction
from functools import lru_cache

from .errors import CoringlabError


def _is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface. Instantiate RationalField or PrimeField instead."""

    modulus = None

    def __eq__(self, other):
        return isinstance(other, Field) and self.modulus == other.modulus

    def __hash__(self):
        return hash(("coringlab.Field", self.modulus))

    def __repr__(self):
        return self.name


class RationalField(Field):
    name = "Q"
    zero = 0
    one = 1

    def coerce(self, x):
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction):
            return x.numerator if x.denominator == 1 else x
        raise TypeError("cannot coerce %r into Q" % (x,))

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of 0 in Q")
        f = 1 / Fraction(x)
        return f.numerator if f.denominator == 1 else f

    def format_scalar(self, x):
        # reduced p/q with positive denominator, or a bare integer
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        return "%d/%d" % (x.numerator, x.denominator)

    def parse_scalar(self, s):
        try:
            f = Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise CoringlabError("bad rational scalar %r" % (s,)) from exc
        return f.numerator if f.denominator == 1 else f


class PrimeField(Field):
    def __init__(self, p):
        if not isinstance(p, int) or not _is_prime(p):
            raise CoringlabError("PrimeField modulus must be prime, got %r" % (p,))
        self.modulus = p
        self.zero = 0
        self.one = 1 % p

    @property
    def name(self):
        return "Fp:%d" % self.modulus

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.modulus
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator % self.modulus
        raise TypeError("cannot coerce %r into %s" % (x, self.name))

    def inv(self, x):
        x = x % self.modulus
        if x == 0:
            raise ZeroDivisionError("inverse of 0 in %s" % self.name)
        return pow(x, self.modulus - 2, self.modulus)

    def format_scalar(self, x):
        return str(x % self.modulus)

    def parse_scalar(self, s):
        try:
            return int(s) % self.modulus
        except ValueError as exc:
            raise CoringlabError("bad %s scalar %r" % (self.name, s)) from exc


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p):
    return PrimeField(p)


def field_from_name(name):
    """Parse the wire names "Q" and "Fp:<p>"."""
    if name == "Q":
        return QQ
    if isinstance(name, str) and name.startswith("Fp:"):
        try:
            p = int(name[3:])
        except ValueError:
            raise CoringlabError("bad field name %r" % (name,)) from None
        return GF(p)
    raise CoringlabError("bad field name %r" % (name,))
