"""Exact scalars: arbitrary-precision rationals (default) and GF(p).

All linear algebra is exact; the working field is chosen once per run by
its characteristic (0 or a prime p).
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as _rat
except ImportError:  # pragma: no cover
    from fractions import Fraction as _rat


class RationalField:
    characteristic = 0

    def __call__(self, a):
        return _rat(a)

    @property
    def zero(self):
        return _rat(0)

    @property
    def one(self):
        return _rat(1)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        return 1 / a

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p); elements are ints in 0..p-1."""

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def __call__(self, a):
        return int(a) % self.characteristic

    def add(self, a, b):
        return (a + b) % self.characteristic

    def sub(self, a, b):
        return (a - b) % self.characteristic

    def mul(self, a, b):
        return (a * b) % self.characteristic

    def neg(self, a):
        return -a % self.characteristic

    def inv(self, a):
        return pow(a, -1, self.characteristic)

    def __repr__(self):
        return f"GF({self.characteristic})"


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


_QQ = RationalField()


def field_of(characteristic):
    if characteristic == 0:
        return _QQ
    return PrimeField(characteristic)
