"""Exact scalar rings: arbitrary-precision integers, rationals, prime fields.

Every computation in this package is exact; there is no floating point
anywhere.  Scalars are plain Python objects (``int``, ``Fraction``, or an
int reduced mod p) and a ring object supplies the arithmetic, so hot loops
can bind the methods locally.
"""

from __future__ import annotations

from fractions import Fraction


class IntegerRing:
    """The ring of integers with arbitrary precision."""

    name = "Z"
    is_field = False
    char = 0
    zero = 0
    one = 1

    def of(self, n):
        return int(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def inv(self, a):
        raise ArithmeticError("Z is not a field")

    def div(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"{a} not divisible by {b} in Z")
        return q

    def to_str(self, a):
        return str(a)

    def __repr__(self):
        return "Z"


class RationalField:
    name = "Q"
    is_field = True
    char = 0
    zero = Fraction(0)
    one = Fraction(1)

    def of(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def inv(self, a):
        return 1 / a

    def div(self, a, b):
        return a / b

    def to_str(self, a):
        return str(a)

    def __repr__(self):
        return "Q"


class PrimeField:
    """F_p with elements stored as ints in ``range(p)``."""

    is_field = True

    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"F{p}"
        self.char = p
        self.zero = 0
        self.one = 1 % p

    def of(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def eq(self, a, b):
        return (a - b) % self.p == 0

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in F_{self.p}")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def to_str(self, a):
        return str(a % self.p)

    def __repr__(self):
        return self.name


ZZ = IntegerRing()
QQ = RationalField()

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]


def ring_by_name(spec: str):
    """Parse a ring selector: ``Z``, ``Q``, or ``Fp:5``.

    >>> ring_by_name("Fp:3").name
    'F3'
    """
    if spec == "Z":
        return ZZ
    if spec == "Q":
        return QQ
    if spec.startswith("Fp:"):
        return GF(int(spec[3:]))
    raise ValueError(f"unknown ring {spec!r} (expected Z, Q, or Fp:p)")
