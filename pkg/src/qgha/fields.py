"""Exact scalar arithmetic over Q and over prime fields F_p.

Scalars are immutable value objects.  Rationals are kept in lowest terms with
positive denominator (Fraction guarantees this); prime-field values are
residues in [0, p).  Mixing scalars of different fields raises FieldMismatch.
Plain Python ints coerce into either field in arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

from .capacity import check_search
from .errors import DivisionByZero, FieldMismatch, NotPrime, ZeroInput


def _is_prime(n: int) -> bool:
    """Trial division; plenty for moduli up to 10^6 and beyond."""
    if n < 2:
        return False
    for small in (2, 3):
        if n % small == 0:
            return n == small
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


class FieldSpec:
    """Ground field descriptor: Q when p is None, else F_p."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None and not _is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p

    @property
    def is_rationals(self) -> bool:
        return self.p is None

    @property
    def char(self) -> int:
        return 0 if self.p is None else self.p

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.p == other.p

    def __hash__(self):
        return hash(("FieldSpec", self.p))

    def __repr__(self):
        return "FieldSpec(Q)" if self.p is None else f"FieldSpec(F_{self.p})"

    def __str__(self):
        return "Q" if self.p is None else f"F_{self.p}"

    def scalar(self, value) -> Scalar:
        """Coerce an int, Fraction, digit string or Scalar into this field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"scalar over {value.field}, expected {self}")
            return value
        if isinstance(value, str):
            value = Fraction(value)
        if self.p is None:
            return Scalar(Fraction(value), self)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DivisionByZero(f"denominator not invertible mod {self.p}")
            num = value.numerator % self.p
            den = value.denominator % self.p
            return Scalar(num * pow(den, -1, self.p) % self.p, self)
        return Scalar(int(value) % self.p, self)

    @property
    def zero(self) -> Scalar:
        return self.scalar(0)

    @property
    def one(self) -> Scalar:
        return self.scalar(1)

    def elements(self):
        """All field elements in ascending residue order (prime fields only)."""
        if self.p is None:
            raise ValueError("cannot enumerate Q")
        check_search(self.p, f"enumeration of F_{self.p}")
        for r in range(self.p):
            yield Scalar(r, self)


def field_make(kind: str, p: int | None = None) -> FieldSpec:
    """Build a field descriptor from the wire-format tag "Q" or "Fp"."""
    if kind == "Q":
        return FieldSpec()
    if kind == "Fp":
        if p is None:
            raise ValueError("prime field requires p")
        return FieldSpec(p)
    raise ValueError(f"unknown field kind {kind!r}")


class Scalar:
    """Immutable exact element of Q or F_p."""

    __slots__ = ("value", "field")

    def __init__(self, value, field: FieldSpec):
        self.value = value
        self.field = field

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, int):
            return self.field.scalar(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.field.p is None:
            return Scalar(self.value + other.value, self.field)
        return Scalar((self.value + other.value) % self.field.p, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        if self.field.p is None:
            return Scalar(-self.value, self.field)
        return Scalar(-self.value % self.field.p, self.field)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.field.p is None:
            return Scalar(self.value * other.value, self.field)
        return Scalar(self.value * other.value % self.field.p, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inv() ** (-exponent)
        if self.field.p is None:
            return Scalar(self.value**exponent, self.field)
        return Scalar(pow(self.value, exponent, self.field.p), self.field)

    def inv(self) -> Scalar:
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if self.field.p is None:
            return Scalar(1 / self.value, self.field)
        return Scalar(pow(self.value, -1, self.field.p), self.field)

    def is_zero(self) -> bool:
        return self.value == 0

    def is_one(self) -> bool:
        return self.value == 1

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.value, self.field))

    def sort_key(self):
        """Total order used for deterministic candidate enumeration."""
        return self.value

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"Scalar({self.value!r}, {self.field})"


def root_of_unity_order(q: Scalar) -> int | None:
    """Smallest l >= 1 with q^l = 1, or None when no power returns to 1.

    Over Q only 1 and -1 qualify; over F_p the order always exists and
    divides p - 1.
    """
    if q.is_zero():
        raise ZeroInput("q must be nonzero")
    field = q.field
    if field.is_rationals:
        if q.is_one():
            return 1
        if (-q).is_one():
            return 2
        return None
    check_search(field.p, f"order computation in F_{field.p}")
    acc = q
    order = 1
    while not acc.is_one():
        acc = acc * q
        order += 1
    return order


def _int_nth_root(n: int, m: int) -> tuple[int, bool]:
    """floor(n**(1/m)) and exactness for n >= 0, m >= 1, by binary search."""
    if n in (0, 1) or m == 1:
        return n, True
    lo, hi = 1, 1 << (n.bit_length() // m + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**m <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo, lo**m == n


def nth_roots(m: int, c: Scalar) -> set[Scalar]:
    """All ground-field solutions u of u^m = c, for c != 0.

    Over Q this is exact integer m-th root extraction on numerator and
    denominator (for even m both signs are returned when a root exists);
    over F_p the solutions are found by exhaustive evaluation.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if c.is_zero():
        raise ZeroInput("c must be nonzero")
    field = c.field
    if field.is_rationals:
        num, den = c.value.numerator, c.value.denominator
        den_root, exact = _int_nth_root(den, m)
        if not exact:
            return set()
        if m % 2 == 1:
            num_root, exact = _int_nth_root(abs(num), m)
            if not exact:
                return set()
            if num < 0:
                num_root = -num_root
            return {field.scalar(Fraction(num_root, den_root))}
        if num < 0:
            return set()
        num_root, exact = _int_nth_root(num, m)
        if not exact:
            return set()
        root = Fraction(num_root, den_root)
        return {field.scalar(root), field.scalar(-root)}
    check_search(field.p, f"root search in F_{field.p}")
    p = field.p
    return {Scalar(u, field) for u in range(1, p) if pow(u, m, p) == c.value}
