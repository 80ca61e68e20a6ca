"""Dense univariate polynomials over an exact field.

The indeterminate is written h throughout.  Coefficients are stored in
ascending order with no trailing zeros; the zero polynomial has an empty
coefficient tuple and degree NEG_INF, which compares below every integer.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .capacity import check_degree, check_search
from .errors import DivisionByZero, FieldMismatch, ZeroPolynomial, ZeroScale
from .fields import FieldSpec, Scalar

NEG_INF = float("-inf")


def _clear_denominators(values: list) -> tuple[list, int]:
    """Write a list of Fractions as integer numerators over one denominator."""
    den = 1
    for v in values:
        den = lcm(den, v.denominator)
    return [int(v * den) for v in values], den


def _int_conv(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        if av:
            for j, bv in enumerate(b):
                out[i + j] += av * bv
    return out


def _raw_add(a: list, b: list, p) -> list:
    if p is not None:
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = (out[i] + v) % p
        while out and not out[-1]:
            out.pop()
        return out
    ai, da = _clear_denominators(a)
    bi, db = _clear_denominators(b)
    den = lcm(da, db)
    fa, fb = den // da, den // db
    if len(ai) < len(bi):
        ai, bi, fa, fb = bi, ai, fb, fa
    out = [v * fa for v in ai]
    for i, v in enumerate(bi):
        out[i] += v * fb
    while out and not out[-1]:
        out.pop()
    return [Fraction(n, den) for n in out]


def _raw_mul(a: list, b: list, p) -> list:
    if not a or not b:
        return []
    if p is not None:
        out = [0] * (len(a) + len(b) - 1)
        for i, av in enumerate(a):
            if av:
                for j, bv in enumerate(b):
                    out[i + j] = (out[i + j] + av * bv) % p
        while out and not out[-1]:
            out.pop()
        return out
    ai, da = _clear_denominators(a)
    bi, db = _clear_denominators(b)
    out = _int_conv(ai, bi)
    while out and not out[-1]:
        out.pop()
    den = da * db
    return [Fraction(n, den) for n in out]


class Poly:
    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field: FieldSpec):
        cleaned = [field.scalar(c) for c in coeffs]
        while cleaned and cleaned[-1].is_zero():
            cleaned.pop()
        self.coeffs = tuple(cleaned)
        self.field = field

    @classmethod
    def _from_values(cls, values: list, field: FieldSpec) -> Poly:
        # values must already be canonical for the field, with no trailing zeros
        self = object.__new__(cls)
        self.coeffs = tuple(Scalar(v, field) for v in values)
        self.field = field
        return self

    def _values(self) -> list:
        return [c.value for c in self.coeffs]

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, field: FieldSpec) -> Poly:
        return cls((), field)

    @classmethod
    def one(cls, field: FieldSpec) -> Poly:
        return cls((1,), field)

    @classmethod
    def const(cls, value: Scalar) -> Poly:
        return cls((value,), value.field)

    @classmethod
    def h(cls, field: FieldSpec) -> Poly:
        return cls((0, 1), field)

    # -- inspection ------------------------------------------------------

    def degree(self):
        """Degree as an int, or NEG_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Scalar:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def monomials(self):
        """Yield (exponent, coefficient) for each nonzero coefficient, ascending."""
        for j, c in enumerate(self.coeffs):
            if not c.is_zero():
                yield j, c

    def single_monomial(self):
        """(coefficient, exponent) when exactly one coefficient is nonzero, else None."""
        found = None
        for j, c in self.monomials():
            if found is not None:
                return None
            found = (c, j)
        return found

    # -- ring operations ---------------------------------------------------

    def _check(self, other: Poly) -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        return Poly._from_values(
            _raw_add(self._values(), other._values(), self.field.p), self.field
        )

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.field)

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._check(other)
            if self.is_zero() or other.is_zero():
                return Poly.zero(self.field)
            check_degree(self.degree() + other.degree())
            return Poly._from_values(
                _raw_mul(self._values(), other._values(), self.field.p), self.field
            )
        if isinstance(other, (Scalar, int)):
            s = self.field.scalar(other)
            return Poly([c * s for c in self.coeffs], self.field)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Poly.one(self.field)
        for _ in range(exponent):
            result = result * self
        return result

    def __divmod__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dd = len(other.coeffs) - 1
        lead_inv = other.lead().inv()
        quo = [self.field.zero] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            factor = rem[i] * lead_inv
            if factor.is_zero():
                continue
            quo[i - dd] = factor
            for j, c in enumerate(other.coeffs):
                rem[i - dd + j] = rem[i - dd + j] - factor * c
        return Poly(quo, self.field), Poly(rem, self.field)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.field))

    # -- evaluation and substitution --------------------------------------

    def evaluate(self, point: Scalar) -> Scalar:
        point = self.field.scalar(point)
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def compose(self, inner: Poly) -> Poly:
        """self(inner(h)) by Horner accumulation."""
        self._check(inner)
        if self.degree() >= 1 and inner.degree() >= 1:
            check_degree(self.degree() * inner.degree())
        p = self.field.p
        if p is not None:
            inner_values = inner._values()
            acc: list = []
            for c in reversed(self.coeffs):
                acc = _raw_mul(acc, inner_values, p)
                value = c.value
                if acc:
                    acc[0] = (acc[0] + value) % p
                elif value:
                    acc = [value]
            while acc and not acc[-1]:
                acc.pop()
            return Poly._from_values(acc, self.field)
        # over Q: integer Horner over a running common denominator, one
        # Fraction reduction per coefficient at the very end
        inner_ints, inner_den = _clear_denominators(inner._values())
        acc_ints: list = []
        acc_den = 1
        for c in reversed(self.coeffs):
            if acc_ints:
                acc_ints = _int_conv(acc_ints, inner_ints)
                acc_den *= inner_den
            value = c.value
            if value:
                den = lcm(acc_den, value.denominator)
                if den != acc_den:
                    factor = den // acc_den
                    acc_ints = [v * factor for v in acc_ints]
                    acc_den = den
                add = int(value * acc_den)
                if acc_ints:
                    acc_ints[0] += add
                else:
                    acc_ints = [add]
        while acc_ints and not acc_ints[-1]:
            acc_ints.pop()
        return Poly._from_values(
            [Fraction(n, acc_den) for n in acc_ints], self.field
        )

    def derivative(self) -> Poly:
        return Poly(
            [self.coeffs[i] * i for i in range(1, len(self.coeffs))], self.field
        )

    # -- display -----------------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if c.is_zero():
                continue
            first = not pieces
            neg = (not first) and self.field.is_rationals and c.value < 0
            body = _mono_str(-c if neg else c, j)
            if first:
                pieces.append(body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    def __repr__(self):
        return f"Poly({self})"


def _mono_str(c: Scalar, j: int) -> str:
    if j == 0:
        return str(c)
    hpart = "h" if j == 1 else f"h^{j}"
    return hpart if c.is_one() else f"{c}*{hpart}"


def sigma_pow(f: Poly, k: int, p: Poly) -> Poly:
    """k-fold substitution of f: p(h) -> p(f(...f(h)...)).

    This realizes the k-th power of the endomorphism of F[h] that sends h
    to f(h), which is how polynomial coefficients transport across x^k and
    y^k in the algebra.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    f._check(p)
    result = p
    for _ in range(k):
        result = result.compose(f)
    return result


def affine_conjugate(f: Poly, u: Scalar, v: Scalar) -> Poly:
    """psi o f o psi^{-1} for the affine substitution psi(h) = u*h + v."""
    field = f.field
    u = field.scalar(u)
    v = field.scalar(v)
    if u.is_zero():
        raise ZeroScale("u must be nonzero")
    psi_inv = Poly([-v / u, u.inv()], field)
    return u * f.compose(psi_inv) + Poly.const(v)


def _divisors(n: int) -> list[int]:
    """Positive divisors of |n|, for n != 0."""
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return out


def _rational_roots(p: Poly) -> set[Scalar]:
    field = p.field
    roots: set[Scalar] = set()
    coeffs = [c.value for c in p.coeffs]
    low = 0
    while coeffs[low] == 0:
        low += 1
    if low:
        roots.add(field.zero)
        coeffs = coeffs[low:]
    if len(coeffs) == 1:
        return roots
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    content = 0
    for c in ints:
        content = gcd(content, c)
    ints = [c // content for c in ints]
    for u in _divisors(ints[0]):
        for v in _divisors(ints[-1]):
            if gcd(u, v) != 1:
                continue
            for num in (u, -u):
                cand = Fraction(num, v)
                acc = Fraction(0)
                for c in reversed(ints):
                    acc = acc * cand + c
                if acc == 0:
                    roots.add(field.scalar(cand))
    return roots


def poly_roots(p: Poly) -> set[Scalar]:
    """All ground-field roots of p != 0.

    Over Q: rational-root theorem on the primitive integer form.  Over F_p:
    exhaustive evaluation, guarded by the search capacity bound.
    """
    if p.is_zero():
        raise ZeroPolynomial("root finding needs a nonzero polynomial")
    field = p.field
    if field.is_rationals:
        return _rational_roots(p)
    check_search(field.p, f"root search in F_{field.p}")
    return {s for s in field.elements() if p.evaluate(s).is_zero()}
