"""Structural analysis of a presentation.

Domain and Noetherian predicates, the ascending ideal-chain witness for
non-Noetherianity, the sigma-q linear equation and the center, and the
growth-dimension experiment for the generating subspace span{1, x, y, h}.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .algebra import AlgebraParams, Element
from .capacity import check_search
from .errors import NoFixedPointInField, PreconditionViolated, WrongDegree
from .fields import Scalar, root_of_unity_order
from .poly import Poly, poly_roots


class DomainReport(NamedTuple):
    verdict: bool
    reason: str

    def __bool__(self) -> bool:
        return self.verdict


def is_domain(algebra: AlgebraParams) -> DomainReport:
    """The algebra is a domain exactly when q != 0 and deg f >= 1."""
    q_ok = not algebra.q.is_zero()
    f_ok = algebra.f.degree() >= 1
    if q_ok and f_ok:
        return DomainReport(True, "q != 0 and deg f >= 1")
    reasons = []
    if not q_ok:
        reasons.append("q = 0")
    if not f_ok:
        reasons.append("deg f < 1")
    return DomainReport(False, " and ".join(reasons))


class NoetherianReason(enum.Enum):
    DEG_F_1_AND_Q_NONZERO = "deg f = 1 and q != 0"
    Q_ZERO = "q = 0"
    DEG_F_NOT_1 = "deg f != 1"


class StrictnessCheck(NamedTuple):
    """Evidence that h*y^(n+1) lies outside the n-th chain ideal."""

    n: int
    sigma_powers_divisible: bool
    h_not_divisible: bool

    @property
    def passed(self) -> bool:
        return self.sigma_powers_divisible and self.h_not_divisible


@dataclass(frozen=True)
class WitnessChain:
    """Auditable evidence for the strictly ascending chain of left ideals
    I_n = sum_{i<=n} H*h*y^i after shifting a fixed point of f to 0."""

    beta: Scalar
    depth: int
    checks: tuple[StrictnessCheck, ...]

    @property
    def verified(self) -> bool:
        return all(c.passed for c in self.checks)


@dataclass(frozen=True)
class NoetherianReport:
    verdict: bool
    reason: NoetherianReason
    witness: Optional[WitnessChain] = None


def noetherian_witness_check(algebra: AlgebraParams, depth: int) -> WitnessChain:
    """Build the ideal-chain witness for deg f >= 2.

    Needs a fixed point beta of f in the ground field; shifting h by beta
    normalizes to f(0) = 0, after which sigma^k(h) is divisible by f for
    every k >= 1 while h itself is not, so each inclusion I_n c I_{n+1}
    is strict.
    """
    f = algebra.f
    field = algebra.field
    if f.degree() < 2:
        raise WrongDegree("the witness construction needs deg f >= 2")
    if depth < 1:
        raise ValueError("depth must be positive")
    fixed_points = poly_roots(f - Poly.h(field))
    if not fixed_points:
        raise NoFixedPointInField(
            f"f - h has no root over {field}; a base change would be required"
        )
    beta = min(fixed_points, key=lambda s: s.sort_key())
    shifted_f = f.compose(Poly([beta, field.one], field)) - Poly.const(beta)
    h_poly = Poly.h(field)
    divisible = []
    sigma_k = h_poly
    for _ in range(depth + 1):
        sigma_k = sigma_k.compose(shifted_f)
        divisible.append((sigma_k % shifted_f).is_zero())
    h_free = not (h_poly % shifted_f).is_zero()
    checks = tuple(
        StrictnessCheck(n, all(divisible[: n + 1]), h_free) for n in range(depth + 1)
    )
    return WitnessChain(beta=beta, depth=depth, checks=checks)


def is_noetherian(algebra: AlgebraParams, witness_depth: int = 5) -> NoetherianReport:
    """Noetherian exactly when deg f = 1 and q != 0.

    For deg f >= 2 with a ground-field fixed point of f, the report carries
    the ideal-chain witness as evidence; the verdict itself comes from the
    closed criterion.
    """
    deg_f = algebra.f.degree()
    if deg_f == 1 and not algebra.q.is_zero():
        return NoetherianReport(True, NoetherianReason.DEG_F_1_AND_Q_NONZERO)
    if deg_f != 1:
        witness = None
        if deg_f >= 2:
            try:
                witness = noetherian_witness_check(algebra, witness_depth)
            except NoFixedPointInField:
                witness = None
        return NoetherianReport(False, NoetherianReason.DEG_F_NOT_1, witness)
    return NoetherianReport(False, NoetherianReason.Q_ZERO)


def solve_sigma_q(algebra: AlgebraParams) -> Optional[Poly]:
    """Solve sigma(a) - q*a = g for a in F[h], or return None.

    Requires deg f >= 2 and q != 0.  For deg g >= 1 the degree of a is
    forced to deg g / deg f, and the coefficients are determined from the
    top down since the i-th unknown contributes a_i*(f^i - q*h^i) whose
    top degree i*deg f is unique.  The solution is unique for q != 1; for
    q = 1 it is unique up to an additive constant and the representative
    with a(0) = 0 is returned.
    """
    f, g, q = algebra.f, algebra.g, algebra.q
    field = algebra.field
    if f.degree() < 2 or q.is_zero():
        raise PreconditionViolated("needs deg f >= 2 and q != 0")
    if g.is_zero():
        return Poly.zero(field)
    deg_g, deg_f = g.degree(), f.degree()
    if deg_g == 0:
        if q.is_one():
            return None
        return Poly.const(g.coeff(0) / (field.one - q))
    if deg_g % deg_f != 0:
        return None
    m = deg_g // deg_f
    h_poly = Poly.h(field)
    residual = g
    coeffs = [field.zero] * (m + 1)
    for i in range(m, 0, -1):
        ai = residual.coeff(i * deg_f) / f.lead() ** i
        coeffs[i] = ai
        if not ai.is_zero():
            residual = residual - ai * (f**i - q * h_poly**i)
    if q.is_one():
        if not residual.is_zero():
            return None
    else:
        if residual.degree() > 0:
            return None
        coeffs[0] = residual.coeff(0) / (field.one - q)
    a = Poly(coeffs, field)
    if a.compose(f) - q * a != g:
        return None
    return a


class CenterKind(enum.Enum):
    SCALARS_ONLY = "scalars_only"
    POLYNOMIAL_IN_Z_ELL = "polynomial_in_z_ell"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class CenterDescription:
    kind: CenterKind
    ell: Optional[int] = None
    a: Optional[Poly] = None
    z: Optional[Element] = None
    reason: str = ""


def is_central(z: Element) -> bool:
    """True when z commutes with x, y and h under exact multiplication."""
    for gen in z.algebra.generators():
        if z * gen != gen * z:
            return False
    return True


def center_describe(algebra: AlgebraParams) -> CenterDescription:
    """Describe the center for deg f >= 2 and q != 0.

    If q is not a root of unity the center is the scalars.  If q has order
    ell and sigma(a) - q*a = g is solvable, the center is generated by
    Z^ell with Z = q*(x*y - a), verified central by direct multiplication.
    If the equation is unsolvable the description is left undetermined.
    """
    if algebra.f.degree() < 2 or algebra.q.is_zero():
        raise PreconditionViolated("center description needs deg f >= 2 and q != 0")
    ell = root_of_unity_order(algebra.q)
    if ell is None:
        return CenterDescription(CenterKind.SCALARS_ONLY)
    a = solve_sigma_q(algebra)
    if a is None:
        return CenterDescription(
            CenterKind.UNDETERMINED,
            ell=ell,
            reason="q has finite order but sigma(a) - q*a = g has no polynomial solution",
        )
    xy = Element(algebra, {(1, 1): Poly.one(algebra.field)})
    z = algebra.q * (xy - Element.from_poly(algebra, a))
    if not is_central(z**ell):
        raise RuntimeError("internal error: Z^ell failed the centrality check")
    return CenterDescription(CenterKind.POLYNOMIAL_IN_Z_ELL, ell=ell, a=a, z=z)


def centralizer_of_h_contains(element: Element) -> bool:
    """Membership in the centralizer of h, for deg f >= 2.

    In this regime the centralizer is exactly the diagonal-support part
    sum_i x^i F[h] y^i, so the test reads off the support.
    """
    if element.algebra.f.degree() < 2:
        raise PreconditionViolated("the diagonal characterization needs deg f >= 2")
    return all(i == k for (i, k) in element.terms)


@dataclass(frozen=True)
class GrowthReport:
    """Exact dimensions of V^n for V = span{1, x, y, h}."""

    dims: tuple[int, ...]

    def slopes(self) -> tuple:
        """Log-log slope between consecutive dimensions, None for n < 2."""
        out: list = [None, None]
        for n in range(2, len(self.dims)):
            out.append(
                math.log(self.dims[n] / self.dims[n - 1]) / math.log(n / (n - 1))
            )
        return tuple(out[: len(self.dims)])

    def to_csv(self) -> str:
        lines = ["n,dim,slope"]
        slopes = self.slopes()
        for n, dim in enumerate(self.dims):
            slope = "" if slopes[n] is None else f"{slopes[n]:.6f}"
            lines.append(f"{n},{dim},{slope}")
        return "\n".join(lines) + "\n"


def _mono_key(mono):
    i, j, k = mono
    return (i + j + k, i, j, k)


def _vectorize(element: Element) -> dict:
    vec = {}
    for (i, k), p in element.terms.items():
        for j, c in p.monomials():
            vec[(i, j, k)] = c
    return vec


def _sub_scaled(vec: dict, pivot_vec: dict, c: Scalar) -> dict:
    out = dict(vec)
    for mono, pv in pivot_vec.items():
        cur = out.get(mono)
        nv = (cur - c * pv) if cur is not None else -(c * pv)
        if nv.is_zero():
            out.pop(mono, None)
        else:
            out[mono] = nv
    return out


def gk_dimension_sequence(algebra: AlgebraParams, max_n: int) -> GrowthReport:
    """dim V^n for n = 0..max_n, V = span{1, x, y, h}, computed exactly.

    Maintains an echelonized basis in coordinates indexed by the normal
    monomials x^i h^j y^k, ordered by (i+j+k, then lex (i, j, k)) with the
    largest monomial as pivot.  Each step multiplies the previous step's
    novel products by each generator, reduces against the echelon and
    inserts what is new, so the dimensions are deterministic.
    """
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    check_search(max_n, "growth horizon")
    echelon: dict[tuple, dict] = {}

    def reduce_insert(vec: dict) -> bool:
        while vec:
            top = max(vec, key=_mono_key)
            pivot_vec = echelon.get(top)
            if pivot_vec is None:
                inv = vec[top].inv()
                echelon[top] = {m: c * inv for m, c in vec.items()}
                return True
            vec = _sub_scaled(vec, pivot_vec, vec[top])
        return False

    unit = algebra.one()
    reduce_insert(_vectorize(unit))
    dims = [len(echelon)]
    frontier = [unit]
    gens = [algebra.x(), algebra.y(), algebra.h()]
    for _ in range(max_n):
        new_frontier = []
        for base in frontier:
            for gen in gens:
                candidate = base * gen
                if reduce_insert(_vectorize(candidate)):
                    new_frontier.append(candidate)
        dims.append(len(echelon))
        frontier = new_frontier
    return GrowthReport(tuple(dims))
