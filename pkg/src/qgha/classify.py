"""Parameter transformations, the isomorphism decision procedure, the
automorphism-group computation and the (generalized) down-up conversions.

For q != 0 and deg f >= 2 every isomorphism is a composite of three moves:
a shift of h, a rescaling of h, and a rescaling of g.  The decider solves
for the composite affine map psi(h) = u*h + v with f' = psi o f o psi^{-1}
together with the scaling c such that g' = c * (g o psi^{-1}).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .algebra import AlgebraParams, Element
from .capacity import check_search
from .errors import (
    FieldMismatch,
    NonSplitQuadratic,
    PreconditionViolated,
    UnsupportedRegime,
    WrongDegree,
    ZeroScale,
)
from .fields import Scalar, nth_roots
from .poly import Poly, affine_conjugate, poly_roots


def transform_type_I(algebra: AlgebraParams, alpha) -> AlgebraParams:
    """Shift the h coordinate: (q, f, g) -> (q, f(h-alpha)+alpha, g(h-alpha))."""
    field = algebra.field
    alpha = field.scalar(alpha)
    shifted = Poly([-alpha, field.one], field)
    return AlgebraParams(
        field,
        algebra.q,
        algebra.f.compose(shifted) + Poly.const(alpha),
        algebra.g.compose(shifted),
    )


def transform_type_II(algebra: AlgebraParams, lam) -> AlgebraParams:
    """Rescale the h coordinate: (q, f, g) -> (q, lam*f(h/lam), g(h/lam))."""
    field = algebra.field
    lam = field.scalar(lam)
    if lam.is_zero():
        raise ZeroScale("lambda must be nonzero")
    inner = Poly([field.zero, lam.inv()], field)
    return AlgebraParams(
        field, algebra.q, lam * algebra.f.compose(inner), algebra.g.compose(inner)
    )


def transform_type_III(algebra: AlgebraParams, lam, mu) -> AlgebraParams:
    """Rescale the commutator target: (q, f, g) -> (q, f, lam*mu*g)."""
    field = algebra.field
    lam = field.scalar(lam)
    mu = field.scalar(mu)
    if lam.is_zero() or mu.is_zero():
        raise ZeroScale("lambda and mu must be nonzero")
    return AlgebraParams(field, algebra.q, algebra.f, lam * mu * algebra.g)


@dataclass(frozen=True)
class IsoWitness:
    """Affine map psi(h) = u*h + v plus the g-rescaling c realizing an
    isomorphism: f' = psi o f o psi^{-1}, g' = c*(g o psi^{-1}), q' = q.

    The decomposition into the three elementary moves is alpha = v/u
    (shift), lambda = u (rescale h), lambda*mu = c (rescale g).
    """

    u: Scalar
    v: Scalar
    c: Scalar

    @property
    def alpha(self) -> Scalar:
        return self.v / self.u

    @property
    def lam(self) -> Scalar:
        return self.u

    @property
    def lam_mu(self) -> Scalar:
        return self.c

    def to_dict(self) -> dict:
        return {
            "u": str(self.u),
            "v": str(self.v),
            "c": str(self.c),
            "decomposition": {
                "alpha": str(self.alpha),
                "lambda": str(self.lam),
                "lambda_mu": str(self.lam_mu),
            },
        }


def apply_witness(algebra: AlgebraParams, witness: IsoWitness) -> AlgebraParams:
    """Push a presentation through a witness; lands on the isomorphic target."""
    field = algebra.field
    u, v, c = witness.u, witness.v, witness.c
    psi_inv = Poly([-v / u, u.inv()], field)
    return AlgebraParams(
        field,
        algebra.q,
        affine_conjugate(algebra.f, u, v),
        c * algebra.g.compose(psi_inv),
    )


def _v_candidates(a: AlgebraParams, b: AlgebraParams, u: Scalar):
    """Candidate shifts v for a given scale u.

    When the characteristic does not divide n = deg f, matching the
    h^(n-1) coefficient of f' = psi o f o psi^{-1} forces
    -n*a_n*u^(1-n)*v + a_{n-1}*u^(2-n) = f'_{n-1}; otherwise the shift is
    found by exhaustive search over F_p.
    """
    field = a.field
    n = a.f.degree()
    p = field.char
    if p == 0 or n % p != 0:
        lead = a.f.lead()
        sub_lead = a.f.coeff(n - 1)
        target = b.f.coeff(n - 1)
        v = (sub_lead * u ** (2 - n) - target) * u ** (n - 1) / (field.scalar(n) * lead)
        return [v]
    check_search(p, f"shift search in F_{p}")
    return list(field.elements())


def is_isomorphic(a: AlgebraParams, b: AlgebraParams):
    """Decide isomorphism for q != 0 and deg f >= 2; returns a verified
    IsoWitness or None.

    q, deg f and deg g are isomorphism invariants in this regime, so
    mismatches short-circuit.  Candidate scales u come from the roots of
    u^(n-1) = lead(f)/lead(f'); candidates are tried in ascending canonical
    scalar order and every witness is re-verified in full before return.
    """
    if a.field != b.field:
        raise FieldMismatch("presentations over different fields")
    if a.f.degree() < 2 or a.q.is_zero():
        raise UnsupportedRegime(
            "the decision procedure covers q != 0 and deg f >= 2 only"
        )
    if a.q != b.q:
        return None
    n = a.f.degree()
    if b.f.degree() != n or a.g.degree() != b.g.degree():
        return None
    field = a.field
    ratio = a.f.lead() / b.f.lead()
    for u in sorted(nth_roots(n - 1, ratio), key=lambda s: s.sort_key()):
        for v in _v_candidates(a, b, u):
            if affine_conjugate(a.f, u, v) != b.f:
                continue
            if a.g.is_zero():
                return IsoWitness(u, v, field.one)
            psi_inv = Poly([-v / u, u.inv()], field)
            pulled = a.g.compose(psi_inv)
            c = b.g.lead() / pulled.lead()
            if c * pulled == b.g:
                return IsoWitness(u, v, c)
    return None


class AutRegime(enum.Enum):
    G_NONZERO = "g_nonzero"
    G_ZERO = "g_zero"


@dataclass(frozen=True)
class AutGroupDescription:
    """Automorphism group of a presentation with q != 0 and deg f >= 2.

    The torus factor is F* (g != 0, the maps x -> l*x, y -> y/l) or F* x F*
    (g = 0) and always commutes with everything; the finite part collects
    the affine maps h -> a*h + b fixing the presentation, closed under
    (a, b) o (a', b') = (a*a', a*b' + b).
    """

    torus_rank: int
    finite_part: tuple
    abelian: bool
    regime: AutRegime
    char_caveat: bool

    @staticmethod
    def compose(p1, p2):
        a1, b1 = p1
        a2, b2 = p2
        return (a1 * a2, a1 * b2 + b1)


def _fixes_presentation(algebra: AlgebraParams, a: Scalar, b: Scalar, regime) -> bool:
    sub = Poly([b, a], algebra.field)
    if algebra.f.compose(sub) != a * algebra.f + Poly.const(b):
        return False
    if regime is AutRegime.G_ZERO:
        return True
    return algebra.g.compose(sub) == a ** algebra.g.degree() * algebra.g


def automorphism_group(algebra: AlgebraParams) -> AutGroupDescription:
    """Compute the automorphism group for deg f >= 2 and q != 0.

    When char = 0 or char > deg f, candidates (a, b) come from
    a^(deg f - 1) = 1 with b = (a-1)*a_{n-1}/(n*a_n) forced by a; each
    candidate is then verified in full, and the finite part is cyclic of
    order dividing deg f - 1.  For 0 < char <= deg f the finite part is
    found by exhaustive search over F_p* x F_p and may be non-abelian.
    """
    f, g, field = algebra.f, algebra.g, algebra.field
    n = f.degree()
    if n < 2 or algebra.q.is_zero():
        raise PreconditionViolated(
            "automorphism description needs deg f >= 2 and q != 0"
        )
    regime = AutRegime.G_ZERO if g.is_zero() else AutRegime.G_NONZERO
    p = field.char
    char_caveat = 0 < p <= n
    candidates = []
    if char_caveat:
        check_search(p * (p - 1), f"automorphism search over F_{p}")
        for a in field.elements():
            if a.is_zero():
                continue
            for b in field.elements():
                candidates.append((a, b))
    else:
        n_scalar = field.scalar(n)
        for a in sorted(nth_roots(n - 1, field.one), key=lambda s: s.sort_key()):
            b = (a - field.one) * f.coeff(n - 1) / (n_scalar * f.lead())
            candidates.append((a, b))
    finite = [
        (a, b) for a, b in candidates if _fixes_presentation(algebra, a, b, regime)
    ]
    finite.sort(key=lambda ab: (ab[0].sort_key(), ab[1].sort_key()))
    abelian = all(
        AutGroupDescription.compose(p1, p2) == AutGroupDescription.compose(p2, p1)
        for idx, p1 in enumerate(finite)
        for p2 in finite[idx + 1 :]
    )
    return AutGroupDescription(
        torus_rank=1 if regime is AutRegime.G_NONZERO else 2,
        finite_part=tuple(finite),
        abelian=abelian,
        regime=regime,
        char_caveat=char_caveat,
    )


def automorphism_preserves_relations(algebra: AlgebraParams, pair) -> bool:
    """Re-verify a finite-part pair through the multiplication engine.

    Pushes (a, b) to the generator map h -> a*h + b, x -> x,
    y -> a^(deg g)*y (y -> y when g = 0) and checks that all three defining
    relations still hold exactly.
    """
    a, b = pair
    field = algebra.field
    sub = Poly([b, a], field)
    phi_h = Element.from_poly(algebra, sub)
    phi_x = algebra.x()
    scale = field.one if algebra.g.is_zero() else a ** algebra.g.degree()
    phi_y = scale * algebra.y()
    f_img = Element.from_poly(algebra, algebra.f.compose(sub))
    g_img = Element.from_poly(algebra, algebra.g.compose(sub))
    rel_hx = phi_h * phi_x - phi_x * f_img
    rel_yh = phi_y * phi_h - f_img * phi_y
    rel_yx = phi_y * phi_x - algebra.q * (phi_x * phi_y) - g_img
    return rel_hx.is_zero() and rel_yh.is_zero() and rel_yx.is_zero()


@dataclass(frozen=True)
class GduaPresentation:
    """Generalized down-up presentation L(v, r, s, gamma)."""

    v: Poly
    r: Scalar
    s: Scalar
    gamma: Scalar


def downup_candidates(alpha: Scalar, beta: Scalar, gamma: Scalar):
    """All presentations matching the down-up parameters (alpha, beta, gamma).

    Requires h^2 - alpha*h - beta to split over the field with roots r, s;
    each ordering yields the presentation (q, f, g) = (s, r*h + gamma, h).
    Distinct roots give both orderings, ascending first.
    """
    field = alpha.field
    if beta.field != field or gamma.field != field:
        raise FieldMismatch("down-up parameters over different fields")
    quadratic = Poly([-beta, -alpha, field.one], field)
    roots = sorted(poly_roots(quadratic), key=lambda s: s.sort_key())
    if not roots:
        raise NonSplitQuadratic(
            f"h^2 - ({alpha})*h - ({beta}) has no roots over {field}"
        )
    if len(roots) == 1:
        pairs = [(roots[0], roots[0])]
    else:
        pairs = [(roots[0], roots[1]), (roots[1], roots[0])]
    out = []
    for r, s in pairs:
        f = Poly([gamma, r], field)
        out.append((r, s, AlgebraParams(field, s, f, Poly.h(field))))
    return out


def from_downup(
    alpha: Scalar, beta: Scalar, gamma: Scalar, choice: int = 0
) -> AlgebraParams:
    """Convert a down-up presentation; choice picks the root ordering."""
    candidates = downup_candidates(alpha, beta, gamma)
    if not 0 <= choice < len(candidates):
        raise ValueError(
            f"choice {choice} out of range for {len(candidates)} root ordering(s)"
        )
    return candidates[choice][2]


def to_gdua(algebra: AlgebraParams) -> GduaPresentation:
    """(q, a*h + b, g) -> L(-g, a, q, -b); only defined for deg f <= 1."""
    if algebra.f.degree() > 1:
        raise WrongDegree("no generalized down-up form exists when deg f >= 2")
    return GduaPresentation(
        v=-algebra.g,
        r=algebra.f.coeff(1),
        s=algebra.q,
        gamma=-algebra.f.coeff(0),
    )


def from_gdua(presentation: GduaPresentation) -> AlgebraParams:
    """L(v, r, s, gamma) -> (q, f, g) = (s, r*h - gamma, -v)."""
    field = presentation.v.field
    if presentation.r.field != field or presentation.s.field != field:
        raise FieldMismatch("presentation parameters over different fields")
    f = Poly([-presentation.gamma, presentation.r], field)
    return AlgebraParams(field, presentation.s, f, -presentation.v)
