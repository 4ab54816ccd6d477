"""Binary products, coproducts, terminal and initial objects.

Everything is verified, never synthesized: a candidate cone is checked
against every cone over the same factors, and a certificate records the
unique mediating arrow for each of them (the candidate itself maps to its
identity). Failures name the lexicographically first offending cone and
its mediator count. Coproducts are the same check run on the opposite
category; results keep that orientation, with arrow names shared with the
original so they read back directly.
"""

from dataclasses import dataclass

from .category import (
    Arrow,
    FiniteCategory,
    hom_set,
    identity_name,
    opposite_category,
)
from .errors import InputError


@dataclass(frozen=True, order=True)
class Cone:
    """A span apex -> A, apex -> B over the ordered factor pair (A, B)."""

    apex: str
    leg_a: Arrow
    leg_b: Arrow

    def __post_init__(self):
        if self.leg_a.dom != self.apex or self.leg_b.dom != self.apex:
            raise InputError(
                f"cone legs must leave the apex {self.apex!r}: "
                f"{self.leg_a.name} has dom {self.leg_a.dom!r}, "
                f"{self.leg_b.name} has dom {self.leg_b.dom!r}"
            )

    @property
    def factors(self) -> tuple[str, str]:
        return (self.leg_a.cod, self.leg_b.cod)


@dataclass(frozen=True)
class ProductCertificate:
    """Witness that cone is a product: one mediator per cone, candidate
    included (its entry is the identity)."""

    cone: Cone
    mediators: dict  # Cone -> Arrow

    @property
    def ok(self) -> bool:
        return True


@dataclass(frozen=True)
class ProductFailure:
    cone: Cone  # first offending cone in canonical order
    mediator_count: int
    mediators: tuple[Arrow, ...]

    @property
    def ok(self) -> bool:
        return False


def _as_arrow(c: FiniteCategory, f) -> Arrow:
    return f if isinstance(f, Arrow) else c.arrow(f)


def cone(c: FiniteCategory, apex: str, leg_a, leg_b) -> Cone:
    """Build a cone from arrow names, checking the arrows live in c."""
    c.require_object(apex)
    return Cone(apex, _as_arrow(c, leg_a), _as_arrow(c, leg_b))


def enumerate_cones(c: FiniteCategory, a: str, b: str) -> tuple[Cone, ...]:
    """Every span into the ordered pair (a, b), in canonical order."""
    c.require_object(a)
    c.require_object(b)
    found = []
    for apex in c.objects:
        for f in hom_set(c, apex, a):
            for g in hom_set(c, apex, b):
                found.append(Cone(apex, f, g))
    return tuple(sorted(found))


def mediating_arrows(c: FiniteCategory, frm: Cone, to: Cone) -> tuple[Arrow, ...]:
    """All m: frm.apex -> to.apex with m-then-leg equal to frm's legs."""
    if frm.factors != to.factors:
        raise InputError(
            f"cones have different factors: {frm.factors} vs {to.factors}"
        )
    return tuple(
        m
        for m in hom_set(c, frm.apex, to.apex)
        if c.compose(m.name, to.leg_a.name) == frm.leg_a.name
        and c.compose(m.name, to.leg_b.name) == frm.leg_b.name
    )


def _verify_cone(c: FiniteCategory, cand: Cone) -> None:
    for leg in (cand.leg_a, cand.leg_b):
        known = c.arrows.get(leg.name)
        if known is None or known != leg:
            raise InputError(f"cone leg {leg.name!r} is not an arrow of the category")
    c.require_object(cand.apex)


def check_product(c: FiniteCategory, cand: Cone):
    """Certificate if every cone over cand's factors has exactly one
    mediator into cand, else the first cone violating that."""
    _verify_cone(c, cand)
    a, b = cand.factors
    mediators = {}
    for k in enumerate_cones(c, a, b):
        ms = mediating_arrows(c, k, cand)
        if len(ms) != 1:
            return ProductFailure(k, len(ms), ms)
        mediators[k] = ms[0]
    assert mediators[cand].name == identity_name(cand.apex)
    return ProductCertificate(cand, mediators)


def check_coproduct(c: FiniteCategory, cand: Cone):
    """The product check run on the opposite category.

    The candidate is a cone in the opposite: apex with legs apex -> A,
    apex -> B there, which in c are the injections A -> apex, B -> apex
    (build one from c-side names with `cocone`). Cones and mediators in
    the result carry the opposite orientation too; names match c's
    arrows, so c.arrow(m.name) recovers the c-side reading. A certified
    mediator m for the cocone at z is the arrow apex -> z in c.
    """
    return check_product(opposite_category(c), cand)


def cocone(c: FiniteCategory, apex: str, leg_a, leg_b) -> Cone:
    """A coproduct candidate: injections A -> apex, B -> apex, packaged as
    the opposite-side cone check_coproduct expects."""
    c.require_object(apex)
    fa, fb = _as_arrow(c, leg_a), _as_arrow(c, leg_b)
    for leg in (fa, fb):
        if leg.cod != apex:
            raise InputError(
                f"cocone legs must enter the apex {apex!r}: "
                f"{leg.name} has cod {leg.cod!r}"
            )
    return Cone(apex, Arrow(fa.name, apex, fa.dom), Arrow(fb.name, apex, fb.dom))


def is_terminal(c: FiniteCategory, x: str) -> tuple[bool, str | None]:
    """True iff every object has exactly one arrow into x; else the first
    object violating that."""
    c.require_object(x)
    for y in c.objects:
        if len(hom_set(c, y, x)) != 1:
            return False, y
    return True, None


def is_initial(c: FiniteCategory, x: str) -> tuple[bool, str | None]:
    """True iff every object has exactly one arrow out of x into it."""
    c.require_object(x)
    for y in c.objects:
        if len(hom_set(c, x, y)) != 1:
            return False, y
    return True, None


def product_uniqueness_certificate(
    c: FiniteCategory, p1: Cone, p2: Cone
) -> tuple[Arrow, Arrow]:
    """The mutually inverse mediator pair between two certified products.

    Requires both cones to pass check_product over the same factors
    (InputError otherwise). Returns (u1: p1.apex -> p2.apex,
    u2: p2.apex -> p1.apex) and verifies the two round trips are the
    identities; those equations follow from uniqueness of self-mediators,
    so their failure would be an engine bug and is asserted.
    """
    if p1.factors != p2.factors:
        raise InputError(
            f"cones have different factors: {p1.factors} vs {p2.factors}"
        )
    r1, r2 = check_product(c, p1), check_product(c, p2)
    if not r1.ok:
        raise InputError(f"cone at apex {p1.apex!r} is not a product")
    if not r2.ok:
        raise InputError(f"cone at apex {p2.apex!r} is not a product")
    u1 = r2.mediators[p1]
    u2 = r1.mediators[p2]
    assert c.compose(u1.name, u2.name) == identity_name(p1.apex)
    assert c.compose(u2.name, u1.name) == identity_name(p2.apex)
    return u1, u2
