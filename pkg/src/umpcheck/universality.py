"""Decision procedures for universality over finite carriers.

Five checks, all by exhaustive enumeration in canonical carrier order:

* strict          — u is the unique element with forall x: R(x, u)
* preorder        — uniqueness up to the equivalence induced by a preorder
* ump             — the relation is materialized as Q(a, b) => a <= b (or
                    the dual >=) before running the preorder check
* property        — the relation comes from a predicate P through a
                    propositional formula phi over the atoms Pa, Pb, with
                    membership P(u) required first and rivals restricted to
                    P-holders; optionally with the order consequent attached
* compact         — P(u) and forall x: P(x) => x <= u (dual >=); the
                    feasible/optimal reading

Quantifier conventions that matter:

* ``exclude_self`` (strict and preorder checks) drops x = u from the
  membership quantifier and, symmetrically, x = v from each rival's
  quantifier. The default False is the literal reading, under which an
  irreflexive relation like "strictly greater" has no universal element;
  True recovers the least-element reading.
* Rival witnesses are every v != u that satisfies the universal clause,
  recorded even when the verdict holds (they are then equivalent to u).
"""

from dataclasses import dataclass

from .category import FiniteCategory, Arrow, hom_set, identity_name
from .errors import InputError
from .orders import (
    BinaryRelation,
    Carrier,
    Preorder,
    induced_equivalence,
    reverse,
)


# --------------------------------------------------------------------------
# predicates and phi-formulas

@dataclass(frozen=True)
class Predicate:
    """An extensional subset of a carrier."""

    carrier: Carrier
    holds: frozenset

    def __init__(self, carrier, holds):
        if not isinstance(carrier, Carrier):
            carrier = Carrier(carrier)
        holds = frozenset(holds)
        for x in holds:
            if x not in carrier:
                raise InputError(f"predicate holds of unknown element {x!r}")
        object.__setattr__(self, "carrier", carrier)
        object.__setattr__(self, "holds", holds)

    def __call__(self, x: str) -> bool:
        return x in self.holds

    def sorted_holds(self):
        return sorted(self.holds)


class PhiFormula:
    """A propositional formula in the two atoms Pa and Pb.

    Connectives, loosest to tightest: ``->`` (right-associative), ``&`` and
    ``|`` (one shared level, left-associative), ``!``. Parentheses group.
    """

    __slots__ = ("op", "args")

    def __init__(self, op, *args):
        self.op = op
        self.args = args

    def __eq__(self, other):
        return (
            isinstance(other, PhiFormula)
            and self.op == other.op
            and self.args == other.args
        )

    def __hash__(self):
        return hash((self.op, self.args))

    def evaluate(self, pa: bool, pb: bool) -> bool:
        op = self.op
        if op == "Pa":
            return pa
        if op == "Pb":
            return pb
        if op == "!":
            return not self.args[0].evaluate(pa, pb)
        if op == "&":
            return self.args[0].evaluate(pa, pb) and self.args[1].evaluate(pa, pb)
        if op == "|":
            return self.args[0].evaluate(pa, pb) or self.args[1].evaluate(pa, pb)
        if op == "->":
            return (not self.args[0].evaluate(pa, pb)) or self.args[1].evaluate(pa, pb)
        raise AssertionError(op)

    def __str__(self):
        return self._render(0)

    def _render(self, level):
        # level 0 admits ->, level 1 admits & |, level 2 atoms and ! only
        op = self.op
        if op in ("Pa", "Pb"):
            return op
        if op == "!":
            return "!" + self.args[0]._render(2)
        if op in ("&", "|"):
            body = f"{self.args[0]._render(1)} {op} {self.args[1]._render(2)}"
            return body if level <= 1 else f"({body})"
        body = f"{self.args[0]._render(1)} -> {self.args[1]._render(0)}"
        return body if level == 0 else f"({body})"

    def __repr__(self):
        return f"PhiFormula({self!s})"


_PHI_TOKENS = ("->", "(", ")", "&", "|", "!")


def _phi_lex(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if text.startswith("->", i):
            tokens.append(("->", i))
            i += 2
        elif ch in "()&|!":
            tokens.append((ch, i))
            i += 1
        elif text.startswith("Pa", i):
            tokens.append(("Pa", i))
            i += 2
        elif text.startswith("Pb", i):
            tokens.append(("Pb", i))
            i += 2
        else:
            raise InputError(f"phi formula: unexpected character {ch!r} at position {i}")
    return tokens


def parse_phi(text: str) -> PhiFormula:
    """Parse a formula; raises InputError with a position on bad input."""
    tokens = _phi_lex(text)
    pos = 0

    def peek():
        return tokens[pos][0] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        if pos >= len(tokens):
            raise InputError("phi formula: unexpected end of input")
        tok, at = tokens[pos]
        if expected is not None and tok != expected:
            raise InputError(f"phi formula: expected {expected!r} at position {at}, got {tok!r}")
        pos += 1
        return tok

    def parse_implication():
        left = parse_junction()
        if peek() == "->":
            take()
            return PhiFormula("->", left, parse_implication())
        return left

    def parse_junction():
        node = parse_factor()
        while peek() in ("&", "|"):
            op = take()
            node = PhiFormula(op, node, parse_factor())
        return node

    def parse_factor():
        tok = peek()
        if tok == "!":
            take()
            return PhiFormula("!", parse_factor())
        if tok == "(":
            take()
            node = parse_implication()
            take(")")
            return node
        if tok in ("Pa", "Pb"):
            return PhiFormula(take())
        at = tokens[pos][1] if pos < len(tokens) else len(text)
        raise InputError(f"phi formula: expected an atom at position {at}")

    node = parse_implication()
    if pos != len(tokens):
        raise InputError(
            f"phi formula: trailing input at position {tokens[pos][1]}"
        )
    return node


PHI_BOTH = parse_phi("Pa & Pb")


# --------------------------------------------------------------------------
# verdicts

@dataclass(frozen=True)
class UniversalityVerdict:
    holds: bool
    failing_clause: str | None = None  # "membership" | "uniqueness" | None
    counterexample: str | None = None
    rival_witnesses: tuple[str, ...] = ()

    def __post_init__(self):
        assert self.holds == (self.failing_clause is None)
        assert self.holds == (self.counterexample is None)


def _membership_failure(x, rivals=()):
    return UniversalityVerdict(False, "membership", x, tuple(rivals))


def _uniqueness_failure(v, rivals):
    return UniversalityVerdict(False, "uniqueness", v, tuple(rivals))


def _success(rivals=()):
    return UniversalityVerdict(True, None, None, tuple(rivals))


# --------------------------------------------------------------------------
# the checkers

def _satisfies_universal_clause(r: BinaryRelation, v: str, exclude_self: bool) -> bool:
    return all(
        r.has(x, v) for x in r.carrier if not (exclude_self and x == v)
    )


def is_r_universal_strict(
    r: BinaryRelation, u: str, exclude_self: bool = False
) -> UniversalityVerdict:
    """u satisfies forall x: R(x, u) and is the only element that does."""
    r.carrier.require(u)
    for x in r.carrier:
        if exclude_self and x == u:
            continue
        if not r.has(x, u):
            return _membership_failure(x)
    rivals = [
        v
        for v in r.carrier
        if v != u and _satisfies_universal_clause(r, v, exclude_self)
    ]
    if rivals:
        return _uniqueness_failure(rivals[0], rivals)
    return _success()


def is_r_universal_preorder(
    r: BinaryRelation, p: Preorder, u: str, exclude_self: bool = False
) -> UniversalityVerdict:
    """As the strict check, but rivals only need to be equivalent to u under
    the preorder's induced equivalence, not equal."""
    if r.carrier != p.carrier:
        raise InputError("relation and preorder carriers differ")
    r.carrier.require(u)
    for x in r.carrier:
        if exclude_self and x == u:
            continue
        if not r.has(x, u):
            return _membership_failure(x)
    rivals = [
        v
        for v in r.carrier
        if v != u and _satisfies_universal_clause(r, v, exclude_self)
    ]
    for v in rivals:
        if not p.equivalent(v, u):
            return _uniqueness_failure(v, rivals)
    return _success(rivals)


def is_q_ump_universal(
    q: BinaryRelation, p: Preorder, u: str, dual: bool = False
) -> UniversalityVerdict:
    """Universality of u under R(a, b) := Q(a, b) => a <= b (>= when dual)."""
    if q.carrier != p.carrier:
        raise InputError("relation and preorder carriers differ")
    order = reverse(p) if dual else p
    materialized = BinaryRelation(
        q.carrier,
        {
            (a, b)
            for a in q.carrier
            for b in q.carrier
            if (not q.has(a, b)) or order.has(a, b)
        },
    )
    return is_r_universal_preorder(materialized, p, u, exclude_self=False)


def relation_from_property(pred: Predicate, phi: PhiFormula) -> BinaryRelation:
    """R(a, b) := phi(P(a), P(b)), extensionally."""
    if isinstance(phi, str):
        phi = parse_phi(phi)
    return BinaryRelation(
        pred.carrier,
        {
            (a, b)
            for a in pred.carrier
            for b in pred.carrier
            if phi.evaluate(pred(a), pred(b))
        },
    )


def is_p_universal(
    pred: Predicate,
    phi: PhiFormula,
    p: Preorder,
    u: str,
    consequent: str | None = None,
) -> UniversalityVerdict:
    """Universality of u determined by the property behind the relation.

    Checks, in order: P(u) (reported as a membership failure with witness u
    when false); forall x: R(x, u); and that every rival v with P(v)
    satisfying forall x: R(x, v) is equivalent to u.

    With ``consequent`` None, R(a, b) is phi(P(a), P(b)) itself. With
    "leq"/"geq" the order consequent is attached:
    R(a, b) := phi(P(a), P(b)) => a <= b (resp. >=), which is the form a
    universal mapping property takes.
    """
    if isinstance(phi, str):
        phi = parse_phi(phi)
    if pred.carrier != p.carrier:
        raise InputError("predicate and preorder carriers differ")
    pred.carrier.require(u)
    if consequent not in (None, "leq", "geq"):
        raise InputError(f"consequent must be None, 'leq' or 'geq', got {consequent!r}")

    if consequent is None:
        rel = relation_from_property(pred, phi)
    else:
        order = reverse(p) if consequent == "geq" else p
        rel = BinaryRelation(
            pred.carrier,
            {
                (a, b)
                for a in pred.carrier
                for b in pred.carrier
                if (not phi.evaluate(pred(a), pred(b))) or order.has(a, b)
            },
        )

    if not pred(u):
        return _membership_failure(u)
    for x in pred.carrier:
        if not rel.has(x, u):
            return _membership_failure(x)
    rivals = [
        v
        for v in pred.carrier
        if v != u and pred(v) and _satisfies_universal_clause(rel, v, False)
    ]
    for v in rivals:
        if not p.equivalent(v, u):
            return _uniqueness_failure(v, rivals)
    return _success(rivals)


def is_p_universal_compact(
    pred: Predicate, p: Preorder, u: str, dual: bool = False
) -> UniversalityVerdict:
    """P(u) and forall x: P(x) => x <= u (>= when dual).

    The feasible/optimal reading: P marks the feasible elements and a
    universal u is a greatest (dually least) one among them.
    """
    if pred.carrier != p.carrier:
        raise InputError("predicate and preorder carriers differ")
    pred.carrier.require(u)
    if not pred(u):
        return _membership_failure(u)
    order = reverse(p) if dual else p
    for x in pred.carrier:
        if pred(x) and not order.has(x, u):
            return _membership_failure(x)
    return _success()


FIND_DEFINITIONS = ("strict", "preorder", "ump", "property", "compact")


def find_universal(
    definition: str,
    *,
    relation: BinaryRelation | None = None,
    preorder: Preorder | None = None,
    predicate: Predicate | None = None,
    phi: PhiFormula | str | None = None,
    exclude_self: bool = False,
    dual: bool = False,
    consequent: str | None = None,
) -> tuple[str, ...]:
    """All elements whose verdict holds, in canonical carrier order."""
    if definition not in FIND_DEFINITIONS:
        raise InputError(f"unknown definition {definition!r}")

    def require(value, name):
        if value is None:
            raise InputError(f"definition {definition!r} needs {name}")
        return value

    if definition == "strict":
        r = require(relation, "a relation")
        sat = [
            v for v in r.carrier if _satisfies_universal_clause(r, v, exclude_self)
        ]
        return tuple(sat) if len(sat) == 1 else ()
    if definition == "preorder":
        r = require(relation, "a relation")
        p = require(preorder, "a preorder")
        return tuple(
            u
            for u in r.carrier
            if is_r_universal_preorder(r, p, u, exclude_self).holds
        )
    if definition == "ump":
        q = require(relation, "a relation")
        p = require(preorder, "a preorder")
        return tuple(
            u for u in q.carrier if is_q_ump_universal(q, p, u, dual).holds
        )
    if definition == "property":
        pr = require(predicate, "a predicate")
        p = require(preorder, "a preorder")
        f = require(phi, "a phi formula")
        return tuple(
            u
            for u in pr.carrier
            if is_p_universal(pr, f, p, u, consequent=consequent).holds
        )
    pr = require(predicate, "a predicate")
    p = require(preorder, "a preorder")
    return tuple(
        u for u in pr.carrier if is_p_universal_compact(pr, p, u, dual).holds
    )


# --------------------------------------------------------------------------
# the unique-arrow form over a finite category

def is_unique_arrow_universal(
    c: FiniteCategory, r: BinaryRelation, u: str
) -> UniversalityVerdict:
    """forall x: R(x, u), and every v satisfying the same clause has exactly
    one arrow into u."""
    if tuple(r.carrier) != c.objects:
        raise InputError("relation carrier must be exactly the category's objects")
    c.require_object(u)
    for x in r.carrier:
        if not r.has(x, u):
            return _membership_failure(x)
    rivals = []
    failure = None
    for v in r.carrier:
        if not _satisfies_universal_clause(r, v, False):
            continue
        if v != u:
            rivals.append(v)
        if len(hom_set(c, v, u)) != 1 and failure is None:
            failure = v
    if failure is not None:
        return _uniqueness_failure(failure, rivals)
    return _success(rivals)


def unique_isomorphism_witness(
    c: FiniteCategory, r: BinaryRelation, u1: str, u2: str
) -> tuple[Arrow, Arrow]:
    """The unique mutually inverse arrow pair between two universal objects.

    Requires both objects to pass the unique-arrow check (InputError
    otherwise). The returned pair (f: u1 -> u2, g: u2 -> u1) is verified to
    compose to the two identities, and hom(u1, u1) is verified to be the
    identity alone; a failure of either verification cannot happen for a
    category that passed validation, so it is asserted, not reported.
    """
    for cand in (u1, u2):
        verdict = is_unique_arrow_universal(c, r, cand)
        if not verdict.holds:
            raise InputError(
                f"object {cand!r} is not unique-arrow universal "
                f"(failing clause: {verdict.failing_clause}, witness {verdict.counterexample!r})"
            )
    forward = hom_set(c, u1, u2)
    backward = hom_set(c, u2, u1)
    assert len(forward) == 1 and len(backward) == 1
    f, g = forward[0], backward[0]
    endos = hom_set(c, u1, u1)
    assert endos == (c.arrow(identity_name(u1)),), "unique endo-arrow must be the identity"
    assert c.compose(f.name, g.name) == identity_name(u1)
    assert c.compose(g.name, f.name) == identity_name(u2)
    return f, g
