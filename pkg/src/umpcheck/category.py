"""Finite categories with an explicit composition table.

Objects and arrows are named by identifiers; identity arrows are implicit in
input and auto-generated as ``id_<object>``. Composition is written
apply-first-on-the-left: ``compose(f, g)`` is "f then g", an arrow
dom(f) -> cod(g), defined when cod(f) = dom(g). The stored table covers every
composable pair, with identity-involving entries filled in at construction.

Everything is immutable after construction; all queries are pure.
"""

from dataclasses import dataclass
import itertools
import re

from .errors import InputError

IDENT_RE = re.compile(r"[A-Za-z0-9_]+\Z")

ID_PREFIX = "id_"

MAX_OBJECTS = 64
MAX_ARROWS = 4096


def check_ident(name: str, what: str) -> str:
    if not IDENT_RE.match(name):
        raise InputError(f"invalid {what} name {name!r}")
    return name


@dataclass(frozen=True, order=True)
class Arrow:
    name: str
    dom: str
    cod: str

    def __repr__(self):
        return f"Arrow({self.name}: {self.dom} -> {self.cod})"


@dataclass(frozen=True)
class Violation:
    """One broken axiom plus the witness that breaks it."""

    axiom: str  # totality | typing | identity | associativity | reflexivity | transitivity | antisymmetry
    witness: tuple[str, ...]
    detail: str

    def __str__(self):
        return f"{self.axiom}{self.witness}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self):
        if self.ok:
            return "ok"
        return "; ".join(str(v) for v in self.violations)


def identity_name(obj: str) -> str:
    return ID_PREFIX + obj


class FiniteCategory:
    """A finite category given extensionally.

    ``arrows`` are the user-declared (non-identity) arrows; ``composition``
    maps composable non-identity pairs ``(f, g)`` with cod(f) = dom(g) to the
    name of "f then g". Identities and identity-involving table entries are
    generated here and may not be supplied. Construction only resolves names
    and fills the table; the category axioms are checked by
    :func:`validate_category`.
    """

    def __init__(self, objects, arrows=(), composition=None, allow_large=False):
        objs = sorted(objects)
        if len(set(objs)) != len(objs):
            raise InputError("duplicate object name")
        for o in objs:
            check_ident(o, "object")
        if not allow_large and len(objs) > MAX_OBJECTS:
            raise InputError(
                f"{len(objs)} objects exceeds the cap of {MAX_OBJECTS}; "
                "pass allow_large=True to override"
            )
        self.objects: tuple[str, ...] = tuple(objs)
        obj_set = set(objs)

        by_name: dict[str, Arrow] = {}
        for arr in arrows:
            check_ident(arr.name, "arrow")
            if arr.name.startswith(ID_PREFIX):
                raise InputError(
                    f"arrow {arr.name!r}: the {ID_PREFIX!r} prefix is reserved "
                    "for auto-generated identities"
                )
            if arr.name in by_name:
                raise InputError(f"duplicate arrow name {arr.name!r}")
            if arr.dom not in obj_set:
                raise InputError(f"arrow {arr.name!r}: unknown object {arr.dom!r}")
            if arr.cod not in obj_set:
                raise InputError(f"arrow {arr.name!r}: unknown object {arr.cod!r}")
            by_name[arr.name] = arr
        for o in objs:
            ident = Arrow(identity_name(o), o, o)
            if ident.name in by_name:  # unreachable given the prefix check
                raise InputError(f"duplicate arrow name {ident.name!r}")
            by_name[ident.name] = ident
        if not allow_large and len(by_name) > MAX_ARROWS:
            raise InputError(
                f"{len(by_name)} arrows exceeds the cap of {MAX_ARROWS}; "
                "pass allow_large=True to override"
            )
        self.arrows: dict[str, Arrow] = dict(sorted(by_name.items()))

        table: dict[tuple[str, str], str] = {}
        for (f, g), h in (composition or {}).items():
            for name in (f, g, h):
                if name not in self.arrows:
                    raise InputError(f"composition entry refers to unknown arrow {name!r}")
            if f.startswith(ID_PREFIX) or g.startswith(ID_PREFIX):
                raise InputError(
                    f"composition entry ({f}, {g}) involves an identity; "
                    "identity composites are implied"
                )
            table[(f, g)] = h
        # implied identity entries: id;f = f, f;id = f
        for arr in self.arrows.values():
            table[(identity_name(arr.dom), arr.name)] = arr.name
            if not arr.name.startswith(ID_PREFIX):
                table[(arr.name, identity_name(arr.cod))] = arr.name
        self.table: dict[tuple[str, str], str] = table

        hom: dict[tuple[str, str], list[Arrow]] = {}
        for arr in self.arrows.values():
            hom.setdefault((arr.dom, arr.cod), []).append(arr)
        self._hom = {k: tuple(sorted(v)) for k, v in hom.items()}

    def arrow(self, name: str) -> Arrow:
        try:
            return self.arrows[name]
        except KeyError:
            raise InputError(f"unknown arrow {name!r}") from None

    def has_object(self, name: str) -> bool:
        return name in set(self.objects)

    def require_object(self, name: str) -> str:
        if name not in self.objects:
            raise InputError(f"unknown object {name!r}")
        return name

    def compose(self, f: str, g: str) -> str:
        """Name of "f then g". Raises InputError on a non-composable pair,
        KeyError never (missing entries are a totality violation instead)."""
        fa, ga = self.arrow(f), self.arrow(g)
        if fa.cod != ga.dom:
            raise InputError(f"arrows {f!r} and {g!r} are not composable")
        h = self.table.get((f, g))
        if h is None:
            raise InputError(f"composition table has no entry for ({f}, {g})")
        return h

    def composable_pairs(self, include_identities=False):
        for f in self.arrows.values():
            for g in self._hom_from(f.cod):
                if not include_identities and (
                    f.name.startswith(ID_PREFIX) or g.name.startswith(ID_PREFIX)
                ):
                    continue
                yield f, g

    def _hom_from(self, obj):
        for arr in self.arrows.values():
            if arr.dom == obj:
                yield arr

    def user_arrows(self):
        return tuple(a for a in self.arrows.values() if not a.name.startswith(ID_PREFIX))

    def user_table(self):
        """The declared part of the table (identity-involving entries dropped)."""
        return {
            (f, g): h
            for (f, g), h in self.table.items()
            if not f.startswith(ID_PREFIX) and not g.startswith(ID_PREFIX)
        }

    def __eq__(self, other):
        if not isinstance(other, FiniteCategory):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.arrows == other.arrows
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.objects, tuple(self.arrows), tuple(sorted(self.table.items()))))

    def __repr__(self):
        return f"FiniteCategory({len(self.objects)} objects, {len(self.arrows)} arrows)"


def hom_set(c: FiniteCategory, x: str, y: str) -> tuple[Arrow, ...]:
    """All arrows x -> y, sorted by name."""
    c.require_object(x)
    c.require_object(y)
    return c._hom.get((x, y), ())


def validate_category(c: FiniteCategory, fail_fast: bool = False) -> ValidationReport:
    """Check typing, totality, identity laws and associativity.

    Every violation is reported with a concrete witness; the list is sorted
    so the lexicographically first witness comes first. Associativity triples
    touching a missing entry are skipped (the totality violation already
    covers them), and triples involving identities hold whenever the identity
    laws do, so only identity-free triples are enumerated.

    With ``fail_fast`` the check stops at the first violation (phase
    order: typing, totality, identity, associativity); the report is then
    partial but nonempty iff the category is invalid.
    """
    violations = []

    def phase_done():
        return fail_fast and violations

    for (f, g), h in c.table.items():
        if phase_done():
            break
        fa, ga = c.arrows[f], c.arrows[g]
        ha = c.arrows.get(h)
        if ha is None:  # unreachable via the constructor, kept for safety
            violations.append(Violation("typing", (f, g), f"entry names unknown arrow {h!r}"))
            continue
        if fa.cod != ga.dom:
            violations.append(
                Violation("typing", (f, g), f"pair is not composable (cod {fa.cod} != dom {ga.dom})")
            )
            continue
        if ha.dom != fa.dom or ha.cod != ga.cod:
            violations.append(
                Violation(
                    "typing",
                    (f, g),
                    f"({f} then {g}) = {h} has type {ha.dom} -> {ha.cod}, "
                    f"expected {fa.dom} -> {ga.cod}",
                )
            )

    if phase_done():
        return ValidationReport(tuple(sorted(violations, key=lambda v: (v.axiom, v.witness))))

    for f, g in c.composable_pairs():
        if phase_done():
            break
        if (f.name, g.name) not in c.table:
            violations.append(
                Violation("totality", (f.name, g.name), "composable pair has no table entry")
            )

    if phase_done():
        return ValidationReport(tuple(sorted(violations, key=lambda v: (v.axiom, v.witness))))

    for arr in c.arrows.values():
        if phase_done():
            break
        left = c.table.get((identity_name(arr.dom), arr.name))
        if left != arr.name:
            violations.append(
                Violation("identity", (arr.name,), f"id_{arr.dom} then {arr.name} = {left}")
            )
        right = c.table.get((arr.name, identity_name(arr.cod)))
        if right != arr.name:
            violations.append(
                Violation("identity", (arr.name,), f"{arr.name} then id_{arr.cod} = {right}")
            )

    if phase_done():
        return ValidationReport(tuple(sorted(violations, key=lambda v: (v.axiom, v.witness))))

    for f, g in c.composable_pairs():
        if phase_done():
            break
        fg = c.table.get((f.name, g.name))
        if fg is None or fg not in c.arrows:
            continue
        for h in c._hom_from(g.cod):
            if h.name.startswith(ID_PREFIX):
                continue
            gh = c.table.get((g.name, h.name))
            if gh is None or gh not in c.arrows:
                continue
            lhs = c.table.get((fg, h.name))
            rhs = c.table.get((f.name, gh))
            if lhs is None or rhs is None:
                continue
            if lhs != rhs:
                violations.append(
                    Violation(
                        "associativity",
                        (f.name, g.name, h.name),
                        f"({f.name} then {g.name}) then {h.name} = {lhs} but "
                        f"{f.name} then ({g.name} then {h.name}) = {rhs}",
                    )
                )

    violations.sort(key=lambda v: (v.axiom, v.witness))
    return ValidationReport(tuple(violations))


def is_isomorphism(c: FiniteCategory, f) -> tuple[bool, Arrow | None]:
    """Whether f has a two-sided inverse; returns it when present."""
    fa = f if isinstance(f, Arrow) else c.arrow(f)
    if c.arrows.get(fa.name) != fa:
        raise InputError(f"unknown arrow {fa.name!r}")
    for g in hom_set(c, fa.cod, fa.dom):
        if (
            c.table.get((fa.name, g.name)) == identity_name(fa.dom)
            and c.table.get((g.name, fa.name)) == identity_name(fa.cod)
        ):
            return True, g
    return False, None


def opposite_category(c: FiniteCategory) -> FiniteCategory:
    """Reverse every arrow; the table transposes: (f then g)^op = g^op then f^op."""
    arrows = [Arrow(a.name, a.cod, a.dom) for a in c.user_arrows()]
    table = {(g, f): h for (f, g), h in c.user_table().items()}
    return FiniteCategory(c.objects, arrows, table, allow_large=True)


def total_composition_for_thin(objects, leq) -> tuple[list[Arrow], dict]:
    """Arrows and table of the thin category of a reflexive-transitive ``leq``.

    ``leq`` is a predicate on object pairs. One arrow ``a_<x>_<y>`` per
    related pair x != y; composition is forced by thinness.
    """
    arrows = []
    names = {}
    for x, y in itertools.product(objects, repeat=2):
        if x != y and leq(x, y):
            name = f"a_{x}_{y}"
            names[(x, y)] = name
            arrows.append(Arrow(name, x, y))
    table = {}
    for (x, y), f in names.items():
        for (y2, z), g in names.items():
            if y2 != y:
                continue
            table[(f, g)] = identity_name(x) if x == z else names[(x, z)]
    return arrows, table
