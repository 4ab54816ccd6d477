"""Finite binary relations, preorders, and the quotient-order construction.

Relations are extensional: a carrier (canonically sorted element names) plus
a set of ordered pairs. A Preorder is a BinaryRelation whose reflexivity and
transitivity have been checked at construction.
"""

from dataclasses import dataclass, field

from .category import ValidationReport, Violation, check_ident
from .errors import InputError


@dataclass(frozen=True)
class Carrier:
    elements: tuple[str, ...]

    def __init__(self, elements):
        elems = sorted(elements)
        if not elems:
            raise InputError("carrier must be non-empty")
        if len(set(elems)) != len(elems):
            raise InputError("duplicate carrier element")
        for e in elems:
            check_ident(e, "element")
        object.__setattr__(self, "elements", tuple(elems))

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __len__(self):
        return len(self.elements)

    def require(self, x: str) -> str:
        if x not in self.elements:
            raise InputError(f"unknown element {x!r}")
        return x


@dataclass(frozen=True)
class BinaryRelation:
    carrier: Carrier
    pairs: frozenset

    def __init__(self, carrier, pairs):
        if not isinstance(carrier, Carrier):
            carrier = Carrier(carrier)
        pairs = frozenset((a, b) for a, b in pairs)
        for a, b in pairs:
            if a not in carrier or b not in carrier:
                raise InputError(f"pair ({a!r}, {b!r}) falls outside the carrier")
        object.__setattr__(self, "carrier", carrier)
        object.__setattr__(self, "pairs", pairs)

    def has(self, a: str, b: str) -> bool:
        return (a, b) in self.pairs

    def sorted_pairs(self):
        return sorted(self.pairs)


class Preorder(BinaryRelation):
    """A reflexive transitive BinaryRelation; axioms checked on construction."""

    def __init__(self, carrier, pairs):
        super().__init__(carrier, pairs)
        report = validate_preorder(BinaryRelation(self.carrier, self.pairs))
        if not report.ok:
            raise InputError(f"not a preorder: {report.violations[0]}")

    @classmethod
    def from_relation(cls, r: BinaryRelation) -> "Preorder":
        return cls(r.carrier, r.pairs)

    def leq(self, a: str, b: str) -> bool:
        return (a, b) in self.pairs

    def equivalent(self, a: str, b: str) -> bool:
        return (a, b) in self.pairs and (b, a) in self.pairs


@dataclass(frozen=True)
class EquivalenceClasses:
    """A partition of a carrier; blocks and their elements canonically sorted."""

    carrier: Carrier
    blocks: tuple[tuple[str, ...], ...]
    _index: dict = field(compare=False, repr=False, default=None)

    def __init__(self, carrier, blocks):
        if not isinstance(carrier, Carrier):
            carrier = Carrier(carrier)
        norm = tuple(sorted(tuple(sorted(b)) for b in blocks))
        seen: dict[str, int] = {}
        for i, block in enumerate(norm):
            if not block:
                raise InputError("empty block")
            for x in block:
                carrier.require(x)
                if x in seen:
                    raise InputError(f"element {x!r} appears in two blocks")
                seen[x] = i
        if len(seen) != len(carrier):
            missing = sorted(set(carrier.elements) - set(seen))
            raise InputError(f"blocks do not cover the carrier (missing {missing[0]!r})")
        object.__setattr__(self, "carrier", carrier)
        object.__setattr__(self, "blocks", norm)
        object.__setattr__(self, "_index", seen)

    def block_of(self, x: str) -> tuple[str, ...]:
        self.carrier.require(x)
        return self.blocks[self._index[x]]

    def same_block(self, a: str, b: str) -> bool:
        return self._index[self.carrier.require(a)] == self._index[self.carrier.require(b)]

    def representatives(self) -> tuple[str, ...]:
        return tuple(b[0] for b in self.blocks)


def validate_preorder(r: BinaryRelation) -> ValidationReport:
    """Empty report iff r is reflexive and transitive; witnesses otherwise."""
    violations = []
    for a in r.carrier:
        if (a, a) not in r.pairs:
            violations.append(Violation("reflexivity", (a,), f"({a}, {a}) missing"))
    for a, b in r.sorted_pairs():
        for b2, c in r.sorted_pairs():
            if b2 == b and (a, c) not in r.pairs:
                violations.append(
                    Violation(
                        "transitivity",
                        (a, b, c),
                        f"({a}, {b}) and ({b}, {c}) present but ({a}, {c}) missing",
                    )
                )
    violations.sort(key=lambda v: (v.axiom, v.witness))
    return ValidationReport(tuple(violations))


def induced_equivalence(p: Preorder) -> EquivalenceClasses:
    """Blocks of mutual comparability: a, b share a block iff a <= b and b <= a."""
    elems = list(p.carrier)
    blocks = []
    for a in elems:
        for block in blocks:
            rep = block[0]
            if p.equivalent(a, rep):
                block.append(a)
                break
        else:
            blocks.append([a])
    classes = EquivalenceClasses(p.carrier, [tuple(b) for b in blocks])
    # sanity: the induced relation must be an equivalence; impossible to
    # break for a valid preorder
    for a in elems:
        assert classes.same_block(a, a)
    for a, b in p.pairs:
        if p.equivalent(a, b):
            assert classes.same_block(a, b) and classes.same_block(b, a)
    return classes


def validate_partial_order(r: BinaryRelation) -> ValidationReport:
    """Partial order = preorder + antisymmetry; witnesses per failing axiom."""
    violations = list(validate_preorder(r).violations)
    for a, b in r.sorted_pairs():
        if a < b and (b, a) in r.pairs:
            violations.append(
                Violation("antisymmetry", (a, b), "distinct elements comparable both ways")
            )
    violations.sort(key=lambda v: (v.axiom, v.witness))
    return ValidationReport(tuple(violations))


def preorder_from_quotient_order(classes: EquivalenceClasses, leq: BinaryRelation) -> Preorder:
    """Expand a partial order on blocks to the preorder a <= b iff [a] <= [b].

    ``leq`` is given on the blocks' canonical representatives (the least
    element of each block). Fails with the offending witness if ``leq`` is
    not a partial order or its carrier is not exactly the representatives.
    """
    reps = classes.representatives()
    if tuple(leq.carrier) != tuple(sorted(reps)):
        raise InputError(
            "block order carrier must be exactly the block representatives "
            f"{sorted(reps)}, got {list(leq.carrier)}"
        )
    report = validate_partial_order(leq)
    if not report.ok:
        raise InputError(f"block order is not a partial order: {report.violations[0]}")
    rep_of = {x: classes.block_of(x)[0] for x in classes.carrier}
    pairs = {
        (a, b)
        for a in classes.carrier
        for b in classes.carrier
        if (rep_of[a], rep_of[b]) in leq.pairs
    }
    return Preorder(classes.carrier, pairs)


def reverse(r: BinaryRelation) -> BinaryRelation:
    """Transpose; preserves the concrete type, so a Preorder reverses to a Preorder."""
    cls = Preorder if isinstance(r, Preorder) else BinaryRelation
    return cls(r.carrier, {(b, a) for a, b in r.pairs})


def reflexive_transitive_closure(r: BinaryRelation) -> Preorder:
    pairs = set(r.pairs)
    pairs.update((a, a) for a in r.carrier)
    changed = True
    while changed:
        changed = False
        for a, b in list(pairs):
            for b2, c in list(pairs):
                if b2 == b and (a, c) not in pairs:
                    pairs.add((a, c))
                    changed = True
    return Preorder(r.carrier, pairs)


def equality_preorder(carrier) -> Preorder:
    if not isinstance(carrier, Carrier):
        carrier = Carrier(carrier)
    return Preorder(carrier, {(a, a) for a in carrier})


def total_relation(carrier) -> BinaryRelation:
    if not isinstance(carrier, Carrier):
        carrier = Carrier(carrier)
    return BinaryRelation(carrier, {(a, b) for a in carrier for b in carrier})
