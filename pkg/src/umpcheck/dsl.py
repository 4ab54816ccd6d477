"""The line-based document format: parsing, serialization, fixtures.

One record per line, `#` starts a comment, blank lines ignored:

    category <name>                     opens a category block
    object <name>                       adds an object to it
    arrow <name> : <dom> -> <cod>       adds an arrow
    compose <h> = <g> . <f>             table entry: h is "f then g"
    set <name>                          opens a carrier block
    element <name>                      adds an element to it
    relation <name> on <carrier>        opens a relation block
    preorder <name> on <carrier>        opens a preorder block
    pair <a> <b>                        adds a pair to either
    predicate <name> on <carrier>       opens a predicate block
    holds <a>                           marks an element

A `<carrier>` is a set name or `objects-of <category>`. Top-level names
share one namespace and must be declared before use. Identity arrows and
composition entries touching them are never written: the core model adds
them, and explicit ones are rejected. Input must be 7-bit ASCII.

A block ends at the next top-level record or at end of input; the
structure is built and checked there. Lawless categories and preorders
raise AxiomError (carrying the validator's witness); everything else
raises ParseError. Both carry 1-based line and column.

serialize() writes the canonical form: blocks ordered sets, categories,
relations, preorders, predicates, each kind sorted by name, declarations
sorted within each block, single spaces, one blank line between blocks.
parse(serialize(parse(t))) equals parse(t), and serialize is idempotent
on parsed output.
"""

import re
from dataclasses import dataclass, field
from importlib import resources

from .category import (
    Arrow,
    FiniteCategory,
    ID_PREFIX,
    IDENT_RE,
    validate_category,
)
from .errors import AxiomError, InputError, ParseError
from .orders import BinaryRelation, Carrier, Preorder, validate_preorder
from .universality import Predicate

TOP_LEVEL = ("category", "set", "relation", "preorder", "predicate")
_WORD = re.compile(r"\S+")


@dataclass(frozen=True, eq=True)
class Bundle:
    """Every named structure of one document, plus the carrier spelling
    (set name vs objects-of) each relation-like declaration used, which
    the extensional values cannot recover."""

    sets: dict = field(default_factory=dict)
    categories: dict = field(default_factory=dict)
    relations: dict = field(default_factory=dict)
    preorders: dict = field(default_factory=dict)
    predicates: dict = field(default_factory=dict)
    carrier_refs: dict = field(default_factory=dict)  # name -> (kind, name)

    def names(self):
        out = {}
        for kind in ("sets", "categories", "relations", "preorders", "predicates"):
            for name in getattr(self, kind):
                out[name] = kind
        return out


class _Block:
    """One open declaration accumulating its continuation lines."""

    def __init__(self, kind, name, line, carrier=None, carrier_ref=None):
        self.kind = kind
        self.name = name
        self.line = line
        self.carrier = carrier
        self.carrier_ref = carrier_ref
        self.objects = []
        self.object_set = set()
        self.arrows = []
        self.arrow_types = {}
        self.table = {}
        self.elements = []
        self.pairs = set()
        self.holds = set()


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.bundle = Bundle()
        self.block: _Block | None = None

    # -- small helpers ----------------------------------------------------

    def fail(self, message, line, column=1):
        raise ParseError(message, line, column)

    def token(self, parts, i, what, line):
        if i >= len(parts):
            self.fail(f"expected {what}", line.no, len(line.raw) + 1)
        return parts[i]

    def literal(self, parts, i, text, line):
        got = self.token(parts, i, f"'{text}'", line)
        if got[0] != text:
            self.fail(f"expected '{text}', got '{got[0]}'", line.no, got[1])
        return got

    def ident(self, parts, i, what, line):
        got = self.token(parts, i, f"{what} name", line)
        if not IDENT_RE.match(got[0]):
            self.fail(
                f"{what} name must match [A-Za-z0-9_]+, got '{got[0]}'",
                line.no,
                got[1],
            )
        return got

    def finish_line(self, parts, i, line):
        if i < len(parts):
            self.fail(f"unexpected trailing token '{parts[i][0]}'", line.no, parts[i][1])

    def declare(self, name, pos, line):
        known = self.bundle.names()
        if name in known:
            self.fail(
                f"name '{name}' already declared as a {known[name][:-1]}",
                line.no,
                pos,
            )

    # -- carrier references ------------------------------------------------

    def resolve_carrier(self, parts, i, line):
        """The tokens after 'on': a set name or objects-of <category>.
        Returns (Carrier, (kind, name), next_index)."""
        got = self.token(parts, i, "a carrier (set name or objects-of <category>)", line)
        word, pos = got
        if word == "objects-of":
            cat = self.ident(parts, i + 1, "category", line)
            c = self.bundle.categories.get(cat[0])
            if c is None:
                self.fail(f"unknown category '{cat[0]}'", line.no, cat[1])
            if not c.objects:
                self.fail(f"category '{cat[0]}' has no objects", line.no, cat[1])
            return Carrier(c.objects), ("objects-of", cat[0]), i + 2
        if not IDENT_RE.match(word):
            self.fail(
                f"carrier name must match [A-Za-z0-9_]+, got '{word}'", line.no, pos
            )
        s = self.bundle.sets.get(word)
        if s is None:
            self.fail(f"unknown set '{word}'", line.no, pos)
        return s, ("set", word), i + 1

    # -- block lifecycle ---------------------------------------------------

    def close_block(self):
        b, self.block = self.block, None
        if b is None:
            return
        if b.kind == "set":
            if not b.elements:
                self.fail(f"set '{b.name}' has no elements", b.line)
            self.bundle.sets[b.name] = Carrier(b.elements)
        elif b.kind == "category":
            try:
                c = FiniteCategory(b.objects, b.arrows, b.table)
            except InputError as exc:
                raise ParseError(str(exc), b.line) from exc
            report = validate_category(c, fail_fast=True)
            if not report.ok:
                v = report.violations[0]
                raise AxiomError(
                    f"category '{b.name}' breaks the {v.axiom} law: {v.detail}",
                    b.line,
                )
            self.bundle.categories[b.name] = c
        elif b.kind in ("relation", "preorder"):
            r = BinaryRelation(b.carrier, b.pairs)
            if b.kind == "preorder":
                report = validate_preorder(r)
                if not report.ok:
                    v = report.violations[0]
                    raise AxiomError(
                        f"preorder '{b.name}' breaks the {v.axiom} law: {v.detail}",
                        b.line,
                    )
                self.bundle.preorders[b.name] = Preorder(b.carrier, b.pairs)
            else:
                self.bundle.relations[b.name] = r
            self.bundle.carrier_refs[b.name] = b.carrier_ref
        elif b.kind == "predicate":
            self.bundle.predicates[b.name] = Predicate(b.carrier, b.holds)
            self.bundle.carrier_refs[b.name] = b.carrier_ref

    def need_block(self, kinds, keyword, line):
        if self.block is None or self.block.kind not in kinds:
            wanted = " or ".join(f"a {k}" for k in kinds)
            self.fail(
                f"'{keyword}' is only valid inside {wanted} block", line.no
            )
        return self.block

    # -- record handlers ---------------------------------------------------

    def on_top_level(self, kind, parts, line):
        self.close_block()
        name = self.ident(parts, 1, kind, line)
        self.declare(name[0], name[1], line)
        if kind in ("relation", "preorder", "predicate"):
            self.literal(parts, 2, "on", line)
            carrier, ref, nxt = self.resolve_carrier(parts, 3, line)
            self.finish_line(parts, nxt, line)
            self.block = _Block(kind, name[0], line.no, carrier, ref)
        else:
            self.finish_line(parts, 2, line)
            self.block = _Block(kind, name[0], line.no)

    def on_object(self, parts, line):
        b = self.need_block(("category",), "object", line)
        name = self.ident(parts, 1, "object", line)
        self.finish_line(parts, 2, line)
        if name[0] in b.object_set:
            self.fail(f"object '{name[0]}' already declared", line.no, name[1])
        b.objects.append(name[0])
        b.object_set.add(name[0])

    def on_arrow(self, parts, line):
        b = self.need_block(("category",), "arrow", line)
        name = self.ident(parts, 1, "arrow", line)
        self.literal(parts, 2, ":", line)
        dom = self.ident(parts, 3, "object", line)
        self.literal(parts, 4, "->", line)
        cod = self.ident(parts, 5, "object", line)
        self.finish_line(parts, 6, line)
        if name[0].startswith(ID_PREFIX):
            self.fail(
                "identity arrows are implicit; do not declare them", line.no, name[1]
            )
        for obj, pos in (dom, cod):
            if obj not in b.object_set:
                self.fail(f"unknown object {obj}", line.no, pos)
        if name[0] in b.arrow_types:
            self.fail(f"arrow '{name[0]}' already declared", line.no, name[1])
        b.arrows.append(Arrow(name[0], dom[0], cod[0]))
        b.arrow_types[name[0]] = (dom[0], cod[0])

    def on_compose(self, parts, line):
        b = self.need_block(("category",), "compose", line)
        h = self.ident(parts, 1, "arrow", line)
        self.literal(parts, 2, "=", line)
        g = self.ident(parts, 3, "arrow", line)
        self.literal(parts, 4, ".", line)
        f = self.ident(parts, 5, "arrow", line)
        self.finish_line(parts, 6, line)
        for name, pos in (g, f):
            if name.startswith(ID_PREFIX):
                self.fail(
                    "composition with an identity is implicit; do not declare it",
                    line.no,
                    pos,
                )
            if name not in b.arrow_types:
                self.fail(f"unknown arrow '{name}'", line.no, pos)
        # the composite itself may be an identity (mutually inverse pair)
        if h[0].startswith(ID_PREFIX):
            obj = h[0][len(ID_PREFIX):]
            if obj not in b.objects:
                self.fail(f"unknown arrow '{h[0]}'", line.no, h[1])
            hd = hc = obj
        elif h[0] not in b.arrow_types:
            self.fail(f"unknown arrow '{h[0]}'", line.no, h[1])
        else:
            hd, hc = b.arrow_types[h[0]]
        fd, fc = b.arrow_types[f[0]]
        gd, gc = b.arrow_types[g[0]]
        if fc != gd:
            self.fail(
                f"'{g[0]}' does not follow '{f[0]}': "
                f"{f[0]} ends at {fc}, {g[0]} starts at {gd}",
                line.no,
                g[1],
            )
        if (hd, hc) != (fd, gc):
            self.fail(
                f"composite '{h[0]}' must go {fd} -> {gc}, "
                f"but it goes {hd} -> {hc}",
                line.no,
                h[1],
            )
        if (f[0], g[0]) in b.table:
            self.fail(
                f"composition of '{f[0]}' then '{g[0]}' already given", line.no, h[1]
            )
        b.table[(f[0], g[0])] = h[0]

    def on_element(self, parts, line):
        b = self.need_block(("set",), "element", line)
        name = self.ident(parts, 1, "element", line)
        self.finish_line(parts, 2, line)
        if name[0] in b.elements:
            self.fail(f"element '{name[0]}' already declared", line.no, name[1])
        b.elements.append(name[0])

    def on_pair(self, parts, line):
        b = self.need_block(("relation", "preorder"), "pair", line)
        a = self.ident(parts, 1, "element", line)
        c = self.ident(parts, 2, "element", line)
        self.finish_line(parts, 3, line)
        for x, pos in (a, c):
            if x not in b.carrier:
                self.fail(
                    f"element '{x}' is not in the carrier of '{b.name}'",
                    line.no,
                    pos,
                )
        b.pairs.add((a[0], c[0]))

    def on_holds(self, parts, line):
        b = self.need_block(("predicate",), "holds", line)
        a = self.ident(parts, 1, "element", line)
        self.finish_line(parts, 2, line)
        if a[0] not in b.carrier:
            self.fail(
                f"element '{a[0]}' is not in the carrier of '{b.name}'",
                line.no,
                a[1],
            )
        b.holds.add(a[0])

    # -- driver --------------------------------------------------------------

    def parse(self) -> Bundle:
        handlers = {
            "object": self.on_object,
            "arrow": self.on_arrow,
            "compose": self.on_compose,
            "element": self.on_element,
            "pair": self.on_pair,
            "holds": self.on_holds,
        }
        for no, raw in enumerate(self.text.splitlines(), 1):
            for col, ch in enumerate(raw, 1):
                if ord(ch) > 126:
                    self.fail(f"non-ASCII character {ch!r}", no, col)
            code = raw.split("#", 1)[0]
            parts = [(m.group(), m.start() + 1) for m in _WORD.finditer(code)]
            if not parts:
                continue
            line = _SourceLine(no, raw)
            keyword = parts[0][0]
            if keyword in TOP_LEVEL:
                self.on_top_level(keyword, parts, line)
            elif keyword in handlers:
                handlers[keyword](parts, line)
            else:
                self.fail(
                    f"unknown record '{keyword}' (expected one of: "
                    "category, set, relation, preorder, predicate, object, "
                    "arrow, compose, element, pair, holds)",
                    no,
                    parts[0][1],
                )
        self.close_block()
        return self.bundle


@dataclass(frozen=True)
class _SourceLine:
    no: int
    raw: str


def parse_document(text: str) -> Bundle:
    """Parse one document into a Bundle; see the module docstring."""
    return _Parser(text).parse()


# --------------------------------------------------------------------------
# serialization

def _carrier_clause(bundle: Bundle, name: str) -> str:
    ref = bundle.carrier_refs.get(name)
    if ref is None:
        raise InputError(f"no carrier reference recorded for '{name}'")
    kind, target = ref
    return f"objects-of {target}" if kind == "objects-of" else target


def serialize(bundle: Bundle) -> str:
    """The canonical text of a bundle; see the module docstring."""
    blocks = []
    for name in sorted(bundle.sets):
        lines = [f"set {name}"]
        lines += [f"element {e}" for e in bundle.sets[name]]
        blocks.append(lines)
    for name in sorted(bundle.categories):
        c = bundle.categories[name]
        lines = [f"category {name}"]
        lines += [f"object {o}" for o in c.objects]
        lines += [
            f"arrow {a.name} : {a.dom} -> {a.cod}" for a in c.user_arrows()
        ]
        lines += sorted(
            f"compose {h} = {g} . {f}" for (f, g), h in c.user_table().items()
        )
        blocks.append(lines)
    for kind, mapping in (
        ("relation", bundle.relations),
        ("preorder", bundle.preorders),
    ):
        for name in sorted(mapping):
            r = mapping[name]
            lines = [f"{kind} {name} on {_carrier_clause(bundle, name)}"]
            lines += [f"pair {a} {b}" for a, b in r.sorted_pairs()]
            blocks.append(lines)
    for name in sorted(bundle.predicates):
        p = bundle.predicates[name]
        lines = [f"predicate {name} on {_carrier_clause(bundle, name)}"]
        lines += [f"holds {a}" for a in p.sorted_holds()]
        blocks.append(lines)
    return "\n\n".join("\n".join(lines) for lines in blocks) + "\n"


# --------------------------------------------------------------------------
# shipped fixtures

def fixture_text(name: str) -> str:
    """The raw text of one shipped fixture, e.g. 'd12.ump' or
    'golden/poset6.ump'."""
    root = resources.files(__package__) / "fixtures"
    target = root
    for part in name.split("/"):
        target = target / part
    try:
        return target.read_text(encoding="ascii")
    except (FileNotFoundError, NotADirectoryError):
        raise InputError(f"no fixture named {name!r}") from None


def builtin_fixture_names() -> tuple[str, ...]:
    """Top-level shipped fixtures (golden/ and errors/ excluded)."""
    root = resources.files(__package__) / "fixtures"
    return tuple(
        sorted(
            entry.name
            for entry in root.iterdir()
            if entry.is_file() and entry.name.endswith(".ump")
        )
    )


def load_builtin_bundle() -> Bundle:
    """All top-level shipped fixtures parsed as one document.

    Fixture files declare disjoint names, so concatenation is safe; this
    is what the CLI works against when no --file is given.
    """
    texts = [fixture_text(name) for name in builtin_fixture_names()]
    return parse_document("\n".join(texts))
