"""Command-line front end.

Subcommands:

    validate <file.ump>        parse + axiom-check a document
    check <definition> ...     one candidate, one verdict
    find <definition> ...      every passing candidate
    gen <kind> ...             seeded instance, written as DSL text

Definitions: strict, preorder, ump, property, compact (element
universality); product, coproduct, terminal, initial (categorical).
Kinds: poset, doubled, monoid, preorder, relation, predicate.

Exit codes: 0 the property holds (or the file validates), 1 it does not
(a Report with holds=false is still printed), 2 bad input or usage.
Every check/find prints a single-line JSON Report on stdout with the
fields holds, definition, candidate, failing_clause, counterexample,
rivals, elapsed_ms, in that order; a human summary goes to stderr.
Output is byte-identical across runs apart from elapsed_ms.

Structures are looked up by name in the document given with --file, or
in the shipped fixtures (d12, five, nat100 families) when --file is
absent. Cones are written apex:leg_a,leg_b in reports; coproduct
candidates and witnesses use the opposite orientation throughout.
"""

import argparse
import json
import sys
import time
from pathlib import Path

from .category import hom_set
from .dsl import Bundle, load_builtin_bundle, parse_document, serialize
from .errors import AxiomError, InputError, ParseError
from .genlab import (
    gen_doubled_poset_category,
    gen_monoid_category,
    gen_poset_category,
    gen_predicate,
    gen_preorder,
    gen_relation,
)
from .products import (
    check_coproduct,
    check_product,
    cocone,
    cone,
    enumerate_cones,
    is_initial,
    is_terminal,
    opposite_category,
)
from .universality import (
    FIND_DEFINITIONS,
    find_universal,
    is_p_universal,
    is_p_universal_compact,
    is_q_ump_universal,
    is_r_universal_preorder,
    is_r_universal_strict,
)

ELEMENT_DEFINITIONS = FIND_DEFINITIONS
CATEGORY_DEFINITIONS = ("product", "coproduct", "terminal", "initial")


def _report(definition, candidate, holds, failing_clause, counterexample,
            rivals, elapsed_ms):
    return {
        "holds": holds,
        "definition": definition,
        "candidate": candidate,
        "failing_clause": failing_clause,
        "counterexample": counterexample,
        "rivals": list(rivals),
        "elapsed_ms": elapsed_ms,
    }


def _emit(report, summary):
    print(json.dumps(report, separators=(", ", ": ")))
    print(summary, file=sys.stderr)
    return 0 if report["holds"] else 1


def _load_bundle(args) -> Bundle:
    if getattr(args, "file", None) is None:
        return load_builtin_bundle()
    path = Path(args.file)
    try:
        # latin-1 never fails; stray high bytes surface as the parser's
        # own line-numbered non-ASCII diagnostic instead
        text = path.read_text(encoding="latin-1")
    except FileNotFoundError:
        raise InputError(f"{path}: no such file") from None
    except IsADirectoryError as exc:
        raise InputError(f"{path}: {exc}") from None
    try:
        return parse_document(text)
    except ParseError as exc:
        exc.message = f"{path}: {exc.message}"
        exc.args = (f"{path}: {exc.args[0]}",)
        raise


def _pick(mapping, name, what, flag):
    if name is None:
        raise InputError(f"check/find {what}: missing {flag}")
    value = mapping.get(name)
    if value is None:
        have = ", ".join(sorted(mapping)) or "none"
        raise InputError(f"unknown {what} '{name}' (available: {have})")
    return value


def _cone_str(k):
    return f"{k.apex}:{k.leg_a.name},{k.leg_b.name}"


# --------------------------------------------------------------------------
# subcommand: validate

def cmd_validate(args) -> int:
    path = Path(args.file)
    try:
        text = path.read_text(encoding="latin-1")
    except OSError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return 2
    t0 = time.perf_counter()
    try:
        bundle = parse_document(text)
    except AxiomError as exc:
        ms = int((time.perf_counter() - t0) * 1000)
        report = _report("validate", None, False, "axiom", exc.message, [], ms)
        _emit(report, f"invalid: {path}: {exc.message}")
        return 1
    except ParseError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return 2
    ms = int((time.perf_counter() - t0) * 1000)
    names = bundle.names()
    counts = ", ".join(
        f"{len(getattr(bundle, kind))} {kind}"
        for kind in ("sets", "categories", "relations", "preorders", "predicates")
        if getattr(bundle, kind)
    )
    report = _report("validate", None, True, None, None, sorted(names), ms)
    return _emit(report, f"valid: {path}: {counts or 'empty document'}")


# --------------------------------------------------------------------------
# subcommands: check / find over elements

def _element_verdict(args, bundle, definition, candidate):
    if definition == "strict":
        r = _pick(bundle.relations, args.relation, "relation", "--relation")
        return is_r_universal_strict(r, candidate, args.exclude_self)
    if definition == "preorder":
        r = _pick(bundle.relations, args.relation, "relation", "--relation")
        p = _pick(bundle.preorders, args.preorder, "preorder", "--preorder")
        return is_r_universal_preorder(r, p, candidate, args.exclude_self)
    if definition == "ump":
        q = _pick(bundle.relations, args.relation, "relation", "--relation")
        p = _pick(bundle.preorders, args.preorder, "preorder", "--preorder")
        return is_q_ump_universal(q, p, candidate, args.dual)
    if definition == "property":
        pred = _pick(bundle.predicates, args.predicate, "predicate", "--predicate")
        p = _pick(bundle.preorders, args.preorder, "preorder", "--preorder")
        if args.phi is None:
            raise InputError("check/find property: missing --phi")
        consequent = ("geq" if args.dual else "leq") if args.ump else None
        if args.dual and not args.ump:
            raise InputError("--dual on property requires --ump")
        return is_p_universal(pred, args.phi, p, candidate, consequent=consequent)
    pred = _pick(bundle.predicates, args.predicate, "predicate", "--predicate")
    p = _pick(bundle.preorders, args.preorder, "preorder", "--preorder")
    return is_p_universal_compact(pred, p, candidate, args.dual)


def _element_find(args, bundle, definition):
    needs_relation = definition in ("strict", "preorder", "ump")
    needs_preorder = definition != "strict"
    needs_predicate = definition in ("property", "compact")
    consequent = None
    if definition == "property":
        if args.phi is None:
            raise InputError("check/find property: missing --phi")
        if args.dual and not args.ump:
            raise InputError("--dual on property requires --ump")
        consequent = ("geq" if args.dual else "leq") if args.ump else None
    return find_universal(
        definition,
        relation=_pick(bundle.relations, args.relation, "relation", "--relation")
        if needs_relation
        else None,
        preorder=_pick(bundle.preorders, args.preorder, "preorder", "--preorder")
        if needs_preorder
        else None,
        predicate=_pick(
            bundle.predicates, args.predicate, "predicate", "--predicate"
        )
        if needs_predicate
        else None,
        phi=args.phi,
        exclude_self=args.exclude_self,
        dual=args.dual,
        consequent=consequent,
    )


# --------------------------------------------------------------------------
# subcommands: check / find over categories

def _category_check(args, bundle, definition):
    c = _pick(bundle.categories, args.category, "category", "--category")
    if definition in ("terminal", "initial"):
        if args.object is None:
            raise InputError(f"check {definition}: missing --object")
        probe = is_terminal if definition == "terminal" else is_initial
        ok, witness = probe(c, args.object)
        if ok:
            direction = "from" if definition == "terminal" else "to"
            return args.object, True, None, None, f"unique arrow {direction} every object"
        count = (
            len(hom_set(c, witness, args.object))
            if definition == "terminal"
            else len(hom_set(c, args.object, witness))
        )
        clause = "existence" if count == 0 else "uniqueness"
        return args.object, False, clause, witness, f"{count} arrows at {witness}"
    for flag in ("apex", "leg_a", "leg_b"):
        if getattr(args, flag) is None:
            raise InputError(
                f"check {definition}: missing --{flag.replace('_', '-')}"
            )
    if definition == "product":
        cand = cone(c, args.apex, args.leg_a, args.leg_b)
        result = check_product(c, cand)
    else:
        cand = cocone(c, args.apex, args.leg_a, args.leg_b)
        result = check_coproduct(c, cand)
    if result.ok:
        return (
            _cone_str(cand),
            True,
            None,
            None,
            f"certificate size {len(result.mediators)}",
        )
    clause = "existence" if result.mediator_count == 0 else "uniqueness"
    return (
        _cone_str(cand),
        False,
        clause,
        _cone_str(result.cone),
        f"cone {_cone_str(result.cone)} has {result.mediator_count} mediators",
    )


def _category_find(args, bundle, definition):
    c = _pick(bundle.categories, args.category, "category", "--category")
    if definition in ("terminal", "initial"):
        probe = is_terminal if definition == "terminal" else is_initial
        return [x for x in c.objects if probe(c, x)[0]]
    for flag in ("factor_a", "factor_b"):
        if getattr(args, flag) is None:
            raise InputError(
                f"find {definition}: missing --{flag.replace('_', '-')}"
            )
    scope = c if definition == "product" else opposite_category(c)
    checker = check_product
    return [
        _cone_str(k)
        for k in enumerate_cones(scope, args.factor_a, args.factor_b)
        if checker(scope, k).ok
    ]


def cmd_check(args) -> int:
    bundle = _load_bundle(args)
    definition = args.definition
    t0 = time.perf_counter()
    if definition in ELEMENT_DEFINITIONS:
        if args.candidate is None:
            raise InputError(f"check {definition}: missing --candidate")
        verdict = _element_verdict(args, bundle, definition, args.candidate)
        ms = int((time.perf_counter() - t0) * 1000)
        report = _report(
            definition,
            args.candidate,
            verdict.holds,
            verdict.failing_clause,
            verdict.counterexample,
            verdict.rival_witnesses,
            ms,
        )
        if verdict.holds:
            extra = (
                f" ({len(verdict.rival_witnesses)} equivalent rivals)"
                if verdict.rival_witnesses
                else ""
            )
            summary = f"{definition}: {args.candidate} is universal{extra}"
        else:
            summary = (
                f"{definition}: {args.candidate} is not universal; "
                f"{verdict.failing_clause} fails at {verdict.counterexample}"
            )
        return _emit(report, summary)
    candidate, holds, clause, counterexample, detail = _category_check(
        args, bundle, definition
    )
    ms = int((time.perf_counter() - t0) * 1000)
    report = _report(definition, candidate, holds, clause, counterexample, [], ms)
    state = "holds" if holds else f"fails ({clause})"
    return _emit(report, f"{definition}: {candidate} {state}; {detail}")


def cmd_find(args) -> int:
    bundle = _load_bundle(args)
    definition = args.definition
    t0 = time.perf_counter()
    if definition in ELEMENT_DEFINITIONS:
        found = list(_element_find(args, bundle, definition))
    else:
        found = _category_find(args, bundle, definition)
    ms = int((time.perf_counter() - t0) * 1000)
    report = _report(definition, None, bool(found), None, None, found, ms)
    noun = "candidates" if len(found) != 1 else "candidate"
    return _emit(report, f"find {definition}: {len(found)} {noun}: {found}")


# --------------------------------------------------------------------------
# subcommand: gen

def cmd_gen(args) -> int:
    kind, seed, n = args.kind, args.seed, args.n
    if kind == "poset":
        bundle = Bundle(categories={"poset": gen_poset_category(seed, n, args.density)})
    elif kind == "doubled":
        bundle = Bundle(
            categories={"doubled": gen_doubled_poset_category(seed, n, args.density)}
        )
    elif kind == "monoid":
        bundle = Bundle(categories={"monoid": gen_monoid_category(seed, n)})
    else:
        if kind == "preorder":
            value = gen_preorder(seed, n, args.density, args.method)
            bundle = Bundle(
                sets={"carrier": value.carrier},
                preorders={"p": value},
                carrier_refs={"p": ("set", "carrier")},
            )
        elif kind == "relation":
            value = gen_relation(seed, n, args.density)
            bundle = Bundle(
                sets={"carrier": value.carrier},
                relations={"r": value},
                carrier_refs={"r": ("set", "carrier")},
            )
        else:
            value = gen_predicate(seed, n, args.density)
            bundle = Bundle(
                sets={"carrier": value.carrier},
                predicates={"q": value},
                carrier_refs={"q": ("set", "carrier")},
            )
    text = serialize(bundle)
    sys.stdout.write(text)
    names = bundle.names()
    print(
        f"gen {kind}: seed {seed}, n {n}: {', '.join(sorted(names))}",
        file=sys.stderr,
    )
    return 0


# --------------------------------------------------------------------------
# argument wiring

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="umpcheck",
        description="Exhaustive universality and universal-mapping-property "
        "checks over finite carriers and finite categories.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_val = sub.add_parser("validate", help="parse and axiom-check a document")
    p_val.add_argument("file", help="path to a .ump document")
    p_val.set_defaults(handler=cmd_validate)

    def common_check_flags(p, with_candidate):
        p.add_argument("--file", help="document to load (default: shipped fixtures)")
        p.add_argument("--relation", help="relation name")
        p.add_argument("--preorder", help="preorder name")
        p.add_argument("--predicate", help="predicate name")
        p.add_argument("--phi", help="formula over Pa, Pb (e.g. 'Pa & Pb')")
        if with_candidate:
            p.add_argument("--candidate", help="element to check")
        p.add_argument(
            "--exclude-self",
            action="store_true",
            help="drop x = candidate from the membership quantifier "
            "(and x = rival from each rival's)",
        )
        p.add_argument(
            "--dual",
            action="store_true",
            help="use the reversed order (ump, compact; property with --ump)",
        )
        p.add_argument(
            "--ump",
            action="store_true",
            help="property only: attach the order consequent, "
            "R(a,b) := phi(P(a),P(b)) => a <= b",
        )
        p.add_argument("--category", help="category name")
        p.add_argument("--object", help="object to check (terminal/initial)")

    p_chk = sub.add_parser("check", help="check one candidate")
    p_chk.add_argument(
        "definition", choices=ELEMENT_DEFINITIONS + CATEGORY_DEFINITIONS
    )
    common_check_flags(p_chk, with_candidate=True)
    p_chk.add_argument("--apex", help="cone apex (product/coproduct)")
    p_chk.add_argument("--leg-a", dest="leg_a", help="first leg arrow name")
    p_chk.add_argument("--leg-b", dest="leg_b", help="second leg arrow name")
    p_chk.set_defaults(handler=cmd_check)

    p_find = sub.add_parser("find", help="list every passing candidate")
    p_find.add_argument(
        "definition", choices=ELEMENT_DEFINITIONS + CATEGORY_DEFINITIONS
    )
    common_check_flags(p_find, with_candidate=False)
    p_find.add_argument("--factor-a", dest="factor_a", help="first factor object")
    p_find.add_argument("--factor-b", dest="factor_b", help="second factor object")
    p_find.set_defaults(handler=cmd_find)

    p_gen = sub.add_parser("gen", help="emit a seeded instance as DSL text")
    p_gen.add_argument(
        "kind",
        choices=("poset", "doubled", "monoid", "preorder", "relation", "predicate"),
    )
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument(
        "--density", type=float, default=0.5, help="inclusion density (default 0.5)"
    )
    p_gen.add_argument(
        "--method",
        choices=("closure", "quotient"),
        default="closure",
        help="preorder construction (default closure)",
    )
    p_gen.set_defaults(handler=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
