import itertools

import pytest

from umpcheck import (
    Arrow,
    BinaryRelation,
    Carrier,
    FiniteCategory,
    InputError,
    Predicate,
    Preorder,
    equality_preorder,
    find_universal,
    gen_predicate,
    gen_preorder,
    gen_relation,
    induced_equivalence,
    is_p_universal,
    is_p_universal_compact,
    is_q_ump_universal,
    is_r_universal_preorder,
    is_r_universal_strict,
    is_unique_arrow_universal,
    parse_phi,
    relation_from_property,
    reverse,
    total_relation,
    unique_isomorphism_witness,
)
from umpcheck.category import total_composition_for_thin
from umpcheck import divisor_poset_category


def carrier15():
    return Carrier([str(i) for i in range(1, 6)])


def rel(carrier, pred):
    return BinaryRelation(
        carrier, {(a, b) for a in carrier for b in carrier if pred(a, b)}
    )


def chain(carrier):
    return Preorder(
        carrier,
        {(a, b) for a in carrier for b in carrier if int(a) <= int(b)},
    )


# --------------------------------------------------------------------------
# phi formulas

def test_phi_truth_tables():
    cases = {
        "Pa": [(a, b, a) for a in (0, 1) for b in (0, 1)],
        "!Pa": [(a, b, not a) for a in (0, 1) for b in (0, 1)],
        "Pa & Pb": [(a, b, a and b) for a in (0, 1) for b in (0, 1)],
        "Pa | Pb": [(a, b, a or b) for a in (0, 1) for b in (0, 1)],
        "Pa -> Pb": [(a, b, (not a) or b) for a in (0, 1) for b in (0, 1)],
    }
    for text, rows in cases.items():
        f = parse_phi(text)
        for a, b, want in rows:
            assert f.evaluate(bool(a), bool(b)) == bool(want), (text, a, b)


def test_phi_implication_right_associative():
    # Pa -> Pb -> Pa  ==  Pa -> (Pb -> Pa), a tautology
    f = parse_phi("Pa -> Pb -> Pa")
    for a, b in itertools.product((False, True), repeat=2):
        assert f.evaluate(a, b)
    g = parse_phi("(Pa -> Pb) -> Pa")
    assert not g.evaluate(False, False)


def test_phi_and_or_left_associative_same_level():
    # & and | share one level: Pa | Pb & Pa == (Pa | Pb) & Pa
    f = parse_phi("Pa | Pb & Pa")
    assert not f.evaluate(False, True)
    assert f == parse_phi("(Pa | Pb) & Pa")


def test_phi_not_binds_tightest():
    f = parse_phi("!Pa & Pb")
    assert f == parse_phi("(!Pa) & Pb")
    assert f.evaluate(False, True)
    assert not parse_phi("!(Pa & Pb)").evaluate(True, True)


def test_phi_render_parse_stable():
    texts = [
        "Pa",
        "!(Pa | Pb)",
        "Pa -> Pb -> Pa & Pa",
        "(Pa -> Pb) -> !Pa | Pb",
        "!!Pa & (Pb | Pa) -> Pb",
    ]
    for t in texts:
        f = parse_phi(t)
        assert parse_phi(str(f)) == f
        for a, b in itertools.product((False, True), repeat=2):
            assert parse_phi(str(f)).evaluate(a, b) == f.evaluate(a, b)


def test_phi_parse_errors():
    for bad in ("", "Pa &", "Pc", "Pa -> ", "(Pa", "Pa Pb", "& Pa"):
        with pytest.raises(InputError):
            parse_phi(bad)


# --------------------------------------------------------------------------
# strict

def test_strict_geq_holds_without_flag():
    car = carrier15()
    geq = rel(car, lambda a, b: int(a) >= int(b))
    v = is_r_universal_strict(geq, "1")
    assert v.holds and v.rival_witnesses == ()


def test_strict_gt_needs_exclude_self():
    car = carrier15()
    gt = rel(car, lambda a, b: int(a) > int(b))
    assert is_r_universal_strict(gt, "1", exclude_self=True).holds
    v = is_r_universal_strict(gt, "1")
    assert not v.holds
    assert v.failing_clause == "membership" and v.counterexample == "1"


def test_strict_uniqueness_failure_lists_rivals():
    car = Carrier(["a", "b"])
    r = total_relation(car)
    v = is_r_universal_strict(r, "a")
    assert not v.holds
    assert v.failing_clause == "uniqueness"
    assert v.counterexample == "b" and v.rival_witnesses == ("b",)


def test_strict_unknown_candidate():
    with pytest.raises(InputError):
        is_r_universal_strict(total_relation(Carrier(["a"])), "z")


# --------------------------------------------------------------------------
# preorder-based

def test_preorder_equality_degenerates_to_strict():
    for seed in range(150):
        n = (seed % 8) + 1
        r = gen_relation(seed, n)
        eq = equality_preorder(r.carrier)
        for u in r.carrier:
            for flag in (False, True):
                a = is_r_universal_strict(r, u, flag)
                b = is_r_universal_preorder(r, eq, u, flag)
                assert a.holds == b.holds, (seed, u, flag)


def test_preorder_accepts_equivalent_rival():
    car = Carrier(["a", "b", "c"])
    # a and b equivalent, both below c
    p = Preorder(
        car,
        {("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "a"),
         ("a", "c"), ("b", "c")},
    )
    in_ab = rel(car, lambda x, y: y in ("a", "b"))
    v = is_r_universal_preorder(in_ab, p, "a")
    assert v.holds and v.rival_witnesses == ("b",)
    w = is_r_universal_preorder(in_ab, equality_preorder(car), "a")
    assert not w.holds and w.counterexample == "b"


def test_preorder_universal_pair_shares_block():
    # whenever the verdict holds, candidate and rivals sit in one block
    for seed in range(200):
        n = (seed % 8) + 1
        r = gen_relation(seed, n)
        p = gen_preorder(seed + 1, n, method=("closure", "quotient")[seed % 2])
        eq = induced_equivalence(p)
        for u in r.carrier:
            v = is_r_universal_preorder(r, p, u)
            if v.holds:
                for w in v.rival_witnesses:
                    assert eq.same_block(u, w)


def test_preorder_carrier_mismatch():
    r = total_relation(Carrier(["a"]))
    p = equality_preorder(Carrier(["a", "b"]))
    with pytest.raises(InputError):
        is_r_universal_preorder(r, p, "a")


# --------------------------------------------------------------------------
# entailment instance: equivalence-not-equality universality

def test_entailment_preorder_universality():
    # five formulas keyed by their models over assignments to (p, q);
    # a entails b iff models(a) is a subset of models(b)
    models = {
        "ff": frozenset(),
        "p": frozenset({"10", "11"}),
        "p_and_p": frozenset({"10", "11"}),
        "q": frozenset({"01", "11"}),
        "tt": frozenset({"00", "01", "10", "11"}),
    }
    car = Carrier(models)
    entails = rel(car, lambda a, b: models[a] <= models[b])
    p = Preorder(car, entails.pairs)
    # tt is entailed by everything and unique up to logical equivalence
    assert is_r_universal_preorder(entails, p, "tt").holds
    # p and p_and_p are equivalent but not universal
    assert induced_equivalence(p).same_block("p", "p_and_p")
    assert not is_r_universal_preorder(entails, p, "p").holds


# --------------------------------------------------------------------------
# ump form

def test_ump_total_q_picks_top():
    car = carrier15()
    q = total_relation(car)
    p = chain(car)
    assert is_q_ump_universal(q, p, "5").holds
    assert not is_q_ump_universal(q, p, "3").holds
    assert is_q_ump_universal(q, p, "1", dual=True).holds


def test_ump_empty_q_needs_total_equivalence():
    car = Carrier(["a", "b"])
    q = BinaryRelation(car, set())
    discrete = equality_preorder(car)
    v = is_q_ump_universal(q, discrete, "a")
    assert not v.holds and v.failing_clause == "uniqueness"
    clique = Preorder(car, {(x, y) for x in car for y in car})
    assert is_q_ump_universal(q, clique, "a").holds


def test_ump_dual_equals_reverse():
    for seed in range(150):
        n = (seed % 8) + 1
        q = gen_relation(seed, n)
        p = gen_preorder(seed + 7, n)
        for u in q.carrier:
            a = is_q_ump_universal(q, p, u, dual=True)
            b = is_q_ump_universal(q, reverse(p), u, dual=False)
            assert a == b, (seed, u)


# --------------------------------------------------------------------------
# property form

def evens15():
    car = carrier15()
    return Predicate(car, {"2", "4"}), chain(car)


def test_relation_from_property_examples():
    car = Carrier(["a", "b"])
    empty = Predicate(car, set())
    assert relation_from_property(empty, "Pa & Pb").pairs == frozenset()
    full = Predicate(car, {"a", "b"})
    assert relation_from_property(full, "Pa -> Pb") == total_relation(car)
    half = Predicate(car, {"a"})
    r = relation_from_property(half, "Pa & !Pb")
    assert r.sorted_pairs() == [("a", "b")]


def test_property_remark_form_on_evens():
    pred, p = evens15()
    assert is_p_universal(pred, "Pa & Pb", p, "4", consequent="leq").holds
    v = is_p_universal(pred, "Pa & Pb", p, "2", consequent="leq")
    assert not v.holds
    assert v.failing_clause == "membership" and v.counterexample == "4"


def test_property_membership_checks_candidate_first():
    pred, p = evens15()
    v = is_p_universal(pred, "Pa & Pb", p, "3", consequent="leq")
    assert not v.holds
    assert v.failing_clause == "membership" and v.counterexample == "3"


def test_property_plain_phi_without_consequent():
    car = Carrier(["a", "b"])
    pred = Predicate(car, {"a"})
    p = equality_preorder(car)
    # R(x, y) := P(y); only a satisfies forall x: R(x, a); a holds P
    v = is_p_universal(pred, "Pb", p, "a")
    assert v.holds


def test_property_singleton_reduces_to_compact():
    for seed in range(60):
        n = (seed % 8) + 1
        p = gen_preorder(seed, n)
        for u in p.carrier:
            pred = Predicate(p.carrier, {u})
            a = is_p_universal(pred, "Pa & Pb", p, u, consequent="leq")
            b = is_p_universal_compact(pred, p, u)
            assert a.holds == b.holds


# --------------------------------------------------------------------------
# compact form

def test_compact_on_evens():
    pred, p = evens15()
    assert is_p_universal_compact(pred, p, "4").holds
    v = is_p_universal_compact(pred, p, "2")
    assert not v.holds and v.counterexample == "4"
    assert is_p_universal_compact(pred, p, "2", dual=True).holds


def test_compact_optima_form_one_block():
    for seed in range(200):
        n = (seed % 8) + 1
        pred = gen_predicate(seed, n)
        p = gen_preorder(seed + 3, n, method=("closure", "quotient")[seed % 2])
        found = find_universal("compact", predicate=pred, preorder=p)
        if len(found) > 1:
            eq = induced_equivalence(p)
            assert all(eq.same_block(found[0], v) for v in found[1:])


# --------------------------------------------------------------------------
# find

def test_find_examples():
    pred, p = evens15()
    assert find_universal("compact", predicate=pred, preorder=p) == ("4",)
    gt = rel(pred.carrier, lambda a, b: int(a) > int(b))
    assert find_universal("strict", relation=gt, exclude_self=True) == ("1",)
    none = Predicate(pred.carrier, set())
    assert find_universal("compact", predicate=none, preorder=p) == ()


def test_find_strict_matches_pointwise_check():
    for seed in range(100):
        n = (seed % 8) + 1
        r = gen_relation(seed, n)
        for flag in (False, True):
            found = find_universal("strict", relation=r, exclude_self=flag)
            slow = tuple(
                u for u in r.carrier if is_r_universal_strict(r, u, flag).holds
            )
            assert found == slow


def test_find_rejects_unknown_definition_and_missing_args():
    with pytest.raises(InputError):
        find_universal("nope")
    with pytest.raises(InputError):
        find_universal("strict")


# --------------------------------------------------------------------------
# unique-arrow form and the iso witness

def test_unique_arrow_on_d12_terminal():
    c = divisor_poset_category(12)
    car = Carrier(c.objects)
    assert is_unique_arrow_universal(c, total_relation(car), "12").holds
    v = is_unique_arrow_universal(c, total_relation(car), "6")
    assert not v.holds
    assert v.failing_clause == "uniqueness" and v.counterexample == "12"


def test_unique_arrow_without_top():
    # divisors of 12 except 12 itself: no terminal object remains
    objs = ["1", "2", "3", "4", "6"]
    arrows, table = total_composition_for_thin(
        objs, lambda x, y: int(y) % int(x) == 0
    )
    c = FiniteCategory(objs, arrows, table)
    car = Carrier(objs)
    v = is_unique_arrow_universal(c, total_relation(car), "6")
    assert not v.holds
    assert v.failing_clause == "uniqueness" and v.counterexample == "4"


def test_unique_arrow_carrier_mismatch():
    c = divisor_poset_category(12)
    with pytest.raises(InputError):
        is_unique_arrow_universal(c, total_relation(Carrier(["1"])), "1")


def test_iso_witness_identity_case():
    c = FiniteCategory(["star"])
    car = Carrier(["star"])
    f, g = unique_isomorphism_witness(c, total_relation(car), "star", "star")
    assert f.name == g.name == "id_star"


def test_iso_witness_on_doubled_top():
    # two-element chain x0 <= x1, doubled; x1 and x1p are both "top"
    objs = ["x0", "x0p", "x1", "x1p"]

    def leq(u, v):
        return (u.rstrip("p"), v.rstrip("p")) != ("x1", "x0")

    arrows, table = total_composition_for_thin(objs, leq)
    c = FiniteCategory(objs, arrows, table)
    car = Carrier(objs)
    r = total_relation(car)
    f, g = unique_isomorphism_witness(c, r, "x1", "x1p")
    assert (f.name, g.name) == ("a_x1_x1p", "a_x1p_x1")
    assert c.compose(f.name, g.name) == "id_x1"
    assert c.compose(g.name, f.name) == "id_x1p"


def test_iso_witness_requires_universality():
    c = divisor_poset_category(12)
    car = Carrier(c.objects)
    with pytest.raises(InputError):
        unique_isomorphism_witness(c, total_relation(car), "4", "6")


def test_verdict_invariants():
    pred, p = evens15()
    for u in pred.carrier:
        v = is_p_universal_compact(pred, p, u)
        assert v.holds == (v.failing_clause is None)
        assert v.holds == (v.counterexample is None)
