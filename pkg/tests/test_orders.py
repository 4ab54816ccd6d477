import pytest

from umpcheck import (
    BinaryRelation,
    Carrier,
    EquivalenceClasses,
    InputError,
    Preorder,
    equality_preorder,
    gen_preorder,
    induced_equivalence,
    preorder_from_quotient_order,
    reflexive_transitive_closure,
    reverse,
    total_relation,
    validate_partial_order,
    validate_preorder,
)


def chain5():
    ns = [str(i) for i in range(1, 6)]
    return Preorder(
        Carrier(ns), {(a, b) for a in ns for b in ns if int(a) <= int(b)}
    )


def test_carrier_sorted_and_unique():
    c = Carrier(["b", "a", "c"])
    assert tuple(c) == ("a", "b", "c")
    with pytest.raises(InputError):
        Carrier(["a", "a"])
    with pytest.raises(InputError):
        Carrier([])
    with pytest.raises(InputError):
        Carrier(["a-b"])


def test_relation_pairs_must_live_in_carrier():
    c = Carrier(["a", "b"])
    r = BinaryRelation(c, {("a", "b")})
    assert r.has("a", "b") and not r.has("b", "a")
    with pytest.raises(InputError):
        BinaryRelation(c, {("a", "z")})


def test_preorder_rejects_missing_reflexivity():
    c = Carrier(["a", "b"])
    with pytest.raises(InputError):
        Preorder(c, {("a", "a"), ("a", "b")})


def test_preorder_rejects_missing_transitivity():
    c = Carrier(["a", "b", "c"])
    pairs = {("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")}
    report = validate_preorder(BinaryRelation(c, pairs))
    assert [v.axiom for v in report.violations] == ["transitivity"]
    assert report.violations[0].witness == ("a", "b", "c")


def test_closure_produces_preorder():
    c = Carrier(["a", "b", "c"])
    p = reflexive_transitive_closure(BinaryRelation(c, {("a", "b"), ("b", "c")}))
    assert p.leq("a", "c") and p.leq("b", "b")
    assert validate_preorder(p).ok


def test_closure_of_empty_is_equality():
    c = Carrier(["x", "y"])
    assert reflexive_transitive_closure(BinaryRelation(c, set())) == equality_preorder(c)


def test_induced_equivalence_of_chain_is_discrete():
    eq = induced_equivalence(chain5())
    assert eq.blocks == (("1",), ("2",), ("3",), ("4",), ("5",))


def test_induced_equivalence_collapses_cycles():
    c = Carrier(["a", "b", "c"])
    p = reflexive_transitive_closure(
        BinaryRelation(c, {("a", "b"), ("b", "a"), ("b", "c")})
    )
    eq = induced_equivalence(p)
    assert eq.blocks == (("a", "b"), ("c",))
    assert eq.same_block("a", "b") and not eq.same_block("a", "c")
    assert eq.representatives() == ("a", "c")


def test_quotient_order_expands_to_preorder():
    c = Carrier(["a", "b", "c", "d"])
    classes = EquivalenceClasses(c, (("a", "b"), ("c", "d")))
    leq = BinaryRelation(
        Carrier(["a", "c"]), {("a", "a"), ("c", "c"), ("a", "c")}
    )
    p = preorder_from_quotient_order(classes, leq)
    assert p.leq("a", "b") and p.leq("b", "d") and not p.leq("c", "a")
    assert induced_equivalence(p).blocks == classes.blocks


def test_quotient_order_carrier_must_match_representatives():
    c = Carrier(["a", "b"])
    classes = EquivalenceClasses(c, (("a", "b"),))
    wrong = BinaryRelation(Carrier(["b"]), {("b", "b")})
    with pytest.raises(InputError):
        preorder_from_quotient_order(classes, wrong)


def test_quotient_order_must_be_partial_order():
    c = Carrier(["a", "b"])
    classes = EquivalenceClasses(c, (("a",), ("b",)))
    cyc = BinaryRelation(
        Carrier(["a", "b"]),
        {("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")},
    )
    with pytest.raises(InputError):
        preorder_from_quotient_order(classes, cyc)


def test_partition_validation():
    c = Carrier(["a", "b"])
    with pytest.raises(InputError):
        EquivalenceClasses(c, (("a",),))  # b missing
    with pytest.raises(InputError):
        EquivalenceClasses(c, (("a", "b"), ("b",)))  # b twice


def test_validate_partial_order_flags_antisymmetry():
    c = Carrier(["a", "b"])
    p = total_relation(c)
    report = validate_partial_order(p)
    assert "antisymmetry" in {v.axiom for v in report.violations}
    assert validate_partial_order(equality_preorder(c)).ok


def test_reverse_flips_pairs_and_keeps_kind():
    p = chain5()
    r = reverse(p)
    assert isinstance(r, Preorder)
    assert r.leq("5", "1") and not r.leq("1", "5")
    assert reverse(r) == p


def test_both_generator_methods_agree_on_axioms():
    for seed in range(300):
        n = (seed % 8) + 1
        for method in ("closure", "quotient"):
            p = gen_preorder(seed, n, method=method)
            assert validate_preorder(p).ok


def test_quotient_method_reaches_nontrivial_blocks():
    hit = False
    for seed in range(40):
        p = gen_preorder(seed, 6, method="quotient")
        if any(len(b) > 1 for b in induced_equivalence(p).blocks):
            hit = True
            break
    assert hit


def test_closure_is_idempotent_on_preorders():
    for seed in range(100):
        p = gen_preorder(seed, (seed % 8) + 1)
        assert reflexive_transitive_closure(p) == p
