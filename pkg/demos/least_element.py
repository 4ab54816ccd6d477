"""Walk through the relational universality checkers on number carriers.

Run:  python3 demos/least_element.py
"""

from umpcheck import (
    BinaryRelation,
    Carrier,
    Preorder,
    equality_preorder,
    find_universal,
    induced_equivalence,
    is_r_universal_preorder,
    is_r_universal_strict,
)


def show(tag, verdict):
    mark = "holds" if verdict.holds else f"fails ({verdict.failing_clause} at {verdict.counterexample})"
    print(f"  {tag}: {mark}")


nums = Carrier([str(i) for i in range(1, 101)])
gt = BinaryRelation(nums, {(a, b) for a in nums for b in nums if int(a) > int(b)})

print("carrier {1..100}, R(a,b) := a > b")
show("candidate 1, exclude_self", is_r_universal_strict(gt, "1", exclude_self=True))
show("candidate 1, plain      ", is_r_universal_strict(gt, "1"))
# R is irreflexive, so the plain check stumbles on R(1,1) itself.
# exclude_self quantifies over x != u and the least element comes back.

print("find strict, exclude_self:", find_universal("strict", relation=gt, exclude_self=True))
print("find strict, plain:       ", find_universal("strict", relation=gt))
print()

# Uniqueness up to equivalence needs a preorder that can identify rivals.
# Two formal copies of the same point: b and b2 are mutually comparable.
car = Carrier(["a", "b", "b2", "c"])
leq = Preorder(
    car,
    {(x, x) for x in car}
    | {("b", "b2"), ("b2", "b"), ("a", "b"), ("a", "b2"), ("a", "c")},
)
hits_b = BinaryRelation(car, {(x, y) for x in car for y in car if y in ("b", "b2")})

print("carrier {a, b, b2, c} with b and b2 equivalent, R(x,y) := y is a b")
eq = induced_equivalence(leq)
print("  equivalence blocks:", eq.blocks)
show("candidate b, preorder check", is_r_universal_preorder(hits_b, leq, "b"))
show("candidate b, strict rules  ", is_r_universal_preorder(hits_b, equality_preorder(car), "b"))
v = is_r_universal_preorder(hits_b, leq, "b")
print("  rivals tolerated:", v.rival_witnesses)
