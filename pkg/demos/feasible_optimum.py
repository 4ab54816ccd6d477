"""The feasible/optimal reading of property-based universality.

A predicate P marks the feasible elements of a preordered carrier. An
element is universal when it is feasible and every feasible element sits
below it: the greatest feasible choice, or the least one dually. The same
verdict comes out of the implication form, which spells universality as a
mapping property R(a, b) := phi(P a, P b) => a <= b.

Run:  python3 demos/feasible_optimum.py
"""

from umpcheck import (
    Carrier,
    Predicate,
    Preorder,
    find_universal,
    is_p_universal,
    is_p_universal_compact,
    parse_phi,
    relation_from_property,
)

nums = Carrier([str(i) for i in range(1, 11)])
chain = Preorder(nums, {(a, b) for a in nums for b in nums if int(a) <= int(b)})
evens = Predicate(nums, {x for x in nums if int(x) % 2 == 0})

print("carrier {1..10} under <=, feasible set = evens")
for u in ("10", "8", "7"):
    v = is_p_universal_compact(evens, chain, u)
    tag = "greatest feasible" if v.holds else f"not it ({v.failing_clause} at {v.counterexample})"
    print(f"  candidate {u}: {tag}")

print("  dual (least feasible):", find_universal("compact", predicate=evens, preorder=chain, dual=True))
print("  find:", find_universal("compact", predicate=evens, preorder=chain))

# the implication form gives the same verdicts
for u in nums:
    a = is_p_universal(evens, "Pa & Pb", chain, u, consequent="leq")
    b = is_p_universal_compact(evens, chain, u)
    assert a.holds == b.holds
print("implication form agrees on all ten candidates")

# phi is a two-variable propositional formula over P(a), P(b)
phi = parse_phi("Pa -> Pb")
print("\nphi:", phi)
r = relation_from_property(evens, phi)
print("R(3, 7) =", r.has("3", "7"), " (vacuous: 3 is odd)")
print("R(2, 7) =", r.has("2", "7"), " (2 is even, 7 is not)")

# without a consequent the formula alone is the relation; universality
# then needs every clause-satisfier to be equivalent to the candidate,
# and a chain has no equivalent pairs, so the other evens sink candidate 8
v = is_p_universal(evens, "Pb", chain, "8")
print("\nR(x, y) := P(y), candidate 8:", "holds" if v.holds else f"fails at {v.counterexample}")
print("  rivals sharing the clause:", v.rival_witnesses)
