"""Products and coproducts in the divisibility category of 12.

Objects are the divisors of 12; there is an arrow x -> y exactly when x
divides y. Products are gcds, coproducts are lcms, the terminal object is
12 and the initial object is 1.

Run:  python3 demos/divisor_products.py
"""

from umpcheck import (
    check_coproduct,
    check_product,
    cocone,
    cone,
    divisor_poset_category,
    enumerate_cones,
    gen_doubled_poset_category,
    is_initial,
    is_terminal,
    product_uniqueness_certificate,
)

c = divisor_poset_category(12)
print("objects:", ", ".join(c.objects))

print("\ncones over (4, 6):")
for k in enumerate_cones(c, "4", "6"):
    print(f"  apex {k.apex}: {k.leg_a.name}, {k.leg_b.name}")

result = check_product(c, cone(c, "2", "a_2_4", "a_2_6"))
print("\napex 2 as product of (4, 6):", "certified" if result.ok else "failed")
for k, m in result.mediators.items():
    print(f"  cone at {k.apex} mediates via {m.name}")

result = check_product(c, cone(c, "1", "a_1_4", "a_1_6"))
print("\napex 1 as product of (4, 6): certified" if result.ok else
      f"\napex 1 as product of (4, 6): fails, cone at {result.cone.apex} "
      f"has {result.mediator_count} mediators")

# coproducts run on the opposite category; cocone() packages injections
result = check_coproduct(c, cocone(c, "12", "a_4_12", "a_6_12"))
print("apex 12 as coproduct of (4, 6):", "certified" if result.ok else "failed")

print("\nterminal:", [x for x in c.objects if is_terminal(c, x)[0]])
print("initial: ", [x for x in c.objects if is_initial(c, x)[0]])

# A category with duplicate meets: every object x has an isomorphic twin
# xp, so products over the same factors come in certified pairs and the
# engine must exhibit the unique iso between them.
d = gen_doubled_poset_category(1, 4)
p1 = cone(d, "x1", "a_x1_x2", "a_x1_x3")
p2 = cone(d, "x1p", "a_x1p_x2", "a_x1p_x3")
assert check_product(d, p1).ok and check_product(d, p2).ok
u1, u2 = product_uniqueness_certificate(d, p1, p2)
print(f"\ntwin meets x1 and x1p over (x2, x3): {u1.name} and {u2.name}")
print(f"  {u1.name} then {u2.name} =", d.compose(u1.name, u2.name))
print(f"  {u2.name} then {u1.name} =", d.compose(u2.name, u1.name))
