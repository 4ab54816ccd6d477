"""Seeded generators of small valid instances for tests and suites.

All generators are pure functions of (seed, parameters) with a fixed,
documented PRNG, so output is byte-identical across runs and platforms
and frozen fixtures can be regenerated in any implementation language.

PRNG: SplitMix64. State is a 64-bit unsigned integer; each step is

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = ((z xor (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z = ((z xor (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    output = z xor (z >> 31)

Derived draws, one output word each: ``below(n)`` is ``output mod n``;
``unit()`` is ``(output >> 11) * 2^-53``, a double in [0, 1);
``chance(d)`` is ``unit() < d``.
"""

from .category import (
    Arrow,
    FiniteCategory,
    identity_name,
    total_composition_for_thin,
)
from .errors import InputError
from .orders import (
    BinaryRelation,
    Carrier,
    EquivalenceClasses,
    preorder_from_quotient_order,
    reflexive_transitive_closure,
)
from .universality import Predicate

_MASK64 = (1 << 64) - 1
SPLITMIX64_GAMMA = 0x9E3779B97F4A7C15
SPLITMIX64_MIX1 = 0xBF58476D1CE4E5B9
SPLITMIX64_MIX2 = 0x94D049BB133111EB

DEFAULT_DENSITY = 0.5


class SplitMix64:
    """The SplitMix64 generator; see the module docstring for the step."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + SPLITMIX64_GAMMA) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * SPLITMIX64_MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * SPLITMIX64_MIX2) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return self.next() % n

    def unit(self) -> float:
        return (self.next() >> 11) * 2.0**-53

    def chance(self, density: float) -> bool:
        return self.unit() < density


def _require_n(n: int, hi: int) -> None:
    if not 1 <= n <= hi:
        raise InputError(f"n must be between 1 and {hi}, got {n}")


def _random_dag_closure(rng: SplitMix64, k: int, density: float):
    """A transitively closed edge set on indices, edges only i -> j for
    i < j, so the reflexive closure is a partial order."""
    edge = [[False] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            edge[i][j] = rng.chance(density)
    for m in range(k):
        for i in range(k):
            if edge[i][m]:
                for j in range(k):
                    if edge[m][j]:
                        edge[i][j] = True
    return edge


def gen_poset_category(
    seed: int, n: int, density: float = DEFAULT_DENSITY
) -> FiniteCategory:
    """The thin category of a random partial order on objects x0..x{n-1}.

    At most one arrow between any ordered pair; arrows are named
    a_<dom>_<cod>. n is capped at 8.
    """
    _require_n(n, 8)
    rng = SplitMix64(seed)
    names = [f"x{i}" for i in range(n)]
    edge = _random_dag_closure(rng, n, density)
    index = {x: i for i, x in enumerate(names)}

    def leq(x, y):
        return x == y or edge[index[x]][index[y]]

    arrows, table = total_composition_for_thin(names, leq)
    return FiniteCategory(names, arrows, table)


def base_object(name: str) -> str:
    """Strip the twin marker: x3p -> x3, x3 -> x3."""
    return name[:-1] if name.endswith("p") else name


def gen_doubled_poset_category(
    seed: int, n: int, density: float = DEFAULT_DENSITY
) -> FiniteCategory:
    """A random poset category in which every object x has a twin xp.

    hom(u, v) is a singleton exactly when base(u) <= base(v) in the
    underlying order, so x and xp carry mutually inverse isos and every
    certified product apex has a distinct isomorphic twin.
    """
    _require_n(n, 8)
    rng = SplitMix64(seed)
    base = [f"x{i}" for i in range(n)]
    names = base + [f"{x}p" for x in base]
    edge = _random_dag_closure(rng, n, density)
    index = {x: i for i, x in enumerate(base)}

    def leq(u, v):
        bu, bv = base_object(u), base_object(v)
        return bu == bv or edge[index[bu]][index[bv]]

    arrows, table = total_composition_for_thin(names, leq)
    return FiniteCategory(names, arrows, table)


def _then(f: tuple, g: tuple) -> tuple:
    # f then g on points: i |-> g[f[i]]
    return tuple(g[v] for v in f)


def gen_monoid_category(seed: int, n: int = 3) -> FiniteCategory:
    """A one-object category: a transformation monoid on n <= 3 points.

    One or two random non-identity maps are drawn and closed under
    composition. An arrow t_<f(0)>_..._<f(n-1)> is the map it names;
    composites equal to the identity map become the identity arrow.
    """
    _require_n(n, 3)
    rng = SplitMix64(seed)
    ident = tuple(range(n))
    want = 1 + rng.below(2)
    gens: set[tuple] = set()
    if n > 1:
        while len(gens) < want:
            t = tuple(rng.below(n) for _ in range(n))
            if t != ident:
                gens.add(t)
    maps = set(gens)
    changed = True
    while changed:
        changed = False
        for f in sorted(maps):
            for g in sorted(maps):
                h = _then(f, g)
                if h != ident and h not in maps:
                    maps.add(h)
                    changed = True

    def tname(t):
        return "t_" + "_".join(str(v) for v in t)

    obj = "x0"
    arrows = [Arrow(tname(t), obj, obj) for t in sorted(maps)]
    table = {}
    for f in maps:
        for g in maps:
            h = _then(f, g)
            table[(tname(f), tname(g))] = (
                identity_name(obj) if h == ident else tname(h)
            )
    return FiniteCategory([obj], arrows, table)


def element_names(n: int) -> list[str]:
    return [f"e{i}" for i in range(n)]


def gen_relation(
    seed: int, n: int, density: float = DEFAULT_DENSITY
) -> BinaryRelation:
    """A relation on e0..e{n-1}, each ordered pair included at density."""
    if n < 1:
        raise InputError(f"n must be at least 1, got {n}")
    rng = SplitMix64(seed)
    carrier = Carrier(element_names(n))
    pairs = {
        (a, b) for a in carrier for b in carrier if rng.chance(density)
    }
    return BinaryRelation(carrier, pairs)


def gen_predicate(
    seed: int, n: int, density: float = DEFAULT_DENSITY
) -> Predicate:
    """A predicate on e0..e{n-1}, each element holding at density."""
    if n < 1:
        raise InputError(f"n must be at least 1, got {n}")
    rng = SplitMix64(seed)
    carrier = Carrier(element_names(n))
    holds = {x for x in carrier if rng.chance(density)}
    return Predicate(carrier, holds)


def gen_preorder(
    seed: int,
    n: int,
    density: float = DEFAULT_DENSITY,
    method: str = "closure",
):
    """A preorder on e0..e{n-1} (n capped at 8), by either construction.

    "closure": random pairs at density, then the reflexive-transitive
    closure. "quotient": a random partition, a random partial order on
    the block representatives, expanded back to the elements; this road
    produces preorders with nontrivial equivalence classes more often.
    """
    _require_n(n, 8)
    rng = SplitMix64(seed)
    carrier = Carrier(element_names(n))
    if method == "closure":
        pairs = {
            (a, b) for a in carrier for b in carrier if rng.chance(density)
        }
        return reflexive_transitive_closure(BinaryRelation(carrier, pairs))
    if method != "quotient":
        raise InputError(f"method must be 'closure' or 'quotient', got {method!r}")
    nblocks = 1 + rng.below(n)
    assign = [rng.below(nblocks) for _ in range(n)]
    grouped: dict[int, list[str]] = {}
    for i, e in enumerate(carrier):
        grouped.setdefault(assign[i], []).append(e)
    blocks = sorted(tuple(b) for b in grouped.values())
    classes = EquivalenceClasses(carrier, blocks)
    reps = classes.representatives()
    k = len(reps)
    edge = _random_dag_closure(rng, k, density)
    pairs = {
        (reps[i], reps[j])
        for i in range(k)
        for j in range(k)
        if i == j or edge[i][j]
    }
    leq = BinaryRelation(Carrier(reps), pairs)
    return preorder_from_quotient_order(classes, leq)


def divisor_poset_category(n: int = 12) -> FiniteCategory:
    """The divisibility poset on the divisors of n, as a thin category.

    Objects are decimal strings; a_<x>_<y> exists iff x properly
    divides y. For n = 12: terminal object 12, initial object 1,
    gcd = product apex, lcm = coproduct apex.
    """
    if n < 1:
        raise InputError(f"n must be at least 1, got {n}")
    divisors = [str(d) for d in range(1, n + 1) if n % d == 0]

    def leq(x, y):
        return int(y) % int(x) == 0

    arrows, table = total_composition_for_thin(divisors, leq)
    return FiniteCategory(divisors, arrows, table)
