"""Which attributes matter?
============================

Removing an attribute shrinks the concept lattice. Relative relevance
measures how much extent mass the surviving concepts lose: r(N) = 0 means
the lattice is untouched, values near 1 mean almost everything collapses.
All values are exact fractions.
"""

from fractions import Fraction

import fcarel

water = fcarel.water4()

# Attribute 'a' is a full column: every being needs water, so dropping it
# changes nothing. 'b' (lives in water) carries the most structure.
for m, name in enumerate(water.attributes):
    rel = fcarel.relative_relevance(water, [m])
    print(f"r({name}) = {rel.value}   (surviving mass {rel.surviving_extent_sum}"
          f"/{rel.total_extent_sum})")

# Relevance to a single object: does removing b change what the lattice
# says about the Dog? About Spike-weed?
b = water.attribute_index("b")
print("\nb relevant to Dog?       ",
      fcarel.is_relevant(water, b, water.object_index("Dog")))
print("b relevant to Spike-weed?",
      fcarel.is_relevant(water, b, water.object_index("Spike-weed")))

# Structure alone already detects useless attributes: a column that is an
# intersection of other columns (here: the full column a) is reducible,
# and reducible attributes are exactly the irrelevant ones -- as long as
# some object actually has the attribute.
for m, name in enumerate(water.attributes):
    print(f"{name}: irreducible={fcarel.is_irreducible(water, m)}  "
          f"relevant={fcarel.is_relevant_to_context(water, m)}")

# Sets of attributes use the same machinery. Growing a set can never
# lower relevance...
print("\nr({b}) =", fcarel.relative_relevance(water, [b]).value)
print("r({b,c}) =", fcarel.relative_relevance(water, water.attribute_indices("bc")).value)

# ...but the loss of a pair can exceed the sum of its parts: this hub
# context survives losing s (via t,u) and losing t (via s,u), yet the hub
# concept dies when both go.
hub = fcarel.FormalContext(
    ["hub", "only_s", "only_t", "only_u"],
    ["s", "t", "u"],
    ["xxx", "x..", ".x.", "..x"],
)
r = lambda attrs: fcarel.relative_relevance(hub, attrs).value
print("\nhub context: r(s) =", r([0]), " r(t) =", r([1]), " r({s,t}) =", r([0, 1]))
assert r([0, 1]) > r([0]) + r([1])
print("joint removal beats the sum of parts:", r([0, 1]), ">",
      Fraction(r([0]) + r([1])))

# Duplicate columns: relevance is a property of attribute classes. The
# context below repeats a column; asking about either copy scores the
# class, because removing one copy alone would be invisible.
dup = fcarel.FormalContext(["g0", "g1"], ["m0", "m1", "m2"], ["xx.", "..x"])
clarified, cmap = dup.clarify()
print("\nclarified attributes:", clarified.attributes,
      " classes:", cmap.attribute_classes)
print("r(m0) = r of the {m0,m1} class:", fcarel.relative_relevance(dup, [0]).value)
