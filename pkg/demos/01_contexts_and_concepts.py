"""Formal contexts and their concept lattice
=============================================

A formal context is a cross-table: objects in rows, attributes in
columns, a cross where an object has an attribute. Closing subsets under
the two derivation operators yields formal concepts, the lattice's nodes.
"""

import fcarel

# The running example: four living beings and four attributes
# (a: needs water, b: lives in water, c: lives on land, d: needs chlorophyll).
water = fcarel.water4()
print(water)
print("objects:   ", water.objects)
print("attributes:", water.attributes)
print(water.incidence_matrix().astype(int))

# Derivation: which attributes do Bream and Frog share?
bream = water.object_index("Bream")
frog = water.object_index("Frog")
shared = water.derive("objects", [bream, frog])
print("\nBream & Frog share:", sorted(water.attributes[m] for m in shared))

# Closing a set: everything that shares Bream's attributes.
closure = water.closure("objects", [bream])
print("closure of {Bream}:", sorted(water.objects[g] for g in closure))

# All concepts at once. Each is a closed (extent, intent) pair; the set
# arrives in a canonical order with the bottom concept first.
concepts = fcarel.enumerate_concepts(water)
print(f"\n{len(concepts)} concepts, total extent mass {concepts.extent_sum}:")
for c in concepts:
    ext = ",".join(water.objects[g][0] for g in sorted(c.extent)) or "-"
    intent = ",".join(water.attributes[m] for m in sorted(c.intent)) or "-"
    print(f"  extent {{{ext}}}  intent {{{intent}}}")

# The extent label of an object counts the concepts above it.
print("\nextent labels:", dict(zip(water.objects, concepts.labels)))

# Contexts read and write two formats; both round-trip exactly.
print("\ncxt serialization:")
print(fcarel.write_context(water, "cxt").decode())
