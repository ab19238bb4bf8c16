"""Context entropies and the standard scales
=============================================

Computing relevance needs the whole concept lattice. Entropies need only
the closure size |g''| of each object, a cheap proxy for how objects
spread over the lattice. The three standard n-by-n scales have closed
forms, which double as an independent check of the evaluators.
"""

import fcarel
from fcarel import make_scale, object_entropy, scale_entropy, shannon_object_entropy

water = fcarel.water4()

# Two entropies from the same ingredient |g''|:
#   Shannon object entropy: sum of -p*log2(p) with p = |g''|/|G|
#   object entropy:         mean of (1 - |g''|/|G|)
print("closure sizes:", water.object_closure_sizes())
print("E_se(water4) =", shannon_object_entropy(water))
print("E_se normalized =", shannon_object_entropy(water, normalized=True))
print("E_oe(water4) =", object_entropy(water))
print("E_oe exactly =", fcarel.object_entropy_exact(water))

# The standard scales. Ordinal: a chain (g <= m); nominal: a diagonal
# (g == m); contranominal: everything off the diagonal (g != m).
for kind in ("ordinal", "nominal", "contranominal"):
    scale = make_scale(kind, 4)
    print(f"\n{kind} scale, n=4:")
    print(scale.incidence_matrix().astype(int))
    print("  concepts:", len(fcarel.enumerate_concepts(scale)))
    print("  E_se direct:", shannon_object_entropy(scale),
          " closed form:", scale_entropy(kind, 4, "se"))
    print("  E_oe direct:", object_entropy(scale),
          " closed form:", scale_entropy(kind, 4, "oe"))

# Nominal and contranominal scales agree on both entropies (singleton
# closures either way); the ordinal object entropy approaches 1/2 while
# its Shannon entropy keeps growing with n.
for n in (2, 8, 32, 64):
    print(f"n={n:3d}  ordinal E_oe={scale_entropy('ordinal', n, 'oe'):.4f}  "
          f"E_se={scale_entropy('ordinal', n, 'se'):8.3f}  "
          f"nominal E_se={scale_entropy('nominal', n, 'se'):.3f}")

# Exact scale relevances, straight from the lattice: in a nominal scale
# every attribute is equally (and vanishingly) relevant; in an ordinal
# chain relevance grows along the order until the full column at the top.
for kind, n in (("nominal", 4), ("ordinal", 4)):
    scale = make_scale(kind, n)
    values = [fcarel.relative_relevance(scale, [m]).value for m in range(n)]
    print(f"{kind} n={n} relevances:", [str(v) for v in values])
