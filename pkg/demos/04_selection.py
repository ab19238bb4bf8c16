"""Choosing attribute subsets
==============================

Four strategies to pick n of |M| attributes, from exact to cheap:

* exhaustive -- scan all C(|M|, n) subsets for maximal relevance
* imrs       -- greedy: grow the set one best attribute at a time
* era        -- greedy on the entropic score |B(sub)| * E(sub), which
                never enumerates the full lattice to rank candidates
* random     -- the baseline everything must beat
"""

import fcarel
from fcarel import select_era, select_exhaustive, select_imrs, select_random

water = fcarel.water4()

best = select_exhaustive(water, 2)
print("exhaustive:", best.chosen_names, "r =", best.relevance.value,
      f"({best.evaluations} subsets scored)")

greedy = select_imrs(water, 2)
print("imrs:      ", greedy.chosen_names, "r =", greedy.relevance.value,
      f"({greedy.evaluations} scorings, trace {[str(s) for s in greedy.step_scores]})")

for kind in ("se", "oe"):
    era = select_era(water, 2, kind=kind)
    print(f"era-{kind}:    ", era.chosen_names, "r =", era.relevance.value,
          f"(era score {era.step_scores[-1]:.3f})")

baseline = select_random(water, 2, trials=60, seed=42)
print("random:    ", f"mean r = {baseline.mean_relevance:.3f}"
      f" +/- {baseline.std_relevance:.3f} over {baseline.trials} trials")

# Greedy is not optimal. In this context b is the single most relevant
# attribute, yet the best pair avoids b entirely -- the greedy set that
# starts with b can never reach it.
trap = fcarel.greedy_trap()
print("\ngreedy trap, singleton relevances:")
for m, name in enumerate(trap.attributes):
    print(f"  r({name}) =", fcarel.relative_relevance(trap, [m]).value)
best = select_exhaustive(trap, 2)
greedy = select_imrs(trap, 2)
print("exhaustive pair:", best.chosen_names, "r =", best.relevance.value)
print("greedy pair:    ", greedy.chosen_names, "r =", greedy.relevance.value)
assert greedy.relevance.value < best.relevance.value

# The entropic score ranks candidates without ever touching the full
# lattice; objective="min" exists for completeness but chases collapsed
# subcontexts (on water4 it picks the attribute every object has).
era_max = select_era(water, 1, kind="oe", objective="max")
era_min = select_era(water, 1, kind="oe", objective="min")
print("\nera-oe maximize picks", era_max.chosen_names, "r =", era_max.relevance.value)
print("era-oe minimize picks", era_min.chosen_names, "r =", era_min.relevance.value)

# How the strategies stack up across sizes on the six-object water data:
water6 = fcarel.water6()
print("\nwater6, r by size:  imrs    era-se  era-oe  random-mean")
for n in range(1, 6):
    imrs_r = float(select_imrs(water6, n).relevance.value)
    se_r = float(select_era(water6, n, kind="se").relevance.value)
    oe_r = float(select_era(water6, n, kind="oe").relevance.value)
    rnd = select_random(water6, n, seed=1).mean_relevance
    print(f"  n={n}:            {imrs_r:.3f}   {se_r:.3f}   {oe_r:.3f}   {rnd:.3f}")
