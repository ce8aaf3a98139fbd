# Stability verdicts, the Toledo invariant, and the Milnor-Wood bound
# for decomposable Sp(2n,R)-Higgs models on a marked surface.
#
# Run:  python3 demos/01_stability_and_toledo.py

import random
from fractions import Fraction

from parhiggs.parbun import ParabolicLineBundle, pardeg
from parhiggs.stability import (
    SpTripleModel,
    hitchin_model,
    hitchin_sp_triple,
    is_maximal,
    milnor_wood_bound,
    sp_dual,
    stability_verdict,
    toledo,
)
from parhiggs.surface import standard_surface

half = Fraction(1, 2)

# A genus-2 surface with one marked point: deg K(D) = 2g - 2 + s = 3.
surf = standard_surface(2, 1)
print(f"surface: genus {surf.genus}, marked points {surf.s}, "
      f"labels {surf.labels()}")

# An Sp(2,R) triple is a line bundle V with maps gamma: V -> V^dual K(D)
# and beta: V^dual -> V K(D), encoded as arrow supports on the summands.
v = ParabolicLineBundle(1, {"x1": half})
triple = SpTripleModel(surf, (v,), beta_arrows=frozenset(),
                       gamma_arrows=frozenset({(0, 0)}))

tau = toledo(triple)
bound = milnor_wood_bound(1, 2, 1)
print(f"\nToledo invariant of (V=O(1)_(1/2), gamma!=0): {tau}")
print(f"Milnor-Wood bound n(g-1+s/2) at n=1: {bound}")
print(f"maximal: {is_maximal(triple)}")

report = stability_verdict(triple.to_decomposable())
print(f"verdict: {report.verdict} (slope {report.slope})")

# Duality flips the sign of the Toledo invariant.
dual = sp_dual(triple)
print(f"\ndual triple Toledo: {toledo(dual)} (= -{tau})")
assert toledo(dual) == -tau

# Dropping the Higgs field destabilizes: V alone is an invariant summand
# of positive parabolic degree.
bare = SpTripleModel(surf, (v,), frozenset(), frozenset())
report = stability_verdict(bare.to_decomposable())
print(f"same bundle, zero Higgs field: {report.verdict} "
      f"(witness summands {report.witness})")

# The canonical k-step family: total parabolic degree 0, always stable,
# and maximal for even k in the weight-1/2 regime.
print("\ncanonical family on the same surface:")
for k in (2, 3, 4, 5):
    model = hitchin_model(k, 2, 1)
    total = sum((pardeg(l, model.surface) for l in model.summands),
                Fraction(0))
    verdict = stability_verdict(model).verdict
    line = f"  k={k}: total pardeg {total}, {verdict}"
    if k % 2 == 0:
        line += f", maximal={is_maximal(hitchin_sp_triple(k, 2, 1))}"
    print(line)

# A seeded random sweep: every semistable-or-better model obeys the bound.
rng = random.Random(7)
kd = 2 * 2 - 2 + 1
checked = 0
for _ in range(300):
    lines = tuple(
        ParabolicLineBundle(rng.randint(-2, 2),
                            {"x1": half if rng.random() < 0.5 else 0})
        for _ in range(2))
    p = [pardeg(l, surf) for l in lines]
    gamma = frozenset({(i, i) for i in range(2) if 2 * p[i] <= kd
                       and rng.random() < 0.7})
    t = SpTripleModel(surf, lines, frozenset(), gamma)
    if stability_verdict(t.to_decomposable()).verdict != "unstable":
        assert abs(toledo(t)) <= milnor_wood_bound(2, 2, 1)
        checked += 1
print(f"\nrandom sweep: {checked} semistable-or-better models, "
      f"all within |toledo| <= {milnor_wood_bound(2, 2, 1)}")
