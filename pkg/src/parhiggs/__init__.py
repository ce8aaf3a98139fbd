"""Exact invariants for parabolic Higgs bundles on marked Riemann surfaces.

Pure-python, exact-arithmetic calculators: parabolic degrees and slopes,
slope-stability verdicts for decomposable Higgs models, Toledo invariants and
Milnor-Wood bounds, orbifold line-bundle arithmetic with the local parabolic/
orbifold Higgs-field correspondence, Z2 V-cohomology ranks, connected-component
counts with table emission, and moduli-dimension formulas.
"""

__version__ = "0.1.0"
