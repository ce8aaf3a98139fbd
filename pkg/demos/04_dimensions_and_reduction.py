# Moduli dimension formulas (parabolic GL(n), complex groups, and the
# Teichmuller component of a split real group), plus the single-puncture
# reduction that compares parabolic, K(D)-twisted, and closed-surface
# component counts.
#
# Run:  python3 demos/04_dimensions_and_reduction.py

from parhiggs.components import (
    s1_reduction_report,
    so0_2n,
    sp2nr,
    strubel_count,
)
from parhiggs.dimension import (
    complex_group_data,
    dim_complex_group,
    dim_parabolic_gl,
    dim_strongly_parabolic_gl,
    full_flag_multiplicities,
    lie_catalog,
    teichmuller_dimension,
)

# Full-flag parabolic GL(2) moduli on (g,s) = (2,1).
print(f"dim parabolic GL(2) moduli at (2,1): {dim_parabolic_gl(2, 2, 1)}")
print(f"dim strongly parabolic, full flags:  "
      f"{dim_strongly_parabolic_gl(2, 2, 1, full_flag_multiplicities(2, 1))}")

# A complex group counts twice its complex dimension in real terms.
sl2c = complex_group_data("SL(2,C)", 3)
report = dim_complex_group(sl2c, 2, 1)
print(f"\nSL(2,C) moduli at (2,1): complex dim {report.complex_dimension}, "
      f"real dim {report.real_dimension}")

# The Teichmuller component of a split group: Riemann-Roch on one line
# bundle per Lie-algebra exponent.  Two readings of the marked-point term
# exist; when they differ the report says so rather than pick silently.
for name in ("SL(2,R)", "Sp(4,R)", "SO(4,3)"):
    data = lie_catalog(name)
    rep = teichmuller_dimension(data, 2, 1)
    print(f"\n{name}: exponents {data.exponents}, "
          f"real Teichmuller dimension {rep.real_dimension}")
    for x in rep.summands:
        print(f"  {x.label:12s} complex {x.complex_dim:3d}  "
              f"real {x.real_dim:3d}")

data = lie_catalog("Sp(4,R)")
rep = teichmuller_dimension(data, 2, 1, rk_m_c=3)
print(f"\nSp(4,R) with the statement's rank-3 reading: "
      f"computed {rep.real_dimension}, statement {rep.statement_real}")
for note in rep.notes:
    print(f"  note: {note}")

# One marked point: the parabolic count vs the K(D)-twisted count vs the
# closed-surface catalog value.
for group in (sp2nr(2), so0_2n(3)):
    rep = s1_reduction_report(group, 2)
    print(f"\n{rep.group.display()} at g=2, s=1:")
    print(f"  parabolic maximal components: {rep.parabolic_count}")
    print(f"  K(D)-twisted count:           {rep.kd_twisted_count}")
    print(f"  closed-surface table value:   {rep.table_count}")

# Punctured-surface components of the n=1 family: 2^(2g+m-1) for m cusps.
print(f"\npunctured-surface count at (g,m)=(2,1): {strubel_count(2, 1)}")
