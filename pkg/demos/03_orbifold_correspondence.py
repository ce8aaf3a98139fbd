# Line V-bundles on an orbifold surface: Seifert data, orbifold degree,
# the integral Kawasaki Euler characteristic, square roots, Z2 characters,
# and the local parabolic <-> orbifold Higgs-field correspondence.
#
# Run:  python3 demos/03_orbifold_correspondence.py

from fractions import Fraction

from parhiggs.orbifold import (
    VLineBundle,
    equivariance_check,
    kawasaki_euler,
    laurent_matrix,
    orb_to_par_local,
    par_to_orb_local,
    square_root_types,
    vline_degree,
    vline_to_parabolic_line,
    z2_character_count,
    z2_character_enumerate,
)
from parhiggs.parbun import pardeg
from parhiggs.surface import MarkedPoint, MarkedSurface, standard_surface

# A genus-1 surface with marked points of isotropy order 2 and 3.
surf = MarkedSurface(1, (MarkedPoint("x1", 2), MarkedPoint("x2", 3)))
vline = VLineBundle(3, {"x1": 1, "x2": 2})

deg = vline_degree(vline, surf)
print(f"V-line bundle: |L| of degree {vline.desing_degree}, "
      f"residues {dict(vline.isotropy)}")
print(f"orbifold degree = 3 + 1/2 + 2/3 = {deg}")
print(f"Kawasaki Euler characteristic (always an integer): "
      f"{kawasaki_euler(vline, surf)}")

# Its parabolic shadow: same degree, weights residue/order.
line = vline_to_parabolic_line(vline, surf)
print(f"corresponding parabolic line: degree {line.degree}, "
      f"weights {{x1: {line.weight_at['x1']}, x2: {line.weight_at['x2']}}}")
assert pardeg(line, surf) == deg

# Square roots on an order-2 surface: types times the 2^(2g) torsion.
surf2 = standard_surface(1, 3)
family = square_root_types(VLineBundle(0), surf2)
print(f"\nsquare roots of the trivial V-line on (g,s)=(1,3): "
      f"{len(family.types)} types x {family.torsion_multiplicity} torsion "
      f"= {family.total} = 2^(2g+s-1)")

# Z2 characters of the orbifold fundamental group: the sigma values at
# order-2 points must sum to zero, giving 2^(2g) * 2^(s-1) characters.
count = z2_character_count(surf2)
chars = z2_character_enumerate(surf2)
print(f"\nZ2 characters on (1,3): {count} "
      f"(enumeration yields {len(chars)})")
print(f"first character: ab={chars[0].ab} sigma={chars[0].sigma}")

# Local correspondence at one order-m point: a strongly parabolic Higgs
# block in the w-chart pulls back to a Z_m-equivariant block in the
# z-chart (w = z^m), and pushes back down unchanged.
m = 3
weights = (Fraction(0), Fraction(1, 3), Fraction(2, 3))
psi = laurent_matrix(3, {
    (1, 0): [(0, Fraction(2))],
    (2, 0): [(0, Fraction(-1)), (1, Fraction(5, 2))],
    (2, 1): [(1, Fraction(1))],
}, (-1, 8), "dw/w")

chart, upstairs = par_to_orb_local(m, weights, psi)
print(f"\nlocal correspondence at an order-{m} point:")
print(f"  chart exponents {chart.exponents}")
print(f"  equivariant upstairs: {equivariance_check(upstairs, chart)}")

back_weights, downstairs = orb_to_par_local(chart, upstairs)
print(f"  round trip restores weights: {back_weights == weights}")
print(f"  round trip restores the matrix: {downstairs == psi}")
assert back_weights == weights and downstairs == psi
