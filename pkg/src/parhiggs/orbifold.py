"""Orbifold side: Seifert line-bundle arithmetic, square roots, characters,
and the local correspondence for Higgs fields.

A line V-bundle over a marked surface is recorded by its Seifert data: the
degree of the desingularized bundle plus one isotropy residue 0 <= b < k per
marked point of order k.  On top of that sit the fractional degree, tensor
group law, square-root counting, Z2-character enumeration on the V-fundamental
group, the orbifold Euler characteristic, and the exact local dictionary
between weighted (parabolic) Higgs matrices in w and equivariant matrices in z
with w = z^m.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .exact_core import DomainError, rat_from_str, rat_to_str
from .parbun import ParabolicLineBundle
from .surface import MarkedSurface

__all__ = [
    "VLineBundle",
    "SquareRootFamily",
    "Z2Character",
    "PicVStructure",
    "LocalChart",
    "LaurentMatrix",
    "vline_degree",
    "vline_tensor",
    "square_root_types",
    "z2_character_count",
    "z2_character_enumerate",
    "character_exists_with_sigma",
    "pic_v_structure",
    "kawasaki_euler",
    "parity",
    "vline_to_parabolic_line",
    "parabolic_line_to_vline",
    "laurent_matrix",
    "laurent_zero",
    "equivariance_check",
    "par_to_orb_local",
    "orb_to_par_local",
    "vline_to_json",
    "vline_from_json",
    "laurent_to_json",
    "laurent_from_json",
]


# ----------------------------------------------------- Seifert arithmetic ----

@dataclass(frozen=True)
class VLineBundle:
    """Seifert data: desingularized degree plus isotropy residues per point."""

    desing_degree: int
    isotropy: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {lbl: int(b) for lbl, b in self.isotropy.items() if int(b)}
        if any(b < 0 for b in clean.values()):
            raise DomainError("negative_isotropy", isotropy=dict(clean))
        object.__setattr__(self, "isotropy", clean)

    def residue(self, label: str) -> int:
        return self.isotropy.get(label, 0)


def _check_isotropy(l: VLineBundle, surf: MarkedSurface) -> None:
    known = {p.label: p.order for p in surf.points}
    for lbl, b in l.isotropy.items():
        if lbl not in known:
            raise DomainError("isotropy_surface_mismatch", label=lbl)
        if not 0 <= b < known[lbl]:
            raise DomainError("isotropy_not_reduced", label=lbl,
                              residue=b, order=known[lbl])


def vline_degree(l: VLineBundle, surf: MarkedSurface) -> Fraction:
    """Fractional degree: desingularized degree plus sum of b_i/k_i."""
    _check_isotropy(l, surf)
    return l.desing_degree + sum(
        (Fraction(l.residue(p.label), p.order) for p in surf.points), Fraction(0))


def vline_tensor(a: VLineBundle, b: VLineBundle, surf: MarkedSurface) -> VLineBundle:
    """Group law: residues add mod the point order, each wrap bumps the
    desingularized degree by one (so the fractional degree is additive)."""
    _check_isotropy(a, surf)
    _check_isotropy(b, surf)
    desing = a.desing_degree + b.desing_degree
    iso = {}
    for p in surf.points:
        tot = a.residue(p.label) + b.residue(p.label)
        desing += tot // p.order
        if tot % p.order:
            iso[p.label] = tot % p.order
    return VLineBundle(desing, iso)


@dataclass(frozen=True)
class SquareRootFamily:
    """Square-root isotropy types plus the symbolic torsion multiplicity.

    Each type is one Seifert datum; the degree-0 part of the Picard group
    contributes a further 2^{2g} holomorphic choices per type, carried as a
    count, never enumerated.
    """

    types: tuple[VLineBundle, ...]
    torsion_multiplicity: int

    @property
    def total(self) -> int:
        return len(self.types) * self.torsion_multiplicity


def square_root_types(l: VLineBundle, surf: MarkedSurface) -> SquareRootFamily:
    """All Seifert types whose square is l, over a surface with order-2 points.

    A square (2e + #{rho_i = 1}, residues 0) can only hit bundles with zero
    residues; for those, the rho in {0,1}^s with sum congruent to the degree
    leave 2^{s-1} types (s >= 1).  Without marked points an odd degree has no
    root at all.
    """
    _check_isotropy(l, surf)
    for p in surf.points:
        if p.order != 2:
            raise DomainError("orders_not_two", label=p.label, order=p.order)
    mult = 2 ** (2 * surf.genus)
    if l.isotropy:
        return SquareRootFamily((), mult)
    d = l.desing_degree
    labels = surf.labels()
    if not labels:
        if d % 2:
            raise DomainError("no_square_root", degree=d)
        return SquareRootFamily((VLineBundle(d // 2),), mult)
    types = []
    for rho in itertools.product((0, 1), repeat=len(labels)):
        if sum(rho) % 2 != d % 2:
            continue
        e = (d - sum(rho)) // 2
        types.append(VLineBundle(e, {x: r for x, r in zip(labels, rho) if r}))
    return SquareRootFamily(tuple(types), mult)


# ------------------------------------------------------------ characters ----

@dataclass(frozen=True)
class Z2Character:
    """Additive Z2 character: values on a_1,b_1,..,a_g,b_g and on sigma_1..s.

    The single surface relation forces the sigma values to sum to 0 mod 2.
    """

    ab: tuple[int, ...]
    sigma: tuple[int, ...]

    def __post_init__(self):
        if any(v not in (0, 1) for v in self.ab + self.sigma):
            raise DomainError("character_value_not_bit")
        if sum(self.sigma) % 2:
            raise DomainError("sigma_parity_violated", sigma=list(self.sigma))


def character_exists_with_sigma(surf: MarkedSurface, sigma: Sequence[int]) -> bool:
    """Can the sigma-values be completed to a character?  Needs even total
    parity and triviality at every odd-order point."""
    if len(sigma) != surf.s or any(v not in (0, 1) for v in sigma):
        raise DomainError("bad_sigma_assignment", sigma=list(sigma))
    for p, v in zip(surf.points, sigma):
        if v and p.order % 2:
            return False
    return sum(sigma) % 2 == 0


def z2_character_count(surf: MarkedSurface) -> int:
    """2^{2g} times 2^{s'-1} where s' counts the even-order points."""
    s_even = sum(1 for p in surf.points if p.order % 2 == 0)
    return 2 ** (2 * surf.genus) * (2 ** (s_even - 1) if s_even else 1)


def z2_character_enumerate(surf: MarkedSurface, cap: int | None = None
                           ) -> list[Z2Character]:
    """All characters, lexicographic in (a_1,b_1,..,b_g,sigma_1,..,sigma_s)."""
    count = z2_character_count(surf)
    if cap is not None and count > cap:
        raise DomainError("enumeration_cap_exceeded", needed=count, cap=cap)
    even_pos = [t for t, p in enumerate(surf.points) if p.order % 2 == 0]
    sigmas = []
    for bits in itertools.product((0, 1), repeat=len(even_pos)):
        if sum(bits) % 2:
            continue
        sig = [0] * surf.s
        for t, v in zip(even_pos, bits):
            sig[t] = v
        sigmas.append(tuple(sig))
    sigmas.sort()
    out = [Z2Character(ab, sig)
           for ab in itertools.product((0, 1), repeat=2 * surf.genus)
           for sig in sigmas]
    return out


@dataclass(frozen=True)
class PicVStructure:
    """Topological Picard group: desingularized Picard plus one Z_k per point."""

    genus: int
    cyclic_orders: tuple[int, ...]

    def identity_component_label(self) -> str:
        torus = f"(S^1)^{2 * self.genus}"
        if not self.cyclic_orders:
            return torus
        if all(k == 2 for k in self.cyclic_orders):
            return f"{torus} x Z_2^{len(self.cyclic_orders) - 1}"
        disc = " x ".join(f"Z_{k}" for k in self.cyclic_orders)
        return f"{torus} x ({disc})/(1,..,1)"


def pic_v_structure(surf: MarkedSurface) -> PicVStructure:
    return PicVStructure(surf.genus, tuple(p.order for p in surf.points))


def kawasaki_euler(l: VLineBundle, surf: MarkedSurface) -> int:
    """Orbifold Euler characteristic 1 - g + deg - sum b_i/k_i (an integer)."""
    chi = 1 - surf.genus + vline_degree(l, surf) - sum(
        (Fraction(l.residue(p.label), p.order) for p in surf.points), Fraction(0))
    if chi.denominator != 1:
        raise DomainError("non_integral_euler", value=str(chi))
    return int(chi)


def parity(alpha: Mapping[str, Fraction]) -> str:
    """Parity of the number of weight-1/2 points; weights must be 0 or 1/2."""
    half = 0
    for lbl, w in alpha.items():
        w = Fraction(w)
        if w == Fraction(1, 2):
            half += 1
        elif w != 0:
            raise DomainError("weight_not_half_integral", label=lbl, weight=str(w))
    return "even" if half % 2 == 0 else "odd"


def vline_to_parabolic_line(l: VLineBundle, surf: MarkedSurface) -> ParabolicLineBundle:
    """Corresponding weighted line: degree = desingularized degree, weight
    b_i/k_i per point, so the parabolic degree equals the fractional degree."""
    _check_isotropy(l, surf)
    return ParabolicLineBundle(
        l.desing_degree,
        {p.label: Fraction(l.residue(p.label), p.order)
         for p in surf.points if l.residue(p.label)})


def parabolic_line_to_vline(line: ParabolicLineBundle, surf: MarkedSurface
                            ) -> VLineBundle:
    iso = {}
    for p in surf.points:
        b = line.weight(p.label) * p.order
        if b.denominator != 1:
            raise DomainError("weight_not_orbifold", label=p.label,
                              weight=str(line.weight(p.label)), order=p.order)
        if b:
            iso[p.label] = int(b)
    return VLineBundle(line.degree, iso)


# ------------------------------------------------- local Higgs dictionary ----

@dataclass(frozen=True)
class LocalChart:
    """Cyclic order m with a good (nondecreasing) exponent tuple, 0<=k_i<=m."""

    m: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1:
            raise DomainError("bad_chart_order", m=self.m)
        ks = tuple(int(k) for k in self.exponents)
        if not ks or any(not 0 <= k <= self.m for k in ks):
            raise DomainError("exponent_out_of_range", exponents=list(ks), m=self.m)
        if any(a > b for a, b in zip(ks, ks[1:])):
            raise DomainError("exponents_not_nondecreasing", exponents=list(ks))
        object.__setattr__(self, "exponents", ks)

    @property
    def n(self) -> int:
        return len(self.exponents)


Term = tuple[int, Fraction]

_FORMS = ("dw/w", "dz/z")


def _clean_terms(terms, window) -> tuple[Term, ...]:
    lo, hi = window
    acc: dict[int, Fraction] = {}
    for d, c in terms:
        acc[int(d)] = acc.get(int(d), Fraction(0)) + Fraction(c)
    out = tuple((d, c) for d, c in sorted(acc.items()) if c)
    for d, _ in out:
        if not lo <= d <= hi:
            raise DomainError("term_outside_window", degree=d, window=list(window))
    return out


@dataclass(frozen=True)
class LaurentMatrix:
    """Square matrix of truncated Laurent polynomials with a stated window
    and a logarithmic-form flag (dw/w on the weighted side, dz/z upstairs)."""

    n: int
    entries: tuple[tuple[tuple[Term, ...], ...], ...]
    window: tuple[int, int]
    form: str

    def __post_init__(self):
        if self.form not in _FORMS:
            raise DomainError("bad_form_flag", form=self.form)
        lo, hi = self.window
        if lo > hi:
            raise DomainError("bad_window", window=list(self.window))
        object.__setattr__(self, "window", (int(lo), int(hi)))
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise DomainError("bad_matrix_shape", n=self.n)
        rows = tuple(tuple(_clean_terms(e, self.window) for e in row)
                     for row in self.entries)
        object.__setattr__(self, "entries", rows)

    def entry(self, i: int, j: int) -> tuple[Term, ...]:
        return self.entries[i][j]

    def is_zero(self) -> bool:
        return all(not e for row in self.entries for e in row)


def laurent_zero(n: int, window: tuple[int, int], form: str) -> LaurentMatrix:
    empty = tuple(tuple(() for _ in range(n)) for _ in range(n))
    return LaurentMatrix(n, empty, window, form)


def laurent_matrix(n: int, terms: Mapping[tuple[int, int], Sequence[Term]],
                   window: tuple[int, int], form: str) -> LaurentMatrix:
    """Build from a sparse {(i,j): [(deg, coef), ...]} description."""
    rows = [[() for _ in range(n)] for _ in range(n)]
    for (i, j), ts in terms.items():
        if not (0 <= i < n and 0 <= j < n):
            raise DomainError("entry_out_of_range", entry=[i, j], n=n)
        rows[i][j] = tuple((int(d), Fraction(c)) for d, c in ts)
    return LaurentMatrix(n, tuple(tuple(r) for r in rows), window, form)


def equivariance_check(mat: LaurentMatrix, chart: LocalChart) -> bool:
    """True iff each entry (i,j) uses only powers congruent to k_i - k_j
    mod m, and entries with k_i < k_j vanish identically."""
    if mat.n != chart.n:
        raise DomainError("size_mismatch", matrix=mat.n, chart=chart.n)
    k = chart.exponents
    for i in range(mat.n):
        for j in range(mat.n):
            terms = mat.entry(i, j)
            if k[i] < k[j] and terms:
                return False
            if any((d - (k[i] - k[j])) % chart.m for d, _ in terms):
                return False
    return True


def _weights_to_exponents(m: int, weights: Sequence[Fraction]) -> list[int]:
    ks = []
    for w in weights:
        w = Fraction(w)
        if not 0 <= w < 1:
            raise DomainError("weight_out_of_range", weight=str(w))
        if (w * m).denominator != 1:
            raise DomainError("weight_not_in_denominator", weight=str(w), m=m)
        ks.append(int(w * m))
    if any(a > b for a, b in zip(ks, ks[1:])):
        raise DomainError("weights_not_nondecreasing",
                          weights=[str(Fraction(w)) for w in weights])
    return ks


def par_to_orb_local(m: int, weights: Sequence[Fraction], higgs: LaurentMatrix,
                     window: tuple[int, int] | None = None
                     ) -> tuple[LocalChart, LaurentMatrix]:
    """Weighted local Higgs matrix psi(w) dw/w  ->  equivariant matrix in z.

    Entry (i,j) becomes m z^{k_i-k_j} psi_ij(z^m) with the dz/z form, where
    k_i = m * weight_i; the input must respect the weight filtration (entries
    with k_i < k_j identically zero).  Output truncated to the stated window,
    default [-1, 8m].
    """
    if m < 1:
        raise DomainError("bad_chart_order", m=m)
    if higgs.form != "dw/w":
        raise DomainError("wrong_form", form=higgs.form, expected="dw/w")
    if len(weights) != higgs.n:
        raise DomainError("size_mismatch", matrix=higgs.n, weights=len(weights))
    ks = _weights_to_exponents(m, weights)
    if window is None:
        window = (-1, 8 * m)
    lo, hi = window
    rows = []
    for i in range(higgs.n):
        row = []
        for j in range(higgs.n):
            terms = higgs.entry(i, j)
            if ks[i] < ks[j] and terms:
                raise DomainError("filtration_violation", entry=[i, j])
            row.append(tuple((e, m * c) for e, c in
                             ((m * d + ks[i] - ks[j], c) for d, c in terms)
                             if lo <= e <= hi))
        rows.append(tuple(row))
    chart = LocalChart(m, tuple(ks))
    return chart, LaurentMatrix(higgs.n, tuple(rows), window, "dz/z")


def orb_to_par_local(chart: LocalChart, mat: LaurentMatrix,
                     window: tuple[int, int] | None = None
                     ) -> tuple[tuple[Fraction, ...], LaurentMatrix]:
    """Equivariant matrix in z  ->  weights k_i/m plus matrix in w = z^m.

    Inverse of par_to_orb_local on the truncation window: entry terms c z^e
    map to (c/m) w^{(e-k_i+k_j)/m}; equivariance makes the exponent integral.
    """
    if mat.form != "dz/z":
        raise DomainError("wrong_form", form=mat.form, expected="dz/z")
    if any(k == chart.m for k in chart.exponents):
        raise DomainError("exponent_equals_order", m=chart.m)
    if not equivariance_check(mat, chart):
        raise DomainError("not_equivariant")
    if window is None:
        window = (-1, 8)
    lo, hi = window
    k = chart.exponents
    rows = []
    for i in range(mat.n):
        row = []
        for j in range(mat.n):
            row.append(tuple((d, c / chart.m) for d, c in
                             (((e - k[i] + k[j]) // chart.m, c)
                              for e, c in mat.entry(i, j))
                             if lo <= d <= hi))
        rows.append(tuple(row))
    weights = tuple(Fraction(ki, chart.m) for ki in k)
    return weights, LaurentMatrix(mat.n, tuple(rows), window, "dw/w")


# ---------------------------------------------------------------- JSON ----

def vline_to_json(l: VLineBundle) -> dict:
    return {"desing": l.desing_degree,
            "isotropy": {lbl: b for lbl, b in sorted(l.isotropy.items())}}


def vline_from_json(obj: dict) -> VLineBundle:
    return VLineBundle(int(obj["desing"]),
                       {str(k): int(v) for k, v in obj.get("isotropy", {}).items()})


def laurent_to_json(mat: LaurentMatrix, m: int) -> dict:
    return {"m": m,
            "form": mat.form,
            "window": list(mat.window),
            "entries": [[[{"deg": d, "coef": rat_to_str(c)} for d, c in e]
                         for e in row] for row in mat.entries]}


def laurent_from_json(obj: dict) -> tuple[int, LaurentMatrix]:
    rows = tuple(
        tuple(tuple((int(t["deg"]), rat_from_str(t["coef"])) for t in e)
              for e in row)
        for row in obj["entries"])
    mat = LaurentMatrix(len(rows), rows, tuple(obj["window"]), obj["form"])
    return int(obj["m"]), mat
