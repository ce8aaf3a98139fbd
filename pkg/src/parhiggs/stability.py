"""Stability for decomposable parabolic Higgs models and Sp(2n,R) triples.

A decomposable model is a direct sum of parabolic line bundles together with
the support pattern of the Higgs field (arrows dst <- src, each asserting a
nonzero component L_src -> L_dst (x) K(D)).  Stability is decided over the
coordinate subbundles: that is exactly the argument pattern the explicit
families below (Hitchin sections, maximal triples) live in, and it is
finitely decidable.

Also here: the weighted-filtration machinery (relative degree of two
filtrations, parabolic degree of a reduction, the filtration-degree test for
symplectic models), the Toledo invariant with its Milnor-Wood bounds, and the
Hitchin-family builders.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact_core import DomainError, q_matrix_rank, rat_to_str
from .parbun import ParabolicLineBundle, line_from_json, line_to_json, par_dual, pardeg
from .surface import MarkedSurface, deg_kd, require_hyperbolic, standard_surface, \
    surface_from_json, surface_to_json

__all__ = [
    "DecomposableHiggsModel",
    "SpTripleModel",
    "WeightedFiltration",
    "StabilityReport",
    "invariant_subsets",
    "arrow_feasibility_violations",
    "stability_verdict",
    "toledo",
    "milnor_wood_bound",
    "general_mw_interval",
    "is_maximal",
    "sp_dual",
    "hitchin_model",
    "hitchin_sp_triple",
    "relative_degree",
    "coordinate_filtration",
    "pardeg_of_reduction_gl",
    "alpha_stability_check_gl",
    "sp_filtration_degree",
    "sp_support_membership",
    "model_to_json",
    "model_from_json",
    "sp_triple_to_json",
    "sp_triple_from_json",
]

Arrow = tuple[int, int]   # (dst, src)


@dataclass(frozen=True)
class DecomposableHiggsModel:
    surface: MarkedSurface
    summands: tuple[ParabolicLineBundle, ...]
    arrows: frozenset[Arrow] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(self.summands))
        object.__setattr__(self, "arrows", frozenset(self.arrows))
        n = len(self.summands)
        for (i, j) in self.arrows:
            if not (0 <= i < n and 0 <= j < n):
                raise DomainError("arrow_out_of_range", arrow=[i, j], n=n)

    @property
    def n(self) -> int:
        return len(self.summands)

    def pardegs(self) -> list[Fraction]:
        return [pardeg(l, self.surface) for l in self.summands]

    def sub_pardeg(self, subset: Iterable[int]) -> Fraction:
        pd = self.pardegs()
        return sum((pd[i] for i in subset), Fraction(0))


@dataclass(frozen=True)
class SpTripleModel:
    """Sp(2n,R) data: summand list of V plus symmetric beta/gamma supports.

    beta (i,j) asserts a nonzero component V_j^dual -> V_i (x) K(D) and
    gamma (i,j) one of V_j -> V_i^dual (x) K(D); both come from symmetric
    morphisms, so their supports must be symmetric index patterns.
    """

    surface: MarkedSurface
    v_summands: tuple[ParabolicLineBundle, ...]
    beta_arrows: frozenset[Arrow] = frozenset()
    gamma_arrows: frozenset[Arrow] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "v_summands", tuple(self.v_summands))
        object.__setattr__(self, "beta_arrows", frozenset(self.beta_arrows))
        object.__setattr__(self, "gamma_arrows", frozenset(self.gamma_arrows))
        n = len(self.v_summands)
        for name, pat in (("beta", self.beta_arrows), ("gamma", self.gamma_arrows)):
            for (i, j) in pat:
                if not (0 <= i < n and 0 <= j < n):
                    raise DomainError("arrow_out_of_range", arrow=[i, j], n=n)
                if (j, i) not in pat:
                    raise DomainError("asymmetric_support", which=name, arrow=[i, j])

    @property
    def n(self) -> int:
        return len(self.v_summands)

    def to_decomposable(self) -> DecomposableHiggsModel:
        """The induced model on E = V + V^dual (duals listed after V)."""
        n = self.n
        summands = self.v_summands + tuple(par_dual(v) for v in self.v_summands)
        arrows = {(i, n + j) for (i, j) in self.beta_arrows}
        arrows |= {(n + i, j) for (i, j) in self.gamma_arrows}
        return DecomposableHiggsModel(self.surface, summands, frozenset(arrows))


# ------------------------------------------------------------ stability ----

def invariant_subsets(m: DecomposableHiggsModel) -> list[tuple[int, ...]]:
    """Proper nonempty index sets closed under the arrows, lexicographic."""
    out = []
    for bits in range(1, (1 << m.n) - 1):
        if all(not (bits >> j & 1) or (bits >> i & 1) for (i, j) in m.arrows):
            out.append(tuple(k for k in range(m.n) if bits >> k & 1))
    out.sort()
    return out


def arrow_feasibility_violations(m: DecomposableHiggsModel) -> list[Arrow]:
    """Arrows whose Hom line bundle has negative degree (warning, not error).

    A nonzero component L_j -> L_i (x) K(D) needs
    pardeg L_i + (2g-2+s) - pardeg L_j >= 0; weight compatibility can still
    obstruct existence, so a clean list here is necessary, not sufficient.
    """
    pd = m.pardegs()
    kd = deg_kd(m.surface)
    return sorted((i, j) for (i, j) in m.arrows if pd[i] + kd - pd[j] < 0)


@dataclass(frozen=True)
class StabilityReport:
    verdict: str                      # stable | strictly_semistable | unstable | polystable
    witness: tuple[int, ...] | None
    slope: Fraction

    def to_json(self) -> dict:
        return {"verdict": self.verdict,
                "witness": list(self.witness) if self.witness is not None else None,
                "slope": rat_to_str(self.slope)}


def _undirected_components(n: int, arrows: frozenset[Arrow]) -> list[tuple[int, ...]]:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for (i, j) in arrows:
        parent[find(i)] = find(j)
    comps: dict[int, list[int]] = {}
    for k in range(n):
        comps.setdefault(find(k), []).append(k)
    return [tuple(sorted(v)) for v in sorted(comps.values())]


def _restrict(m: DecomposableHiggsModel, subset: Sequence[int]) -> DecomposableHiggsModel:
    pos = {k: t for t, k in enumerate(subset)}
    keep = frozenset((pos[i], pos[j]) for (i, j) in m.arrows
                     if i in pos and j in pos)
    return DecomposableHiggsModel(m.surface, tuple(m.summands[k] for k in subset), keep)


def stability_verdict(m: DecomposableHiggsModel) -> StabilityReport:
    """Slope verdict over the invariant coordinate subbundles.

    stable: every invariant subset has strictly smaller parabolic slope;
    unstable: a subset beats the total slope (witness = first maximizer);
    polystable: the arrow graph splits into standalone-stable pieces of equal
    slope; strictly_semistable: equality occurs without that splitting.
    """
    if m.n == 0:
        raise DomainError("empty_model")
    mu = m.sub_pardeg(range(m.n)) / m.n
    subs = invariant_subsets(m)
    slopes = [(s, m.sub_pardeg(s) / len(s)) for s in subs]
    over = [t for t in slopes if t[1] > mu]
    if over:
        best = max(sl for _, sl in over)
        witness = next(s for s, sl in over if sl == best)
        return StabilityReport("unstable", witness, mu)
    equal = [s for s, sl in slopes if sl == mu]
    if not equal:
        return StabilityReport("stable", None, mu)
    comps = _undirected_components(m.n, m.arrows)
    if len(comps) > 1 and all(
            m.sub_pardeg(c) / len(c) == mu
            and stability_verdict(_restrict(m, c)).verdict == "stable"
            for c in comps):
        return StabilityReport("polystable", None, mu)
    return StabilityReport("strictly_semistable", equal[0], mu)


# --------------------------------------------------- Toledo, Milnor-Wood ----

def toledo(m: SpTripleModel) -> Fraction:
    """Parabolic Toledo invariant: pardeg V."""
    return sum((pardeg(v, m.surface) for v in m.v_summands), Fraction(0))


def milnor_wood_bound(n: int, g: int, s: int) -> Fraction:
    """n(g - 1 + s/2), the sharp bound for semistable symplectic models."""
    require_hyperbolic(standard_surface(g, s))
    return n * (Fraction(g - 1) + Fraction(s, 2))


def general_mw_interval(rk_plus: int, rk_minus: int, g: int, s: int
                        ) -> tuple[Fraction, Fraction]:
    """Toledo interval [-rk+ . deg K(D), rk- . deg K(D)] from the field ranks."""
    if rk_plus < 0 or rk_minus < 0:
        raise DomainError("negative_rank", rk_plus=rk_plus, rk_minus=rk_minus)
    kd = 2 * g - 2 + s
    return (Fraction(-rk_plus * kd), Fraction(rk_minus * kd))


def is_maximal(m: SpTripleModel) -> bool:
    return toledo(m) == milnor_wood_bound(m.n, m.surface.genus, m.surface.s)


def sp_dual(m: SpTripleModel) -> SpTripleModel:
    """(V, beta, gamma) -> (V^dual, gamma, beta); negates the Toledo invariant."""
    return SpTripleModel(m.surface, tuple(par_dual(v) for v in m.v_summands),
                         m.gamma_arrows, m.beta_arrows)


# ------------------------------------------------------- Hitchin family ----

def hitchin_model(k: int, g: int, s: int) -> DecomposableHiggsModel:
    """The rank-k Hitchin-section model.

    Symmetric-power bookkeeping of the rank-2 model L0^dual + L0 (L0 a square
    root of K(D), pardeg g-1+s/2), twisted so every summand carries weight 1/2
    at each point for k even and weight 0 for k odd; arrows are the
    superdiagonal constants plus the bottom-row differentials a_2..a_k.
    """
    if k < 2:
        raise DomainError("bad_hitchin_rank", k=k)
    surf = standard_surface(g, s)
    require_hyperbolic(surf)
    deg_a = -(g - 1) - s
    deg_b = g - 1
    twist = k // 2 - 1 if k % 2 == 0 else (k - 1) // 2
    w = Fraction(1, 2) if k % 2 == 0 else Fraction(0)
    summands = tuple(
        ParabolicLineBundle((k - 1 - i) * deg_a + i * deg_b + twist * s,
                            {x: w for x in surf.labels()} if w else {})
        for i in range(k))
    arrows = {(i, i + 1) for i in range(k - 1)}
    arrows |= {(k - 1, j) for j in range(k - 1)}
    return DecomposableHiggsModel(surf, summands, frozenset(arrows))


def hitchin_sp_triple(k: int, g: int, s: int) -> SpTripleModel:
    """Symplectic form of the even-rank Hitchin model.

    V collects the odd-level summands (indices k-1, k-3, ..., 1) so that the
    remaining levels are exactly their duals; the grading keeps the
    superdiagonal arrows and the even-index bottom differentials, each
    symmetrized into the beta/gamma supports.
    """
    if k < 2 or k % 2:
        raise DomainError("bad_sp_hitchin_rank", k=k)
    base = hitchin_model(k, g, s)
    v_idx = list(range(k - 1, 0, -2))           # V_t = summand k-1-2t
    v = tuple(base.summands[i] for i in v_idx)
    beta, gamma = set(), set()
    for i in range(k - 1):                      # superdiagonal (i <- i+1)
        if i % 2 == 0:
            gamma.add((i // 2, (k - 2 - i) // 2))
        else:
            beta.add(((k - 1 - i) // 2, (i + 1) // 2))
    for j in range(0, k - 1, 2):                # bottom row, even a-index only
        beta.add((0, j // 2))
    beta |= {(j, i) for (i, j) in beta}
    gamma |= {(j, i) for (i, j) in gamma}
    return SpTripleModel(base.surface, v, frozenset(beta), frozenset(gamma))


# ------------------------------------------- weighted-filtration pairing ----

@dataclass(frozen=True)
class WeightedFiltration:
    """Strictly nested subspaces of Q^n (last = whole space), increasing weights."""

    ambient_dim: int
    steps: tuple[tuple[tuple[Fraction, ...], ...], ...]   # generators per step
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in self.weights))
        object.__setattr__(
            self, "steps",
            tuple(tuple(tuple(Fraction(x) for x in gen) for gen in step)
                  for step in self.steps))
        if len(self.steps) != len(self.weights) or not self.steps:
            raise DomainError("bad_filtration_shape")
        if any(a >= b for a, b in zip(self.weights, self.weights[1:])):
            raise DomainError("filtration_weights_not_increasing")
        dims = []
        for t, step in enumerate(self.steps):
            for gen in step:
                if len(gen) != self.ambient_dim:
                    raise DomainError("bad_generator_length")
            dims.append(q_matrix_rank(step))
            if t and q_matrix_rank(self.steps[t - 1] + step) != dims[t]:
                raise DomainError("filtration_not_nested", step=t)
        if any(a >= b for a, b in zip(dims, dims[1:])) or dims[-1] != self.ambient_dim:
            raise DomainError("filtration_dims_bad", dims=dims)
        object.__setattr__(self, "_dims", tuple(dims))


def _basis_vector(n: int, k: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(1 if t == k else 0) for t in range(n))


def coordinate_filtration(n: int, index_steps: Sequence[Sequence[int]],
                          weights: Sequence[Fraction]) -> WeightedFiltration:
    steps = tuple(tuple(_basis_vector(n, k) for k in sorted(step))
                  for step in index_steps)
    return WeightedFiltration(n, steps, tuple(weights))


def relative_degree(a: WeightedFiltration, b: WeightedFiltration) -> Fraction:
    """Pairing sum_ij (la_i - la_{i+1})(mu_j - mu_{j+1}) dim(W_i cap B_j).

    Trailing weights are 0; intersection dimensions are exact over Q
    (dim W + dim B - dim(W+B) by fraction elimination).
    """
    if a.ambient_dim != b.ambient_dim:
        raise DomainError("ambient_dim_mismatch", a=a.ambient_dim, b=b.ambient_dim)
    la = list(a.weights) + [Fraction(0)]
    mu = list(b.weights) + [Fraction(0)]
    total = Fraction(0)
    for i, wi in enumerate(a.steps):
        for j, bj in enumerate(b.steps):
            ci = la[i] - la[i + 1]
            cj = mu[j] - mu[j + 1]
            if ci == 0 or cj == 0:
                continue
            inter = q_matrix_rank(wi) + q_matrix_rank(bj) - q_matrix_rank(wi + bj)
            total += ci * cj * inter
    return total


def _check_index_steps(n: int, index_steps: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    steps = [tuple(sorted(set(st))) for st in index_steps]
    if not steps or steps[-1] != tuple(range(n)):
        raise DomainError("filtration_must_end_full", n=n)
    for prev, cur in zip(steps, steps[1:]):
        if not set(prev) < set(cur):
            raise DomainError("filtration_not_nested")
    if any(not st or any(k < 0 or k >= n for k in st) for st in steps):
        raise DomainError("bad_index_step", n=n)
    return steps


def _point_flag_filtration(m: DecomposableHiggsModel, x: str) -> WeightedFiltration:
    """The flag of the decomposable bundle at x as an increasing filtration:
    step j spans the summand directions of the j smallest weights, carrying
    those weights (low-weight steps first, so the weights increase)."""
    wts = [l.weight(x) for l in m.summands]
    levels = sorted(set(wts))
    index_steps = [[k for k, w in enumerate(wts) if w <= lv] for lv in levels]
    return coordinate_filtration(m.n, index_steps, levels)


def pardeg_of_reduction_gl(m: DecomposableHiggsModel,
                           index_steps: Sequence[Sequence[int]],
                           weights: Sequence[Fraction]) -> Fraction:
    """Parabolic degree of the weighted coordinate reduction.

    la_k deg E + sum_{i<k} (la_i - la_{i+1}) deg W_i, plus one relative-degree
    pairing against the weighted flag filtration at each marked point.
    """
    steps = _check_index_steps(m.n, index_steps)
    lam = [Fraction(w) for w in weights]
    if len(lam) != len(steps):
        raise DomainError("bad_filtration_shape")
    degs = [l.degree for l in m.summands]
    total = lam[-1] * sum(degs[k] for k in steps[-1])
    for i in range(len(steps) - 1):
        total += (lam[i] - lam[i + 1]) * sum(degs[k] for k in steps[i])
    red = coordinate_filtration(m.n, steps, lam)
    for x in m.surface.labels():
        total += relative_degree(red, _point_flag_filtration(m, x))
    return total


def alpha_stability_check_gl(m: DecomposableHiggsModel, alpha: Fraction
                             ) -> tuple[bool, tuple[int, ...] | None]:
    """Reduction-degree test: every invariant two-step coordinate filtration
    (weights 0 < 1; one-step reductions carry no data) must satisfy
    sum (la_i - la_{i+1})(pardeg W_i - alpha rk W_i) >= 0.

    0/1 weight vectors suffice: the quantity is linear in the consecutive
    weight differences, whose signs the 0/1 family already realizes.
    Returns (ok, failing subset or None).
    """
    alpha = Fraction(alpha)
    full = list(range(m.n))
    for s in invariant_subsets(m):
        lam = (Fraction(0), Fraction(1))
        val = pardeg_of_reduction_gl(m, [list(s), full], lam)
        ranks = lam[-1] * m.n + (lam[0] - lam[1]) * len(s)
        if val - alpha * ranks < 0:
            return False, s
    return True, None


def sp_filtration_degree(m: DecomposableHiggsModel,
                         index_steps: Sequence[Sequence[int]],
                         weights: Sequence[Fraction],
                         alpha: Fraction) -> Fraction:
    """sum_j (la_j - la_{j+1}) (pardeg V_j - alpha rk V_j), la trailing 0."""
    steps = _check_index_steps(m.n, index_steps)
    lam = [Fraction(w) for w in weights]
    if len(lam) != len(steps):
        raise DomainError("bad_filtration_shape")
    if any(a >= b for a, b in zip(lam, lam[1:])):
        raise DomainError("filtration_weights_not_increasing")
    lam.append(Fraction(0))
    alpha = Fraction(alpha)
    return sum(((lam[j] - lam[j + 1])
                * (m.sub_pardeg(st) - alpha * len(st))
                for j, st in enumerate(steps)), Fraction(0))


def sp_support_membership(m: SpTripleModel,
                          index_steps: Sequence[Sequence[int]],
                          weights: Sequence[Fraction]) -> bool:
    """Is the Higgs support allowed by the filtration weights?

    Reading each index through its first filtration step, beta needs
    la_i + la_j <= 0 on its support and gamma needs la_i + la_j >= 0.
    """
    steps = _check_index_steps(m.n, index_steps)
    lam = [Fraction(w) for w in weights]
    if len(lam) != len(steps):
        raise DomainError("bad_filtration_shape")
    level = {}
    for t, st in enumerate(steps):
        for k in st:
            level.setdefault(k, t)
    for (i, j) in m.beta_arrows:
        if lam[level[i]] + lam[level[j]] > 0:
            return False
    for (i, j) in m.gamma_arrows:
        if lam[level[i]] + lam[level[j]] < 0:
            return False
    return True


# ---------------------------------------------------------------- JSON ----

def model_to_json(m: DecomposableHiggsModel) -> dict:
    return {"surface": surface_to_json(m.surface),
            "summands": [line_to_json(l) for l in m.summands],
            "arrows": sorted([i, j] for (i, j) in m.arrows)}


def model_from_json(obj: dict) -> DecomposableHiggsModel:
    return DecomposableHiggsModel(
        surface_from_json(obj["surface"]),
        tuple(line_from_json(l) for l in obj["summands"]),
        frozenset((int(i), int(j)) for i, j in obj.get("arrows", [])))


def sp_triple_to_json(m: SpTripleModel) -> dict:
    return {"surface": surface_to_json(m.surface),
            "v_summands": [line_to_json(l) for l in m.v_summands],
            "beta": sorted([i, j] for (i, j) in m.beta_arrows),
            "gamma": sorted([i, j] for (i, j) in m.gamma_arrows)}


def sp_triple_from_json(obj: dict) -> SpTripleModel:
    return SpTripleModel(
        surface_from_json(obj["surface"]),
        tuple(line_from_json(l) for l in obj["v_summands"]),
        frozenset((int(i), int(j)) for i, j in obj.get("beta", [])),
        frozenset((int(i), int(j)) for i, j in obj.get("gamma", [])))
