"""Base geometry: a genus-g surface with s marked points and isotropy orders.

Carries the degree bookkeeping for the line bundles K, xi = O(D) and K(D),
and the Riemann-Roch count used by the Teichmüller-dimension formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact_core import DomainError

__all__ = [
    "MarkedPoint",
    "MarkedSurface",
    "FormalLineBundle",
    "standard_surface",
    "deg_kd",
    "h0_twisted_power",
    "require_hyperbolic",
    "canonical_bundle",
    "divisor_bundle",
    "kd_bundle",
    "surface_to_json",
    "surface_from_json",
]


@dataclass(frozen=True)
class MarkedPoint:
    label: str
    order: int = 2

    def __post_init__(self):
        if self.order < 1:
            raise DomainError("bad_isotropy_order", label=self.label, order=self.order)


@dataclass(frozen=True)
class MarkedSurface:
    """A compact genus-g surface with a reduced divisor of marked points."""

    genus: int
    points: tuple[MarkedPoint, ...] = ()

    def __post_init__(self):
        if self.genus < 0:
            raise DomainError("bad_genus", genus=self.genus)
        labels = [p.label for p in self.points]
        if len(set(labels)) != len(labels):
            raise DomainError("duplicate_point_labels", labels=labels)

    @property
    def s(self) -> int:
        return len(self.points)

    def labels(self) -> tuple[str, ...]:
        return tuple(p.label for p in self.points)

    def order_of(self, label: str) -> int:
        for p in self.points:
            if p.label == label:
                return p.order
        raise DomainError("unknown_point", label=label)

    def is_hyperbolic(self) -> bool:
        return 2 * self.genus - 2 + self.s > 0


@dataclass(frozen=True)
class FormalLineBundle:
    """A line bundle remembered only by its degree."""

    degree: int


def standard_surface(genus: int, s: int, order: int = 2) -> MarkedSurface:
    """Surface with points labelled x1..xs, all of the same isotropy order."""
    return MarkedSurface(genus, tuple(MarkedPoint(f"x{i+1}", order) for i in range(s)))


def require_hyperbolic(surface: MarkedSurface) -> None:
    """Fail unless 2g - 2 + s > 0."""
    if not surface.is_hyperbolic():
        raise DomainError("not_hyperbolic", g=surface.genus, s=surface.s)


def deg_kd(surface: MarkedSurface) -> int:
    """deg K(D) = 2g - 2 + s."""
    return 2 * surface.genus - 2 + surface.s


def canonical_bundle(surface: MarkedSurface) -> FormalLineBundle:
    return FormalLineBundle(2 * surface.genus - 2)


def divisor_bundle(surface: MarkedSurface) -> FormalLineBundle:
    return FormalLineBundle(surface.s)


def kd_bundle(surface: MarkedSurface) -> FormalLineBundle:
    return FormalLineBundle(deg_kd(surface))


def h0_twisted_power(surface: MarkedSurface, m: int) -> int:
    """dim H^0(X, K^{m+1} otimes xi^m) = (2m+1)(g-1) + m s for m >= 1.

    Valid because deg K^{m+1} xi^m exceeds 2g-2 on a hyperbolic surface,
    killing H^1; m = 0 is rejected rather than special-cased.
    """
    require_hyperbolic(surface)
    if m < 1:
        raise DomainError("bad_twist_power", m=m)
    return (2 * m + 1) * (surface.genus - 1) + m * surface.s


def surface_to_json(surface: MarkedSurface) -> dict:
    return {
        "genus": surface.genus,
        "points": [{"label": p.label, "order": p.order} for p in surface.points],
    }


def surface_from_json(obj: dict) -> MarkedSurface:
    try:
        pts = tuple(MarkedPoint(str(p["label"]), int(p.get("order", 2)))
                    for p in obj.get("points", []))
        return MarkedSurface(int(obj["genus"]), pts)
    except (KeyError, TypeError) as exc:
        raise DomainError("bad_surface_json") from exc
