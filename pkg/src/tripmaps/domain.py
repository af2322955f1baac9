"""Core identifiers and per-triple capability records.

The library supports the 108 triangle partition maps with polynomial
branch behavior.  A map is named by a triple of permutation labels
(sigma, tau0, tau1); the labels are opaque keys into the embedded data
tables, no group arithmetic is performed on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .errors import OutsideTriangle, ParseError, UnsupportedTriple
from .tables.banach import BANACH
from .tables.eigen import DENSITIES, EIGENFUNCTIONS
from .tables.forward import FORWARD
from .tables.hilbert_rows import HILBERT

PERMUTATION_LABELS = ("e", "12", "13", "23", "123", "132")

# triples whose ergodicity is established in the literature; empirical
# digit statistics are asserted only for these
ERGODIC_TRIPLES = (("e", "e", "e"), ("e", "23", "e"))


@dataclass(frozen=True)
class PermutationTriple:
    sigma: str
    tau0: str
    tau1: str

    def __post_init__(self) -> None:
        key = (self.sigma, self.tau0, self.tau1)
        if key not in FORWARD:
            raise UnsupportedTriple(f"unsupported triple {key}")

    @property
    def key(self) -> tuple[str, str, str]:
        return (self.sigma, self.tau0, self.tau1)

    def __str__(self) -> str:
        return f"{self.sigma},{self.tau0},{self.tau1}"


@dataclass(frozen=True)
class TrianglePoint:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not in_triangle((self.x, self.y)):
            raise OutsideTriangle(f"({self.x}, {self.y}) not interior to the triangle")

    @property
    def xy(self) -> tuple[float, float]:
        return (self.x, self.y)


@dataclass(frozen=True)
class DigitSequence:
    digits: tuple[int, ...]
    terminated: bool = False  # True when the orbit hit the boundary early

    def __post_init__(self) -> None:
        if any(d < 0 for d in self.digits):
            raise ValueError("digits must be non-negative")

    @property
    def length(self) -> int:
        return len(self.digits)


Func2 = Callable[[float, float], float]
Func3 = Callable[[float, float, float], float]


@dataclass(frozen=True)
class SpectralData:
    banach_weight_g: Optional[Func2]
    summand: Optional[Func3]          # (k, x, y)
    eigenfunction_h: Optional[Func2]
    density_r: Optional[Func2]
    hilbert_l: Optional[Func2]
    hilbert_j: Optional[Func2]
    hilbert_h: Optional[Func2]
    ergodic: bool


def parse_triple(text: str) -> PermutationTriple:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3 or not all(parts):
        raise ParseError(f"expected three comma-separated labels, got {text!r}")
    for p in parts:
        if p not in PERMUTATION_LABELS:
            raise ParseError(f"unknown permutation label {p!r} in {text!r}")
    return PermutationTriple(*parts)


def in_triangle(p) -> bool:
    x, y = p[0], p[1]
    return 0.0 < y < x < 1.0


def supported_triples() -> list[tuple[str, str, str]]:
    """All 108 triples, in embedded-table order."""
    return list(FORWARD.keys())


def spectral_data(t: PermutationTriple) -> SpectralData:
    key = t.key
    banach = BANACH.get(key)
    hil = HILBERT.get(key)
    return SpectralData(
        banach_weight_g=banach.g if banach else None,
        summand=banach.summand if banach else None,
        eigenfunction_h=EIGENFUNCTIONS.get(key),
        density_r=DENSITIES.get(key),
        hilbert_l=hil.l if hil else None,
        hilbert_j=hil.j if hil else None,
        hilbert_h=hil.h if hil else None,
        ergodic=key in ERGODIC_TRIPLES,
    )
