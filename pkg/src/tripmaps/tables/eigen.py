"""Eigenvalue-1 eigenfunctions and normalized invariant densities.

Eighteen triples admit an explicit eigenfunction ``h`` with ``L h = h``;
they are stored as written, without normalization.  The same eighteen
triples have a normalized invariant density ``r`` with ``integral_triangle
r = 1``, given by the eigenfunction scaled by 6/pi^2 or 12/pi^2 (and with
``x - 2`` rewritten as ``2 - x`` where that keeps ``r`` positive).
"""

from __future__ import annotations

from math import pi
from typing import Callable

Func2 = Callable[[float, float], float]

EIGENFUNCTIONS: dict[tuple[str, str, str], Func2] = {
    ("e", "e", "e"): lambda x, y: 1 / (x * (y + 1)),
    ("e", "23", "e"): lambda x, y: 1 / (x * (1 - y)),
    ("e", "132", "e"): lambda x, y: 1 / (x * (1 - y)),
    ("12", "12", "12"): lambda x, y: 1 / ((y + 1) * (-x + y + 1)),
    ("12", "13", "12"): lambda x, y: 1 / ((1 - y) * (-x + y + 1)),
    ("12", "123", "12"): lambda x, y: 1 / ((1 - y) * (-x + y + 1)),
    ("13", "13", "13"): lambda x, y: 1 / ((x - 2) * (1 - y)),
    ("13", "23", "13"): lambda x, y: 1 / (x * (1 - y)),
    ("13", "132", "13"): lambda x, y: 1 / (x * (1 - y)),
    ("23", "e", "23"): lambda x, y: 1 / (x * (-x + y + 1)),
    ("23", "12", "23"): lambda x, y: 1 / (x * (-x + y + 1)),
    ("23", "23", "23"): lambda x, y: 1 / (x * (x - y + 1)),
    ("123", "13", "132"): lambda x, y: 1 / ((1 - y) * (-x + y + 1)),
    ("123", "123", "132"): lambda x, y: 1 / ((1 - y) * (-x + y + 1)),
    ("123", "132", "132"): lambda x, y: 1 / ((1 - y) * (x - y + 1)),
    ("132", "e", "123"): lambda x, y: 1 / (x * (-x + y + 1)),
    ("132", "12", "123"): lambda x, y: 1 / (x * (-x + y + 1)),
    ("132", "123", "123"): lambda x, y: 1 / ((x - 2) * (-x + y + 1)),
}

_C6 = 6 / pi ** 2
_C12 = 12 / pi ** 2

DENSITIES: dict[tuple[str, str, str], Func2] = {
    ("e", "e", "e"): lambda x, y: _C12 / (x * (y + 1)),
    ("e", "23", "e"): lambda x, y: _C6 / (x * (1 - y)),
    ("e", "132", "e"): lambda x, y: _C6 / (x * (1 - y)),
    ("12", "12", "12"): lambda x, y: _C12 / ((y + 1) * (-x + y + 1)),
    ("12", "13", "12"): lambda x, y: _C6 / ((1 - y) * (-x + y + 1)),
    ("12", "123", "12"): lambda x, y: _C6 / ((1 - y) * (-x + y + 1)),
    ("13", "13", "13"): lambda x, y: _C12 / ((2 - x) * (1 - y)),
    ("13", "23", "13"): lambda x, y: _C6 / (x * (1 - y)),
    ("13", "132", "13"): lambda x, y: _C6 / (x * (1 - y)),
    ("23", "e", "23"): lambda x, y: _C6 / (x * (-x + y + 1)),
    ("23", "12", "23"): lambda x, y: _C6 / (x * (-x + y + 1)),
    ("23", "23", "23"): lambda x, y: _C12 / (x * (x - y + 1)),
    ("123", "13", "132"): lambda x, y: _C6 / ((1 - y) * (-x + y + 1)),
    ("123", "123", "132"): lambda x, y: _C6 / ((1 - y) * (-x + y + 1)),
    ("123", "132", "132"): lambda x, y: _C12 / ((1 - y) * (x - y + 1)),
    ("132", "e", "123"): lambda x, y: _C6 / (x * (-x + y + 1)),
    ("132", "12", "123"): lambda x, y: _C6 / (x * (-x + y + 1)),
    ("132", "123", "123"): lambda x, y: _C12 / ((2 - x) * (-x + y + 1)),
}
