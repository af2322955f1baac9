"""Weight functions for the 47 triples whose transfer operator preserves a
weighted sup-norm space.

``g(x, y)`` is the weight defining the norm ``sup |g f|`` over the triangle.
``summand(k, x, y)`` is the ratio ``g(x, y) / (g(a_k, b_k) |Jac|)`` evaluated
at the digit-``k`` inverse branch; boundedness of ``sum_k |summand|`` is what
makes the operator act on the weighted space.  All 47 rows are parity-free,
so no sign argument is threaded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable


@dataclass(frozen=True)
class BanachRow:
    g: Callable[[float, float], float]
    summand: Callable[[float, float, float], float]


def _rows() -> dict[tuple[str, str, str], BanachRow]:
    R = BanachRow
    return {
        ("e", "e", "e"): R(
            lambda x, y: x,
            lambda k, x, y: x / (k * x + y + 1) ** 2),
        ("e", "12", "e"): R(
            lambda x, y: (-x + y + 1) ** 2,
            lambda k, x, y: -(x - y - 1) ** 2
            / ((x * k - y * k - k + x - 2 * y - 1) ** 2 * (x * k - y * k - k - y - 1))),
        ("e", "13", "e"): R(
            lambda x, y: (1 - y) ** 2,
            lambda k, x, y: -(y - 1) ** 2
            / ((y * k - k + x - 2) * (y * k - k + x - y - 1) ** 2)),
        ("e", "13", "12"): R(
            lambda x, y: (1 - y) ** 2,
            lambda k, x, y: -(y - 1) ** 2
            / ((y * k - k + x - 2) * (y * k - k + x - y - 1) ** 2)),
        ("e", "23", "e"): R(
            lambda x, y: x * (1 - y),
            lambda k, x, y: (x - x * y) / ((k * x - y + 1) * (k * x + x - y + 1))),
        ("e", "123", "e"): R(
            lambda x, y: (-x + y + 1) ** 2,
            lambda k, x, y: -(x - y - 1) ** 2
            / ((x * k - y * k - k + x - 2) * (x * k - y * k - k + 2 * x - y - 2) ** 2)),
        ("e", "132", "e"): R(
            lambda x, y: x * (1 - y),
            lambda k, x, y: (x - x * y) / ((y * k - k - x) * (y * k - k - x + y - 1))),
        ("e", "132", "12"): R(
            lambda x, y: (1 - y) ** 2,
            lambda k, x, y: -(y - 1) ** 2
            / ((y * k - k - x) ** 2 * (y * k - k - x + y - 1))),
        ("12", "e", "12"): R(
            lambda x, y: x ** 2,
            lambda k, x, y: x ** 2 / ((k * x + y + 1) * (k * x + x + y) ** 2)),
        ("12", "12", "12"): R(
            lambda x, y: -x + y + 1,
            lambda k, x, y: (-x + y + 1) / (-x * k + y * k + k + y + 1) ** 2),
        ("12", "13", "e"): R(
            lambda x, y: (1 - y) ** 2,
            lambda k, x, y: -(y - 1) ** 2
            / ((y * k - k + x - 2) * (y * k - k + x - y - 1) ** 2)),
        ("12", "13", "12"): R(
            lambda x, y: (1 - y) * (-x + y + 1),
            lambda k, x, y: (x - y - 1) * (y - 1)
            / ((y * k - k + x - 2) * (y * k - k + x - y - 1))),
        ("12", "23", "12"): R(
            lambda x, y: x ** 2,
            lambda k, x, y: x ** 2 / ((k * x + x - y + 1) * (k * x + 2 * x - y) ** 2)),
        ("12", "123", "12"): R(
            lambda x, y: (1 - y) * (-x + y + 1),
            lambda k, x, y: (x - y - 1) * (y - 1)
            / ((x * k - y * k - k + x - 2) * (x * k - y * k - k + y - 1))),
        ("12", "132", "e"): R(
            lambda x, y: (1 - y) ** 2,
            lambda k, x, y: -(y - 1) ** 2
            / ((y * k - k - x) ** 2 * (y * k - k - x + y - 1))),
        ("12", "132", "12"): R(
            lambda x, y: (1 - y) ** 2,
            lambda k, x, y: -(y - 1) ** 2
            / ((y * k - k - x) ** 2 * (y * k - k - x + y - 1))),
        ("13", "e", "13"): R(
            lambda x, y: x ** 2,
            lambda k, x, y: x ** 2 / ((k * x + y + 1) * (k * x - x + y + 1) ** 2)),
        ("13", "e", "123"): R(
            lambda x, y: x ** 2,
            lambda k, x, y: x ** 2 / ((k * x + y + 1) * (k * x - x + y + 1) ** 2)),
        ("13", "12", "13"): R(
            lambda x, y: (-x + y + 1) ** 2,
            lambda k, x, y: -(x - y - 1) ** 2
            / ((x * k - y * k - k + x - 2 * y - 1) ** 2 * (x * k - y * k - k - y - 1))),
        ("13", "13", "13"): R(
            lambda x, y: 1 - y,
            lambda k, x, y: (1 - y) / (y * k - k + x - 2) ** 2),
        ("13", "23", "13"): R(
            lambda x, y: x * (1 - y),
            lambda k, x, y: (x - x * y) / ((k * x - y + 1) * (k * x + x - y + 1))),
        ("13", "23", "123"): R(
            lambda x, y: x ** 2,
            lambda k, x, y: x ** 2 / ((k * x - y + 1) ** 2 * (k * x + x - y + 1))),
        ("13", "123", "13"): R(
            lambda x, y: (-x + y + 1) ** 2,
            lambda k, x, y: -(x - y - 1) ** 2
            / ((x * k - y * k - k + x - 2) * (x * k - y * k - k + 2 * x - y - 2) ** 2)),
        ("13", "132", "13"): R(
            lambda x, y: x * (1 - y),
            lambda k, x, y: (x - x * y) / ((y * k - k - x) * (y * k - k - x + y - 1))),
        ("23", "e", "23"): R(
            lambda x, y: x * (-x + y + 1),
            lambda k, x, y: -x * (x - y - 1) / ((k * x + y + 1) * (k * x - x + y + 1))),
        ("23", "12", "23"): R(
            lambda x, y: x * (-x + y + 1),
            lambda k, x, y: -x * (x - y - 1)
            / ((x * k - y * k - k - x) * (x * k - y * k - k - y - 1))),
        ("23", "12", "132"): R(
            lambda x, y: (-x + y + 1) ** 2,
            lambda k, x, y: -(x - y - 1) ** 2
            / ((x * k - y * k - k - x) ** 2 * (x * k - y * k - k - y - 1))),
        ("23", "13", "23"): R(
            lambda x, y: (1 - y) ** 2,
            lambda k, x, y: -(y - 1) ** 2
            / ((y * k - k + x - 2) * (y * k - k + x + y - 2) ** 2)),
        ("23", "23", "23"): R(
            lambda x, y: x,
            lambda k, x, y: x / (k * x + x - y + 1) ** 2),
        ("23", "123", "23"): R(
            lambda x, y: (-x + y + 1) ** 2,
            lambda k, x, y: -(x - y - 1) ** 2
            / ((x * k - y * k - k + x - 2) * (x * k - y * k - k + y - 1) ** 2)),
        ("23", "132", "23"): R(
            lambda x, y: (1 - y) ** 2,
            lambda k, x, y: -(y - 1) ** 2
            / ((y * k - k - x + y - 1) * (y * k - k - x + 2 * y - 1) ** 2)),
        ("123", "e", "132"): R(
            lambda x, y: x ** 2,
            lambda k, x, y: x ** 2 / ((k * x + y + 1) * (k * x + x + y) ** 2)),
        ("123", "12", "23"): R(
            lambda x, y: -x + y + 1,
            lambda k, x, y: (x - y - 1)
            / ((x * k - y * k - k - x) * (x * k - y * k - k - y - 1) ** 2)),
        ("123", "12", "132"): R(
            lambda x, y: -x + y + 1,
            lambda k, x, y: (x - y - 1)
            / ((x * k - y * k - k - x) * (x * k - y * k - k - y - 1) ** 2)),
        ("123", "13", "132"): R(
            lambda x, y: (1 - y) * (-x + y + 1),
            lambda k, x, y: (x - y - 1) * (y - 1)
            / ((y * k - k + x - 2) * (y * k - k + x - y - 1))),
        ("123", "23", "132"): R(
            lambda x, y: 1 - y,
            lambda k, x, y: (1 - y) / (-k * x - x + y - 1) ** 2),
        ("123", "123", "23"): R(
            lambda x, y: (-x + y + 1) ** 2,
            lambda k, x, y: -(x - y - 1) ** 2
            / ((x * k - y * k - k + x - 2) * (x * k - y * k - k + y - 1) ** 2)),
        ("123", "123", "132"): R(
            lambda x, y: (1 - y) * (-x + y + 1),
            lambda k, x, y: (x - y - 1) * (y - 1)
            / ((x * k - y * k - k + x - 2) * (x * k - y * k - k + y - 1))),
        ("123", "132", "132"): R(
            lambda x, y: (1 - y) * (x - y + 1),
            lambda k, x, y: (y - 1) * (-x + y - 1)
            / ((y * k - k - x + y - 1) * (y * k - k - x + 2 * y - 2))),
        ("132", "e", "13"): R(
            lambda x, y: x ** 2,
            lambda k, x, y: x ** 2 / ((k * x + y + 1) * (k * x - x + y + 1) ** 2)),
        ("132", "e", "123"): R(
            lambda x, y: x * (-x + y + 1),
            lambda k, x, y: -x * (x - y - 1) / ((k * x + y + 1) * (k * x - x + y + 1))),
        ("132", "12", "123"): R(
            lambda x, y: x * (-x + y + 1),
            lambda k, x, y: -x * (x - y - 1)
            / ((x * k - y * k - k - x) * (x * k - y * k - k - y - 1))),
        ("132", "13", "123"): R(
            lambda x, y: (1 - y) ** 2,
            lambda k, x, y: -(y - 1) ** 2
            / ((y * k - k + x - 2) * (y * k - k + x + y - 2) ** 2)),
        ("132", "23", "13"): R(
            lambda x, y: x ** 2,
            lambda k, x, y: x ** 2 / ((k * x - y + 1) ** 2 * (k * x + x - y + 1))),
        ("132", "23", "123"): R(
            lambda x, y: x * (1 - y),
            lambda k, x, y: (x - x * y)
            / ((k * x - y + 1) * (k * x + x - y + 1) * (k * x + 2 * x - y))),
        ("132", "123", "123"): R(
            lambda x, y: -x + y + 1,
            lambda k, x, y: (-x + y + 1) / (x * k - y * k - k + x - 2) ** 2),
        ("132", "132", "123"): R(
            lambda x, y: (1 - y) ** 2,
            lambda k, x, y: -(y - 1) ** 2
            / ((y * k - k - x + y - 1) * (y * k - k - x + 2 * y - 1) ** 2)),
    }


BANACH: dict[tuple[str, str, str], BanachRow] = _rows()
