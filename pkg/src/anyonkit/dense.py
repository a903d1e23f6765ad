"""Small dense matrices over mpmath complex numbers.

Everything in the package works with matrices of at most a few dozen rows, so
plain lists of lists are fast enough and keep full precision.  These helpers
stay deliberately dumb; numerical rank decisions live with their callers.
"""

from __future__ import annotations

from typing import Any, List, Sequence

Matrix = List[List[Any]]


def zeros(ctx, rows: int, cols: int) -> Matrix:
    z = ctx.zero
    return [[z for _ in range(cols)] for _ in range(rows)]


def identity(ctx, n: int) -> Matrix:
    out = zeros(ctx, n, n)
    for i in range(n):
        out[i][i] = ctx.one
    return out


def transpose(a: Sequence[Sequence[Any]]) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def mat_mul(a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]]) -> Matrix:
    if not a or not b:
        return []
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_sub(a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]]) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Sequence[Sequence[Any]], s: Any) -> Matrix:
    return [[x * s for x in row] for row in a]


def mat_vec(a: Sequence[Sequence[Any]], v: Sequence[Any]) -> List[Any]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def max_abs(a: Sequence[Sequence[Any]]) -> float:
    best = 0.0
    for row in a:
        for x in row:
            m = abs(complex(x))
            if m > best:
                best = m
    return best


def max_abs_vec(v: Sequence[Any]) -> float:
    return max((abs(complex(x)) for x in v), default=0.0)
