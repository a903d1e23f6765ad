"""Closed-form data for the rank-one theory at level k.

Everything here is an explicit product/sum formula in Dynkin labels
``a = 0..k`` (twice the spin), evaluated over a :class:`~anyonkit.qarith.QContext`.
These expressions are completely independent of the general machinery in
:mod:`anyonkit.tensor` and :mod:`anyonkit.symbols`, which makes them a useful
cross-check: the pipeline must reproduce them entrywise, in the same gauge.

State labels inside an irrep ``a`` are also Dynkin: ``m = a, a-2, ..., -a``.
All fractional powers of q reduce to integer multiples of 1/4, matching the
root granularity of the rank-one algebra.
"""

from __future__ import annotations

from typing import List, Tuple

from .qarith import ComplexValue, QContext

__all__ = [
    "closed_fusion",
    "closed_dim",
    "closed_twist",
    "closed_fs_indicator",
    "closed_cg",
    "closed_f",
    "closed_r",
    "admissible_triple",
]


def closed_fusion(k: int, a: int, b: int) -> List[int]:
    """Fusion channels of a x b at level k (steps of two)."""
    return list(range(abs(a - b), min(a + b, 2 * k - a - b) + 1, 2))


def admissible_triple(k: int, a: int, b: int, c: int) -> bool:
    return (
        abs(a - b) <= c <= a + b
        and (a + b + c) % 2 == 0
        and a + b + c <= 2 * k
    )


def closed_dim(ctx: QContext, a: int) -> ComplexValue:
    return ctx.q_number(a + 1)


def closed_twist(ctx: QContext, a: int) -> ComplexValue:
    # q^(a(a+2)/4); the exponent is already in quarter units
    return ctx.q_power(a * (a + 2))


def closed_fs_indicator(a: int) -> int:
    return -1 if a % 2 else 1


def _quarter_power(ctx: QContext, numerator: int, parts: int) -> ComplexValue:
    """q**(numerator/parts) for exponents that reduce to quarter units."""
    scaled = 4 * numerator
    if scaled % parts:
        raise ValueError(f"exponent {numerator}/{parts} is not a quarter unit")
    return ctx.q_power(scaled // parts)


def _delta(ctx: QContext, a: int, b: int, c: int) -> ComplexValue:
    num = (
        ctx.q_factorial((a + b - c) // 2)
        * ctx.q_factorial((a - b + c) // 2)
        * ctx.q_factorial((-a + b + c) // 2)
    )
    den = ctx.q_factorial((a + b + c + 2) // 2)
    return ctx.sqrt(num / den)


def closed_cg(
    ctx: QContext, a: int, m1: int, b: int, m2: int, c: int, m: int
) -> ComplexValue:
    """Coupling coefficient <a m1; b m2 | c m> in Dynkin labels."""
    if m != m1 + m2 or (a + m1) % 2 or (b + m2) % 2 or (c + m) % 2:
        return ctx.zero
    if abs(m1) > a or abs(m2) > b or abs(m) > c:
        return ctx.zero
    if not (abs(a - b) <= c <= a + b and (a + b + c) % 2 == 0):
        return ctx.zero
    pre = _quarter_power(
        ctx, (a + b - c) * (a + b + c + 2) + 2 * (a * m2 - b * m1), 16
    ) * _delta(ctx, a, b, c)
    root = ctx.sqrt(
        ctx.q_factorial((a - m1) // 2)
        * ctx.q_factorial((a + m1) // 2)
        * ctx.q_factorial((b - m2) // 2)
        * ctx.q_factorial((b + m2) // 2)
        * ctx.q_factorial((c - m) // 2)
        * ctx.q_factorial((c + m) // 2)
        * ctx.q_number(c + 1)
    )
    lo = max(0, -(c - b + m1), -(c - a - m2))
    hi = min(a + b - c, a - m1, b + m2)
    total = ctx.zero
    for n in range(lo, hi + 1, 2):
        sign = -1 if (n // 2) % 2 else 1
        term = sign * _quarter_power(ctx, -n * (a + b + c + 2), 8)
        term = term / (
            ctx.q_factorial(n // 2)
            * ctx.q_factorial((a - m1 - n) // 2)
            * ctx.q_factorial((b + m2 - n) // 2)
            * ctx.q_factorial((a + b - c - n) // 2)
            * ctx.q_factorial((c - b + m1 + n) // 2)
            * ctx.q_factorial((c - a - m2 + n) // 2)
        )
        total = total + term
    return pre * root * total


def closed_f(
    ctx: QContext, a: int, b: int, c: int, d: int, e: int, f: int
) -> ComplexValue:
    """Recoupling coefficient with rows e in (a b) and columns f in (b c).

    The middle factorial of the sum reads [(b+d+e+f-n)/2]!; temper any source
    that drops the halving, it is required for the arguments to be integers.
    """
    sign = -1 if ((a + b + c + d) // 2) % 2 else 1
    pre = (
        sign
        * _delta(ctx, a, b, e)
        * _delta(ctx, c, d, e)
        * _delta(ctx, b, c, f)
        * _delta(ctx, a, d, f)
        * ctx.sqrt(ctx.q_number(e + 1))
        * ctx.sqrt(ctx.q_number(f + 1))
    )
    lo = max(a + b + e, c + d + e, b + c + f, a + d + f)
    hi = min(a + b + c + d, a + c + e + f, b + d + e + f)
    total = ctx.zero
    for n in range(lo, hi + 1, 2):
        sgn = -1 if (n // 2) % 2 else 1
        term = sgn * ctx.q_factorial((n + 2) // 2)
        term = term / (
            ctx.q_factorial((a + b + c + d - n) // 2)
            * ctx.q_factorial((a + c + e + f - n) // 2)
            * ctx.q_factorial((b + d + e + f - n) // 2)
            * ctx.q_factorial((n - a - b - e) // 2)
            * ctx.q_factorial((n - c - d - e) // 2)
            * ctx.q_factorial((n - b - c - f) // 2)
            * ctx.q_factorial((n - a - d - f) // 2)
        )
        total = total + term
    return pre * total


def closed_r(ctx: QContext, a: int, b: int, c: int) -> ComplexValue:
    """Exchange phase of a and b in channel c."""
    sign = -1 if ((a + b - c) // 2) % 2 else 1
    return sign * _quarter_power(ctx, c * (c + 2) - a * (a + 2) - b * (b + 2), 8)
