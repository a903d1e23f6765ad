"""Shared fixtures: evaluation contexts and q-expression helpers."""

from __future__ import annotations

import pytest

from anyonkit.liealg import get_algebra
from anyonkit.qarith import QContext


class QExpr:
    """Tiny expression helper bound to one context.

    ``q(a, b)`` is the deformation parameter raised to a/b, ``n(k, sub)``
    the q-integer [k] evaluated at the sub-th root of q (long roots use
    sub=1), ``rt`` the principal square root.  Fractional powers must land
    on the grid the context can represent exactly.
    """

    def __init__(self, ctx, alg):
        self.ctx = ctx
        self.alg = alg
        self.mp = ctx.mp
        self._denom = alg.root_denominator

    def q(self, num, den=1):
        scaled = self._denom * num
        if scaled % den:
            raise ValueError(f"power {num}/{den} off the q-grid")
        return self.ctx.q_power(scaled // den)

    def n(self, k, sub=1):
        if self._denom % (2 * sub):
            raise ValueError(f"no {sub}-th root available")
        half = self._denom // (2 * sub)
        num = self.ctx.q_power(k * half) - self.ctx.q_power(-k * half)
        return num / (self.ctx.q_power(half) - self.ctx.q_power(-half))

    def rt(self, x):
        return self.mp.sqrt(x)

    @property
    def one(self):
        return self.mp.mpf(1)


def make_context(name: str, level: int, precision_bits: int = 128):
    alg = get_algebra(name)
    ctx = QContext.root_of_unity(
        level, alg.coxeter, alg.root_denominator, precision_bits=precision_bits
    )
    return ctx, alg


@pytest.fixture(scope="session")
def su3_level2():
    return make_context("A2", 2)


@pytest.fixture(scope="session")
def su3_level3():
    return make_context("A2", 3)


@pytest.fixture(scope="session")
def so5_level1():
    return make_context("B2", 1)


@pytest.fixture(scope="session")
def g2_level1():
    return make_context("G2", 1)
