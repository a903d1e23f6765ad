"""Arbitrary-precision q-arithmetic at roots of unity and on the real axis.

Everything downstream (representation matrices, coupling coefficients,
F/R symbols) is built from two primitives defined here:

* ``QContext.q_power(n)`` -- the deformation parameter raised to a fractional
  exponent ``n / root_denominator``.  Fractional powers only ever appear as
  integer multiples of ``1/root_denominator``, so a single integer argument
  makes every branch choice explicit and reproducible.
* ``QContext.q_number(n, t)`` -- the balanced q-integer ``[n]`` evaluated in
  the summation form, which stays finite at roots of unity where the familiar
  ratio of differences degenerates to 0/0.

Numbers are mpmath values bound to a private mpmath context per ``QContext``,
so two contexts with different mantissa precision can coexist in one process.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Union

from mpmath.ctx_mp import MPContext

__all__ = [
    "QContext",
    "ComplexValue",
    "q_power",
    "q_number",
    "q_factorial",
    "q_binomial",
]

# mpmath constructs value types per context, so there is no useful static
# type for "a complex number belonging to some QContext".
ComplexValue = Any

DEFAULT_PRECISION_BITS = 128
DEFAULT_TOLERANCE = "1e-20"


@dataclass(frozen=True, eq=False)
class QContext:
    """Evaluation context for the deformation parameter.

    Two modes:

    * root-of-unity: ``q = exp(2*pi*i * orientation / (level + coxeter))``,
      the physical regime where truncation happens;
    * real-reference: ``q = x`` for ``0 < x < 1``, a generic point used for
      structural decisions (ranks, classical multiplicities) and for checking
      identities "as functions of q".

    ``root_denominator`` is the granularity D of fractional powers: every
    exponent handled by :meth:`q_power` is an integer multiple of ``1/D``.
    """

    mode: str  # "root" | "real"
    level: int | None
    coxeter: int | None
    x: Fraction | None
    root_denominator: int
    precision_bits: int = DEFAULT_PRECISION_BITS
    tolerance_str: str = DEFAULT_TOLERANCE
    orientation: int = 1  # +1, or -1 for the conjugate context (q -> 1/q)
    arc: Fraction = Fraction(1)  # root mode: q = exp(2*pi*i*arc/(level+coxeter))
    mp: MPContext = field(default=None, repr=False)  # type: ignore[assignment]
    _powers: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if self.mode not in ("root", "real"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "root":
            if not (isinstance(self.level, int) and self.level >= 1):
                raise ValueError("root mode needs an integer level >= 1")
            if not (isinstance(self.coxeter, int) and self.coxeter >= 2):
                raise ValueError("root mode needs an integer dual Coxeter number >= 2")
        else:
            if self.x is None or not (0 < self.x < 1):
                raise ValueError("real mode needs 0 < x < 1")
        if self.root_denominator < 1:
            raise ValueError("root_denominator must be a positive integer")
        if self.orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")
        if not (0 < self.arc <= 1):
            raise ValueError("arc must satisfy 0 < arc <= 1")
        if self.mode == "real" and self.arc != 1:
            raise ValueError("arc points are only defined in root mode")
        if self.precision_bits < 24:
            raise ValueError("precision_bits must be at least 24")
        if self.mp is None:
            ctx = MPContext()
            ctx.prec = self.precision_bits
            object.__setattr__(self, "mp", ctx)

    # -- constructors -------------------------------------------------------

    @classmethod
    def root_of_unity(
        cls,
        level: int,
        coxeter: int,
        root_denominator: int,
        precision_bits: int = DEFAULT_PRECISION_BITS,
        tolerance: str = DEFAULT_TOLERANCE,
    ) -> "QContext":
        return cls(
            mode="root",
            level=level,
            coxeter=coxeter,
            x=None,
            root_denominator=root_denominator,
            precision_bits=precision_bits,
            tolerance_str=tolerance,
        )

    @classmethod
    def real_reference(
        cls,
        x: Union[Fraction, float, str],
        root_denominator: int,
        precision_bits: int = DEFAULT_PRECISION_BITS,
        tolerance: str = DEFAULT_TOLERANCE,
    ) -> "QContext":
        return cls(
            mode="real",
            level=None,
            coxeter=None,
            x=Fraction(x).limit_denominator(10**12) if not isinstance(x, Fraction) else x,
            root_denominator=root_denominator,
            precision_bits=precision_bits,
            tolerance_str=tolerance,
        )

    @classmethod
    def arc_point(
        cls,
        level: int,
        coxeter: int,
        root_denominator: int,
        t: Fraction,
        precision_bits: int = 64,
        tolerance: str = "1e-12",
        orientation: int = 1,
    ) -> "QContext":
        """A point ``q = exp(2*pi*i*t/(level+coxeter))`` on the unit circle.

        ``t = 1`` is the root of unity itself; smaller ``t`` interpolates back
        toward ``q = 1``.  These intermediate points carry no truncation, so
        they see the classical (generic-q) structure of a tensor product.
        They are used to continue square-root branches from the classical
        regime, where normalizations are positive, to the root of unity.
        """
        return cls(
            mode="root",
            level=level,
            coxeter=coxeter,
            x=None,
            root_denominator=root_denominator,
            precision_bits=precision_bits,
            tolerance_str=tolerance,
            orientation=orientation,
            arc=Fraction(t),
        )

    def conjugate(self) -> "QContext":
        """The context evaluating at 1/q (root mode flips orientation)."""
        if self.mode == "real":
            # 1/x falls outside (0,1); symmetry checks on the real axis are
            # done by comparing exponents instead, so this is not supported.
            raise ValueError("conjugate context is only defined in root mode")
        return QContext(
            mode="root",
            level=self.level,
            coxeter=self.coxeter,
            x=None,
            root_denominator=self.root_denominator,
            precision_bits=self.precision_bits,
            tolerance_str=self.tolerance_str,
            orientation=-self.orientation,
            arc=self.arc,
        )

    # -- basic numbers ------------------------------------------------------

    @property
    def tolerance(self):
        return self.mp.mpf(self.tolerance_str)

    @property
    def zero(self):
        return self.mp.mpc(0)

    @property
    def one(self):
        return self.mp.mpc(1)

    def sqrt(self, value):
        """Principal square root (nonnegative on the nonnegative reals)."""
        return self.mp.sqrt(value)

    def almost_zero(self, value, tol=None) -> bool:
        t = self.tolerance if tol is None else self.mp.mpf(tol)
        return self.mp.fabs(value) <= t

    def almost_equal(self, a, b, tol=None) -> bool:
        return self.almost_zero(a - b, tol=tol)

    # -- q powers and q numbers ---------------------------------------------

    def q_power(self, numerator: int):
        """q raised to ``numerator / root_denominator``.

        Root mode: ``exp(2*pi*i*orientation*numerator / (D*(level+coxeter)))``
        with D = ``root_denominator``; real mode: ``x**(numerator/D)``.
        Values are cached per context.
        """
        numerator = int(numerator)
        cached = self._powers.get(numerator)
        if cached is not None:
            return cached
        mp = self.mp
        if self.mode == "root":
            denom = self.root_denominator * (self.level + self.coxeter) * self.arc.denominator
            scaled = 2 * self.orientation * numerator * self.arc.numerator
            value = mp.expjpi(mp.mpf(scaled) / denom)
        else:
            num, den = self.x.numerator, self.x.denominator
            exponent = mp.mpf(numerator) / self.root_denominator
            value = mp.mpc(mp.power(mp.mpf(num) / den, exponent))
        self._powers[numerator] = value
        return value

    def _half_power_unit(self, t: int) -> int:
        # numerator of q_i^(1/2) = q^(1/(2t)) in units of 1/root_denominator
        if self.root_denominator % (2 * t) != 0:
            raise ValueError(
                f"root_denominator {self.root_denominator} does not resolve q^(1/{2*t})"
            )
        return self.root_denominator // (2 * t)

    def q_number(self, n: int, t: int = 1):
        """Balanced q-integer [n] for q_i = q^(1/t), in the summation form.

        [n] = sum_{m=1..n} q_i^((n+1)/2 - m).  The summation form is exact at
        roots of unity; the ratio form would evaluate 0/0 whenever q_i^n = 1.
        Negative arguments follow the odd extension [-n] = -[n].
        """
        n = int(n)
        if n < 0:
            return -self.q_number(-n, t)
        if t not in (1, 2, 3):
            raise ValueError("t must be one of 1, 2, 3")
        half = self._half_power_unit(t)
        total = self.mp.mpc(0)
        for m in range(1, n + 1):
            total += self.q_power((n + 1 - 2 * m) * half)
        return total

    def q_factorial(self, n: int, t: int = 1):
        """[n]! = [1][2]...[n] with [0]! = 1."""
        n = int(n)
        if n < 0:
            raise ValueError("q_factorial needs n >= 0")
        total = self.mp.mpc(1)
        for m in range(2, n + 1):
            total *= self.q_number(m, t)
        return total

    def q_binomial(self, n: int, m: int, t: int = 1):
        """Gaussian binomial [n choose m] as a product of ratios.

        Computed as prod_{s=1..m} [n-m+s]/[s]; for the admissible arguments
        appearing in Serre relations no factor in the denominator vanishes.
        """
        n, m = int(n), int(m)
        if m < 0 or n < 0 or m > n:
            raise ValueError("q_binomial needs 0 <= m <= n")
        total = self.mp.mpc(1)
        for s in range(1, m + 1):
            total *= self.q_number(n - m + s, t) / self.q_number(s, t)
        return total

    # -- serialization helpers ----------------------------------------------

    def decimal_digits(self) -> int:
        # enough decimal digits to reproduce the binary value exactly
        return int(self.precision_bits * 0.30103) + 3

    def format_real(self, value) -> str:
        return self.mp.nstr(
            self.mp.mpf(value), self.decimal_digits(), strip_zeros=True
        )

    def parse_real(self, text: str):
        return self.mp.mpf(text)

    def key(self) -> tuple:
        """Hashable identity of the evaluation point (used for caching)."""
        if self.mode == "root":
            point = (self.level, self.coxeter, self.orientation, self.arc)
        else:
            point = (self.x,)
        return (self.mode, point, self.root_denominator, self.precision_bits)


# Module-level aliases matching the operation names used elsewhere.


def q_power(ctx: QContext, numerator: int):
    return ctx.q_power(numerator)


def q_number(ctx: QContext, n: int, t: int = 1):
    return ctx.q_number(n, t)


def q_factorial(ctx: QContext, n: int, t: int = 1):
    return ctx.q_factorial(n, t)


def q_binomial(ctx: QContext, n: int, m: int, t: int = 1):
    return ctx.q_binomial(n, m, t)
