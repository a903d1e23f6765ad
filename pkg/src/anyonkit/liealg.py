"""Root-system data for the rank-one and rank-two algebras.

Weights are tuples of Dynkin labels throughout.  The Cartan matrix is stored
in the convention ``cartan[i][j] = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)``,
which makes the Dynkin coordinates of the simple root ``alpha_i`` equal to
*row* ``i`` of the matrix.  Weight diagrams, string lengths and level bounds
all follow from that single convention.

Exact arithmetic (integers and fractions) is used for every structural
quantity: weight multiplicities, heights, inner products, Weyl dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

__all__ = [
    "AlgebraSpec",
    "ALGEBRAS",
    "get_algebra",
    "WeightSystem",
    "admissible_weights",
    "conjugate_weight",
    "classical_weight_system",
    "weyl_dimension",
]

Weight = Tuple[int, ...]


@dataclass(frozen=True)
class AlgebraSpec:
    """Static data of one simple algebra.

    ``t`` holds the squared-length ratios (t_i = 2/(alpha_i, alpha_i)), so
    ``q_i = q**(1/t_i)``.  ``positive_roots`` are in simple-root coordinates.
    ``root_denominator`` is the granularity of fractional q-powers needed by
    every formula of the algebra (coproduct quarter-powers and the braiding
    prefactor built from the quadratic form).
    """

    name: str
    rank: int
    cartan: Tuple[Tuple[int, ...], ...]
    t: Tuple[int, ...]
    coxeter: int  # dual Coxeter number
    comarks: Tuple[int, ...]
    positive_roots: Tuple[Tuple[int, ...], ...]
    root_denominator: int

    def __post_init__(self) -> None:
        # the dual Coxeter number must match 1 + sum of comarks
        if self.coxeter != 1 + sum(self.comarks):
            raise ValueError(f"{self.name}: comarks inconsistent with dual Coxeter number")

    # -- linear data ---------------------------------------------------------

    @property
    def quadratic_form(self) -> Tuple[Tuple[Fraction, ...], ...]:
        """Gram matrix of the fundamental weights, (Lambda_i, Lambda_j)."""
        return _quadratic_form(self)

    def simple_root(self, i: int) -> Weight:
        """Dynkin coordinates of alpha_i (row i of the Cartan matrix)."""
        return tuple(self.cartan[i])

    def root_weight(self, root: Sequence[int]) -> Weight:
        """Dynkin coordinates of an alpha-coordinate root vector."""
        return tuple(
            sum(root[i] * self.cartan[i][j] for i in range(self.rank))
            for j in range(self.rank)
        )

    def weight_inner(self, a: Sequence[int], b: Sequence[int]) -> Fraction:
        form = self.quadratic_form
        return sum(
            Fraction(a[i]) * form[i][j] * b[j]
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def weight_root_inner(self, mu: Sequence[int], root: Sequence[int]) -> Fraction:
        """(mu, sum_i root_i alpha_i); uses (mu, alpha_i) = mu_i / t_i."""
        return sum(Fraction(mu[i] * root[i], self.t[i]) for i in range(self.rank))

    def level(self, weight: Sequence[int]) -> int:
        return sum(c * w for c, w in zip(self.comarks, weight))

    def rho(self) -> Weight:
        return (1,) * self.rank

    # -- orders --------------------------------------------------------------

    def label_sort_key(self, weight: Sequence[int]) -> tuple:
        """Canonical order of highest weights: level, then classical
        dimension, then reverse-lex.

        Dimension separates the B2 spinor (dim 4) from the vector (dim 5) at
        equal level; reverse-lex puts (1,0) before (0,1) and (3,0) before
        (0,3), listing a representation before its conjugate.
        """
        w = tuple(weight)
        return (self.level(w), weyl_dimension(self, w), tuple(-x for x in w))

    def height_offset(self, hw: Sequence[int], mu: Sequence[int]) -> int:
        """Number of simple-root steps from hw down to mu."""
        coords = self.root_coordinates(tuple(a - b for a, b in zip(hw, mu)))
        if any(c.denominator != 1 or c < 0 for c in coords):
            raise ValueError(f"{tuple(mu)} is not below {tuple(hw)} in the root order")
        return int(sum(coords))

    def root_coordinates(self, weight_diff: Sequence[int]) -> Tuple[Fraction, ...]:
        """Solve diff = sum_i c_i alpha_i for the alpha-coordinates c."""
        inv = _cartan_inverse(self)
        return tuple(
            sum(Fraction(weight_diff[i]) * inv[i][j] for i in range(self.rank))
            for j in range(self.rank)
        )


@lru_cache(maxsize=None)
def _cartan_inverse(alg: AlgebraSpec) -> Tuple[Tuple[Fraction, ...], ...]:
    n = alg.rank
    a = [[Fraction(alg.cartan[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        factor = a[col][col]
        a[col] = [v / factor for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                shift = a[r][col]
                a[r] = [v - shift * w for v, w in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


@lru_cache(maxsize=None)
def _quadratic_form(alg: AlgebraSpec) -> Tuple[Tuple[Fraction, ...], ...]:
    inv = _cartan_inverse(alg)
    return tuple(
        tuple(inv[i][j] / alg.t[j] for j in range(alg.rank)) for i in range(alg.rank)
    )


ALGEBRAS: Dict[str, AlgebraSpec] = {
    "A1": AlgebraSpec(
        name="A1",
        rank=1,
        cartan=((2,),),
        t=(1,),
        coxeter=2,
        comarks=(1,),
        positive_roots=((1,),),
        root_denominator=4,
    ),
    "A2": AlgebraSpec(
        name="A2",
        rank=2,
        cartan=((2, -1), (-1, 2)),
        t=(1, 1),
        coxeter=3,
        comarks=(1, 1),
        positive_roots=((1, 0), (0, 1), (1, 1)),
        root_denominator=12,
    ),
    "B2": AlgebraSpec(
        name="B2",
        rank=2,
        cartan=((2, -2), (-1, 2)),
        t=(1, 2),
        coxeter=3,
        comarks=(1, 1),
        positive_roots=((1, 0), (0, 1), (1, 1), (1, 2)),
        root_denominator=8,
    ),
    "G2": AlgebraSpec(
        name="G2",
        rank=2,
        cartan=((2, -3), (-1, 2)),
        t=(1, 3),
        coxeter=4,
        comarks=(2, 1),
        positive_roots=((1, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 3)),
        root_denominator=12,
    ),
}


def get_algebra(name: str) -> AlgebraSpec:
    try:
        return ALGEBRAS[name.upper()]
    except KeyError:
        raise KeyError(f"unknown algebra {name!r}; choose from {sorted(ALGEBRAS)}") from None


def admissible_weights(alg: AlgebraSpec, level: int) -> List[Weight]:
    """Dominant weights with comark-weighted level at most ``level``.

    Sorted by (level, reverse-lex); the trivial weight comes first.
    """
    if level < 0:
        raise ValueError("level must be nonnegative")
    out: List[Weight] = []

    def rec(prefix: Tuple[int, ...], used: int) -> None:
        i = len(prefix)
        if i == alg.rank:
            out.append(prefix)
            return
        for v in range((level - used) // alg.comarks[i] + 1):
            rec(prefix + (v,), used + v * alg.comarks[i])

    rec((), 0)
    out.sort(key=alg.label_sort_key)
    return out


def conjugate_weight(alg: AlgebraSpec, weight: Sequence[int]) -> Weight:
    """Highest weight of the dual representation.

    The diagram automorphism swaps the two labels for A2; the other algebras
    in scope have only self-dual representations.
    """
    if alg.name == "A2":
        return (weight[1], weight[0])
    return tuple(weight)


@dataclass(frozen=True)
class WeightSystem:
    """Classical weight diagram of one irreducible representation.

    ``weights`` lists distinct weights in canonical state order: height
    ascending (highest weight first), lexicographic on ties.  ``mults`` maps
    each weight to its multiplicity; ``dimension`` equals the Weyl formula.
    """

    alg: AlgebraSpec
    hw: Weight
    weights: Tuple[Weight, ...]
    mults: Dict[Weight, int]
    heights: Dict[Weight, int]

    @property
    def dimension(self) -> int:
        return sum(self.mults.values())

    def mult(self, mu: Sequence[int]) -> int:
        return self.mults.get(tuple(mu), 0)

    def states(self) -> List[Tuple[Weight, int]]:
        """All (weight, multiplicity-index) pairs in canonical order."""
        return [(mu, k) for mu in self.weights for k in range(self.mults[mu])]

    def has_edge(self, mu: Sequence[int], direction: int) -> bool:
        """True when mu - alpha_direction is again a weight of the system."""
        alpha = self.alg.simple_root(direction)
        lower = tuple(m - a for m, a in zip(mu, alpha))
        return lower in self.mults


def weyl_dimension(alg: AlgebraSpec, hw: Sequence[int]) -> int:
    rho = alg.rho()
    num = Fraction(1)
    hw_rho = tuple(h + r for h, r in zip(hw, rho))
    for root in alg.positive_roots:
        num *= alg.weight_root_inner(hw_rho, root) / alg.weight_root_inner(rho, root)
    if num.denominator != 1:
        raise ValueError(f"non-integral Weyl dimension for {tuple(hw)}")
    return int(num)


def classical_weight_system(alg: AlgebraSpec, hw: Sequence[int]) -> WeightSystem:
    """Weight diagram with Freudenthal multiplicities.

    The candidate set is the coordinate box between the highest and lowest
    weights in simple-root coordinates; multiplicities are computed top-down
    with the Freudenthal recursion in exact arithmetic and the total is
    checked against the Weyl dimension formula.
    """
    hw = tuple(int(x) for x in hw)
    if any(x < 0 for x in hw):
        raise ValueError("highest weight must be dominant")
    return _weight_system_cached(alg, hw)


@lru_cache(maxsize=None)
def _weight_system_cached(alg: AlgebraSpec, hw: Weight) -> WeightSystem:
    rank = alg.rank
    rho = alg.rho()
    lowest = tuple(-x for x in conjugate_weight(alg, hw))
    box = alg.root_coordinates(tuple(h - l for h, l in zip(hw, lowest)))
    if any(c.denominator != 1 or c < 0 for c in box):
        raise ValueError("inconsistent weight box")
    box = tuple(int(c) for c in box)

    # enumerate candidates by height so the recursion only looks upward
    candidates: List[Tuple[int, Tuple[int, ...], Weight]] = []
    def rec(prefix: Tuple[int, ...]) -> None:
        if len(prefix) == rank:
            mu = tuple(
                hw[j] - sum(prefix[i] * alg.cartan[i][j] for i in range(rank))
                for j in range(rank)
            )
            candidates.append((sum(prefix), prefix, mu))
            return
        for c in range(box[len(prefix)] + 1):
            rec(prefix + (c,))
    rec(())
    candidates.sort(key=lambda item: (item[0], item[2]))

    hw_rho = tuple(h + r for h, r in zip(hw, rho))
    norm_top = alg.weight_inner(hw_rho, hw_rho)

    mults: Dict[Weight, int] = {}
    heights: Dict[Weight, int] = {}
    for height, _, mu in candidates:
        if mu == hw:
            mults[mu] = 1
            heights[mu] = 0
            continue
        acc = Fraction(0)
        for root in alg.positive_roots:
            alpha = alg.root_weight(root)
            root_height = sum(root)
            for j in range(1, height // root_height + 1):
                up = tuple(m + j * a for m, a in zip(mu, alpha))
                m_up = mults.get(up, 0)
                if m_up:
                    acc += m_up * alg.weight_root_inner(up, root)
        mu_rho = tuple(m + r for m, r in zip(mu, rho))
        denom = norm_top - alg.weight_inner(mu_rho, mu_rho)
        if denom == 0:
            continue
        value = 2 * acc / denom
        if value.denominator != 1:
            raise ValueError(f"non-integral multiplicity at {mu}")
        if value > 0:
            mults[mu] = int(value)
            heights[mu] = height

    ordered = sorted(mults, key=lambda m: (heights[m], m))
    system = WeightSystem(alg=alg, hw=hw, weights=tuple(ordered), mults=mults, heights=heights)
    expected = weyl_dimension(alg, hw)
    if system.dimension != expected:
        raise ArithmeticError(
            f"weight system of {hw} sums to {system.dimension}, Weyl dimension is {expected}"
        )
    return system
