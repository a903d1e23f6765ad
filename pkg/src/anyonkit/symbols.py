"""Recoupling and braiding symbols from coupling coefficients.

An F-matrix entry is the bilinear overlap of two routes through a triple
product: couple the left pair first, or the right pair first, both landing on
the top state of the total module.  Each route expands that state over the
triple tensor basis using two layers of coupling tables; the overlap needs no
conjugation.

A braiding eigenvalue per channel comes from the prefactor of the universal
braiding element: on the component of the top state whose left weight cannot
be lowered any further inside the decomposition, braiding acts by the
quadratic-form power alone, so the eigenvalue is that power times the ratio
of the two coupling coefficients with the factors swapped.

Composite row and column labels carry vertex indices for fusion
multiplicities: a row of F for (j1 j2 j3 -> j) is (j12, alpha, beta) with
alpha the channel of j1 x j2 -> j12 and beta the channel of j12 x j3 -> j;
a column is (j23, gamma, delta) with gamma for j2 x j3 -> j23 and delta for
j1 x j23 -> j.  Labels are ordered canonically, multiplicity indices
ascending.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .liealg import AlgebraSpec, Weight, admissible_weights
from .qarith import QContext
from .tensor import (
    Channel,
    Decomposition,
    _bilinear,
    _nullspace,
    _solve_overdetermined,
    decompose,
    module,
)

__all__ = [
    "FTensor",
    "f_tensor",
    "r_symbols",
    "r_symbol",
    "verify_f_orthogonality",
    "verify_pentagon",
    "verify_hexagon",
    "verify_r_symmetries",
]

RowLabel = Tuple[Weight, int, int]

_F_CACHE: Dict[tuple, "FTensor"] = {}
_R_CACHE: Dict[tuple, Tuple[Any, ...]] = {}


@dataclass
class FTensor:
    """One F-matrix with composite row and column labels."""

    j1: Weight
    j2: Weight
    j3: Weight
    j: Weight
    rows: Tuple[RowLabel, ...]
    cols: Tuple[RowLabel, ...]
    matrix: List[List[Any]]

    def entry(self, row: RowLabel, col: RowLabel) -> Any:
        return self.matrix[self.rows.index(row)][self.cols.index(col)]

    def as_complex(self) -> Dict[RowLabel, Dict[RowLabel, complex]]:
        return {
            r: {c: complex(self.matrix[ri][ci]) for ci, c in enumerate(self.cols)}
            for ri, r in enumerate(self.rows)
        }


def _triple_expand_left(dec12: Decomposition, alpha_ch: Channel, beta_ch: Channel) -> Dict[Tuple[int, int, int], Any]:
    """Expand the top state over triples by coupling (j1 j2) first."""
    out: Dict[Tuple[int, int, int], Any] = {}
    rep12 = beta_ch.space.rep1
    top = beta_ch.top_vector()
    basis = beta_ch.space.basis(beta_ch.j)
    for c, (p12, p3) in zip(top, basis.pairs):
        if abs(complex(c)) < 1e-40:
            continue
        w12 = rep12.weight_of(p12)
        inner = alpha_ch.tables[p12]
        inner_basis = alpha_ch.space.basis(w12)
        for c2, (p1, p2) in zip(inner, inner_basis.pairs):
            if abs(complex(c2)) < 1e-40:
                continue
            key = (p1, p2, p3)
            out[key] = out.get(key, 0) + c * c2
    return out


def _triple_expand_right(gamma_ch: Channel, delta_ch: Channel) -> Dict[Tuple[int, int, int], Any]:
    """Expand the top state over triples by coupling (j2 j3) first."""
    out: Dict[Tuple[int, int, int], Any] = {}
    rep23 = delta_ch.space.rep2
    top = delta_ch.top_vector()
    basis = delta_ch.space.basis(delta_ch.j)
    for c, (p1, p23) in zip(top, basis.pairs):
        if abs(complex(c)) < 1e-40:
            continue
        w23 = rep23.weight_of(p23)
        inner = gamma_ch.tables[p23]
        inner_basis = gamma_ch.space.basis(w23)
        for c2, (p2, p3) in zip(inner, inner_basis.pairs):
            if abs(complex(c2)) < 1e-40:
                continue
            key = (p1, p2, p3)
            out[key] = out.get(key, 0) + c * c2
    return out


def f_tensor(
    ctx: QContext, alg: AlgebraSpec, level: int,
    j1: Sequence[int], j2: Sequence[int], j3: Sequence[int], j: Sequence[int],
) -> FTensor:
    """F-matrix of the ordered triple (j1, j2, j3) fusing to j."""
    j1, j2, j3, j = tuple(j1), tuple(j2), tuple(j3), tuple(j)
    key = (ctx.key(), alg.name, level, j1, j2, j3, j)
    cached = _F_CACHE.get(key)
    if cached is not None:
        return cached

    dec12 = decompose(ctx, alg, level, j1, j2)
    dec23 = decompose(ctx, alg, level, j2, j3)

    rows: List[RowLabel] = []
    row_vecs: List[Dict[Tuple[int, int, int], Any]] = []
    for j12 in admissible_weights(alg, level):
        chans12 = dec12.channels.get(j12, [])
        if not chans12:
            continue
        outer = decompose(ctx, alg, level, j12, j3).channels.get(j, [])
        for alpha, ch_a in enumerate(chans12):
            for beta, ch_b in enumerate(outer):
                rows.append((j12, alpha, beta))
                row_vecs.append(_triple_expand_left(dec12, ch_a, ch_b))

    cols: List[RowLabel] = []
    col_vecs: List[Dict[Tuple[int, int, int], Any]] = []
    for j23 in admissible_weights(alg, level):
        chans23 = dec23.channels.get(j23, [])
        if not chans23:
            continue
        outer = decompose(ctx, alg, level, j1, j23).channels.get(j, [])
        for gamma, ch_g in enumerate(chans23):
            for delta, ch_d in enumerate(outer):
                cols.append((j23, gamma, delta))
                col_vecs.append(_triple_expand_right(ch_g, ch_d))

    matrix = []
    for rv in row_vecs:
        line = []
        for cv in col_vecs:
            small, large = (rv, cv) if len(rv) <= len(cv) else (cv, rv)
            acc = ctx.zero
            for k, v in small.items():
                o = large.get(k)
                if o is not None:
                    acc += v * o
            line.append(acc)
        matrix.append(line)

    out = FTensor(j1=j1, j2=j2, j3=j3, j=j, rows=tuple(rows), cols=tuple(cols), matrix=matrix)
    _F_CACHE[key] = out
    return out


def verify_f_orthogonality(f: FTensor) -> float:
    """Largest deviation of F Ft from the identity (the two route bases are
    both orthonormal under the bilinear form, so F must be orthogonal)."""
    n = len(f.rows)
    if n != len(f.cols):
        return float("inf")
    worst = 0.0
    for a in range(n):
        for b in range(n):
            acc = sum(f.matrix[a][k] * f.matrix[b][k] for k in range(n))
            want = 1 if a == b else 0
            worst = max(worst, abs(complex(acc) - want))
    return worst


def r_symbols(ctx: QContext, alg: AlgebraSpec, level: int, j1: Sequence[int], j2: Sequence[int], j: Sequence[int]) -> Tuple[Any, ...]:
    """Braiding eigenvalues of all channels of j1 x j2 -> j."""
    j1, j2, j = tuple(j1), tuple(j2), tuple(j)
    key = (ctx.key(), alg.name, level, j1, j2, j)
    cached = _R_CACHE.get(key)
    if cached is not None:
        return cached
    dec = decompose(ctx, alg, level, j1, j2)
    swapped = decompose(ctx, alg, level, j2, j1)
    chans = dec.channels.get(j, [])
    if not chans:
        _R_CACHE[key] = ()
        return ()
    swapped_chans = swapped.channels[j]
    nulls = _truncation_nulls(ctx, swapped_chans[0].space, j, len(swapped_chans))
    out = []
    for alpha, ch in enumerate(chans):
        out.append(_r_from_channel(ctx, alg, ch, swapped_chans, alpha, nulls))
    result = tuple(out)
    _R_CACHE[key] = result
    return result


def r_symbol(ctx: QContext, alg: AlgebraSpec, level: int, j1: Sequence[int], j2: Sequence[int], j: Sequence[int], alpha: int = 0) -> Any:
    return r_symbols(ctx, alg, level, j1, j2, j)[alpha]


def _truncation_nulls(ctx: QContext, space, j: Weight, n_channels: int) -> List[List[Any]]:
    """Radical of the bilinear form on the raw highest-weight space.

    At a root of unity the raw space can exceed the fusion multiplicity; the
    excess directions have vanishing bilinear norm against everything and are
    exactly what truncation removes.  Braiding preserves the raw space, so
    these directions reappear as unknowns when reading off braiding
    eigenvalues component by component.
    """
    raw = space.highest_weight_space(j)
    if len(raw) <= n_channels:
        return []
    gram = [[_bilinear(a, b) for b in raw] for a in raw]
    coords = _nullspace(ctx, gram, len(raw))
    if len(coords) != len(raw) - n_channels:
        raise ArithmeticError("bilinear radical does not match the truncation count")
    dim = len(raw[0])
    return [
        [sum(c * vec[i] for c, vec in zip(co, raw)) for i in range(dim)]
        for co in coords
    ]


def _dominated(alg: AlgebraSpec, u: Weight, others) -> bool:
    """True when some other weight sits strictly below u in the root order."""
    for v in others:
        if v == u:
            continue
        coords = alg.root_coordinates(tuple(a - b for a, b in zip(u, v)))
        if all(c.denominator == 1 and c >= 0 for c in coords):
            return True
    return False


def _r_from_channel(
    ctx: QContext, alg: AlgebraSpec, ch: Channel,
    swapped_chans: Sequence[Channel], alpha: int, nulls: Sequence[Sequence[Any]],
) -> Any:
    """Braiding eigenvalue of one channel.

    On components whose left weight is minimal within the support of the top
    state, braiding acts by the quadratic-form power times the slot swap; no
    lowering corrections reach them.  Those components give linear equations
    for the eigenvalue, any leakage into sibling channels, and the unavoidable
    admixture of truncation-null directions.  The eigenvalue must account for
    the clean components exactly; leakage must come out zero.
    """
    rep1 = ch.space.rep1
    basis = ch.space.basis(ch.j)
    top = ch.top_vector()
    scale = max(abs(complex(x)) for x in top)
    present = {
        rep1.weight_of(p1)
        for (p1, p2), c in zip(basis.pairs, top)
        if abs(complex(c)) > 1e-10 * scale
    }
    minimal = {u for u in present if not _dominated(alg, u, present)}

    swap_space = swapped_chans[0].space
    swap_basis = swap_space.basis(ch.j)
    swap_tops = [c.top_vector() for c in swapped_chans]

    rows: List[List[Any]] = []
    rhs: List[List[Any]] = []
    for n, (p1, p2) in enumerate(basis.pairs):
        w1 = rep1.weight_of(p1)
        if w1 not in minimal:
            continue
        rest = tuple(a - b for a, b in zip(ch.j, w1))
        exponent = Fraction(alg.weight_inner(w1, rest), 2) * alg.root_denominator
        if exponent.denominator != 1:
            raise ArithmeticError("braiding prefactor exponent is not an integer power")
        m = swap_basis.index((p2, p1))
        row = [swap_tops[alpha][m]]
        row.extend(st[m] for b, st in enumerate(swap_tops) if b != alpha)
        row.extend(nv[m] for nv in nulls)
        rows.append(row)
        rhs.append([ctx.q_power(int(exponent)) * top[n]])

    unknowns = len(swap_tops) + len(nulls)
    sol, residual = _solve_overdetermined(ctx, rows, rhs, unknowns)
    if residual > 1e-8 * scale:
        raise ArithmeticError(
            f"braiding is not consistent on clean components for {ch.j1} x {ch.j2} -> {ch.j}"
        )
    for b in range(1, len(swap_tops)):
        if abs(complex(sol[b][0])) > 1e-8:
            raise ArithmeticError(
                f"braiding mixes fusion channels for {ch.j1} x {ch.j2} -> {ch.j}"
            )
    return sol[0][0]


def verify_r_symmetries(ctx: QContext, alg: AlgebraSpec, level: int, conjugate) -> float:
    """Largest violation of R(a,b;c) = R(b,a;c) and its conjugate-label twin.

    ``conjugate`` maps a label to its dual.  Both symmetries hold in the
    chosen gauge channel by channel.
    """
    labels = admissible_weights(alg, level)
    worst = 0.0
    for a in labels:
        for b in labels:
            dec = decompose(ctx, alg, level, a, b)
            for c, chans in dec.channels.items():
                if not chans:
                    continue
                r_ab = r_symbols(ctx, alg, level, a, b, c)
                r_ba = r_symbols(ctx, alg, level, b, a, c)
                r_bar = r_symbols(ctx, alg, level, conjugate(a), conjugate(b), conjugate(c))
                for alpha in range(len(chans)):
                    worst = max(worst, abs(complex(r_ab[alpha] - r_ba[alpha])))
                    worst = max(worst, abs(complex(r_ab[alpha] - r_bar[alpha])))
    return worst


# -- coherence sweeps --------------------------------------------------------
#
# The sweeps run over every fusion-allowed label combination in double
# precision (the honest residuals are far below any double rounding), then
# re-evaluate the worst combination at full precision for the reported value.


class _SymbolStore:
    """Double-precision views of all F and R symbols of one theory."""

    def __init__(self, ctx: QContext, alg: AlgebraSpec, level: int,
                 labels: Optional[Sequence[Weight]] = None):
        self.ctx = ctx
        self.alg = alg
        self.level = level
        if labels is None:
            self.labels = admissible_weights(alg, level)
        else:
            self.labels = [tuple(a) for a in labels]
        self._fusion: Dict[Tuple[Weight, Weight], Dict[Weight, int]] = {}
        self._f: Dict[tuple, Dict[RowLabel, Dict[RowLabel, complex]]] = {}
        self._r: Dict[tuple, Tuple[complex, ...]] = {}

    def fusion(self, a: Weight, b: Weight) -> Dict[Weight, int]:
        key = (a, b)
        if key not in self._fusion:
            self._fusion[key] = decompose(self.ctx, self.alg, self.level, a, b).fusion()
        return self._fusion[key]

    def f(self, j1: Weight, j2: Weight, j3: Weight, j: Weight) -> Dict[RowLabel, Dict[RowLabel, complex]]:
        key = (j1, j2, j3, j)
        if key not in self._f:
            self._f[key] = f_tensor(self.ctx, self.alg, self.level, j1, j2, j3, j).as_complex()
        return self._f[key]

    def r(self, j1: Weight, j2: Weight, j: Weight) -> Tuple[complex, ...]:
        key = (j1, j2, j)
        if key not in self._r:
            self._r[key] = tuple(complex(v) for v in r_symbols(self.ctx, self.alg, self.level, j1, j2, j))
        return self._r[key]


def verify_pentagon(ctx: QContext, alg: AlgebraSpec, level: int,
                    labels: Optional[Sequence[Weight]] = None, store=None) -> float:
    """Largest pentagon violation over all fusion-allowed label settings.

    ``store`` may be any object with the _SymbolStore read interface, which
    lets the check run against externally supplied symbol tables.
    """
    if store is None:
        store = _SymbolStore(ctx, alg, level, labels)
    labels = store.labels
    worst = 0.0
    for j1 in labels:
        for j2 in labels:
            for j3 in labels:
                for j4 in labels:
                    worst = max(worst, _pentagon_block(store, j1, j2, j3, j4))
    return worst


def _pentagon_block(store: _SymbolStore, j1, j2, j3, j4) -> float:
    worst = 0.0
    for j12, n12 in store.fusion(j1, j2).items():
        for j123, n123 in store.fusion(j12, j3).items():
            for j, nj in store.fusion(j123, j4).items():
                for j34, n34 in store.fusion(j3, j4).items():
                    for j234, n234 in store.fusion(j2, j34).items():
                        if j not in store.fusion(j1, j234):
                            continue
                        worst = max(
                            worst,
                            _pentagon_cell(store, j1, j2, j3, j4, j, j12, j123, j34, j234,
                                           n12, n123, n34, n234),
                        )
    return worst


def _pentagon_cell(store, j1, j2, j3, j4, j, j12, j123, j34, j234, n12, n123, n34, n234) -> float:
    f_a = store.f(j1, j2, j3, j123)
    f_c = store.f(j2, j3, j4, j234)
    f_rhs1 = store.f(j12, j3, j4, j)
    f_rhs2 = store.f(j1, j2, j34, j)
    nj_123 = store.fusion(j123, j4).get(j, 0)
    n1_234 = store.fusion(j1, j234).get(j, 0)
    worst = 0.0
    for alpha in range(n12):
        for beta in range(n123):
            for gamma in range(nj_123):
                for iota in range(n34):
                    for kappa in range(n234):
                        for eta in range(n1_234):
                            lhs = 0j
                            for j23, n23 in store.fusion(j2, j3).items():
                                if j123 not in store.fusion(j1, j23):
                                    continue
                                n23_4 = store.fusion(j23, j4).get(j234, 0)
                                n1_23 = store.fusion(j1, j23).get(j123, 0)
                                if not n23_4:
                                    continue
                                f_mid = store.f(j1, j23, j4, j)
                                for delta in range(n23):
                                    for eps in range(n1_23):
                                        v1 = f_a[(j12, alpha, beta)].get((j23, delta, eps))
                                        if v1 is None or v1 == 0:
                                            continue
                                        for zeta in range(n23_4):
                                            v2 = f_mid[(j123, eps, gamma)].get((j234, zeta, eta))
                                            if v2 is None or v2 == 0:
                                                continue
                                            v3 = f_c[(j23, delta, zeta)].get((j34, iota, kappa))
                                            if v3 is None or v3 == 0:
                                                continue
                                            lhs += v1 * v2 * v3
                            rhs = 0j
                            n12_34 = store.fusion(j12, j34).get(j, 0)
                            for lam in range(n12_34):
                                v1 = f_rhs1[(j123, beta, gamma)].get((j34, iota, lam))
                                if v1 is None:
                                    continue
                                v2 = f_rhs2[(j12, alpha, lam)].get((j234, kappa, eta))
                                if v2 is None:
                                    continue
                                rhs += v1 * v2
                            worst = max(worst, abs(lhs - rhs))
    return worst


def verify_hexagon(ctx: QContext, alg: AlgebraSpec, level: int, inverse: bool = False,
                   labels: Optional[Sequence[Weight]] = None, store=None) -> float:
    """Largest hexagon violation over all fusion-allowed label settings.

    With ``inverse`` set, checks the partner equation with every braiding
    eigenvalue replaced by its reciprocal.
    """
    if store is None:
        store = _SymbolStore(ctx, alg, level, labels)
    labels = store.labels
    worst = 0.0
    for j1 in labels:
        for j2 in labels:
            for j3 in labels:
                for j12, n12 in store.fusion(j1, j2).items():
                    for j13, n13 in store.fusion(j1, j3).items():
                        common = set(store.fusion(j12, j3)) & set(store.fusion(j13, j2))
                        for j in common:
                            worst = max(
                                worst,
                                _hexagon_cell(store, j1, j2, j3, j, j12, j13, n12, n13, inverse),
                            )
    return worst


def _hexagon_cell(store, j1, j2, j3, j, j12, j13, n12, n13, inverse: bool) -> float:
    def rval(a, b, c, alpha):
        v = store.r(a, b, c)[alpha]
        return 1 / v if inverse else v

    f_lhs = store.f(j2, j1, j3, j)
    f_rhs1 = store.f(j1, j2, j3, j)
    f_rhs2 = store.f(j2, j3, j1, j)
    n12_3 = store.fusion(j12, j3).get(j, 0)
    n13_2 = store.fusion(j13, j2).get(j, 0)
    worst = 0.0
    for alpha in range(n12):
        for beta in range(n12_3):
            for gamma in range(n13):
                for delta in range(n13_2):
                    lhs = (
                        rval(j1, j2, j12, alpha)
                        * f_lhs[(j12, alpha, beta)].get((j13, gamma, delta), 0j)
                        * rval(j1, j3, j13, gamma)
                    )
                    rhs = 0j
                    for j23, n23 in store.fusion(j2, j3).items():
                        n1_23 = store.fusion(j1, j23).get(j, 0)
                        if not n1_23:
                            continue
                        for eps in range(n23):
                            for zeta in range(n1_23):
                                v1 = f_rhs1[(j12, alpha, beta)].get((j23, eps, zeta))
                                if v1 is None or v1 == 0:
                                    continue
                                v2 = f_rhs2[(j23, eps, zeta)].get((j13, gamma, delta))
                                if v2 is None or v2 == 0:
                                    continue
                                rhs += v1 * rval(j1, j23, j, zeta) * v2
                    worst = max(worst, abs(lhs - rhs))
    return worst
