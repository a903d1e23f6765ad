"""Topological data extracted from the coupling and recoupling symbols.

All quantities are derived from F and R symbols alone, so they sit on top of
:mod:`anyonkit.symbols` without touching module internals:

* quantum dimension and Frobenius-Schur indicator from the vacuum entry of
  the self-recoupling F-matrix,
* twists from the exchange phase with the conjugate label (cross-checkable
  against the conformal-weight expression),
* theta symbols (bubble diagrams) and the fully symmetric tetrahedral
  symbols,
* central charge (mod 8) from the normalized Gauss sum,
* the S-matrix, a modularity test, and a brute-force fusion-ring matcher.

A theory here is a label set closed under fusion: all admissible weights by
default, or an explicit subset such as the charge-zero sector of the level
three rank-two theory.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .liealg import AlgebraSpec, Weight, admissible_weights, conjugate_weight
from .qarith import QContext
from .symbols import f_tensor, r_symbols
from .tensor import fusion_rules

__all__ = [
    "TheoryData",
    "derive",
    "quantum_dimension",
    "fs_indicator",
    "twist",
    "twist_from_conformal_weight",
    "theta_symbol",
    "central_charge",
    "s_matrix",
    "is_modular",
    "fs_from_twists",
    "tetrahedral_symbol",
    "fusion_ring_map",
    "FIBONACCI_FUSION",
    "rank_one_fusion_table",
]

FusionTable = Dict[Weight, Dict[Weight, Dict[Weight, int]]]


@dataclass
class TheoryData:
    """Scalar topological data of one closed label set.

    F and R tensors are not stored here; they come from the symbol cache on
    demand, which keeps this record cheap to build and serialize.
    """

    ctx: QContext
    alg: AlgebraSpec
    level: int
    labels: Tuple[Weight, ...]
    conjugates: Dict[Weight, Weight]
    fusion: FusionTable
    dims: Dict[Weight, Any]
    fs_indicators: Dict[Weight, Any]
    twists: Dict[Weight, Any] = field(repr=False, default=None)  # type: ignore[assignment]
    gauge: Dict[str, Any] = field(default_factory=dict)

    @property
    def trivial(self) -> Weight:
        return (0,) * self.alg.rank

    def total_dim(self):
        total = self.ctx.mp.mpf(0)
        for a in self.labels:
            total += self.dims[a] ** 2
        return self.ctx.mp.sqrt(total)

    def fusion_coefficient(self, a: Weight, b: Weight, c: Weight) -> int:
        return self.fusion[tuple(a)][tuple(b)].get(tuple(c), 0)

    def theta_triples(self) -> List[Tuple[Weight, Weight, Weight]]:
        """Multiplicity-one admissible triples in the symmetric convention."""
        out = []
        for a in self.labels:
            for b in self.labels:
                for ebar, mult in self.fusion[a][b].items():
                    if mult == 1:
                        out.append((a, b, self.conjugates[ebar]))
        return out


def derive(
    ctx: QContext,
    alg: AlgebraSpec,
    level: int,
    labels: Optional[Sequence[Weight]] = None,
) -> TheoryData:
    """Compute the scalar data of the theory on a fusion-closed label set."""
    if labels is None:
        labels = admissible_weights(alg, level)
    labels = tuple(sorted((tuple(a) for a in labels), key=alg.label_sort_key))
    label_set = set(labels)
    conj = {a: conjugate_weight(alg, a) for a in labels}
    for a in labels:
        if conj[a] not in label_set:
            raise ValueError(f"label set is not closed under conjugation at {a}")
    fusion: FusionTable = {}
    for a in labels:
        fusion[a] = {}
        for b in labels:
            rules = fusion_rules(ctx, alg, level, a, b)
            inside = {c: m for c, m in rules.items() if c in label_set}
            if sum(inside.values()) != sum(rules.values()):
                raise ValueError(f"label set is not closed under fusion at {a} x {b}")
            fusion[a][b] = inside
    dims = {a: quantum_dimension(ctx, alg, level, a) for a in labels}
    fs = {a: fs_indicator(ctx, alg, level, a) for a in labels}
    twists = {a: twist(ctx, alg, level, a) for a in labels}
    gauge = {
        "anchor": "highest-coordinate coupling real positive, branch tracked along the unit arc",
        "precision_bits": ctx.precision_bits,
        "tolerance": ctx.tolerance_str,
    }
    return TheoryData(
        ctx=ctx, alg=alg, level=level, labels=labels, conjugates=conj,
        fusion=fusion, dims=dims, fs_indicators=fs, twists=twists, gauge=gauge,
    )


def _vacuum_entry(ctx: QContext, alg: AlgebraSpec, level: int, a: Weight):
    """(F^{a, abar, a}_a) at the vacuum row and column."""
    a = tuple(a)
    abar = conjugate_weight(alg, a)
    trivial = (0,) * alg.rank
    f = f_tensor(ctx, alg, level, a, abar, a, a)
    return f.entry((trivial, 0, 0), (trivial, 0, 0))


def quantum_dimension(ctx: QContext, alg: AlgebraSpec, level: int, a: Weight):
    return 1 / ctx.mp.fabs(_vacuum_entry(ctx, alg, level, a))


def fs_indicator(ctx: QContext, alg: AlgebraSpec, level: int, a: Weight):
    """d_a times the vacuum F entry; a sign for self-conjugate labels."""
    entry = _vacuum_entry(ctx, alg, level, a)
    return entry / ctx.mp.fabs(entry)


def twist(ctx: QContext, alg: AlgebraSpec, level: int, a: Weight):
    """Topological spin from the exchange phase with the conjugate label."""
    a = tuple(a)
    abar = conjugate_weight(alg, a)
    trivial = (0,) * alg.rank
    r = r_symbols(ctx, alg, level, abar, a, trivial)[0]
    return fs_indicator(ctx, alg, level, a) * ctx.mp.conj(r)


def twist_from_conformal_weight(ctx: QContext, alg: AlgebraSpec, level: int, a: Weight):
    """q**((a, a + 2 rho)/2), the exponentiated conformal weight."""
    a = tuple(a)
    two_rho = tuple(2 * r for r in alg.rho())
    inner = alg.weight_inner(a, tuple(x + y for x, y in zip(a, two_rho)))
    scaled = inner * alg.root_denominator / 2
    if scaled.denominator != 1:
        raise ArithmeticError(f"conformal weight of {a} does not reduce to the root granularity")
    return ctx.q_power(int(scaled))


def theta_symbol(
    ctx: QContext,
    alg: AlgebraSpec,
    level: int,
    a: Weight,
    b: Weight,
    e: Weight,
    alpha: int = 0,
    beta: int = 0,
):
    """Value of the closed two-vertex network with edge labels a, b, e.

    The slots are symmetric: the triple is admissible when the conjugate
    of any one label fuses out of the other two, and the value is a sign
    times sqrt(d_a d_b d_e). A vacuum edge collapses the network to the
    dimension of the remaining pair.
    """
    a, b, e = tuple(a), tuple(b), tuple(e)
    bbar = conjugate_weight(alg, b)
    ebar = conjugate_weight(alg, e)
    trivial = (0,) * alg.rank
    f = f_tensor(ctx, alg, level, a, b, bbar, a)
    entry = f.entry((ebar, alpha, beta), (trivial, 0, 0))
    da = quantum_dimension(ctx, alg, level, a)
    db = quantum_dimension(ctx, alg, level, b)
    return entry * da * db


def central_charge(theory: TheoryData):
    """Central charge mod 8 from the normalized Gauss sum."""
    mp = theory.ctx.mp
    total = mp.mpc(0)
    for a in theory.labels:
        total += theory.dims[a] ** 2 * theory.twists[a]
    z = total / theory.total_dim()
    c = mp.arg(z) * 4 / mp.pi
    if c < 0:
        c += 8
    return c


def s_matrix(theory: TheoryData):
    """S_ab = (1/D) sum_c N_{abar,b}^c d_c theta_c / (theta_a theta_b)."""
    ctx = theory.ctx
    mp = ctx.mp
    n = len(theory.labels)
    dd = theory.total_dim()
    s = mp.matrix(n, n)
    for i, a in enumerate(theory.labels):
        abar = theory.conjugates[a]
        for j, b in enumerate(theory.labels):
            total = mp.mpc(0)
            for c, mult in theory.fusion[abar][b].items():
                total += mult * theory.dims[c] * theory.twists[c]
            s[i, j] = total / (theory.twists[a] * theory.twists[b] * dd)
    return s


def is_modular(theory: TheoryData, tol: float = 1e-6) -> bool:
    """True when the S-matrix is invertible (here: unitary up to tol)."""
    mp = theory.ctx.mp
    return abs(complex(mp.det(s_matrix(theory)))) > tol


def fs_from_twists(theory: TheoryData, c: Weight):
    """Indicator of a self-dual label from fusion, dims and twists.

    Valid for modular theories only; a theory with a transparent label
    breaks this sum rule even though the direct indicator stays defined.
    """
    mp = theory.ctx.mp
    c = tuple(c)
    total = mp.mpc(0)
    for a in theory.labels:
        for b in theory.labels:
            mult = theory.fusion[a][b].get(c, 0)
            if mult:
                ratio = theory.twists[a] / theory.twists[b]
                total += mult * ratio ** 2 * theory.dims[a] * theory.dims[b]
    return total / theory.total_dim() ** 2


def _sign_of(ctx: QContext, value):
    return value / ctx.mp.fabs(value)


def tetrahedral_symbol(
    ctx: QContext,
    alg: AlgebraSpec,
    level: int,
    a: Weight,
    b: Weight,
    c: Weight,
    d: Weight,
    e: Weight,
    f: Weight,
):
    """Fully symmetric companion of a multiplicity-free F entry."""
    a, b, c, d, e, f = (tuple(x) for x in (a, b, c, d, e, f))
    ften = f_tensor(ctx, alg, level, a, b, c, d)
    entry = ften.entry((e, 0, 0), (f, 0, 0))
    dbar = conjugate_weight(alg, d)
    fbar = conjugate_weight(alg, f)
    sgn_adf = _sign_of(ctx, theta_symbol(ctx, alg, level, a, dbar, f))
    sgn_bcf = _sign_of(ctx, theta_symbol(ctx, alg, level, b, c, fbar))
    fb_f = fs_indicator(ctx, alg, level, f)
    root = ctx.mp.sqrt(
        quantum_dimension(ctx, alg, level, a)
        * quantum_dimension(ctx, alg, level, b)
        * quantum_dimension(ctx, alg, level, c)
        * quantum_dimension(ctx, alg, level, d)
    )
    return sgn_adf * sgn_bcf * fb_f * entry * root


# -- fusion ring identification ----------------------------------------------

# the golden two-label ring: one nontrivial label with x*x = 1 + x
FIBONACCI_FUSION: Dict[int, Dict[int, Dict[int, int]]] = {
    0: {0: {0: 1}, 1: {1: 1}},
    1: {0: {1: 1}, 1: {0: 1, 1: 1}},
}


def rank_one_fusion_table(k: int) -> Dict[int, Dict[int, Dict[int, int]]]:
    from .su2k import closed_fusion

    return {
        a: {b: {c: 1 for c in closed_fusion(k, a, b)} for b in range(k + 1)}
        for a in range(k + 1)
    }


def fusion_ring_map(table_a: Dict, table_b: Dict) -> Optional[Dict]:
    """Bijection of labels carrying one fusion table onto the other.

    Plain backtracking with consistency checks on every assigned pair; the
    rings of interest are small enough that no cleverness is needed.
    """
    labels_a = sorted(table_a.keys())
    labels_b = sorted(table_b.keys())
    if max(len(labels_a), len(labels_b)) > 12:
        raise ValueError("brute-force ring matching is limited to 12 labels")
    if len(labels_a) != len(labels_b):
        return None

    def consistent(assign: Dict) -> bool:
        for x, fx in assign.items():
            for y, fy in assign.items():
                want = {}
                for z, m in table_a[x][y].items():
                    if z not in assign:
                        want = None
                        break
                    want[assign[z]] = m
                got = table_b[fx][fy]
                if want is not None and want != {c: m for c, m in got.items() if m}:
                    return False
                # even with unassigned outputs the totals must be consistent
                if sum(table_a[x][y].values()) != sum(got.values()):
                    return False
        return True

    def extend(assign: Dict, used: set) -> Optional[Dict]:
        if len(assign) == len(labels_a):
            return dict(assign)
        x = labels_a[len(assign)]
        for fx in labels_b:
            if fx in used:
                continue
            assign[x] = fx
            used.add(fx)
            if consistent(assign):
                found = extend(assign, used)
                if found is not None:
                    return found
            del assign[x]
            used.discard(fx)
        return None

    return extend({}, set())
