"""Irreducible highest-weight modules in an orthonormal basis.

The module is built top-down, one weight space at a time.  No explicit vector
representation is kept: every new basis vector is a combination of lowering
operators applied to already-known vectors, and all inner products follow
from the contravariant bilinear form, for which raising is the transpose of
lowering.  The single recursion

    B(Ldown_i u, Ldown_j w) = B(u, Ldown_j Lup_i w) + delta_ij [w_i]_{q_i} B(u, w)

expresses every Gram entry through matrix blocks of strictly higher weights.

Basis vectors are normalized by the principal square root of their norm.  On
the unit circle the norms are real and positive for the admissible levels
(the form stays definite below the truncation bound), so this normalization
reproduces the gauge in which all structure constants are positive as q
approaches 1 along the arc.  One weight space needs a fixed basis choice
beyond that rule: the doubly degenerate zero weight of the A2 adjoint uses
the symmetric and antisymmetric combinations of the two lowering paths, in
that order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import dense
from .liealg import AlgebraSpec, Weight, WeightSystem, classical_weight_system
from .qarith import QContext

__all__ = ["Irrep", "build_irrep", "verify_module"]

State = Tuple[Weight, int]

# fixed basis combinations (rows over the candidate vectors, before
# normalization) for weight spaces where plain Gram-Schmidt would produce a
# different, less symmetric basis than the conventional one
_PREFERRED_COMBOS: Dict[Tuple[str, Weight, Weight], Tuple[Tuple[int, ...], ...]] = {
    ("A2", (1, 1), (0, 0)): ((1, 1), (1, -1)),
}


@dataclass
class Irrep:
    """One irreducible module with orthonormal weight bases.

    ``lower[i]`` is the full matrix of the i-th lowering generator in the
    canonical state order; raising generators are the transposes.  States are
    ``(weight, n)`` with ``n`` the index inside the weight space.
    """

    ctx: QContext
    alg: AlgebraSpec
    hw: Weight
    system: WeightSystem
    states: Tuple[State, ...]
    index: Dict[State, int]
    lower: List[dense.Matrix] = field(repr=False)

    @property
    def dimension(self) -> int:
        return len(self.states)

    def weight_of(self, state_index: int) -> Weight:
        return self.states[state_index][0]

    def raise_matrix(self, i: int) -> dense.Matrix:
        return dense.transpose(self.lower[i])

    def h_eigenvalue(self, state_index: int, i: int) -> int:
        return self.states[state_index][0][i]

    def states_at(self, mu: Sequence[int]) -> List[int]:
        mu = tuple(mu)
        return [self.index[(mu, n)] for n in range(self.system.mult(mu))]


def build_irrep(ctx: QContext, alg: AlgebraSpec, hw: Sequence[int]) -> Irrep:
    """Construct the module with highest weight ``hw`` over ``ctx``."""
    system = classical_weight_system(alg, hw)
    hw = system.hw
    states = tuple(system.states())
    index = {st: n for n, st in enumerate(states)}
    dim = len(states)
    lower = [dense.zeros(ctx, dim, dim) for _ in range(alg.rank)]

    # low_block[(i, up_weight)][m][u] = B(e_m at up-alpha_i, Ldown_i e_u at up)
    low_block: Dict[Tuple[int, Weight], dense.Matrix] = {}

    def block(i: int, up: Weight) -> Optional[dense.Matrix]:
        return low_block.get((i, up))

    simple = [alg.simple_root(i) for i in range(alg.rank)]

    for mu in system.weights[1:]:
        mult = system.mults[mu]
        # candidate vectors Ldown_i e_u for every basis vector one step up
        cands: List[Tuple[int, int]] = []
        for i in range(alg.rank):
            up = tuple(m + a for m, a in zip(mu, simple[i]))
            for u in range(system.mult(up)):
                cands.append((i, u))
        ncand = len(cands)
        if ncand == 0:
            raise ArithmeticError(f"weight {mu} has no raising neighbours")

        gram = dense.zeros(ctx, ncand, ncand)
        for s, (i_s, u_s) in enumerate(cands):
            up_s = tuple(m + a for m, a in zip(mu, simple[i_s]))
            for t, (i_t, u_t) in enumerate(cands):
                up_t = tuple(m + a for m, a in zip(mu, simple[i_t]))
                val = ctx.zero
                if i_s == i_t and u_s == u_t:
                    val = val + ctx.q_number(up_t[i_s], alg.t[i_s])
                # route through the weight two steps up, if it exists
                upper = tuple(m + a for m, a in zip(up_t, simple[i_s]))
                b_s = block(i_t, upper)
                b_t = block(i_s, upper)
                if b_s is not None and b_t is not None:
                    for v in range(len(b_t[0]) if b_t else 0):
                        val = val + b_t[u_t][v] * b_s[u_s][v]
                gram[s][t] = val

        rows = _orthonormal_rows(ctx, alg, hw, mu, cands, gram, mult)

        # record the lowering blocks into this weight space
        for i in range(alg.rank):
            up = tuple(m + a for m, a in zip(mu, simple[i]))
            if system.mult(up) == 0:
                continue
            blk = dense.zeros(ctx, mult, system.mult(up))
            for m, row in enumerate(rows):
                for u in range(system.mult(up)):
                    j = cands.index((i, u))
                    blk[m][u] = sum(row[t] * gram[t][j] for t in range(ncand))
            low_block[(i, up)] = blk
            for m in range(mult):
                for u in range(system.mult(up)):
                    lower[i][index[(mu, m)]][index[(up, u)]] = blk[m][u]

    return Irrep(ctx=ctx, alg=alg, hw=hw, system=system, states=states, index=index, lower=lower)


def _orthonormal_rows(
    ctx: QContext,
    alg: AlgebraSpec,
    hw: Weight,
    mu: Weight,
    cands: List[Tuple[int, int]],
    gram: dense.Matrix,
    mult: int,
) -> List[List[object]]:
    """Pick ``mult`` orthonormal combinations of the candidate vectors.

    Plain Gram-Schmidt over the candidates in their canonical order, except
    for weight spaces with a fixed preferred combination.  The rank threshold
    only has to separate exact zeros from honest norms, which stay of order
    one in these small modules.
    """
    ncand = len(cands)
    preset = _PREFERRED_COMBOS.get((alg.name, hw, mu))
    if preset is not None:
        if len(preset) != mult or any(len(r) != ncand for r in preset):
            raise ValueError(f"preset basis at {mu} does not match candidate layout")
        rows = []
        for combo in preset:
            row = [ctx.one * c for c in combo]
            nrm = _form(gram, row, row)
            rows.append([x / ctx.sqrt(nrm) for x in row])
        dust = 2.0 ** (12 - ctx.precision_bits)
        for a in range(mult):
            for b in range(a):
                if abs(complex(_form(gram, rows[a], rows[b]))) > dust:
                    raise ArithmeticError(f"preset basis at {mu} is not orthogonal")
        return rows

    threshold = 1e-12
    rows: List[List[object]] = []
    for t in range(ncand):
        row = [ctx.one if s == t else ctx.zero for s in range(ncand)]
        for prev in rows:
            overlap = sum(prev[s] * gram[s][t] for s in range(ncand))
            row = [x - overlap * y for x, y in zip(row, prev)]
        nrm = _form(gram, row, row)
        if abs(complex(nrm)) < threshold:
            continue
        rows.append([x / ctx.sqrt(nrm) for x in row])
        if len(rows) == mult:
            break
    if len(rows) < mult:
        raise ArithmeticError(f"could not span weight space {mu} ({len(rows)} of {mult})")
    return rows


def _form(gram: dense.Matrix, a: Sequence[object], b: Sequence[object]) -> object:
    return sum(a[s] * gram[s][t] * b[t] for s in range(len(a)) for t in range(len(b)))


def verify_module(rep: Irrep) -> float:
    """Largest residual of the defining relations on the built matrices.

    Checks the commutator of raising and lowering against the diagonal
    q-number of the weight, the q-Serre relations for both triangular parts,
    and that every generator moves weights by the right root.
    """
    ctx, alg = rep.ctx, rep.alg
    dim = rep.dimension
    worst = 0.0

    raise_m = [rep.raise_matrix(i) for i in range(alg.rank)]
    for i in range(alg.rank):
        for j in range(alg.rank):
            comm = dense.mat_sub(
                dense.mat_mul(raise_m[i], rep.lower[j]),
                dense.mat_mul(rep.lower[j], raise_m[i]),
            )
            if i == j:
                for n in range(dim):
                    h = rep.h_eigenvalue(n, i)
                    comm[n][n] = comm[n][n] - ctx.q_number(h, alg.t[i])
            worst = max(worst, dense.max_abs(comm))

    for mats in (rep.lower, raise_m):
        for i in range(alg.rank):
            for j in range(alg.rank):
                if i == j:
                    continue
                n_ij = 1 - alg.cartan[j][i]
                acc = dense.zeros(ctx, dim, dim)
                for s in range(n_ij + 1):
                    term = dense.identity(ctx, dim)
                    for _ in range(n_ij - s):
                        term = dense.mat_mul(term, mats[i])
                    term = dense.mat_mul(term, mats[j])
                    for _ in range(s):
                        term = dense.mat_mul(term, mats[i])
                    coeff = ctx.q_binomial(n_ij, s, alg.t[i])
                    sign = -1 if s % 2 else 1
                    acc = [[a + sign * coeff * t for a, t in zip(ra, rt)] for ra, rt in zip(acc, term)]
                worst = max(worst, dense.max_abs(acc))

    for i in range(alg.rank):
        alpha = alg.simple_root(i)
        for r in range(dim):
            for c in range(dim):
                if abs(complex(rep.lower[i][r][c])) > 1e-25:
                    wr, wc = rep.weight_of(r), rep.weight_of(c)
                    if tuple(a - b for a, b in zip(wc, alpha)) != wr:
                        worst = max(worst, abs(complex(rep.lower[i][r][c])))

    return worst
