"""Truncated tensor product decompositions and coupling coefficients.

The decomposition of a product of two modules is computed directly from the
coproduct.  Highest-weight vectors at a target weight are the nullspace of
the stacked raising maps; the contravariant bilinear form on that nullspace
decides which directions survive at the root of unity (null directions are
exactly the ones removed by the truncation) and how fusion multiplicities
split into channels.

Channel conventions
-------------------
For a product of a module with itself, slot swap composed with complex
conjugation is an antilinear involution on the solution space.  Its fixed
vectors form a real structure on which both the bilinear form and the
ordinary Hermitian form restrict to real symmetric forms; the channels are
the generalized eigendirections of that pair, with positive (swap-symmetric)
channels first.  This reproduces the familiar ordering in which a channel
appearing at a lower level precedes the one that opens up one level higher,
and it discards truncated directions uniformly as zero eigenvalues.  For a
product of two different modules a pivoted orthogonalization of the solution
basis is used instead (no multiplicity larger than one arises this way for
the theories with tabulated data).

The overall phase of every channel is fixed at the top weight: the first
coordinate in the canonical pair order (left state first, so the highest
possible left weight) is scaled to one, and the vector is divided by a
square root of its bilinear norm.  The branch of that square root is not
the principal one: it is the branch continued along the arc of evaluation
points from q = 1 (where the norm is a positive real and the root is the
positive one) to the root of unity.  This is exactly the convention that
the top coupling coefficient with the highest left weight is positive in
the classical limit.  The continuation is carried out numerically by
sampling the norm at intermediate points on the arc and unwrapping its
phase; channels that cannot be followed through the samples (classical
multiplicity above one) keep the principal branch, which is still a valid
gauge, just not comparable coefficient-by-coefficient with tabulated data.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from . import dense
from .liealg import AlgebraSpec, Weight, admissible_weights, conjugate_weight
from .qarith import QContext
from .repmod import Irrep, build_irrep

__all__ = [
    "PairBasis",
    "Channel",
    "Decomposition",
    "module",
    "pair_basis",
    "decompose",
    "fusion_rules",
    "fusion_matrix",
    "verify_channel",
    "fit_relative_sign",
    "check_cg_symmetries",
]

Pair = Tuple[int, int]

_RANK_TOL = 1e-12
_NULL_TOL = 1e-8

_MODULES: Dict[tuple, Irrep] = {}
_DECOMPS: Dict[tuple, "Decomposition"] = {}


def module(ctx: QContext, alg: AlgebraSpec, hw: Sequence[int]) -> Irrep:
    """Cached module constructor."""
    key = (ctx.key(), alg.name, tuple(hw))
    rep = _MODULES.get(key)
    if rep is None:
        rep = build_irrep(ctx, alg, hw)
        _MODULES[key] = rep
    return rep


@dataclass(frozen=True)
class PairBasis:
    """Ordered basis of a fixed-weight subspace of a two-factor product."""

    weight: Weight
    pairs: Tuple[Pair, ...]

    def index(self, pair: Pair) -> int:
        return self.pairs.index(pair)


def pair_basis(rep1: Irrep, rep2: Irrep, weight: Sequence[int]) -> PairBasis:
    weight = tuple(weight)
    pairs = [
        (p1, p2)
        for p1 in range(rep1.dimension)
        for p2 in range(rep2.dimension)
        if tuple(a + b for a, b in zip(rep1.weight_of(p1), rep2.weight_of(p2))) == weight
    ]
    return PairBasis(weight=weight, pairs=tuple(pairs))


def _column_lists(rep: Irrep) -> List[List[List[Tuple[int, Any]]]]:
    """Nonzero entries of each lowering matrix, grouped by column."""
    out = []
    for i in range(rep.alg.rank):
        cols: List[List[Tuple[int, Any]]] = [[] for _ in range(rep.dimension)]
        for r in range(rep.dimension):
            for c in range(rep.dimension):
                v = rep.lower[i][r][c]
                if abs(complex(v)) > 1e-25:
                    cols[c].append((r, v))
        out.append(cols)
    return out


class _ProductSpace:
    """Shared machinery for one ordered pair of factor modules."""

    def __init__(self, ctx: QContext, rep1: Irrep, rep2: Irrep):
        self.ctx = ctx
        self.alg = rep1.alg
        self.rep1 = rep1
        self.rep2 = rep2
        self._low1 = _column_lists(rep1)
        self._low2 = _column_lists(rep2)
        self._bases: Dict[Weight, PairBasis] = {}

    def basis(self, weight: Sequence[int]) -> PairBasis:
        weight = tuple(weight)
        if weight not in self._bases:
            self._bases[weight] = pair_basis(self.rep1, self.rep2, weight)
        return self._bases[weight]

    def _half(self, i: int, h: int, sign: int):
        # q_i^(sign * h / 4) as an exact fractional power of q
        alg = self.alg
        unit = alg.root_denominator // (4 * alg.t[i])
        return self.ctx.q_power(sign * h * unit)

    def apply_lower(self, i: int, weight: Weight, coeffs: Sequence[Any]) -> Tuple[Weight, List[Any]]:
        """Apply the coproduct of the i-th lowering generator."""
        alg = self.alg
        src = self.basis(weight)
        alpha = alg.simple_root(i)
        dst_weight = tuple(w - a for w, a in zip(weight, alpha))
        dst = self.basis(dst_weight)
        out = [self.ctx.zero] * len(dst.pairs)
        pos = {p: n for n, p in enumerate(dst.pairs)}
        for c, (p1, p2) in zip(coeffs, src.pairs):
            if abs(complex(c)) < 1e-40:
                continue
            h2 = self.rep2.h_eigenvalue(p2, i)
            for r, v in self._low1[i][p1]:
                out[pos[(r, p2)]] += c * v * self._half(i, h2, +1)
            h1 = self.rep1.h_eigenvalue(p1, i)
            for r, v in self._low2[i][p2]:
                out[pos[(p1, r)]] += c * self._half(i, h1, -1) * v
        return dst_weight, out

    def apply_raise(self, i: int, weight: Weight, coeffs: Sequence[Any]) -> Tuple[Weight, List[Any]]:
        """Apply the coproduct of the i-th raising generator."""
        alg = self.alg
        src = self.basis(weight)
        alpha = alg.simple_root(i)
        dst_weight = tuple(w + a for w, a in zip(weight, alpha))
        dst = self.basis(dst_weight)
        out = [self.ctx.zero] * len(dst.pairs)
        pos = {p: n for n, p in enumerate(dst.pairs)}
        for c, (p1, p2) in zip(coeffs, src.pairs):
            if abs(complex(c)) < 1e-40:
                continue
            h2 = self.rep2.h_eigenvalue(p2, i)
            # raising is the transpose of lowering within each factor
            for r, v in self._raise_entries(self.rep1, i, p1):
                out[pos[(r, p2)]] += c * v * self._half(i, h2, +1)
            h1 = self.rep1.h_eigenvalue(p1, i)
            for r, v in self._raise_entries(self.rep2, i, p2):
                out[pos[(p1, r)]] += c * self._half(i, h1, -1) * v
        return dst_weight, out

    @staticmethod
    def _raise_entries(rep: Irrep, i: int, col: int) -> List[Tuple[int, Any]]:
        out = []
        for r in range(rep.dimension):
            v = rep.lower[i][col][r]
            if abs(complex(v)) > 1e-25:
                out.append((r, v))
        return out

    def highest_weight_space(self, weight: Sequence[int]) -> List[List[Any]]:
        """Nullspace basis of all raising maps at the given weight."""
        weight = tuple(weight)
        src = self.basis(weight)
        if not src.pairs:
            return []
        rows: List[List[Any]] = []
        n = len(src.pairs)
        for i in range(self.alg.rank):
            dst = self.basis(tuple(w + a for w, a in zip(weight, self.alg.simple_root(i))))
            if not dst.pairs:
                continue
            block = [[self.ctx.zero] * n for _ in range(len(dst.pairs))]
            for col in range(n):
                unit = [self.ctx.zero] * n
                unit[col] = self.ctx.one
                _, image = self.apply_raise(i, weight, unit)
                for r, v in enumerate(image):
                    block[r][col] = v
            rows.extend(block)
        if not rows:
            return [[self.ctx.one if s == t else self.ctx.zero for s in range(n)] for t in range(n)]
        return _nullspace(self.ctx, rows, n)


def _nullspace(ctx: QContext, rows: List[List[Any]], ncols: int) -> List[List[Any]]:
    """Reduced-row-echelon nullspace with magnitude pivoting."""
    m = [list(r) for r in rows]
    scale = max(1.0, dense.max_abs(m))
    tol = _RANK_TOL * scale
    pivots: List[Tuple[int, int]] = []
    r = 0
    for c in range(ncols):
        best, bestv = -1, tol
        for rr in range(r, len(m)):
            v = abs(complex(m[rr][c]))
            if v > bestv:
                best, bestv = rr, v
        if best < 0:
            continue
        m[r], m[best] = m[best], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for rr in range(len(m)):
            if rr != r and abs(complex(m[rr][c])) > 0:
                f = m[rr][c]
                m[rr] = [x - f * y for x, y in zip(m[rr], m[r])]
        pivots.append((r, c))
        r += 1
        if r == len(m):
            break
    pivot_cols = {c for _, c in pivots}
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        v = [ctx.zero] * ncols
        v[f] = ctx.one
        for pr, pc in pivots:
            v[pc] = -m[pr][f]
        basis.append(v)
    return basis


def _bilinear(a: Sequence[Any], b: Sequence[Any]) -> Any:
    return sum(x * y for x, y in zip(a, b))


def _hermitian(ctx: QContext, a: Sequence[Any], b: Sequence[Any]) -> Any:
    return sum(ctx.mp.conj(x) * y for x, y in zip(a, b))


@dataclass
class Channel:
    """One fusion channel: a coupling-coefficient table for a target module.

    ``tables[n]`` holds the expansion of the n-th orthonormal state of the
    target module over the pair basis of its weight.  ``parity`` is the slot
    swap parity (+1 or -1) when both factors coincide, ``None`` otherwise.
    ``residual`` is the largest inconsistency of the over-determined descent.
    """

    j1: Weight
    j2: Weight
    j: Weight
    alpha: int
    parity: Optional[int]
    space: _ProductSpace = field(repr=False)
    target: Irrep = field(repr=False)
    tables: Dict[int, List[Any]] = field(repr=False)
    residual: float = 0.0

    def top_vector(self) -> List[Any]:
        return self.tables[0]

    def coefficient(self, state1: Tuple[Weight, int], state2: Tuple[Weight, int], state: Tuple[Weight, int]) -> Any:
        """Coupling coefficient <j1 state1; j2 state2 | j state, channel>."""
        n = self.target.index[(tuple(state[0]), state[1])]
        basis = self.space.basis(self.target.weight_of(n))
        p1 = self.space.rep1.index[(tuple(state1[0]), state1[1])]
        p2 = self.space.rep2.index[(tuple(state2[0]), state2[1])]
        vec = self.tables[n]
        try:
            return vec[basis.index((p1, p2))]
        except ValueError:
            return self.space.ctx.zero


@dataclass
class Decomposition:
    """All fusion channels of one ordered product at one level."""

    ctx: QContext
    alg: AlgebraSpec
    level: int
    j1: Weight
    j2: Weight
    channels: Dict[Weight, List[Channel]]

    def fusion(self) -> Dict[Weight, int]:
        return {j: len(chs) for j, chs in self.channels.items() if chs}

    def channel(self, j: Weight, alpha: int = 0) -> Channel:
        return self.channels[tuple(j)][alpha]


def decompose(ctx: QContext, alg: AlgebraSpec, level: int, j1: Sequence[int], j2: Sequence[int]) -> Decomposition:
    """Decompose the product of two admissible modules at the given level."""
    j1, j2 = tuple(j1), tuple(j2)
    key = (ctx.key(), alg.name, level, j1, j2)
    dec = _DECOMPS.get(key)
    if dec is not None:
        return dec
    rep1 = module(ctx, alg, j1)
    rep2 = module(ctx, alg, j2)
    space = _ProductSpace(ctx, rep1, rep2)
    sampler = _BranchSampler(ctx, alg, j1, j2) if ctx.mode == "root" and ctx.arc == 1 else None
    channels: Dict[Weight, List[Channel]] = {}
    for j in admissible_weights(alg, level):
        vectors = _channel_vectors(space, j)
        if sampler is not None and vectors:
            vectors = sampler.corrected(j, vectors)
        built = []
        for alpha, (vec, parity) in enumerate(vectors):
            tables, residual = _descend(space, module(ctx, alg, j), vec)
            built.append(
                Channel(
                    j1=j1, j2=j2, j=j, alpha=alpha, parity=parity,
                    space=space, target=module(ctx, alg, j),
                    tables=tables, residual=residual,
                )
            )
        channels[j] = built
    dec = Decomposition(ctx=ctx, alg=alg, level=level, j1=j1, j2=j2, channels=channels)
    _DECOMPS[key] = dec
    return dec


def _channel_vectors(space: _ProductSpace, j: Weight) -> List[Tuple[List[Any], Optional[int]]]:
    """Gauge-fixed highest-weight vectors of the surviving channels at j."""
    ctx = space.ctx
    raw = space.highest_weight_space(j)
    if not raw:
        return []
    if space.rep1 is space.rep2:
        directions = _split_self_product(space, j, raw)
    else:
        directions = [(v, None) for v in _orthogonal_directions(ctx, raw)]
    out = []
    for vec, parity in directions:
        out.append((_anchor_normalize(ctx, vec), parity))
    return out


def _split_self_product(space: _ProductSpace, j: Weight, raw: List[List[Any]]) -> List[Tuple[List[Any], Optional[int]]]:
    """Channel directions for a self product, split by swap parity.

    Swap-conjugation fixed vectors carry two real symmetric forms: the
    restriction of the bilinear form and of the Hermitian form.  Solving the
    generalized symmetric eigenproblem of the pair gives the channel
    directions; the eigenvalue sign is the swap parity of the channel and a
    vanishing eigenvalue marks a direction removed by the truncation.
    """
    ctx = space.ctx
    mp = ctx.mp
    basis = space.basis(j)
    swap = [basis.index((p2, p1)) for (p1, p2) in basis.pairs]

    def t_image(v: List[Any]) -> List[Any]:
        return [mp.conj(v[swap[n]]) for n in range(len(v))]

    # real basis of the fixed space of the antilinear involution
    fixed: List[List[Any]] = []
    reduced: List[List[float]] = []
    iu = mp.mpc(0, 1)
    for b in raw:
        tb = t_image(b)
        for cand in ([x + y for x, y in zip(b, tb)], [iu * (x - y) for x, y in zip(b, tb)]):
            coords = []
            for x in cand:
                xc = complex(x)
                coords.extend((xc.real, xc.imag))
            for row in reduced:
                dot = sum(a * b2 for a, b2 in zip(coords, row))
                nrm = sum(a * a for a in row)
                coords = [a - dot / nrm * b2 for a, b2 in zip(coords, row)]
            if sum(a * a for a in coords) > _RANK_TOL:
                reduced.append(coords)
                fixed.append(cand)
            if len(fixed) == len(raw):
                break
        if len(fixed) == len(raw):
            break
    if len(fixed) < len(raw):
        raise ArithmeticError(f"could not span the swap-fixed space at {j}")

    n = len(fixed)
    g_b = mp.matrix(n, n)
    g_h = mp.matrix(n, n)
    for a in range(n):
        for b in range(n):
            vb = _bilinear(fixed[a], fixed[b])
            vh = _hermitian(ctx, fixed[a], fixed[b])
            if abs(complex(vb).imag) > 1e-15 * (1 + abs(complex(vb))) or abs(complex(vh).imag) > 1e-15 * (1 + abs(complex(vh))):
                raise ArithmeticError(f"forms on the swap-fixed space at {j} are not real")
            g_b[a, b] = mp.re(vb)
            g_h[a, b] = mp.re(vh)

    chol = mp.cholesky(g_h)
    inv_l = _lower_triangular_inverse(mp, chol, n)
    a_mat = inv_l * g_b * inv_l.T
    for r in range(n):
        for c in range(r):
            sym = (a_mat[r, c] + a_mat[c, r]) / 2
            a_mat[r, c] = sym
            a_mat[c, r] = sym
    eigvals, eigvecs = mp.eigsy(a_mat)
    pairs = []
    for idx in range(n):
        lam = float(eigvals[idx])
        coeff = inv_l.T * eigvecs[:, idx]
        vec = [sum(coeff[a] * fixed[a][p] for a in range(n)) for p in range(len(basis.pairs))]
        pairs.append((lam, vec))
    cutoff = _NULL_TOL * max(1.0, max(abs(l) for l, _ in pairs))
    survivors = [(l, v) for l, v in pairs if abs(l) > cutoff]
    survivors.sort(key=lambda lv: (0 if lv[0] > 0 else 1, -abs(lv[0])))
    return [(v, 1 if l > 0 else -1) for l, v in survivors]


def _lower_triangular_inverse(mp, l, n: int):
    inv = mp.matrix(n, n)
    for c in range(n):
        e = mp.matrix(n, 1)
        e[c] = mp.mpf(1)
        x = mp.L_solve(l, e)
        for r in range(n):
            inv[r, c] = x[r]
    return inv


def _orthogonal_directions(ctx: QContext, raw: List[List[Any]]) -> List[List[Any]]:
    """Pivoted orthogonalization against the bilinear form, skipping nulls."""
    remaining = [list(v) for v in raw]
    accepted: List[List[Any]] = []
    scale = max(1.0, max(abs(complex(_bilinear(v, v))) for v in remaining))
    while remaining:
        best, bestv = -1, _NULL_TOL * scale
        for idx, v in enumerate(remaining):
            nv = abs(complex(_bilinear(v, v)))
            if nv > bestv:
                best, bestv = idx, nv
        if best < 0:
            break
        v = remaining.pop(best)
        nrm = ctx.sqrt(_bilinear(v, v))
        v = [x / nrm for x in v]
        accepted.append(v)
        remaining = [
            [x - _bilinear(v, w) * y for x, y in zip(w, v)]
            for w in remaining
        ]
    return accepted


def _anchor_normalize(ctx: QContext, vec: List[Any]) -> List[Any]:
    """Scale so the first structurally nonzero coordinate is exactly one,
    then normalize by the principal square root of the bilinear norm."""
    top = max(abs(complex(x)) for x in vec)
    anchor = next(n for n, x in enumerate(vec) if abs(complex(x)) > _NULL_TOL * top)
    scaled = [x / vec[anchor] for x in vec]
    nrm = _bilinear(scaled, scaled)
    root = ctx.sqrt(nrm)
    return [x / root for x in scaled]


# Evaluation points used to follow the norm of a channel from q = 1 to the
# root of unity.  The denominator is a prime large enough that no balanced
# q-integer appearing in the module constructions vanishes at any sample.
_ARC_SAMPLES = (Fraction(2, 11), Fraction(5, 11), Fraction(8, 11), Fraction(10, 11))
_ARC_PRECISION = 64
_ARC_STEP_LIMIT = 1.2  # radians; a larger phase jump between samples bisects
_ARC_MIN_GAP = Fraction(1, 512)

_ARC_CONTEXTS: Dict[tuple, QContext] = {}


class _BranchSampler:
    """Continues the square-root branch of channel norms along the arc.

    ``_anchor_normalize`` divides by the principal square root of the
    bilinear norm of the anchor-scaled top vector.  The convention the
    tabulated coefficients follow is different: the square root is the one
    continued from the classical point q = 1, where the norm is a positive
    real.  The two differ exactly by the parity of the winding of the norm
    around zero along the arc, which this class measures by re-solving the
    top-weight problem at a few intermediate evaluation points and
    unwrapping the phase of the norm.

    Channels that cannot be followed through the samples (classical
    multiplicity above one for a mixed product, or coinciding swap parities
    for a self product) keep the principal branch; that is still a valid
    gauge, only not comparable entry-by-entry with printed tables.
    """

    def __init__(self, ctx: QContext, alg: AlgebraSpec, j1: Weight, j2: Weight):
        self.ctx = ctx
        self.alg = alg
        self.j1 = j1
        self.j2 = j2
        self._spaces: Dict[Fraction, _ProductSpace] = {}
        self._dirs: Dict[tuple, Optional[List[Tuple[List[Any], Optional[int]]]]] = {}

    def corrected(
        self, j: Weight, vectors: List[Tuple[List[Any], Optional[int]]]
    ) -> List[Tuple[List[Any], Optional[int]]]:
        out = []
        for vec, parity in vectors:
            if self._branch_sign(j, vec, parity, len(vectors)) < 0:
                vec = [-x for x in vec]
            out.append((vec, parity))
        return out

    def _branch_sign(self, j: Weight, vec: List[Any], parity: Optional[int], n_channels: int) -> int:
        top = max(abs(complex(x)) for x in vec)
        anchor = next(n for n, x in enumerate(vec) if abs(complex(x)) > _NULL_TOL * top)
        if sum(1 for x in vec if abs(complex(x)) > 1e-25 * top) == 1:
            return 1  # single-pair support: the norm is constantly one
        if parity is None and n_channels > 1:
            return 1  # pivoted directions have no continuation to follow
        # the normalized anchor coordinate is 1/sqrt(norm) on the principal
        # branch, so the principal argument of the endpoint norm is recoverable
        end_phase = -2.0 * cmath.phase(complex(vec[anchor]))
        psi = self._walk(j, parity, anchor, end_phase)
        if psi is None:
            return 1
        winding = round((psi - end_phase) / (2 * math.pi))
        if abs(psi - end_phase - 2 * math.pi * winding) > 1e-6:
            raise ArithmeticError("branch continuation did not close on the endpoint norm")
        return -1 if winding % 2 else 1

    def _walk(self, j: Weight, parity: Optional[int], anchor: int, end_phase: float) -> Optional[float]:
        """Unwrapped phase of the norm at the endpoint, or None if untrackable."""
        pending = [Fraction(1)] + list(reversed(_ARC_SAMPLES))
        prev_t = Fraction(0)
        psi = 0.0
        while pending:
            t = pending[-1]
            phase = end_phase if t == 1 else self._phase_at(t, j, parity, anchor)
            if phase is None:
                return None
            step = math.remainder(phase - psi, 2 * math.pi)
            if abs(step) > _ARC_STEP_LIMIT:
                if t - prev_t <= _ARC_MIN_GAP:
                    raise ArithmeticError("branch continuation cannot resolve the phase path")
                pending.append((prev_t + t) / 2)
                continue
            psi += step
            prev_t = t
            pending.pop()
        return psi

    def _phase_at(self, t: Fraction, j: Weight, parity: Optional[int], anchor: int) -> Optional[float]:
        dirs = self._directions(t, j)
        if dirs is None:
            return None
        matches = [v for v, p in dirs if p == parity]
        if len(matches) != 1:
            return None
        w = matches[0]
        a = complex(w[anchor])
        h = sum(abs(complex(x)) ** 2 for x in w)
        if abs(a) ** 2 < 1e-18 * h:
            return None
        n2 = complex(_bilinear(w, w))
        if abs(n2) < 1e-10 * h:
            return None
        return math.remainder(cmath.phase(n2) - 2 * cmath.phase(a), 2 * math.pi)

    def _directions(self, t: Fraction, j: Weight):
        key = (t, j)
        if key in self._dirs:
            return self._dirs[key]
        space = self._space(t)
        raw = space.highest_weight_space(j)
        if not raw:
            dirs = None
        elif space.rep1 is space.rep2:
            try:
                dirs = _split_self_product(space, j, raw)
            except ArithmeticError:
                dirs = None
        else:
            dirs = [(raw[0], None)] if len(raw) == 1 else None
        self._dirs[key] = dirs
        return dirs

    def _space(self, t: Fraction) -> _ProductSpace:
        space = self._spaces.get(t)
        if space is None:
            ckey = (self.ctx.level, self.ctx.coxeter, self.ctx.root_denominator, self.ctx.orientation, t)
            sctx = _ARC_CONTEXTS.get(ckey)
            if sctx is None:
                sctx = QContext.arc_point(
                    self.ctx.level,
                    self.ctx.coxeter,
                    self.ctx.root_denominator,
                    t,
                    precision_bits=_ARC_PRECISION,
                    orientation=self.ctx.orientation,
                )
                _ARC_CONTEXTS[ckey] = sctx
            space = _ProductSpace(sctx, module(sctx, self.alg, self.j1), module(sctx, self.alg, self.j2))
            self._spaces[t] = space
        return space


def _descend(space: _ProductSpace, target: Irrep, top: List[Any]) -> Tuple[Dict[int, List[Any]], float]:
    """Propagate the top coupling vector through the whole target module."""
    ctx = space.ctx
    alg = space.alg
    tables: Dict[int, List[Any]] = {target.index[(target.hw, 0)]: list(top)}
    residual = 0.0
    for mu in target.system.weights[1:]:
        mult = target.system.mults[mu]
        rows: List[List[Any]] = []
        rhs: List[List[Any]] = []
        for i in range(alg.rank):
            up = tuple(m + a for m, a in zip(mu, alg.simple_root(i)))
            for b in range(target.system.mult(up)):
                up_idx = target.index[(up, b)]
                coeff_row = [
                    target.lower[i][target.index[(mu, a)]][up_idx] for a in range(mult)
                ]
                _, image = space.apply_lower(i, up, tables[up_idx])
                rows.append(coeff_row)
                rhs.append(image)
        sol, res = _solve_overdetermined(ctx, rows, rhs, mult)
        residual = max(residual, res)
        for a in range(mult):
            tables[target.index[(mu, a)]] = sol[a]
    return tables, residual


def _solve_overdetermined(
    ctx: QContext, rows: List[List[Any]], rhs: List[List[Any]], mult: int
) -> Tuple[List[List[Any]], float]:
    """Solve a stacked linear system row-greedily and report the residual.

    The scalar coefficient rows multiply ``mult`` unknown vectors; rows are
    accepted in order as long as they increase the rank, the resulting square
    system is solved exactly, and every remaining row is used as a
    consistency check.
    """
    scale = max(1.0, dense.max_abs(rows))
    chosen: List[int] = []
    work: List[Tuple[int, List[Any]]] = []  # (pivot column, reduced row)
    for idx, row in enumerate(rows):
        cand = list(row)
        for piv, w in work:
            f = cand[piv]
            cand = [x - f * y for x, y in zip(cand, w)]
        top = max(abs(complex(x)) for x in cand)
        if top < _RANK_TOL * scale:
            continue
        piv = max(range(mult), key=lambda n: abs(complex(cand[n])))
        inv = 1 / cand[piv]
        cand = [x * inv for x in cand]
        work = [
            (p, [x - w[piv] * y for x, y in zip(w, cand)]) if abs(complex(w[piv])) > 0 else (p, w)
            for p, w in work
        ]
        work.append((piv, cand))
        chosen.append(idx)
        if len(chosen) == mult:
            break
    if len(chosen) < mult:
        raise ArithmeticError("descent system is rank deficient")

    a = [[rows[idx][c] for c in range(mult)] for idx in chosen]
    b = [rhs[idx] for idx in chosen]
    sol = _gauss_solve(ctx, a, b)
    res = 0.0
    for idx, row in enumerate(rows):
        if idx in chosen:
            continue
        for p in range(len(rhs[idx])):
            lhs = sum(row[a2] * sol[a2][p] for a2 in range(mult))
            res = max(res, abs(complex(lhs - rhs[idx][p])))
    return sol, res


def _gauss_solve(ctx: QContext, a: List[List[Any]], b: List[List[Any]]) -> List[List[Any]]:
    n = len(a)
    m = [list(ra) + list(rb) for ra, rb in zip(a, b)]
    for c in range(n):
        piv = max(range(c, n), key=lambda r: abs(complex(m[r][c])))
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for r in range(n):
            if r != c and abs(complex(m[r][c])) > 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n:] for row in m]


def fusion_rules(ctx: QContext, alg: AlgebraSpec, level: int, j1: Sequence[int], j2: Sequence[int]) -> Dict[Weight, int]:
    """Multiplicities of all admissible channels in one product."""
    return decompose(ctx, alg, level, j1, j2).fusion()


def fusion_matrix(ctx: QContext, alg: AlgebraSpec, level: int, a: Sequence[int]) -> List[List[int]]:
    """Matrix N_a with entries N[b][c] counting channels of a x b at c."""
    labels = admissible_weights(alg, level)
    out = []
    for b in labels:
        rules = fusion_rules(ctx, alg, level, a, b)
        out.append([rules.get(c, 0) for c in labels])
    return out


def verify_channel(channel: Channel) -> float:
    """Largest violation of equivariance and orthonormality for a channel.

    Checks that applying any coproduct generator to a coupled state matches
    the action inside the target module, and that the coupled states are
    orthonormal under the bilinear form.
    """
    space = channel.space
    ctx = space.ctx
    target = channel.target
    alg = space.alg
    worst = channel.residual
    for n in range(target.dimension):
        mu = target.weight_of(n)
        vec = channel.tables[n]
        for i in range(alg.rank):
            down_w, image = space.apply_lower(i, mu, vec)
            expect = [ctx.zero] * len(space.basis(down_w).pairs)
            for n2 in range(target.dimension):
                if target.weight_of(n2) == down_w:
                    coeff = target.lower[i][n2][n]
                    if abs(complex(coeff)) > 0:
                        expect = [e + coeff * x for e, x in zip(expect, channel.tables[n2])]
            worst = max(worst, dense.max_abs_vec([a - b for a, b in zip(image, expect)]))
            up_w, image = space.apply_raise(i, mu, vec)
            expect = [ctx.zero] * len(space.basis(up_w).pairs)
            for n2 in range(target.dimension):
                if target.weight_of(n2) == up_w:
                    coeff = target.lower[i][n][n2]
                    if abs(complex(coeff)) > 0:
                        expect = [e + coeff * x for e, x in zip(expect, channel.tables[n2])]
            worst = max(worst, dense.max_abs_vec([a - b for a, b in zip(image, expect)]))
        for n2 in range(n + 1):
            if target.weight_of(n2) != mu:
                continue
            val = _bilinear(vec, channel.tables[n2])
            want = 1 if n2 == n else 0
            worst = max(worst, abs(complex(val) - want))
    return worst


def fit_relative_sign(values: List[Tuple[Any, Any]]) -> Tuple[int, float]:
    """Fit lhs = sign * rhs over matched pairs; return (sign, residual).

    The sign is read off the pair with the largest magnitude and the residual
    is the largest deviation over all pairs under that sign.
    """
    scale, sign = 0.0, 1
    for lhs, rhs in values:
        m = abs(complex(rhs))
        if m > scale:
            scale = m
            num = complex(lhs) / complex(rhs)
            sign = 1 if num.real >= 0 else -1
    worst = 0.0
    for lhs, rhs in values:
        worst = max(worst, abs(complex(lhs) - sign * complex(rhs)))
    return sign, worst


def _conjugate_state(alg: AlgebraSpec, state: Tuple[Weight, int]) -> Tuple[Weight, int]:
    return (conjugate_weight(alg, state[0]), state[1])


def _negated_state(alg: AlgebraSpec, state: Tuple[Weight, int]) -> Tuple[Weight, int]:
    return (tuple(-c for c in conjugate_weight(alg, state[0])), state[1])


def _conjugation_flip(rep: Irrep, state: Tuple[Weight, int]) -> bool:
    # The second state on a doubly degenerate self-paired weight (the
    # adjoint (0,0) pair) is odd under conjugation; every appearance
    # contributes one sign to the symmetry relations below.
    return state[1] == 1 and rep.system.mult(state[0]) > 1


def check_cg_symmetries(
    ctx: QContext,
    alg: AlgebraSpec,
    level: int,
    j1: Sequence[int],
    j2: Sequence[int],
    j: Sequence[int],
    alpha: int = 0,
) -> Dict[str, Any]:
    """Fit the sign exponents relating a coupling table to its partners.

    Three relations are checked, each fixing one exponent:

    * ``s1``: the table of the swapped product ``j2 x j1`` at q equals
      ``(-1)^s1`` times the original table at 1/q with the two source slots
      exchanged.
    * ``s2``: negating and conjugating every weight in the original table
      (the lowest-weight construction) equals ``(-1)^s2`` times the table
      at 1/q.
    * ``s3``: the table of the fully conjugated product at the same q
      equals ``(-1)^s3`` times the original table.

    States on a doubly degenerate self-paired weight carry an extra sign
    per appearance in the last two relations.  Returns the fitted
    exponents and the worst residual of each relation; exponents are
    meaningful only when the residuals are small.
    """
    j1, j2, j = tuple(j1), tuple(j2), tuple(j)
    inv_ctx = ctx.conjugate()
    base = decompose(ctx, alg, level, j1, j2).channel(j, alpha)
    swapped = decompose(ctx, alg, level, j2, j1).channel(j, alpha)
    inverted = decompose(inv_ctx, alg, level, j1, j2).channel(j, alpha)
    conjugated = decompose(
        ctx, alg, level, conjugate_weight(alg, j1), conjugate_weight(alg, j2)
    ).channel(conjugate_weight(alg, j), alpha)

    rep1, rep2, target = base.space.rep1, base.space.rep2, base.target
    swap_pairs: List[Tuple[Any, Any]] = []
    neg_pairs: List[Tuple[Any, Any]] = []
    conj_pairs: List[Tuple[Any, Any]] = []
    for st in target.states:
        for s1 in rep1.states:
            for s2 in rep2.states:
                if tuple(a + b for a, b in zip(s1[0], s2[0])) != st[0]:
                    continue
                value = base.coefficient(s1, s2, st)
                at_inverse = inverted.coefficient(s1, s2, st)
                swap_pairs.append((swapped.coefficient(s2, s1, st), at_inverse))
                flips = sum(
                    _conjugation_flip(rep, state)
                    for rep, state in ((rep1, s1), (rep2, s2), (target, st))
                )
                presign = -1 if flips % 2 else 1
                neg_pairs.append(
                    (
                        base.coefficient(
                            _negated_state(alg, s1),
                            _negated_state(alg, s2),
                            _negated_state(alg, st),
                        ),
                        presign * at_inverse,
                    )
                )
                conj_pairs.append(
                    (
                        conjugated.coefficient(
                            _conjugate_state(alg, s1),
                            _conjugate_state(alg, s2),
                            _conjugate_state(alg, st),
                        ),
                        presign * value,
                    )
                )

    report: Dict[str, Any] = {}
    residuals = []
    for name, pairs in (("s1", swap_pairs), ("s2", neg_pairs), ("s3", conj_pairs)):
        sign, residual = fit_relative_sign(pairs)
        report[name] = 0 if sign > 0 else 1
        residuals.append(residual)
    report["residuals"] = tuple(residuals)
    report["residual"] = max(residuals)
    return report
