"""Serialization of a derived theory into a diffable JSON document.

Every numeric value is stored as a decimal string at the working precision
of the deriving context, so documents are language portable and stable under
re-serialization. Index order is recorded inline: an F block's rows are
labeled by the intermediate of (j1 j2) with vertex indices (alpha, beta),
its columns by the intermediate of (j2 j3) with (gamma, delta), and the
matrix is addressed row first. R values are listed per channel index.

A loaded document can be re-verified without redoing any derivation: the
polynomial identities (pentagon, both hexagons, orthogonality of F, modulus
of R, the dimension sum rule) are evaluated directly on the stored tables.
"""

from __future__ import annotations

import json
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .liealg import Weight, get_algebra
from .qarith import QContext
from .symbols import _SymbolStore, _pentagon_block, _hexagon_cell, f_tensor, r_symbols
from . import tqft

__all__ = [
    "SCHEMA_VERSION",
    "INDEX_ORDER_NOTE",
    "build_document",
    "dump_document",
    "load_document",
    "verify_document",
    "render_markdown",
    "context_from_document",
]

SCHEMA_VERSION = "1"

INDEX_ORDER_NOTE = (
    "f_symbols[..].matrix[r][c]: row r is (j12, alpha, beta) with alpha the "
    "vertex of j1 x j2 -> j12 and beta the vertex of j12 x j3 -> j; column c "
    "is (j23, gamma, delta) with gamma for j2 x j3 -> j23 and delta for "
    "j1 x j23 -> j. r_symbols[..].values[alpha] is the braiding eigenvalue "
    "of channel alpha of j1 x j2 -> j. Complex numbers are [re, im] decimal "
    "strings."
)


def _digits(ctx: QContext) -> int:
    return ctx.mp.dps


def _real_str(ctx: QContext, x) -> str:
    return ctx.mp.nstr(ctx.mp.mpf(x), _digits(ctx))


def _complex_pair(ctx: QContext, z) -> List[str]:
    z = ctx.mp.mpc(z)
    return [ctx.mp.nstr(z.real, _digits(ctx)), ctx.mp.nstr(z.imag, _digits(ctx))]


def _row_label_json(label) -> list:
    weight, alpha, beta = label
    return [list(weight), alpha, beta]


def build_document(theory: tqft.TheoryData, verify: bool = True) -> Dict[str, Any]:
    """Assemble the full machine-readable record of one derived theory."""
    ctx, alg, level = theory.ctx, theory.alg, theory.level
    labels = theory.labels

    label_rows = []
    for a in labels:
        label_rows.append({
            "weight": list(a),
            "conjugate": list(theory.conjugates[a]),
            "dim": _real_str(ctx, theory.dims[a]),
            "twist": _complex_pair(ctx, theory.twists[a]),
            "fb": _complex_pair(ctx, theory.fs_indicators[a]),
        })

    fusion_rows = []
    for a in labels:
        for b in labels:
            ordered = sorted(theory.fusion[a][b].items(),
                             key=lambda kv: alg.label_sort_key(kv[0]))
            for c, mult in ordered:
                fusion_rows.append([list(a), list(b), list(c), mult])

    f_rows = []
    r_rows = []
    for j1 in labels:
        for j2 in labels:
            channels = theory.fusion[j1][j2]
            for j in sorted(channels, key=alg.label_sort_key):
                values = r_symbols(ctx, alg, level, j1, j2, j)
                r_rows.append({
                    "j1": list(j1), "j2": list(j2), "j": list(j),
                    "values": [_complex_pair(ctx, v) for v in values],
                })
            for j3 in labels:
                targets = set()
                for j12 in channels:
                    targets.update(theory.fusion[j12][j3])
                for j in sorted(targets, key=alg.label_sort_key):
                    ften = f_tensor(ctx, alg, level, j1, j2, j3, j)
                    if not ften.rows or not ften.cols:
                        continue
                    f_rows.append({
                        "j1": list(j1), "j2": list(j2), "j3": list(j3), "j": list(j),
                        "rows": [_row_label_json(r) for r in ften.rows],
                        "cols": [_row_label_json(c) for c in ften.cols],
                        "matrix": [[_complex_pair(ctx, v) for v in line] for line in ften.matrix],
                    })

    modular = tqft.is_modular(theory)
    doc: Dict[str, Any] = {
        "schema": SCHEMA_VERSION,
        "index_order": INDEX_ORDER_NOTE,
        "context": {
            "algebra": alg.name,
            "level": level,
            "q_phase": {"numerator": ctx.orientation, "denominator": level + alg.coxeter},
            "precision_bits": ctx.precision_bits,
            "tolerance": ctx.tolerance_str,
            "decimal_digits": _digits(ctx),
            "restricted": len(labels) != len(tqft.admissible_weights(alg, level)),
        },
        "labels": label_rows,
        "fusion": fusion_rows,
        "total_dim": _real_str(ctx, theory.total_dim()),
        "central_charge": _real_str(ctx, tqft.central_charge(theory)),
        "modular": modular,
        "central_charge_advisory": not modular,
        "gauge": dict(theory.gauge),
        "f_symbols": f_rows,
        "r_symbols": r_rows,
    }
    if verify:
        doc["verification"] = verify_document(doc)
    return doc


def dump_document(doc: Dict[str, Any]) -> str:
    return json.dumps(doc, indent=1)


def load_document(path: str) -> Dict[str, Any]:
    with open(path, "r", encoding="utf-8") as handle:
        doc = json.load(handle)
    if doc.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported document schema: {doc.get('schema')!r}")
    return doc


def context_from_document(doc: Dict[str, Any]) -> Tuple[QContext, Any, int]:
    """Rebuild the deriving context, algebra and level of a document."""
    cx = doc["context"]
    alg = get_algebra(cx["algebra"])
    ctx = QContext.root_of_unity(
        level=cx["level"],
        coxeter=alg.coxeter,
        root_denominator=alg.root_denominator,
        precision_bits=cx["precision_bits"],
        tolerance=cx["tolerance"],
    )
    if cx["q_phase"]["numerator"] < 0:
        ctx = ctx.conjugate()
    return ctx, alg, cx["level"]


class _DocumentStore:
    """Read interface over a document's stored tables, shaped like the
    symbol store so the identity sweeps run unchanged."""

    def __init__(self, doc: Dict[str, Any]):
        self.labels = [tuple(row["weight"]) for row in doc["labels"]]
        self.dims = {tuple(row["weight"]): float(row["dim"]) for row in doc["labels"]}
        self.twists = {
            tuple(row["weight"]): complex(float(row["twist"][0]), float(row["twist"][1]))
            for row in doc["labels"]
        }
        self._fusion: Dict[tuple, Dict[Weight, int]] = {}
        for a, b, c, mult in doc["fusion"]:
            self._fusion.setdefault((tuple(a), tuple(b)), {})[tuple(c)] = mult
        self._f: Dict[tuple, Dict[tuple, Dict[tuple, complex]]] = {}
        for block in doc["f_symbols"]:
            key = (tuple(block["j1"]), tuple(block["j2"]), tuple(block["j3"]), tuple(block["j"]))
            rows = [(tuple(r[0]), r[1], r[2]) for r in block["rows"]]
            cols = [(tuple(c[0]), c[1], c[2]) for c in block["cols"]]
            table = {}
            for r, line in zip(rows, block["matrix"]):
                table[r] = {
                    c: complex(float(v[0]), float(v[1])) for c, v in zip(cols, line)
                }
            self._f[key] = table
        self._r: Dict[tuple, Tuple[complex, ...]] = {}
        for block in doc["r_symbols"]:
            key = (tuple(block["j1"]), tuple(block["j2"]), tuple(block["j"]))
            self._r[key] = tuple(
                complex(float(v[0]), float(v[1])) for v in block["values"]
            )

    def fusion(self, a: Weight, b: Weight) -> Dict[Weight, int]:
        return self._fusion.get((a, b), {})

    def f(self, j1: Weight, j2: Weight, j3: Weight, j: Weight):
        return self._f.get((j1, j2, j3, j), {})

    def r(self, j1: Weight, j2: Weight, j: Weight):
        return self._r[(j1, j2, j)]


def _f_orthogonality(store: _DocumentStore) -> Tuple[float, Optional[tuple]]:
    worst, instance = 0.0, None
    for key, table in store._f.items():
        rows = list(table)
        if not rows:
            continue
        cols = list(table[rows[0]])
        if len(rows) != len(cols):
            return float("inf"), key
        for i, ri in enumerate(rows):
            for k, rk in enumerate(rows):
                acc = sum(table[ri][c] * table[rk][c] for c in cols)
                dev = abs(acc - (1.0 if i == k else 0.0))
                if dev > worst:
                    worst, instance = dev, key
    return worst, instance


def _r_modulus(store: _DocumentStore) -> Tuple[float, Optional[tuple]]:
    worst, instance = 0.0, None
    for key, values in store._r.items():
        for v in values:
            dev = abs(abs(v) - 1.0)
            if dev > worst:
                worst, instance = dev, key
    return worst, instance


def _dim_rule(store: _DocumentStore) -> Tuple[float, Optional[tuple]]:
    worst, instance = 0.0, None
    for a in store.labels:
        for b in store.labels:
            total = sum(m * store.dims[c] for c, m in store.fusion(a, b).items())
            dev = abs(total - store.dims[a] * store.dims[b])
            if dev > worst:
                worst, instance = dev, (a, b)
    return worst, instance


def _pentagon_sweep(store: _DocumentStore) -> Tuple[float, Optional[tuple]]:
    worst, instance = 0.0, None
    for j1 in store.labels:
        for j2 in store.labels:
            for j3 in store.labels:
                for j4 in store.labels:
                    dev = _pentagon_block(store, j1, j2, j3, j4)
                    if dev > worst:
                        worst, instance = dev, (j1, j2, j3, j4)
    return worst, instance


def _hexagon_sweep(store: _DocumentStore, inverse: bool) -> Tuple[float, Optional[tuple]]:
    worst, instance = 0.0, None
    for j1 in store.labels:
        for j2 in store.labels:
            for j3 in store.labels:
                for j12, n12 in store.fusion(j1, j2).items():
                    for j13, n13 in store.fusion(j1, j3).items():
                        common = set(store.fusion(j12, j3)) & set(store.fusion(j13, j2))
                        for j in common:
                            dev = _hexagon_cell(store, j1, j2, j3, j, j12, j13, n12, n13, inverse)
                            if dev > worst:
                                worst, instance = dev, (j1, j2, j3, j)
    return worst, instance


def verify_document(doc: Dict[str, Any]) -> Dict[str, Any]:
    """Re-check the stored tables; returns per-identity worst residuals."""
    store = _DocumentStore(doc)
    checks = {}
    for name, (residual, instance) in {
        "pentagon": _pentagon_sweep(store),
        "hexagon": _hexagon_sweep(store, inverse=False),
        "hexagon_inverse": _hexagon_sweep(store, inverse=True),
        "f_orthogonality": _f_orthogonality(store),
        "r_modulus": _r_modulus(store),
        "dim_homomorphism": _dim_rule(store),
    }.items():
        checks[name] = {
            "residual": residual,
            "worst_instance": None if instance is None else repr(instance),
        }
    tolerance = float(doc["context"]["tolerance"])
    # identity sweeps run in double precision; a document written at a very
    # tight tolerance still counts as passing at the double-precision floor
    floor = max(tolerance, 1e-9)
    passed = all(c["residual"] < floor for c in checks.values())
    return {"tolerance": tolerance, "threshold": floor, "passed": passed, "checks": checks}


def render_markdown(doc: Dict[str, Any]) -> str:
    """Human-oriented rendering of a document."""
    cx = doc["context"]
    q = cx["q_phase"]
    out = []
    out.append(f"# {cx['algebra']} level {cx['level']}")
    out.append("")
    out.append(f"q = exp(2 pi i {q['numerator']}/{q['denominator']}), "
               f"{cx['precision_bits']}-bit arithmetic, tolerance {cx['tolerance']}.")
    if cx.get("restricted"):
        out.append("Label set restricted to a closed subsector.")
    out.append("")
    out.append("## Labels")
    out.append("")
    out.append("| weight | conjugate | dim | twist | fb |")
    out.append("| --- | --- | --- | --- | --- |")
    for row in doc["labels"]:
        twist = _fmt_pair(row["twist"])
        fb = _fmt_pair(row["fb"])
        out.append(f"| {tuple(row['weight'])} | {tuple(row['conjugate'])} | "
                   f"{_fmt_str(row['dim'])} | {twist} | {fb} |")
    out.append("")
    out.append(f"Total dimension D = {_fmt_str(doc['total_dim'])}; "
               f"central charge c = {_fmt_str(doc['central_charge'])} (mod 8)"
               + ("; modular" if doc["modular"] else "; not modular, c advisory") + ".")
    out.append("")
    out.append("## Fusion rules")
    out.append("")
    seen = {}
    for a, b, c, mult in doc["fusion"]:
        seen.setdefault((tuple(a), tuple(b)), []).append((tuple(c), mult))
    for (a, b), terms in seen.items():
        rhs = " + ".join(f"{m} x {c}" if m > 1 else f"{c}" for c, m in terms)
        out.append(f"- {a} x {b} = {rhs}")
    out.append("")
    out.append("## R symbols")
    out.append("")
    for block in doc["r_symbols"]:
        vals = ", ".join(_fmt_pair(v) for v in block["values"])
        out.append(f"- R[{tuple(block['j1'])}, {tuple(block['j2'])}; {tuple(block['j'])}] = {vals}")
    out.append("")
    out.append("## F symbols")
    out.append("")
    for block in doc["f_symbols"]:
        head = (f"F[{tuple(block['j1'])}, {tuple(block['j2'])}, "
                f"{tuple(block['j3'])}; {tuple(block['j'])}]")
        out.append(f"### {head}")
        out.append("")
        cols = " | ".join(_fmt_label(c) for c in block["cols"])
        out.append(f"| | {cols} |")
        out.append("| --- |" + " --- |" * len(block["cols"]))
        for r, line in zip(block["rows"], block["matrix"]):
            cells = " | ".join(_fmt_pair(v) for v in line)
            out.append(f"| {_fmt_label(r)} | {cells} |")
        out.append("")
    if "verification" in doc:
        ver = doc["verification"]
        out.append("## Verification")
        out.append("")
        out.append("| identity | worst residual | worst instance |")
        out.append("| --- | --- | --- |")
        for name, chk in ver["checks"].items():
            out.append(f"| {name} | {chk['residual']:.3e} | {chk['worst_instance']} |")
        out.append("")
        out.append(f"Threshold {ver['threshold']:.1e}: "
                   + ("PASS" if ver["passed"] else "FAIL"))
        out.append("")
    return "\n".join(out)


def _fmt_str(value: str, places: int = 8) -> str:
    return f"{float(value):.{places}g}"


def _fmt_pair(pair: Sequence[str], places: int = 8) -> str:
    re, im = float(pair[0]), float(pair[1])
    if abs(re) < 1e-12:
        re = 0.0
    if abs(im) < 1e-12:
        return f"{re:.{places}g}"
    if re == 0.0:
        return f"{im:.{places}g}i"
    return f"{re:.{places}g}{im:+.{places}g}i"


def _fmt_label(label: Sequence) -> str:
    weight, alpha, beta = label
    return f"{tuple(weight)}[{alpha},{beta}]"
