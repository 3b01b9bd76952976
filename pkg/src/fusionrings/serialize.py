"""JSON forms for all data types, canonical and deterministic.

Fusion rings: {"labels": [...], "dual": [...], "tensor": [[a,b,c,mult], ...]}
with sparse nonzero entries sorted, the unit at index 0, re-validated on read.
Modular data: {"ring": <fusionring or null>, "conductor": N, "dims": [...],
"twists": [...], "s": [[i, j, cyc-or-null], ...]} storing the upper triangle
with null marking unknown entries; partial fusion tables and known entry
moduli ride along in optional fields so that partially-known data survives a
round trip.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .cyclotomic import cyc_from_json, cyc_to_json
from .fusionring import FusionRing, validate
from .modular import PartialModularData


class SchemaError(ValueError):
    """Input file does not match the expected schema."""

    def __init__(self, message, path="$"):
        super().__init__(f"{path}: {message}")
        self.path = path


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


# -- fusion rings ----------------------------------------------------------------


def ring_to_json(ring: FusionRing):
    entries = sorted([a, b, c, m] for (a, b, c), m in ring.tensor.items())
    return {
        "kind": "fusionring",
        "labels": list(ring.labels),
        "dual": list(ring.dual),
        "tensor": entries,
    }


def ring_from_json(obj) -> FusionRing:
    try:
        labels = [str(x) for x in obj["labels"]]
        dual = [int(x) for x in obj["dual"]]
        tensor = {}
        for idx, row in enumerate(obj["tensor"]):
            a, b, c, m = (int(v) for v in row)
            if m < 0:
                raise SchemaError("negative multiplicity", f"$.tensor[{idx}]")
            tensor[(a, b, c)] = m
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, SchemaError):
            raise
        raise SchemaError(f"malformed fusion ring: {exc}") from exc
    ring = FusionRing(labels, dual, tensor)
    report = validate(ring)
    if not report.passed:
        bad = report.failures()[0]
        raise SchemaError(f"ring fails validation: {bad.name}: {bad.witness}", "$.tensor")
    return ring


# -- modular data ------------------------------------------------------------------


def modular_to_json(md: PartialModularData):
    n = md.rank
    s_entries = []
    for i in range(n):
        for j in range(i, n):
            v = md.s_entry(i, j)
            s_entries.append([i, j, None if v is None else cyc_to_json(v)])
    out = {
        "kind": "modular",
        "labels": list(md.labels),
        "dual": [d if d is not None else None for d in md.dual],
        "conductor": md.conductor,
        "dims": [cyc_to_json(d) for d in md.dims],
        "twists": [cyc_to_json(t) for t in md.twists],
        "s": s_entries,
        "ring": ring_to_json(md.ring) if md.ring is not None else None,
    }
    if md.s_norm_sq:
        out["s_norm_sq"] = sorted(
            [i, j, [Fraction(v).numerator, Fraction(v).denominator]]
            for (i, j), v in md.s_norm_sq.items()
        )
    if md.ring is None and md.fusion:
        rows = []
        for (a, b), decomp in sorted(md.fusion.items()):
            for c, m in decomp:
                rows.append([a, b, c, m])
        out["fusion"] = rows
    return out


def modular_from_json(obj) -> PartialModularData:
    try:
        labels = [str(x) for x in obj["labels"]]
        dual = [None if d is None else int(d) for d in obj["dual"]]
        dims = [cyc_from_json(d) for d in obj["dims"]]
        twists = [cyc_from_json(t) for t in obj["twists"]]
        s = {}
        for i, j, v in obj["s"]:
            if v is not None:
                s[(int(i), int(j))] = cyc_from_json(v)
        s_norm_sq = {}
        for i, j, (p, q) in obj.get("s_norm_sq", []):
            s_norm_sq[(int(i), int(j))] = Fraction(int(p), int(q))
        ring = None
        fusion = None
        if obj.get("ring") is not None:
            ring = ring_from_json(obj["ring"])
            if list(ring.labels) != labels:
                raise SchemaError("ring labels disagree with modular labels", "$.ring")
        elif "fusion" in obj:
            fusion = {}
            for a, b, c, m in obj["fusion"]:
                fusion.setdefault((int(a), int(b)), []).append((int(c), int(m)))
            fusion = {k: tuple(sorted(v)) for k, v in fusion.items()}
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, SchemaError):
            raise
        raise SchemaError(f"malformed modular datum: {exc}") from exc
    return PartialModularData(labels, dual, dims, twists, s, fusion=fusion, ring=ring, s_norm_sq=s_norm_sq)


def load_any(obj):
    """Dispatch a parsed JSON object to the right reader by its kind field."""
    kind = obj.get("kind") if isinstance(obj, dict) else None
    if kind == "fusionring":
        return "ring", ring_from_json(obj)
    if kind == "modular":
        return "modular", modular_from_json(obj)
    raise SchemaError(f"unknown or missing kind {kind!r}", "$.kind")


# -- classification results ----------------------------------------------------------


def classification_to_json(result):
    return {
        "kind": "classification",
        "outcome": result.outcome,
        "n_or_k": result.n_or_k,
        "bijection": list(result.bijection) if result.bijection is not None else None,
        "trace": list(result.trace),
        "reason": result.reason,
    }
