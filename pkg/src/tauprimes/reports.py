"""Report envelopes and JSON/CSV serialization.

Integers that can exceed 2^53 are emitted as decimal strings so payloads
survive JSON readers that parse numbers as doubles.  High-precision reals
are emitted as 30-significant-digit strings.  Key order and line endings
are fixed, so two runs with the same inputs produce byte-identical output
except for the generated_utc stamp.
"""

from __future__ import annotations

import csv
import io
import json
from datetime import datetime, timezone
from typing import Any

import mpmath

from . import __version__
from .bounds import BoundReport
from .congruence import Class23, Class23Tag
from .search import CensusReport, SearchHit, Verdict

REAL_DIGITS = 30

CSV_COLUMNS = ("p", "k", "exponent", "value", "residue23", "class23", "witness_a", "witness_b", "verdict")


def _real(v) -> str:
    return mpmath.nstr(v, REAL_DIGITS)


def envelope(command: str, params: dict[str, Any], payload: dict[str, Any]) -> dict[str, Any]:
    return {
        "command": command,
        "params": params,
        "tool_version": __version__,
        "generated_utc": datetime.now(timezone.utc).isoformat(),
        "payload": payload,
    }


def to_json(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2) + "\n"


def class23_to_dict(cls: Class23) -> dict[str, Any]:
    return {
        "tag": cls.tag.value,
        "witness": list(cls.witness) if cls.witness is not None else None,
    }


def class23_from_dict(d: dict[str, Any]) -> Class23:
    witness = d.get("witness")
    return Class23(Class23Tag(d["tag"]), tuple(witness) if witness is not None else None)


def hit_to_dict(hit: SearchHit) -> dict[str, Any]:
    return {
        "p": hit.p,
        "k": hit.k,
        "exponent": 2 * hit.k,
        "value": str(hit.value),
        "residue23": hit.residue23,
        "class23": class23_to_dict(hit.class23),
        "verdict": hit.verdict.value,
    }


def hit_from_dict(d: dict[str, Any]) -> SearchHit:
    return SearchHit(
        p=int(d["p"]),
        k=int(d["k"]),
        value=int(d["value"]),
        residue23=int(d["residue23"]),
        class23=class23_from_dict(d["class23"]),
        verdict=Verdict(d["verdict"]),
    )


def hits_to_csv(hits: list[SearchHit]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for hit in hits:
        a, b = hit.class23.witness if hit.class23.witness is not None else ("", "")
        writer.writerow(
            (hit.p, hit.k, 2 * hit.k, hit.value, hit.residue23, hit.class23.tag.value, a, b, hit.verdict.value)
        )
    return buf.getvalue()


def census_to_dict(report: CensusReport) -> dict[str, Any]:
    return {
        "n_cap": str(report.n_cap),
        "total": report.total,
        "counts": {str(r): report.counts[r] for r in sorted(report.counts)},
        "excluded_class_hits": [hit_to_dict(h) for h in report.excluded_class_hits],
        "footnote_anomalies": [hit_to_dict(h) for h in report.footnote_anomalies],
        "note": report.note,
    }


def bound_report_to_dict(report: BoundReport) -> dict[str, Any]:
    return {
        "N": str(report.n),
        "k_lo": report.k_lo,
        "k_hi": _real(report.k_hi),
        "per_k_bound": {str(k): _real(v) for k, v in report.per_k_bound.items()},
        "attainable_ceiling": _real(report.attainable_ceiling),
        "progression_floor": _real(report.progression_floor),
        "bracket": [_real(report.bracket[0]), _real(report.bracket[1])],
        "density": str(report.density),
        "sqrt_sample_ceiling": _real(report.sqrt_sample_ceiling),
        "census_sample_ceiling": _real(report.census_sample_ceiling),
        "caveats": list(report.caveats),
    }
