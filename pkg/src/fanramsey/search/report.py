"""JSON reproduction logs for search runs."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Optional

from .rules import SearchResult


def emit_certificates(result: SearchResult, outdir: str | Path) -> dict[int, str]:
    """Write one sample coloring per non-empty level; returns ``k -> path``."""
    from ..certificates import write_certificate

    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    forbids = ", ".join(str(r) for r in result.spec.forbids)
    paths = {}
    for k, c in sorted(result.samples.items()):
        path = outdir / f"level_{k:02d}.txt"
        write_certificate(path, c, [f"sample survivor at level {k}", f"avoids {forbids}"])
        paths[k] = str(path)
    return paths


def search_report(result: SearchResult, cert_paths: Optional[dict[int, str]] = None) -> dict:
    cert_paths = cert_paths or {}
    return {
        "spec": result.spec.to_dict(),
        "levels": [
            {"k": k, "count": n, "sample_certificate_path": cert_paths.get(k)}
            for k, n in enumerate(result.counts) if k
        ],
        "exhausted": result.exhausted,
        "elapsed_seconds": round(result.elapsed, 3),
        "prune_rules_used": [str(p) for p in result.spec.prunes],
    }


def write_report(path: str | Path, report: dict) -> None:
    Path(path).write_text(json.dumps(report, indent=2) + "\n")
