"""Reference listings shipped with the package (see tools/make_golden.py)."""

from __future__ import annotations

import json
from importlib import resources

from .gt_basis import Basis


def golden_names() -> list[str]:
    root = resources.files("hodge_gt") / "golden"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load_golden(name: str) -> Basis:
    path = resources.files("hodge_gt") / "golden" / f"{name}.json"
    return Basis.from_json(json.loads(path.read_text()))
