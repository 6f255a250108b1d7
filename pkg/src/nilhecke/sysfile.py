"""Loading Coxeter systems from JSON system files or by built-in name.

A system file looks like::

    {"name": "B2", "generators": ["s", "t"], "cartan": [[2, -1], [-2, 2]],
     "coxeter_matrix": [[1, 4], [4, 1]]}

``coxeter_matrix`` is optional; entries are integers or the string "inf".
"""
from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .coxeter import CoxeterSystem, new_system
from .errors import InputError


def builtin_names() -> list:
    files = resources.files("nilhecke").joinpath("systems").iterdir()
    names = [f.name[:-5] for f in files if f.name.endswith(".json")]
    return sorted(names, key=lambda n: (n.rstrip("0123456789"), len(n), n))


def system_from_dict(data: dict) -> CoxeterSystem:
    if not isinstance(data, dict):
        raise InputError("system file must contain a JSON object")
    for key in ("generators", "cartan"):
        if key not in data:
            raise InputError(f"system file is missing {key!r}")
    gens = data["generators"]
    cartan = data["cartan"]
    if not isinstance(gens, list) or not all(isinstance(g, str) and g for g in gens):
        raise InputError("'generators' must be a list of non-empty strings")
    if any(" " in g or "," in g for g in gens):
        raise InputError("generator names may not contain spaces or commas")
    if (
        not isinstance(cartan, list)
        or len(cartan) != len(gens)
        or not all(isinstance(row, list) and len(row) == len(gens) for row in cartan)
        or not all(isinstance(a, int) and not isinstance(a, bool) for row in cartan for a in row)
    ):
        raise InputError("'cartan' must be a square integer matrix matching the generators")
    cox = data.get("coxeter_matrix")
    if cox is not None:
        ok = isinstance(cox, list) and all(isinstance(row, list) for row in cox) and all(
            (isinstance(v, int) and not isinstance(v, bool) and v >= 1) or v == "inf"
            for row in cox for v in row
        )
        if not ok:
            raise InputError("'coxeter_matrix' entries must be integers >= 1 or \"inf\"")
    return new_system(cartan, cox, gens, str(data.get("name", "")))


def load_system(ref: str) -> CoxeterSystem:
    """Load from a file path, or from a built-in name such as ``A2`` or ``D4``."""
    path = Path(ref)
    if path.suffix == ".json" or path.exists():
        try:
            text = path.read_text()
        except OSError as exc:
            raise InputError(f"cannot read system file {ref!r}: {exc}") from None
    else:
        lookup = {n.lower(): n for n in builtin_names()}
        name = lookup.get(ref.lower())
        if name is None:
            raise InputError(f"unknown system {ref!r}; built-ins: {', '.join(builtin_names())}")
        text = resources.files("nilhecke").joinpath("systems", f"{name}.json").read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"system file is not valid JSON: {exc}") from None
    return system_from_dict(data)
