"""Portable on-disk caches for enumerated groups and character tables.

Files are keyed by (p, k, r, mode, flavor) and carry a format-version
field; anything that fails validation is recomputed.  The cache directory
comes from an explicit argument or the DL2_CACHE_DIR environment variable;
with neither set, everything stays in process memory only.
"""

from __future__ import annotations

import gzip
import json
import os
from pathlib import Path

import numpy as np

from .characters import CharacterTable, character_table
from .groups import ConjugacyData, MatrixGroup, make_group

GROUP_FORMAT = "dl2-group/1"
TABLE_FORMAT = "dl2-table/1"
ENV_VAR = "DL2_CACHE_DIR"


def resolve_cache_dir(explicit: str | None = None) -> Path | None:
    d = explicit or os.environ.get(ENV_VAR)
    if not d:
        return None
    path = Path(d)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _stem(p, k, r, mode, flavor) -> str:
    return f"p{p}k{k}r{r}-{mode}-{flavor}"


def group_cache_path(cache_dir: Path, p, k, r, mode, flavor) -> Path:
    return cache_dir / f"group-{_stem(p, k, r, mode, flavor)}.npz"


def table_cache_path(cache_dir: Path, p, k, r, mode, flavor) -> Path:
    return cache_dir / f"table-{_stem(p, k, r, mode, flavor)}.json.gz"


def save_group(group: MatrixGroup, cache_dir: Path):
    cd = group.conjugacy()
    R = group.ring
    meta = {
        "format": GROUP_FORMAT,
        "p": R.p,
        "k": R.k,
        "r": R.r,
        "mode": R.mode,
        "flavor": group.flavor,
        "order": group.order,
    }
    path = group_cache_path(cache_dir, R.p, R.k, R.r, R.mode, group.flavor)
    np.savez_compressed(
        path,
        meta=np.frombuffer(json.dumps(meta).encode(), dtype=np.uint8),
        codes=group.codes,
        class_of_codes=cd.class_of[group.codes],
        reps=cd.reps,
        sizes=cd.sizes,
    )
    return path


def load_group(p, k, r, mode, flavor, cache_dir: Path) -> MatrixGroup | None:
    path = group_cache_path(cache_dir, p, k, r, mode, flavor)
    if not path.exists():
        return None
    try:
        data = np.load(path)
        meta = json.loads(bytes(data["meta"]).decode())
        if meta.get("format") != GROUP_FORMAT:
            return None
        group = make_group(p, k, r, mode, flavor)
        if meta["order"] != group.order or not (data["codes"] == group.codes).all():
            return None
        if group._conj is None:
            group._conj = _conjugacy_from_cache(
                group, data["reps"], data["sizes"], data["class_of_codes"]
            )
        return group
    except Exception:
        return None


def _conjugacy_from_cache(group, reps, sizes, class_of_codes) -> ConjugacyData:
    cd = ConjugacyData.__new__(ConjugacyData)
    sp = group.space
    cd.reps = reps.astype(np.int64)
    cd.sizes = sizes.astype(np.int64)
    cd.n_classes = len(reps)
    class_of = np.full(sp.N, -1, dtype=np.int32)
    class_of[group.codes] = class_of_codes
    cd.class_of = class_of
    assert int(cd.sizes.sum()) == group.order
    order = np.argsort(class_of_codes, kind="stable")
    sorted_codes = group.codes[order]
    bounds = np.concatenate([[0], np.cumsum(cd.sizes)])
    cd.class_lists = [
        np.sort(sorted_codes[bounds[i] : bounds[i + 1]]) for i in range(cd.n_classes)
    ]
    cd.centralizer_orders = group.order // cd.sizes
    cd.inverse_class = class_of[sp.inv(cd.reps)].astype(np.int64)
    cd._group = group
    cd.rep_orders = np.array(
        [group.element_order(int(c)) for c in cd.reps], dtype=np.int64
    )
    e = 1
    from math import gcd

    for o in cd.rep_orders:
        e = e // gcd(e, int(o)) * int(o)
    cd.exponent = e
    return cd


def save_table(table: CharacterTable, cache_dir: Path):
    g = table.group
    R = g.ring
    payload = {
        "format": TABLE_FORMAT,
        "p": R.p,
        "k": R.k,
        "r": R.r,
        "mode": R.mode,
        "flavor": g.flavor,
        "exponent": table.exponent,
        "class_reps": [int(c) for c in table.conjugacy.reps],
        "degrees": [int(d) for d in table.degrees],
        "coeffs": table.coeffs.tolist(),
    }
    path = table_cache_path(cache_dir, R.p, R.k, R.r, R.mode, g.flavor)
    with gzip.open(path, "wt") as fh:
        json.dump(payload, fh)
    return path


def load_table(p, k, r, mode, flavor, cache_dir: Path) -> CharacterTable | None:
    path = table_cache_path(cache_dir, p, k, r, mode, flavor)
    if not path.exists():
        return None
    try:
        with gzip.open(path, "rt") as fh:
            payload = json.load(fh)
        if payload.get("format") != TABLE_FORMAT:
            return None
        group = make_group(p, k, r, mode, flavor)
        cd = group.conjugacy()
        if payload["class_reps"] != [int(c) for c in cd.reps]:
            return None
        coeffs = np.array(payload["coeffs"], dtype=np.int64)
        degrees = np.array(payload["degrees"], dtype=np.int64)
        return CharacterTable(group, parts=(coeffs, payload["exponent"], degrees))
    except Exception:
        return None


def cached_character_table(p, k, r, mode, flavor, cache_dir=None) -> CharacterTable:
    """Character table with optional disk persistence."""
    cdir = resolve_cache_dir(cache_dir)
    if cdir is not None:
        tab = load_table(p, k, r, mode, flavor, cdir)
        if tab is not None:
            return tab
    tab = character_table(make_group(p, k, r, mode, flavor))
    if cdir is not None:
        save_table(tab, cdir)
        save_group(tab.group, cdir)
    return tab
