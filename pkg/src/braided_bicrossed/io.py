"""JSON import and export.

All scalars are integer exponents of ζ_N with N the top-level
``"conductor"``.  A dataset file looks like::

    {"format": "braided-bicrossed/1", "conductor": 3, "name": "...",
     "params": {...}, "matched_pair": {"F": {"mult": ...}, "G": {...},
     "act_l": ..., "act_r": ...}, "sigma": ..., "tau": ...,
     "q": optional, "realization": optional}

A realization stores the invariant factors of C, z as coordinate vectors
and χ by its values on the generators of C (exponents of ζ_N).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .cocycles import BicrossedDatum
from .errors import SchemaError
from .matched_pair import MatchedPair
from .realization import DiagonalRealization
from .smith import AbelianGroup

FORMAT = "braided-bicrossed/1"


@dataclass(eq=False)
class Dataset:
    datum: BicrossedDatum
    name: str = ""
    params: dict = field(default_factory=dict)
    q: np.ndarray | None = None
    realization: DiagonalRealization | None = None

    @property
    def conductor(self) -> int:
        return self.datum.conductor


def _require(data: dict, key: str, where: str):
    if not isinstance(data, dict) or key not in data:
        raise SchemaError(f"{where}: missing key '{key}'")
    return data[key]


def _int_array(value, where: str, ndim: int) -> np.ndarray:
    try:
        arr = np.array(value, dtype=np.int64)
    except (TypeError, ValueError, OverflowError) as exc:
        raise SchemaError(f"{where}: expected an integer array ({exc})") from None
    if arr.ndim != ndim:
        raise SchemaError(f"{where}: expected {ndim} dimensions, got {arr.ndim}")
    return arr


def realization_to_dict(dr: DiagonalRealization) -> dict:
    values = (dr.chi * dr.weights) % dr.conductor if dr.C.rank else dr.chi
    return {
        "conductor": dr.conductor,
        "C": list(dr.C.factors),
        "z": dr.z.tolist(),
        "chi_values": values.tolist(),
    }


def realization_from_dict(data: dict, conductor: int | None = None) -> DiagonalRealization:
    n = int(data.get("conductor", conductor or 0))
    if n < 1:
        raise SchemaError("realization: missing conductor")
    try:
        C = AbelianGroup(tuple(int(d) for d in _require(data, "C", "realization")))
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"realization: bad invariant factors ({exc})") from None
    z = _int_array(_require(data, "z", "realization"), "realization.z", 3)
    values = _int_array(_require(data, "chi_values", "realization"), "realization.chi_values", 3)
    if z.shape != values.shape or z.shape[2] != C.rank:
        raise SchemaError(f"realization: z and chi_values must both have shape (|G|, |F|, {C.rank})")
    chi = np.zeros_like(values)
    for i, d in enumerate(C.factors):
        if n % d:
            raise SchemaError(f"realization: invariant factor {d} does not divide the conductor {n}")
        step = n // d
        if np.any(values[..., i] % step):
            raise SchemaError(f"realization: χ values on generator {i} are not {d}-th roots of unity")
        chi[..., i] = (values[..., i] // step) % d
    try:
        return DiagonalRealization(C, n, z, chi)
    except ValueError as exc:
        raise SchemaError(f"realization: {exc}") from None


def dataset_to_dict(ds: Dataset) -> dict:
    out = {
        "format": FORMAT,
        "conductor": ds.conductor,
        "name": ds.name,
        "params": {k: (int(v) if isinstance(v, (int, np.integer)) else v) for k, v in ds.params.items()},
        "matched_pair": ds.datum.mp.to_dict(),
        "sigma": ds.datum.sigma.tolist(),
        "tau": ds.datum.tau.tolist(),
    }
    if ds.q is not None:
        out["q"] = np.asarray(ds.q).tolist()
    if ds.realization is not None:
        out["realization"] = realization_to_dict(ds.realization)
    return out


def matched_pair_from_dict(data: dict) -> MatchedPair:
    where = "matched_pair"
    for key in ("F", "G"):
        _require(_require(data, key, where), "mult", f"{where}.{key}")
    try:
        return MatchedPair.from_dict(data)
    except (TypeError, ValueError, KeyError, IndexError) as exc:
        raise SchemaError(f"{where}: {exc}") from None


def dataset_from_dict(data: dict) -> Dataset:
    if not isinstance(data, dict):
        raise SchemaError("top level must be a JSON object")
    fmt = data.get("format", FORMAT)
    if fmt != FORMAT:
        raise SchemaError(f"unsupported format '{fmt}'")
    n = _require(data, "conductor", "dataset")
    if not isinstance(n, int) or n < 1:
        raise SchemaError("dataset: conductor must be a positive integer")
    mp = matched_pair_from_dict(_require(data, "matched_pair", "dataset"))
    sigma = _int_array(_require(data, "sigma", "dataset"), "sigma", 3)
    tau = _int_array(_require(data, "tau", "dataset"), "tau", 3)
    try:
        datum = BicrossedDatum(mp, n, sigma, tau)
    except ValueError as exc:
        raise SchemaError(f"dataset: {exc}") from None
    q = None
    if "q" in data:
        q = _int_array(data["q"], "q", 4) % n
        if q.shape != (mp.nG, mp.nG, mp.nF, mp.nF):
            raise SchemaError(f"q must have shape {(mp.nG, mp.nG, mp.nF, mp.nF)}")
    dr = None
    if "realization" in data:
        dr = realization_from_dict(data["realization"], n)
        if dr.z.shape[:2] != (mp.nG, mp.nF):
            raise SchemaError("realization tables do not match |G| x |F|")
    return Dataset(datum, str(data.get("name", "")), dict(data.get("params", {})), q, dr)


def read_json(path: str | Path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def write_json(path: str | Path, obj: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=1)
        fh.write("\n")


def load_dataset(path: str | Path) -> Dataset:
    return dataset_from_dict(read_json(path))


def save_dataset(path: str | Path, ds: Dataset) -> None:
    write_json(path, dataset_to_dict(ds))


def load_matched_pair(path: str | Path) -> MatchedPair:
    """Accepts a bare matched-pair object or a full dataset."""
    data = read_json(path)
    if isinstance(data, dict) and "matched_pair" in data:
        data = data["matched_pair"]
    return matched_pair_from_dict(data)
