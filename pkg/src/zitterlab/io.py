"""File writers: CSV tables, the joint-density matrix and JSON sidecars.

Floats are written with 17 significant digits so that reading a file back
reproduces the doubles bit for bit. Nothing here stamps the time, so an
identical run writes identical bytes.
"""
from __future__ import annotations

import csv
import hashlib
import json
import math
from pathlib import Path

import numpy as np


def fmt(x) -> str:
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(x, ".17g")


def write_csv(path, header, columns):
    """Write equal-length columns under ``header``."""
    columns = [np.asarray(c).ravel() for c in columns]
    lengths = {len(c) for c in columns}
    if len(lengths) > 1:
        raise ValueError(f"columns have different lengths: {sorted(lengths)}")
    path = Path(path)
    with path.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in zip(*columns):
            w.writerow([fmt(v) for v in row])
    return path


def write_rows(path, rows):
    """Write a list of dicts, columns in the key order of the first row."""
    if not rows:
        raise ValueError("no rows to write")
    header = list(rows[0])
    path = Path(path)
    with path.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([fmt(r[h]) if isinstance(r[h], (float, int, np.floating)) and not
                        isinstance(r[h], bool) else r[h] for h in header])
    return path


def read_csv(path):
    with Path(path).open() as fh:
        rows = list(csv.reader(fh))
    header, body = rows[0], rows[1:]
    data = np.array([[float(v) for v in r] for r in body]) if body else np.zeros((0, len(header)))
    return header, data


def write_series(path, series):
    t, v = series.as_arrays()
    return write_csv(path, ["t", series.label], [t, v])


def write_snapshot(path, field):
    v = field.values
    cols = [field.grid.x]
    cols += [v[i].real for i in range(4)]
    cols += [v[i].imag for i in range(4)]
    cols.append(field.density())
    header = ["x"] + [f"re_psi{i}" for i in range(1, 5)] + [f"im_psi{i}" for i in range(1, 5)]
    return write_csv(path, header + ["density"], cols)


def write_densities(path, d):
    return write_csv(path, ["x", "rho_e", "rho_p"], [d.grid.x, d.rho_e, d.rho_p])


def write_joint(path, joint, dx, dy=None):
    """Dense matrix with a one-line header ``nx ny dx dy``; row i is x_i."""
    joint = np.asarray(joint, dtype=float)
    dy = dx if dy is None else dy
    nx, ny = joint.shape
    path = Path(path)
    with path.open("w") as fh:
        fh.write(f"{nx} {ny} {fmt(dx)} {fmt(dy)}\n")
        for row in joint:
            fh.write(" ".join(fmt(v) for v in row) + "\n")
    return path


def read_joint(path):
    with Path(path).open() as fh:
        nx, ny, dx, dy = fh.readline().split()
        data = np.loadtxt(fh, ndmin=2)
    return data.reshape(int(nx), int(ny)), float(dx), float(dy)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, float) and not math.isfinite(obj):
        return str(obj)
    if hasattr(obj, "value") and not isinstance(obj, (int, float, str)):
        return obj.value
    return obj


def canonical_json(obj) -> str:
    return json.dumps(_jsonable(obj), sort_keys=True, separators=(",", ":"))


def content_hash(obj) -> str:
    """sha1 of the canonical JSON, framed the way git hashes a blob."""
    data = canonical_json(obj).encode()
    return hashlib.sha1(b"blob %d\0" % len(data) + data).hexdigest()


def write_json(path, obj):
    path = Path(path)
    path.write_text(json.dumps(_jsonable(obj), indent=2, sort_keys=True) + "\n")
    return path
