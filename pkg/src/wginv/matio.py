"""Canonical matrix file format and report serialization.

A matrix file is a JSON document:

    {"rows": 2, "cols": 3, "backend": "exact",
     "data": [[["1/2", "0"], ["-1", "3/4"], ["0", "0"]],
              [["0", "0"],   ["1", "0"],   ["0", "0"]]]}

Exact entries are ["re", "im"] strings holding reduced fractions; float
entries are [re, im] JSON numbers (Python serializes binary64 with
repr, so write-then-read is bit-identical).  Human-written files may
abbreviate an entry to a bare number or an "a+bi" string; canonical
output always uses the pair form.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .matrix import EXACT, FLOAT, Matrix
from .scalars import GaussianRational, parse_gaussian


def _entry_to_obj(value, backend):
    if backend == EXACT:
        return [str(value.re), str(value.im)]
    return [value.real, value.imag]


def _entry_from_obj(obj, backend):
    if isinstance(obj, str):
        g = parse_gaussian(obj)
    elif isinstance(obj, (int, float)):
        g = GaussianRational(Fraction(obj))
    elif isinstance(obj, (list, tuple)) and len(obj) == 2:
        re, im = obj
        re = Fraction(re) if isinstance(re, str) else Fraction(re)
        im = Fraction(im) if isinstance(im, str) else Fraction(im)
        g = GaussianRational(re, im)
    else:
        raise ValueError(f"bad matrix entry {obj!r}")
    if backend == FLOAT:
        return complex(g)
    return g


def matrix_to_obj(m: Matrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "backend": m.backend,
        "data": [[_entry_to_obj(m[i, j], m.backend) for j in range(m.cols)]
                 for i in range(m.rows)],
    }


def matrix_from_obj(obj: dict) -> Matrix:
    backend = obj.get("backend", EXACT)
    if backend not in (EXACT, FLOAT):
        raise ValueError(f"unknown backend {backend!r}")
    rows, cols = int(obj["rows"]), int(obj["cols"])
    data = obj["data"]
    if len(data) != rows or any(len(r) != cols for r in data):
        raise ValueError("data does not match rows/cols")
    flat = [_entry_from_obj(x, backend) for row in data for x in row]
    return Matrix(rows, cols, flat, backend)


def write_matrix(path, m: Matrix) -> None:
    with open(path, "w") as fh:
        json.dump(matrix_to_obj(m), fh)
        fh.write("\n")


def read_matrix(path, backend: str | None = None) -> Matrix:
    """Read a matrix file; ``backend`` forces a conversion after parsing."""
    with open(path) as fh:
        m = matrix_from_obj(json.load(fh))
    if backend is None or backend == m.backend:
        return m
    return m.to_float() if backend == FLOAT else m.to_exact()


def kv_lines(prefix: str, value) -> list:
    """Flatten nested dicts/reports into 'key = value' text lines."""
    out = []
    if isinstance(value, dict):
        for k, v in value.items():
            out.extend(kv_lines(f"{prefix}.{k}" if prefix else str(k), v))
    elif isinstance(value, (list, tuple)):
        for i, v in enumerate(value):
            out.extend(kv_lines(f"{prefix}[{i}]", v))
    elif isinstance(value, bool):
        out.append(f"{prefix} = {'true' if value else 'false'}")
    elif isinstance(value, (int, float, str)):
        out.append(f"{prefix} = {value}")
    elif value is None:
        out.append(f"{prefix} = none")
    else:
        out.append(f"{prefix} = {value!r}")
    return out
