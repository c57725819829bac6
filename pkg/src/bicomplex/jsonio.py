"""JSON interchange for matrices, Kraus sets and matrix maps.

Matrix files::

    {"rows": n, "cols": m, "repr": "idempotent" | "cartesian",
     "entries": [[[a, b, c, d], ...], ...]}

Each entry is four reals: ``[re l1, im l1, re l2, im l2]`` for ``idempotent``
or ``[x1, x2, x3, x4]`` (coefficients of ``1, i, j, k``) for ``cartesian``.
Output is always written in the idempotent representation. Vectors are
``n x 1`` matrix files.

Kraus sets: ``{"n": .., "m": .., "operators": [matrix, ...]}``.

Matrix maps: ``{"n": .., "m": .., "unit_images_1": [...], "unit_images_2": [...]}``
with ``n*n`` complex ``m x m`` matrices per component in row-major ``(j, k)``
order; a complex matrix is a list of rows of ``[re, im]`` pairs.
"""
from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any

import numpy as np

from .choi import KrausSet, MatrixMap, map_from_kraus
from .errors import ParseError
from .matrix import BicomplexMatrix, BicomplexVector
from .scalar import BicomplexScalar

REPRS = ("idempotent", "cartesian")


def _real(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"{where}: expected a number, got {value!r}")
    if not math.isfinite(value):
        raise ParseError(f"{where}: non-finite value")
    return float(value)


def _int_field(obj: dict, key: str) -> int:
    value = obj.get(key)
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ParseError(f"field {key!r} must be a positive integer, got {value!r}")
    return value


def scalar_to_json(z: BicomplexScalar, repr: str = "idempotent") -> list[float]:
    if repr == "idempotent":
        return [z.l1.real, z.l1.imag, z.l2.real, z.l2.imag]
    if repr == "cartesian":
        return list(z.cartesian)
    raise ValueError(f"unknown repr {repr!r}")


def scalar_from_json(values, repr: str = "idempotent", where: str = "entry") -> BicomplexScalar:
    if not isinstance(values, list) or len(values) != 4:
        raise ParseError(f"{where}: expected a list of four numbers, got {values!r}")
    a, b, c, d = (_real(v, where) for v in values)
    if repr == "idempotent":
        return BicomplexScalar(complex(a, b), complex(c, d))
    if repr == "cartesian":
        return BicomplexScalar.from_cartesian(a, b, c, d)
    raise ParseError(f"unknown repr {repr!r}")


def matrix_from_json(obj: Any) -> BicomplexMatrix:
    if not isinstance(obj, dict):
        raise ParseError("matrix must be a JSON object")
    rows, cols = _int_field(obj, "rows"), _int_field(obj, "cols")
    repr = obj.get("repr", "idempotent")
    if repr not in REPRS:
        raise ParseError(f"repr must be one of {REPRS}, got {repr!r}")
    entries = obj.get("entries")
    if not isinstance(entries, list) or len(entries) != rows:
        raise ParseError(f"expected {rows} rows of entries")
    c1 = np.empty((rows, cols), dtype=np.complex128)
    c2 = np.empty((rows, cols), dtype=np.complex128)
    for r, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"row {r} must have {cols} entries")
        for c, val in enumerate(row):
            z = scalar_from_json(val, repr, where=f"entry ({r}, {c})")
            c1[r, c], c2[r, c] = z.l1, z.l2
    return BicomplexMatrix(c1, c2)


def matrix_to_json(a: BicomplexMatrix, repr: str = "idempotent") -> dict:
    return {
        "rows": a.rows,
        "cols": a.cols,
        "repr": repr,
        "entries": [[scalar_to_json(a[r, c], repr) for c in range(a.cols)] for r in range(a.rows)],
    }


def vector_from_json(obj: Any) -> BicomplexVector:
    a = matrix_from_json(obj)
    if a.cols != 1:
        raise ParseError(f"a vector must be an n x 1 matrix, got {a.shape}")
    return BicomplexVector(a.c1[:, 0], a.c2[:, 0])


def vector_to_json(x: BicomplexVector, repr: str = "idempotent") -> dict:
    return matrix_to_json(x.as_column(), repr)


def _complex_matrix_to_json(c: np.ndarray) -> list:
    return [[[v.real, v.imag] for v in row] for row in c]


def _complex_matrix_from_json(obj, m: int, where: str) -> np.ndarray:
    if not isinstance(obj, list) or len(obj) != m:
        raise ParseError(f"{where}: expected {m} rows")
    out = np.empty((m, m), dtype=np.complex128)
    for r, row in enumerate(obj):
        if not isinstance(row, list) or len(row) != m:
            raise ParseError(f"{where}: row {r} must have {m} entries")
        for c, pair in enumerate(row):
            if not isinstance(pair, list) or len(pair) != 2:
                raise ParseError(f"{where}: entry ({r}, {c}) must be [re, im]")
            out[r, c] = complex(_real(pair[0], where), _real(pair[1], where))
    return out


def kraus_to_json(k: KrausSet) -> dict:
    return {"n": k.n, "m": k.m, "operators": [matrix_to_json(v) for v in k.operators]}


def kraus_from_json(obj: Any) -> KrausSet:
    if not isinstance(obj, dict):
        raise ParseError("Kraus set must be a JSON object")
    n, m = _int_field(obj, "n"), _int_field(obj, "m")
    ops = obj.get("operators")
    if not isinstance(ops, list) or not ops:
        raise ParseError("operators must be a non-empty list")
    matrices = tuple(matrix_from_json(o) for o in ops)
    for v in matrices:
        if v.shape != (m, n):
            raise ParseError(f"Kraus operator of shape {v.shape}, expected {(m, n)}")
    return KrausSet(n, m, matrices)


def map_to_json(phi: MatrixMap) -> dict:
    out = {"n": phi.n, "m": phi.m}
    for name, images in (("unit_images_1", phi.unit_images_1), ("unit_images_2", phi.unit_images_2)):
        out[name] = [_complex_matrix_to_json(images[j, k]) for j in range(phi.n) for k in range(phi.n)]
    return out


def map_from_json(obj: Any) -> MatrixMap:
    """Parse a map file; Kraus-set files are accepted and converted."""
    if isinstance(obj, dict) and "operators" in obj:
        return map_from_kraus(kraus_from_json(obj))
    if not isinstance(obj, dict):
        raise ParseError("map must be a JSON object")
    n, m = _int_field(obj, "n"), _int_field(obj, "m")
    comps = []
    for name in ("unit_images_1", "unit_images_2"):
        images = obj.get(name)
        if not isinstance(images, list) or len(images) != n * n:
            raise ParseError(f"{name} must list {n * n} unit images")
        arr = np.stack([_complex_matrix_from_json(img, m, f"{name}[{i}]")
                        for i, img in enumerate(images)])
        comps.append(arr.reshape(n, n, m, m))
    return MatrixMap(n, m, *comps)


def read_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc


def load_matrix(path: str | Path) -> BicomplexMatrix:
    return matrix_from_json(read_json(path))


def save_matrix(a: BicomplexMatrix, path: str | Path) -> None:
    write_json(matrix_to_json(a), path)


def load_map(path: str | Path) -> MatrixMap:
    return map_from_json(read_json(path))


def write_json(obj: Any, path: str | Path | None = None) -> str:
    # Python's float repr is the shortest string that round-trips exactly.
    text = json.dumps(obj, indent=1)
    if path is not None:
        Path(path).write_text(text + "\n", encoding="utf-8")
    return text
