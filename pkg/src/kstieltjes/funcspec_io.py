"""Reading and writing function specification files.

A function spec is a JSON document describing a piecewise-polynomial
function:

.. code-block:: json

    {
      "domain": [0.0, 1.0],
      "codomain": {"kind": "vector", "dim": 1},
      "pieces": [
        {"interval": [0.0, 0.5], "coeffs": [[0.0]]},
        {"interval": [0.5, 1.0], "coeffs": [[1.0]]}
      ],
      "nodes": [{"t": 0.5, "value": [1.0]}]
    }

``coeffs`` is indexed ``[component][power]`` for vector functions and
``[row][column][power]`` for operator functions.  Piece intervals must
tile the domain; every ``nodes`` entry must sit on a piece boundary.
Grid points without an explicit node default to continuity (the value of
the polynomial to the right; to the left at ``b``).  Numbers are decimal
text parsed once into IEEE doubles, and serialisation uses shortest
round-trip formatting, so load/save/load is the identity.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from . import _poly
from .errors import FunctionSpecError
from .piecewise import PiecewiseFunction


def _require(condition: bool, message: str):
    if not condition:
        raise FunctionSpecError(message)


def function_from_dict(doc: dict) -> PiecewiseFunction:
    _require(isinstance(doc, dict), "top level must be a JSON object")
    for key in ("domain", "codomain", "pieces"):
        _require(key in doc, f"missing required key {key!r}")
    domain = doc["domain"]
    _require(isinstance(domain, list) and len(domain) == 2,
             "'domain' must be [a, b]")
    a, b = float(domain[0]), float(domain[1])
    _require(a < b, "'domain' must satisfy a < b")

    codomain = doc["codomain"]
    _require(isinstance(codomain, dict) and "kind" in codomain and "dim" in codomain,
             "'codomain' must carry 'kind' and 'dim'")
    kind = codomain["kind"]
    _require(kind in ("vector", "operator"), f"unknown codomain kind {kind!r}")
    dim = int(codomain["dim"])
    _require(dim >= 1, "'dim' must be at least 1")
    vshape = (dim,) if kind == "vector" else (dim, dim)

    pieces = doc["pieces"]
    _require(isinstance(pieces, list) and pieces, "'pieces' must be a nonempty list")
    grid = [a]
    coeffs = []
    max_degree = 0
    for idx, piece in enumerate(pieces):
        _require(isinstance(piece, dict) and "interval" in piece and "coeffs" in piece,
                 f"piece {idx} needs 'interval' and 'coeffs'")
        lo, hi = (float(x) for x in piece["interval"])
        _require(lo == grid[-1],
                 f"piece {idx} starts at {lo}, expected {grid[-1]} (pieces must tile the domain)")
        _require(hi > lo, f"piece {idx} has nonpositive width")
        grid.append(hi)
        try:
            raw = np.asarray(piece["coeffs"], dtype=float)
        except (TypeError, ValueError) as exc:
            raise FunctionSpecError(f"piece {idx}: ragged or non-numeric coeffs") from exc
        _require(raw.ndim == len(vshape) + 1 and raw.shape[:len(vshape)] == vshape,
                 f"piece {idx}: coeffs shape {raw.shape} does not match "
                 f"{kind} of dimension {dim}")
        c = np.moveaxis(raw, -1, 0)  # [..., power] -> [power, ...]
        max_degree = max(max_degree, c.shape[0] - 1)
        coeffs.append(c)
    _require(grid[-1] == b, f"pieces end at {grid[-1]}, expected {b}")

    # default nodes: continuity against the right piece (left piece at b)
    nodes = np.empty((len(grid),) + vshape)
    for k, t in enumerate(grid):
        ref = coeffs[k] if k < len(coeffs) else coeffs[-1]
        nodes[k] = _poly.polyval(ref, t)
    position = {t: k for k, t in enumerate(grid)}
    for idx, entry in enumerate(doc.get("nodes", [])):
        _require(isinstance(entry, dict) and "t" in entry and "value" in entry,
                 f"node {idx} needs 't' and 'value'")
        t = float(entry["t"])
        _require(t in position,
                 f"node {idx}: t={t} is not a grid point of the pieces")
        try:
            value = np.asarray(entry["value"], dtype=float)
        except (TypeError, ValueError) as exc:
            raise FunctionSpecError(f"node {idx}: non-numeric value") from exc
        _require(value.shape == vshape,
                 f"node {idx}: value shape {value.shape} does not match {vshape}")
        nodes[position[t]] = value
    try:
        return PiecewiseFunction(grid, coeffs, nodes,
                                 degree_cap=max(8, max_degree))
    except ValueError as exc:
        raise FunctionSpecError(str(exc)) from exc


def digest(path) -> str:
    """Short content digest of a spec file, echoed into run reports."""
    import hashlib

    return hashlib.sha256(Path(path).read_bytes()).hexdigest()[:16]


def function_to_dict(f: PiecewiseFunction) -> dict:
    pieces = []
    for u, v, c in f.piece_spans():
        pieces.append({"interval": [u, v],
                       "coeffs": np.moveaxis(c, 0, -1).tolist()})
    nodes = [{"t": float(t), "value": f.nodes[k].tolist()}
             for k, t in enumerate(f.grid)]
    return {"domain": [f.a, f.b],
            "codomain": {"kind": f.kind, "dim": f.dim},
            "pieces": pieces,
            "nodes": nodes}


def load_function(path) -> PiecewiseFunction:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FunctionSpecError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FunctionSpecError(f"{path}: invalid JSON ({exc})") from exc
    return function_from_dict(doc)


def save_function(f: PiecewiseFunction, path):
    Path(path).write_text(json.dumps(function_to_dict(f), indent=2) + "\n",
                          encoding="utf-8")
