"""Flat-file formats: coefficient text, binary grids, 17-digit JSON and CSV."""

from __future__ import annotations

import csv
import io
import math
import re

import numpy as np

from .core import RudinShapiroPair, from_coefficients

_HEADER = re.compile(r"^RS k=(\d+) n=(\d+)$")


def fmt_float(x: float) -> str:
    """17 significant digits, enough to round-trip any binary64 value."""
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(x, ".17g")


# -- coefficient text ------------------------------------------------------


def format_coeffs(pair: RudinShapiroPair) -> str:
    def line(v):
        return " ".join("+1" if c > 0 else "-1" for c in v.tolist())

    return f"RS k={pair.k} n={pair.n}\n{line(pair.p)}\n{line(pair.q)}\n"


def parse_coeffs(text: str) -> RudinShapiroPair:
    lines = [ln.strip() for ln in text.strip().splitlines()]
    if len(lines) != 3:
        raise ValueError("expected a header line and two coefficient lines")
    m = _HEADER.match(lines[0])
    if not m:
        raise ValueError(f"bad header {lines[0]!r}")
    k, n = int(m.group(1)), int(m.group(2))
    if n != 1 << k:
        raise ValueError(f"header n={n} does not equal 2^{k}")
    vecs = []
    for ln in lines[1:]:
        toks = ln.split()
        bad = [t for t in toks if t not in ("+1", "-1")]
        if bad:
            raise ValueError(f"bad coefficient token {bad[0]!r}")
        vecs.append(np.array([1 if t == "+1" else -1 for t in toks], dtype=np.int8))
    return from_coefficients(k, vecs[0], vecs[1])


def write_coeffs(path, pair: RudinShapiroPair) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_coeffs(pair))


def read_coeffs(path) -> RudinShapiroPair:
    with open(path, encoding="ascii") as fh:
        return parse_coeffs(fh.read())


# -- binary grid -----------------------------------------------------------


def write_grid(path, grid) -> None:
    """Little-endian: uint64 N, then N complex128 values of P, then N of Q."""
    with open(path, "wb") as fh:
        fh.write(np.uint64(grid.N).astype("<u8").tobytes())
        fh.write(np.asarray(grid.p_vals, dtype="<c16").tobytes())
        fh.write(np.asarray(grid.q_vals, dtype="<c16").tobytes())


def read_grid(path) -> tuple[np.ndarray, np.ndarray]:
    raw = open(path, "rb").read()
    N = int(np.frombuffer(raw[:8], dtype="<u8")[0])
    body = np.frombuffer(raw[8:], dtype="<c16")
    if body.size != 2 * N:
        raise ValueError(f"grid file holds {body.size} values, expected {2 * N}")
    return body[:N].copy(), body[N:].copy()


# -- JSON / CSV with fixed float precision ---------------------------------


def dumps_json(obj, indent: int = 2) -> str:
    """json.dumps look-alike that writes every float with 17 significant digits."""

    def enc(o, level):
        pad = " " * (indent * (level + 1))
        end = " " * (indent * level)
        if isinstance(o, dict):
            if not o:
                return "{}"
            items = [f'{pad}"{k}": {enc(v, level + 1)}' for k, v in o.items()]
            return "{\n" + ",\n".join(items) + "\n" + end + "}"
        if isinstance(o, (list, tuple)):
            if not o:
                return "[]"
            if all(not isinstance(v, (dict, list, tuple)) for v in o):
                return "[" + ", ".join(enc(v, level + 1) for v in o) + "]"
            return "[\n" + ",\n".join(pad + enc(v, level + 1) for v in o) + "\n" + end + "]"
        if isinstance(o, (bool, np.bool_)):
            return "true" if o else "false"
        if o is None:
            return "null"
        if isinstance(o, (int, np.integer)):
            return str(int(o))
        if isinstance(o, (float, np.floating)):
            x = float(o)
            if not math.isfinite(x):
                # JSON has no infinities; keep them readable and parseable as strings
                return f'"{fmt_float(x)}"'
            return fmt_float(x)
        if isinstance(o, str):
            return '"' + o.replace("\\", "\\\\").replace('"', '\\"') + '"'
        raise TypeError(f"cannot serialise {type(o).__name__}")

    return enc(obj, 0) + "\n"


def dumps_csv(rows, columns) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        out = []
        for c in columns:
            v = row.get(c, "")
            if isinstance(v, (bool, np.bool_)):
                v = "true" if v else "false"
            elif isinstance(v, (float, np.floating)):
                v = fmt_float(v)
            out.append(v)
        w.writerow(out)
    return buf.getvalue()
