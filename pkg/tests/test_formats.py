import json
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from rudin_shapiro.circle import eval_grid
from rudin_shapiro.core import generate
from rudin_shapiro.formats import (
    dumps_csv,
    dumps_json,
    fmt_float,
    format_coeffs,
    parse_coeffs,
    read_coeffs,
    read_grid,
    write_coeffs,
    write_grid,
)


def test_coeff_text_k2():
    assert format_coeffs(generate(2)) == "RS k=2 n=4\n+1 +1 +1 -1\n+1 +1 -1 +1\n"


@pytest.mark.parametrize("k", range(0, 13))
def test_coeff_roundtrip(tmp_path, k):
    pair = generate(k)
    path = tmp_path / "c.txt"
    write_coeffs(path, pair)
    assert read_coeffs(path) == pair


@pytest.mark.parametrize(
    "text",
    [
        "RS k=2 n=5\n+1 +1 +1 -1\n+1 +1 -1 +1\n",
        "RS k=2\n+1 +1 +1 -1\n+1 +1 -1 +1\n",
        "RS k=2 n=4\n+1 +1 +1 0\n+1 +1 -1 +1\n",
        "RS k=2 n=4\n+1 +1 +1\n+1 +1 -1 +1\n",
        "RS k=2 n=4\n+1 +1 +1 -1\n",
    ],
)
def test_coeff_parse_errors(text):
    with pytest.raises(ValueError):
        parse_coeffs(text)


def test_grid_binary_layout(tmp_path):
    grid = eval_grid(generate(3), 64)
    path = tmp_path / "g.bin"
    write_grid(path, grid)
    raw = path.read_bytes()
    assert len(raw) == 8 + 2 * 64 * 16
    assert int.from_bytes(raw[:8], "little") == 64
    assert np.frombuffer(raw[8:24], dtype="<f8").tolist() == [grid.p_vals[0].real, grid.p_vals[0].imag]
    p, q = read_grid(path)
    assert np.array_equal(p, grid.p_vals) and np.array_equal(q, grid.q_vals)


def test_grid_truncated(tmp_path):
    path = tmp_path / "g.bin"
    write_grid(path, eval_grid(generate(2), 32))
    path.write_bytes(path.read_bytes()[:-16])
    with pytest.raises(ValueError):
        read_grid(path)


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_float_roundtrip(x):
    assert float(fmt_float(x)) == x


def test_json_shape():
    obj = {"a": 0.1, "b": [1, 2.5], "c": True, "d": None, "e": -math.inf, "f": []}
    text = dumps_json(obj)
    back = json.loads(text)
    assert back == {"a": 0.1, "b": [1, 2.5], "c": True, "d": None, "e": "-inf", "f": []}
    assert "0.10000000000000001" in text


def test_csv():
    text = dumps_csv([{"x": 1, "y": 1 / 3, "ok": False}], ["x", "y", "ok", "missing"])
    assert text == "x,y,ok,missing\n1,0.33333333333333331,false,\n"
