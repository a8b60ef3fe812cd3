"""Reading and writing algebra files.

The on-disk format is JSON with 1-based indices and rationals as
strings. Bracket entries are given only for i < j; product entries
carry no symmetry and may use any index pair. Emission is canonical:
entries sorted, rationals reduced, two-space indent, trailing newline,
so emitting what was parsed reproduces the bytes.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .errors import FileFormatError
from .lie import LieAlgebra
from .lr import Product

_RATIONAL = re.compile(r"^-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?$")

_TOP_KEYS = {"dim", "basis", "brackets", "product"}
_ENTRY_KEYS = {"i", "j", "v"}


def _fail(path: str, message: str) -> None:
    raise FileFormatError(f"{path}: {message}")


def _parse_rational(text: Any, path: str) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL.match(text):
        _fail(path, f"expected a rational string like '3' or '-1/2', got {text!r}")
    return Fraction(text)


def _parse_index(value: Any, dim: int, path: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        _fail(path, f"expected an integer, got {value!r}")
    if not 1 <= value <= dim:
        _fail(path, f"index {value} out of range 1..{dim}")
    return value - 1


def _parse_values(obj: Any, dim: int, path: str) -> dict[int, Fraction]:
    if not isinstance(obj, dict):
        _fail(path, "expected an object mapping indices to rationals")
    out: dict[int, Fraction] = {}
    for key, raw in obj.items():
        if not re.match(r"^[1-9][0-9]*$", key):
            _fail(f"{path}.{key}", "keys must be positive integers written as strings")
        k = int(key)
        if k > dim:
            _fail(f"{path}.{key}", f"index {k} out of range 1..{dim}")
        out[k - 1] = _parse_rational(raw, f"{path}.{key}")
    return out


def _parse_entries(
    obj: Any, dim: int, path: str, require_ordered: bool
) -> dict[tuple[int, int], dict[int, Fraction]]:
    if not isinstance(obj, list):
        _fail(path, "expected a list of entries")
    seen: set[tuple[int, int]] = set()
    out: dict[tuple[int, int], dict[int, Fraction]] = {}
    for pos, entry in enumerate(obj):
        here = f"{path}[{pos}]"
        if not isinstance(entry, dict):
            _fail(here, "expected an object with keys i, j, v")
        extra = set(entry) - _ENTRY_KEYS
        if extra:
            _fail(here, f"unknown keys {sorted(extra)}")
        missing = _ENTRY_KEYS - set(entry)
        if missing:
            _fail(here, f"missing keys {sorted(missing)}")
        i = _parse_index(entry["i"], dim, f"{here}.i")
        j = _parse_index(entry["j"], dim, f"{here}.j")
        if require_ordered and not i < j:
            _fail(here, f"bracket entries need i < j, got i={i + 1}, j={j + 1}")
        if (i, j) in seen:
            _fail(here, f"duplicate entry for i={i + 1}, j={j + 1}")
        seen.add((i, j))
        out[(i, j)] = _parse_values(entry["v"], dim, f"{here}.v")
    return out


def parse_data(obj: Any, source: str = "input") -> tuple[LieAlgebra, Product | None]:
    """Build an algebra (and product, when present) from decoded JSON."""
    if not isinstance(obj, dict):
        _fail(source, "top level must be an object")
    extra = set(obj) - _TOP_KEYS
    if extra:
        _fail(source, f"unknown keys {sorted(extra)}")
    if "dim" not in obj:
        _fail(source, "missing key 'dim'")
    dim = obj["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        _fail(f"{source}.dim", f"expected a positive integer, got {dim!r}")

    names = None
    if "basis" in obj:
        basis = obj["basis"]
        if (
            not isinstance(basis, list)
            or len(basis) != dim
            or not all(isinstance(s, str) and s for s in basis)
        ):
            _fail(f"{source}.basis", f"expected {dim} non-empty strings")
        names = tuple(basis)

    raw_brackets = obj.get("brackets", [])
    brackets = _parse_entries(raw_brackets, dim, f"{source}.brackets", require_ordered=True)
    algebra = LieAlgebra.from_brackets(dim, brackets, basis_names=names)

    product = None
    if "product" in obj:
        entries = _parse_entries(obj["product"], dim, f"{source}.product", require_ordered=False)
        product = Product.from_entries(dim, entries)
    return algebra, product


def parse_file(path: str) -> tuple[LieAlgebra, Product | None]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FileFormatError(f"{path}: {exc.strerror or exc}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(
            f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    return parse_data(obj, source=path)


def _entry_list(table, ordered_only: bool) -> list[dict[str, Any]]:
    dim = len(table)
    out = []
    for i in range(dim):
        for j in range(dim):
            if ordered_only and not i < j:
                continue
            values = {
                str(k + 1): str(table[i][j][k])
                for k in range(dim)
                if table[i][j][k]
            }
            if values:
                out.append({"i": i + 1, "j": j + 1, "v": values})
    return out


def format_algebra(algebra: LieAlgebra, product: Product | None = None) -> str:
    obj: dict[str, Any] = {"dim": algebra.dim}
    if algebra.basis_names is not None:
        obj["basis"] = list(algebra.basis_names)
    obj["brackets"] = _entry_list(algebra.brackets, ordered_only=True)
    if product is not None:
        obj["product"] = _entry_list(product.table, ordered_only=False)
    return json.dumps(obj, indent=2) + "\n"


def emit_file(path: str, algebra: LieAlgebra, product: Product | None = None) -> None:
    text = format_algebra(algebra, product)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
