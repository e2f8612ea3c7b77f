"""JSON encodings of the library's value types.

Rationals are written as strings ``"p/q"`` (or ``"p"``); integer JSON numbers
are accepted on input. Polynomials are ascending coefficient arrays, BiPolys
are arrays of such arrays indexed by x-degree, matrices are
``{"rows", "cols", "entries"}`` with row-major entries.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .cover_geometry import CoverData
from .exact_algebra import BiPoly, Poly, PolyMatrix
from .higgs_local import Alternating, HiggsGerm, InvariantTyped, Symmetric, classify
from .spectral_model import FixedPointMarker, SpectralGerm


class SchemaError(ValueError):
    """Malformed document; ``pointer`` is a JSON pointer to the bad field."""

    def __init__(self, pointer: str, message: str):
        self.pointer = pointer or "/"
        super().__init__(f"{self.pointer}: {message}")


def child(pointer: str, key) -> str:
    key = str(key).replace("~", "~0").replace("/", "~1")
    return f"{pointer}/{key}"


# ---- encoding

def rat_out(q) -> str:
    return str(Fraction(q))


def poly_out(p: Poly) -> list:
    return [rat_out(c) for c in p.coeffs]


def bipoly_out(p: BiPoly) -> list:
    return [poly_out(c) for c in p.coeffs]


def matrix_out(m: PolyMatrix) -> dict:
    return {"rows": m.rows, "cols": m.cols, "entries": [poly_out(e) for e in m.entries]}


def order_out(v):
    """Vanishing orders: integers, or the string ``"inf"``."""
    return "inf" if v == math.inf else int(v)


def fixed_out(v):
    if isinstance(v, FixedPointMarker):
        return str(v)
    return v


def germ_out(g: SpectralGerm) -> dict:
    return {
        "r": g.r,
        "sections": [poly_out(s) for s in g.sections],
        "chart": g.chart.value,
        "linearization": g.linearization.value,
    }


def structure_out(s) -> dict:
    if isinstance(s, Symmetric):
        return {"kind": "symmetric", "S": matrix_out(s.S)}
    if isinstance(s, Alternating):
        return {"kind": "alternating", "J": matrix_out(s.J)}
    return {"kind": "invariant", "k_p": s.k_p}


def higgs_out(h: HiggsGerm) -> dict:
    return {"r": h.r, "phi": matrix_out(h.phi), "structure": structure_out(h.structure)}


# ---- decoding

def _expect(cond: bool, pointer: str, message: str) -> None:
    if not cond:
        raise SchemaError(pointer, message)


def rat_in(value, pointer: str) -> Fraction:
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str) and "." not in value and "e" not in value.lower():
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise SchemaError(pointer, f"expected an integer or a 'p/q' string, got {value!r}")


def poly_in(value, pointer: str) -> Poly:
    if isinstance(value, (int, str)) and not isinstance(value, bool):
        return Poly([rat_in(value, pointer)])
    _expect(isinstance(value, list), pointer, "expected an array of coefficients")
    return Poly([rat_in(c, child(pointer, i)) for i, c in enumerate(value)])


def bipoly_in(value, pointer: str) -> BiPoly:
    _expect(isinstance(value, list), pointer, "expected an array of polynomials in t")
    return BiPoly([poly_in(c, child(pointer, i)) for i, c in enumerate(value)])


def int_in(value, pointer: str, minimum: int | None = None) -> int:
    _expect(isinstance(value, int) and not isinstance(value, bool), pointer, f"expected an integer, got {value!r}")
    if minimum is not None:
        _expect(value >= minimum, pointer, f"must be >= {minimum}")
    return value


def matrix_in(value, pointer: str) -> PolyMatrix:
    if isinstance(value, list):
        _expect(all(isinstance(r, list) for r in value), pointer, "expected an array of rows")
        rows = [[poly_in(e, child(child(pointer, i), j)) for j, e in enumerate(row)] for i, row in enumerate(value)]
        _expect(len({len(r) for r in rows}) <= 1, pointer, "rows have different lengths")
        return PolyMatrix.from_rows(rows)
    _expect(isinstance(value, dict), pointer, "expected {rows, cols, entries} or an array of rows")
    for key in ("rows", "cols", "entries"):
        _expect(key in value, child(pointer, key), "missing field")
    rows = int_in(value["rows"], child(pointer, "rows"), 0)
    cols = int_in(value["cols"], child(pointer, "cols"), 0)
    ents = value["entries"]
    _expect(isinstance(ents, list), child(pointer, "entries"), "expected an array")
    _expect(len(ents) == rows * cols, child(pointer, "entries"), f"expected {rows * cols} entries, got {len(ents)}")
    return PolyMatrix(rows, cols, [poly_in(e, child(child(pointer, "entries"), i)) for i, e in enumerate(ents)])


def cover_in(value, pointer: str) -> CoverData:
    _expect(isinstance(value, dict), pointer, "expected an object")
    g = int_in(value.get("g_Y"), child(pointer, "g_Y"), 0)
    n = int_in(value.get("n"), child(pointer, "n"), 0)
    etale = value.get("etale", n == 0)
    _expect(isinstance(etale, bool), child(pointer, "etale"), "expected a boolean")
    return CoverData(g, n, etale)


def _enum_in(value, pointer: str, allowed: tuple) -> str:
    _expect(isinstance(value, str) and value.lower() in allowed, pointer, f"expected one of {', '.join(allowed)}")
    return value.lower()


def germ_in(value, pointer: str) -> SpectralGerm:
    _expect(isinstance(value, dict), pointer, "expected an object")
    r = int_in(value.get("r"), child(pointer, "r"), 1)
    secs = value.get("sections")
    _expect(isinstance(secs, list), child(pointer, "sections"), "expected an array of polynomials")
    sections = [poly_in(s, child(child(pointer, "sections"), i)) for i, s in enumerate(secs)]
    chart = _enum_in(value.get("chart", "ramified"), child(pointer, "chart"), ("ramified", "ordinary"))
    lin = _enum_in(value.get("linearization", "positive"), child(pointer, "linearization"), ("positive", "negative"))
    return SpectralGerm(r, tuple(sections), chart, lin)


def structure_in(value, pointer: str):
    _expect(isinstance(value, dict), pointer, "expected an object")
    kind = _enum_in(value.get("kind"), child(pointer, "kind"), ("symmetric", "alternating", "invariant"))
    if kind == "symmetric":
        _expect("S" in value, child(pointer, "S"), "missing field")
        return Symmetric(matrix_in(value["S"], child(pointer, "S")))
    if kind == "alternating":
        _expect("J" in value, child(pointer, "J"), "missing field")
        return Alternating(matrix_in(value["J"], child(pointer, "J")))
    return InvariantTyped(int_in(value.get("k_p"), child(pointer, "k_p"), 0))


def higgs_in(value, pointer: str) -> HiggsGerm:
    _expect(isinstance(value, dict), pointer, "expected an object")
    phi = matrix_in(value.get("phi"), child(pointer, "phi"))
    if "r" in value:
        r = int_in(value["r"], child(pointer, "r"), 1)
        _expect(phi.rows == r and phi.cols == r, child(pointer, "phi"), f"expected a {r}x{r} matrix")
    structure = structure_in(value.get("structure"), child(pointer, "structure"))
    return classify(phi, structure)
