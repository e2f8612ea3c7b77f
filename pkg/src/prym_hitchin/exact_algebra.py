"""Exact arithmetic for polynomials and polynomial matrices over the rationals.

Rationals are :class:`fractions.Fraction`. A :class:`Poly` is stored as a
tuple of integer numerators over one positive common denominator, reduced so
that equal polynomials have equal representations. Heavy matrix work
(characteristic polynomials, Pfaffians, products) clears denominators once and
runs on plain integer coefficient lists.

The variable of a :class:`Poly` is nominally ``t``, but nothing depends on the
name: fiber polynomials in ``x`` use the same class.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    NonSquareMatrix,
    NotAntisymmetric,
    NotASquare,
    OddDimension,
)

Rat = Fraction
INFINITE = math.inf
NEG_INFINITY = -math.inf


def as_rat(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact or boolean coefficient {value!r}")
    return Fraction(value)


def rat_to_str(q: Fraction) -> str:
    return str(q)


# --------------------------------------------------------------------------
# integer coefficient-list kernel

def _conv(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _add_into(acc: list[int], a: Sequence[int], sign: int = 1) -> None:
    if len(acc) < len(a):
        acc.extend([0] * (len(a) - len(acc)))
    if sign == 1:
        for i, ai in enumerate(a):
            acc[i] += ai
    else:
        for i, ai in enumerate(a):
            acc[i] -= ai


def _trim(nums: list[int]) -> list[int]:
    while nums and nums[-1] == 0:
        nums.pop()
    return nums


def _reduce(nums: list[int], den: int) -> tuple[tuple[int, ...], int]:
    _trim(nums)
    if not nums:
        return (), 1
    if den != 1:
        g = math.gcd(den, *nums)
        if g != 1:
            nums = [c // g for c in nums]
            den //= g
    return tuple(nums), den


class Poly:
    """Univariate polynomial with rational coefficients, ascending degree."""

    __slots__ = ("_num", "_den")

    def __init__(self, coeffs: Iterable = ()):
        fr = [as_rat(c) for c in coeffs]
        den = math.lcm(*(c.denominator for c in fr)) if fr else 1
        nums = [c.numerator * (den // c.denominator) for c in fr]
        self._num, self._den = _reduce(nums, den)

    @classmethod
    def _raw(cls, nums: Iterable[int], den: int = 1) -> "Poly":
        obj = object.__new__(cls)
        obj._num, obj._den = _reduce(list(nums), den)
        return obj

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([0] * k + [c])

    # ---- inspection

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        d = self._den
        return tuple(Fraction(c, d) for c in self._num)

    @property
    def degree(self) -> float | int:
        """Degree; ``-inf`` for the zero polynomial."""
        return len(self._num) - 1 if self._num else NEG_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self._num

    @property
    def is_constant(self) -> bool:
        return len(self._num) <= 1

    @property
    def leading(self) -> Fraction:
        if not self._num:
            return Fraction(0)
        return Fraction(self._num[-1], self._den)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self._num):
            return Fraction(self._num[k], self._den)
        return Fraction(0)

    def __len__(self) -> int:
        return len(self._num)

    def __bool__(self) -> bool:
        return bool(self._num)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._num == other._num and self._den == other._den
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def __repr__(self) -> str:
        return f"Poly([{', '.join(str(c) for c in self.coeffs)}])"

    def format(self, var: str = "t") -> str:
        if not self._num:
            return "0"
        terms = []
        for k in range(len(self._num) - 1, -1, -1):
            c = self[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = format

    # ---- arithmetic

    @staticmethod
    def _coerce(other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._den == o._den:
            acc = list(self._num)
            _add_into(acc, o._num)
            return Poly._raw(acc, self._den)
        den = math.lcm(self._den, o._den)
        fa, fb = den // self._den, den // o._den
        acc = [c * fa for c in self._num]
        _add_into(acc, [c * fb for c in o._num])
        return Poly._raw(acc, den)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw([-c for c in self._num], self._den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            q = Fraction(other)
            return Poly._raw([c * q.numerator for c in self._num], self._den * q.denominator)
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly._raw(_conv(self._num, other._num), self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero scalar")
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        result, base = Poly.constant(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, value):
        value = as_rat(value) if not isinstance(value, Poly) else value
        acc = Fraction(0) if not isinstance(value, Poly) else Poly()
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def derivative(self) -> "Poly":
        return Poly._raw([k * c for k, c in enumerate(self._num)][1:], self._den)

    def reflected(self) -> "Poly":
        """Substitute ``t -> -t``."""
        return Poly._raw([-c if k & 1 else c for k, c in enumerate(self._num)], self._den)

    def monic(self) -> "Poly":
        if not self._num:
            return self
        return self * (1 / self.leading)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dv = other.coeffs
        lead = dv[-1]
        dq = len(rem) - len(dv)
        if dq < 0:
            return Poly(), self
        quo = [Fraction(0)] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + len(dv) - 1] / lead
            quo[k] = c
            if c:
                for j, dj in enumerate(dv):
                    rem[k + j] -= c * dj
        return Poly(quo), Poly(rem[: len(dv) - 1])

    def _int_form(self, den: int) -> list[int]:
        """Numerators over the (multiple) common denominator ``den``."""
        f = den // self._den
        return [c * f for c in self._num]


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; ``gcd(0, 0) = 0``."""
    while not b.is_zero:
        a, b = b, a.divmod(b)[1]
    return a.monic()


def vanishing_order(p: Poly) -> int | float:
    """Largest k with t^k dividing p, or ``INFINITE`` for zero."""
    if p.is_zero:
        return INFINITE
    k = 0
    while p._num[k] == 0:
        k += 1
    return k


def parity_decompose(p: Poly) -> tuple[Poly, Poly]:
    even = Poly._raw([c if k % 2 == 0 else 0 for k, c in enumerate(p._num)], p._den)
    odd = Poly._raw([c if k % 2 == 1 else 0 for k, c in enumerate(p._num)], p._den)
    return even, odd


def is_even(p: Poly) -> bool:
    return all(c == 0 for c in p._num[1::2])


def is_odd(p: Poly) -> bool:
    return all(c == 0 for c in p._num[0::2])


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (list, tuple)):
        return Poly(value)
    return Poly.constant(value)


# --------------------------------------------------------------------------
# bivariate polynomials in (x, t)

class BiPoly:
    """Polynomial in x whose coefficients are :class:`Poly` in t.

    ``coeffs[k]`` is the coefficient of ``x^k``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_poly(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def from_x_poly(cls, p: Poly) -> "BiPoly":
        """Lift a polynomial in x with constant (t-free) coefficients."""
        return cls(Poly.constant(c) for c in p.coeffs)

    @property
    def coeffs(self) -> tuple[Poly, ...]:
        return self._coeffs

    @property
    def degree_x(self) -> float | int:
        return len(self._coeffs) - 1 if self._coeffs else NEG_INFINITY

    @property
    def degree_t(self) -> float | int:
        return max((c.degree for c in self._coeffs), default=NEG_INFINITY)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading(self) -> Poly:
        return self._coeffs[-1] if self._coeffs else Poly()

    @property
    def is_monic(self) -> bool:
        return bool(self._coeffs) and self._coeffs[-1] == Poly.constant(1)

    def __getitem__(self, k: int) -> Poly:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Poly()

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"BiPoly({[list(map(str, c.coeffs)) for c in self._coeffs]})"

    def format(self) -> str:
        parts = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c.is_zero:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not mono:
                parts.append(f"({c.format('t')})")
            elif c == Poly.constant(1):
                parts.append(mono)
            else:
                parts.append(f"({c.format('t')})*{mono}")
        return " + ".join(parts) if parts else "0"

    __str__ = format

    def __add__(self, other: "BiPoly") -> "BiPoly":
        n = max(len(self._coeffs), len(other._coeffs))
        return BiPoly(self[k] + other[k] for k in range(n))

    def __neg__(self) -> "BiPoly":
        return BiPoly(-c for c in self._coeffs)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return BiPoly(c * other for c in self._coeffs)
        if not isinstance(other, BiPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return BiPoly()
        out = [Poly() for _ in range(len(self._coeffs) + len(other._coeffs) - 1)]
        for i, a in enumerate(self._coeffs):
            for j, b in enumerate(other._coeffs):
                out[i + j] = out[i + j] + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def d_dx(self) -> "BiPoly":
        return BiPoly([c * k for k, c in enumerate(self._coeffs)][1:])

    def d_dt(self) -> "BiPoly":
        return BiPoly(c.derivative() for c in self._coeffs)

    def t_coefficient(self, k: int) -> Poly:
        """Coefficient of ``t^k`` as a polynomial in x."""
        return Poly(c[k] for c in self._coeffs)

    def at_t0(self) -> Poly:
        """The fiber polynomial ``P(x, 0)``."""
        return self.t_coefficient(0)


# --------------------------------------------------------------------------
# matrices of polynomials

class PolyMatrix:
    """Dense matrix of :class:`Poly`, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(_as_poly(e) for e in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise DimensionMismatch(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "PolyMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "PolyMatrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence) -> "PolyMatrix":
        n = len(values)
        return cls(n, n, [values[i] if i == j else 0 for i in range(n) for j in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> Poly:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[Poly]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for e in self.entries)

    @property
    def is_constant(self) -> bool:
        return all(e.is_constant for e in self.entries)

    def __eq__(self, other) -> bool:
        if isinstance(other, PolyMatrix):
            return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return "PolyMatrix([" + ", ".join(
            "[" + ", ".join(e.format() for e in row) + "]" for row in self.to_rows()
        ) + "])"

    def _same_shape(self, other: "PolyMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch(f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._same_shape(other)
        return PolyMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._same_shape(other)
        return PolyMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix(self.rows, self.cols, [-a for a in self.entries])

    def __mul__(self, scalar) -> "PolyMatrix":
        if isinstance(scalar, PolyMatrix):
            return NotImplemented
        return PolyMatrix(self.rows, self.cols, [a * scalar for a in self.entries])

    __rmul__ = __mul__

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        a, da = _integer_form(self)
        b, db = _integer_form(other)
        prod = _imatmul(a, b, self.rows, self.cols, other.cols)
        return PolyMatrix(self.rows, other.cols, [Poly._raw(e, da * db) for e in prod])

    def __pow__(self, k: int) -> "PolyMatrix":
        if not self.is_square:
            raise NonSquareMatrix(f"{self.rows}x{self.cols}")
        result, base = PolyMatrix.identity(self.rows), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    @property
    def T(self) -> "PolyMatrix":
        return self.transpose()

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix(self.rows, self.cols, [fn(e) for e in self.entries])

    def reflected(self) -> "PolyMatrix":
        """Substitute ``t -> -t`` entrywise."""
        return self.map(Poly.reflected)

    def at_zero(self) -> "PolyMatrix":
        """Constant matrix of values at ``t = 0``."""
        return self.map(lambda e: Poly.constant(e[0]))

    def trace(self) -> Poly:
        if not self.is_square:
            raise NonSquareMatrix(f"{self.rows}x{self.cols}")
        total = Poly()
        for i in range(self.rows):
            total = total + self[i, i]
        return total

    def is_antisymmetric(self) -> bool:
        if not self.is_square:
            return False
        n = self.rows
        return all(self[i, j] == -self[j, i] for i in range(n) for j in range(i, n))

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.transpose()


def _integer_form(m: PolyMatrix) -> tuple[list[list[int]], int]:
    den = math.lcm(*(e._den for e in m.entries)) if m.entries else 1
    return [e._int_form(den) for e in m.entries], den


def _imatmul(a: list[list[int]], b: list[list[int]], n: int, k: int, p: int) -> list[list[int]]:
    out = []
    for i in range(n):
        arow = a[i * k:(i + 1) * k]
        for j in range(p):
            acc: list[int] = []
            for l in range(k):
                al = arow[l]
                if al:
                    bl = b[l * p + j]
                    if bl:
                        _add_into(acc, _conv(al, bl))
            out.append(acc)
    return out


def char_poly(m: PolyMatrix) -> BiPoly:
    """``det(x I - m)`` as a BiPoly, monic of degree r in x.

    Faddeev-LeVerrier on the integer form of ``m``: the only divisions are
    exact divisions of integer coefficients by the step index.
    """
    if not m.is_square:
        raise NonSquareMatrix(f"char_poly needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    a, den = _integer_form(m)
    # a_k: coefficient of x^{n-k} for the integer matrix a
    coeffs: list[list[int]] = [[1]]
    current = [list(e) for e in a]  # A @ M_1 with M_1 = I
    for k in range(1, n + 1):
        tr: list[int] = []
        for i in range(n):
            _add_into(tr, current[i * n + i])
        ak = []
        for c in tr:
            q, r = divmod(-c, k)
            if r:
                raise ArithmeticError("Faddeev-LeVerrier lost integrality")
            ak.append(q)
        coeffs.append(_trim(ak))
        if k == n:
            break
        # M_{k+1} = A M_k + a_k I, current = A @ M_{k+1}
        nxt = [list(e) for e in current]
        for i in range(n):
            _add_into(nxt[i * n + i], ak)
        current = _imatmul(a, nxt, n, n, n)
    out = [Poly()] * (n + 1)
    for k, ak in enumerate(coeffs):
        out[n - k] = Poly._raw(ak, den ** k)
    return BiPoly(out)


def evaluate_at_matrix(p: BiPoly, m: PolyMatrix) -> PolyMatrix:
    """Substitute the square matrix m for x in p (Horner)."""
    if not m.is_square:
        raise NonSquareMatrix(f"{m.rows}x{m.cols}")
    acc = PolyMatrix.zeros(m.rows)
    ident = PolyMatrix.identity(m.rows)
    for c in reversed(p.coeffs):
        acc = acc @ m + ident * c
    return acc


def determinant(m: PolyMatrix) -> Poly:
    cp = char_poly(m)
    return cp[0] * (-1) ** m.rows


def hitchin_coefficients(m: PolyMatrix) -> tuple[Poly, ...]:
    """``((-1)^i Tr(wedge^i m))_{i=1..r}``: the x^{r-i} coefficients of char_poly."""
    cp = char_poly(m)
    r = m.rows
    return tuple(cp[r - i] for i in range(1, r + 1))


def pfaffian(m: PolyMatrix) -> Poly:
    """Pfaffian by memoized expansion along the first remaining row."""
    if not m.is_square:
        raise NonSquareMatrix(f"pfaffian needs a square matrix, got {m.rows}x{m.cols}")
    if not m.is_antisymmetric():
        raise NotAntisymmetric("matrix is not antisymmetric")
    n = m.rows
    if n % 2:
        raise OddDimension(f"pfaffian of odd dimension {n}")
    a, den = _integer_form(m)
    memo: dict[int, list[int]] = {0: [1]}

    def pf(mask: int) -> list[int]:
        hit = memo.get(mask)
        if hit is not None:
            return hit
        idx = [i for i in range(n) if mask >> i & 1]
        i, rest = idx[0], idx[1:]
        acc: list[int] = []
        for pos, j in enumerate(rest):
            aij = a[i * n + j]
            if aij:
                sub = pf(mask & ~(1 << i) & ~(1 << j))
                if sub:
                    _add_into(acc, _conv(aij, sub), -1 if pos % 2 else 1)
        memo[mask] = _trim(acc)
        return memo[mask]

    return Poly._raw(pf((1 << n) - 1), den ** (n // 2))


# --------------------------------------------------------------------------
# square roots

def rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def _poly_sqrt(p: Poly) -> Poly:
    if p.is_zero:
        return Poly()
    d = p.degree
    if d % 2:
        raise NotASquare(f"odd degree {d}")
    lead = rational_sqrt(p.leading)
    if lead is None:
        raise NotASquare(f"leading coefficient {p.leading} is not a rational square")
    m = d // 2
    q = [Fraction(0)] * (m + 1)
    q[m] = lead
    for k in range(m - 1, -1, -1):
        s = sum((q[i] * q[m + k - i] for i in range(k + 1, m)), Fraction(0))
        q[k] = (p[m + k] - s) / (2 * lead)
    root = Poly(q)
    if root * root != p:
        raise NotASquare("coefficient matching failed")
    return root


def _bipoly_sqrt(p: BiPoly) -> BiPoly:
    if p.is_zero:
        return BiPoly()
    d = p.degree_x
    if d % 2:
        raise NotASquare(f"odd x-degree {d}")
    lead = _poly_sqrt(p.leading)
    m = d // 2
    q = [Poly()] * (m + 1)
    q[m] = lead
    two_lead = lead * 2
    for k in range(m - 1, -1, -1):
        s = Poly()
        for i in range(k + 1, m):
            s = s + q[i] * q[m + k - i]
        quo, rem = (p[m + k] - s).divmod(two_lead)
        if not rem.is_zero:
            raise NotASquare("coefficient matching failed")
        q[k] = quo
    root = BiPoly(q)
    if root * root != p:
        raise NotASquare("coefficient matching failed")
    return root


def poly_square_root(p):
    """Square root with positive leading rational, or raise :class:`NotASquare`."""
    if isinstance(p, BiPoly):
        return _bipoly_sqrt(p)
    return _poly_sqrt(p)


def squarefree(p: Poly) -> bool:
    """True if p has no repeated root (constants count as squarefree)."""
    return poly_gcd(p, p.derivative()).is_constant


def radical(p: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of p."""
    if p.is_zero:
        return p
    return p.divmod(poly_gcd(p, p.derivative()))[0].monic()


# --------------------------------------------------------------------------
# constant rational matrices

def _to_fraction_rows(m: PolyMatrix) -> list[list[Fraction]]:
    if not m.is_constant:
        raise ValueError("matrix has non-constant entries")
    return [[e[0] for e in row] for row in m.to_rows()]


def rational_det(m: PolyMatrix | Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant of a constant matrix by fraction Gaussian elimination."""
    a = _to_fraction_rows(m) if isinstance(m, PolyMatrix) else [list(map(as_rat, r)) for r in m]
    n = len(a)
    if any(len(r) != n for r in a):
        raise NonSquareMatrix("determinant of a non-square matrix")
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] * inv
            if f:
                row_c = a[c]
                a[r] = [x - f * y for x, y in zip(a[r], row_c)]
    return det


def rational_inverse(m: PolyMatrix) -> PolyMatrix:
    """Inverse of an invertible constant matrix."""
    if not m.is_square:
        raise NonSquareMatrix(f"{m.rows}x{m.cols}")
    n = m.rows
    a = _to_fraction_rows(m)
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return PolyMatrix(n, n, [aug[i][n + j] for i in range(n) for j in range(n)])


def sylvester_resultant(a: Poly, b: Poly) -> Fraction:
    """Resultant of two univariate polynomials via the Sylvester determinant."""
    if a.is_zero or b.is_zero:
        return Fraction(0)
    da, db = a.degree, b.degree
    if da == 0:
        return a.leading ** db
    if db == 0:
        return b.leading ** da
    size = da + db
    ca = list(reversed(a.coeffs))
    cb = list(reversed(b.coeffs))
    rows = []
    for i in range(db):
        rows.append([Fraction(0)] * i + ca + [Fraction(0)] * (size - i - len(ca)))
    for i in range(da):
        rows.append([Fraction(0)] * i + cb + [Fraction(0)] * (size - i - len(cb)))
    return rational_det(rows)
