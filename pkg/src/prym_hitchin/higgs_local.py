"""Equivariant Higgs field germs at a ramification point and their Hitchin images.

The chart is fixed once: the involution is ``t -> -t`` and the canonical
bundle is trivialized by ``dt``. Under that convention the three equivariance
structures become entrywise identities between ``phi(t)`` and ``phi(-t)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DimensionMismatch,
    InternalInvariantError,
    NotASquare,
    StructureViolation,
)
from .exact_algebra import (
    BiPoly,
    Poly,
    PolyMatrix,
    char_poly,
    hitchin_coefficients,
    is_even,
    is_odd,
    pfaffian,
    poly_square_root,
    rational_det,
    rational_inverse,
    vanishing_order,
)


@dataclass(frozen=True)
class Symmetric:
    S: PolyMatrix
    kind = "symmetric"


@dataclass(frozen=True)
class Alternating:
    J: PolyMatrix
    kind = "alternating"


@dataclass(frozen=True)
class InvariantTyped:
    k_p: int
    kind = "invariant"


def standard_j(r: int) -> PolyMatrix:
    """Block form ``[[0, I], [-I, 0]]`` of size r (r even)."""
    if r % 2:
        raise DimensionMismatch(f"alternating form needs even size, got {r}")
    h = r // 2
    rows = [[0] * r for _ in range(r)]
    for i in range(h):
        rows[i][h + i] = 1
        rows[h + i][i] = -1
    return PolyMatrix.from_rows(rows)


def sign_matrix(r: int, k_p: int) -> PolyMatrix:
    """``diag(-1 (k_p times), +1 (r - k_p times))``."""
    return PolyMatrix.diagonal([-1] * k_p + [1] * (r - k_p))


def _check_form(m: PolyMatrix, r: int, name: str, symmetric: bool) -> None:
    if not m.is_square or m.rows != r:
        raise DimensionMismatch(f"{name} must be {r}x{r}, got {m.rows}x{m.cols}")
    if not m.is_constant:
        raise StructureViolation(f"{name} must be a constant matrix")
    if symmetric and not m.is_symmetric():
        raise StructureViolation(f"{name} is not symmetric")
    if not symmetric and not m.is_antisymmetric():
        raise StructureViolation(f"{name} is not antisymmetric")
    if rational_det(m) == 0:
        raise StructureViolation(f"{name} is not invertible")


def _twisted_transpose_target(phi: PolyMatrix, form: PolyMatrix) -> PolyMatrix:
    # form . phi(-t) . form^{-1}
    return form @ phi.reflected() @ rational_inverse(form)


def _first_mismatch(lhs: PolyMatrix, rhs: PolyMatrix) -> tuple[int, int] | None:
    for i in range(lhs.rows):
        for j in range(lhs.cols):
            if lhs[i, j] != rhs[i, j]:
                return i, j
    return None


@dataclass(frozen=True)
class HiggsGerm:
    r: int
    phi: PolyMatrix
    structure: object


def classify(phi: PolyMatrix, structure) -> HiggsGerm:
    """Validate ``phi`` against an equivariance structure."""
    if not phi.is_square:
        raise DimensionMismatch(f"Higgs field must be square, got {phi.rows}x{phi.cols}")
    r = phi.rows
    if isinstance(structure, (Symmetric, Alternating)):
        sym = isinstance(structure, Symmetric)
        form = structure.S if sym else structure.J
        _check_form(form, r, "S" if sym else "J", sym)
        lhs, rhs = phi.transpose(), _twisted_transpose_target(phi, form)
    elif isinstance(structure, InvariantTyped):
        k = structure.k_p
        if isinstance(k, bool) or not isinstance(k, int) or not 0 <= k <= r:
            raise StructureViolation(f"k_p={k!r} must lie in 0..{r}")
        a = sign_matrix(r, k)
        lhs, rhs = phi.reflected(), -(a @ phi @ a)
    else:
        raise TypeError(f"unknown structure {structure!r}")
    bad = _first_mismatch(lhs, rhs)
    if bad is not None:
        i, j = bad
        raise StructureViolation(
            f"{structure.kind} identity fails at entry ({i},{j}): {lhs[i, j]} != {rhs[i, j]}"
        )
    return HiggsGerm(r, phi, structure)


@dataclass(frozen=True)
class HitchinImage:
    components: tuple
    parity_flags: tuple

    def char_poly(self) -> BiPoly:
        r = len(self.components)
        return BiPoly(list(reversed(self.components)) + [Poly.constant(1)]) if r else BiPoly([1])


def hitchin_map(h) -> HitchinImage:
    """Hitchin components of a germ; also accepts a bare square PolyMatrix."""
    phi = h.phi if isinstance(h, HiggsGerm) else h
    comps = hitchin_coefficients(phi)
    img = HitchinImage(comps, tuple(is_even(c) for c in comps))
    if img.char_poly() != char_poly(phi):
        raise InternalInvariantError("Hitchin components do not rebuild the characteristic polynomial")
    return img


@dataclass(frozen=True)
class ParityVerdict:
    index: int
    component: Poly
    expected: str
    ok: bool


@dataclass(frozen=True)
class ParityReport:
    verdicts: tuple

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts)


def equivariance_parity_check(h: HiggsGerm) -> ParityReport:
    """Check the parity each Hitchin component must have under the structure.

    A failure on a validated germ means the library is wrong, so it raises
    :class:`InternalInvariantError` rather than returning a bad report.
    """
    img = hitchin_map(h)
    typed = isinstance(h.structure, InvariantTyped)
    verdicts = []
    for i, c in enumerate(img.components, start=1):
        want = "odd" if typed and i % 2 else "even"
        ok = is_odd(c) if want == "odd" else is_even(c)
        verdicts.append(ParityVerdict(i, c, want, ok))
    report = ParityReport(tuple(verdicts))
    if not report.ok:
        bad = next(v for v in verdicts if not v.ok)
        raise InternalInvariantError(f"H_{bad.index} = {bad.component} is not {bad.expected}")
    return report


def pfaffian_certificate(phi0: PolyMatrix, J: PolyMatrix) -> tuple[Poly, Poly]:
    """``(q, raw)`` where ``raw = pf(J (phi0 - x I))`` and ``q = +-raw / pf(J)`` is monic.

    ``raw^2 = det(J) det(phi0 - x I)``, so dividing by ``pf(J)`` leaves a
    square root of the characteristic polynomial with leading coefficient
    ``+-1``; the sign is then fixed to make it monic. The entries of ``phi0``
    must be constants; x plays the role of the polynomial variable.
    """
    r = phi0.rows
    x = Poly([0, 1])
    shifted = PolyMatrix(r, r, [
        Poly.constant(phi0[i, j][0]) - (x if i == j else 0) for i in range(r) for j in range(r)
    ])
    raw = pfaffian(J @ shifted)
    q = raw / pfaffian(J)[0]
    return (q if q.leading > 0 else -q), raw


def alternating_square_certificate(h) -> Poly:
    """Square root of ``det(x I - phi(0))`` built from a Pfaffian.

    Accepts a validated alternating germ, or a pair ``(A, J)`` of constant
    matrices with ``A^T = J A J^{-1}``.
    """
    if isinstance(h, HiggsGerm):
        if not isinstance(h.structure, Alternating):
            raise StructureViolation("certificate needs an alternating structure")
        phi0, J = h.phi.at_zero(), h.structure.J
    else:
        phi0, J = h
        classify(phi0, Alternating(J))
    q, _ = pfaffian_certificate(phi0, J)
    fiber = char_poly(phi0).at_t0()
    if q * q != fiber:
        raise InternalInvariantError("Pfaffian certificate does not square to the characteristic polynomial")
    try:
        root = poly_square_root(fiber)
    except NotASquare:
        raise InternalInvariantError("characteristic polynomial of an alternating field is not a square")
    if root != q:
        raise InternalInvariantError("Pfaffian certificate disagrees with the coefficient-matching root")
    return q


def vanishing_bound(r: int, k_p: int) -> tuple:
    return tuple(max(0, i - 2 * k_p) for i in range(1, r + 1))


def vanishing_order_profile(h: HiggsGerm) -> tuple:
    if not isinstance(h.structure, InvariantTyped):
        raise StructureViolation("vanishing-order profile needs a typed invariant structure")
    orders = tuple(vanishing_order(c) for c in hitchin_map(h).components)
    bound = vanishing_bound(h.r, h.structure.k_p)
    for i, (o, b) in enumerate(zip(orders, bound), start=1):
        if o < b:
            raise InternalInvariantError(f"H_{i} vanishes to order {o} < {b}")
    return orders


def is_nilpotent(phi: PolyMatrix) -> bool:
    if not phi.is_square:
        raise DimensionMismatch(f"nilpotency needs a square matrix, got {phi.rows}x{phi.cols}")
    return (phi ** phi.rows).is_zero


# --------------------------------------------------------------------------
# seeded generators of valid germs

def _rand_rat(rng: random.Random, bound: int = 5) -> Fraction:
    num = rng.randint(-bound, bound)
    den = rng.choice((1, 1, 1, 2, 3))
    return Fraction(num, den)


def random_poly(rng: random.Random, degree: int, bound: int = 5) -> Poly:
    return Poly([_rand_rat(rng, bound) for _ in range(degree + 1)])


def random_matrix(rng: random.Random, r: int, degree: int, bound: int = 5) -> PolyMatrix:
    return PolyMatrix(r, r, [random_poly(rng, degree, bound) for _ in range(r * r)])


def random_antisymmetric(rng: random.Random, r: int, degree: int, bound: int = 5) -> PolyMatrix:
    rows = [[Poly()] * r for _ in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            e = random_poly(rng, degree, bound)
            rows[i][j], rows[j][i] = e, -e
    return PolyMatrix.from_rows(rows)


def random_invertible_symmetric(rng: random.Random, r: int) -> PolyMatrix:
    while True:
        b = random_matrix(rng, r, 0, 3)
        s = b + b.transpose()
        if rational_det(s) != 0:
            return s


def random_invertible_antisymmetric(rng: random.Random, r: int) -> PolyMatrix:
    while True:
        j = random_antisymmetric(rng, r, 0, 3)
        if rational_det(j) != 0:
            return j


def _symmetrize(b: PolyMatrix, form: PolyMatrix) -> PolyMatrix:
    # phi = (B(t) + F^{-1} B(-t)^T F) / 2 satisfies phi^T = F phi(-t) F^{-1}
    # whenever F^T = +-F
    return (b + rational_inverse(form) @ b.reflected().transpose() @ form) * Fraction(1, 2)


def random_symmetric_germ(rng: random.Random, r: int, degree: int = 3, S: PolyMatrix | None = None) -> HiggsGerm:
    S = random_invertible_symmetric(rng, r) if S is None else S
    return classify(_symmetrize(random_matrix(rng, r, degree), S), Symmetric(S))


def random_alternating_germ(rng: random.Random, r: int, degree: int = 3, J: PolyMatrix | None = None) -> HiggsGerm:
    J = random_invertible_antisymmetric(rng, r) if J is None else J
    return classify(_symmetrize(random_matrix(rng, r, degree), J), Alternating(J))


def random_invariant_germ(rng: random.Random, r: int, k_p: int, degree: int = 3, bound: int = 5) -> HiggsGerm:
    """Same-block entries odd in t, cross-block entries even."""
    entries = []
    for i in range(r):
        for j in range(r):
            same = (i < k_p) == (j < k_p)
            coeffs = [_rand_rat(rng, bound) if (d % 2 == 1) == same else 0 for d in range(degree + 1)]
            entries.append(Poly(coeffs))
    return classify(PolyMatrix(r, r, entries), InvariantTyped(k_p))


def random_alternating_constant(rng: random.Random, r: int, J: PolyMatrix | None = None) -> tuple[PolyMatrix, PolyMatrix]:
    """Constant ``A = J^{-1} M`` with M antisymmetric, so ``A^T = J A J^{-1}``."""
    J = standard_j(r) if J is None else J
    M = random_antisymmetric(rng, r, 0)
    return rational_inverse(J) @ M, J


def sharp_invariant_germ(r: int, k_p: int) -> HiggsGerm:
    """A typed germ whose Hitchin components meet the vanishing bound with equality
    for every ``i >= 2 k_p + 1``.

    The top-left ``2 k_p`` block pairs the ``-1`` and ``+1`` eigenlines with
    constant off-diagonal entries; the remaining ``r - 2 k_p`` slots sit on the
    +1 block and carry ``t`` times distinct integers on the diagonal.
    """
    if not 0 <= 2 * k_p <= r:
        raise StructureViolation(f"k_p={k_p} must satisfy 2 k_p <= r={r}")
    rows = [[Poly()] * r for _ in range(r)]
    t = Poly([0, 1])
    # pair eigenline i (in the -1 block) with eigenline k_p + i (in the +1 block)
    for i in range(k_p):
        a, b = i, k_p + i
        rows[a][b] = Poly.constant(1)
        rows[b][a] = Poly.constant(i + 1)
    for j, idx in enumerate(range(2 * k_p, r)):
        rows[idx][idx] = t * (j + 1)
    return classify(PolyMatrix.from_rows(rows), InvariantTyped(k_p))
