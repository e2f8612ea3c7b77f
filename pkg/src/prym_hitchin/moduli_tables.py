"""Dimension tables, type combinatorics and the dimension-identity sweep.

Every ``dim_*`` function evaluates one closed form. The sweep then checks that
independently computed quantities (Hitchin-base dimensions, locus dimensions,
Prym and quotient genera) agree cell by cell.
"""

from __future__ import annotations

import itertools
import os
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .cover_geometry import (
    CoverData,
    Linearization,
    h0_canonical_power_plus,
    h0_twisted_plus,
)
from .errors import (
    EmptyLocus,
    GridTooLarge,
    IdentityFailure,
    InadmissibleCover,
    InadmissibleInput,
    ParityViolation,
    UnknownScenario,
)
from .spectral_model import (
    ANTI_ALTERNATING,
    ANTI_SYMMETRIC,
    INVARIANT_MAX,
    WSpace,
    g_hat_y_closed_form,
    genus_ledger,
    invariant_tau,
    quotient_genus_over_base,
)

DEFAULT_MAX_GRID = 4096
MAX_GRID_ENV = "PRYM_HITCHIN_MAX_GRID"
MAX_ENUMERATION = 200_000


# --------------------------------------------------------------------------
# types

def _canonical_flip(values: Sequence[int], flip) -> tuple:
    a = tuple(values)
    b = tuple(flip(v) for v in a)
    return min(a, b)


@dataclass(frozen=True)
class InvariantType:
    """Multiplicities ``k_p`` of the eigenvalue -1 at the ramification points.

    Stored in canonical form: the smaller of ``ks`` and ``r - ks``.
    """

    r: int
    ks: tuple

    def __post_init__(self):
        if isinstance(self.r, bool) or not isinstance(self.r, int) or self.r < 1:
            raise InadmissibleInput(f"rank must be a positive integer, got {self.r!r}")
        ks = tuple(self.ks)
        for k in ks:
            if isinstance(k, bool) or not isinstance(k, int) or not 0 <= k <= self.r:
                raise InadmissibleInput(f"each k_p must lie in 0..{self.r}, got {k!r}")
        object.__setattr__(self, "ks", _canonical_flip(ks, lambda k: self.r - k))

    def canonical(self) -> "InvariantType":
        return InvariantType(self.r, self.ks)

    def parity_ok(self, d: int) -> bool:
        # flipping all 2n entries preserves the parity of the sum
        return (sum(self.ks) - d) % 2 == 0

    def check_parity(self, d: int) -> None:
        if not self.parity_ok(d):
            raise ParityViolation(f"sum of k_p = {sum(self.ks)} has the wrong parity for degree {d}")

    @property
    def is_maximal(self) -> bool:
        return all(k in maximal_values(self.r) for k in self.ks)

    @property
    def correction(self) -> int:
        return sum(k * (self.r - k) for k in self.ks)


@dataclass(frozen=True)
class SignType:
    signs: tuple

    def __post_init__(self):
        signs = tuple(self.signs)
        if any(s not in (1, -1) for s in signs):
            raise InadmissibleInput(f"signs must be +1 or -1, got {signs!r}")
        object.__setattr__(self, "signs", _canonical_flip(signs, lambda s: -s))

    def act(self, g: Sequence[int]) -> "SignType":
        return SignType(tuple(a * b for a, b in zip(self.signs, g)))


def maximal_values(r: int) -> tuple:
    return (r // 2,) if r % 2 == 0 else ((r - 1) // 2, (r + 1) // 2)


def enumerate_types(c: CoverData, r: int, d: int = 0, maximal_only: bool = False) -> list:
    """All canonical types of rank r over the 2n ramification points with the given parity."""
    if c.n < 1:
        raise InadmissibleInput("types live on the ramification points; the cover is etale")
    m = 2 * c.n
    alphabet = maximal_values(r) if maximal_only else tuple(range(r + 1))
    if len(alphabet) ** m > MAX_ENUMERATION:
        raise GridTooLarge(f"{len(alphabet)}^{m} raw types exceeds {MAX_ENUMERATION}")
    seen = set()
    out = []
    for ks in itertools.product(alphabet, repeat=m):
        if (sum(ks) - d) % 2:
            continue
        t = InvariantType(r, ks)
        if t.ks not in seen:
            seen.add(t.ks)
            out.append(t)
    out.sort(key=lambda t: t.ks)
    return out


@dataclass(frozen=True)
class OrbitCount:
    orbits: int
    components: int
    group_order: int
    orbit_sizes: tuple

    @property
    def effective_order(self) -> int:
        # the all-minus vector has even weight and acts trivially on classes
        return max(1, self.group_order // 2)

    @property
    def free(self) -> bool:
        return all(size == self.effective_order for size in self.orbit_sizes)


def p2_orbits_rank2(n: int) -> OrbitCount:
    """Orbits of even-weight sign vectors acting on sign types modulo global sign."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InadmissibleInput(f"n must be a positive integer, got {n!r}")
    m = 2 * n
    if 2 ** m > MAX_ENUMERATION:
        raise GridTooLarge(f"2^{m} sign vectors exceeds {MAX_ENUMERATION}")
    classes = {SignType(s) for s in itertools.product((1, -1), repeat=m)}
    group = [g for g in itertools.product((1, -1), repeat=m) if g.count(-1) % 2 == 0]
    generators = [g for g in group if g.count(-1) == 2]
    unvisited = set(classes)
    sizes = []
    while unvisited:
        start = min(unvisited, key=lambda s: s.signs)
        unvisited.discard(start)
        queue, size = deque([start]), 1
        while queue:
            cur = queue.popleft()
            for g in generators:
                nxt = cur.act(g)
                if nxt in unvisited:
                    unvisited.discard(nxt)
                    queue.append(nxt)
                    size += 1
        sizes.append(size)
    return OrbitCount(len(sizes), len(classes), len(group), tuple(sizes))


# --------------------------------------------------------------------------
# dimensions

def _rank(r) -> int:
    if isinstance(r, bool) or not isinstance(r, int) or r < 1:
        raise InadmissibleInput(f"rank must be a positive integer, got {r!r}")
    return r


def dim_invariant_locus(c: CoverData, t: InvariantType, d: int = 0, fixed_det: bool = False) -> int:
    if len(t.ks) != 2 * c.n:
        raise InadmissibleInput(f"type has {len(t.ks)} entries but the cover has {2 * c.n} ramification points")
    t.check_parity(d)
    r = t.r
    if fixed_det:
        return (r * r - 1) * (c.g_Y - 1) + t.correction
    return r * r * (c.g_Y - 1) + 1 + t.correction


def dim_anti_invariant(c: CoverData, r: int, kind: str = "plus") -> int:
    r = _rank(r)
    base = r * r * (c.g_Y - 1)
    if kind == "plus":
        return base + c.n * r * (r + 1) // 2
    if kind == "minus":
        if r % 2 and c.n > 0:
            raise EmptyLocus(f"no alternating anti-invariant bundles of odd rank {r} on a ramified cover")
        return base + c.n * r * (r - 1) // 2
    raise ValueError(f"kind must be 'plus' or 'minus', got {kind!r}")


def _tau_drop(r: int, k_p: int) -> int:
    return sum((i + 1) // 2 for i in range(1, r - 2 * k_p))


def _check_tau(c: CoverData, r: int, k_p: int) -> None:
    if c.n < 1:
        raise InadmissibleInput("a typed invariant locus needs a ramified cover")
    if isinstance(k_p, bool) or not isinstance(k_p, int) or not 0 <= k_p <= r // 2:
        raise InadmissibleInput(f"k_p={k_p!r} must lie in 0..{r // 2}")


def dim_w_space(c: CoverData, r: int, which: WSpace) -> int:
    r = _rank(r)
    g, n = c.g_Y, c.n
    if which.kind == "plus":
        return r * r * (g - 1) + n * r * (r + 1) // 2
    if which.kind == "minus":
        if r % 2 and n > 0:
            raise InadmissibleInput(f"the square condition is empty for odd rank {r} on a ramified cover")
        return dim_w_space(c, r, WSpace("plus")) - n * r
    if which.kind == "max":
        if r % 2 == 0:
            return r * r * (g - 1) + n * r * r // 2 + 1
        return r * r * (g - 1) + n * (r * r - 1) // 2 + 1
    _check_tau(c, r, which.k_p)
    return dim_w_space(c, r, WSpace("max")) - _tau_drop(r, which.k_p)


def dim_w_space_by_sections(c: CoverData, r: int, which: WSpace) -> int:
    """Second route: add up the invariant section spaces each coefficient lives in."""
    r = _rank(r)
    if which.kind == "plus":
        return sum(h0_canonical_power_plus(c, i, Linearization.POSITIVE) for i in range(1, r + 1))
    if which.kind == "max":
        return sum(h0_canonical_power_plus(c, i, Linearization.NEGATIVE) for i in range(1, r + 1))
    if which.kind == "tau":
        _check_tau(c, r, which.k_p)
        k = which.k_p
        head = sum(h0_canonical_power_plus(c, i, Linearization.NEGATIVE) for i in range(1, min(r, 2 * k + 1) + 1))
        tail = sum(h0_twisted_plus(c, i, i - 2 * k - 1) for i in range(2 * k + 2, r + 1))
        return head + tail
    raise InadmissibleInput(f"no section decomposition for {which.label}")



def maximal_type(c: CoverData, r: int, d: int = 0) -> InvariantType:
    """A maximal type with the requested parity, when one exists."""
    vals = maximal_values(r)
    m = 2 * c.n
    for j in range(m + 1):
        ks = (vals[-1],) * j + (vals[0],) * (m - j)
        if (sum(ks) - d) % 2 == 0:
            return InvariantType(r, ks)
    raise ParityViolation(f"no maximal type of rank {r} has parity {d}")


def tau_type(c: CoverData, r: int, k_p: int) -> tuple[InvariantType, int]:
    """``(type, d)`` with ``k_p`` at one point and maximal values elsewhere.

    For odd r the maximal points are balanced so that the degree is 0. For even
    r every maximal value is r/2, so the parity of the sum, and hence d, is
    forced; the dimension formula does not depend on d.
    """
    _check_tau(c, r, k_p)
    vals = maximal_values(r)
    rest = 2 * c.n - 1
    if r % 2 == 0:
        ks = (k_p,) + (vals[0],) * rest
        return InvariantType(r, ks), sum(ks) % 2
    for j in range(rest + 1):
        ks = (k_p,) + (vals[1],) * j + (vals[0],) * (rest - j)
        if sum(ks) % 2 == 0:
            return InvariantType(r, ks), 0
    raise InadmissibleInput("no degree-0 tau type")  # unreachable for n >= 1


# --------------------------------------------------------------------------
# connected components: a lookup table of known results, nothing is computed

@dataclass(frozen=True)
class ComponentScenario:
    locus: str  # "anti_invariant" or "fixed_det_anti_invariant"
    kind: str  # "plus" or "minus"
    ramified: bool
    r: int | None = None
    n: int | None = None


@dataclass(frozen=True)
class ComponentVerdict:
    verdict: str  # "irreducible", "empty" or "count"
    count: int | None = None

    def __str__(self) -> str:
        if self.verdict == "count":
            return str(self.count)
        return self.verdict.capitalize()


IRREDUCIBLE = ComponentVerdict("irreducible")
EMPTY = ComponentVerdict("empty")


def component_oracle(s: ComponentScenario) -> ComponentVerdict:
    if s.locus == "anti_invariant":
        if not s.ramified and s.kind in ("plus", "minus"):
            return ComponentVerdict("count", 2)
        if s.kind == "plus":
            return IRREDUCIBLE
        if s.kind == "minus" and s.r is not None:
            return ComponentVerdict("count", 2) if s.r % 2 == 0 else EMPTY
    elif s.locus == "fixed_det_anti_invariant" and s.ramified:
        if s.kind == "plus":
            return IRREDUCIBLE
        if s.kind == "minus" and s.r == 2 and s.n is not None and s.n >= 1:
            return ComponentVerdict("count", 2 ** (2 * s.n - 1))
    raise UnknownScenario(f"no known component count for {s}")


# --------------------------------------------------------------------------
# identity sweep

FAMILIES = (
    "w_plus_eq_u_plus",
    "w_minus_eq_u_minus",
    "w_max_eq_u_max",
    "w_tau_eq_u_tau",
    "prym_plus_eq_u_plus",
    "g_hat_y_eq_u_tau",
)
AUX_FAMILIES = (
    "w_plus_two_routes",
    "w_max_two_routes",
    "w_tau_two_routes",
    "quotient_genus_two_routes",
    "prym_minus_eq_u_minus",
    "prym_max_eq_w_max",
    "g_hat_y_closed_form",
    "node_genus_drop",
)


@dataclass(frozen=True)
class Grid:
    g_Y: tuple = (1, 5)
    n: tuple = (1, 6)
    r: tuple = (1, 8)
    k_p: tuple | None = None  # inclusive filter on k_p; None means all admissible

    def __post_init__(self):
        for name in ("g_Y", "n", "r"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise InadmissibleInput(f"empty range for {name}: {lo}..{hi}")
        if self.g_Y[0] < 0 or self.n[0] < 0 or self.r[0] < 1:
            raise InadmissibleInput("grid bounds must be g_Y >= 0, n >= 0, r >= 1")

    def cells(self) -> list:
        return [
            (g, n, r)
            for g in range(self.g_Y[0], self.g_Y[1] + 1)
            for n in range(self.n[0], self.n[1] + 1)
            for r in range(self.r[0], self.r[1] + 1)
        ]

    @property
    def size(self) -> int:
        return (self.g_Y[1] - self.g_Y[0] + 1) * (self.n[1] - self.n[0] + 1) * (self.r[1] - self.r[0] + 1)


@dataclass(frozen=True)
class IdentityCheck:
    family: str
    g_Y: int
    n: int
    r: int
    k_p: int | None
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class SweepReport:
    grid: Grid
    cells: int = 0
    skipped_cells: list = field(default_factory=list)
    checks: list = field(default_factory=list)

    def counts(self) -> dict:
        out = {f: 0 for f in FAMILIES + AUX_FAMILIES}
        for ch in self.checks:
            out[ch.family] += 1
        return out

    @property
    def passed(self) -> bool:
        return all(ch.passed for ch in self.checks)


def max_grid_cells() -> int:
    raw = os.environ.get(MAX_GRID_ENV)
    if raw is None:
        return DEFAULT_MAX_GRID
    try:
        return int(raw)
    except ValueError:
        raise InadmissibleInput(f"{MAX_GRID_ENV} must be an integer, got {raw!r}") from None


def cell_checks(g_Y: int, n: int, r: int, k_filter: tuple | None = None) -> list:
    """All identity checks for one cell, in a fixed order.

    Raises :class:`InadmissibleCover` if (g_Y, n) is not an admissible cover.
    """
    c = CoverData.of(g_Y, n)
    out = []

    def add(family, lhs, rhs, k_p=None):
        out.append(IdentityCheck(family, g_Y, n, r, k_p, lhs, rhs))

    w_plus = dim_w_space(c, r, WSpace("plus"))
    add("w_plus_eq_u_plus", w_plus, dim_anti_invariant(c, r, "plus"))
    add("w_plus_two_routes", w_plus, dim_w_space_by_sections(c, r, WSpace("plus")))

    if r % 2 == 0 or n == 0:
        add("w_minus_eq_u_minus", dim_w_space(c, r, WSpace("minus")), dim_anti_invariant(c, r, "minus"))
        alt = genus_ledger(c, r, ANTI_ALTERNATING)
        add("prym_minus_eq_u_minus", alt.prym_dim, dim_anti_invariant(c, r, "minus"))
        add("node_genus_drop", alt.g_normalized, alt.g_spectral - r * n)

    sym = genus_ledger(c, r, ANTI_SYMMETRIC)
    add("prym_plus_eq_u_plus", sym.prym_dim, dim_anti_invariant(c, r, "plus"))
    add("quotient_genus_two_routes", sym.g_spectral - sym.prym_dim, quotient_genus_over_base(c, r))

    if n == 0:
        return out

    w_max = dim_w_space(c, r, WSpace("max"))
    add("w_max_eq_u_max", w_max, dim_invariant_locus(c, maximal_type(c, r), 0))
    add("w_max_two_routes", w_max, dim_w_space_by_sections(c, r, WSpace("max")))
    add("prym_max_eq_w_max", genus_ledger(c, r, INVARIANT_MAX).prym_dim, w_max)

    for k in range(r // 2 + 1):
        if k_filter is not None and not k_filter[0] <= k <= k_filter[1]:
            continue
        space = WSpace("tau", k)
        t, d = tau_type(c, r, k)
        u_tau = dim_invariant_locus(c, t, d)
        w_tau = dim_w_space(c, r, space)
        add("w_tau_eq_u_tau", w_tau, u_tau, k)
        add("w_tau_two_routes", w_tau, dim_w_space_by_sections(c, r, space), k)
        led = genus_ledger(c, r, invariant_tau(k))
        add("g_hat_y_eq_u_tau", led.g_normalized_quotient, u_tau, k)
        add("g_hat_y_closed_form", led.g_normalized_quotient, g_hat_y_closed_form(c, r, k), k)
    return out


def _cell_worker(args):
    g, n, r, k_filter = args
    try:
        return cell_checks(g, n, r, k_filter)
    except InadmissibleCover:
        return None


def identity_sweep(grid: Grid = Grid(), jobs: int = 1) -> SweepReport:
    """Evaluate every identity on every admissible cell of ``grid``.

    Cells whose cover is inadmissible are listed in ``skipped_cells``. The
    first failing check, in cell order, raises :class:`IdentityFailure`.
    """
    limit = max_grid_cells()
    if grid.size > limit:
        raise GridTooLarge(f"grid has {grid.size} cells, limit is {limit} (set {MAX_GRID_ENV} to raise it)")
    cells = grid.cells()
    tasks = [(g, n, r, grid.k_p) for g, n, r in cells]
    if jobs > 1 and len(tasks) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_cell_worker, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_cell_worker(t) for t in tasks]
    report = SweepReport(grid)
    for cell, checks in zip(cells, results):
        if checks is None:
            report.skipped_cells.append(cell)
            continue
        report.cells += 1
        for ch in checks:
            if not ch.passed:
                raise IdentityFailure(ch)
            report.checks.append(ch)
    return report


# --------------------------------------------------------------------------
# dimension report for one cover and rank

@dataclass
class DimReport:
    dims: dict = field(default_factory=dict)
    equality_checks: list = field(default_factory=list)  # (label_a, label_b, passed)

    def put(self, label: str, value: int) -> None:
        self.dims[label] = value

    def check(self, a: str, b: str) -> None:
        self.equality_checks.append((a, b, self.dims[a] == self.dims[b]))

    @property
    def passed(self) -> bool:
        return all(ok for _, _, ok in self.equality_checks)


SPACES = ("all", "plus", "minus", "max", "tau")


def dim_report(
    c: CoverData,
    r: int,
    space: str | None = "all",
    kind: str | None = None,
    k_p: int | None = None,
    ks: Sequence[int] | None = None,
    d: int = 0,
    fixed_det: bool = False,
) -> DimReport:
    """Collect dimensions for the selected spaces and the identities relating them.

    ``space="all"`` quietly leaves out the pieces that do not exist for this
    cover (the alternating side for odd r on a ramified cover, the typed side
    on an etale one). Selecting such a piece explicitly raises instead.
    """
    r = _rank(r)
    rep = DimReport()
    if space is not None and space not in SPACES:
        raise InadmissibleInput(f"unknown space {space!r}")
    everything = space == "all"

    def want_kind(k):
        return kind == k or space == k or everything

    if want_kind("plus"):
        rep.put("W+", dim_w_space(c, r, WSpace("plus")))
        rep.put("U+", dim_anti_invariant(c, r, "plus"))
        rep.put("P+", genus_ledger(c, r, ANTI_SYMMETRIC).prym_dim)
        rep.check("W+", "U+")
        rep.check("P+", "U+")

    minus_exists = r % 2 == 0 or c.n == 0
    if kind == "minus" or space == "minus" or (everything and minus_exists):
        u_minus = dim_anti_invariant(c, r, "minus")
        rep.put("W-", dim_w_space(c, r, WSpace("minus")))
        rep.put("U-", u_minus)
        rep.put("P-", genus_ledger(c, r, ANTI_ALTERNATING).prym_dim)
        rep.check("W-", "U-")
        rep.check("P-", "U-")

    if space == "max" or (everything and c.n > 0):
        rep.put("Wmax", dim_w_space(c, r, WSpace("max")))
        rep.put("Umax", dim_invariant_locus(c, maximal_type(c, r), 0))
        rep.put("Pmax", genus_ledger(c, r, INVARIANT_MAX).prym_dim)
        rep.check("Wmax", "Umax")
        rep.check("Pmax", "Umax")

    if space == "tau" or (everything and c.n > 0):
        kps = [k_p] if k_p is not None else list(range(r // 2 + 1))
        for k in kps:
            t, td = tau_type(c, r, k)
            w, u, g = f"Wtau({k})", f"Utau({k})", f"ghatY({k})"
            rep.put(w, dim_w_space(c, r, WSpace("tau", k)))
            rep.put(u, dim_invariant_locus(c, t, td))
            rep.put(g, genus_ledger(c, r, invariant_tau(k)).g_normalized_quotient)
            rep.check(w, u)
            rep.check(g, u)

    if ks is not None:
        t = InvariantType(r, tuple(ks))
        label = "SU^sigma,tau" if fixed_det else "U^sigma,tau"
        rep.put(label, dim_invariant_locus(c, t, d, fixed_det))
    return rep
