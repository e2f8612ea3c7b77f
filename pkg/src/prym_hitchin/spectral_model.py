"""Local models of spectral curves at a marked point of X.

A germ is the tuple of sections ``s_1..s_r`` expanded in a local coordinate
``t``; its spectral polynomial is ``P(x, t) = x^r + s_1 x^{r-1} + ... + s_r``.
At a ramification point the involution acts by ``t -> -t`` and the chosen
lift decides which parities the sections must have.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .cover_geometry import CoverData, Linearization
from .errors import (
    InadmissibleInput,
    InternalInvariantError,
    InvalidGerm,
    LinearizationMismatch,
    NotASquare,
    ParityError,
    WrongChart,
)
from .exact_algebra import (
    BiPoly,
    Poly,
    is_even,
    is_odd,
    poly_gcd,
    poly_square_root,
    squarefree,
    sylvester_resultant,
    vanishing_order,
)


class Chart(enum.Enum):
    RAMIFIED = "ramified"
    ORDINARY = "ordinary"

    @classmethod
    def parse(cls, value) -> "Chart":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown chart {value!r}") from None


class FixedPointMarker(enum.Enum):
    FIBERWISE_IDENTITY = "FiberwiseIdentity"

    def __str__(self) -> str:
        return self.value


FIBERWISE_IDENTITY = FixedPointMarker.FIBERWISE_IDENTITY


@dataclass(frozen=True)
class SpectralGerm:
    r: int
    sections: tuple
    chart: Chart = Chart.RAMIFIED
    linearization: Linearization = Linearization.POSITIVE

    def __post_init__(self):
        if isinstance(self.r, bool) or not isinstance(self.r, int) or self.r < 1:
            raise InvalidGerm(f"rank must be a positive integer, got {self.r!r}")
        secs = tuple(s if isinstance(s, Poly) else Poly(s) for s in self.sections)
        if len(secs) != self.r:
            raise InvalidGerm(f"rank {self.r} needs {self.r} sections, got {len(secs)}")
        object.__setattr__(self, "sections", secs)
        object.__setattr__(self, "chart", Chart.parse(self.chart))
        object.__setattr__(self, "linearization", Linearization.parse(self.linearization))
        if self.chart is Chart.RAMIFIED:
            for i, s in enumerate(secs, start=1):
                if self.linearization is Linearization.POSITIVE or i % 2 == 0:
                    ok, want = is_even(s), "even"
                else:
                    ok, want = is_odd(s), "odd"
                if not ok:
                    raise InvalidGerm(
                        f"s_{i} = {s} must be {want} in t under the {self.linearization.value} linearization"
                    )

    def section(self, i: int) -> Poly:
        """1-based access to ``s_i``."""
        return self.sections[i - 1]


def build_spectral_polynomial(g: SpectralGerm) -> BiPoly:
    return BiPoly(list(reversed(g.sections)) + [Poly.constant(1)])


def fiber_polynomials(P: BiPoly) -> tuple[Poly, Poly, Poly]:
    """``P(x,0)``, ``P_x(x,0)`` and ``P_t(x,0)`` as polynomials in x."""
    return P.at_t0(), P.d_dx().at_t0(), P.t_coefficient(1)


def fiber_singularity_test(P: BiPoly) -> tuple[bool, Poly]:
    """Jacobian test on the fiber ``t = 0`` via a triple gcd.

    Returns ``(smooth, witness)`` where the roots of the monic ``witness`` are
    exactly the x-coordinates of singular points on the fiber.
    """
    p0, px, pt = fiber_polynomials(P)
    witness = poly_gcd(poly_gcd(p0, px), pt)
    return witness.is_constant, witness


def two_equation_singular(P: BiPoly) -> bool:
    """Independent route: does some root of ``P(x,0)`` kill both partials?

    Uses ``R(u) = Res_x(P(x,0), P_x(x,0) + u P_t(x,0))``, which vanishes
    identically in u exactly when such a root exists. ``R`` has degree at most
    ``deg_x P`` in u, so checking that many plus one values of u decides it.
    """
    p0, px, pt = fiber_polynomials(P)
    if p0.is_zero:
        raise ValueError("P(x,0) vanishes identically")
    deg = int(p0.degree)
    return all(sylvester_resultant(p0, px + pt * u).numerator == 0 for u in range(deg + 1))


def naive_origin_singular(P: BiPoly) -> bool:
    """The shortcut that only inspects the point ``(x, t) = (0, 0)``."""
    p0, px, pt = fiber_polynomials(P)
    return p0[0] == 0 and px[0] == 0 and pt[0] == 0


def involution_fixed_points_on_fiber(g: SpectralGerm):
    """Fixed points of the lifted involution on the fiber over a ramification point."""
    if g.chart is not Chart.RAMIFIED:
        raise WrongChart("fixed points are only defined over a ramification point")
    if g.linearization is Linearization.POSITIVE:
        return FIBERWISE_IDENTITY
    # the lift acts by x -> -x on the fiber, so only x = 0 can be fixed
    return vanishing_order(build_spectral_polynomial(g).at_t0())


# --------------------------------------------------------------------------
# W spaces

@dataclass(frozen=True)
class WSpace:
    kind: str
    k_p: int | None = None

    _KINDS = ("plus", "minus", "max", "tau")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown W space {self.kind!r}")
        if (self.kind == "tau") != (self.k_p is not None):
            raise ValueError("k_p is required for the tau space and only there")
        if self.k_p is not None and (isinstance(self.k_p, bool) or not isinstance(self.k_p, int) or self.k_p < 0):
            raise InadmissibleInput(f"k_p must be a natural number, got {self.k_p!r}")

    @property
    def linearization(self) -> Linearization:
        if self.kind in ("plus", "minus"):
            return Linearization.POSITIVE
        return Linearization.NEGATIVE

    @property
    def label(self) -> str:
        return f"WTau({self.k_p})" if self.kind == "tau" else {"plus": "WPlus", "minus": "WMinus", "max": "WMax"}[self.kind]

    @classmethod
    def parse(cls, text: str) -> "WSpace":
        t = text.strip().lower()
        aliases = {"wplus": "plus", "w+": "plus", "plus": "plus",
                   "wminus": "minus", "w-": "minus", "minus": "minus",
                   "wmax": "max", "max": "max"}
        if t in aliases:
            return cls(aliases[t])
        for head in ("wtau(", "tau("):
            if t.startswith(head) and t.endswith(")"):
                return cls("tau", int(t[len(head):-1]))
        raise ValueError(f"unknown W space {text!r}")


WPLUS = WSpace("plus")
WMINUS = WSpace("minus")
WMAX = WSpace("max")


def wtau(k_p: int) -> WSpace:
    return WSpace("tau", k_p)


@dataclass(frozen=True)
class Membership:
    member: bool
    certificate: object = None


def w_membership(g: SpectralGerm, space: WSpace) -> Membership:
    if g.chart is not Chart.RAMIFIED:
        raise WrongChart("W-space membership is tested at a ramification point")
    if g.linearization is not space.linearization:
        raise LinearizationMismatch(
            f"{space.label} needs the {space.linearization.value} linearization, germ has {g.linearization.value}"
        )
    if space.kind in ("plus", "max"):
        # parity was already enforced by the germ constructor
        return Membership(True)
    if space.kind == "minus":
        try:
            root = poly_square_root(build_spectral_polynomial(g).at_t0())
        except NotASquare:
            return Membership(False)
        return Membership(True, root)
    k = space.k_p
    if k > g.r // 2:
        raise InadmissibleInput(f"k_p={k} exceeds r//2={g.r // 2}")
    orders = tuple(vanishing_order(s) for s in g.sections)
    member = all(orders[i - 1] >= i - 2 * k for i in range(2 * k + 2, g.r + 1))
    return Membership(member, orders)


# --------------------------------------------------------------------------
# reports

@dataclass(frozen=True)
class NodeProfile:
    """Local description of the fiber of a square-fiber germ.

    ``certificate`` is the square root ``q`` of ``P(x,0)``. When ``q`` has simple
    roots, each root is a node exactly when the t^2 coefficient of P does not
    vanish there.
    """

    certificate: Poly
    simple_roots: bool
    all_nodes: bool | None
    node_count: int | None


def node_profile(g: SpectralGerm) -> NodeProfile | None:
    if g.chart is not Chart.RAMIFIED or g.linearization is not Linearization.POSITIVE:
        return None
    m = w_membership(g, WMINUS)
    if not m.member:
        return None
    q = m.certificate
    if not squarefree(q):
        return NodeProfile(q, False, None, None)
    # P = q(x)^2 + t^2 h(x) + O(t^4); at a simple root the quadratic part is
    # q'(l)^2 (x-l)^2 + h(l) t^2, a node iff h(l) != 0
    h = build_spectral_polynomial(g).t_coefficient(2)
    nodes = poly_gcd(q, h).is_constant
    return NodeProfile(q, True, nodes, int(q.degree) if nodes else None)


@dataclass(frozen=True)
class SpectralCurveReport:
    spectral_polynomial: BiPoly
    smooth_on_fiber: bool
    singular_fiber_gcd: Poly
    fixed_point_count_on_fiber: object
    node_certificate: NodeProfile | None = None

    def __post_init__(self):
        if self.smooth_on_fiber != self.singular_fiber_gcd.is_constant:
            raise InternalInvariantError("smoothness flag disagrees with the fiber gcd")


def spectral_report(g: SpectralGerm) -> SpectralCurveReport:
    P = build_spectral_polynomial(g)
    smooth, witness = fiber_singularity_test(P)
    fixed = involution_fixed_points_on_fiber(g) if g.chart is Chart.RAMIFIED else None
    return SpectralCurveReport(P, smooth, witness, fixed, node_profile(g))


# --------------------------------------------------------------------------
# genus bookkeeping

@dataclass(frozen=True)
class Scenario:
    kind: str
    k_p: int | None = None

    _KINDS = ("anti_symmetric", "anti_alternating", "invariant_max", "invariant_tau")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown scenario {self.kind!r}")
        if (self.kind == "invariant_tau") != (self.k_p is not None):
            raise ValueError("k_p is required for invariant_tau and only there")

    @property
    def label(self) -> str:
        names = {"anti_symmetric": "AntiSymmetric", "anti_alternating": "AntiAlternating",
                 "invariant_max": "InvariantMax", "invariant_tau": "InvariantTau"}
        base = names[self.kind]
        return f"{base}({self.k_p})" if self.k_p is not None else base


ANTI_SYMMETRIC = Scenario("anti_symmetric")
ANTI_ALTERNATING = Scenario("anti_alternating")
INVARIANT_MAX = Scenario("invariant_max")


def invariant_tau(k_p: int) -> Scenario:
    return Scenario("invariant_tau", k_p)


@dataclass(frozen=True)
class GenusLedger:
    g_spectral: int
    deg_ram_spectral: int
    g_quotient_spectral: int
    prym_dim: int
    g_normalized: int | None = None
    g_normalized_quotient: int | None = None
    pic_degree: int = 0
    node_count: int | None = None
    extra: dict = field(default_factory=dict)


def spectral_genus(deg_L: int, r: int, g: int) -> int:
    """Genus of a smooth rank-r spectral cover in a line bundle of degree deg_L."""
    return deg_L * r * (r - 1) // 2 + r * (g - 1) + 1


def _exact_half(value: int, what: str, denom: int = 2) -> int:
    q, rem = divmod(value, denom)
    if rem:
        raise InternalInvariantError(f"{what}: {value} is not divisible by {denom}")
    return q


def genus_ledger(c: CoverData, r: int, scenario: Scenario) -> GenusLedger:
    if isinstance(r, bool) or not isinstance(r, int) or r < 1:
        raise InadmissibleInput(f"rank must be a positive integer, got {r!r}")
    gx, n = c.g_X, c.n
    g_spec = spectral_genus(2 * gx - 2, r, gx)
    deg_ram = r * (r - 1) * (2 * gx - 2)
    m = deg_ram // 2
    kind = scenario.kind

    if kind == "anti_symmetric":
        # the whole fiber over each of the 2n ramification points is fixed
        g_quot = _exact_half(g_spec + 1 - r * n, "quotient genus")
        return GenusLedger(g_spec, deg_ram, g_quot, g_spec - g_quot, pic_degree=m)

    if kind == "anti_alternating":
        if r % 2 and n > 0:
            raise ParityError(f"odd rank {r} with n={n}: no alternating bundles exist")
        nodes = r * n
        g_norm = g_spec - nodes
        g_norm_quot = _exact_half(g_norm + 1, "normalized quotient genus")
        return GenusLedger(
            g_spec, deg_ram, g_norm_quot, g_norm - g_norm_quot,
            g_normalized=g_norm, g_normalized_quotient=g_norm_quot,
            pic_degree=m, node_count=nodes,
        )

    if kind == "invariant_max":
        k = 0 if r % 2 == 0 else n
        g_quot = _exact_half(g_spec + 1 - k, "quotient genus")
        return GenusLedger(g_spec, deg_ram, g_quot, g_quot, pic_degree=m, extra={"fixed_points": 2 * k})

    k_p = scenario.k_p
    if n < 1:
        raise InadmissibleInput("a typed invariant locus needs a ramified cover")
    if not 0 <= k_p <= r // 2:
        raise InadmissibleInput(f"k_p={k_p} must lie in 0..{r // 2}")
    eps = r % 2
    mult = r - 2 * k_p
    drop = mult * (mult - 1) // 2
    g_norm = g_spec - drop
    fixed = mult + eps * (2 * n - 1)
    g_hat = _exact_half(2 * g_norm + 2 - fixed, "quotient of the normalization", 4)
    return GenusLedger(
        g_spec, deg_ram, g_hat, g_hat,
        g_normalized=g_norm, g_normalized_quotient=g_hat,
        pic_degree=m, extra={"genus_drop": drop, "fixed_points": fixed},
    )


def g_hat_y_closed_form(c: CoverData, r: int, k_p: int) -> int:
    eps = r % 2
    return r * r * (c.g_Y - 1) + 1 + _exact_half((2 * c.n - 1) * (r * r - eps), "closed form", 4) + k_p * (r - k_p)


def quotient_genus_over_base(c: CoverData, r: int) -> int:
    """Second route for the symmetric quotient: a spectral cover of Y twisted by K_Y(Delta)."""
    return spectral_genus(2 * c.g_Y - 2 + c.n, r, c.g_Y)
