"""Seeded randomized property suites.

Each trial draws from its own generator seeded by ``(seed, suite, index)``, so
results do not depend on how trials are split across worker processes. A
failing trial is recorded as an analyze task that reproduces it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .cover_geometry import Linearization
from .errors import InternalInvariantError, NotASquare, PrymHitchinError
from .exact_algebra import (
    BiPoly,
    Poly,
    char_poly,
    determinant,
    evaluate_at_matrix,
    pfaffian,
    poly_square_root,
    radical,
    rational_det,
    squarefree,
    vanishing_order,
)
from .higgs_local import (
    alternating_square_certificate,
    equivariance_parity_check,
    hitchin_map,
    random_alternating_constant,
    random_alternating_germ,
    random_antisymmetric,
    random_invariant_germ,
    random_invertible_antisymmetric,
    random_matrix,
    random_poly,
    random_symmetric_germ,
    vanishing_bound,
)
from .serialization import germ_out, higgs_out, matrix_out, poly_out
from .spectral_model import (
    FIBERWISE_IDENTITY,
    WMINUS,
    Chart,
    SpectralGerm,
    build_spectral_polynomial,
    fiber_singularity_test,
    involution_fixed_points_on_fiber,
    node_profile,
    two_equation_singular,
    w_membership,
)


@dataclass
class SuiteResult:
    name: str
    trials: int
    seed: int
    failures: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures


def trial_rng(seed: int, name: str, index: int) -> random.Random:
    return random.Random(f"{seed}:{name}:{index}")


def _nonzero_rat(rng: random.Random, bound: int = 5) -> Fraction:
    while True:
        q = Fraction(rng.randint(-bound, bound), rng.choice((1, 1, 2, 3)))
        if q:
            return q


def _parity_poly(rng: random.Random, degree: int, odd: bool, constant: Fraction | None = None) -> Poly:
    coeffs = [Fraction(rng.randint(-5, 5)) if (d % 2 == 1) == odd else 0 for d in range(degree + 1)]
    if constant is not None and not odd:
        coeffs[0] = constant
    return Poly(coeffs)


# ---- individual trials; each returns (ok, replay_task, info)

def _trial_cayley_hamilton(rng, max_dim=6, degree=2):
    r = rng.randint(1, max_dim)
    m = random_matrix(rng, r, rng.randint(0, degree))
    ok = evaluate_at_matrix(char_poly(m), m).is_zero
    return ok, {"kind": "matrix", "matrix": matrix_out(m), "ops": ["cayley_hamilton"]}, {"r": r}


def _trial_pfaffian_det(rng, max_dim=8, degree=2):
    r = 2 * rng.randint(1, max_dim // 2)
    m = random_antisymmetric(rng, r, rng.randint(0, degree))
    pf = pfaffian(m)
    ok = pf * pf == determinant(m)
    return ok, {"kind": "matrix", "matrix": matrix_out(m), "ops": ["pfaffian", "det"]}, {"r": r}


def _trial_square(rng, max_degree=6):
    p = random_poly(rng, rng.randint(0, max_degree))
    if p.is_zero:
        p = Poly([1])
    sq = p * p
    task = {"kind": "poly", "poly": poly_out(sq), "ops": ["square_root"]}
    try:
        q = poly_square_root(sq)
    except NotASquare:
        return False, task, {}
    return (q == p or q == -p) and q.leading > 0, task, {}


def _trial_non_square(rng, max_degree=6):
    # p with p(0) != 0 and deg p >= 2: p^2 + t^(deg p + 1) keeps degree and
    # leading term but cannot be a square
    d = rng.randint(2, max_degree)
    p = Poly([_nonzero_rat(rng)] + [Fraction(rng.randint(-5, 5)) for _ in range(d - 1)] + [_nonzero_rat(rng)])
    bumped = p * p + Poly.monomial(d + 1)
    task = {"kind": "poly", "poly": poly_out(bumped), "ops": ["square_root"]}
    try:
        q = poly_square_root(bumped)
    except NotASquare:
        return True, task, {}
    return False, task, {"root": poly_out(q)}


def _trial_certificate(rng, dims=(2, 4, 6, 8)):
    r = rng.choice(dims)
    J = None if rng.random() < 0.5 else random_invertible_antisymmetric(rng, r)
    A, J = random_alternating_constant(rng, r, J)
    task = {"kind": "higgs", "higgs": {"r": r, "phi": matrix_out(A), "structure": {"kind": "alternating", "J": matrix_out(J)}}}
    try:
        q = alternating_square_certificate((A, J))
    except InternalInvariantError:
        return False, task, {}
    # independent check: q(0)^2 = det(A) by Gaussian elimination
    ok = q * q == char_poly(A).at_t0() and q[0] ** 2 == rational_det(A)
    return ok, task, {"r": r}


def _trial_parity(rng, structure="symmetric"):
    if structure == "invariant":
        r = rng.randint(1, 6)
        h = random_invariant_germ(rng, r, rng.randint(0, r))
    else:
        r = rng.choice((2, 4, 6))
        gen = random_symmetric_germ if structure == "symmetric" else random_alternating_germ
        h = gen(rng, r, degree=rng.randint(1, 3))
    task = {"kind": "higgs", "higgs": higgs_out(h)}
    try:
        equivariance_parity_check(h)
    except InternalInvariantError:
        return False, task, {}
    return True, task, {"r": r}


def _trial_vanishing(rng, max_dim=6):
    r = rng.randint(1, max_dim)
    k = rng.randint(0, r // 2)
    h = random_invariant_germ(rng, r, k, degree=rng.randint(r, r + 2))
    task = {"kind": "higgs", "higgs": higgs_out(h)}
    orders = tuple(vanishing_order(c) for c in hitchin_map(h).components)
    bound = vanishing_bound(r, k)
    ok = all(o >= b for o, b in zip(orders, bound))
    sharp = [i for i in range(2 * k + 1, r + 1) if orders[i - 1] == bound[i - 1]]
    return ok, task, {"sharp": sharp}


def generic_negative_germ(rng: random.Random, r: int, degree: int = 4) -> SpectralGerm:
    """Negative-lift germ whose even-index sections have nonzero constant term."""
    secs = []
    for i in range(1, r + 1):
        if i % 2:
            secs.append(_parity_poly(rng, degree, odd=True))
        else:
            secs.append(_parity_poly(rng, degree, odd=False, constant=_nonzero_rat(rng)))
    return SpectralGerm(r, tuple(secs), Chart.RAMIFIED, Linearization.NEGATIVE)


def random_positive_germ(rng: random.Random, r: int, degree: int = 4) -> SpectralGerm:
    secs = tuple(_parity_poly(rng, degree, odd=False) for _ in range(r))
    return SpectralGerm(r, secs, Chart.RAMIFIED, Linearization.POSITIVE)


def _trial_fixed_points(rng, max_rank=8):
    r = rng.randint(1, max_rank)
    neg = generic_negative_germ(rng, r)
    pos = random_positive_germ(rng, r)
    count = involution_fixed_points_on_fiber(neg)
    ok = count == r % 2 and involution_fixed_points_on_fiber(pos) is FIBERWISE_IDENTITY
    return ok, {"kind": "germ", "germ": germ_out(neg)}, {"r": r, "count": count}


def random_fiber_bipoly(rng: random.Random, max_x: int = 5, max_t: int = 4) -> BiPoly:
    """Monic in x; about half the draws are forced to be singular on t = 0."""
    d = rng.randint(1, max_x)
    if d >= 2 and rng.random() < 0.5:
        lam = Fraction(rng.randint(-3, 3), rng.choice((1, 2)))
        lin = BiPoly([Poly([-lam]), Poly([1])])
        a = BiPoly([Poly([rng.randint(-3, 3)]) for _ in range(d - 2)] + [Poly([1])])
        c = BiPoly([Poly([rng.randint(-3, 3)]) for _ in range(d - 1)])
        tail = BiPoly([random_poly(rng, max(0, max_t - 2), 3) for _ in range(d)])
        t1 = Poly([0, 1])
        t2 = Poly([0, 0, 1])
        return lin * lin * a + lin * c * t1 + tail * t2
    cs = [random_poly(rng, rng.randint(0, max_t), 3) for _ in range(d)]
    return BiPoly(cs + [Poly([1])])


def _trial_smoothness(rng, max_x=5, max_t=4):
    P = random_fiber_bipoly(rng, max_x, max_t)
    smooth, _ = fiber_singularity_test(P)
    r = int(P.degree_x)
    germ = SpectralGerm(r, tuple(P[r - i] for i in range(1, r + 1)), Chart.ORDINARY)
    ok = smooth == (not two_equation_singular(P))
    return ok, {"kind": "germ", "germ": germ_out(germ)}, {"singular": not smooth}


def random_square_fiber_germ(rng: random.Random, half: int, degree: int = 4) -> tuple[SpectralGerm, Poly]:
    """Positive germ with ``P(x,0) = q(x)^2`` for a random squarefree monic q."""
    while True:
        q = Poly([Fraction(rng.randint(-4, 4)) for _ in range(half)] + [1])
        if squarefree(q):
            break
    r = 2 * half
    fiber = q * q
    secs = []
    for i in range(1, r + 1):
        higher = _parity_poly(rng, degree, odd=False)
        secs.append(Poly([fiber[r - i]]) + (higher - Poly([higher[0]])))
    return SpectralGerm(r, tuple(secs), Chart.RAMIFIED, Linearization.POSITIVE), q


def _trial_wminus_nodes(rng, max_rank=8):
    half = rng.randint(1, max_rank // 2)
    g, q = random_square_fiber_germ(rng, half)
    task = {"kind": "germ", "germ": germ_out(g), "spaces": ["WMinus"]}
    m = w_membership(g, WMINUS)
    smooth, witness = fiber_singularity_test(build_spectral_polynomial(g))
    ok = m.member and m.certificate == q and not smooth and witness == radical(m.certificate)
    prof = node_profile(g)
    return ok, task, {"nodes": prof.node_count if prof and prof.all_nodes else 0}


SUITES = {
    "cayley_hamilton": _trial_cayley_hamilton,
    "pfaffian_det": _trial_pfaffian_det,
    "square_root": _trial_square,
    "non_square": _trial_non_square,
    "alternating_certificate": _trial_certificate,
    "parity_symmetric": lambda rng: _trial_parity(rng, "symmetric"),
    "parity_alternating": lambda rng: _trial_parity(rng, "alternating"),
    "parity_invariant": lambda rng: _trial_parity(rng, "invariant"),
    "vanishing_orders": _trial_vanishing,
    "fixed_points": _trial_fixed_points,
    "smoothness": _trial_smoothness,
    "wminus_nodes": _trial_wminus_nodes,
}


def _run_one(args):
    name, seed, index, params = args
    rng = trial_rng(seed, name, index)
    fn = SUITES[name]
    try:
        ok, task, info = fn(rng, **params) if params else fn(rng)
    except PrymHitchinError as exc:
        return False, {"kind": "error", "error": type(exc).__name__, "message": str(exc)}, {}
    return ok, task, info


def run_suite(name: str, trials: int, seed: int = 42, jobs: int = 1, **params) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    args = [(name, seed, i, params) for i in range(trials)]
    if jobs > 1 and trials > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_run_one, args, chunksize=max(1, trials // (4 * jobs))))
    else:
        outcomes = [_run_one(a) for a in args]
    result = SuiteResult(name, trials, seed)
    for i, (ok, task, info) in enumerate(outcomes):
        if not ok:
            result.failures.append({"trial": i, "task": task})
        _accumulate(result.stats, name, info)
    return result


def _accumulate(stats: dict, name: str, info: dict) -> None:
    if name == "vanishing_orders":
        sharp = set(stats.get("sharp_indices", ()))
        sharp.update(info.get("sharp", ()))
        stats["sharp_indices"] = sorted(sharp)
    elif name == "fixed_points" and "r" in info:
        seen = stats.setdefault("counts_by_rank", {})
        seen[info["r"]] = sorted(set(seen.get(info["r"], [])) | {info["count"]})
    elif name == "smoothness":
        stats["singular"] = stats.get("singular", 0) + int(info.get("singular", False))
    elif name == "wminus_nodes":
        stats["nodes"] = stats.get("nodes", 0) + info.get("nodes", 0)
