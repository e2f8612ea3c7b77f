import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

import prym_hitchin.moduli_tables as mt
from prym_hitchin.cover_geometry import CoverData
from prym_hitchin.errors import (
    EmptyLocus,
    GridTooLarge,
    IdentityFailure,
    InadmissibleInput,
    ParityViolation,
    UnknownScenario,
)
from prym_hitchin.moduli_tables import (
    EMPTY,
    IRREDUCIBLE,
    ComponentScenario,
    Grid,
    InvariantType,
    SignType,
    component_oracle,
    dim_anti_invariant,
    dim_invariant_locus,
    dim_report,
    dim_w_space,
    dim_w_space_by_sections,
    enumerate_types,
    identity_sweep,
    p2_orbits_rank2,
    tau_type,
)
from prym_hitchin.spectral_model import WMAX, WMINUS, WPLUS, wtau

C = CoverData(2, 1)


def test_invariant_locus_examples():
    t = InvariantType(2, (1, 1))
    assert dim_invariant_locus(C, t, 0) == 7
    assert dim_invariant_locus(C, t, 0, fixed_det=True) == 5
    with pytest.raises(ParityViolation):
        dim_invariant_locus(C, InvariantType(2, (1, 0)), 0)
    with pytest.raises(InadmissibleInput):
        dim_invariant_locus(C, InvariantType(2, (1, 1, 0, 0)), 0)


def test_anti_invariant_examples():
    assert dim_anti_invariant(C, 2, "plus") == 7
    assert dim_anti_invariant(C, 2, "minus") == 5
    with pytest.raises(EmptyLocus):
        dim_anti_invariant(C, 3, "minus")


def test_w_space_examples():
    assert dim_w_space(C, 2, WPLUS) == 7
    assert dim_w_space(C, 2, WMINUS) == 5
    assert dim_w_space(C, 2, WMAX) == 7
    assert dim_w_space(C, 2, wtau(0)) == 6
    t, d = tau_type(C, 2, 0)
    assert dim_invariant_locus(C, t, d) == 6


def test_enumeration_examples():
    assert [t.ks for t in enumerate_types(CoverData(2, 1), 2, 0)] == [(0, 0), (0, 2), (1, 1)]
    assert len(enumerate_types(CoverData(2, 2), 3, 0, maximal_only=True)) == 4
    assert [t.ks for t in enumerate_types(CoverData(2, 1), 2, 0, maximal_only=True)] == [(1, 1)]
    with pytest.raises(InadmissibleInput):
        enumerate_types(CoverData.of(2, 0), 2)


@pytest.mark.parametrize("r", [3, 5, 7])
@pytest.mark.parametrize("n", range(1, 7))
def test_maximal_type_count(r, n):
    assert len(enumerate_types(CoverData(2, n), r, 0, maximal_only=True)) == 2 ** (2 * (n - 1))


@given(st.integers(1, 6), st.lists(st.integers(0, 6), min_size=2, max_size=6))
def test_type_canonical_form(r, ks):
    ks = [min(k, r) for k in ks]
    t = InvariantType(r, ks)
    flipped = InvariantType(r, [r - k for k in ks])
    assert t == flipped == t.canonical()
    assert t.ks <= tuple(r - k for k in t.ks)


@given(st.integers(1, 4), st.integers(1, 3), st.integers(0, 1))
def test_enumeration_has_no_duplicates(r, n, d):
    types = enumerate_types(CoverData(2, n), r, d)
    assert len({t.ks for t in types}) == len(types)
    assert all(t.parity_ok(d) for t in types)
    # brute force over raw vectors gives the same set of canonical classes
    raw = {InvariantType(r, ks).ks for ks in itertools.product(range(r + 1), repeat=2 * n) if (sum(ks) - d) % 2 == 0}
    assert raw == {t.ks for t in types}


def test_sign_type_canonical():
    assert SignType((-1, 1)) == SignType((1, -1))
    assert SignType((1, 1)).signs == (-1, -1)
    with pytest.raises(InadmissibleInput):
        SignType((0, 1))


@pytest.mark.parametrize("n,components", [(1, 2), (2, 8), (3, 32)])
def test_orbit_examples(n, components):
    oc = p2_orbits_rank2(n)
    assert oc.orbits == 2 and oc.components == components


@pytest.mark.parametrize("n", range(1, 7))
def test_orbit_structure(n):
    oc = p2_orbits_rank2(n)
    assert oc.orbits == 2
    assert oc.components == 2 ** (2 * n - 1)
    assert oc.group_order == 2 ** (2 * n - 1)
    assert oc.effective_order == 2 ** (2 * n - 2)
    assert oc.free and sum(oc.orbit_sizes) == oc.components


def test_component_oracle_examples():
    assert component_oracle(ComponentScenario("anti_invariant", "plus", True)) is IRREDUCIBLE
    assert component_oracle(ComponentScenario("anti_invariant", "minus", True, r=4)).count == 2
    assert component_oracle(ComponentScenario("anti_invariant", "minus", True, r=3)) is EMPTY
    assert component_oracle(ComponentScenario("fixed_det_anti_invariant", "minus", True, r=2, n=3)).count == 32
    with pytest.raises(UnknownScenario):
        component_oracle(ComponentScenario("fixed_det_anti_invariant", "minus", True, r=4, n=1))


@given(st.integers(0, 6), st.integers(0, 6), st.integers(1, 8))
def test_w_tau_two_routes(g_Y, n, r):
    if n == 0 or 2 * g_Y - 1 + n < 2:
        return
    c = CoverData(g_Y, n)
    for k in range(r // 2 + 1):
        assert dim_w_space(c, r, wtau(k)) == dim_w_space_by_sections(c, r, wtau(k))


def test_full_sweep_passes():
    rep = identity_sweep(Grid())
    assert rep.passed and rep.cells == 240 and not rep.skipped_cells
    counts = rep.counts()
    assert all(counts[f] > 0 for f in mt.FAMILIES)


def test_sweep_skips_inadmissible_cells():
    rep = identity_sweep(Grid(g_Y=(0, 1), n=(0, 3), r=(1, 2)))
    assert (0, 0, 1) in rep.skipped_cells and (1, 0, 2) in rep.skipped_cells
    assert rep.passed


def test_sweep_parallel_matches_serial():
    grid = Grid(g_Y=(1, 3), n=(1, 3), r=(1, 6))
    assert identity_sweep(grid, jobs=3).checks == identity_sweep(grid).checks


def test_grid_limit(monkeypatch):
    monkeypatch.setenv(mt.MAX_GRID_ENV, "10")
    with pytest.raises(GridTooLarge):
        identity_sweep(Grid())


def test_sweep_reports_failing_cell(monkeypatch):
    real = mt.dim_anti_invariant

    def broken(c, r, kind="plus"):
        return real(c, r, kind) + (1 if (c.g_Y, c.n, r, kind) == (2, 1, 2, "plus") else 0)

    monkeypatch.setattr(mt, "dim_anti_invariant", broken)
    with pytest.raises(IdentityFailure) as info:
        identity_sweep(Grid())
    ch = info.value.check
    assert (ch.family, ch.g_Y, ch.n, ch.r) == ("w_plus_eq_u_plus", 2, 1, 2)


def test_dim_report_all():
    rep = dim_report(C, 2)
    assert rep.passed
    assert rep.dims["W+"] == rep.dims["U+"] == rep.dims["P+"] == 7
    assert rep.dims["W-"] == rep.dims["U-"] == rep.dims["P-"] == 5
    assert rep.dims["Wtau(0)"] == rep.dims["Utau(0)"] == rep.dims["ghatY(0)"] == 6


def test_dim_report_selection():
    assert "W-" not in dim_report(C, 3).dims
    with pytest.raises(EmptyLocus):
        dim_report(C, 3, space=None, kind="minus")
    rep = dim_report(C, 2, space=None, ks=(1, 1), fixed_det=True)
    assert rep.dims == {"SU^sigma,tau": 5}
