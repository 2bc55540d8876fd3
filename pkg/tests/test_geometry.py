from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from _oracles import ci_chern_numbers
from bgcert.errors import (
    BetaOutOfRange,
    ConfigError,
    InconsistentGeometry,
    NegativeLinearSystem,
    NonIntegralGeometry,
    OddDegree,
    UnknownPreset,
)
from bgcert.geometry import (
    CurveBound,
    PolarizedCY3,
    castelnuovo_check,
    castelnuovo_range,
    check_h_assumption,
    check_h_assumption_even,
    default_chi_min,
    derive_dimH,
    from_preset,
    geometry_from_config,
    load_geometry_config,
)

# Geometries generated through the Riemann-Roch identity: chi(O(H)) = chi,
# c2XH = 12 chi - 2d always gives a valid record.
geometries = st.builds(
    lambda d, chi: PolarizedCY3(d, 12 * chi - 2 * d, chi - 1),
    st.integers(1, 40),
    st.integers(1, 25),
)


# --- presets against the ambient total-Chern-class oracle ------------------------

@pytest.mark.parametrize(
    "name,ambient,degrees,known",
    [
        ("quintic", 4, [5], True),
        ("ci24", 5, [2, 4], False),
        ("ci223", 6, [2, 2, 3], False),
    ],
)
def test_presets_match_complete_intersection_oracle(name, ambient, degrees, known):
    d, c2xh = ci_chern_numbers(ambient, degrees)
    geom = from_preset(name)
    assert geom.d == d
    assert geom.c2XH == c2xh
    # hyperplane sections: chi(O(1)) equals h^0(P^n, O(1)) = n + 1
    assert Q(d, 6) + Q(c2xh, 12) == ambient + 1
    assert geom.dimH == ambient
    assert geom.castelnuovo_known is known


def test_preset_values_frozen():
    assert from_preset("quintic") == PolarizedCY3(5, 50, 4, True)
    assert from_preset("ci24") == PolarizedCY3(8, 56, 5, False)
    assert from_preset("ci223") == PolarizedCY3(12, 60, 6, False)


def test_unknown_preset():
    with pytest.raises(UnknownPreset):
        from_preset("sextic")


# --- derive_dimH -------------------------------------------------------------------

def test_derive_dimh_examples():
    assert derive_dimH(5, 50) == 4
    assert derive_dimH(12, 60) == 6
    with pytest.raises(NonIntegralGeometry):
        derive_dimH(5, 49)
    with pytest.raises(NegativeLinearSystem):
        derive_dimH(6, -12)  # chi(O(H)) = 0
    with pytest.raises(ValueError):
        derive_dimH(0, 50)


@given(geometries)
def test_riemann_roch_consistency_invariant(geom):
    assert derive_dimH(geom.d, geom.c2XH) == geom.dimH
    assert geom.chi_OH == geom.dimH + 1


def test_explicit_dimh_mismatch_is_error():
    with pytest.raises(InconsistentGeometry):
        PolarizedCY3(5, 50, 3)
    assert PolarizedCY3.derive(5, 50).dimH == 4


# --- hypothesis predicates ----------------------------------------------------------

def test_h_assumption_table():
    assert check_h_assumption(from_preset("quintic"))  # 4 >= 17/6
    assert not check_h_assumption(from_preset("ci24"))  # 5 < 19/3
    assert not check_h_assumption(from_preset("ci223"))
    boundary = PolarizedCY3(6, 48, 4)  # threshold is exactly 4
    assert check_h_assumption(boundary)


def test_h_assumption_even_table():
    assert check_h_assumption_even(from_preset("ci24"))  # 5 >= 7/3
    assert check_h_assumption_even(from_preset("ci223"))  # 6 >= 5, boundary-ish
    with pytest.raises(OddDegree):
        check_h_assumption_even(from_preset("quintic"))


# --- castelnuovo range and check ----------------------------------------------------

def test_castelnuovo_range_examples():
    assert castelnuovo_range(from_preset("quintic")) == [1, 2]
    assert castelnuovo_range(from_preset("ci24")) == [1, 2, 3]
    assert castelnuovo_range(PolarizedCY3(2, 8, 0)) == []


@given(geometries)
def test_castelnuovo_range_length_and_bounds(geom):
    betas = castelnuovo_range(geom)
    assert len(betas) == -(-geom.d // 2) - 1
    assert betas == sorted(betas)
    assert all(1 <= b and 2 * b < geom.d for b in betas)


def test_castelnuovo_check_examples():
    quintic = from_preset("quintic")
    assert castelnuovo_check(quintic, CurveBound(1, 0))
    assert castelnuovo_check(quintic, CurveBound(2, -1))
    assert not castelnuovo_check(quintic, CurveBound(2, -2))
    with pytest.raises(BetaOutOfRange):
        castelnuovo_check(quintic, CurveBound(3, 0))


@given(geometries)
def test_default_chi_min_is_smallest_passing_integer(geom):
    for beta in castelnuovo_range(geom):
        chi = default_chi_min(geom, beta)
        assert castelnuovo_check(geom, CurveBound(beta, chi))
        assert not castelnuovo_check(geom, CurveBound(beta, chi - 1))


def test_curve_bound_validation():
    with pytest.raises(ValueError):
        CurveBound(0, 1)


# --- config parsing -------------------------------------------------------------------

def test_geometry_from_config_minimal():
    geom = geometry_from_config({"d": 5, "c2h": 50})
    assert geom == PolarizedCY3(5, 50, 4, False)


def test_geometry_from_config_full():
    geom = geometry_from_config({"d": 5, "c2h": 50, "dimh": 4, "castelnuovo_known": True})
    assert geom.castelnuovo_known


def test_geometry_from_config_reports_offending_field():
    with pytest.raises(ConfigError) as err:
        geometry_from_config({"d": 5})
    assert err.value.field == "c2h"
    with pytest.raises(ConfigError) as err:
        geometry_from_config({"d": 5, "c2h": 50, "degree": 5})
    assert err.value.field == "degree"
    with pytest.raises(ConfigError) as err:
        geometry_from_config({"d": "five", "c2h": 50})
    assert err.value.field == "d"
    with pytest.raises(ConfigError) as err:
        geometry_from_config({"d": 5, "c2h": 50, "castelnuovo_known": "maybe"})
    assert err.value.field == "castelnuovo_known"


def test_load_geometry_config_json(tmp_path):
    path = tmp_path / "geom.json"
    path.write_text('{"d": 5, "c2h": 50, "castelnuovo_known": true}')
    assert geometry_from_config(load_geometry_config(path)) == PolarizedCY3(5, 50, 4, True)


def test_load_geometry_config_key_value(tmp_path):
    path = tmp_path / "geom.cfg"
    path.write_text("# the quintic\nd = 5\nc2h: 50\ncastelnuovo_known = yes\n")
    assert geometry_from_config(load_geometry_config(path)) == PolarizedCY3(5, 50, 4, True)


def test_load_geometry_config_bad_line(tmp_path):
    path = tmp_path / "geom.cfg"
    path.write_text("d 5\n")
    with pytest.raises(ConfigError):
        load_geometry_config(path)
