import math

import numpy as np
import pytest

import esomit

MHz = 1e6


def test_catalog():
    names = esomit.preset_names()
    assert len(names) == 16
    assert "es2-ep2" in names
    info = esomit.preset_info("es2-ep2")
    assert info["params"]["J"] == pytest.approx(1 * MHz)


def test_eigen_coalescence_on_surface():
    J = esomit.es_coupling(1.0, 1 * MHz, 1 * MHz)
    e = esomit.eigen_split(J, 1.0, 1 * MHz, 1 * MHz, 1.5)
    assert e["omega_plus"] == 0.0
    assert e["kappa_plus"] == 0.0


def test_spectrum_shape_and_consistency():
    m = esomit.Model("es2-ep2")
    s = m.spectrum((-1 * MHz, 1 * MHz, 21))
    assert s["T"].shape == (21,)
    np.testing.assert_allclose(s["T"], np.abs(s["t"]) ** 2, rtol=1e-12)
    t0 = m.transmission(0.0)
    assert abs(t0 - s["t"][10]) <= 1e-12 * abs(t0)
    assert math.isfinite(m.group_delay(0.5 * MHz))


def test_overrides_and_classification():
    m = esomit.Model("es2-ep2", {"J": "1.5 MHz"})
    assert m.params["J"] == pytest.approx(1.5 * MHz)
    assert m.classify()["kind"] == "Omega-Split"
    assert esomit.Model("es2-ep2").classify()["kind"] == "ES-Kind2"


def test_steady_state_and_reports():
    m = esomit.Model("baseline")
    ss = m.steady_state()
    assert ss["x_bar"] > 0
    assert len(ss["all_roots"]) >= 1
    r = m.crosscheck((-1 * MHz, 1 * MHz, 5))
    assert r["verdict"] in ("PASS", "FAIL")
    assert esomit.Model("es2-ep2").check_ranges()["J_in_range"]


def test_errors_carry_kind():
    with pytest.raises(esomit.EsomitError) as info:
        esomit.Model("nope")
    assert info.value.kind == "UnknownPreset"
    with pytest.raises(ValueError):
        esomit.Model("es2-ep2", {"t0": "2"})
