import math

import mpmath
import pytest

import hyperratio as hr


def test_enclosure_arithmetic():
    s = hr.Enclosure(1, 2) + hr.Enclosure(3, 4)
    assert s.lo <= 4 <= s.hi and s.lo <= 6 <= s.hi
    with pytest.raises(hr.HyperratioError):
        hr.Enclosure(1, 1) / hr.Enclosure(-1e-300, 1e-300)


def test_bessel_i_ratio_against_mpmath():
    r = hr.bessel_i_ratio(1.0, 1.0)
    ref = float(mpmath.besseli(0, 1) / mpmath.besseli(1, 1))
    assert r.converged
    assert r.enclosure.contains(ref) or abs(r.enclosure.mid - ref) <= 4e-16 * ref


def test_kummer_ratio_against_mpmath():
    a, b, x = 1.3, 2.7, 3.1
    num = mpmath.gamma(a + 1) / mpmath.gamma(b + 1) * mpmath.hyp1f1(a + 1, b + 1, x)
    den = mpmath.gamma(a) / mpmath.gamma(b) * mpmath.hyp1f1(a, b, x)
    ref = float(num / den)
    r = hr.kummer_ratio(a, b, x)
    assert abs(r.enclosure.mid - ref) <= 1e-13 * ref


def test_pcf_ratio_against_mpmath():
    n, x = 2.0, 1.5
    ref = float(mpmath.pcfu(n - 1, x) / mpmath.pcfu(n, x))
    r = hr.pcf_ratio(n, x)
    assert abs(r.enclosure.mid - ref) <= 1e-13 * ref
    with pytest.raises(hr.HyperratioError):
        hr.pcf_ratio(0.4, 1.0)


def test_bounds_sandwich_oracle():
    e = hr.pcf_ratio(1.0, 0.3).enclosure
    assert hr.pcf.b21(1.0, 0.3) < e.lo and e.hi < hr.pcf.b12(1.0, 0.3)
    assert hr.evaluate_bound("pcf.b21", [1.0], 0.3) == hr.pcf.b21(1.0, 0.3)


def test_catalog_and_verify():
    ids = hr.bound_ids()
    assert "pcf.b03" in ids and "gauss.upper_H" in ids
    info = hr.bound_info("confluent.eta")
    assert info["side"] == "upper" and info["accuracy"] == (0, 2)
    rep = hr.verify_bound("pcf.b03", params=[[1.0], [3.0]], xs=[-5.0, 0.0, 5.0])
    assert rep["ok"] and rep["num_points"] == 6
    with pytest.raises(hr.HyperratioError):
        hr.bound_info("nosuch")


def test_riccati_instance():
    assert "pcf_b03" in hr.riccati_instances()
    assert hr.run_riccati("pcf_b03")["verdict"] == "PASS"


def test_cubic_root_pcf_origin():
    assert math.isclose(hr.cubic_nullcline_root(1.0, 0.0, "pcf"), 1.0, rel_tol=1e-15)
