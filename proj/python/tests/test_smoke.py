import pytest

import pinf


def test_series_arithmetic_and_inverse():
    a = pinf.Series.parse("1 - x0 - x1")
    inv = a.inverse()
    assert inv * a == pinf.Series.parse("1")
    # Coefficients of (1 - x0 - x1)^-1 count words.
    assert inv.coefficient([0, 1, 1]) == "1"
    assert pinf.Series.parse("(1 - x0)^-1").dim == 1
    assert pinf.Series.parse("x0*x1 + x1").transduce(1) == pinf.Series.parse("x0 + 1")


def test_series_json_round_trip():
    a = pinf.Series.parse("(1 - 2*x0*x1)^-1 + x1")
    assert pinf.Series.from_json(a.to_json()) == a


def test_skew_quotient():
    e = pinf.SkewElement.parse("e")
    assert e.in_ideal()
    assert not pinf.SkewElement.parse("1").in_ideal()
    a = pinf.SkewElement.parse("y0*x0")
    assert a.equal_in_quotient(pinf.SkewElement.parse("1 - y1*x1"))


def test_leavitt_normal_form():
    a = pinf.LeavittElement.parse("y2*x2")
    assert a.normal_form() == pinf.LeavittElement.parse("1 - y1*x1")
    assert pinf.LeavittElement.parse("x1*y2").is_zero()


def test_certificates():
    cert = pinf.v_certificate("y1*x2")
    assert (cert["beta"], cert["gamma"]) == ("x1", "y2")
    assert pinf.verify_certificate(cert)[0]
    cert["beta"] = "0"
    assert not pinf.verify_certificate(cert)[0]
    t = pinf.t_certificate("y0*y1*(1 - x0)^-1 + e")
    assert pinf.verify_certificate(t)[0]


def test_k0_and_realize():
    g = pinf.k0("I | 3I = I")
    assert g["invariant_factors"] == [2]
    assert g["generators"] == {"I": [1]}
    out = pinf.realize(2, 4, 2)
    assert out["report"]["all_pass"]
    bad = pinf.realize(2, 4, 2, tamper=True)
    assert not bad["report"]["all_pass"]


def test_errors():
    with pytest.raises(pinf.ParseError):
        pinf.Series.parse("x0 +")
    with pytest.raises(pinf.MathError):
        pinf.Series.parse("x0").inverse()
    with pytest.raises(ValueError):
        pinf.realize(2, 4, 1)


def test_cli_and_acceptance():
    code, out, _ = pinf.run(["k0", "group", "I | 4I = I"])
    assert code == 0 and "3" in out
    results = pinf.acceptance(only=[1, 12])
    assert [r["id"] for r in results] == [1, 12]
    assert all(r["pass"] for r in results)
