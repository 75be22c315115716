import stonework as sw
import pytest


def test_spectrum_and_duality():
    assert sw.spectrum(["g0", "g1"], ["g0 & g1"]) == ["00", "01", "10"]
    report = sw.check_duality(["a", "b", "c"], ["a & b"])
    assert report["bijective"] and report["points"] == 6


def test_terms_round_trip():
    assert sw.normalize_term(sw.normalize_term("~g0 & g1 | g2")) == sw.normalize_term("~g0 & g1 | g2")
    with pytest.raises(sw.ParseError):
        sw.normalize_term("g0 &")


def test_witnesses():
    assert all(sw.llpo_split(n)["all_ok"] for n in range(1, 4))
    w = sw.wlpo_counterexample("g0 | g1")
    assert not any(w["beta"]) and sum(w["gamma"]) == 1
    assert w["value_beta"] or w["value_beta"] == w["value_gamma"]


def test_nearness():
    words = [format(k, "03b") for k in range(8)]
    for s in words:
        for t in words:
            assert sw.near(3, s, t) == (abs(int(s, 2) - int(t, 2)) <= 1)
            assert sw.near_companion(3, s, t) == sw.near(3, s, t)


def test_interval_image():
    image, complement = sw.decidable_image(["00", "11"])
    assert image == "[0/2^0, 1/2^2] u [3/2^2, 1/2^0]"
    assert complement == "(1/2^2, 3/2^2)"


def test_cohomology():
    interval = sw.interval_cohomology(4)
    assert interval["dims"] == [1, 16, 46, 106]
    assert interval["h0"]["rank"] == 1 and interval["h1"]["rank"] == 0
    circle = sw.circle_cohomology(3)
    assert circle["h1"]["text"] == "Z"


def test_snf():
    s = sw.snf([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], 3)
    assert s["diagonal"] == [2, 6, 12]
    big = sw.snf([[10**30, 0], [0, 1]], 2)
    assert big["diagonal"] == [1, 10**30]


def test_cli_in_process():
    code, report = sw.run_json("cohomology", "circle", "--level", "3")
    assert code == 0
    assert report["result"]["h1"]["rank"] == 1
    code, _, _ = sw.run(["cohomology", "sphere", "--level", "2"])
    assert code == 2
    with pytest.raises(sw.CapExceeded):
        sw.spectrum([f"g{i}" for i in range(25)])
