import math

import pytest

import f2sumset as fs


def test_point_set_and_subspace():
    a = fs.PointSet(3, [0b000, 0b001, 0b010, 0b001])
    assert len(a) == 3
    assert 0b010 in a and 0b100 not in a
    assert a.elements() == [0, 1, 2]
    assert fs.PointSet.parse(a.to_text()) == a

    h = fs.Subspace.span([0b110, 0b011], 3)
    assert h.dim == 2 and 0b101 in h
    assert h.basis() == [0b101, 0b011]
    assert h.annihilator().dim == 1
    assert h.annihilator().annihilator() == h
    assert fs.coset_decompose(fs.PointSet(2, [0, 2]), fs.Subspace.span([1], 2)) == {0: 1, 2: 1}


def test_transform_and_spectrum():
    assert fs.wht([1.0, 1.0, 0.0, 0.0]) == [0.5, 0.0, 0.5, 0.0]
    s = fs.PointSet(2, [0, 1, 2])
    assert fs.walsh_coefficients(s) == [3, 1, 1, -1]
    assert fs.spectrum(s, 0.9).elements() == [0]
    with pytest.raises(ValueError):
        fs.wht([1.0, 2.0, 3.0])


def test_sumset_doubling_energy():
    a = fs.PointSet(3, [0b000, 0b001, 0b010])
    b = fs.PointSet(3, [0b000, 0b100])
    assert len(fs.sumset(a, b)) == 6
    d = fs.doubling(a, b)
    assert d["sumset_size"] == 6
    assert math.isclose(d["dbl"], math.sqrt(6))
    direct = fs.energy(a, b, method="direct")
    fourier = fs.energy(a, b)
    assert direct["count"] == fourier["count"]
    assert 0.0 <= fourier["omega"] <= 1.0
    assert fourier["omega"] >= 1.0 / d["dbl"] - 1e-12


def test_flatten_and_theorem4():
    a, b, planted = fs.generate("perturbed_subspace", 10, seed=4, dim=6, spread=3)
    k = math.ceil(fs.doubling(a, b)["dbl"])
    fa, fb, report = fs.flatten(a, b, k)
    trace = report["trace"]
    assert trace["m"] == len(trace["steps"]) == len(trace["k_sequence"]) - 1
    assert report["final_verdict"]["flat"]
    assert fs.check_flatness(fa, fb, 1 / math.sqrt(2 * report["j"]))["flat"]

    h, result = fs.theorem4(a, b, k)
    assert result["status"] == "VERIFIED"
    assert result["density_bound_ok"]
    assert result["geo_mean"] >= len(h) / (2 * k) - 1e-9
    assert planted.dim == 6


def test_errors():
    a = fs.PointSet(4, [0, 1, 2, 4, 8, 15])
    with pytest.raises(fs.PreconditionViolation):
        fs.theorem4(a, a, 1.0)
    with pytest.raises(ValueError):
        fs.check_flatness(a, a, 0.75)
    with pytest.raises(ValueError):
        fs.PointSet(3, [8])


def test_oracle_check_and_campaign():
    assert fs.oracle_check(trials=10, seed=2)["ok"]
    config = {"k_ladder": [2, 4], "kinds": ["coset_union"], "n_min": 8, "n_max": 9,
              "trials_per_cell": 2}
    csv1, rep1 = fs.campaign(config)
    csv2, _ = fs.campaign(config)
    assert csv1 == csv2
    assert csv1.splitlines()[0].startswith("seed,kind,k,trial,n,")
    assert len(rep1["rows"]) == 4
    assert all(r["status"] == "VERIFIED" for r in rep1["rows"])
