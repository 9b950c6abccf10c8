"""Smoke tests for the _crl extension module."""

import json
import sys

import crl


def test_sample_and_eval():
    p = crl.sample_uni(7, master_seed=1, stream_index=0)
    assert p.degree == 7
    s = p.sign_string()
    assert len(s) == 8 and set(s) <= {"+", "-"}
    q = crl.BernoulliPolyUni(s)
    assert q.sign_string() == s
    assert abs(p(1.0) - sum(1 if c == "+" else -1 for c in s)) < 1e-12


def test_common_root():
    p = crl.BernoulliPolyUni("++")
    q = crl.BernoulliPolyUni("+-")
    assert crl.common_root_exists(p, p)
    assert not crl.common_root_exists(p, q)


def test_atom_probability():
    zero_count, m, prob = crl.atom_probability([1, 1, 1, 1])
    assert (zero_count, m) == ("6", 4)
    assert abs(prob - 0.375) < 1e-15
    assert abs(crl.walk_return_prob(6) - 5 / 16) < 1e-15
    report = json.loads(crl.bound_report_json([1, -1, 2, -2]))
    assert report["couples"] == 8


def test_dunomials():
    d = crl.Dunomial([1, 0], [0, 1], -1)
    assert d.order == 2 and d.degree == 1
    r = crl.reduce(crl.Dunomial([2, 1], [1, 1], -1))
    assert r.alpha == [1, 0] and r.beta == [0, 0]
    assert len(crl.enumerate_reduced_by_order(2, 5)) == 20
    assert crl.count_satisfied_numeric([1 + 0j, 1 + 0j], 2) == 15
    assert crl.r_of_x_numeric([2 + 0j, 0.5 + 0j], 8) == 2


def test_classify():
    classes = json.loads(crl.classify_json("++", "++"))
    assert classes[0]["class"] == "RationalPM1"
    zone = json.loads(crl.classify_point_json([1 + 0j, 2 + 0j], 4))
    assert zone["zone"] == "Z2"


def test_estimate_determinism():
    a = crl.estimate_json(1, 15, 2, 2000, 7)
    b = crl.estimate_json(1, 15, 2, 2000, 7)
    assert a == b
    r = json.loads(a)
    assert r["hits"] + r["misses"] + r["undecided"] == 2000
    ex = json.loads(crl.exact_json(1))
    assert ex["p_exact"] == "1/2"


def test_resultant():
    assert crl.resultant_str([-1, 1], [1, 1]) == "2"
    assert crl.resultant_str([-1, 0, 1], [-1, 1]) == "0"


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"ok {t.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    sys.exit(main())
