import json
from fractions import Fraction

import pytest

from lucasdep import pipeline as P


def test_nonvanishing():
    assert P.nonvanishing_check(2, "Lambda") is False
    for k in range(3, 41):
        assert P.nonvanishing_check(k, "Lambda")
        assert P.nonvanishing_check(k, "Lambda1")
    with pytest.raises(ValueError):
        P.nonvanishing_check(3, "Gamma")


def test_large_k_chain():
    rec = P.eliminate_large_k()
    assert rec["k_bound"] == 933
    assert all(step["holds"] for step in rec["steps"])
    assert 7.6e8 < rec["lmn_stage_k_bound"] <= 7.7e8
    assert rec["legendre"]["gap"] == 102


def test_etas_enclose():
    e = P.etas_for(3, 200, 7)
    assert len(e) == 4
    assert e[3].contains(0) is False and float(e[3].mid) == pytest.approx(6 * 0.6931471805599453)
    assert all(x.width < Fraction(1, 2 ** 190) for x in e)


@pytest.mark.parametrize("x", [0, 7, 10 ** 11, 6 * 10 ** 194, 10 ** 512, 123456789 * 10 ** 40, -5 * 10 ** 30])
def test_compact_integer_roundtrip(x):
    assert P._parse_sci_int(P._sci_int(x)) == x


def test_m_bound_from_lemma_fits_c3():
    for k in (3, 100, 1000):
        n0 = int(P.bounds.bound_n_of_k(k).value)
        assert 38 * P.m_bound_from_lemma(k, n0) <= 10 ** 28


def test_prove_k2():
    (cert,) = P.prove([2])
    assert cert.solutions == [(0, 3)]
    assert "Carmichael-primitive-divisor" in cert.external_axioms
    doc = json.loads(P.canonical_json([cert]))[0]
    assert P.verify_certificate(doc) == []


def test_prove_range_validation():
    with pytest.raises(ValueError):
        P.prove([1001])


def test_reduce_small_k_domain():
    with pytest.raises(ValueError):
        P.reduce_small_k(2)


@pytest.mark.slow
def test_prove_k3_certificate_replays():
    certs = P.prove([3])
    text = P.canonical_json(certs)
    assert text == P.canonical_json(list(reversed(certs)))
    doc = json.loads(text)[0]
    assert doc["solutions"] == [[0, 7]]
    assert doc["searched"]["m_min"] == 0 and doc["searched"]["n_max"] >= doc["n_bound_final"]
    assert any("(3,0,7)" in note for note in doc["discrepancies"])
    assert P.verify_certificate(doc, rerun_lattice=True) == []
    # tampering is detected
    doc["solutions"] = []
    assert P.verify_certificate(doc)
