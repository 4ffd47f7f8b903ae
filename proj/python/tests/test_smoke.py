import json

import pytest

import skewdet


def test_counts():
    assert skewdet.count([1]) == 1
    assert skewdet.count([2, 1]) == 2
    assert skewdet.count([2, 2], [1], method="brute") == 2
    assert skewdet.count([6, 6, 6, 4], [3, 1]) == skewdet.count([6, 6, 6, 4], [3, 1], method="aitken")


def test_schur_methods_agree():
    direct = skewdet.schur([3, 2], [1], nvars=3, method="direct")
    jt = skewdet.schur([3, 2], [1], nvars=3, method="jt")
    assert direct == jt
    assert skewdet.schur([1, 1], nvars=2) == {(1, 1): 1}


def test_three_strip_cover():
    text = skewdet.three_strip_example()
    rep = skewdet.validate(text)
    assert rep["ok"] and rep["nested"] and rep["r"] == 3
    assert skewdet.verify(text, 4)["equal"]
    assert skewdet.sharp(text, 0, 1) == ([5, 5, 5, 4, 4], [4, 3, 3, 2, 0])
    assert skewdet.sharp(text, 2, 0) == "empty"


def test_decompose_round_trip():
    text = skewdet.decompose([4, 3, 1], [1], strategy="rim")
    assert len(json.loads(text)["strips"]) >= 1
    rep = skewdet.verify(text, 3)
    assert rep["equal"] and rep["r"] == 0


def test_mstrip_and_sequences():
    a = skewdet.sequences(8)
    assert a[:6] == [1, 1, 1, 2, 5, 16]
    assert skewdet.mstrip(2, 3) == a[6]
    assert skewdet.mstrip(3, 1) == 1


def test_errors():
    with pytest.raises(ValueError):
        skewdet.count([1, 2])
    with pytest.raises(ValueError):
        skewdet.mstrip(6, 1)
