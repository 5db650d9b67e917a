import json

import pytest

from quiverloc.linalg import GF
from quiverloc.quiver import QuiverError, double_chain_quiver, loop_quiver
from quiverloc.representations import string_rep
from quiverloc.serialize import (
    parse_dimvec,
    quiver_from_dict,
    quiver_to_dict,
    representation_from_dict,
    representation_to_dict,
)


def test_quiver_round_trip():
    Q = double_chain_quiver()
    assert quiver_from_dict(json.loads(json.dumps(quiver_to_dict(Q)))) == Q


def test_quiver_errors():
    with pytest.raises(QuiverError, match="'a'.*'z'"):
        quiver_from_dict({"vertices": ["i"], "arrows": [{"id": "a", "src": "i", "tgt": "z"}]})
    with pytest.raises(QuiverError, match="malformed"):
        quiver_from_dict({"vertices": ["i"]})


def test_parse_dimvec():
    Q = double_chain_quiver()
    assert parse_dimvec(Q, "1,2,1") == (1, 2, 1)
    assert parse_dimvec(Q, "j=2, k=1") == (0, 2, 1)
    assert parse_dimvec(loop_quiver(2), "4") == (4,)
    for bad in ("1,x,1", "1,2", "q=1"):
        with pytest.raises(QuiverError):
            parse_dimvec(Q, bad)


def test_representation_round_trip():
    X = string_rep(double_chain_quiver(), (0, 2, 3, 1))
    assert representation_from_dict(json.loads(json.dumps(representation_to_dict(X)))) == X
    Y = string_rep(loop_quiver(2), (0, 1), GF(3))
    data = representation_to_dict(Y)
    assert data["field"] == "Fp:3"
    assert representation_from_dict(data) == Y


def test_representation_shape_error():
    data = representation_to_dict(string_rep(loop_quiver(2), (0, 1)))
    data["matrices"]["a"] = [["1"]]
    with pytest.raises(QuiverError, match="'a' should be 2x2"):
        representation_from_dict(data)
    data["matrices"] = {"zz": []}
    with pytest.raises(QuiverError):
        representation_from_dict(data)
