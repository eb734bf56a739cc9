import json

from hypothesis import given

from conftest import gamma_raw, multigraphs
from whplanar import serialize as ser
from whplanar.circulant import canonicalize_circ, circ_components, classify_circ_planar
from whplanar.gamma import canonicalize_gamma, check_conditions, gamma_components
from whplanar.whitehead import parse_word, plan_multiplicities


def _roundtrip(data):
    return json.loads(json.dumps(data))


@given(gamma_raw())
def test_gamma_spec(raw):
    spec = canonicalize_gamma(*raw)
    data = ser.gamma_spec_to_json(spec)
    assert ser.gamma_spec_from_json(_roundtrip(data)) == spec


def test_gamma_spec_raw_is_canonicalized():
    spec = ser.gamma_spec_from_json({"n": 6, "A": [5], "B": [4], "Q": [0]})
    assert ser.gamma_spec_to_json(spec) == {"n": 6, "A": [1], "B": [2], "Q": [0]}
    assert ser.gamma_spec_from_json({"n": 4, "A": [0], "Q": [1]}, loose=True).A == (0,)


def test_circ_spec():
    spec = ser.circ_spec_from_json({"n": 7, "S": [3, 5]})
    assert ser.circ_spec_to_json(spec) == {"n": 7, "S": [2, 3]}


@given(multigraphs())
def test_graph(g):
    assert ser.graph_from_json(_roundtrip(ser.graph_to_json(g))) == g


@given(gamma_raw())
def test_conditions(raw):
    r = check_conditions(canonicalize_gamma(*raw))
    assert ser.conditions_from_json(_roundtrip(ser.conditions_to_json(r))) == r


def test_other_forms():
    dec = gamma_components(canonicalize_gamma(6, [2], [4], [1, 3]))
    assert ser.decomposition_to_json(dec) == {"d": 2, "quotient": {"n": 3, "A": [1], "B": [1], "Q": [1, 2]}}
    spec = canonicalize_circ(6, [2, 3])
    assert ser.circ_components_to_json(*circ_components(spec)) == {"d": 1, "quotient": {"n": 6, "S": [2, 3]}}
    v = ser.circ_verdict_to_json(classify_circ_planar(spec))
    assert v == {"planar": True, "case": "HALF_STEP", "s": 2, "d": 1, "connected": True}
    p = parse_word(6, "x0 x1 x2^-1")
    assert ser.presentation_from_json(_roundtrip(ser.presentation_to_json(p))) == p
    plan = ser.plan_to_json(plan_multiplicities(canonicalize_gamma(6, [1], [2], [1])))
    assert set(plan) == {"m_a", "m_b", "m_q"}
