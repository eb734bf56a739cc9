import pytest

from whplanar.gamma import GammaSpec, build_gamma
from whplanar.graph import components
from whplanar.planarity import is_planar
from whplanar.table import ROWS, ROW_BY_ID, ClassMatch, classify_gamma, generate, instances


def test_row_inventory():
    ids = [r.class_id for r in ROWS]
    assert len(ids) == 34 == len(set(ids))
    fam = [r.family for r in ROWS]
    assert (fam.count("I"), fam.count("II"), fam.count("III")) == (5, 15, 14)


@pytest.mark.parametrize(
    "class_id, n, q, s, sets",
    [
        ("I.1", 7, 2, 3, ((3,), (3,), (2, 5))),
        ("II.2", 8, 0, 3, ((), (2, 3), (0, 3, 5))),
        ("II.12", 10, 1, 3, ((3, 4), (4,), (1, 7))),
        ("III.7", 10, 0, 4, ((4, 5), (4,), (0, 4))),
        ("III.14", 6, 1, 2, ((3,), (), (1, 3))),
    ],
)
def test_row_generators(class_id, n, q, s, sets):
    assert generate(ROW_BY_ID[class_id], n, q, s) == sets


def test_degenerate_rows_rejected():
    # q + s = q - s mod 2, so the three-element Q collapses
    assert generate(ROW_BY_ID["II.6"], 2, 0, 1) is None
    # the 2s step folds to 0 at n = 2
    assert generate(ROW_BY_ID["II.11"], 2, 0, 1) is None
    # s and 2s fold together at n = 3
    assert generate(ROW_BY_ID["II.5"], 3, 0, 1) is None


def test_class_constraints_applied():
    # I.1 with s sharing a factor with n is never a match
    spec = GammaSpec(6, (2,), (2,), (0, 2))
    assert not any(m.class_id == "I.1" for m in classify_gamma(spec))
    # Class II needs n even
    assert not any(m.family == "II" for n in (5, 7, 9) for _, m, _ in instances(n))
    # Class III needs n = 2 mod 4
    assert not any(m.family == "III" for n in (4, 8, 12) for _, m, _ in instances(n))
    assert {m.family for _, m, _ in instances(10)} == {"I", "II", "III"}


def test_match_json_round_trip():
    m = ClassMatch("III.4", 3, 4, True)
    assert m.to_json() == {"class": "III.4", "q": 3, "s": 4, "swapped": True}
    assert ClassMatch.from_json(m.to_json()) == m


def test_regenerate_rejects_invalid():
    with pytest.raises(ValueError):
        ClassMatch("I.1", 0, 2).regenerate(6)
    with pytest.raises(ValueError):
        ClassMatch("II.11", 0, 1).regenerate(2)


@pytest.mark.parametrize("n", [4, 5, 6, 8, 10, 12, 14])
def test_every_instance_is_connected_planar_and_self_classifies(n):
    for class_id, match, spec in instances(n, smallest_only=False):
        g = build_gamma(spec)
        assert len(components(g)) == 1 and is_planar(g), (class_id, match)
        assert any(m.class_id == class_id for m in classify_gamma(spec))
        assert any(m.class_id == class_id for m in classify_gamma(spec.swapped()))


def test_smallest_parameters_reported():
    # in I.3 every q, s give the same graph type; the representative is the smallest
    matches = [m for m in classify_gamma(GammaSpec(6, (1,), (1,), (0,))) if m.class_id == "I.3"]
    assert matches == [ClassMatch("I.3", 0, 1)]


def test_ordering_is_deterministic():
    spec = GammaSpec(6, (1,), (1,), (0,))
    assert classify_gamma(spec) == classify_gamma(GammaSpec(6, (1,), (1,), (0,)))
