"""Wire formats: JSON round-trips, CSV input, hierarchy documents."""

import json

import pytest

from mbwm.app import schemas
from mbwm.errors import ValidationError

from .conftest import FIXTURES


def load(name):
    return json.loads((FIXTURES / name).read_text())


def test_parse_example1(example1):
    pcs, options = schemas.parse_request(load("example1.json"))
    assert pcs == example1
    assert options == {"normalize_cr": False}


def test_round_trip_is_canonical_and_stable(example1):
    first = schemas.dumps_canonical(schemas.pcs_to_obj(example1))
    reparsed = schemas.parse_pcs(json.loads(first))
    second = schemas.dumps_canonical(schemas.pcs_to_obj(reparsed))
    assert first == second
    assert reparsed == example1


def test_serialisation_keeps_full_precision():
    obj = load("example1.json")
    obj["best_to_other"]["c1"] = 2.0000000000000004
    pcs = schemas.parse_pcs(obj)
    assert schemas.pcs_to_obj(pcs)["best_to_other"]["c1"] == 2.0000000000000004


def test_vector_order_follows_criteria_array():
    obj = load("example1.json")
    # scrambled key order in the input must not change the canonical output
    obj["best_to_other"] = dict(reversed(list(obj["best_to_other"].items())))
    pcs = schemas.parse_pcs(obj)
    assert list(schemas.pcs_to_obj(pcs)["best_to_other"]) == obj["criteria"]


def test_ui_key_is_tolerated():
    obj = load("example1.json")
    obj["ui"] = {"sessionName": "draft", "theme": "dark"}
    pcs, _ = schemas.parse_request(obj)
    assert pcs.n == 5


def test_unknown_option_rejected():
    obj = load("example1.json")
    obj["options"] = {"normalise": True}
    with pytest.raises(ValidationError) as err:
        schemas.parse_request(obj)
    assert err.value.code == "PARSE_ERROR"


def test_normalize_option():
    obj = load("example1.json")
    obj["options"] = {"normalize_cr": True}
    _, options = schemas.parse_request(obj)
    assert options["normalize_cr"] is True


@pytest.mark.parametrize(
    "mutate,code",
    [
        (lambda o: o.pop("criteria"), "PARSE_ERROR"),
        (lambda o: o.pop("best"), "PARSE_ERROR"),
        (lambda o: o.__setitem__("best", "c9"), "PARSE_ERROR"),
        (lambda o: o["best_to_other"].pop("c3"), "PARSE_ERROR"),
        (lambda o: o["best_to_other"].__setitem__("zz", 2), "PARSE_ERROR"),
        (lambda o: o["best_to_other"].__setitem__("c3", "five"), "PARSE_ERROR"),
        (lambda o: o.__setitem__("worst", "c2"), "BEST_EQUALS_WORST"),
        (lambda o: o["best_to_other"].__setitem__("c3", -5), "NONPOSITIVE_ENTRY"),
        (lambda o: o["best_to_other"].__setitem__("c5", 7), "CROSS_MISMATCH"),
        (lambda o: o["other_to_worst"].__setitem__("c5", 3), "DIAGONAL_NOT_ONE"),
    ],
)
def test_schema_errors(mutate, code):
    obj = load("example1.json")
    mutate(obj)
    with pytest.raises(ValidationError) as err:
        schemas.parse_request(obj)
    assert err.value.code == code


def test_loads_request_rejects_malformed_json():
    with pytest.raises(ValidationError) as err:
        schemas.loads_request("{not json")
    assert err.value.code == "PARSE_ERROR"


def test_csv_round_trip(example1):
    pcs = schemas.parse_pcs_csv((FIXTURES / "example1.csv").read_text())
    assert pcs == example1


@pytest.mark.parametrize(
    "text",
    [
        "criterion,best_to_other,other_to_worst\na,1,2\n",  # missing role column
        "criterion,role,best_to_other,other_to_worst\na,best,1,2\nb,best,2,1\n",
        "criterion,role,best_to_other,other_to_worst\na,chief,1,2\nb,worst,2,1\n",
        "criterion,role,best_to_other,other_to_worst\na,best,x,2\nb,worst,2,1\n",
        "criterion,role,best_to_other,other_to_worst\na,,1,2\nb,,2,1\n",
    ],
)
def test_csv_errors(text):
    with pytest.raises(ValidationError) as err:
        schemas.parse_pcs_csv(text)
    assert err.value.code == "PARSE_ERROR"


def test_parse_hierarchy_fixture():
    spec = schemas.parse_hierarchy(load("hierarchy_two_level.json"))
    assert len(spec.categories) == 8
    assert sum(len(c.leaves) for c in spec.categories) == 40
    assert len(spec.category_expert_pcs) == 4


def test_hierarchy_inner_pcs_inherits_criteria():
    doc = load("hierarchy_toy.json")
    for cat in doc["categories"]:
        for pcs in cat["experts_pcs"]:
            pcs.pop("criteria")
    spec = schemas.parse_hierarchy(doc)
    assert spec.categories[0].expert_pcs[0].labels == tuple(
        doc["categories"][0]["leaves"]
    )


def test_hierarchy_inner_pcs_criteria_must_match():
    doc = load("hierarchy_toy.json")
    doc["categories"][0]["experts_pcs"][0]["criteria"] = ["a", "b"]
    with pytest.raises(ValidationError) as err:
        schemas.parse_hierarchy(doc)
    assert err.value.code == "PARSE_ERROR"
    assert "categories[0]" in err.value.detail


def test_hierarchy_rejects_nesting():
    doc = load("hierarchy_toy.json")
    doc["categories"][0]["categories"] = []
    with pytest.raises(ValidationError) as err:
        schemas.parse_hierarchy(doc)
    assert err.value.code == "UNSUPPORTED_DEPTH"


def test_hierarchy_node_errors_carry_path():
    doc = load("hierarchy_toy.json")
    name = doc["categories"][1]["leaves"][0]
    doc["categories"][1]["experts_pcs"][1]["best_to_other"][name] = -1
    with pytest.raises(ValidationError) as err:
        schemas.parse_hierarchy(doc)
    assert err.value.code == "NONPOSITIVE_ENTRY"
    assert "categories[1].experts_pcs[1]" in err.value.detail
