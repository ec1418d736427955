"""Request-core tests: envelope defaults, wall-count rules, validation,
and the uniform error mapping shared by the CLI and the service."""

import pytest

from orbitile.api import (
    DEFAULT_MAX_COPIES,
    HARD_COPY_CAP,
    build_request,
    classify_request,
    cover_request,
    cover_svg_request,
    enumerate_request,
    error_payload,
)
from orbitile.errors import (
    ConstructionError,
    CoverTooLargeError,
    InfeasibleFreeVariableError,
    NotRealizableError,
    ParseError,
    RequestValidationError,
)
from orbitile.notation import enumerate_orbifolds, format_notation


# ---------------------------------------------------------------------------
# defaults


def test_build_defaults_to_right_pentagon_room():
    record = build_request({})
    assert record["notation"] == "*22222"
    assert record["kind"] == "hyperbolic"
    assert record["closure_residual"] < 1e-9
    assert all(v == 1.4 for v in record["free_vars"])
    assert len(record["vertices"]) == 5


def test_cover_defaults():
    doc = cover_request({})
    assert doc["notation"] == "*22222"
    assert 1 <= len(doc["copies"]) <= DEFAULT_MAX_COPIES
    assert doc["style"]["emphasis"] == "universal"


def test_classify_reports_bad_orbifolds_without_error():
    record = classify_request({"notation": "*23"})
    assert record["is_bad"] is True
    assert record["is_realizable"] is False
    assert record["kind"] == "spherical"
    assert record["free_variables"] is None
    record = classify_request({"notation": "*237"})
    assert record["is_bad"] is False
    assert record["constructible"] is True
    assert record["free_variables"] == 0
    assert record["euler_char_exact"] == "-1/84"


# ---------------------------------------------------------------------------
# wall-count rules


def test_one_wall_order_is_forced_to_one():
    record = build_request({"notation": "*7"})
    assert record["notation"] == "*"
    assert record["corner_orders"] == [1]


def test_two_wall_mismatch_rejected_with_sync_hint():
    with pytest.raises(NotRealizableError) as err:
        build_request({"notation": "*57"})
    assert err.value.hint is not None
    assert "together" in err.value.hint
    # classification stays informative
    assert classify_request({"notation": "*57"})["is_bad"] is True


def test_two_wall_equal_orders_pass():
    record = build_request({"notation": "*66"})
    assert record["notation"] == "*66"
    assert record["kind"] == "spherical"


# ---------------------------------------------------------------------------
# envelope validation


def test_unknown_fields_rejected():
    with pytest.raises(RequestValidationError):
        build_request({"notation": "*237", "color": "red"})
    with pytest.raises(RequestValidationError):
        cover_request({"options": {"depth": 3}})
    with pytest.raises(RequestValidationError):
        cover_request({"style": {"sparkle": True}})


def test_free_vars_scalar_broadcasts():
    record = build_request({"notation": "*2345", "free_vars": 1.1})
    assert record["free_vars"] == [1.1]
    record = build_request({"notation": "*22222", "free_vars": 0.9})
    assert all(v == 0.9 for v in record["free_vars"])


def test_free_vars_count_checked_before_construction():
    with pytest.raises(RequestValidationError) as err:
        build_request({"notation": "*2345", "free_vars": [1.0, 2.0]})
    assert "expected 1" in str(err.value)


def test_free_vars_type_checked():
    with pytest.raises(RequestValidationError):
        build_request({"notation": "*2345", "free_vars": ["wide"]})
    with pytest.raises(RequestValidationError):
        build_request({"notation": "*2345", "free_vars": True})


def test_option_types_and_cap():
    with pytest.raises(RequestValidationError):
        cover_request({"options": {"max_depth": 2.5}})
    with pytest.raises(RequestValidationError):
        cover_request({"options": {"max_copies": True}})
    with pytest.raises(CoverTooLargeError):
        cover_request({"options": {"max_copies": HARD_COPY_CAP + 1}})
    doc = cover_request({"notation": "*237",
                         "options": {"max_copies": 7, "max_depth": 30}})
    assert len(doc["copies"]) == 7


def test_style_flows_into_document():
    doc = cover_request({
        "notation": "*2222",
        "style": {"emphasis": "translational", "translational_mirror": 1},
    })
    assert doc["style"]["attenuations"] == [0.0, 1.0, 0.0, 0.0]
    doc = cover_request({
        "notation": "*2222",
        "style": {"attenuations": [0.5, 0.5, 0.5, 0.5]},
    })
    assert doc["style"]["emphasis"] == "custom"


def test_style_color_validation():
    with pytest.raises(RequestValidationError):
        cover_request({"style": {"stroke": '"/><script>'}})
    svg = cover_svg_request({"notation": "*632",
                             "style": {"stroke": "#aa3311"}})
    assert "#aa3311" in svg


# ---------------------------------------------------------------------------
# enumeration


def test_enumerate_matches_notation_module():
    doc = enumerate_request(3, 5)
    want = [format_notation(n) for n, _ in enumerate_orbifolds(3, 5)]
    assert [row["notation"] for row in doc["orbifolds"]] == want
    assert doc["walls"] == 3


def test_enumerate_guards():
    with pytest.raises(RequestValidationError):
        enumerate_request(0, 4)
    with pytest.raises(RequestValidationError):
        enumerate_request(3, 1)
    with pytest.raises(RequestValidationError):
        enumerate_request(9, 12)  # scan budget exceeded
    with pytest.raises(RequestValidationError):
        enumerate_request("three", 4)


# ---------------------------------------------------------------------------
# error mapping


def test_error_payload_statuses():
    status, body = error_payload(ParseError("bad", 3))
    assert status == 400 and body["position"] == 3
    status, body = error_payload(RequestValidationError("no", hint="fix"))
    assert status == 400 and body["hint"] == "fix"
    status, body = error_payload(NotRealizableError("bad orbifold"))
    assert status == 422 and body["error"] == "not_realizable"
    status, body = error_payload(NotRealizableError("two-wall", hint="sync"))
    assert status == 422 and body["hint"] == "sync"
    status, body = error_payload(CoverTooLargeError("cap"))
    assert status == 413
    status, body = error_payload(
        ConstructionError("gap", residuals={"closure_gap": 1e-3}))
    assert status == 422
    assert body["residuals"] == {"closure_gap": 1e-3}
    status, body = error_payload(InfeasibleFreeVariableError("neg", 0))
    assert status == 422 and body["cut_index"] == 0
    with pytest.raises(ValueError):
        error_payload(ValueError("not ours"))


def test_construction_failures_carry_through():
    with pytest.raises(ConstructionError):
        build_request({"notation": "*(1.5)(1.5)(1.5)(1.5)"})
    with pytest.raises(InfeasibleFreeVariableError):
        build_request({"notation": "*2345", "free_vars": [-1.0]})
    # the two-wall sync rule names the repair for bad *pq rooms
    with pytest.raises(NotRealizableError) as err:
        build_request({"notation": "*23"})
    assert err.value.hint is not None
