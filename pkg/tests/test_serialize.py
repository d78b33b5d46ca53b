import random

import pytest

from symfa import (
    Atom,
    FormatError,
    IntervalAtom,
    LiteralAtom,
    NEG_INF,
    Not,
    Or,
    POS_INF,
    Sfa,
    TRUE,
    Transition,
    emit_sfa,
    interval_binding,
    parse_sfa,
    propositional_binding,
    validate,
)
from genlib import rand_neat_prop_sfa, rand_sfa
from conftest import DATA


def ia(lo, hi):
    return Atom(IntervalAtom(lo, hi))


def test_two_state_file_round_trips_byte_identically(two_state):
    text = (DATA / "two_state.sfa").read_text()
    assert parse_sfa(text) == two_state
    assert emit_sfa(parse_sfa(text)) == text


def test_parse_emit_is_identity_on_random_automata():
    rng = random.Random(131)
    for _ in range(40):
        a = rand_sfa(rng, interval_binding())
        assert parse_sfa(emit_sfa(a)) == a
    for _ in range(20):
        a = rand_neat_prop_sfa(rng)
        assert parse_sfa(emit_sfa(a)) == a
    for _ in range(20):
        a = rand_sfa(rng, propositional_binding(["p1", "p2"]), pred_size=4)
        assert parse_sfa(emit_sfa(a)) == a


def test_parse_preserves_predicate_shape():
    a = Sfa(
        interval_binding(),
        ("q0",),
        "q0",
        {"q0"},
        (Transition("q0", Or((ia(0, 10), Not(ia(5, POS_INF)), TRUE)), "q0"),),
    )
    assert parse_sfa(emit_sfa(a)) == a


def test_interval_bounds_use_words_for_infinities():
    a = Sfa(interval_binding(), ("q0",), "q0", set(), (Transition("q0", ia(NEG_INF, 7), "q0"),))
    text = emit_sfa(a)
    assert '"lo": "-inf"' in text and '"hi": 7' in text
    assert parse_sfa(text) == a


def test_propositional_neg_defaults_to_false():
    binding = propositional_binding(["p1"])
    text = """
    {"algebra": {"kind": "propositional", "props": ["p1"]},
     "states": ["s"], "initial": "s", "accepting": [],
     "transitions": [{"from": "s", "pred": {"atom": {"var": "p1"}}, "to": "s"}]}
    """
    a = parse_sfa(text)
    assert a.binding == binding
    assert a.transitions[0].pred == Atom(LiteralAtom(0, False))


def test_rejects_unknown_top_level_field():
    with pytest.raises(FormatError, match="unknown field 'color'"):
        parse_sfa('{"algebra": "interval", "states": [], "initial": "q", '
                  '"accepting": [], "transitions": [], "color": "red"}')


def test_rejects_missing_field():
    with pytest.raises(FormatError, match="missing field"):
        parse_sfa('{"algebra": "interval", "states": [], "initial": "q", "accepting": []}')


def test_rejects_unknown_transition_field():
    with pytest.raises(FormatError, match=r"transitions\[0\]"):
        parse_sfa('{"algebra": "interval", "states": ["q"], "initial": "q", '
                  '"accepting": [], "transitions": [{"from": "q", "pred": "true", '
                  '"to": "q", "weight": 3}]}')


def test_rejects_empty_interval():
    with pytest.raises(FormatError, match="need lo < hi"):
        parse_sfa('{"algebra": "interval", "states": ["q"], "initial": "q", '
                  '"accepting": [], "transitions": [{"from": "q", '
                  '"pred": {"atom": {"lo": 5, "hi": 5}}, "to": "q"}]}')


def test_rejects_boolean_interval_bound():
    with pytest.raises(FormatError, match="bound must be an integer"):
        parse_sfa('{"algebra": "interval", "states": ["q"], "initial": "q", '
                  '"accepting": [], "transitions": [{"from": "q", '
                  '"pred": {"atom": {"lo": true, "hi": 5}}, "to": "q"}]}')


def test_rejects_unknown_proposition():
    with pytest.raises(FormatError, match="p9"):
        parse_sfa('{"algebra": {"kind": "propositional", "props": ["p1"]}, '
                  '"states": ["q"], "initial": "q", "accepting": [], '
                  '"transitions": [{"from": "q", '
                  '"pred": {"atom": {"var": "p9"}}, "to": "q"}]}')


def test_rejects_single_child_connective():
    with pytest.raises(FormatError, match="at least 2 children"):
        parse_sfa('{"algebra": "interval", "states": ["q"], "initial": "q", '
                  '"accepting": [], "transitions": [{"from": "q", '
                  '"pred": {"and": ["true"]}, "to": "q"}]}')


def test_syntax_error_reports_line_and_column():
    with pytest.raises(FormatError, match=r"line \d+ column \d+"):
        parse_sfa('{"algebra": "interval",\n  "states": [,]}')


def test_parse_leaves_semantic_checks_to_validate():
    a = parse_sfa('{"algebra": "interval", "states": ["q"], "initial": "q", '
                  '"accepting": ["zz"], "transitions": []}')
    assert any("zz" in msg for msg in validate(a))
