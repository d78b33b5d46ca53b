from symfa import (
    And,
    Atom,
    IntervalAtom,
    LiteralAtom,
    NEG_INF,
    Not,
    Or,
    POS_INF,
    Sfa,
    TRUE,
    Transition,
    export_dot,
    interval_binding,
    pretty_pred,
    propositional_binding,
)


def ia(lo, hi):
    return Atom(IntervalAtom(lo, hi))


def test_pretty_interval_atoms():
    ib = interval_binding()
    assert pretty_pred(ia(0, 10), ib) == "[0,10)"
    assert pretty_pred(ia(NEG_INF, 100), ib) == "[-inf,100)"
    assert pretty_pred(ia(200, POS_INF), ib) == "[200,inf)"
    assert pretty_pred(TRUE, ib) == "true"


def test_pretty_literals():
    pb = propositional_binding(["p1", "p2"])
    assert pretty_pred(Atom(LiteralAtom(0)), pb) == "p1"
    assert pretty_pred(Atom(LiteralAtom(1, True)), pb) == "¬p2"
    assert pretty_pred(And((Atom(LiteralAtom(0)), Atom(LiteralAtom(1, True)))), pb) == "p1∧¬p2"


def test_pretty_parenthesizes_by_precedence():
    ib = interval_binding()
    p = And((Or((ia(0, 10), ia(20, 30))), ia(5, 25)))
    assert pretty_pred(p, ib) == "([0,10)∨[20,30))∧[5,25)"
    assert pretty_pred(Not(Or((ia(0, 10), ia(20, 30)))), ib) == "¬([0,10)∨[20,30))"
    assert pretty_pred(Not(ia(0, 10)), ib) == "¬[0,10)"
    assert pretty_pred(Or((And((ia(0, 10), ia(5, 25))), ia(20, 30))), ib) == "[0,10)∧[5,25)∨[20,30)"


def test_export_dot_two_state_golden(two_state):
    from conftest import DATA

    assert export_dot(two_state) == (DATA / "two_state.dot").read_text()


def test_export_dot_quotes_odd_names():
    a = Sfa(
        interval_binding(),
        ('say "hi"',),
        'say "hi"',
        {'say "hi"'},
        (Transition('say "hi"', ia(0, 1), 'say "hi"'),),
    )
    text = export_dot(a)
    assert '"say \\"hi\\"" [shape=doublecircle];' in text
    assert text.endswith("}\n")


def test_export_dot_orders_edges_deterministically():
    a = Sfa(
        interval_binding(),
        ("b", "a"),
        "b",
        set(),
        (
            Transition("a", ia(0, 1), "b"),
            Transition("b", ia(0, 1), "a"),
            Transition("b", ia(0, 1), "b"),
        ),
    )
    shuffled = Sfa(a.binding, a.states, a.initial, a.accepting, tuple(reversed(a.transitions)))
    assert export_dot(a) == export_dot(shuffled)
    body = export_dot(a)
    assert body.index('"b" -> "b"') < body.index('"b" -> "a"') < body.index('"a" -> "b"')
