"""The SFA file format: strict JSON with exact round-tripping.

Top level: {"algebra", "states", "initial", "accepting", "transitions"}.
The algebra is "interval" or {"kind": "propositional", "props": [...]}.
Predicates: "true", "false", {"and": [...]}, {"or": [...]}, {"not": ...},
{"atom": {"lo": int|"-inf", "hi": int|"inf"}} for intervals,
{"atom": {"var": "<name>", "neg": bool}} for propositions.  Unknown fields
are rejected; errors carry the JSON path (and line/column for syntax).
"""

import json

from .algebra import AlgebraBinding, interval_binding, propositional_binding
from .errors import FormatError
from .predicates import (
    And,
    Atom,
    FALSE,
    IntervalAtom,
    LiteralAtom,
    NEG_INF,
    Not,
    Or,
    POS_INF,
    Predicate,
    TRUE,
    _FalsePred,
    _TruePred,
    mk_and,
    mk_or,
)
from .sfa import Sfa, Transition


def parse_sfa(text: str) -> Sfa:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(doc, dict):
        raise FormatError("top level must be an object")
    _check_keys(doc, {"algebra", "states", "initial", "accepting", "transitions"}, "top level")
    binding = _parse_algebra(doc["algebra"])
    states = _parse_strings(doc["states"], "states")
    initial = doc["initial"]
    if not isinstance(initial, str):
        raise FormatError("initial: must be a string")
    accepting = _parse_strings(doc["accepting"], "accepting")
    raw = doc["transitions"]
    if not isinstance(raw, list):
        raise FormatError("transitions: must be a list")
    transitions = []
    for i, item in enumerate(raw):
        path = f"transitions[{i}]"
        if not isinstance(item, dict):
            raise FormatError(f"{path}: must be an object")
        _check_keys(item, {"from", "pred", "to"}, path)
        src, dst = item["from"], item["to"]
        if not isinstance(src, str) or not isinstance(dst, str):
            raise FormatError(f"{path}: 'from' and 'to' must be strings")
        transitions.append(Transition(src, parse_pred(item["pred"], binding, f"{path}.pred"), dst))
    return Sfa(binding, tuple(states), initial, frozenset(accepting), tuple(transitions))


def _check_keys(obj, allowed, path):
    for key in obj:
        if key not in allowed:
            raise FormatError(f"{path}: unknown field {key!r}")
    for key in allowed:
        if key not in obj:
            raise FormatError(f"{path}: missing field {key!r}")


def _parse_strings(obj, path):
    if not isinstance(obj, list) or not all(isinstance(s, str) for s in obj):
        raise FormatError(f"{path}: must be a list of strings")
    return obj


def _parse_algebra(obj) -> AlgebraBinding:
    if obj == "interval":
        return interval_binding()
    if isinstance(obj, dict):
        _check_keys(obj, {"kind", "props"} if obj.get("kind") == "propositional" else {"kind"}, "algebra")
        if obj.get("kind") == "interval":
            return interval_binding()
        if obj.get("kind") == "propositional":
            props = obj.get("props")
            if not isinstance(props, list) or not all(isinstance(p, str) and p for p in props):
                raise FormatError("algebra.props: must be a list of nonempty strings")
            try:
                return propositional_binding(props)
            except Exception as e:
                raise FormatError(f"algebra: {e}") from None
    raise FormatError(f"algebra: expected \"interval\" or a propositional object, got {obj!r}")


def parse_pred(obj, binding: AlgebraBinding, path: str) -> Predicate:
    if obj == "true":
        return TRUE
    if obj == "false":
        return FALSE
    if not isinstance(obj, dict) or len(obj) != 1:
        raise FormatError(f"{path}: expected a single-key predicate object, got {obj!r}")
    key, body = next(iter(obj.items()))
    if key in ("and", "or"):
        if not isinstance(body, list) or len(body) < 2:
            raise FormatError(f"{path}.{key}: needs a list of at least 2 children")
        kids = [parse_pred(c, binding, f"{path}.{key}[{i}]") for i, c in enumerate(body)]
        # rebuild through the plain node so the shape on disk is preserved
        return And(tuple(kids)) if key == "and" else Or(tuple(kids))
    if key == "not":
        return Not(parse_pred(body, binding, f"{path}.not"))
    if key == "atom":
        return Atom(_parse_atom(body, binding, f"{path}.atom"))
    raise FormatError(f"{path}: unknown predicate key {key!r}")


def _parse_atom(body, binding: AlgebraBinding, path: str):
    if not isinstance(body, dict):
        raise FormatError(f"{path}: must be an object")
    if binding.is_monotonic:
        _check_keys(body, {"lo", "hi"}, path)
        lo = _parse_bound(body["lo"], "-inf", NEG_INF, path)
        hi = _parse_bound(body["hi"], "inf", POS_INF, path)
        try:
            return IntervalAtom(lo, hi)
        except ValueError as e:
            raise FormatError(f"{path}: {e}") from None
    for key in body:
        if key not in ("var", "neg"):
            raise FormatError(f"{path}: unknown field {key!r}")
    if "var" not in body or not isinstance(body["var"], str):
        raise FormatError(f"{path}: missing or non-string 'var'")
    neg = body.get("neg", False)
    if not isinstance(neg, bool):
        raise FormatError(f"{path}: 'neg' must be a boolean")
    try:
        return LiteralAtom(binding.var_index(body["var"]), neg)
    except Exception as e:
        raise FormatError(f"{path}: {e}") from None


def _parse_bound(v, word, sentinel, path):
    if v == word:
        return sentinel
    if isinstance(v, int) and not isinstance(v, bool):
        return v
    raise FormatError(f"{path}: bound must be an integer or \"{word}\", got {v!r}")


def emit_sfa(a: Sfa) -> str:
    doc = {
        "algebra": _emit_algebra(a.binding),
        "states": list(a.states),
        "initial": a.initial,
        "accepting": sorted(a.accepting),
        "transitions": [
            {"from": t.src, "pred": emit_pred(t.pred, a.binding), "to": t.dst}
            for t in a.transitions
        ],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _emit_algebra(binding: AlgebraBinding):
    if binding.is_monotonic:
        return "interval"
    return {"kind": "propositional", "props": list(binding.props)}


def emit_pred(p: Predicate, binding: AlgebraBinding):
    if isinstance(p, _TruePred):
        return "true"
    if isinstance(p, _FalsePred):
        return "false"
    if isinstance(p, And):
        return {"and": [emit_pred(c, binding) for c in p.children]}
    if isinstance(p, Or):
        return {"or": [emit_pred(c, binding) for c in p.children]}
    if isinstance(p, Not):
        return {"not": emit_pred(p.child, binding)}
    atom = p.payload
    if isinstance(atom, IntervalAtom):
        lo = "-inf" if atom.lo == NEG_INF else atom.lo
        hi = "inf" if atom.hi == POS_INF else atom.hi
        return {"atom": {"lo": lo, "hi": hi}}
    return {"atom": {"var": binding.prop_name(atom.var), "neg": atom.negated}}
