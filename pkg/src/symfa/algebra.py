"""Algebra bindings: which concrete algebra an automaton's predicates live in.

A binding fixes the letter domain and dispatches evaluation, satisfiability
and canonicalization.  Two automata can be combined only when their bindings
are equal.  Satisfiability checks route through an OpCounters so callers can
meter how many times an operation touched the solver.
"""

from dataclasses import dataclass, field

from . import intervals, propositional
from .errors import BindingMismatch, UnsupportedAlgebra
from .predicates import (
    And,
    Atom,
    IntervalAtom,
    LiteralAtom,
    Not,
    Or,
    Predicate,
    _FalsePred,
    _TruePred,
)

INTERVAL = "interval"
PROPOSITIONAL = "propositional"


@dataclass
class OpCounters:
    """Algebra-work meters for one operation run."""

    sat_calls: int = 0
    conj_built: int = 0
    disj_built: int = 0

    def as_dict(self):
        return {
            "sat_calls": self.sat_calls,
            "conj_built": self.conj_built,
            "disj_built": self.disj_built,
        }


@dataclass(frozen=True)
class AlgebraBinding:
    """Interval algebra over the integers, or propositions p1..pk.

    For the propositional kind, `props` names the k variables; letters are
    0/1 tuples of length k.  For the interval kind `props` is empty and
    letters are ints.
    """

    kind: str
    props: tuple = ()

    def __post_init__(self):
        if self.kind not in (INTERVAL, PROPOSITIONAL):
            raise UnsupportedAlgebra(f"unknown algebra kind: {self.kind!r}")
        if self.kind == INTERVAL:
            if self.props:
                raise UnsupportedAlgebra("interval algebra takes no propositions")
        else:
            if not self.props:
                raise UnsupportedAlgebra("propositional algebra needs at least one proposition")
            if len(self.props) > propositional.MAX_PROPS:
                raise UnsupportedAlgebra(
                    f"at most {propositional.MAX_PROPS} propositions, got {len(self.props)}"
                )
            if len(set(self.props)) != len(self.props):
                raise UnsupportedAlgebra("duplicate proposition names")

    @property
    def is_monotonic(self) -> bool:
        return self.kind == INTERVAL

    @property
    def k(self) -> int:
        return len(self.props)

    def check_same(self, other: "AlgebraBinding"):
        if self != other:
            raise BindingMismatch(f"algebra mismatch: {self} vs {other}")

    def check_letter(self, letter):
        if self.kind == INTERVAL:
            if not isinstance(letter, int) or isinstance(letter, bool):
                raise TypeError(f"interval letters are ints, got {letter!r}")
        else:
            if (
                not isinstance(letter, tuple)
                or len(letter) != self.k
                or any(b not in (0, 1) for b in letter)
            ):
                raise TypeError(f"letters are 0/1 tuples of length {self.k}, got {letter!r}")

    def check_atom(self, payload):
        if self.kind == INTERVAL:
            if not isinstance(payload, IntervalAtom):
                raise UnsupportedAlgebra(f"interval algebra got atom {payload!r}")
        else:
            if not isinstance(payload, LiteralAtom):
                raise UnsupportedAlgebra(f"propositional algebra got atom {payload!r}")
            if not 0 <= payload.var < self.k:
                raise UnsupportedAlgebra(
                    f"literal on p{payload.var + 1} but only {self.k} propositions"
                )

    def evaluate(self, p: Predicate, letter) -> bool:
        """Does this letter satisfy p?"""
        if isinstance(p, _TruePred):
            return True
        if isinstance(p, _FalsePred):
            return False
        if isinstance(p, Atom):
            if self.kind == INTERVAL:
                return p.payload.contains(letter)
            return propositional.eval_literal(p.payload, letter)
        if isinstance(p, And):
            return all(self.evaluate(c, letter) for c in p.children)
        if isinstance(p, Or):
            return any(self.evaluate(c, letter) for c in p.children)
        if isinstance(p, Not):
            return not self.evaluate(p.child, letter)
        raise TypeError(f"not a predicate: {p!r}")

    def sat(self, p: Predicate, counters: OpCounters | None = None):
        """A witness letter satisfying p, or None.  Counts one sat call."""
        if counters is not None:
            counters.sat_calls += 1
        if self.kind == INTERVAL:
            return intervals.interval_sat(p)
        return propositional.prop_sat(p, self.k)

    def is_sat(self, p: Predicate, counters: OpCounters | None = None) -> bool:
        return self.sat(p, counters) is not None

    def to_dnf(self, p: Predicate) -> Predicate:
        """Disjunction-of-basic form; canonical for the interval kind."""
        if self.kind == INTERVAL:
            return intervals.dnf_to_pred(intervals.to_dnf(p))
        return propositional.prop_to_dnf(p)

    def prop_name(self, var: int) -> str:
        return self.props[var]

    def var_index(self, name: str) -> int:
        try:
            return self.props.index(name)
        except ValueError:
            raise UnsupportedAlgebra(f"unknown proposition {name!r}") from None


def interval_binding() -> AlgebraBinding:
    return AlgebraBinding(INTERVAL)


def propositional_binding(props) -> AlgebraBinding:
    return AlgebraBinding(PROPOSITIONAL, tuple(props))
