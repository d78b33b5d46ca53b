"""Form transformations: neat, normalized, feasible, complete, canonical.

Each transform preserves the language and the state set (completion may add
one sink).  Canonical minimal forms exist only over the interval algebra,
where every predicate has a unique canonical representation; they reduce any
automaton to the unique minimal-state deterministic complete neat (or
normalized) form with fixed state names, so language equality becomes
structural equality.
"""

from .algebra import OpCounters
from .errors import UnsupportedAlgebra
from .intervals import (
    basic_to_atom,
    canonical_union,
    complement_intervals,
    to_dnf,
)
from .predicates import (
    Atom,
    PredicateClass,
    TRUE,
    classify,
    mk_not,
    mk_or,
)
from .propositional import (
    all_valuations,
    disjoint_monomials,
    mask_of,
    monomial_to_pred,
    monomials_of,
)
from .sfa import (
    Sfa,
    Transition,
    dedupe_transitions,
    is_complete,
    is_neat,
    is_normalized,
)


def fresh_state_name(taken, base: str) -> str:
    if base not in taken:
        return base
    i = 1
    while f"{base}{i}" in taken:
        i += 1
    return f"{base}{i}"


def to_neat(a: Sfa, counters: OpCounters | None = None) -> Sfa:
    """Expand general predicates so every transition is basic.

    Interval binding: canonical DNF, one transition per atom (atom count
    linear in the predicate size).  Propositional: one transition per
    satisfiable monomial (worst case exponential).  Unsatisfiable disjuncts
    vanish along the way.
    """
    if is_neat(a):
        return a
    edges = []
    for t in a.transitions:
        if classify(t.pred) is not PredicateClass.GENERAL:
            edges.append(t)
        elif a.binding.is_monotonic:
            for atom in to_dnf(t.pred):
                edges.append(Transition(t.src, Atom(atom), t.dst))
        else:
            for m in monomials_of(t.pred):
                edges.append(Transition(t.src, monomial_to_pred(m), t.dst))
    return Sfa(a.binding, a.states, a.initial, a.accepting, dedupe_transitions(edges))


def to_normalized(a: Sfa, counters: OpCounters | None = None) -> Sfa:
    """Merge parallel edges into one disjunction per state pair."""
    if is_normalized(a):
        return a
    counters = counters if counters is not None else OpCounters()
    order = []
    groups = {}
    for t in a.transitions:
        key = (t.src, t.dst)
        if key not in groups:
            order.append(key)
            groups[key] = []
        groups[key].append(t.pred)
    edges = []
    for src, dst in order:
        preds = groups[(src, dst)]
        counters.disj_built += len(preds) - 1
        edges.append(Transition(src, mk_or(preds), dst))
    return Sfa(a.binding, a.states, a.initial, a.accepting, edges)


def to_feasible(a: Sfa, counters: OpCounters | None = None) -> Sfa:
    """Drop transitions whose predicate is unsatisfiable."""
    keep = [t for t in a.transitions if a.binding.is_sat(t.pred, counters)]
    if len(keep) == len(a.transitions):
        return a
    return Sfa(a.binding, a.states, a.initial, a.accepting, keep)


def complete(a: Sfa, counters: OpCounters | None = None) -> Sfa:
    """Add a non-accepting sink absorbing every uncovered letter.

    Already-complete automata come back unchanged.  Neat input stays neat:
    interval residuals are the gaps between a state's covered intervals (at
    most out-degree + 1 single-atom edges per state), propositional
    residuals are disjoint monomials covering the missing valuations.
    Otherwise each state gets one edge labeled with the negated disjunction
    of its outgoing predicates, when satisfiable.  Completion never breaks
    determinism: all added predicates avoid the covered letters.
    """
    counters = counters if counters is not None else OpCounters()
    if is_complete(a, counters):
        return a
    sink = fresh_state_name(set(a.states), "sink")
    out = a.out_map()
    edges = []
    if a.binding.is_monotonic and is_neat(a):
        for q in a.states:
            atoms = []
            for t in out[q]:
                atom = basic_to_atom(t.pred)
                if atom is not None:
                    atoms.append(atom)
            for gap in complement_intervals(canonical_union(atoms)):
                edges.append(Transition(q, Atom(gap), sink))
    elif not a.binding.is_monotonic and is_neat(a):
        full = frozenset(all_valuations(a.binding.k))
        for q in a.states:
            covered = set()
            for t in out[q]:
                covered |= mask_of(t.pred, a.binding.k)
            for m in disjoint_monomials(frozenset(full - covered), a.binding.k):
                edges.append(Transition(q, monomial_to_pred(m), sink))
    else:
        for q in a.states:
            preds = [t.pred for t in out[q]]
            if not preds:
                edges.append(Transition(q, TRUE, sink))
                continue
            counters.disj_built += len(preds) - 1
            residual = mk_not(mk_or(preds))
            if a.binding.is_sat(residual, counters):
                edges.append(Transition(q, residual, sink))
    edges.append(Transition(sink, TRUE, sink))
    return Sfa(
        a.binding,
        a.states + (sink,),
        a.initial,
        a.accepting,
        a.transitions + tuple(edges),
    )


def canonical_minimal_neat(a: Sfa, counters: OpCounters | None = None) -> Sfa:
    """The unique minimal-state deterministic complete neat form.

    Determinize, complete, minimize, then re-express every block-to-block
    letter set as its canonical intervals (one transition per atom) and
    rename states q0, q1, ... in breadth-first order, exploring transitions
    by ascending interval.  Language-equal inputs yield structurally equal
    outputs.  Interval binding only: no unique minimal neat form exists for
    the propositional algebra.
    """
    if not a.binding.is_monotonic:
        raise UnsupportedAlgebra("canonical minimal forms need the interval algebra")
    # imported here: operations imports complete from this module
    from .operations import determinize, minimize

    mini = minimize(complete(determinize(a, counters), counters), counters)
    atoms_between = {}
    for t in mini.transitions:
        atoms_between.setdefault((t.src, t.dst), []).extend(to_dnf(t.pred))
    outgoing = {q: [] for q in mini.states}
    for (src, dst), atoms in atoms_between.items():
        for atom in canonical_union(atoms):
            outgoing[src].append((atom, dst))
    for q in outgoing:
        outgoing[q].sort(key=lambda e: (e[0].lo, e[0].hi))
    names = {mini.initial: "q0"}
    order = [mini.initial]
    i = 0
    while i < len(order):
        for _, dst in outgoing[order[i]]:
            if dst not in names:
                names[dst] = f"q{len(order)}"
                order.append(dst)
        i += 1
    return Sfa(
        mini.binding,
        tuple(names[q] for q in order),
        "q0",
        frozenset(names[q] for q in mini.accepting if q in names),
        tuple(
            Transition(names[q], Atom(atom), names[dst])
            for q in order
            for atom, dst in outgoing[q]
        ),
    )


def canonical_minimal_normalized(a: Sfa, counters: OpCounters | None = None) -> Sfa:
    """Canonical neat form with parallel edges merged.

    One transition per state pair, its disjuncts ordered by interval start;
    transitions ordered by source index, then by the start of their first
    interval (distinct per source, since the neat form is deterministic).
    An automaton already in this form comes back structurally unchanged.
    """
    neat = canonical_minimal_neat(a, counters)
    idx = {q: i for i, q in enumerate(neat.states)}
    order = []
    groups = {}
    for t in neat.transitions:
        key = (t.src, t.dst)
        if key not in groups:
            order.append(key)
            groups[key] = []
        groups[key].append(t.pred)
    order.sort(key=lambda key: (idx[key[0]], groups[key][0].payload.lo))
    edges = [Transition(src, mk_or(groups[(src, dst)]), dst) for src, dst in order]
    return Sfa(neat.binding, neat.states, neat.initial, neat.accepting, edges)
