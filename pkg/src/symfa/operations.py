"""Standard constructions: product, complement, determinize, minimize,
and the decision procedures emptiness, inclusion, equivalence.

Size discipline: product keeps one edge per synchronized transition pair,
complement adds at most one state and (general path) one edge per state,
determinization is a reachable-subset construction whose transitions are
satisfiable minterms, minimization is Moore partition refinement.  Neat
inputs produce neat outputs throughout: interval negation expands into
atoms, propositional residuals into disjoint monomials.
"""

from enum import Enum

from .algebra import OpCounters
from .errors import NondeterministicInput, SfaError
from .intervals import (
    atom_and,
    basic_to_atom,
    complement_intervals,
    intersect_dnf,
    to_dnf,
)
from .predicates import (
    Atom,
    FULL_INTERVAL,
    PredicateClass,
    classify,
    mk_and,
    mk_or,
)
from .propositional import all_valuations, disjoint_monomials, mask_of, monomial_to_pred
from .sfa import (
    Sfa,
    Transition,
    dedupe_transitions,
    is_complete,
    is_deterministic,
    is_neat,
    reachable_states,
)
from .transforms import complete, to_feasible


class ProductMode(Enum):
    INTERSECT = "intersect"
    UNION = "union"


def pair_name(q1: str, q2: str) -> str:
    return f"({q1},{q2})"


def subset_name(qs) -> str:
    return "{" + ",".join(sorted(qs)) + "}"


def product(a: Sfa, b: Sfa, mode: ProductMode, counters: OpCounters | None = None) -> Sfa:
    """Synchronized product over the reachable pair states.

    Each pair of component transitions synchronizes on the conjunction of
    its predicates, kept only when satisfiable, so the output is feasible.
    Intersection accepts where both components do; union where either does,
    and requires deterministic complete inputs (a missing move in one
    component would silently drop words of the other).  Basic interval
    predicates conjoin into a single atom, so neat inputs give neat output.
    """
    counters = counters if counters is not None else OpCounters()
    a.binding.check_same(b.binding)
    if mode is ProductMode.UNION:
        if not (is_deterministic(a, counters) and is_deterministic(b, counters)):
            raise SfaError("union requires deterministic inputs")
        if not (is_complete(a, counters) and is_complete(b, counters)):
            raise SfaError("union requires complete inputs")
    out_a = a.out_map()
    out_b = b.out_map()
    start = (a.initial, b.initial)
    order = [start]
    seen = {start}
    edges = []
    i = 0
    while i < len(order):
        q1, q2 = order[i]
        i += 1
        for t1 in out_a[q1]:
            for t2 in out_b[q2]:
                pred = _conjoin(a.binding, t1.pred, t2.pred, counters)
                if pred is None:
                    continue
                target = (t1.dst, t2.dst)
                edges.append(
                    Transition(pair_name(q1, q2), pred, pair_name(*target))
                )
                if target not in seen:
                    seen.add(target)
                    order.append(target)
    if mode is ProductMode.INTERSECT:
        accepting = [p for p in order if p[0] in a.accepting and p[1] in b.accepting]
    else:
        accepting = [p for p in order if p[0] in a.accepting or p[1] in b.accepting]
    return Sfa(
        a.binding,
        tuple(pair_name(*p) for p in order),
        pair_name(*start),
        frozenset(pair_name(*p) for p in accepting),
        dedupe_transitions(edges),
    )


def _conjoin(binding, p1, p2, counters):
    """Satisfiable conjunction of two transition predicates, or None.

    Two basic interval predicates fold into one atom; anything else stays a
    conjunction node checked by the algebra's decision procedure.
    """
    counters.conj_built += 1
    if binding.is_monotonic and _is_basic(p1) and _is_basic(p2):
        counters.sat_calls += 1
        x = basic_to_atom(p1)
        y = basic_to_atom(p2)
        if x is None or y is None:
            return None
        z = atom_and(x, y)
        return Atom(z) if z is not None else None
    pred = mk_and([p1, p2])
    return pred if binding.is_sat(pred, counters) else None


def _is_basic(p) -> bool:
    return classify(p) is not PredicateClass.GENERAL


def complement(a: Sfa, counters: OpCounters | None = None) -> Sfa:
    """Swap accepting and rejecting states after completing.

    Requires a deterministic automaton (otherwise a word can have both an
    accepting and a rejecting run); unsatisfiable transitions are dropped
    first so the sink truly receives every missing letter.
    """
    counters = counters if counters is not None else OpCounters()
    if not is_deterministic(a, counters):
        raise NondeterministicInput("complement needs a deterministic automaton; determinize first")
    c = complete(to_feasible(a, counters), counters)
    return Sfa(c.binding, c.states, c.initial, frozenset(c.states) - c.accepting, c.transitions)


def determinize(a: Sfa, counters: OpCounters | None = None) -> Sfa:
    """Subset construction with minterm-labeled transitions.

    From a macro-state, every sign assignment over its outgoing component
    transitions (take ψ or ¬ψ) yields a minterm; satisfiable minterms with
    at least one positive member become transitions to the set of states
    those members reach.  Partial conjunctions are pruned as soon as they
    become unsatisfiable, and the all-negative residual is omitted, so the
    output may be incomplete.  Minterms are emitted as canonical atoms
    (interval) or disjoint monomials (propositional), hence always neat and
    pairwise disjoint: the output is deterministic.
    """
    counters = counters if counters is not None else OpCounters()
    a = to_feasible(a, counters)
    out = a.out_map()
    start = frozenset({a.initial})
    order = [start]
    seen = {start}
    edges = []
    i = 0
    while i < len(order):
        macro = order[i]
        i += 1
        ts = [t for q in sorted(macro) for t in out[q]]
        for pred, target in _minterms(a.binding, ts, counters):
            edges.append(Transition(subset_name(macro), pred, subset_name(target)))
            if target not in seen:
                seen.add(target)
                order.append(target)
    return Sfa(
        a.binding,
        tuple(subset_name(s) for s in order),
        subset_name(start),
        frozenset(subset_name(s) for s in order if s & a.accepting),
        dedupe_transitions(edges),
    )


def _minterms(binding, ts, counters):
    """Satisfiable minterms of a transition list, as (pred, target) pairs.

    Depth-first over include/exclude choices per transition, carrying the
    partial conjunction in solved form (canonical intervals or a valuation
    mask) and pruning empty ones; each emptiness test counts as a sat call.
    """
    results = []
    if binding.is_monotonic:
        dnfs = [to_dnf(t.pred) for t in ts]
        negs = [complement_intervals(d) for d in dnfs]

        def rec(j, cur, included):
            counters.sat_calls += 1
            if not cur:
                return
            if j == len(ts):
                if included:
                    target = frozenset(t.dst for t in included)
                    for atom in cur:
                        results.append((Atom(atom), target))
                return
            counters.conj_built += 2
            rec(j + 1, intersect_dnf(cur, dnfs[j]), included + [ts[j]])
            rec(j + 1, intersect_dnf(cur, negs[j]), included)

        rec(0, (FULL_INTERVAL,), [])
    else:
        k = binding.k
        masks = [mask_of(t.pred, k) for t in ts]
        full = frozenset(all_valuations(k))

        def rec(j, cur, included):
            counters.sat_calls += 1
            if not cur:
                return
            if j == len(ts):
                if included:
                    target = frozenset(t.dst for t in included)
                    for m in disjoint_monomials(cur, k):
                        results.append((monomial_to_pred(m), target))
                return
            counters.conj_built += 2
            rec(j + 1, cur & masks[j], included + [ts[j]])
            rec(j + 1, cur - masks[j], included)

        rec(0, full, [])
    return results


def minimize(a: Sfa, counters: OpCounters | None = None) -> Sfa:
    """Quotient by Moore partition refinement.

    Unreachable states are dropped, the automaton is completed internally
    when needed, blocks start as accepting/rejecting and split while two
    members disagree, on some satisfiable overlap of their outgoing
    predicates, about the target block.  The quotient keeps one
    representative's edges per block: verbatim for neat input (neat stays
    neat), merged per target block otherwise.  A block created only by the
    internal completion is removed again, so the result never exceeds the
    input's state count.
    """
    counters = counters if counters is not None else OpCounters()
    if not is_deterministic(a, counters):
        raise NondeterministicInput("minimize needs a deterministic automaton; determinize first")
    reach = reachable_states(a)
    if len(reach) < len(a.states):
        a = Sfa(
            a.binding,
            tuple(q for q in a.states if q in reach),
            a.initial,
            frozenset(q for q in a.accepting if q in reach),
            tuple(t for t in a.transitions if t.src in reach),
        )
    c = complete(a, counters)
    sink = c.states[-1] if len(c.states) > len(a.states) else None
    out = c.out_map()
    index = {q: i for i, q in enumerate(c.states)}
    block = {q: (q in c.accepting) for q in c.states}

    def one_step_equal(p, q):
        for t1 in out[p]:
            for t2 in out[q]:
                if block[t1.dst] == block[t2.dst]:
                    continue
                counters.conj_built += 1
                if c.binding.is_sat(mk_and([t1.pred, t2.pred]), counters):
                    return False
        return True

    while True:
        groups = {}
        reps = {}
        for q in c.states:
            bucket = reps.setdefault(block[q], [])
            match = next((r for r in bucket if one_step_equal(r, q)), None)
            if match is None:
                bucket.append(q)
                match = q
            groups[q] = (block[q], match)
        if len(set(groups.values())) == len(set(block.values())):
            break
        block = groups

    members = {}
    for q in c.states:
        members.setdefault(block[q], []).append(q)
    blocks = sorted(members.values(), key=lambda ms: min(index[q] for q in ms))
    name_of = {}
    for ms in blocks:
        nm = subset_name(ms)
        for q in ms:
            name_of[q] = nm
    dropped = name_of[sink] if sink is not None else None
    if dropped is not None and name_of[c.initial] == dropped:
        return Sfa(c.binding, (dropped,), dropped, frozenset(), ())
    neat_input = is_neat(c)
    edges = []
    kept = []
    for ms in blocks:
        nm = subset_name(ms)
        if nm == dropped:
            continue
        kept.append(nm)
        rep = min(ms, key=lambda q: index[q])
        rep_edges = [t for t in out[rep] if name_of[t.dst] != dropped]
        if neat_input:
            edges.extend(Transition(nm, t.pred, name_of[t.dst]) for t in rep_edges)
        else:
            order = []
            grouped = {}
            for t in rep_edges:
                dst = name_of[t.dst]
                if dst not in grouped:
                    order.append(dst)
                    grouped[dst] = []
                grouped[dst].append(t.pred)
            for dst in order:
                counters.disj_built += len(grouped[dst]) - 1
                edges.append(Transition(nm, mk_or(grouped[dst]), dst))
    return Sfa(
        c.binding,
        tuple(kept),
        name_of[c.initial],
        frozenset(name_of[q] for q in c.accepting),
        dedupe_transitions(edges),
    )


def is_empty(a: Sfa, assume_feasible: bool = False, counters: OpCounters | None = None) -> bool:
    """No accepting state is reachable from the initial state.

    With assume_feasible the search ignores predicates entirely; otherwise
    an edge is followed only if its predicate is satisfiable (at most one
    sat call per transition).
    """
    counters = counters if counters is not None else OpCounters()
    out = a.out_map()
    seen = {a.initial}
    stack = [a.initial]
    while stack:
        q = stack.pop()
        if q in a.accepting:
            return False
        for t in out[q]:
            if t.dst not in seen and (assume_feasible or a.binding.is_sat(t.pred, counters)):
                seen.add(t.dst)
                stack.append(t.dst)
    return True


def includes(a: Sfa, b: Sfa, counters: OpCounters | None = None) -> bool:
    """L(a) ⊆ L(b), via emptiness of L(a) ∩ complement(L(b)).

    b is determinized on demand (complementation needs it); a never is,
    since the product tolerates nondeterminism on its left input.  The
    product prunes unsatisfiable edges, so the emptiness check can take the
    feasible fast path.
    """
    counters = counters if counters is not None else OpCounters()
    a.binding.check_same(b.binding)
    if not is_deterministic(b, counters):
        b = determinize(b, counters)
    diff = product(a, complement(b, counters), ProductMode.INTERSECT, counters)
    return is_empty(diff, assume_feasible=True, counters=counters)


def equivalent(a: Sfa, b: Sfa, counters: OpCounters | None = None) -> bool:
    """Mutual inclusion."""
    return includes(a, b, counters) and includes(b, a, counters)
