"""The propositional algebra: letters are valuations of k propositions.

Atoms are literals (a proposition or its negation), so basic predicates are
monomials and their satisfiability is a linear contradiction scan.  General
predicates fall back to valuation enumeration, which is why k is capped.
There is no unique minimal monomial cover for a valuation set, so nothing
here canonicalizes general propositional predicates.
"""

from itertools import product

from .predicates import (
    FALSE,
    And,
    Atom,
    LiteralAtom,
    Not,
    Or,
    Predicate,
    TRUE,
    _FalsePred,
    _TruePred,
    mk_and,
    mk_or,
)

# Enumeration is 2^k; keep it desk-scale.
MAX_PROPS = 16

Valuation = tuple


def all_valuations(k: int):
    """All of {0,1}^k in lexicographic order."""
    return product((0, 1), repeat=k)


def eval_literal(lit: LiteralAtom, v: Valuation) -> bool:
    return v[lit.var] == (0 if lit.negated else 1)


def monomial_sat(lits, k: int) -> Valuation | None:
    """Witness for a conjunction of literals, or None on a contradiction.

    One linear scan: unsatisfiable iff some variable occurs with both
    polarities.  Unconstrained variables get 0, so the witness is also the
    lexicographically least satisfying valuation.
    """
    required = {}
    for lit in lits:
        want = 0 if lit.negated else 1
        if required.setdefault(lit.var, want) != want:
            return None
    return tuple(required.get(i, 0) for i in range(k))


def _literals_of_basic(p: Predicate):
    """Literal list of a basic predicate, or None if p is not basic here.

    FALSE (alone or as a conjunct) means unsatisfiable; represented by a
    contradictory pair so monomial_sat reports it.
    """
    if isinstance(p, _TruePred):
        return []
    if isinstance(p, _FalsePred):
        return [LiteralAtom(0, False), LiteralAtom(0, True)]
    if isinstance(p, Atom) and isinstance(p.payload, LiteralAtom):
        return [p.payload]
    if isinstance(p, And):
        lits = []
        for c in p.children:
            sub = _literals_of_basic(c)
            if sub is None:
                return None
            lits.extend(sub)
        return lits
    return None


def prop_sat(p: Predicate, k: int) -> Valuation | None:
    """First satisfying valuation in lexicographic order, or None.

    Basic predicates short-circuit through the contradiction scan; general
    ones enumerate all 2^k valuations.
    """
    if k > MAX_PROPS:
        raise ValueError(f"propositional algebra capped at {MAX_PROPS} propositions, got {k}")
    lits = _literals_of_basic(p)
    if lits is not None:
        return monomial_sat(lits, k)
    for v in all_valuations(k):
        if eval_prop(p, v):
            return v
    return None


def eval_prop(p: Predicate, v: Valuation) -> bool:
    if isinstance(p, _TruePred):
        return True
    if isinstance(p, _FalsePred):
        return False
    if isinstance(p, Atom):
        return eval_literal(p.payload, v)
    if isinstance(p, And):
        return all(eval_prop(c, v) for c in p.children)
    if isinstance(p, Or):
        return any(eval_prop(c, v) for c in p.children)
    if isinstance(p, Not):
        return not eval_prop(p.child, v)
    raise TypeError(f"not a predicate: {p!r}")


def prop_nnf(p: Predicate) -> Predicate:
    """Fold negations into literal atoms; no Not nodes survive."""
    return _nnf(p, False)


def _nnf(p: Predicate, neg: bool) -> Predicate:
    if isinstance(p, Not):
        return _nnf(p.child, not neg)
    if isinstance(p, _TruePred):
        return FALSE if neg else TRUE
    if isinstance(p, _FalsePred):
        return TRUE if neg else FALSE
    if isinstance(p, Atom):
        lit = p.payload
        return Atom(LiteralAtom(lit.var, not lit.negated)) if neg else p
    if isinstance(p, And):
        kids = [_nnf(c, neg) for c in p.children]
        return mk_or(kids) if neg else mk_and(kids)
    if isinstance(p, Or):
        kids = [_nnf(c, neg) for c in p.children]
        return mk_and(kids) if neg else mk_or(kids)
    raise TypeError(f"not a predicate: {p!r}")


def _monomials(p: Predicate):
    """Distribute an NNF predicate into monomials (sorted literal tuples).

    A monomial is a sorted, deduplicated tuple of literals; contradictory
    products are dropped as they appear.  Worst case exponential.
    """
    if isinstance(p, _TruePred):
        return [()]
    if isinstance(p, _FalsePred):
        return []
    if isinstance(p, Atom):
        return [(p.payload,)]
    if isinstance(p, Or):
        out = []
        for c in p.children:
            out.extend(_monomials(c))
        return out
    if isinstance(p, And):
        acc = [()]
        for c in p.children:
            nxt = []
            for m in _monomials(c):
                for a in acc:
                    merged = _merge_monomial(a, m)
                    if merged is not None:
                        nxt.append(merged)
            acc = nxt
            if not acc:
                return []
        return acc
    raise TypeError(f"unexpected node after NNF: {p!r}")


def _merge_monomial(a, b):
    pols = {}
    for lit in a + b:
        if pols.setdefault(lit.var, lit.negated) != lit.negated:
            return None
    return tuple(sorted(set(a + b), key=LiteralAtom.sort_key))


def monomial_to_pred(m) -> Predicate:
    return mk_and([Atom(lit) for lit in m])


def monomials_of(p: Predicate):
    """Satisfiable monomials whose union is equivalent to p.

    Deduplicated and sorted by literal order; disjuncts may overlap.  The
    empty monomial (p equivalent to true) collapses the list to [()].
    """
    mono = sorted(
        set(_monomials(prop_nnf(p))),
        key=lambda m: tuple(lit.sort_key() for lit in m),
    )
    if any(m == () for m in mono):
        return [()]
    return mono


def prop_to_dnf(p: Predicate) -> Predicate:
    """Disjunction of satisfiable monomials equivalent to p.

    Duplicate monomials are removed via canonical literal order; no
    minimality is attempted and disjuncts may overlap.
    """
    mono = monomials_of(p)
    if not mono:
        return FALSE
    return mk_or([monomial_to_pred(m) for m in mono])


def mask_of(p: Predicate, k: int) -> frozenset:
    """The denotation of p as a set of valuations."""
    return frozenset(v for v in all_valuations(k) if eval_prop(p, v))


def disjoint_monomials(vals: frozenset, k: int):
    """Cover a valuation set by pairwise disjoint monomials.

    Decision-tree decomposition on variables in index order: a subtree that
    is uniformly full emits the monomial of its path, so the cover is exact
    and its members never overlap.  Used where expanded predicates must not
    reintroduce nondeterminism.
    """
    out = []

    def rec(i, path, vs):
        if not vs:
            return
        if len(vs) == 1 << (k - i):
            out.append(tuple(path))
            return
        zeros = frozenset(v for v in vs if v[i] == 0)
        ones = vs - zeros
        path.append(LiteralAtom(i, negated=True))
        rec(i + 1, path, zeros)
        path[-1] = LiteralAtom(i, negated=False)
        rec(i + 1, path, ones)
        path.pop()

    rec(0, [], vals)
    return out
