"""Mutual-duality testing by recursive decomposition (the "A1" baseline).

Two Sperner term sets F, G over the same variables are mutually dual iff
f(x) = NOT g(complement(x)) everywhere.  The decider recurses on the most
frequent variable v: writing f = (x_v AND f1) OR f0 and likewise for g, the
pair is dual iff (F0, G0 ∪ G1) and (G0, F0 ∪ F1) are both dual pairs (after
restoring the Sperner property by deleting supersets).  Recursion bottoms
out through three short-circuits:

- a disjoint edge pair (e, t) immediately yields the witness x = e, which
  satisfies both functions at mirrored points;
- at most one term on one side is decidable directly;
- if the terms are collectively too long (sum of 2^-|e| over both sides
  below 1) a point with f(x) = 0 = g(complement(x)) must exist and a greedy
  bit-by-bit walk that always picks the value of smaller conditional
  expectation pins one down deterministically.

Every witness produced by lifting out of a subproblem is re-verified by
direct evaluation before being returned.
"""

from __future__ import annotations

from fractions import Fraction

from .core import (
    DualVerdict,
    Hypergraph,
    PreconditionError,
    SelfDualVerdict,
    evaluate,
    find_containment_pair,
    format_mask,
    validate_pidnf,
)


def min_reduce(edges: tuple[int, ...]) -> tuple[int, ...]:
    """Keep only inclusion-minimal edges (dedup included); order by size then value."""
    ordered = sorted(set(edges), key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for e in ordered:
        if not any(m & e == m for m in kept):
            kept.append(e)
    return tuple(kept)


def _eval_edges(edges: tuple[int, ...], x: int) -> int:
    return 1 if any(e & x == e for e in edges) else 0


def _volume_deficient(fe: tuple[int, ...], ge: tuple[int, ...]) -> bool:
    vol = sum(Fraction(1, 1 << e.bit_count()) for e in fe)
    vol += sum(Fraction(1, 1 << t.bit_count()) for t in ge)
    return vol < 1


def _volume_witness(universe: int, fe: tuple[int, ...], ge: tuple[int, ...]) -> int:
    """Greedy conditional-expectation walk to a point with f(x)=0 and g(x-bar)=0.

    The random events are "edge e of F inside supp(x)" and "edge t of G
    disjoint from supp(x)"; their expected number under uniform x is below 1,
    and fixing each bit to the value of smaller conditional expectation keeps
    it below 1, so the final integral value is 0 events.
    """
    ones = 0
    zeros = 0

    def expectation(ones_m: int, zeros_m: int) -> Fraction:
        assigned = ones_m | zeros_m
        total = Fraction(0)
        for e in fe:
            if e & zeros_m:
                continue
            total += Fraction(1, 1 << (e & ~assigned).bit_count())
        for t in ge:
            if t & ones_m:
                continue
            total += Fraction(1, 1 << (t & ~assigned).bit_count())
        return total

    m = universe
    while m:
        bit = m & -m
        m ^= bit
        if expectation(ones, zeros | bit) <= expectation(ones | bit, zeros):
            zeros |= bit
        else:
            ones |= bit
    return ones


def _base_case(n: int, fe: tuple[int, ...], ge: tuple[int, ...]) -> DualVerdict:
    # reached with |F|*|G| <= 1, both sides Sperner, no disjoint (e, t) pair
    if not fe and not ge:
        return DualVerdict(dual=False, witness=0)
    if not fe:
        if len(ge) == 1 and ge[0] == 0:
            return DualVerdict(dual=True)
        # f is constant 0; picking every vertex of G blocks each of its terms
        return DualVerdict(dual=False, witness=_or_all(ge))
    if not ge:
        if len(fe) == 1 and fe[0] == 0:
            return DualVerdict(dual=True)
        return DualVerdict(dual=False, witness=0)
    e, t = fe[0], ge[0]
    # an empty edge on either side would be disjoint from the other side's
    # edge and was caught earlier, so e and t are non-empty and intersect
    if e == t and e.bit_count() == 1:
        return DualVerdict(dual=True)
    common = e & t
    if e.bit_count() >= 2:
        return DualVerdict(dual=False, witness=common & -common)
    # e is a singleton strictly inside t
    extra = t & ~e
    return DualVerdict(dual=False, witness=extra & -extra)


def _or_all(edges: tuple[int, ...]) -> int:
    m = 0
    for e in edges:
        m |= e
    return m


def _fk(n: int, fe: tuple[int, ...], ge: tuple[int, ...]) -> DualVerdict:
    full = (1 << n) - 1

    for e in fe:
        for t in ge:
            if e & t == 0:
                return DualVerdict(dual=False, witness=e)

    if len(fe) * len(ge) <= 1:
        return _base_case(n, fe, ge)

    if _volume_deficient(fe, ge):
        universe = _or_all(fe) | _or_all(ge)
        return DualVerdict(dual=False, witness=_volume_witness(universe, fe, ge))

    universe = _or_all(fe) | _or_all(ge)
    best_v, best_count = -1, -1
    m = universe
    while m:
        bit = m & -m
        m ^= bit
        count = sum(1 for e in fe if e & bit) + sum(1 for t in ge if t & bit)
        if count > best_count:
            best_count = count
            best_v = bit.bit_length() - 1
    bit = 1 << best_v

    f0 = tuple(e for e in fe if not e & bit)
    f1 = tuple(e & ~bit for e in fe if e & bit)
    g0 = tuple(t for t in ge if not t & bit)
    g1 = tuple(t & ~bit for t in ge if t & bit)

    sub = _fk(n, f0, min_reduce(g0 + g1))
    if not sub.dual:
        x = sub.witness & ~bit
        _check_lift(n, fe, ge, x)
        return DualVerdict(dual=False, witness=x)

    sub = _fk(n, g0, min_reduce(f0 + f1))
    if not sub.dual:
        x = (full ^ sub.witness) | bit
        _check_lift(n, fe, ge, x)
        return DualVerdict(dual=False, witness=x)

    return DualVerdict(dual=True)


def _check_lift(n: int, fe: tuple[int, ...], ge: tuple[int, ...], x: int) -> None:
    full = (1 << n) - 1
    if _eval_edges(fe, x) != _eval_edges(ge, full ^ x):
        raise AssertionError(f"invalid lifted witness {x:#x}")


def fk_check_dual(f: Hypergraph, g: Hypergraph) -> DualVerdict:
    """Decide whether f and g are mutually dual term sets.

    Both inputs must be Sperner over the same universe size.  A NotDual
    verdict carries an x with evaluate(f, x) == evaluate(g, complement(x)).
    """
    if f.n != g.n:
        raise PreconditionError(f"universe mismatch: {f.n} vs {g.n}")
    for name, h in (("F", f), ("G", g)):
        pair = find_containment_pair(h)
        if pair is not None:
            raise PreconditionError(
                f"{name} is not Sperner: {format_mask(pair[0])} inside {format_mask(pair[1])}"
            )
    verdict = _fk(f.n, f.edges, g.edges)
    if not verdict.dual:
        _check_lift(f.n, f.edges, g.edges, verdict.witness)
    return verdict


def fk_selfdual(f: Hypergraph) -> SelfDualVerdict:
    """Self-duality via the duality test applied to (f, f).

    Requires the usual Sperner + pairwise-intersection preconditions so that
    a NotDual witness x (which has f(x) = f(x-bar)) is guaranteed to satisfy
    f(x) = f(x-bar) = 0.
    """
    validate_pidnf(f)
    verdict = _fk(f.n, f.edges, f.edges)
    if verdict.dual:
        return SelfDualVerdict(self_dual=True)
    x = verdict.witness
    full = (1 << f.n) - 1
    if evaluate(f, x) or evaluate(f, full ^ x):
        raise AssertionError("witness violates the pairwise-intersection guarantee")
    return SelfDualVerdict(self_dual=False, witness=x)


__all__ = ["fk_check_dual", "fk_selfdual", "min_reduce"]
