"""Weight-ordered search for a non-self-duality witness.

A positive DNF whose terms pairwise intersect is self-dual unless some point
x has f(x) = 0 and f(x-bar) = 0.  Since min(w(x), w(x-bar)) <= floor(n/2) and
weight 0 can never work for a non-empty term set, scanning weights 1..n//2 in
ascending numeric order within each weight finds the least such witness or
proves there is none.
"""

from __future__ import annotations

from typing import Iterator

from .core import (
    Hypergraph,
    PreconditionError,
    SelfDualVerdict,
    validate_pidnf,
)


def enumerate_fixed_weight(n: int, i: int) -> Iterator[int]:
    """All n-bit values of popcount i in strictly ascending order.

    Gosper's hack: each step costs O(1) word operations.
    """
    if not 0 <= i <= n:
        raise ValueError(f"weight {i} out of range for n={n}")
    if i == 0:
        yield 0
        return
    limit = 1 << n
    x = (1 << i) - 1
    while x < limit:
        yield x
        low = x & -x
        ripple = x + low
        x = (((ripple ^ x) >> 2) // low) | ripple


def search_witness(f: Hypergraph) -> SelfDualVerdict:
    """Find the least-weight, least-value witness of non-self-duality, if any."""
    validate_pidnf(f)
    if not f.edges:
        raise PreconditionError("search_witness needs a non-empty term set")
    n = f.n
    edges = f.edges
    for i in range(1, n // 2 + 1):
        for x in enumerate_fixed_weight(n, i):
            # f(x-bar) = 0 means x hits every term; testing it first breaks
            # early on the first missed term, which is the common case
            for e in edges:
                if not e & x:
                    break
            else:
                for e in edges:
                    if e & x == e:
                        break
                else:
                    return SelfDualVerdict(self_dual=False, witness=x)
    return SelfDualVerdict(self_dual=True)
