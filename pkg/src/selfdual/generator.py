"""Seeded instance generation.

Random intersecting Sperner families are grown by repeated rejection: draw a
value x uniformly from [lo, hi) (defaults 2^(n-3) and 2^n - 2^(n-3)), read
its binary representation as a vertex subset, and keep it only if it neither
contains nor is contained in an accepted edge and intersects all of them.

Determinism contract: the PRNG is splitmix64 seeded directly with the 64-bit
seed, each trial consumes exactly one 64-bit output, and the candidate is
``lo + output mod (hi - lo)``.  Identical (seed, config) pairs therefore
produce identical hypergraphs on every platform and release.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Optional

from .core import MAX_VERTICES, Hypergraph, mask_from_vertices

log = logging.getLogger(__name__)

_MASK64 = (1 << 64) - 1


def splitmix64(seed: int) -> Iterator[int]:
    """The splitmix64 stream: documented, stable, one output per trial."""
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def default_trials(n: int) -> int:
    # 64 * 2^(n-3): keeps n=10 edge counts near the published benchmark scale
    return 64 * (1 << max(n - 3, 0))


@dataclass(frozen=True)
class GenConfig:
    """Generator parameters; lo/hi default to 2^(n-3) and 2^n - 2^(n-3)."""

    n: int
    trials: int
    seed: int
    lo: Optional[int] = None
    hi: Optional[int] = None

    def __post_init__(self) -> None:
        if not 2 <= self.n <= MAX_VERTICES:
            raise ValueError(f"n must be in [2, {MAX_VERTICES}], got {self.n}")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.lo is None:
            object.__setattr__(self, "lo", max(1, 1 << max(self.n - 3, 0)))
        if self.hi is None:
            object.__setattr__(self, "hi", (1 << self.n) - max(1, 1 << max(self.n - 3, 0)))
        if not 0 < self.lo < self.hi < (1 << self.n):
            raise ValueError(f"need 0 < lo < hi < 2^n, got lo={self.lo} hi={self.hi}")


def generate(cfg: GenConfig) -> Hypergraph:
    """Grow a random intersecting Sperner hypergraph, deterministically."""
    rng = splitmix64(cfg.seed)
    span = cfg.hi - cfg.lo
    edges: list[int] = []
    for _ in range(cfg.trials):
        t = cfg.lo + next(rng) % span
        ok = True
        for e in edges:
            if e & t == e or e & t == t or e & t == 0:
                ok = False
                break
        if ok:
            edges.append(t)
    if not edges:
        log.warning("all %d trials rejected; returning an empty hypergraph", cfg.trials)
    return Hypergraph(cfg.n, tuple(edges))


def binomial_family(n: int) -> Hypergraph:
    """All ceil(n/2)-subsets of an odd universe: a canonical self-dual family
    with C(n, ceil(n/2)) terms."""
    if n % 2 == 0:
        raise ValueError(f"n must be odd, got {n}")
    if not 3 <= n <= 25:
        raise ValueError(f"n must be in [3, 25], got {n}")
    k = (n + 1) // 2
    edges = tuple(mask_from_vertices(c) for c in combinations(range(n), k))
    assert len(edges) == comb(n, k)
    return Hypergraph(n, edges)
