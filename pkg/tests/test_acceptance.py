"""Acceptance suite: one criterion per test, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
The timing criterion compares medians produced by the bench CLI on this
machine; only the relative ordering is asserted, never absolute seconds.
"""

import random
import time

import pytest

from selfdual import (
    GenConfig,
    Hypergraph,
    adjusted_zero_count,
    algorithm_dual,
    binomial_family,
    brute_count_hitting_sets,
    brute_dualize,
    complement,
    count_hit_subset,
    count_hitting_sets,
    evaluate,
    fk_check_dual,
    fk_selfdual,
    generate,
    mask_from_vertices,
    min_reduce,
    search_witness,
    selfdual_by_count,
)
from selfdual.cli import main

FIG = Hypergraph.from_edge_sets(5, [[0, 3], [0, 4], [1, 3, 4], [0, 1, 2], [2, 3, 4]])


def _report(num: int, ok: bool, detail: str) -> None:
    print(f"{'PASS' if ok else 'FAIL'} criterion {num}: {detail}")
    assert ok, detail


@pytest.fixture(scope="module")
def corpus():
    """200 seeded generated instances with n <= 12, plus their truth tables."""
    items = []
    for i in range(200):
        n = 3 + i % 10
        h = generate(GenConfig(n=n, trials=80, seed=i))
        if not h.edges:
            continue
        table = [evaluate(h, x) for x in range(1 << n)]
        items.append((h, table))
    assert len(items) == 200  # the first trial is always accepted, none are empty
    return items


def test_criterion_1_worked_example():
    start = time.perf_counter()
    e = mask_from_vertices([0, 3])
    ok = (
        count_hit_subset(FIG, e, mask_from_vertices([0])) == 5
        and count_hit_subset(FIG, e, mask_from_vertices([3])) == 3
        and count_hit_subset(FIG, e, e) == 8
        and count_hitting_sets(FIG) == 16
        and selfdual_by_count(FIG).self_dual
        and search_witness(FIG).self_dual
        and algorithm_dual(FIG).self_dual
        and fk_selfdual(FIG).self_dual
    )
    elapsed = time.perf_counter() - start
    _report(1, ok and elapsed < 1.0,
            f"subset counts 5/3/8, total 16, four SelfDual verdicts in {elapsed:.3f}s")


def test_criterion_2_binomial_family():
    start = time.perf_counter()
    expected_sizes = {5: 10, 7: 35, 9: 126}
    ok = True
    for n, m in expected_sizes.items():
        h = binomial_family(n)
        ok &= len(h.edges) == m
        v = selfdual_by_count(h)
        ok &= v.self_dual and v.count == 1 << (n - 1)
        ok &= search_witness(h).self_dual
        ok &= algorithm_dual(h).self_dual
        ok &= fk_selfdual(h).self_dual
    elapsed = time.perf_counter() - start
    _report(2, ok and elapsed < 10.0,
            f"n=5/7/9 sizes 10/35/126, all SelfDual, exact counts, {elapsed:.1f}s")


def test_criterion_3_oracle_equivalence(corpus):
    start = time.perf_counter()
    checked = 0
    ok = True
    for h, table in corpus:
        n = h.n
        zeros_by_eval = (1 << n) - sum(table)
        adjusted = adjusted_zero_count(h)
        brute = brute_count_hitting_sets(h) << (n - _occ(h))
        ok &= adjusted == brute == zeros_by_eval
        verdicts = {
            selfdual_by_count(h).self_dual,
            search_witness(h).self_dual,
            algorithm_dual(h).self_dual,
            fk_selfdual(h).self_dual,
        }
        ok &= len(verdicts) == 1
        checked += 1
    elapsed = time.perf_counter() - start
    _report(3, ok and checked >= 200 and elapsed < 120.0,
            f"{checked} instances, exact count agreement + 4-way verdicts, {elapsed:.1f}s")


def _occ(h: Hypergraph) -> int:
    m = 0
    for e in h.edges:
        m |= e
    return m.bit_count()


def test_criterion_4_pairwise_intersection_property(corpus):
    ok = True
    for h, table in corpus:
        full = (1 << h.n) - 1
        ok &= all(table[x] + table[full ^ x] <= 1 for x in range(1 << h.n))
    _report(4, ok, f"f(x)+f(x-bar) <= 1 at all points of {len(corpus)} instances")


def test_criterion_5_witness_soundness(corpus):
    failures = 0
    witnesses = 0
    for h, table in corpus:
        full = (1 << h.n) - 1
        for verdict in (search_witness(h), fk_selfdual(h)):
            if verdict.self_dual or verdict.witness is None:
                continue
            witnesses += 1
            x = verdict.witness
            if table[x] != 0 or table[full ^ x] != 0:
                failures += 1
    _report(5, failures == 0 and witnesses > 0,
            f"{witnesses} witnesses re-verified, {failures} failures")


def test_criterion_6_fk_duality_oracle():
    start = time.perf_counter()
    rng = random.Random(606)
    pairs = 0
    ok = True
    while pairs < 50:
        n = rng.randint(2, 8)
        f = Hypergraph(n, min_reduce(tuple(rng.randrange(1, 1 << n)
                                           for _ in range(rng.randint(1, 6)))))
        g = brute_dualize(f)
        ok &= fk_check_dual(f, g).dual
        for i in range(len(g.edges)):
            g2 = Hypergraph(n, g.edges[:i] + g.edges[i + 1:])
            v = fk_check_dual(f, g2)
            ok &= not v.dual
            ok &= evaluate(f, v.witness) == evaluate(g2, complement(v.witness, n))
        pairs += 1
    elapsed = time.perf_counter() - start
    _report(6, ok and elapsed < 120.0,
            f"{pairs} dual pairs confirmed, every edge removal flips with a valid witness, "
            f"{elapsed:.1f}s")


def test_criterion_7_relative_performance(tmp_path):
    start = time.perf_counter()
    out = tmp_path / "bench.csv"
    rc = main(["bench", "--sizes", "14..16", "--algos", "fk,count,brute,search",
               "--seed", "0", "--repeats", "3", "--csv", str(out)])
    lines = out.read_text().splitlines()[1:]
    ok = rc == 0 and len(lines) == 3
    orderings = []
    for line in lines:
        cells = line.split(",")
        fk, count, brute, search = (float(cells[i]) for i in (3, 4, 5, 6))
        orderings.append(f"n={cells[0]}: {brute:.3f} > {fk:.3f} > {count:.3f} > {search:.3f}")
        ok &= brute > fk > count > search
    elapsed = time.perf_counter() - start
    _report(7, ok and elapsed < 300.0,
            "; ".join(orderings) + f" (total {elapsed:.0f}s)")


def test_criterion_8_determinism(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["bench", "--seed", "1", "--sizes", "10..13", "--repeats", "1"]
    ok = main(args + ["--csv", str(a)]) == 0
    ok &= main(args + ["--csv", str(b)]) == 0

    def strip_timings(text):
        return [[c for i, c in enumerate(row.split(",")) if i not in (3, 4, 5, 6)]
                for row in text.splitlines()]

    ok &= strip_timings(a.read_text()) == strip_timings(b.read_text())

    fa, fb = tmp_path / "a.hg", tmp_path / "b.hg"
    ok &= main(["gen", "-n", "12", "--seed", "9", "-o", str(fa)]) == 0
    ok &= main(["gen", "-n", "12", "--seed", "9", "-o", str(fb)]) == 0
    ok &= fa.read_bytes() == fb.read_bytes()
    _report(8, ok, "bench CSV identical modulo timing columns; gen files byte-identical")
