"""Acceptance criteria 1-6, each with its tolerance and runtime budget.

Every test appends one PASS/FAIL line to the acceptance log, printed in the
terminal summary (and immediately, when run with ``-s``).
"""
import random
import time

import pytest

from irlab.catalog import F_NAMES, get
from irlab.enumerator import EnumerationConfig, count, enumerate_graphs, level_accounting
from irlab.graph import Graph, canonical_form, from_graph6, to_graph6
from irlab.patterns import find_induced, is_induced_embedding, is_p6_free
from irlab.solvers import (
    brute_force_gamma, brute_force_ir, domination_number, irredundance_number, is_irredundant,
    is_maximal_irredundant,
)
from irlab.verifier import (
    CONDITIONS, PerfectionCache, classify, verify_main_theorem, verify_sufficient_condition,
)

from oracles import all_labeled, burnside_count, certificate, irredundant_flags, maximal_by_supersets

EXPECTED_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


@pytest.fixture
def report(acceptance_log):
    def emit(number, title, ok, detail):
        line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title} ({detail})"
        acceptance_log.append(line)
        print(line)
    return emit


def random_graph(rng, n, p):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                                if rng.random() < p])


def test_criterion_1_catalog_validity(report):
    t0 = time.perf_counter()
    problems = []
    for name in F_NAMES:
        entry = get(name)
        g = entry.graph
        ir, gamma = irredundance_number(g).value, domination_number(g).value
        if not is_p6_free(g):
            problems.append(f"{name} contains P6")
        if not ir < gamma:
            problems.append(f"{name} ir={ir} gamma={gamma}")
        if (ir, gamma) != (entry.expected_ir, entry.expected_gamma):
            problems.append(f"{name} differs from frozen values")
        if g.n <= 9:
            if (brute_force_ir(g).value, brute_force_gamma(g).value) != (ir, gamma):
                problems.append(f"{name} oracle mismatch")
    f1 = get("F1").graph
    f1_vals = (brute_force_ir(f1).value, brute_force_gamma(f1).value)
    if f1_vals != (2, 3):
        problems.append(f"F1 oracle gives {f1_vals}")
    elapsed = time.perf_counter() - t0
    ok = not problems and elapsed < 60
    report(1, "F1..F11 P6-free with ir < gamma; F1 ir=2 gamma=3", ok,
           f"{elapsed:.1f}s, issues={problems}")
    assert not problems
    assert elapsed < 60


def test_criterion_2_oracle_equivalence(report):
    t0 = time.perf_counter()
    classes = mismatches = sets_checked = prop1_mismatches = 0
    for n in range(1, 7):
        for g in enumerate_graphs(EnumerationConfig(n)):
            classes += 1
            if (irredundance_number(g) != brute_force_ir(g)
                    or domination_number(g) != brute_force_gamma(g)):
                mismatches += 1
            flags = irredundant_flags(g)
            maxi = maximal_by_supersets(g, flags)
            for X in range(1 << g.n):
                if flags[X]:
                    sets_checked += 1
                    if is_maximal_irredundant(g, X) != maxi[X]:
                        prop1_mismatches += 1
    elapsed = time.perf_counter() - t0
    ok = classes == 208 and mismatches == 0 and prop1_mismatches == 0 and elapsed < 120
    report(2, "solvers equal brute force on all n<=6 classes; maximality criteria agree", ok,
           f"classes={classes}, value mismatches={mismatches}, irredundant sets={sets_checked}, "
           f"maximality mismatches={prop1_mismatches}, {elapsed:.1f}s")
    assert classes == 208
    assert mismatches == 0 and prop1_mismatches == 0
    assert elapsed < 120


def test_criterion_3_main_equivalence(report, sweep8):
    bad = verify_main_theorem(8, sweep8.records)
    p6_free = sum(r.p6_free for r in sweep8.records)
    self_ok = []
    cache = PerfectionCache()
    for name in ("F7", "F8", "F9", "F10", "F11"):
        rep = classify(get(name).graph, cache)
        self_ok.append(rep.perfect is False and rep.witness is not None
                       and rep.witness[0] == name)
    ok = not bad and all(self_ok) and sweep8.seconds < 600
    report(3, "P6-free n<=8: perfect iff no induced F1..F11", ok,
           f"classes={len(sweep8.records)}, p6_free={p6_free}, discrepancies={len(bad)}, "
           f"F7..F11 self-classified={sum(self_ok)}/5, sweep {sweep8.seconds:.1f}s")
    assert bad == []
    assert all(self_ok)
    assert sweep8.seconds < 600


def test_criterion_4_sufficient_conditions(report, sweep8):
    t0 = time.perf_counter()
    results = {c: len(verify_sufficient_condition(c, 8, sweep8.records)) for c in CONDITIONS}
    hyp = {c: sum(r.satisfies(c) for r in sweep8.records) for c in CONDITIONS}
    elapsed = sweep8.seconds + time.perf_counter() - t0
    ok = not any(results.values()) and elapsed < 600
    detail = ", ".join(f"{c}: {hyp[c]} graphs/{results[c]} violations" for c in CONDITIONS)
    report(4, "seven sufficient conditions, n<=8", ok, f"{detail}, {elapsed:.1f}s")
    assert not any(results.values()), results
    assert elapsed < 600


def test_criterion_5_enumeration_counts(report):
    counts = {n: count(EnumerationConfig(n)) for n in range(1, 9)}
    naive = {}
    for n in range(1, 6):
        naive[n] = len({certificate(g) for g in all_labeled(n)})
    naive[6] = len({canonical_form(g) for g in all_labeled(6)})
    orbit = {n: burnside_count(n) for n in range(1, 9)}
    acct = {n: level_accounting(n) for n in (7, 8)}
    ok = (counts == EXPECTED_COUNTS
          and all(naive[n] == counts[n] for n in naive)
          and orbit == counts
          and all(a["ok"] for a in acct.values()))
    report(5, "class counts n=1..8", ok,
           f"counts={list(counts.values())}, naive n<=6 agree={all(naive[n] == counts[n] for n in naive)}, "
           f"orbit count agree={orbit == counts}, accounting n=7,8 ok="
           f"{[acct[n]['ok'] for n in (7, 8)]}")
    assert counts == EXPECTED_COUNTS
    assert all(naive[n] == counts[n] for n in naive)
    assert orbit == counts
    for n, a in acct.items():
        assert a["ok"], a


def test_criterion_6_property_suite(report):
    rng = random.Random(20240601)
    per_property = 2000
    failures = {k: 0 for k in ("ir<=gamma", "heredity", "graph6", "embedding", "cache")}
    patterns = [get(x).graph for x in ("P4", "P5", "C6", "G1", "F1")]
    warm = PerfectionCache()
    cases = 0
    for _ in range(per_property):
        g = random_graph(rng, rng.randint(1, 12), rng.choice([0.2, 0.35, 0.5, 0.7]))
        if irredundance_number(g).value > domination_number(g).value:
            failures["ir<=gamma"] += 1
        cases += 1
    for _ in range(per_property):
        g = random_graph(rng, rng.randint(1, 14), rng.random())
        X = rng.getrandbits(g.n)
        while not is_irredundant(g, X):
            X &= X - 1
        Y = X & rng.getrandbits(g.n)
        if not is_irredundant(g, Y):
            failures["heredity"] += 1
        cases += 1
    for _ in range(per_property):
        g = random_graph(rng, rng.randint(0, 64), rng.random())
        if from_graph6(to_graph6(g)) != g:
            failures["graph6"] += 1
        cases += 1
    for _ in range(per_property):
        g = random_graph(rng, rng.randint(4, 12), rng.choice([0.3, 0.5, 0.7]))
        p = rng.choice(patterns)
        emb = find_induced(g, p)
        if emb is not None and not is_induced_embedding(g, p, emb):
            failures["embedding"] += 1
        cases += 1
    for _ in range(per_property):
        g = random_graph(rng, rng.randint(1, 8), rng.choice([0.3, 0.5, 0.7]))
        if classify(g, PerfectionCache()) != classify(g, warm):
            failures["cache"] += 1
        cases += 1
    ok = cases >= 10_000 and not any(failures.values())
    report(6, "randomized property suite", ok, f"cases={cases}, failures={failures}")
    assert cases >= 10_000
    assert not any(failures.values()), failures
