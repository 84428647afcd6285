"""Irredundance-perfection classification and exhaustive verification sweeps.

Perfection is decided by recursion on one-vertex deletions, memoised on
canonical form: a graph is perfect iff ``ir = gamma`` for it and every
one-vertex deletion is perfect.  Sweeps walk the enumerator level by level,
so every deletion of a level-``n`` graph is already in the cache when the
level is resolved.
"""
from __future__ import annotations

import json
import logging
import multiprocessing
import os
import threading
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Callable, Iterable, Iterator, Mapping, Optional, Sequence, Union

from irlab import kernels
from irlab.catalog import F_NAMES, catalog
from irlab.enumerator import level
from irlab.graph import Graph, canonical_form, from_graph6, to_graph6
from irlab.patterns import Embedding, bollobas_cockayne_condition, find_induced, is_p6_free
from irlab.solvers import domination_number, irredundance_number

log = logging.getLogger(__name__)

PERFECTION_ORDER_LIMIT = 17
SWEEP_ORDER_LIMIT = 9
CACHE_HEADER = "irlab-cache v1"

# Hypotheses of the known sufficient conditions, as forbidden catalog names.
# BC is the pair-of-P4 condition and is tested separately.
CONDITIONS: dict[str, tuple[str, ...]] = {
    "BC": (),
    "FAVARON": ("P6", "C6", "TWO_P4", "G1", "G2", "G3"),
    "FG1G2": ("P6", "G1", "G2"),
    "VZ": ("P6", "G1", "G5"),
    "PUECH": ("P6", "H"),
    "PG4G5": ("P6", "G4", "G5"),
    "P5FREE": ("P5",),
}
_CONDITION_PATTERNS = ("P5", "P6", "C6", "TWO_P4", "G1", "G2", "G3", "G4", "G5", "H")


class GuardError(ValueError):
    """Input outside the supported desk-scale range."""


# ---------------------------------------------------------------------------
# cache
# ---------------------------------------------------------------------------

class PerfectionCache:
    """Canonical form -> (ir, gamma, perfect).  Safe for concurrent use.

    Values are pure functions of the key, so concurrent writers of one key
    always agree and the last write wins harmlessly.
    """

    def __init__(self):
        self._data: dict[bytes, tuple[int, int, bool]] = {}
        self._lock = threading.Lock()
        self.put(b"?", 0, 0, True)

    def get(self, key: bytes) -> Optional[tuple[int, int, bool]]:
        with self._lock:
            return self._data.get(key)

    def put(self, key: bytes, ir: int, gamma: int, perfect: bool) -> None:
        with self._lock:
            self._data[key] = (ir, gamma, bool(perfect))

    def __contains__(self, key: bytes) -> bool:
        with self._lock:
            return key in self._data

    def __len__(self) -> int:
        with self._lock:
            return len(self._data)

    def items(self):
        with self._lock:
            return sorted(self._data.items())

    def save(self, path: str | os.PathLike) -> None:
        path = Path(path)
        tmp = path.with_name(path.name + ".tmp")
        with open(tmp, "w") as fh:
            fh.write(CACHE_HEADER + "\n")
            for key, (ir, gamma, perfect) in self.items():
                fh.write(f"{key.decode('ascii')} {ir} {gamma} {int(perfect)}\n")
        os.replace(tmp, path)

    @classmethod
    def load(cls, path: str | os.PathLike) -> "PerfectionCache":
        cache = cls()
        with open(path) as fh:
            header = fh.readline().rstrip("\n")
            if header != CACHE_HEADER:
                raise ValueError(f"unsupported cache header {header!r}")
            for lineno, line in enumerate(fh, start=2):
                parts = line.split()
                if not parts:
                    continue
                if len(parts) != 4 or parts[3] not in ("0", "1"):
                    raise ValueError(f"{path}:{lineno}: malformed cache line")
                cache.put(parts[0].encode("ascii"), int(parts[1]), int(parts[2]),
                          parts[3] == "1")
        return cache

    @classmethod
    def open(cls, path: str | os.PathLike | None) -> "PerfectionCache":
        if path and Path(path).exists():
            return cls.load(path)
        return cls()


# ---------------------------------------------------------------------------
# single-graph classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClassificationReport:
    graph6: str
    n: int
    ir: int
    gamma: int
    p6_free: bool
    perfect: bool
    witness: Optional[tuple[str, Embedding]]
    equal_here: bool

    def to_json(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "ir": self.ir,
            "gamma": self.gamma,
            "p6_free": self.p6_free,
            "perfect": self.perfect,
            "witness_name": self.witness[0] if self.witness else None,
            "witness_map": list(self.witness[1]) if self.witness else None,
            "equal_here": self.equal_here,
        }


def _guard(g: Graph, limit: int = PERFECTION_ORDER_LIMIT) -> None:
    if g.n > limit:
        raise GuardError(f"order {g.n} exceeds the limit of {limit}")


def _canonical(g: Graph) -> tuple[bytes, Graph]:
    order, key = kernels.canon_label(g.n, g.adj)
    cg = Graph(g.n, tuple(key))
    return to_graph6(cg).encode("ascii"), cg


def _perfect(cf: bytes, cg: Graph, cache: PerfectionCache) -> bool:
    hit = cache.get(cf)
    if hit is not None:
        return hit[2]
    ir = irredundance_number(cg).value
    gamma = domination_number(cg).value
    perfect = ir == gamma
    if perfect:
        seen = set()
        for v in range(cg.n):
            sub_cf, sub = _canonical(cg.delete_vertex(v))
            if sub_cf in seen:
                continue
            seen.add(sub_cf)
            if not _perfect(sub_cf, sub, cache):
                perfect = False
                break
    cache.put(cf, ir, gamma, perfect)
    return perfect


def is_irredundance_perfect(g: Graph, cache: Optional[PerfectionCache] = None) -> bool:
    """``ir(H) = gamma(H)`` for every induced subgraph ``H`` of ``g``."""
    _guard(g)
    if cache is None:
        cache = PerfectionCache()
    cf, cg = _canonical(g)
    return _perfect(cf, cg, cache)


def _f_patterns(overrides: Optional[Mapping[str, Graph]] = None) -> list[tuple[str, Graph]]:
    entries = [(e.order, i, e.name, e.graph) for i, e in enumerate(catalog())
               if e.name in F_NAMES]
    if overrides:
        entries = [(overrides.get(name, g).n, i, name, overrides.get(name, g))
                   for _, i, name, g in entries]
    return [(name, g) for _, _, name, g in sorted(entries)]


Patterns = Union[Mapping[str, Graph], Sequence[tuple[str, Graph]], None]


def _resolve_patterns(patterns: Patterns) -> list[tuple[str, Graph]]:
    """None -> catalog F1..F11; a mapping overrides catalog entries by name."""
    if patterns is None or isinstance(patterns, Mapping):
        return _f_patterns(patterns)
    return list(patterns)


def _witness(g: Graph, patterns: Sequence[tuple[str, Graph]]) -> Optional[tuple[str, Embedding]]:
    for name, pat in patterns:
        if pat.n > g.n:
            continue
        emb = find_induced(g, pat)
        if emb is not None:
            return name, emb
    return None


def classify(g: Graph, cache: Optional[PerfectionCache] = None,
             patterns: Patterns = None) -> ClassificationReport:
    _guard(g)
    if cache is None:
        cache = PerfectionCache()
    perfect = is_irredundance_perfect(g, cache)
    ir, gamma, _ = cache.get(canonical_form(g))
    return ClassificationReport(
        graph6=to_graph6(g),
        n=g.n,
        ir=ir,
        gamma=gamma,
        p6_free=is_p6_free(g),
        perfect=perfect,
        witness=_witness(g, _resolve_patterns(patterns)),
        equal_here=ir == gamma,
    )


def minimality_report(names: Iterable[str] = F_NAMES,
                      cache: Optional[PerfectionCache] = None) -> dict[str, list[bool]]:
    """For each named graph, whether each one-vertex deletion is perfect."""
    if cache is None:
        cache = PerfectionCache()
    by_name = {e.name: e for e in catalog()}
    out = {}
    for name in names:
        g = by_name[name].graph
        out[name] = [is_irredundance_perfect(g.delete_vertex(v), cache) for v in range(g.n)]
    return out


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------

@dataclass
class GraphRecord:
    """Everything a sweep learns about one isomorphism class."""

    graph6: str
    n: int
    ir: int
    gamma: int
    p6_free: bool
    witness: Optional[tuple[str, Embedding]]
    contains: frozenset[str]
    bc: bool
    deletions: tuple[bytes, ...]
    perfect: Optional[bool] = None

    def report(self) -> ClassificationReport:
        return ClassificationReport(self.graph6, self.n, self.ir, self.gamma, self.p6_free,
                                    bool(self.perfect), self.witness, self.ir == self.gamma)

    def satisfies(self, condition: str) -> bool:
        if condition == "BC":
            return self.bc
        return not (self.contains & set(CONDITIONS[condition]))

    def to_checkpoint(self) -> dict:
        return {
            "g6": self.graph6, "ir": self.ir, "gamma": self.gamma, "p6": self.p6_free,
            "w": [self.witness[0], list(self.witness[1])] if self.witness else None,
            "c": sorted(self.contains), "bc": self.bc,
            "d": [d.decode("ascii") for d in self.deletions],
        }

    @classmethod
    def from_checkpoint(cls, n: int, row: dict) -> "GraphRecord":
        return cls(row["g6"], n, row["ir"], row["gamma"], row["p6"],
                   (row["w"][0], tuple(row["w"][1])) if row["w"] else None,
                   frozenset(row["c"]), row["bc"],
                   tuple(d.encode("ascii") for d in row["d"]))


_worker_patterns: list[tuple[str, Graph]] = []
_condition_graphs = {e.name: e.graph for e in catalog() if e.name in _CONDITION_PATTERNS}


def _init_worker(patterns):
    global _worker_patterns
    _worker_patterns = patterns


def _analyze(task) -> GraphRecord:
    n, key, known = task
    g = Graph(n, key)
    if known is None:
        ir = irredundance_number(g).value
        gamma = domination_number(g).value
    else:
        ir, gamma = known
    deletions = []
    for v in range(n):
        _, dk = kernels.canon_label(n - 1, g.delete_vertex(v).adj)
        deletions.append(to_graph6(Graph(n - 1, tuple(dk))).encode("ascii"))
    contains = frozenset(name for name, pat in _condition_graphs.items()
                         if pat.n <= n and find_induced(g, pat) is not None)
    return GraphRecord(
        graph6=to_graph6(g), n=n, ir=ir, gamma=gamma,
        p6_free="P6" not in contains,
        witness=_witness(g, _worker_patterns),
        contains=contains,
        bc=bollobas_cockayne_condition(g),
        deletions=tuple(sorted(set(deletions))),
    )


def _chunks(seq, size):
    for i in range(0, len(seq), size):
        yield i // size, seq[i:i + size]


def _analyze_level(n, keys, cache, patterns, jobs, checkpoint: Optional[Path],
                   chunk_size: int = 5000) -> list[GraphRecord]:
    out: list[GraphRecord] = []
    pool = None
    if jobs > 1:
        pool = multiprocessing.get_context("fork").Pool(jobs, _init_worker, (patterns,))
    else:
        _init_worker(patterns)
    try:
        for idx, chunk in _chunks(keys, chunk_size):
            part = checkpoint / f"level{n}.part{idx}.jsonl" if checkpoint else None
            if part is not None and part.exists():
                with open(part) as fh:
                    out.extend(GraphRecord.from_checkpoint(n, json.loads(line)) for line in fh)
                continue
            tasks = []
            for key in chunk:
                hit = cache.get(to_graph6(Graph(n, key)).encode("ascii"))
                tasks.append((n, key, hit[:2] if hit else None))
            if pool is not None:
                recs = pool.map(_analyze, tasks, chunksize=max(1, len(tasks) // (4 * jobs)))
            else:
                recs = [_analyze(t) for t in tasks]
            if part is not None:
                tmp = part.with_name(part.name + ".tmp")
                with open(tmp, "w") as fh:
                    for r in recs:
                        fh.write(json.dumps(r.to_checkpoint()) + "\n")
                os.replace(tmp, part)
            out.extend(recs)
            log.info("level %d: %d/%d analysed", n, len(out), len(keys))
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    return out


def iter_records(max_n: int, cache: Optional[PerfectionCache] = None, jobs: int = 1,
                 patterns: Patterns = None,
                 checkpoint: str | os.PathLike | None = None,
                 min_n: int = 1) -> Iterator[GraphRecord]:
    """Records for every class with ``min_n <= n <= max_n``, level by level.

    Perfection of a level is resolved from the cache, which must hold every
    smaller level; lower levels are analysed (not yielded) when needed.
    """
    if not 1 <= max_n <= SWEEP_ORDER_LIMIT:
        raise GuardError(f"max_n must be in 1..{SWEEP_ORDER_LIMIT}, got {max_n}")
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    if cache is None:
        cache = PerfectionCache()
    patterns = _resolve_patterns(patterns)
    ckpt = Path(checkpoint) if checkpoint else None
    if ckpt is not None:
        ckpt.mkdir(parents=True, exist_ok=True)
    for n in range(1, max_n + 1):
        keys = level(n)
        records = _analyze_level(n, keys, cache, patterns, jobs, ckpt)
        for rec in records:
            perfect = rec.ir == rec.gamma
            if perfect:
                for d in rec.deletions:
                    hit = cache.get(d)
                    if hit is None:
                        raise AssertionError(f"deletion {d!r} of {rec.graph6} not cached")
                    if not hit[2]:
                        perfect = False
                        break
            rec.perfect = perfect
            cache.put(rec.graph6.encode("ascii"), rec.ir, rec.gamma, perfect)
        if n >= min_n:
            yield from records


def collect(max_n: int, **kwargs) -> list[GraphRecord]:
    return list(iter_records(max_n, **kwargs))


def _records(max_n, records, **kwargs):
    if records is None:
        return collect(max_n, **kwargs)
    return [r for r in records if r.n <= max_n]


def verify_main_theorem(max_n: int, records: Optional[Sequence[GraphRecord]] = None,
                        **kwargs) -> list[GraphRecord]:
    """P6-free classes up to ``max_n`` where perfection disagrees with F-freeness."""
    return [r for r in _records(max_n, records, **kwargs)
            if r.p6_free and r.perfect != (r.witness is None)]


def verify_sufficient_condition(name: str, max_n: int,
                                records: Optional[Sequence[GraphRecord]] = None,
                                **kwargs) -> list[GraphRecord]:
    """Classes up to ``max_n`` meeting the condition's hypothesis but not perfect."""
    name = name.upper()
    if name not in CONDITIONS:
        raise KeyError(f"unknown condition {name!r}; expected one of {sorted(CONDITIONS)}")
    return [r for r in _records(max_n, records, **kwargs)
            if r.satisfies(name) and not r.perfect]


@dataclass
class SweepSummary:
    per_n: dict[int, dict] = field(default_factory=dict)
    discrepancies: list[str] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(v["total"] for v in self.per_n.values())

    def to_json(self) -> dict:
        return {"per_n": {str(k): v for k, v in sorted(self.per_n.items())},
                "total": self.total, "discrepancies": self.discrepancies}


def sweep(max_n: int, sink: Optional[IO[str]] = None, cache: Optional[PerfectionCache] = None,
          cache_path: str | os.PathLike | None = None,
          on_record: Optional[Callable[[GraphRecord], None]] = None,
          **kwargs) -> SweepSummary:
    """Classify every class up to ``max_n``, writing one JSON report per line to ``sink``."""
    if cache is None:
        cache = PerfectionCache.open(cache_path)
    summary = SweepSummary()
    for rec in iter_records(max_n, cache=cache, **kwargs):
        row = summary.per_n.setdefault(rec.n, {"total": 0, "p6_free": 0, "perfect": 0,
                                               "imperfect_by_witness": Counter()})
        row["total"] += 1
        row["p6_free"] += rec.p6_free
        row["perfect"] += bool(rec.perfect)
        if not rec.perfect:
            row["imperfect_by_witness"][rec.witness[0] if rec.witness else "none"] += 1
        if rec.p6_free and rec.perfect != (rec.witness is None):
            summary.discrepancies.append(rec.graph6)
        if sink is not None:
            sink.write(json.dumps(rec.report().to_json()) + "\n")
        if on_record is not None:
            on_record(rec)
    for row in summary.per_n.values():
        row["imperfect_by_witness"] = dict(sorted(row["imperfect_by_witness"].items()))
    if cache_path:
        cache.save(cache_path)
    return summary


def classify_graph6(line: str, cache: Optional[PerfectionCache] = None) -> ClassificationReport:
    return classify(from_graph6(line), cache)
