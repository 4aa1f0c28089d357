"""Suite runners, reports and the coverage manifest."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..engine import BURNER, STALLER
from ..formats import emit_graph6, parse_graph6
from ..generators import cycle, hypercube, path
from ..graph import Graph
from .bounds import BoundRow, family_sweep
from .checks import CATALOG, CHECKS_BY_ID, CheckDefinition, CheckResult, Comparison, Game, Profile, evaluate_check, order_key, to_result
from .products import PAIR_CHECKS, PRODUCT_MAX_ORDER, default_factors, product_pair_results

SCHEMA_VERSION = 1

# numbered result -> registered check id
COVERAGE_MANIFEST = {
    "2.1": "prop-2.1",
    "2.2": "prop-2.2",
    "2.3": "prop-2.3",
    "2.4": "thm-2.4",
    "2.6": "prop-2.6",
    "2.7": "thm-2.7",
    "2.9": "prop-2.9",
    "2.10": "prop-2.10",
    "2.11": "prop-2.11",
    "2.12": "lemma-2.12",
    "4.1": "prop-4.1",
    "4.2": "lemma-4.2",
    "4.3": "prop-4.3",
    "4.4": "prop-4.4",
    "4.5": "prop-4.5",
    "4.6": "prop-4.6",
    "4.7": "prop-4.7",
    "cor-4.x": "cor-4.x",
    "cor-4.y": "cor-4.y",
    "5.1": "thm-5.1",
    "5.2": "ex-5.2",
    "5.3": "thm-5.3",
    "cycles": "thm-cycles",
    "5.5-inner": "lemma-5.5-inner",
    "6.1": "prop-6.1",
    "6.2": "thm-6.2",
    "6.3": "prop-6.3",
    "6.4": "prop-6.4",
    "ex-2.8": "ex-2.8",
}

EXAMPLE_IDS = ("ex-2.8", "ex-5.2")


def registered_ids() -> set[str]:
    return {c.id for c in CATALOG} | {c.id for c in PAIR_CHECKS} | set(EXAMPLE_IDS)


def exploratory_ids() -> set[str]:
    return {c.id for c in CATALOG if c.exploratory} | {c.id for c in PAIR_CHECKS if c.exploratory}


STATUSES = ("pass", "fail", "skip", "note")


@dataclass
class Report:
    suite: str
    corpus: str
    results: list[CheckResult]
    notes: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.results = sorted(self.results, key=_sort_key)

    @property
    def counts(self) -> dict[str, int]:
        c = Counter(r.status for r in self.results)
        return {s: c.get(s, 0) for s in STATUSES}

    def counts_by_check(self) -> dict[str, dict[str, int]]:
        out: dict[str, Counter] = {}
        for r in self.results:
            out.setdefault(r.check_id, Counter())[r.status] += 1
        return {k: {s: v.get(s, 0) for s in STATUSES} for k, v in sorted(out.items())}

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if r.status == "fail"]

    @property
    def exit_code(self) -> int:
        return 1 if self.failures else 0

    def summary(self) -> dict:
        return {**self.counts, "by_check": self.counts_by_check(), "notes": list(self.notes)}

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "suite": self.suite,
            "corpus": self.corpus,
            "results": [r.to_json() for r in self.results],
            "summary": self.summary(),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=False)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["check_id", *STATUSES])
        for check_id, counts in self.counts_by_check().items():
            writer.writerow([check_id, *(counts[s] for s in STATUSES)])
        writer.writerow(["total", *(self.counts[s] for s in STATUSES)])
        return buf.getvalue()

    def merge(self, other: Report) -> Report:
        return Report(self.suite, self.corpus, self.results + other.results, self.notes + other.notes)


def _sort_key(r: CheckResult) -> tuple:
    return (r.check_id, r.order_key, r.graph6, json.dumps(r.params, sort_keys=True, default=str))


def validate_report(data: dict) -> None:
    """Raise ``ValueError`` unless ``data`` has the report layout."""
    for key in ("schema_version", "suite", "corpus", "results", "summary"):
        if key not in data:
            raise ValueError(f"report is missing {key!r}")
    if data["schema_version"] != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version {data['schema_version']}")
    for i, r in enumerate(data["results"]):
        for key in ("check_id", "graph6", "params", "lhs", "rhs", "holds", "status"):
            if key not in r:
                raise ValueError(f"result {i} is missing {key!r}")
        if r["status"] not in STATUSES:
            raise ValueError(f"result {i} has unknown status {r['status']!r}")
        if r["holds"] is False and "witness" not in r:
            raise ValueError(f"result {i} fails without a witness")
    for s in STATUSES:
        if data["summary"].get(s) != sum(1 for r in data["results"] if r["status"] == s):
            raise ValueError(f"summary count for {s!r} disagrees with results")


def _evaluate_graph(task: tuple[str, tuple[str, ...]]) -> list[CheckResult]:
    graph6, check_ids = task
    g = parse_graph6(graph6)
    profile = Profile(g)
    key = order_key(g)
    out = []
    for check_id in check_ids:
        for r in evaluate_check(CHECKS_BY_ID[check_id], profile):
            r.order_key = key
            out.append(r)
    return out


def _pool_map(fn, tasks: list, jobs: int) -> list:
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    chunk = max(1, len(tasks) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks, chunksize=chunk))


def run_suite(
    checks: Sequence[CheckDefinition],
    graphs: Iterable[Graph],
    jobs: int = 1,
    suite: str = "custom",
    corpus: str = "explicit",
) -> Report:
    """Evaluate every check on every graph; results come back sorted whatever ``jobs`` is."""
    ids = tuple(c.id for c in checks)
    for check_id in ids:
        if check_id not in CHECKS_BY_ID:
            raise KeyError(f"unknown check {check_id!r}")
    tasks = [(emit_graph6(g), ids) for g in graphs]
    results = [r for batch in _pool_map(_evaluate_graph, tasks, jobs) for r in batch]
    return Report(suite, corpus, results)


FAMILY_CHECK_IDS = {"path": "thm-5.3", "cycle": "thm-cycles", "hypercube": "thm-6.2"}
FAMILY_RANGES = {"path": range(1, 23), "cycle": range(3, 23), "hypercube": range(1, 5)}
_FAMILY_BUILDERS = {"path": path, "cycle": cycle, "hypercube": hypercube}


def bound_results(family: str, rows: list[BoundRow]) -> list[CheckResult]:
    out = []
    for row in rows:
        g = _FAMILY_BUILDERS[family](row.n)
        starter = BURNER if row.name.endswith("bg") else STALLER
        if row.lower == row.upper:
            comparison = Comparison(row.value, "==", row.lower, {"n": row.n, "starter": str(starter)}, (Game(g, 0, starter),))
        else:
            comparison = Comparison(row.value, "in", [row.lower, row.upper], {"n": row.n, "starter": str(starter)}, (Game(g, 0, starter),))
        r = to_result(FAMILY_CHECK_IDS[family], emit_graph6(g), comparison, False)
        r.order_key = f"{family}:{row.n:03d}"
        out.append(r)
    return out


def _family_task(task: tuple[str, int]) -> list[CheckResult]:
    family, n = task
    return bound_results(family, family_sweep(family, range(n, n + 1)))


def family_report(families: dict[str, range] | None = None, jobs: int = 1) -> Report:
    families = families or FAMILY_RANGES
    tasks = [(family, n) for family, ns in families.items() for n in ns]
    results = [r for batch in _pool_map(_family_task, tasks, jobs) for r in batch]
    corpus = ", ".join(f"{f} {ns.start}..{ns.stop - 1}" for f, ns in families.items())
    return Report("families", corpus, results)



def _pair_task(task: tuple[str, str, int, tuple[tuple[str, str], ...]]) -> list[CheckResult]:
    g_name, h_name, max_order, factors = task
    table = {name: parse_graph6(g6) for name, g6 in factors}
    return product_pair_results((g_name, h_name), table, PAIR_CHECKS, max_order)


def product_sweep(
    factors: dict[str, Graph] | None = None,
    jobs: int = 1,
    max_order: int = PRODUCT_MAX_ORDER,
) -> Report:
    """All product checks on every ordered factor pair."""
    factors = factors or default_factors()
    encoded = tuple((name, emit_graph6(g)) for name, g in factors.items())
    tasks = [(a, b, max_order, encoded) for a in factors for b in factors]
    results = [r for batch in _pool_map(_pair_task, tasks, jobs) for r in batch]
    return Report("products", "factors " + ", ".join(factors), results)
