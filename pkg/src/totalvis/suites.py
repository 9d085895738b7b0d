"""Deterministic verification suites over generated graph families."""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import constructors as cons
from .errors import BadParameter
from .graph import Graph
from .theorems import (
    FAIL,
    PASS,
    ClaimVerdict,
    GraphProfile,
    check_cartesian,
    check_diameter_characterization,
    check_figure,
    check_gamma_c_characterization,
    check_graph_claims,
    check_lexicographic,
)

SUITES = ("trees", "cycles", "figures", "random", "products", "complete_grid", "all_small")

DEFAULT_MAX_N = {
    "trees": 10,
    "cycles": 12,
    "figures": 0,
    "random": 9,
    "products": 24,  # cap on n(G) * n(H)
    "complete_grid": 5,
    "all_small": 5,
}
RANDOM_SUITE_SIZE = 60


@dataclass(frozen=True)
class Instance:
    """One unit of work: ``kind`` selects the check, ``graphs`` its inputs."""

    label: str
    kind: str  # graph | graph+char | lex | cart | figure
    graphs: tuple[Graph, ...] = ()


@dataclass
class SuiteReport:
    suite: str
    seed: int
    instances: int
    verdicts: list[ClaimVerdict] = field(default_factory=list)
    duration_ms: int = 0

    def counts(self) -> dict[str, int]:
        out = {"PASS": 0, "FAIL": 0, "NOT_APPLICABLE": 0}
        for v in self.verdicts:
            out[v.status] += 1
        return out

    @property
    def failed(self) -> bool:
        return any(v.status == FAIL for v in self.verdicts)

    def body(self) -> dict:
        """The deterministic part of the report (everything but the duration)."""
        return {
            "suite": self.suite,
            "seed": self.seed,
            "instances": self.instances,
            "verdicts": [v.to_dict() for v in self.verdicts],
        }

    def to_json(self) -> str:
        doc = self.body()
        doc["duration_ms"] = self.duration_ms
        return json.dumps(doc, indent=2)


def evaluate(inst: Instance) -> list[ClaimVerdict]:
    if inst.kind == "figure":
        out = check_figure(inst.label)
        if inst.graphs:
            g = inst.graphs[0]
            prof = GraphProfile(g)
            out += check_graph_claims(g, prof)
            out.append(check_diameter_characterization(g, prof))
            out.append(check_gamma_c_characterization(g, prof))
    elif inst.kind in ("graph", "graph+char"):
        g = inst.graphs[0]
        prof = GraphProfile(g)
        out = check_graph_claims(g, prof)
        if inst.kind == "graph+char":
            out.append(check_diameter_characterization(g, prof))
            out.append(check_gamma_c_characterization(g, prof))
    elif inst.kind == "lex":
        out = check_lexicographic(*inst.graphs)
    elif inst.kind == "cart":
        out = check_cartesian(*inst.graphs)
    else:
        raise BadParameter(f"unknown instance kind {inst.kind!r}")
    for v in out:
        v.instance = inst.label
    return out


def _factor_pool() -> list[tuple[str, Graph]]:
    return [
        ("K1", cons.complete(1)), ("K2", cons.complete(2)), ("K3", cons.complete(3)),
        ("P3", cons.path(3)), ("P4", cons.path(4)), ("C4", cons.cycle(4)), ("C5", cons.cycle(5)),
        ("K1,3", cons.star(3)), ("bowtie", cons.bowtie()), ("K4", cons.complete(4)),
        ("K2,3", cons.complete_bipartite(2, 3)), ("crown3", cons.crown(3)),
    ]


def build_instances(suite: str, max_n: int, seed: int) -> list[Instance]:
    if suite not in SUITES:
        raise BadParameter(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    out: list[Instance] = []
    if suite == "trees":
        for n in range(3, max_n + 1):
            for i, t in enumerate(cons.free_trees(n)):
                out.append(Instance(f"tree{n}_{i}", "graph+char", (t,)))
    elif suite == "cycles":
        for n in range(3, max_n + 1):
            out.append(Instance(f"C{n}", "graph+char", (cons.cycle(n),)))
        for n in range(1, 9):
            out.append(Instance(f"K{n}", "graph", (cons.complete(n),)))
    elif suite == "figures":
        for name in ("figure1", "figure2", "figure3"):
            out.append(Instance(name, "figure", (cons.generate(cons.FamilySpec(name)),)))
        out.append(Instance("figure4", "figure"))
    elif suite == "random":
        if max_n < 2:
            raise BadParameter("random suite needs max_n >= 2")
        rng = random.Random(seed)
        for i in range(RANDOM_SUITE_SIZE):
            n = rng.randint(2, max_n)
            s = rng.getrandbits(64)
            kind = ("random_connected", "random_tree", "random_block")[i % 3]
            if kind == "random_block":
                spec = cons.FamilySpec(kind, n=max(1, n // 2), m=3, seed=s)
            else:
                spec = cons.FamilySpec(kind, n=n, seed=s)
            g = cons.generate(spec)
            out.append(Instance(f"{kind}_{i}", "graph+char", (g,)))
    elif suite == "products":
        pool = _factor_pool()
        for gname, g in pool:
            for hname, h in pool + [("2K1", cons.empty(2)), ("K1+K2", cons.build_graph(3, [(1, 2)]))]:
                if g.n * h.n > max_n:
                    continue
                out.append(Instance(f"{gname}o{hname}", "lex", (g, h)))
                if hname not in ("2K1", "K1+K2"):
                    out.append(Instance(f"{gname}x{hname}", "cart", (g, h)))
    elif suite == "complete_grid":
        for m in range(2, max_n + 1):
            for n in range(2, max_n + 1):
                out.append(Instance(f"K{m}xK{n}", "cart", (cons.complete(m), cons.complete(n))))
    else:  # all_small
        for n in range(1, max_n + 1):
            for i, g in enumerate(cons.connected_labeled_graphs(n)):
                out.append(Instance(f"n{n}_{i}", "graph", (g,)))
    return out


def run_suite(suite: str, max_n: int | None = None, seed: int = 0, threads: int = 1) -> SuiteReport:
    """Run every applicable check over the suite's instances.

    Verdicts are ordered by instance index whatever ``threads`` is.
    """
    if max_n is None:
        max_n = DEFAULT_MAX_N.get(suite, 0)
    start = time.perf_counter()
    instances = build_instances(suite, max_n, seed)
    verdicts: list[ClaimVerdict] = []
    if threads > 1 and len(instances) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            chunk = max(1, len(instances) // (threads * 8))
            for res in pool.map(evaluate, instances, chunksize=chunk):
                verdicts.extend(res)
    else:
        for inst in instances:
            verdicts.extend(evaluate(inst))
    report = SuiteReport(suite, seed, len(instances), verdicts)
    report.duration_ms = int((time.perf_counter() - start) * 1000)
    return report


__all__ = ["SUITES", "Instance", "SuiteReport", "build_instances", "evaluate", "run_suite", "PASS", "FAIL"]
