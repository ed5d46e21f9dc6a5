"""Config-driven agreement experiments with CSV output.

The config is line oriented ``key=value`` (``#`` comments).  Each generated
instance is solved once per requested algorithm and contributes one CSV row
per run; the ``agree`` column says whether all answers for that instance
matched.  Reruns with the same config are identical except for the wall-time
column.

Caterpillar configs compare the incremental sweep against the exhaustive
oracle; layered configs compare direct rerouting search against the oracle
run on the compiled instance.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass

from . import oracle, rerouting
from .driver import solve_driver
from .errors import ParseError
from .generators import gen_caterpillar, gen_layered_spr
from .reduction import compile_spr

_DEFAULTS = {
    "kind": "caterpillar",
    "count": "0",
    "seed": "0",
    "algos": "",
    "spine_min": "2",
    "spine_max": "6",
    "leaf_prob": "0.6",
    "colors": "4",
    "list_min": "2",
    "list_max": "3",
    "depth_min": "2",
    "depth_max": "4",
    "max_width": "3",
    "density_min": "0.5",
    "density_max": "0.9",
    "state_cap": str(oracle.DEFAULT_STATE_CAP),
}

CSV_FIELDS = [
    "instance", "kind", "seed", "n", "m", "algo", "answer",
    "oracle_nodes", "enode_peak", "slack_min", "slack_max", "agree", "wall_s",
]


def parse_config(text: str) -> dict[str, str]:
    config = dict(_DEFAULTS)
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"expected key=value: {line}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _DEFAULTS:
            raise ParseError(f"unknown config key: {key}")
        config[key] = value
    return config


@dataclass
class _Row:
    instance: int
    kind: str
    seed: int
    n: int
    m: int
    algo: str
    answer: bool
    oracle_nodes: object
    enode_peak: object
    slack_min: object
    slack_max: object
    wall_s: float


def _slacks(history):
    slacks = []
    for rec in history:
        bound = 2 if rec.step == 1 else rec.prev_size + rec.degree
        slacks.append(bound - rec.pre_extraction)
    return (min(slacks), max(slacks)) if slacks else ("", "")


def _run_caterpillar(config, instance_id, seed, rng_params) -> list[_Row]:
    spine = rng_params.randint(int(config["spine_min"]), int(config["spine_max"]))
    inst = gen_caterpillar(
        spine,
        leaf_prob=float(config["leaf_prob"]),
        colors=int(config["colors"]),
        list_range=(int(config["list_min"]), int(config["list_max"])),
        seed=seed,
    )
    algos = [a for a in config["algos"].split(",") if a] or ["caterpillar", "bruteforce"]
    rows = []
    for algo in algos:
        start = time.perf_counter()
        report = solve_driver(inst, algo=algo, state_cap=int(config["state_cap"]))
        wall = time.perf_counter() - start
        nodes = sum(c.oracle_nodes or 0 for c in report.components) or ""
        peaks = [c.enode_peak for c in report.components if c.enode_peak is not None]
        smin, smax = _slacks(report.size_history)
        rows.append(_Row(
            instance_id, "caterpillar", seed, inst.graph.n, inst.graph.m,
            algo, report.answer, nodes, max(peaks) if peaks else "",
            smin, smax, wall,
        ))
    return rows


def _run_layered(config, instance_id, seed, rng_params) -> list[_Row]:
    depth = rng_params.randint(int(config["depth_min"]), int(config["depth_max"]))
    density = rng_params.uniform(
        float(config["density_min"]), float(config["density_max"])
    )
    spr = gen_layered_spr(
        depth, max_width=int(config["max_width"]), density=density, seed=seed
    )
    algos = [a for a in config["algos"].split(",") if a] or ["spr", "reduction"]
    rows = []
    for algo in algos:
        start = time.perf_counter()
        if algo == "spr":
            answer = rerouting.brute_solve(spr) is not None
            n, m, nodes = spr.graph.n, spr.graph.m, ""
        elif algo == "reduction":
            red = compile_spr(spr)
            rg = oracle.build(
                red.lcr.graph, red.lcr.lists, int(config["state_cap"])
            )
            answer = oracle.reachable(rg, red.lcr.f0, red.lcr.fr) is not None
            n, m, nodes = red.lcr.graph.n, red.lcr.graph.m, rg.num_nodes
        else:
            raise ParseError(f"unknown layered algorithm: {algo}")
        wall = time.perf_counter() - start
        rows.append(_Row(
            instance_id, "layered", seed, n, m, algo, answer,
            nodes, "", "", "", wall,
        ))
    return rows


def run_experiments(config_text: str) -> str:
    """Run the configured experiment and return the CSV text."""
    import random

    config = parse_config(config_text)
    kind = config["kind"]
    if kind not in ("caterpillar", "layered"):
        raise ParseError(f"unknown kind: {kind}")
    count = int(config["count"])
    base_seed = int(config["seed"])
    rng_params = random.Random(base_seed)

    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS)
    writer.writeheader()
    for i in range(count):
        seed = base_seed + 1 + i
        if kind == "caterpillar":
            rows = _run_caterpillar(config, i, seed, rng_params)
        else:
            rows = _run_layered(config, i, seed, rng_params)
        agree = len({r.answer for r in rows}) <= 1
        for r in rows:
            writer.writerow({
                "instance": r.instance,
                "kind": r.kind,
                "seed": r.seed,
                "n": r.n,
                "m": r.m,
                "algo": r.algo,
                "answer": "YES" if r.answer else "NO",
                "oracle_nodes": r.oracle_nodes,
                "enode_peak": r.enode_peak,
                "slack_min": r.slack_min,
                "slack_max": r.slack_max,
                "agree": "yes" if agree else "no",
                "wall_s": f"{r.wall_s:.6f}",
            })
    return buf.getvalue()
