"""Cross-check the inclusion deciders against brute-force enumeration."""

from __future__ import annotations

import random
from dataclasses import dataclass

from barlang.barnfa import compile_rbe
from barlang.inclusion import inclusion_bar, inclusion_local
from barlang.oracle import brute_inclusion, random_rbe

from common import parse_config, report, stopwatch


@dataclass
class Config:
    pairs: int = 50
    depth: int = 3
    max_len: int = 6
    seed: int = 2025
    names: str = "abc"


def main(argv=None):
    cfg, as_json = parse_config(Config, __doc__, argv)
    rng = random.Random(cfg.seed)
    names = tuple(cfg.names)
    summary = {}
    disagreements = []
    with stopwatch() as total:
        for sem, decide in (("bar", inclusion_bar), ("local", inclusion_local)):
            included = explored = 0
            decide_s = oracle_s = 0.0
            pair_rng = random.Random(rng.random())
            for i in range(cfg.pairs):
                e1, e2 = random_rbe(pair_rng, cfg.depth, names), random_rbe(pair_rng, cfg.depth, names)
                A1, A2 = compile_rbe(e1), compile_rbe(e2)
                with stopwatch() as t:
                    v = decide(A1, A2)
                decide_s += t["seconds"]
                with stopwatch() as t:
                    cex = brute_inclusion(A1, A2, sem, cfg.max_len)
                oracle_s += t["seconds"]
                included += v.included
                explored += v.explored
                # the decider may find longer witnesses than the oracle looks at
                if v.included and cex is not None or (not v.included and cex is None
                                                      and len(v.witness) <= cfg.max_len):
                    disagreements.append(f"{sem} #{i}: {e1}  vs  {e2}")
            summary[f"{sem} included"] = f"{included}/{cfg.pairs}"
            summary[f"{sem} mean explored configurations"] = explored / cfg.pairs
            summary[f"{sem} decider seconds"] = decide_s
            summary[f"{sem} oracle seconds"] = oracle_s
    summary["disagreements"] = len(disagreements)
    summary["total seconds"] = total["seconds"]
    report(summary, as_json)
    for line in disagreements:
        print("  ", line)


if __name__ == "__main__":
    main()
