"""How the inclusion search grows with the number of names.

The family is (|x1 + ... + |xk + x1 + ... + xk)* checked against itself
and against its bound-only half, for k = 1..max_names.  Explored
configurations are reported with and without frontier pruning.
"""

from __future__ import annotations

from dataclasses import dataclass

from barlang.barnfa import compile_rbe
from barlang.inclusion import inclusion_bar, inclusion_local

from common import parse_config, report, stopwatch


@dataclass
class Config:
    max_names: int = 4
    budget: int = 2_000_000


def family(k: int, with_free: bool) -> str:
    letters = [f"|x{i}" for i in range(1, k + 1)]
    if with_free:
        letters += [f"x{i}" for i in range(1, k + 1)]
    return "(" + " + ".join(letters) + ")*"


def main(argv=None):
    cfg, as_json = parse_config(Config, __doc__.splitlines()[0], argv)
    summary = {}
    for k in range(1, cfg.max_names + 1):
        mixed, bound = compile_rbe(family(k, True)), compile_rbe(family(k, False))
        for label, A1, A2 in (("self", mixed, mixed), ("bound<=mixed", bound, mixed),
                              ("mixed<=bound", mixed, bound)):
            for sem, decide in (("bar", inclusion_bar), ("local", inclusion_local)):
                for pruned in (True, False):
                    with stopwatch() as t:
                        v = decide(A1, A2, maximal_only=pruned, budget=cfg.budget)
                    tag = f"k={k} {label} {sem} {'pruned' if pruned else 'all-subsets'}"
                    summary[tag] = f"{'included' if v.included else 'not included'}, " \
                                   f"{v.explored} configs, {t['seconds'] * 1000:.1f} ms"
    report(summary, as_json)


if __name__ == "__main__":
    main()
