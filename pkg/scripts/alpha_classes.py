"""Compare the greedy canonical form with rewrite closure, exhaustively.

Also shows how many extra scratch names the rewrite closure needs before
its classes stop splitting.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from barlang.barstring import BarLetter, canonical_form
from barlang.nominal import fresh_names
from barlang.oracle import alpha_closure

from common import parse_config, report, stopwatch


@dataclass
class Config:
    max_len: int = 5
    pool_size: int = 3
    max_scratch: int = 2


def partition(words, pool, scratch):
    class_of, classes = {}, []
    for w in words:
        if w in class_of:
            continue
        cls = alpha_closure(w, pool, scratch=scratch)
        for u in cls:
            class_of[u] = len(classes)
        classes.append(cls)
    return class_of, classes


def main(argv=None):
    cfg, as_json = parse_config(Config, __doc__.splitlines()[0], argv)
    pool = fresh_names((), cfg.pool_size)
    letters = [BarLetter(n, b) for n in pool for b in (False, True)]
    words = [w for n in range(cfg.max_len + 1) for w in itertools.product(letters, repeat=n)]
    forms = {}
    for w in words:
        forms.setdefault(canonical_form(w), set()).add(w)
    summary = {"strings": len(words), "canonical classes": len(forms)}
    for scratch in range(cfg.max_scratch + 1):
        with stopwatch() as t:
            class_of, classes = partition(words, pool, scratch)
        split = sum(1 for members in forms.values() if len({class_of[w] for w in members}) > 1)
        merged = sum(1 for cls in classes if len({canonical_form(u) for u in cls}) > 1)
        summary[f"scratch={scratch} closure classes"] = len(classes)
        summary[f"scratch={scratch} split/merged"] = f"{split}/{merged}"
        summary[f"scratch={scratch} seconds"] = t["seconds"]
    report(summary, as_json)


if __name__ == "__main__":
    main()
