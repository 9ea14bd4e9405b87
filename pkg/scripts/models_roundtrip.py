"""Translate register models to bar NFAs and compare their data languages.

Prints the translated automaton for each model file given, then checks
every data word up to --max-len over a pool of registers + 2 names.
"""

from __future__ import annotations

import itertools
import sys
from dataclasses import dataclass
from pathlib import Path

from barlang.barnfa import degree, dumps_nfa
from barlang.models import fsuba_accepts, loads_fra, loads_fsuba, ra_accepts, to_barnfa
from barlang.nominal import fresh_names
from barlang.rnna import SymbolicRnna, accepts

from common import parse_config, report, stopwatch

HERE = Path(__file__).resolve().parent


@dataclass
class Config:
    models_dir: str = str(HERE / "models")
    max_len: int = 4
    show: bool = True


def main(argv=None):
    cfg, as_json = parse_config(Config, __doc__.splitlines()[0], argv)
    summary = {}
    paths = sorted(Path(cfg.models_dir).glob("*.fsuba")) + sorted(Path(cfg.models_dir).glob("*.fra"))
    if not paths:
        sys.exit(f"no .fsuba or .fra files in {cfg.models_dir}")
    for path in paths:
        text = path.read_text()
        M, run = (loads_fsuba(text), fsuba_accepts) if path.suffix == ".fsuba" else (loads_fra(text), ra_accepts)
        with stopwatch() as t:
            B = to_barnfa(M)
        if cfg.show and not as_json:
            print(f"# {path.name}")
            print(dumps_nfa(B))
        R = SymbolicRnna(B)
        pool = fresh_names((), M.registers + 2)
        words = [u for n in range(cfg.max_len + 1) for u in itertools.product(pool, repeat=n)]
        accepted = sum(run(M, u) for u in words)
        mismatched = sum(run(M, u) != accepts(R, u, "local") for u in words)
        summary[path.name] = (f"{len(B.states)} states, degree {degree(B)} (registers {M.registers}), "
                              f"{accepted}/{len(words)} accepted, {mismatched} mismatches, "
                              f"{t['seconds'] * 1000:.1f} ms")
    report(summary, as_json)


if __name__ == "__main__":
    main()
