"""Tiny helpers shared by the experiment scripts."""

from __future__ import annotations

import argparse
import dataclasses
import json
import time
from contextlib import contextmanager


def parse_config(cls, description: str, argv=None):
    """Build an argparse CLI from a dataclass: one ``--field`` flag per field."""
    parser = argparse.ArgumentParser(description=description)
    for f in dataclasses.fields(cls):
        default = f.default
        flag = "--" + f.name.replace("_", "-")
        if isinstance(default, bool):
            parser.add_argument(flag, action=argparse.BooleanOptionalAction, default=default)
        else:
            parser.add_argument(flag, type=type(default), default=default)
    parser.add_argument("--json", action="store_true", help="print the summary as JSON")
    ns = parser.parse_args(argv)
    as_json = ns.__dict__.pop("json")
    return cls(**vars(ns)), as_json


@contextmanager
def stopwatch():
    box = {}
    t0 = time.perf_counter()
    yield box
    box["seconds"] = time.perf_counter() - t0


def report(summary: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(summary, indent=2, sort_keys=True))
        return
    width = max(map(len, summary))
    for key, value in summary.items():
        if isinstance(value, float):
            value = f"{value:.3f}"
        print(f"{key:<{width}}  {value}")
