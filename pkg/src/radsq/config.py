"""Run configurations for the scripts."""

from __future__ import annotations

import argparse
from dataclasses import dataclass, fields


@dataclass(frozen=True)
class RunConfig:
    bound: int = 4        # total dimension bound of the oracle universes
    depth: int = 6        # knitting depth on each side before gluing
    seed: int = 0
    out_dir: str = "out"  # DOT and JSON files land here

    @classmethod
    def from_argv(cls, argv=None, **defaults) -> RunConfig:
        base = cls(**defaults)
        parser = argparse.ArgumentParser()
        for f in fields(cls):
            parser.add_argument(f"--{f.name.replace('_', '-')}", type=type(getattr(base, f.name)),
                                default=getattr(base, f.name))
        return cls(**vars(parser.parse_args(argv)))
