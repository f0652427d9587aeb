"""Turn a dataclass into command-line flags (``field_name`` -> ``--field-name``)."""

from __future__ import annotations

import argparse
import dataclasses


def parse_config(cls, description: str):
    parser = argparse.ArgumentParser(description=description)
    for f in dataclasses.fields(cls):
        flag = "--" + f.name.replace("_", "-")
        default = f.default if f.default is not dataclasses.MISSING else f.default_factory()
        if isinstance(default, bool):
            parser.add_argument(flag, action=argparse.BooleanOptionalAction, default=default)
        elif isinstance(default, tuple):
            parser.add_argument(flag, type=int, nargs="+", default=list(default))
        else:
            parser.add_argument(flag, type=type(default), default=default)
    args = vars(parser.parse_args())
    return cls(**{k: tuple(v) if isinstance(v, list) else v for k, v in args.items()})
