"""Structured check records and the JSON report format shared by the CLI."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Check:
    name: str
    measured: object
    bound: object
    ok: bool

    def as_dict(self):
        return {"name": self.name, "measured": _plain(self.measured), "bound": _plain(self.bound), "ok": bool(self.ok)}


def _plain(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if hasattr(x, "item"):  # numpy scalars
        return x.item()
    return x


def all_ok(checks):
    return all(c.ok for c in checks)


def render_report(command, inputs, outputs, checks):
    doc = {
        "command": command,
        "inputs": _plain(inputs),
        "outputs": _plain(outputs),
        "checks": [c.as_dict() for c in checks],
    }
    return (json.dumps(doc, indent=2) + "\n").encode("ascii")
