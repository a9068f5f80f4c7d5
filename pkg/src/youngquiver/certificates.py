"""Machine-readable verdicts for verification sweeps.

A certificate records what was swept, how much of it, the verdict, and a
minimal reproducer on failure.  Serialization is deterministic: given the
same inputs and tool version, everything except ``elapsed_ms`` is
byte-identical between runs.
"""

import json
from dataclasses import dataclass

from ._version import __version__

SCHEMA_VERSION = 1


@dataclass
class Certificate:
    command: str
    parameters: dict
    verdict: str
    counts: dict
    first_failure: dict | None = None
    details: dict | None = None
    elapsed_ms: int = 0
    tool_version: str = __version__
    schema_version: int = SCHEMA_VERSION

    def __post_init__(self) -> None:
        if self.verdict not in ("pass", "fail"):
            raise ValueError(f"verdict must be pass or fail, got {self.verdict!r}")
        if self.verdict == "fail" and self.first_failure is None:
            raise ValueError("failing certificate must carry a first_failure locator")
        if self.verdict == "pass" and not self.counts:
            raise ValueError("passing certificate must report nonempty counts")

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        out = {
            "schema_version": self.schema_version,
            "tool_version": self.tool_version,
            "command": self.command,
            "parameters": self.parameters,
            "verdict": self.verdict,
            "counts": self.counts,
            "first_failure": self.first_failure,
        }
        if self.details is not None:
            out["details"] = self.details
        out["elapsed_ms"] = self.elapsed_ms
        return out

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=False)
