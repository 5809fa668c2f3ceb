"""Report records shared by the law checkers and the command-line tool.

Verdict records carry everything needed to reproduce a claim: both sides,
the verdict, the residue if any, and the window/configuration they were
decided under.  JSON serialization is deterministic (stable key order, exact
rationals as strings); wall-clock timings are kept out of the JSON document
unless explicitly requested so that reports are byte-identical across runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

SCHEMA_VERSION = "1"


@dataclass
class LawItem:
    label: str
    lhs: str
    rhs: str
    verdict: str
    residue: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.verdict in ("PROVEN_EQUAL", "EQUAL", "PASS")

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "verdict": self.verdict,
            "residue": self.residue,
            "passed": self.passed,
        }


@dataclass
class LawReport:
    law: str
    items: list[LawItem] = field(default_factory=list)
    context: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def first_failure(self) -> Optional[LawItem]:
        for item in self.items:
            if not item.passed:
                return item
        return None

    def to_dict(self) -> dict:
        return {
            "law": self.law,
            "context": self.context,
            "items": [i.to_dict() for i in self.items],
            "passed": self.passed,
        }


def report_document(job: str, parameters: dict, reports: list, *,
                    elapsed: Optional[float] = None) -> dict:
    """The top-level report document emitted by the command-line tool."""
    body = [r.to_dict() for r in reports]
    doc = {
        "schema_version": SCHEMA_VERSION,
        "job": job,
        "parameters": parameters,
        "reports": body,
        "passed": all(r["passed"] for r in body),
    }
    if elapsed is not None:
        doc["elapsed_seconds"] = round(elapsed, 3)
    return doc


def dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def render_text(doc: dict) -> str:
    lines = [f"job: {doc['job']}"]
    for key, value in sorted(doc["parameters"].items()):
        lines.append(f"  {key}: {value}")
    for rep in doc["reports"]:
        status = "PASS" if rep["passed"] else "FAIL"
        name = rep.get("law", rep.get("job", "report"))
        extra = ""
        if "samples_run" in rep:
            extra = f" ({rep['samples_run']} samples)"
        lines.append(f"[{status}] {name}{extra}")
        for item in rep.get("items", []):
            mark = "ok " if item["passed"] else "FAIL"
            lines.append(f"    {mark} {item['label']}: {item['verdict']}")
            if not item["passed"]:
                lines.append(f"         lhs = {item['lhs']}")
                lines.append(f"         rhs = {item['rhs']}")
                if item.get("residue"):
                    lines.append(f"         residue = {item['residue']}")
        for bad in rep.get("counterexamples", []):
            lines.append(f"    FAIL {bad}")
    if "elapsed_seconds" in doc:
        lines.append(f"elapsed: {doc['elapsed_seconds']}s")
    lines.append("result: " + ("PASS" if doc["passed"] else "FAIL"))
    return "\n".join(lines)
