"""Class tables: every positive 3-braid of one length, grouped into conjugacy classes."""

from __future__ import annotations

import json
import os
from pathlib import Path

from .conjugacy import class_report
from .normal_form import all_normal_forms
from .words import DEFAULT_CAP

SCHEMA_VERSION = 1


def class_reports(length: int, cap: int | None = DEFAULT_CAP):
    """Class reports partitioning all braids of ``length``, ordered by representative."""
    seen = set()
    reports = []
    for a in all_normal_forms(length):
        if a in seen:
            continue
        rep = class_report(a, cap)
        seen.update(rep.conjugacy_class)
        reports.append(rep)
    return reports


def class_table(length: int, cap: int | None = DEFAULT_CAP) -> dict:
    reports = class_reports(length, cap)
    classes = sorted((r.to_dict() for r in reports), key=lambda d: d["representative"])
    return {
        "length": length,
        "braid_count": sum(d["size"] for d in classes),
        "class_count": len(classes),
        "classes": classes,
    }


class ClassTableCache:
    """
    One JSON-lines file per length: a header line carrying the schema version
    and counts, then one class per line.  Files with another schema version
    are ignored and rewritten.
    """

    def __init__(self, directory: str | os.PathLike):
        self.directory = Path(directory)

    def path(self, length: int) -> Path:
        return self.directory / f"classes-L{length}.jsonl"

    def load(self, length: int) -> dict | None:
        p = self.path(length)
        try:
            lines = p.read_text().splitlines()
        except FileNotFoundError:
            return None
        if not lines:
            return None
        try:
            header = json.loads(lines[0])
            if header.get("schema_version") != SCHEMA_VERSION or header.get("length") != length:
                return None
            classes = [json.loads(line) for line in lines[1:]]
        except json.JSONDecodeError:
            return None
        if len(classes) != header["class_count"]:
            return None
        return {
            "length": length,
            "braid_count": header["braid_count"],
            "class_count": header["class_count"],
            "classes": classes,
        }

    def store(self, table: dict) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        header = {
            "schema_version": SCHEMA_VERSION,
            "length": table["length"],
            "braid_count": table["braid_count"],
            "class_count": table["class_count"],
        }
        lines = [json.dumps(header)] + [json.dumps(c) for c in table["classes"]]
        p = self.path(table["length"])
        tmp = p.with_suffix(".tmp")
        tmp.write_text("\n".join(lines) + "\n")
        tmp.replace(p)


def cached_class_table(length: int, cache: ClassTableCache | None, cap: int | None = DEFAULT_CAP) -> dict:
    if cache is not None:
        table = cache.load(length)
        if table is not None:
            return table
    table = class_table(length, cap)
    if cache is not None:
        cache.store(table)
    return table
