"""Report persistence (JSON lines) and the character-table cache."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .chartab import CharacterTable, ClassFunction, character_table
from .cyclotomic import Cyc
from .grouptable import GroupTable
from .structure import conjugacy_classes
from .verify import VerificationReport

FORMAT_VERSION = "camina/0.1.0"


@dataclass(frozen=True)
class ReportRecord:
    """A VerificationReport plus artifact version and run timestamp."""

    group_label: str
    group_order: int
    subgroup_index: int
    subgroup_order: int
    claim: str
    status: str
    details: dict
    version: str
    timestamp: str

    @classmethod
    def from_report(cls, r: VerificationReport, version: str, timestamp: str) -> ReportRecord:
        return cls(
            r.group_label,
            r.group_order,
            r.subgroup_index,
            r.subgroup_order,
            r.claim,
            r.status,
            r.details,
            version,
            timestamp,
        )


_FIELDS = (
    "group_label",
    "group_order",
    "subgroup_index",
    "subgroup_order",
    "claim",
    "status",
    "details",
    "version",
    "timestamp",
)


def persist_records(records: Sequence[ReportRecord], path: str | Path) -> None:
    """One JSON object per line, keys sorted, exact round trip."""
    lines = []
    for rec in records:
        obj = {f: getattr(rec, f) for f in _FIELDS}
        lines.append(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    Path(path).write_text("".join(line + "\n" for line in lines))


def load_records(path: str | Path) -> list[ReportRecord]:
    records = []
    for line in Path(path).read_text().splitlines():
        if not line.strip():
            continue
        obj = json.loads(line)
        records.append(ReportRecord(**{f: obj[f] for f in _FIELDS}))
    return records


def persist_reports(
    reports: Iterable[VerificationReport], path: str | Path, version: str, timestamp: str
) -> None:
    persist_records([ReportRecord.from_report(r, version, timestamp) for r in reports], path)


load_reports = load_records


# --- character table cache --------------------------------------------------


def chartab_cache_key(G: GroupTable) -> str:
    """Hash of the canonical element list; identical regenerated groups share it."""
    h = hashlib.sha256()
    h.update(f"degree={G.degree};".encode())
    for p in G.elements:
        h.update(",".join(map(str, p.images)).encode())
        h.update(b";")
    return h.hexdigest()


def save_chartab(G: GroupTable, table: CharacterTable, cache_dir: str | Path) -> Path:
    cache_dir = Path(cache_dir)
    cache_dir.mkdir(parents=True, exist_ok=True)
    path = cache_dir / f"chartab-{chartab_cache_key(G)}.json"
    e = table.irreducibles[0].values[0].e if table.irreducibles else 1
    obj = {
        "format": FORMAT_VERSION,
        "order": G.order,
        "root_order": e,
        "degree_sequence": list(table.degree_sequence),
        "rows": [[list(v.coeffs) for v in chi.values] for chi in table.irreducibles],
    }
    path.write_text(json.dumps(obj, sort_keys=True))
    return path


def load_chartab(G: GroupTable, cache_dir: str | Path) -> CharacterTable | None:
    path = Path(cache_dir) / f"chartab-{chartab_cache_key(G)}.json"
    if not path.exists():
        return None
    obj = json.loads(path.read_text())
    if obj.get("format") != FORMAT_VERSION or obj.get("order") != G.order:
        return None
    e = obj["root_order"]
    r = conjugacy_classes(G).count
    rows = []
    for row in obj["rows"]:
        if len(row) != r:
            return None
        rows.append(ClassFunction(G, tuple(Cyc(e, coeffs) for coeffs in row)))
    return CharacterTable(G, tuple(rows), tuple(obj["degree_sequence"]))


def cached_character_table(
    G: GroupTable, cache_dir: str | Path | None, **caps
) -> CharacterTable:
    if cache_dir is not None:
        hit = load_chartab(G, cache_dir)
        if hit is not None:
            return hit
    table = character_table(G, **caps)
    if cache_dir is not None:
        save_chartab(G, table, cache_dir)
    return table
