"""Machine-readable reports: a versioned JSON document plus text and CSV renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .character import CharacterSpec, age, power
from .engine import (
    ClassificationReport,
    CorollaryCheck,
    GroupOrdersResult,
    TableRow,
    Verdict,
    Witness,
)

SCHEMA_VERSION = "1.0"


def rational(q: Fraction | int) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass
class ReportDocument:
    """What every command emits.

    ``results`` holds plain JSON data (exact rationals as "p/q" strings) and
    ``verdicts`` is the flat verdict list shared by all three renderings.
    """

    command: str
    arguments: dict[str, Any]
    results: dict[str, Any] = field(default_factory=dict)
    verdicts: list[dict[str, Any]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    schema_version: str = SCHEMA_VERSION

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "arguments": self.arguments,
            "results": self.results,
            "verdicts": self.verdicts,
            "notes": self.notes,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ReportDocument:
        if data.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {data.get('schema_version')!r}")
        return cls(
            command=data["command"],
            arguments=data["arguments"],
            results=data["results"],
            verdicts=data["verdicts"],
            notes=data["notes"],
            schema_version=data["schema_version"],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> ReportDocument:
        return cls.from_dict(json.loads(text))


# -- encoders -------------------------------------------------------------------


def encode_character(chi: CharacterSpec) -> dict[str, Any]:
    return {"order": chi.order, "genus": chi.genus, "exponents": list(chi.exponents), "counts": list(chi.counts)}


def encode_verdict(v: Verdict) -> dict[str, Any]:
    return {
        "order": v.character.order,
        "exponents": list(v.character.exponents),
        "status": v.status.value,
        "power": v.power,
        "reason": v.reason,
        "detail": v.detail,
        "notes": list(v.notes),
    }


def encode_witness(w: Witness) -> dict[str, Any]:
    return {
        "order": w.order,
        "exponents": list(w.exponents),
        "age": rational(w.age),
        "orbit": [list(o) for o in w.orbit],
        "curve": w.curve,
    }


def classification_document(
    report: ClassificationReport, arguments: dict[str, Any], orders: list[int] | None = None, all_verdicts: bool = False
) -> ReportDocument:
    orders = orders if orders is not None else sorted(report.verdicts)
    summary = {}
    listed: list[Verdict] = []
    for n in orders:
        counts: dict[str, int] = {}
        for v in report.verdicts[n]:
            counts[v.status.value] = counts.get(v.status.value, 0) + 1
            if all_verdicts or v.realizable:
                listed.append(v)
        summary[str(n)] = dict(sorted(counts.items()))
    witnesses = [w for w in report.witnesses if w.order in orders]
    reid_pass = [v for v in listed if v.status.value == "realizable_reid_pass"]
    notes = [n for n in report.notes if _note_order(n) in (None, *orders)]
    return ReportDocument(
        "classify",
        arguments,
        {
            "genus": report.genus,
            "orders": orders,
            "status_counts": summary,
            "witnesses": [encode_witness(w) for w in witnesses],
            "reid_passing": [
                {"order": v.character.order, "exponents": list(v.character.exponents)} for v in reid_pass
            ],
        },
        [encode_verdict(v) for v in listed],
        notes,
    )


def _note_order(note: str) -> int | None:
    if note.startswith("N="):
        return int(note[2 : note.index(":")])
    if note.startswith("order "):
        return int(note.split()[1].rstrip(":"))
    return None


def table_document(g: int, n: int, universe: str, rows: list[TableRow], arguments: dict[str, Any]) -> ReportDocument:
    encoded = []
    verdicts = []
    for r in rows:
        encoded.append(
            {
                "counts": list(r.counts),
                "fixed_points": r.fixed_points,
                "marked": r.marked,
                "status": r.verdict.status.value if r.verdict else "not_faithful",
            }
        )
        if r.verdict is not None:
            verdicts.append(encode_verdict(r.verdict))
    return ReportDocument(
        "tables",
        arguments,
        {
            "genus": g,
            "order": n,
            "universe": universe,
            "row_count": len(rows),
            "marked_count": sum(r.marked for r in rows),
            "rows": encoded,
        },
        verdicts,
    )


def group_orders_document(res: GroupOrdersResult, check: CorollaryCheck | None, arguments) -> ReportDocument:
    results: dict[str, Any] = {
        "genus": res.genus,
        "orders": list(res.orders),
        "flagged": {str(o): [list(e) for e in sets] for o, sets in res.flagged.items()},
        "uniruled_possible": res.uniruled_possible,
    }
    notes = []
    if not res.flagged:
        notes.append("no uniruled witness possible")
        results["uniruled"] = False
    if check is not None:
        results["group"] = check.name
        results["uniruled"] = check.uniruled
        notes.extend(check.steps)
    return ReportDocument("group-orders", arguments, results, [], notes)


def ages_by_power(chi: CharacterSpec) -> dict[str, str]:
    return {str(d): rational(age(power(chi, d))) for d in range(1, chi.order)}


# -- renderings -------------------------------------------------------------------

CSV_FIELDS = ("order", "exponents", "status", "power", "reason")


def render_csv(doc: ReportDocument) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for v in doc.verdicts:
        w.writerow(
            [v["order"], " ".join(map(str, v["exponents"])), v["status"], "" if v["power"] is None else v["power"], v["reason"]]
        )
    return buf.getvalue()


def parse_csv_verdicts(text: str) -> set[tuple]:
    rows = list(csv.DictReader(io.StringIO(text)))
    return {(int(r["order"]), tuple(int(x) for x in r["exponents"].split()), r["status"]) for r in rows}


def verdict_keys(doc: ReportDocument) -> set[tuple]:
    return {(v["order"], tuple(v["exponents"]), v["status"]) for v in doc.verdicts}


def _fmt_exps(exps) -> str:
    return "{" + ",".join(map(str, exps)) + "}"


def render_text(doc: ReportDocument) -> str:
    r = doc.results
    lines = [f"# {doc.command} {' '.join(f'{k}={v}' for k, v in doc.arguments.items() if v is not None)}"]
    if doc.command == "classify":
        lines.append(f"genus {r['genus']}, orders {r['orders'][0]}..{r['orders'][-1]}")
        if r["witnesses"]:
            lines.append("uniruled witnesses:")
            for w in r["witnesses"]:
                curve = f"  curve {w['curve']}" if w["curve"] else ""
                lines.append(f"  order {w['order']:>2}  exponents {_fmt_exps(w['exponents'])}  age {w['age']}{curve}")
        else:
            lines.append("uniruled witnesses: none")
        lines.append("status counts:")
        for n, counts in r["status_counts"].items():
            lines.append(f"  N={n:>2}  " + ", ".join(f"{k} {v}" for k, v in counts.items()))
    elif doc.command == "tables":
        lines.append(f"genus {r['genus']}, order {r['order']}, universe {r['universe']}: {r['row_count']} rows, {r['marked_count']} marked")
        for row in r["rows"]:
            fp = "-" if row["fixed_points"] is None else str(row["fixed_points"])
            mark = "+" if row["marked"] else " "
            lines.append(f"  {' '.join(map(str, row['counts']))}  | Fix {fp:>2} {mark} {row['status']}")
    elif doc.command == "verify-curve":
        lines.append(f"model {r['model']}  automorphism {r['automorphism']}")
        lines.append(f"genus {r['genus']}")
        lines.append("basis: " + ", ".join(r["basis"]))
        lines.append(f"exponents {_fmt_exps(r['exponents'])}")
        lines.append("ages: " + ", ".join(f"sigma^{d}: {a}" for d, a in r["ages"].items()))
        lines.append("uniruled" if r["uniruled"] else "not uniruled")
    elif doc.command == "group-orders":
        lines.append(f"genus {r['genus']}, element orders {r['orders']}")
        for o, sets in r["flagged"].items():
            lines.append(f"  order {o}: needs eigenvalue check, witness sets " + ", ".join(_fmt_exps(s) for s in sets))
        if "uniruled" in r:
            lines.append("uniruled" if r["uniruled"] else "not uniruled")
    elif doc.command == "check-bound":
        lines.append(f"threshold 1 + 20 pi/13 in [{r['threshold_low']}, {r['threshold_high']}]")
        lines.append(f"genus {r['genus']}: {r['status']}")
        c = r["cos_lemma"]
        lines.append(
            f"cos x >= 1 - 10x/13: grid step {c['step']}, minimum {c['grid_minimum']}, slack {c['slack']}, "
            f"margin {c['margin']} -> {'certified' if c['certified'] else 'NOT certified'}"
        )
    if doc.verdicts and doc.command != "tables":
        lines.append("verdicts:")
        for v in doc.verdicts:
            p = f" (power {v['power']})" if v["power"] is not None else ""
            lines.append(f"  N={v['order']}:{_fmt_exps(v['exponents'])} {v['status']}{p}")
    if doc.notes:
        lines.append("notes:")
        lines.extend(f"  - {n}" for n in doc.notes)
    return "\n".join(lines) + "\n"


def render(doc: ReportDocument, fmt: str) -> str:
    if fmt == "json":
        return doc.to_json() + "\n"
    if fmt == "csv":
        return render_csv(doc)
    if fmt == "text":
        return render_text(doc)
    raise ValueError(f"unknown format {fmt!r}")
