"""Tables and reports as documents serialisable to text, CSV and JSON.

Every rational is written as a reduced ``p/q`` string (``p`` for integers);
there is no floating point anywhere in the output.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .chow import ChowRing
from .combinatorics import Weights, fixed_set
from .isomorphism import xi_exponent
from .model import ModelRing, is_gorenstein, poincare_polynomial, xi_label
from .report import VerificationReport

KINDS = ("info", "deg-table", "mult-table", "pairing-matrix", "xi-table",
         "poincare", "verify-report")


def rat(x) -> str:
    return str(Fraction(x))


@dataclass
class OutputDocument:
    kind: str
    weights: tuple[int, ...] | None
    payload: dict[str, Any]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown document kind {self.kind!r}")

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind,
                "weights": None if self.weights is None else list(self.weights),
                "payload": self.payload}

    def to_json(self) -> str:
        return canonical_json(self.to_dict())

    def to_text(self) -> str:
        if self.kind == "info":
            return _info_text(self)
        if self.kind == "verify-report":
            return _report_text(self)
        p = self.payload
        head = f"{p['title']}\n"
        return head + columnize([[p["corner"]] + p["cols"]]
                                + [[r] + c for r, c in zip(p["rows"], p["cells"])])

    def to_csv(self) -> str:
        buf = io.StringIO()
        out = csv.writer(buf, lineterminator="\n")
        p = self.payload
        if self.kind == "info":
            for key in ("n", "total", "product", "gorenstein"):
                out.writerow([key, p[key]])
            out.writerow(["label", "component", "degree", "xi"])
            for b in p["basis"]:
                out.writerow([b["label"], b["component"], b["degree"], b["xi"]])
        elif self.kind == "verify-report":
            out.writerow(["weights", "name", "count", "passed", "counterexample"])
            for r in p["records"]:
                cex = "" if r["counterexample"] is None else canonical_json(
                    r["counterexample"], indent=None).strip()
                out.writerow([" ".join(map(str, r["weights"])), r["name"],
                              r["count"], r["passed"], cex])
        else:
            out.writerow([p["corner"]] + p["cols"])
            for r, cells in zip(p["rows"], p["cells"]):
                out.writerow([r] + cells)
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        return {"text": self.to_text, "csv": self.to_csv, "json": self.to_json}[fmt]()


def canonical_json(obj, indent=2) -> str:
    return json.dumps(obj, sort_keys=True, indent=indent, ensure_ascii=False) + "\n"


def columnize(rows: list[list[str]], divider: str = " | ") -> str:
    widths = [max(len(str(r[c])) for r in rows) for c in range(len(rows[0]))]
    lines = []
    for i, row in enumerate(rows):
        line = divider.join(str(v).ljust(wd) for v, wd in zip(row, widths))
        lines.append(line.rstrip())
        if i == 0:
            lines.append("-+-".join("-" * wd for wd in widths))
    return "\n".join(lines) + "\n"


def _table(kind, w, title, corner, rows, cols, cells) -> OutputDocument:
    return OutputDocument(kind, w.entries, {
        "title": title, "corner": corner, "rows": rows, "cols": cols,
        "cells": cells})


def component_label(w: Weights, g) -> str:
    return "P(" + ",".join(str(w[i]) for i in sorted(fixed_set(g, w))) + ")"


def _ring(kind: str, w: Weights):
    if kind == "chow":
        return ChowRing(w)
    if kind == "model":
        return ModelRing(w)
    raise ValueError(f"unknown ring {kind!r}")


def info_document(w: Weights) -> OutputDocument:
    chow = ChowRing(w)
    basis = [{
        "label": chow.label(b),
        "component": component_label(w, b.g),
        "degree": rat(chow.degree(b)),
        "xi": xi_label(xi_exponent(w, b)),
    } for b in chow.basis]
    return OutputDocument("info", w.entries, {
        "n": w.n, "total": w.total, "product": w.product,
        "gorenstein": is_gorenstein(w), "basis": basis})


def _info_text(doc: OutputDocument) -> str:
    p = doc.payload
    w = "(" + ",".join(map(str, doc.weights)) + ")"
    head = (f"weights    {w}\n"
            f"n          {p['n']}\n"
            f"|w|        {p['total']}\n"
            f"<w>        {p['product']}\n"
            f"gorenstein {'yes' if p['gorenstein'] else 'no'}\n\n")
    rows = [["basis", "component", "deg", "Xi"]]
    rows += [[b["label"], b["component"], b["degree"], b["xi"]] for b in p["basis"]]
    return head + columnize(rows)


def degree_table(w: Weights, ring: str = "model") -> OutputDocument:
    r = _ring(ring, w)
    if ring == "model":
        cols = [r.label(j) for j in r.basis]
        return _table("deg-table", w, f"degrees, model ring, w={w}", "",
                      ["deg"], cols, [[rat(r.degree(j)) for j in r.basis]])
    # one row per basis element, grouped by inertia component
    rows, cells = [], []
    for b in r.basis:
        rows.append(r.label(b))
        cells.append([rat(b.g), component_label(w, b.g), str(b.d), rat(r.degree(b))])
    return _table("deg-table", w, f"degrees, chow ring, w={w}", "basis",
                  rows, ["gamma", "component", "d", "deg"], cells)


def mult_table(w: Weights, ring: str = "model") -> OutputDocument:
    r = _ring(ring, w)
    labels = [r.label(b) for b in r.basis]
    cells = []
    for a in r.basis:
        row = []
        for b in r.basis:
            c = r.basis_cup(a, b)
            row.append("0" if c is None else r.label(c))
        cells.append(row)
    return _table("mult-table", w, f"cup product, {ring} ring, w={w}", "*",
                  labels, labels, cells)


def pairing_matrix(w: Weights, ring: str = "model") -> OutputDocument:
    r = _ring(ring, w)
    labels = [r.label(b) for b in r.basis]
    cells = [[rat(r.basis_pairing(a, b)) for b in r.basis] for a in r.basis]
    return _table("pairing-matrix", w, f"pairing, {ring} ring, w={w}", "<,>",
                  labels, labels, cells)


def xi_table(w: Weights) -> OutputDocument:
    chow = ChowRing(w)
    rows = [chow.label(b) for b in chow.basis]
    cells = [[xi_label(xi_exponent(w, b))] for b in chow.basis]
    return _table("xi-table", w, f"Xi, w={w}", "eta", rows, ["Xi(eta)"], cells)


def poincare_document(w: Weights) -> OutputDocument:
    poly = poincare_polynomial(w)
    rows = [rat(u) for u in poly]
    return _table("poincare", w, f"graded dimensions, w={w}", "deg",
                  rows, ["dim"], [[str(m)] for m in poly.values()])


def report_document(report: VerificationReport, weights: Weights | None,
                    full: bool = True) -> OutputDocument:
    payload = report.to_dict()
    if not full:
        # sweeps: per-vector summaries plus failing records only
        per = {}
        for r in report.records:
            s = per.setdefault(r.weights, {"weights": list(r.weights), "records": 0,
                                           "checks": 0, "passed": True})
            s["records"] += 1
            s["checks"] += r.count
            s["passed"] = s["passed"] and r.passed
        payload["records"] = [r.to_dict() for r in report.failures]
        payload["vectors"] = list(per.values())
    return OutputDocument("verify-report",
                          None if weights is None else weights.entries, payload)


def _report_text(doc: OutputDocument) -> str:
    p = doc.payload
    lines = []
    if "vectors" in p:
        for v in p["vectors"]:
            w = "(" + ",".join(map(str, v["weights"])) + ")"
            status = "PASS" if v["passed"] else "FAIL"
            lines.append(f"{status} {w} {v['records']} records, {v['checks']} checks")
    for r in p["records"]:
        w = "(" + ",".join(map(str, r["weights"])) + ")"
        status = "PASS" if r["passed"] else "FAIL"
        line = f"{status} {w} {r['name']} [{r['count']}]"
        if r["counterexample"] is not None:
            detail = ", ".join(f"{k}={v}" for k, v in r["counterexample"].items())
            line += f" counterexample: {detail}"
        lines.append(line)
    failing = sum(1 for r in p["records"] if not r["passed"])
    status = "PASS" if p["passed"] else "FAIL"
    lines.append(f"{status}: {p['checks']} atomic checks, {failing} failing records")
    return "\n".join(lines) + "\n"
