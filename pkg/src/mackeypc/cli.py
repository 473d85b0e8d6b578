"""Command line front-end.

Every command reads one JSON document (``--input`` takes a path, ``-`` for
stdin, or the JSON text itself) and writes text, JSON or CSV.  Exit codes:
0 success, 1 verification failure (with witnesses), 2 bad input or an
exceeded resource cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from . import catalog
from .burnside import burnside_ring, table_of_marks
from .closed import (MAX_OBJECTS, check_curry, check_trilinear_eval, composition_bilinear, enumerate_lax_functors,
                     eval_bilinear, hom_permcat)
from .errors import AxiomError, InvalidInputError, MackeyPCError, ResourceCapError
from .groups import (Group, Subgroup, class_representative, conjugacy_classes_of_subgroups, double_cosets,
                     make_subgroup)
from .machine import kg_pi0, mackey_to_pcfunctor, suspension_pcfunctor
from .mackey import burnside_mackey, mackey_iso, validate_mackey
from .permcat import Report, compose_lax, validate_lax, validate_multilinear, validate_permcat
from .serialize import (abgroup_to_json, gset_from_json, group_from_json, key_to_json, mackey_from_json,
                        permcat_from_json, span_class_to_json, span_from_json, span_to_json)
from .spans import canonicalize_span, compose_spans, transitive_span_basis

COMMANDS = ("marks", "burnside-ring", "span-compose", "basis", "mackey-validate", "em-check", "susp-check",
            "coherence", "double-cosets")


@dataclass
class Outcome:
    status: int
    data: dict
    lines: list[str] = field(default_factory=list)   # text rendering
    rows: list[list] = field(default_factory=list)    # csv rendering


def _aligned(headers: list[str], rows: list[list]) -> list[str]:
    cells = [list(map(str, headers))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    return ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]


def _class_labels(g: Group) -> list[str]:
    return [f"H{c.index}" for c in conjugacy_classes_of_subgroups(g)]


def _classes_json(g: Group) -> list[dict]:
    return [{"index": c.index, "order": c.order, "members": len(c.members),
             "representative": [list(p) for p in c.representative.perms]}
            for c in conjugacy_classes_of_subgroups(g)]


def _class_legend(g: Group) -> list[str]:
    return [f"H{c.index}: order {c.order}, {len(c.members)} conjugate(s)" for c in conjugacy_classes_of_subgroups(g)]


def _group(doc: Any, cap: Optional[int]) -> Group:
    raw = doc.get("group", doc) if isinstance(doc, dict) else doc
    return group_from_json(raw, cap) if cap else group_from_json(raw)


def _report_outcome(rep: Report, message_ok: str, extra: Optional[dict] = None) -> Outcome:
    data = {"ok": rep.ok, "report": rep.to_json(), **(extra or {})}
    if rep.ok:
        return Outcome(0, {**data, "message": message_ok}, [message_ok, f"checks: {rep.checks}"],
                       [["ok", message_ok]])
    lines = [f"FAILED: {rep.subject}"] + [f"  {f.axiom}: witness {json.dumps(f.to_json()['witness'])}"
                                          for f in rep.failures]
    return Outcome(1, data, lines, [["axiom", "witness"]] + [[f.axiom, json.dumps(f.to_json()["witness"])]
                                                             for f in rep.failures])


# commands ------------------------------------------------------------------------------

def cmd_marks(doc, cap, seed) -> Outcome:
    g = _group(doc, cap)
    m = table_of_marks(g).tolist()
    labels = _class_labels(g)
    rows = [[f"G/{labels[i]}"] + m[i] for i in range(len(m))]
    return Outcome(0, {"classes": _classes_json(g), "marks": m},
                   _aligned([""] + labels, rows) + [""] + _class_legend(g), [[""] + labels] + rows)


def cmd_burnside_ring(doc, cap, seed) -> Outcome:
    g = _group(doc, cap)
    ring = burnside_ring(g)
    labels = _class_labels(g)
    s = ring.structure.tolist()
    lines, rows = [], [["left", "right"] + labels]
    for i in range(ring.rank):
        for j in range(ring.rank):
            terms = [f"{c}[G/{labels[k]}]" if c != 1 else f"[G/{labels[k]}]"
                     for k, c in enumerate(s[i][j]) if c]
            lines.append(f"[G/{labels[i]}] * [G/{labels[j]}] = {' + '.join(terms) or '0'}")
            rows.append([labels[i], labels[j]] + s[i][j])
    return Outcome(0, {"classes": _classes_json(g), "unit": ring.unit.tolist(), "structure": s},
                   lines + [""] + _class_legend(g), rows)


def cmd_span_compose(doc, cap, seed) -> Outcome:
    g = _group(doc, cap)
    first = span_from_json(doc.get("first"), g)
    second = span_from_json(doc.get("second"), g)
    if first.target != second.source:
        raise InvalidInputError("the first span's target is not the second span's source")
    out = compose_spans(first, second)
    keys = span_class_to_json(canonicalize_span(out))
    data = {"span": span_to_json(out), "class": keys}
    lines = [f"middle size: {out.middle.n}", f"left:  {list(out.left.images)}", f"right: {list(out.right.images)}",
             "class: " + (", ".join(f"(L={k['L']}, a={k['a']}, b={k['b']})" for k in keys) or "zero")]
    rows = [["L", "a", "b"]] + [[k["L"], k["a"], k["b"]] for k in keys]
    return Outcome(0, data, lines, rows)


def cmd_basis(doc, cap, seed) -> Outcome:
    g = _group(doc, cap)
    a = gset_from_json(doc.get("source"), g)
    b = gset_from_json(doc.get("target"), g)
    keys = [key_to_json(k) for k in transitive_span_basis(a, b)]
    rows = [[k["L"], k["a"], k["b"]] for k in keys]
    return Outcome(0, {"rank": len(keys), "basis": keys},
                   [f"rank {len(keys)}"] + _aligned(["L", "a", "b"], rows), [["L", "a", "b"]] + rows)


def cmd_double_cosets(doc, cap, seed) -> Outcome:
    g = _group(doc, cap)

    def subgroup(spec) -> Subgroup:
        if isinstance(spec, int):
            try:
                return class_representative(g, spec)
            except IndexError:
                raise InvalidInputError(f"no subgroup class {spec}") from None
        if isinstance(spec, dict) and "generators" in spec:
            return make_subgroup(g, spec["generators"])
        raise InvalidInputError("a subgroup is a class index or {\"generators\": [...]}")

    h, k = subgroup(doc.get("h")), subgroup(doc.get("k"))
    cosets = double_cosets(g, h, k)
    items = [{"representative": list(g.elements[c.representative]), "size": len(c.elements)} for c in cosets]
    rows = [[str(i["representative"]), i["size"]] for i in items]
    return Outcome(0, {"count": len(items), "double_cosets": items},
                   [f"{len(items)} double cosets"] + _aligned(["representative", "size"], rows),
                   [["representative", "size"]] + rows)


def cmd_mackey_validate(doc, cap, seed) -> Outcome:
    g = _group(doc, cap)
    m = mackey_from_json(doc, g, check=False)
    rep = validate_mackey(m, limit=50)
    return _report_outcome(rep, "valid Mackey functor", {"values": [abgroup_to_json(v) for v in m.values]})


def _iso_outcome(found, message: str, values) -> Outcome:
    described = [v.describe() for v in values]
    if found is None:
        return Outcome(1, {"ok": False, "message": "no isomorphism found", "values": described},
                       ["FAILED: no isomorphism found"], [["ok", "no isomorphism found"]])
    maps = [h.matrix.tolist() for h in found.maps]
    return Outcome(0, {"ok": True, "message": message, "values": described, "isomorphism": maps},
                   [message] + [f"  level H{i}: {d}" for i, d in enumerate(described)], [["ok", message]])


def cmd_em_check(doc, cap, seed) -> Outcome:
    g = _group(doc, cap)
    m = mackey_from_json(doc, g)
    out = kg_pi0(mackey_to_pcfunctor(m))
    return _iso_outcome(mackey_iso(out, m), "π₀ round-trip isomorphism found", out.values)


def cmd_susp_check(doc, cap, seed) -> Outcome:
    g = _group(doc, cap)
    x = gset_from_json(doc.get("x", doc), g)
    out = kg_pi0(suspension_pcfunctor(x))
    return _iso_outcome(mackey_iso(out, burnside_mackey(x)),
                        "π₀ of the suspension input is the represented Burnside functor", out.values)


def cmd_coherence(doc, cap, seed) -> Outcome:
    """The validator battery over the built-in catalog plus any user categories."""
    rng = random.Random(seed)
    max_objects = cap or MAX_OBJECTS
    cats = {name: catalog.permcat(name) for name in catalog.PERMCATS}
    triples = list(catalog.CLOSED_TRIPLES)
    extra = []
    for i, c in enumerate((doc or {}).get("permcats", [])):
        cat = permcat_from_json(c)
        name = cat.name or f"input[{i}]"
        cats[name] = cat
        extra.append(name)
    results = []

    def record(rep: Report):
        results.append(rep)

    for name, c in cats.items():
        rep = validate_permcat(c)
        record(rep)
        # functor categories are only built over categories that passed
        if name in extra and rep.ok:
            triples.append((name, name, name))
    for a, b, c in triples:
        ca, cb, cc = cats[a], cats[b], cats[c]
        caps = {"max_objects": max_objects}
        h = hom_permcat(ca, cb, **caps)
        record(validate_permcat(h))
        fs = enumerate_lax_functors(ca, cb)
        for f in fs:
            record(validate_lax(f))
        # seeded composition sample: composites of valid lax functors stay valid
        gs = enumerate_lax_functors(cb, cc)
        for _ in range(min(4, len(fs) * len(gs))):
            record(validate_lax(compose_lax(rng.choice(gs), rng.choice(fs))))
        record(validate_multilinear(eval_bilinear(ca, cb, **caps)))
        record(validate_multilinear(composition_bilinear(ca, cb, cc, **caps)))
        record(check_trilinear_eval(ca, cb, cc, **caps))
        record(check_curry(ca, cb, cc, **caps))
    failed = [r for r in results if not r.ok]
    summary = {"ok": not failed, "reports": len(results), "checks": sum(r.checks for r in results),
               "failures": [r.to_json() for r in failed]}
    if failed:
        lines = [f"FAILED: {len(failed)} of {len(results)} reports"]
        for r in failed:
            lines += [f"  {r.subject}: {f.axiom} witness {json.dumps(f.to_json()['witness'])}" for f in r.failures]
        rows = [["subject", "axiom", "witness"]] + [[r.subject, f.axiom, json.dumps(f.to_json()["witness"])]
                                                    for r in failed for f in r.failures]
        return Outcome(1, summary, lines, rows)
    msg = f"all {len(results)} coherence reports pass ({summary['checks']} checks)"
    return Outcome(0, {**summary, "message": msg}, [msg], [["ok", msg]])


HANDLERS: dict[str, Callable[[Any, Optional[int], int], Outcome]] = {
    "marks": cmd_marks, "burnside-ring": cmd_burnside_ring, "span-compose": cmd_span_compose,
    "basis": cmd_basis, "mackey-validate": cmd_mackey_validate, "em-check": cmd_em_check,
    "susp-check": cmd_susp_check, "coherence": cmd_coherence, "double-cosets": cmd_double_cosets,
}


# plumbing ------------------------------------------------------------------------------

def _read_input(arg: Optional[str], command: str):
    if arg is None:
        if command == "coherence":
            return {}
        raise InvalidInputError(f"{command} needs --input")
    if arg == "-":
        text = sys.stdin.read()
    elif os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = arg
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"malformed JSON: {e}") from None


def render(out: Outcome, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(out.data, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(out.rows)
        return buf.getvalue()
    return "\n".join(out.lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mackeypc", description="Burnside category, Mackey functor and "
                                "permutative category computations.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", help="JSON file, '-' for stdin, or inline JSON text")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--cap", type=int, default=None,
                   help="resource cap: group order, or hom-category objects for coherence")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized samples")
    return p


def run(argv: Optional[list[str]] = None) -> tuple[int, str]:
    """Execute one command; returns (exit code, output text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return (0 if e.code == 0 else 2), ""
    fmt = args.format
    try:
        doc = _read_input(args.input, args.command)
        out = HANDLERS[args.command](doc, args.cap, args.seed)
    except ResourceCapError as e:
        out = Outcome(2, {"ok": False, "error": "resource cap exceeded", "cap": e.cap, "limit": e.limit,
                          "message": str(e)}, [f"error: resource cap {e.cap} exceeded: {e}"],
                      [["error", "cap", "limit"], ["resource cap exceeded", e.cap, e.limit]])
    except AxiomError as e:
        fails = [f.to_json() for f in e.failures]
        out = Outcome(1, {"ok": False, "message": str(e), "failures": fails},
                      [f"FAILED: {e}"] + [f"  {f['axiom']}: witness {json.dumps(f['witness'])}" for f in fails],
                      [["axiom", "witness"]] + [[f["axiom"], json.dumps(f["witness"])] for f in fails])
    except (MackeyPCError, ValueError, TypeError, KeyError, AttributeError) as e:
        out = Outcome(2, {"ok": False, "error": "invalid input", "message": str(e)}, [f"error: {e}"],
                      [["error", "message"], ["invalid input", str(e)]])
    return out.status, render(out, fmt)


def main(argv: Optional[list[str]] = None) -> int:
    code, text = run(argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
