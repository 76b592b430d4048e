"""Command-line front end.

Exit codes: 0 success or true, 1 property false, 2 input error,
3 system-construction failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path
from typing import Sequence, TextIO

from . import elements as el
from . import subgroups as sg
from .build import build_table
from .hasse import hasse_dot
from .lcmhom import apply_hom, check_lcm_hom, load_map, render_images
from .systems import from_selector
from .table import GarsideError, GarsideTable
from .words import (
    PresentationError, load_presentation, parse_positive, parse_word, render, render_signed,
)

OK, FALSE, INPUT_ERROR, BUILD_ERROR = 0, 1, 2, 3


class InputError(Exception):
    pass


class BuildError(Exception):
    pass


def _system_args() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--builtin", metavar="SEL",
                     help="braid:N, dual:N, xyz or abelian:N")
    src.add_argument("--presentation", metavar="FILE", help="presentation JSON file")
    common.add_argument("--delta", metavar="WORD", help="Garside word (overrides the file)")
    common.add_argument("--force", action="store_true", help="lift the builtin size guards")
    common.add_argument("--json", action="store_true", help="JSON output")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _system_args()
    parser = argparse.ArgumentParser(prog="garside", description="Finite Garside systems toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("inspect", parents=[common], help="atoms, simples, Δ, balanced simples")
    p = sub.add_parser("nf", parents=[common], help="left normal form of a positive word")
    p.add_argument("word")
    p = sub.add_parser("eq", parents=[common], help="decide equality in the group")
    p.add_argument("word1")
    p.add_argument("word2")
    p = sub.add_parser("frac", parents=[common], help="reduced left fraction")
    p.add_argument("word")
    for name in ("gcd", "lcm"):
        p = sub.add_parser(name, parents=[common], help=f"{name} of two positive words")
        p.add_argument("--side", choices=["L", "R"], default="L")
        p.add_argument("word1")
        p.add_argument("word2")
    for name in ("balanced", "support", "parabolic"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("word")
    p = sub.add_parser("subgroup", parents=[common], help="closure of simples and its report")
    p.add_argument("--gens", required=True, help="comma separated words naming simples")
    p = sub.add_parser("intersect", parents=[common])
    p.add_argument("--gens", required=True, action="append")
    p = sub.add_parser("enumerate", parents=[common])
    p.add_argument("kind", choices=["parabolics", "garside"])
    p.add_argument("--budget", type=int, default=sg.EXHAUSTIVE_BUDGET)
    p = sub.add_parser("hasse", parents=[common], help="DOT digraph of left divisibility")
    p.add_argument("--out", help="output file (default stdout)")

    hom = sub.add_parser("lcm-hom", help="LCM-homomorphism tools")
    hsub = hom.add_subparsers(dest="action", required=True)
    p = hsub.add_parser("check")
    p.add_argument("mapfile")
    p.add_argument("--bound", type=int)
    p.add_argument("--json", action="store_true")
    p = hsub.add_parser("apply")
    p.add_argument("mapfile")
    p.add_argument("word")
    p.add_argument("--bound", type=int)
    p.add_argument("--json", action="store_true")
    return parser


# -- system loading -------------------------------------------------------------


def _cached_builtin(selector: str, force: bool) -> GarsideTable:
    cache = os.environ.get("GARSIDE_CACHE_DIR")
    if not cache:
        return from_selector(selector, force=force)
    path = Path(cache) / (selector.replace(":", "_") + ".json")
    if path.exists():
        return GarsideTable.load(path)
    table = from_selector(selector, force=force)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        json.dump(table.to_dict(), fh)
    if path.exists():
        os.unlink(tmp)
    else:
        os.replace(tmp, path)
    return table


def load_system(args) -> GarsideTable:
    if args.builtin is None and args.presentation is None:
        raise InputError("a system is required: --builtin SEL or --presentation FILE")
    if args.builtin is not None:
        kind = args.builtin.partition(":")[0]
        if kind not in ("braid", "dual", "xyz", "abelian"):
            raise InputError(f"unknown builtin selector {args.builtin!r}")
        try:
            return _cached_builtin(args.builtin, args.force)
        except GarsideError as exc:
            raise BuildError(str(exc)) from None
        except PresentationError as exc:
            raise InputError(str(exc)) from None
    try:
        pres = load_presentation(args.presentation)
        delta = parse_positive(args.delta, pres) if args.delta else pres.delta
    except PresentationError as exc:
        raise InputError(str(exc)) from None
    try:
        return build_table(pres, delta, name=Path(args.presentation).stem)
    except (GarsideError, PresentationError) as exc:
        raise BuildError(str(exc)) from None


def _generators(table: GarsideTable) -> list[str]:
    return list(table.letters)


def _positive(table: GarsideTable, text: str) -> el.PositiveElement:
    try:
        return el.normal_form(table, parse_positive(text, _generators(table)))
    except (PresentationError, GarsideError) as exc:
        raise InputError(str(exc)) from None


def _signed(table: GarsideTable, text: str) -> el.GroupElement:
    try:
        return el.to_fraction(table, parse_word(text, _generators(table)))
    except (PresentationError, GarsideError) as exc:
        raise InputError(str(exc)) from None


def _simple(table: GarsideTable, text: str) -> int:
    g = _positive(table, text)
    if len(g) > 1:
        raise InputError(f"{text!r} is not a simple (normal form {g.render()})")
    return g.nf[0] if g.nf else table.identity


def _nf_words(g: el.PositiveElement) -> list[str]:
    return [g.table.render(s) for s in g.nf]


# -- commands -------------------------------------------------------------------


class _Out:
    def __init__(self, args, stream: TextIO):
        self.json = getattr(args, "json", False)
        self.stream = stream

    def emit(self, text: str, data) -> None:
        if self.json:
            self.stream.write(json.dumps(data, ensure_ascii=False, sort_keys=True) + "\n")
        else:
            self.stream.write(text.rstrip("\n") + "\n")


def _report_text(report: sg.SubgroupReport) -> str:
    d = report.to_dict()
    lines = ["members: " + ", ".join(d["members"])]
    for key in ("isSublattice", "isGarside", "isAtomic", "isParabolic"):
        lines.append(f"{key}: {str(d[key]).lower()}")
    if d["garsideElement"] is not None:
        lines.append(f"garsideElement: {d['garsideElement']}")
        lines.append("subAtoms: " + ", ".join(d["subAtoms"]))
    if d["failureWitness"] is not None:
        lines.append(f"failureWitness: ({', '.join(d['failureWitness'])}): {d['failureReason']}")
    if d["parabolicWitness"] is not None:
        lines.append(f"witness: {d['parabolicWitness']} ∈ D(Δ)∩G⁺_δ ∖ D(δ)")
    for note in d["notes"]:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def _cmd_inspect(table, args, out):
    balanced = sg.enumerate_balanced(table)
    data = {
        "name": table.name,
        "simpleCount": len(table),
        "delta": table.render(table.delta),
        "atoms": [table.render(a) for a in table.atoms],
        "balanced": [table.render(s) for s in balanced],
        "warnings": list(table.warnings),
    }
    text = "\n".join([
        f"system: {table.name}",
        f"simples: {len(table)}",
        f"delta: {data['delta']}",
        "atoms: " + ", ".join(data["atoms"]),
        "balanced: " + ", ".join(data["balanced"]),
    ] + [f"warning: {w}" for w in table.warnings])
    out.emit(text, data)
    return OK


def _cmd_nf(table, args, out):
    g = _positive(table, args.word)
    out.emit(g.render(), {"nf": _nf_words(g)})
    return OK


def _cmd_eq(table, args, out):
    g, h = _signed(table, args.word1), _signed(table, args.word2)
    equal = el.fraction_equal(g, h)
    out.emit("true" if equal else "false", {"equal": equal})
    return OK if equal else FALSE


def _cmd_frac(table, args, out):
    g = _signed(table, args.word)
    out.emit(g.render(), {"denominator": _nf_words(g.denom), "numerator": _nf_words(g.numer)})
    return OK


def _cmd_gcd(table, args, out):
    g, h = _positive(table, args.word1), _positive(table, args.word2)
    r = el.gcd(g, h, args.side)
    out.emit(r.render(), {"nf": _nf_words(r), "side": args.side})
    return OK


def _cmd_lcm(table, args, out):
    g, h = _positive(table, args.word1), _positive(table, args.word2)
    r = el.lcm(g, h, args.side)
    out.emit(r.render(), {"nf": _nf_words(r), "side": args.side})
    return OK


def _cmd_balanced(table, args, out):
    ok = el.is_balanced(_positive(table, args.word))
    out.emit("true" if ok else "false", {"balanced": ok})
    return OK if ok else FALSE


def _cmd_support(table, args, out):
    g = _positive(table, args.word)
    try:
        atoms = sorted(el.support(g))
    except GarsideError as exc:
        raise InputError(str(exc)) from None
    names = [table.render(a) for a in atoms]
    out.emit(", ".join(names) if names else "(empty)", {"support": names})
    return OK


def _cmd_parabolic(table, args, out):
    report = sg.is_standard_parabolic(table, _simple(table, args.word))
    out.emit(_report_text(report), report.to_dict())
    return OK if report.is_parabolic else FALSE


def _closure_of(table, text: str) -> sg.MinimalSet:
    gens = [_simple(table, w) for w in text.split(",") if w.strip()]
    return sg.minimal_closure(table, gens)


def _cmd_subgroup(table, args, out):
    report = sg.classify(_closure_of(table, args.gens))
    out.emit(_report_text(report), report.to_dict())
    return OK if report.is_garside else FALSE


def _cmd_intersect(table, args, out):
    if len(args.gens) != 2:
        raise InputError("intersect needs exactly two --gens options")
    X, Y = (_closure_of(table, g) for g in args.gens)
    try:
        report = sg.intersect(X, Y)
    except GarsideError as exc:
        raise InputError(str(exc)) from None
    out.emit(_report_text(report), report.to_dict())
    return OK


def _cmd_enumerate(table, args, out):
    if args.kind == "parabolics":
        reports, partial = sg.enumerate_parabolics(table), False
    else:
        result = sg.enumerate_garside(table, args.budget)
        reports, partial = result.reports, result.partial
    blocks = [_report_text(r) for r in reports]
    header = f"{len(reports)} {args.kind}" + (" (partial)" if partial else "")
    out.emit("\n\n".join([header] + blocks),
             {"kind": args.kind, "partial": partial, "reports": [r.to_dict() for r in reports]})
    return OK


def _cmd_hasse(table, args, out):
    text = hasse_dot(table)
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot write {args.out}: {exc}") from None
        out.emit(f"wrote {args.out}", {"out": args.out, "nodes": len(table),
                                       "edges": len(table.covers())})
    else:
        out.stream.write(text)
    return OK


def _cmd_lcm_hom(args, out):
    try:
        MA, MB, p = load_map(args.mapfile)
        verdict = check_lcm_hom(MA, MB, p, args.bound)
    except PresentationError as exc:
        raise InputError(str(exc)) from None
    if args.action == "check":
        d = verdict.to_dict()
        lines = []
        for ax in ("L0", "L1", "L2"):
            r = d[ax]
            line = f"{ax}: {'pass' if r['passed'] else 'fail'}"
            if r["witness"]:
                line += f" witness ({', '.join(r['witness'])})"
            if r["detail"]:
                line += f" {r['detail']}"
            lines.append(line)
        lines.append("L3: skipped")
        lines += [f"phi({s}) = {w}" for s, w in render_images(verdict).items()]
        lines.append(f"overall: {str(verdict.overall).lower()}")
        out.emit("\n".join(lines), d)
        return OK if verdict.overall else FALSE
    try:
        word = parse_word(args.word, MA.generators)
        image = apply_hom(verdict, word)
    except PresentationError as exc:
        raise InputError(str(exc)) from None
    out.emit(render_signed(image), {"image": render_signed(image)})
    return OK


COMMANDS = {
    "inspect": _cmd_inspect, "nf": _cmd_nf, "eq": _cmd_eq, "frac": _cmd_frac,
    "gcd": _cmd_gcd, "lcm": _cmd_lcm, "balanced": _cmd_balanced, "support": _cmd_support,
    "parabolic": _cmd_parabolic, "subgroup": _cmd_subgroup, "intersect": _cmd_intersect,
    "enumerate": _cmd_enumerate, "hasse": _cmd_hasse,
}


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    out = _Out(args, stdout)
    try:
        if args.command == "lcm-hom":
            return _cmd_lcm_hom(args, out)
        table = load_system(args)
        return COMMANDS[args.command](table, args, out)
    except InputError as exc:
        stderr.write(f"error: {exc}\n")
        return INPUT_ERROR
    except BuildError as exc:
        stderr.write(f"system construction failed: {exc}\n")
        return BUILD_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
