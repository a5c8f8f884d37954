"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import decisions as dec
from .chains import chained_recursive, ell_recursive, verify_grid
from .graphs import load_graph
from .raag import Raag, Word, lift_path, mvh_from_json
from .surfaces import Surface, ell_closed_form, xi
from .witness import OutOfScope, build_cycle_witness, build_path_witness, verify_witness

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _surface_arg(text):
    try:
        return Surface.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _output_flags():
    p = argparse.ArgumentParser(add_help=False)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--json", dest="mode", action="store_const", const="json")
    mode.add_argument("--dot", dest="mode", action="store_const", const="dot")
    mode.add_argument("--markdown", dest="mode", action="store_const", const="markdown")
    p.set_defaults(mode="text")
    return p


def _surface_flags():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--punctures", type=int, required=True)
    return p


def _grid_flags():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--max-genus", type=int, default=12)
    p.add_argument("--max-punctures", type=int, default=24)
    return p


def build_parser() -> argparse.ArgumentParser:
    out, surf, grid = _output_flags(), _surface_flags(), _grid_flags()
    parser = _Parser(prog="linchain", description="Path and cycle RAAGs in mapping class and braid groups")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ell", parents=[out, surf], help="maximal linear chain length")
    p.add_argument("--method", choices=["closed", "recursive", "both"], default="both")
    sub.add_parser("xi", parents=[out, surf], help="topological complexity 3g-3+p")
    sub.add_parser("table", parents=[out, grid], help="grid of ell values as markdown")

    verify = sub.add_parser("verify").add_subparsers(dest="what", required=True, parser_class=_Parser)
    verify.add_parser("grid", parents=[out, grid], help="recursion vs closed form")

    wit = sub.add_parser("witness").add_subparsers(dest="what", required=True, parser_class=_Parser)
    wit.add_parser("path", parents=[out, surf])
    wit.add_parser("cycle", parents=[out, surf])

    decide = sub.add_parser("decide").add_subparsers(dest="what", required=True, parser_class=_Parser)
    for name in ("path-mcg", "cycle-mcg"):
        p = decide.add_parser(name, parents=[out, surf])
        p.add_argument("--m", type=int, required=True)
    for name in ("path-braid", "cycle-braid"):
        p = decide.add_parser(name, parents=[out])
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--strands", type=int, required=True)
        p.add_argument("--pure", action="store_true")

    ob = sub.add_parser("obstruct").add_subparsers(dest="what", required=True, parser_class=_Parser)
    p = ob.add_parser("virtual", parents=[out])
    p.add_argument("--source", type=_surface_arg, required=True)
    p.add_argument("--target", type=_surface_arg, required=True)
    p = ob.add_parser("braid", parents=[out])
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--target", type=_surface_arg, required=True)
    p.add_argument("--boundary", type=int, choices=[0, 1, 2], default=0)
    p = ob.add_parser("sphere-closed", parents=[out])
    p.add_argument("--punctures", type=int, required=True)
    p.add_argument("--genus", type=int, required=True)

    p = sub.add_parser("rigidity", parents=[out])
    p.add_argument("--source", type=_surface_arg, required=True)
    p.add_argument("--target", type=_surface_arg, required=True)

    raag = sub.add_parser("raag").add_subparsers(dest="what", required=True, parser_class=_Parser)
    p = raag.add_parser("nf", parents=[out])
    p.add_argument("--graph", required=True)
    p.add_argument("--word", required=True)
    p = raag.add_parser("center", parents=[out])
    p.add_argument("--graph", required=True)
    p = raag.add_parser("lift", parents=[out], help="lift a path through a multi-valued homomorphism")
    p.add_argument("--graph", required=True, help="multi-valued homomorphism JSON document")
    p.add_argument("--word", required=True, help="the path in the target, e.g. 'u v w'")
    return parser


def _emit(stream, args, text, doc):
    if args.mode == "json":
        stream.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        stream.write(text if text.endswith("\n") else text + "\n")


def _verdict_text(v: dec.Verdict) -> str:
    lines = [v.answer.value]
    if v.value is not None:
        lines[0] += f" (max {v.value})"
    for r in v.reasons:
        lines.append(f"  {r.name}: {r.lhs} <= {r.rhs} {'ok' if r.ok else 'FAILS'}")
    if v.bound is not None:
        lines.append(f"  bound: m <= {v.bound}")
    if v.scope_note:
        lines.append(f"  note: {v.scope_note}")
    return "\n".join(lines)


def _surface_of(args):
    return Surface(args.genus, args.punctures)


def _markdown_table(max_genus, max_punctures):
    head = "| g \\ p | " + " | ".join(str(p) for p in range(max_punctures + 1)) + " |"
    rule = "|---|" + "---|" * (max_punctures + 1)
    rows = [head, rule]
    for g in range(max_genus + 1):
        cells = " | ".join(str(ell_closed_form(Surface(g, p))) for p in range(max_punctures + 1))
        rows.append(f"| {g} | {cells} |")
    return "\n".join(rows)


def _dispatch(args, stream, errors) -> int:
    cmd, what = args.command, getattr(args, "what", None)

    if cmd == "ell":
        s = _surface_of(args)
        doc = {"surface": {"g": s.genus, "p": s.punctures}}
        if args.method in ("closed", "both"):
            doc["closed"] = ell_closed_form(s)
        if args.method in ("recursive", "both"):
            doc["recursive"] = ell_recursive(s)
        text = " ".join(f"{k}={doc[k]}" for k in ("closed", "recursive") if k in doc)
        _emit(stream, args, text, doc)
        return EXIT_OK

    if cmd == "xi":
        s = _surface_of(args)
        _emit(stream, args, str(xi(s)), {"surface": {"g": s.genus, "p": s.punctures}, "xi": xi(s)})
        return EXIT_OK

    if cmd == "table":
        if args.max_genus < 0 or args.max_punctures < 0:
            raise dec.DomainError("grid bounds must be non-negative")
        rows = [[ell_closed_form(Surface(g, p)) for p in range(args.max_punctures + 1)] for g in range(args.max_genus + 1)]
        _emit(stream, args, _markdown_table(args.max_genus, args.max_punctures), {"ell": rows})
        return EXIT_OK

    if cmd == "verify":
        if args.max_genus < 0 or args.max_punctures < 0:
            raise dec.DomainError("grid bounds must be non-negative")
        report = verify_grid(args.max_genus, args.max_punctures)
        text = f"{report.cells} cells, {len(report.violations)} violations"
        if report.violations:
            text += "\n" + "\n".join(report.violations)
        _emit(stream, args, text, report.to_json())
        return EXIT_OK if report.ok else EXIT_VERIFY

    if cmd == "witness":
        s = _surface_of(args)
        w = build_path_witness(s) if what == "path" else build_cycle_witness(s)
        problems = verify_witness(w)
        if args.mode == "dot":
            stream.write(w.to_dot())
        else:
            text = f"{w.pattern} of length {len(w)} on {s}: " + " ".join(str(c) for c in w.curves)
            _emit(stream, args, text, w.to_json())
        if problems:
            for line in problems:
                print(line, file=errors)
            return EXIT_VERIFY
        return EXIT_OK

    if cmd == "decide":
        if what in ("path-mcg", "cycle-mcg"):
            s = _surface_of(args)
            if what == "path-mcg":
                yes = dec.decide_path_in_mcg(args.m, s)
                v = dec.Verdict(dec.Answer.YES if yes else dec.Answer.NO, value=dec.max_path_in_mcg(s))
            else:
                v = dec.decide_cycle_in_mcg(args.m, s)
        else:
            t = dec.BraidTarget(args.strands, args.pure)
            if what == "path-braid":
                yes, mx = dec.decide_path_in_braid(args.m, t), dec.max_path_in_braid(t)
            else:
                yes, mx = dec.decide_cycle_in_braid(args.m, t), dec.max_cycle_in_braid(t)
            v = dec.Verdict(dec.Answer.YES if yes else dec.Answer.NO, value=mx)
        _emit(stream, args, v.answer.value, v.to_json())
        return EXIT_OK

    if cmd == "obstruct":
        if what == "virtual":
            v = dec.virtual_mcg_obstruction(args.source, args.target)
        elif what == "braid":
            v = dec.braid_virtual_obstruction(args.strands, args.target, args.boundary)
        else:
            v = dec.sphere_into_closed_virtual(args.punctures, args.genus)
        _emit(stream, args, _verdict_text(v), v.to_json())
        return EXIT_OK

    if cmd == "rigidity":
        v = dec.rigidity_check(args.source, args.target)
        _emit(stream, args, _verdict_text(v), v.to_json())
        return EXIT_OK

    if cmd == "raag":
        if what == "lift":
            phi = mvh_from_json(json.loads(Path(args.graph).read_text()))
            path = Word.parse(args.word)
            if any(e != 1 for _, e in path.syllables) or len(path.syllables) != len(path):
                raise dec.DomainError("the path must list distinct vertices without exponents")
            iota = {k: u for k, (u, _) in enumerate(path.syllables, start=1)}
            lift = lift_path(phi, iota)
            if lift is None:
                _emit(stream, args, "no lift", {"lift": None})
            else:
                text = " ".join(f"{k}->{x}" for k, x in lift.items())
                _emit(stream, args, text, {"lift": [lift[k] for k in sorted(lift)]})
            return EXIT_OK
        r = Raag(load_graph(args.graph))
        if what == "nf":
            w = Word.parse(args.word)
            nf = r.normal_form(w)
            doc = {"word": str(w), "normal_form": str(nf), "support": sorted(map(str, nf.generators()))}
            _emit(stream, args, str(nf), doc)
        else:
            central = [str(v) for v in r.center_generators()]
            text = "centerless" if not central else "central generators: " + " ".join(central)
            _emit(stream, args, text, {"centerless": not central, "central_generators": central})
        return EXIT_OK

    raise UsageError(f"unknown command {cmd!r}")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        return _dispatch(args, stdout, stderr)
    except (dec.DomainError, OutOfScope, ValueError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DOMAIN


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
