"""Command line: ``ybknot <subcommand> ...``.

Exit codes: 0 success (all checks pass), 1 a check failed, 2 usage or
format error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fixtures
from .algebra.terms import format_term
from .braid import BraidWord, apply_word, parse_braid, verify_representation
from .diagram import color_count, parse_diagram
from .errors import YBKnotError
from .invariant import (
    fixed_point_count,
    format_presentation,
    hom_count,
    manturov,
    parse_presentation,
    presentation_from_braid,
    presentation_from_diagram,
    qtilde,
    sawollek_det,
    simplify,
)
from .io import load_diagram_text, load_model, load_switch, load_virtual, read_text
from .report import Report
from .switch.builtins import builtin
from .switch.finite import (
    check_biquandle,
    check_multiswitch_shape,
    check_switch,
    check_virtual_pair,
)
from .switch.symbolic import SwitchDef

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(YBKnotError):
    pass


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _braid(args) -> BraidWord:
    if getattr(args, "link", None):
        return fixtures.braid(args.link)
    if args.word is None:
        raise UsageError("give --word (and optionally --n) or --link")
    return parse_braid(args.word, args.n)


def _pair(args):
    (S, V), sdef = load_switch(args.switch, getattr(args, "model", None), getattr(args, "params", None))
    return S, load_virtual(getattr(args, "v", None), S, V), sdef


def _constraint(args, models=None):
    if not getattr(args, "constraint", None):
        return None
    models = models or load_model(args.constraint)
    if len(models) < 2:
        raise UsageError(f"model {args.constraint} has no trivial subset")
    return models[1]


# ---------------------------------------------------------------- commands


def cmd_check(args) -> int:
    sources = [s for s in (args.builtin, args.file, args.switch) if s]
    if len(sources) != 1:
        raise UsageError("give exactly one of --builtin, --file, --switch")
    S_spec = sources[0]
    (S, V), _ = load_switch(S_spec, args.model, args.params)
    V = load_virtual(args.v, S, V)
    reports: list[Report] = [check_switch(S), check_biquandle(S), check_virtual_pair(S, V)]
    if S.m >= 1:
        reports.append(check_multiswitch_shape(S))
    ok = all(r.ok for r in reports)
    classification = reports[1].extra.get("classification")
    payload = {"invariant": "check-switch", "switch": S.name or S_spec, "ok": ok,
               "classification": classification,
               "reports": [r.to_json() for r in reports]}
    text = "\n".join(r.render() for r in reports)
    text += f"\nclassification: {classification}\nresult: {'PASS' if ok else 'FAIL'}"
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify_rep(args) -> int:
    S, V, _ = _pair(args)
    rep = verify_representation(S, V, args.n)
    _emit(args, {"invariant": "verify-rep", "ok": rep.ok, "report": rep.to_json()}, rep.render())
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_act(args) -> int:
    beta = _braid(args)
    if args.tuple is not None:
        S, V, _ = _pair(args)
        point = [int(v) for v in args.tuple.replace(",", " ").split()]
        image = apply_word((S, V), beta, point)
        _emit(args, {"invariant": "act", "value": list(image)}, " ".join(map(str, image)))
        return EXIT_OK
    sdef = builtin(args.define)
    if not isinstance(sdef, SwitchDef):
        raise UsageError(f"{args.define} has no symbolic action; use sawollek for module switches")
    images = apply_word(sdef, beta)
    rows = {str(g): format_term(t) for g, t in sorted(images.items())}
    _emit(args, {"invariant": "act", "value": rows},
          "\n".join(f"{g} -> {t}" for g, t in rows.items()))
    return EXIT_OK


def cmd_color(args) -> int:
    D = parse_diagram(load_diagram_text(args.diagram))
    S, V, _ = _pair(args)
    value = color_count(D, S, V, force=args.force)
    _emit(args, {"invariant": "color", "value": value}, str(value))
    return EXIT_OK


def _presentation(args):
    if getattr(args, "presentation", None):
        return parse_presentation(read_text(args.presentation))
    if getattr(args, "diagram", None):
        D = parse_diagram(load_diagram_text(args.diagram))
        return presentation_from_diagram(D, builtin(args.define))
    beta = _braid(args)
    if getattr(args, "qtilde", False) or args.define is None:
        return qtilde(beta)
    return presentation_from_braid(beta, builtin(args.define))


def cmd_homcount(args) -> int:
    P = _presentation(args)
    if args.manturov:
        P = manturov(P)
    if args.simplify:
        P = simplify(P)
    models = load_model(args.target)
    value = hom_count(P, models[0], _constraint(args))
    _emit(args, {"invariant": "homcount", "value": value}, str(value))
    return EXIT_OK


def cmd_fixedpoints(args) -> int:
    beta = _braid(args)
    S, V, _ = _pair(args)
    value = fixed_point_count(beta, S, V, _constraint(args))
    _emit(args, {"invariant": "fixedpoints", "value": value}, str(value))
    return EXIT_OK


def _show_presentation(args, P, name) -> int:
    if args.manturov:
        P = manturov(P)
    if args.simplify:
        P = simplify(P)
    text = format_presentation(P).rstrip("\n")
    payload = {"invariant": name, "value": text,
               "generators": len(P.generators), "relations": len(P.relations)}
    if not args.json and not getattr(args, "print_presentation", True):
        text = f"{len(P.generators)} generators, {len(P.relations)} relations"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_qtilde(args) -> int:
    return _show_presentation(args, qtilde(_braid(args)), "qtilde")


def cmd_presentation(args) -> int:
    if args.define is None:
        raise UsageError("presentation needs --def")
    return _show_presentation(args, _presentation(args), "presentation")


def cmd_simplify(args) -> int:
    args.simplify = True
    return _show_presentation(args, parse_presentation(read_text(args.presentation)), "simplify")


def cmd_sawollek(args) -> int:
    value = sawollek_det(_braid(args))
    _emit(args, {"invariant": "sawollek", "value": str(value)}, str(value))
    return EXIT_OK


_TABLE_INVARIANTS = ("qtilde-homcount", "fixedpoints", "color", "sawollek")


def cmd_table(args) -> int:
    links = [s for s in args.links.replace(",", " ").split()] if args.links is not None \
        else list(fixtures.BRAIDS)
    rows = []
    if args.invariant == "qtilde-homcount":
        target = load_model(args.target)
        constraint = _constraint(args)
        for name in links:
            rows.append((name, hom_count(qtilde(fixtures.braid(name)), target[0], constraint)))
    elif args.invariant in ("fixedpoints", "color"):
        from .diagram import closure
        S, V, _ = _pair(args)
        for name in links:
            beta = fixtures.braid(name)
            value = fixed_point_count(beta, S, V) if args.invariant == "fixedpoints" \
                else color_count(closure(beta), S, V, force=args.force)
            rows.append((name, value))
    else:
        for name in links:
            rows.append((name, str(sawollek_det(fixtures.braid(name)))))
    payload = {"invariant": args.invariant, "rows": [{"link": n, "value": v} for n, v in rows]}
    width = max([len(n) for n, _ in rows] + [4])
    text = "\n".join([f"{'link':<{width}}  {args.invariant}"] +
                     [f"{n:<{width}}  {v}" for n, v in rows])
    _emit(args, payload, text)
    return EXIT_OK


# ------------------------------------------------------------------ parser


def _add_word(p, required=False):
    p.add_argument("--word", help='braid word such as "s1 S2 r1"')
    p.add_argument("--n", type=int, help="strand count (default: largest index + 1)")
    p.add_argument("--link", choices=sorted(fixtures.BRAIDS), help="fixture braid instead of --word")


def _add_switch(p):
    p.add_argument("--switch", required=True,
                   help="builtin NAME, NAME:MODEL, alexander:p=5,s=2,t=3, or a JSON file")
    p.add_argument("--model", help="model for a builtin switch (fixture name or JSON file)")
    p.add_argument("--params", help="alexander parameters p=..,s=..,t=..")
    p.add_argument("--v", help="virtual switch: 'twist' or a switch spec (default: the definition's own)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ybknot", description="Switch checks and virtual link invariants.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-switch", parents=[common], help="check switch, biquandle and virtual-pair axioms")
    p.add_argument("--builtin")
    p.add_argument("--file")
    p.add_argument("--switch")
    p.add_argument("--model")
    p.add_argument("--params")
    p.add_argument("--v")
    p.set_defaults(func=cmd_check)

    pb = sub.add_parser("braid", help="braid group actions")
    bsub = pb.add_subparsers(dest="braid_command", required=True)
    p = bsub.add_parser("verify-rep", parents=[common], help="check every VB_n relation on all tuples")
    _add_switch(p)
    p.add_argument("--n", type=int, default=3)
    p.set_defaults(func=cmd_verify_rep)
    p = bsub.add_parser("act", parents=[common], help="apply a braid word symbolically or to a tuple")
    _add_word(p)
    p.add_argument("--def", dest="define", default="quandle", help="symbolic definition (builtin name)")
    p.add_argument("--switch", help="finite switch for --tuple")
    p.add_argument("--model")
    p.add_argument("--params")
    p.add_argument("--v")
    p.add_argument("--tuple", help="comma-separated flat point indices")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("color", parents=[common], help="count biquandle colorings of a diagram")
    p.add_argument("--diagram", required=True, help=".pd file or fixture name")
    _add_switch(p)
    p.add_argument("--force", action="store_true", help="allow a non-biquandle switch")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("homcount", parents=[common], help="count homomorphisms of a presentation into a finite model")
    p.add_argument("--presentation", help="presentation text file")
    p.add_argument("--qtilde", action="store_true", help="use the Q~ presentation of the braid")
    p.add_argument("--diagram")
    p.add_argument("--def", dest="define", help="switch definition for --word/--diagram")
    _add_word(p)
    p.add_argument("--target", required=True)
    p.add_argument("--constraint", help="model whose trivial subset bounds component-1 generators")
    p.add_argument("--manturov", action="store_true", help="identify all y generators first")
    p.add_argument("--simplify", action="store_true")
    p.set_defaults(func=cmd_homcount)

    p = sub.add_parser("fixedpoints", parents=[common], help="count tuples fixed by a braid")
    _add_word(p)
    _add_switch(p)
    p.add_argument("--constraint")
    p.set_defaults(func=cmd_fixedpoints)

    p = sub.add_parser("qtilde", parents=[common], help="the Q~ presentation of a braid closure")
    _add_word(p)
    p.add_argument("--print-presentation", action="store_true")
    p.add_argument("--manturov", action="store_true")
    p.add_argument("--simplify", action="store_true")
    p.set_defaults(func=cmd_qtilde)

    p = sub.add_parser("presentation", parents=[common], help="presentation from a diagram or braid")
    p.add_argument("--diagram")
    p.add_argument("--def", dest="define")
    _add_word(p)
    p.add_argument("--manturov", action="store_true")
    p.add_argument("--simplify", action="store_true")
    p.set_defaults(func=cmd_presentation)

    p = sub.add_parser("simplify", parents=[common], help="Tietze-simplify a presentation file")
    p.add_argument("--presentation", required=True)
    p.add_argument("--manturov", action="store_true")
    p.set_defaults(func=cmd_simplify)

    p = sub.add_parser("sawollek", parents=[common], help="det(M(beta) - I) for the Alexander switch")
    _add_word(p)
    p.set_defaults(func=cmd_sawollek)

    p = sub.add_parser("table", parents=[common], help="one invariant across fixture links")
    p.add_argument("--invariant", choices=_TABLE_INVARIANTS, default="qtilde-homcount")
    p.add_argument("--links", help="comma-separated fixture names (default: all)")
    p.add_argument("--target", default="conjS3")
    p.add_argument("--constraint")
    p.add_argument("--switch", default="quandle:R3")
    p.add_argument("--model")
    p.add_argument("--params")
    p.add_argument("--v")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_table)
    return ap


def _origin(exc: BaseException) -> str:
    """Name of the innermost package module the error was raised from."""
    name = "cli"
    tb = exc.__traceback__
    while tb is not None:
        mod = tb.tb_frame.f_globals.get("__name__", "")
        if mod.startswith("ybknot."):
            name = mod.split(".")[1]
        tb = tb.tb_next
    return name


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (YBKnotError, ValueError, KeyError) as exc:
        msg = exc.args[0] if exc.args else type(exc).__name__
        print(f"ybknot: {_origin(exc)}: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
