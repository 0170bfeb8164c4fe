"""Command-line front end.

Verbs: check, exists, contactize, suite, catalog.  Exit status: 0 when all
asserted checks pass, 1 when a check fails, 2 on input errors.  Reports are
deterministic for identical inputs; --json selects the machine-readable
format frozen in docs/report-schema.md.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog, construct, contact, obstruct
from .fileio import ParseError, format_algebra, parse_algebra_file
from .forms import parse_one_form
from .liealg import RankInstability
from .report import Report
from .scalar import parse_scalar

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


class InputError(Exception):
    pass


def _parse_params(spec):
    if not spec:
        return None
    out = {}
    for chunk in spec.split(","):
        name, _, value = chunk.partition("=")
        if not value:
            raise InputError(f"bad parameter assignment '{chunk}'")
        out[name.strip()] = Fraction(value.strip())
    return out


def _load(path, params):
    try:
        parsed = parse_algebra_file(path)
    except ParseError as exc:
        raise InputError(str(exc)) from None
    except OSError as exc:
        raise InputError(str(exc)) from None
    alg = parsed.algebra
    if params:
        try:
            alg = alg.specialize(params)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        parsed.algebra = alg
    return parsed


def _structure_summary(rep, alg):
    rep.extend(alg.jacobi_check())
    try:
        rep.add("center", "info", dim=alg.center().dim)
        series = alg.derived_series()
        rep.add("derived-series", "info",
                dims=">".join(str(s.dim) for s in series),
                solvable=series[-1].dim == 0)
        rep.add("nilpotent", "info", value=alg.is_nilpotent())
        rep.add("unimodular", "info", value=alg.is_unimodular())
    except RankInstability as exc:
        rep.add("structure", "unstable", pivot=exc.pivot,
                detail="substitute --params to pin the rank")


def cmd_check(args):
    rep = Report("check " + args.file)
    parsed = _load(args.file, _parse_params(args.params))
    alg = parsed.algebra
    _structure_summary(rep, alg)
    for expr in args.form or ():
        try:
            eta = parse_one_form(expr, alg)
        except ValueError as exc:
            raise InputError(f"bad form {expr!r}: {exc}") from None
        if alg.dim % 2 == 0:
            raise InputError("contact check needs an odd-dimensional algebra")
        v = contact.is_contact_form(alg, eta)
        payload = {"form": expr, "top": v.top}
        if v.reeb is not None:
            payload["reeb"] = alg.format_vector(v.reeb)
        elif v.reeb_note:
            payload["note"] = v.reeb_note
        rep.add("contact", "pass" if v.is_contact else "fail",
                rule="volume-condition", **payload)
        if v.is_contact and v.reeb is not None:
            rep.extend(contact.kernel_radical_check(alg, eta))
    return rep


def cmd_exists(args):
    rep = Report(f"exists[{args.mode}] " + args.file)
    parsed = _load(args.file, _parse_params(args.params))
    alg = parsed.algebra
    odd = alg.dim % 2 == 1
    if args.mode == "contact" and not odd:
        raise InputError("contact existence needs odd dimension")
    if args.mode == "frobenius" and odd:
        raise InputError("frobenius existence needs even dimension")
    decide = contact.contact_exists if args.mode == "contact" \
        else contact.frobenius_exists
    try:
        verdict = decide(alg)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    payload = {"exists": verdict.exists}
    if args.print_polynomial:
        payload["polynomial"] = verdict.polynomial
        payload["variables"] = ",".join(verdict.coefficient_names)
    if verdict.witness is not None:
        payload["witness"] = verdict.witness.format(alg)
    rep.add("existence", "pass" if verdict.exists else "fail",
            rule="generic-top-coefficient", **payload)
    return rep


def cmd_contactize(args):
    rep = Report("contactize " + args.file)
    parsed = _load(args.file, _parse_params(args.params))
    alg = parsed.algebra
    ext = parsed.extension
    if ext is None:
        raise InputError("file has no extension block")
    if ext.alpha is None:
        raise InputError("extension block must set alpha (the base covector)")
    s = ext.s
    if args.s is not None:
        s = parse_scalar(args.s, alg.params + ("s",))
    if s is None:
        raise InputError("no extension scale: set 'extend s = ...' or --s")
    cocycle = construct.check_extension_cocycle(alg, ext.psi,
                                                _covector(ext.f, alg))
    rep.extend(cocycle)
    if not cocycle.passed:
        return rep
    from .scalar import Scalar
    locus = construct.contactization_condition(
        alg, ext.alpha, ext.psi, _covector(ext.f, alg), Scalar.variable("s"))
    rep.add("admissibility-locus", "info", rule="extension-scale",
            nonzero_when=locus)
    try:
        big, verdict = construct.contactize(alg, ext.alpha, ext.psi,
                                            _covector(ext.f, alg), s)
    except construct.InadmissibleExtension as exc:
        rep.add("contactize", "fail", rule="extension-scale", detail=exc)
        return rep
    rep.add("contactize", "pass", rule="volume-condition",
            dim=big.dim, form=verdict.form.format(big), top=verdict.top)
    out = format_algebra(big)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
        rep.add("emitted", "info", path=args.out)
    else:
        rep.add("emitted", "info", algebra="\n" + out)
    return rep


def _covector(f_form, alg):
    from .scalar import ZERO
    return tuple(f_form.terms.get((i,), ZERO) for i in range(alg.dim))


def cmd_suite(args):
    from .suite import run_suite
    return run_suite()


def cmd_catalog(args):
    rep = Report("catalog " + args.action)
    if args.action == "list":
        for e in catalog.entries(args.filter or ""):
            rep.add(e.ident, "info", dim=e.dim,
                    flags=",".join(sorted(e.flags)),
                    description=e.description)
    elif args.action == "export":
        if not args.id:
            raise InputError("catalog export needs an identifier")
        try:
            entry = catalog.get(args.id)
        except KeyError as exc:
            raise InputError(str(exc)) from None
        sys.stdout.write(format_algebra(entry.algebra))
        return None
    else:
        raise InputError(f"unknown catalog action '{args.action}'")
    return rep


def build_parser():
    ap = argparse.ArgumentParser(
        prog="contactlie",
        description="exact contact / exact-symplectic computations on Lie algebras")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("check", help="structural summary and contact checks")
    p.add_argument("file")
    p.add_argument("--form", action="append",
                   help="1-form expression, e.g. 'e1* + (1-p) e3*' (repeatable)")
    p.add_argument("--params", help="parameter sample, e.g. p=1,q=2")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("exists", help="decide existence of a structure")
    p.add_argument("file")
    p.add_argument("--mode", choices=("contact", "frobenius"), default="contact")
    p.add_argument("--params", help="parameter sample, e.g. p=1,q=2")
    p.add_argument("--print-polynomial", action="store_true")
    p.set_defaults(func=cmd_exists)

    p = sub.add_parser("contactize", help="extend an exact symplectic algebra")
    p.add_argument("file")
    p.add_argument("--s", help="extension scale (overrides the file)")
    p.add_argument("--out", help="write the constructed algebra here")
    p.add_argument("--params", help="parameter sample")
    p.set_defaults(func=cmd_contactize)

    p = sub.add_parser("suite", help="run the full catalog golden suite")
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("catalog", help="list or export built-in algebras")
    p.add_argument("action", choices=("list", "export"))
    p.add_argument("id", nargs="?")
    p.add_argument("--filter", help="e.g. solvable,dim=5")
    p.set_defaults(func=cmd_catalog)

    for sp in sub.choices.values():
        sp.add_argument("--json", action="store_true",
                        help="machine-readable output")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        rep = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if rep is None:
        return EXIT_OK
    if args.json:
        print(json.dumps(rep.as_dict(), indent=2, sort_keys=False))
    else:
        print(rep.render())
    return EXIT_OK if rep.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
