"""``stabcat`` command line.

Exit codes: 0 success or true, 1 input error, 2 verification failure,
3 negative verdict.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import docfmt
from .category import Mor, compose
from .docfmt import Document, TopSpace
from .dot import object_dot, sequence_dot
from .endo import EndoObj, EndoTheory
from .errors import ParseError, StabcatError
from .preord import PreordObj, PreordTheory
from .pretorsion import canonical_sequence, verify_canonical, verify_z_cokernel, verify_z_kernel
from .stable import PartialMor, StableCategory
from .suites import SUITES, SuiteConfig, run_suite, sweep_objects
from .theory import probe_bound
from .universality import (
    G_KINDS, FiniteTTCategory, check_induced, induced_H, make_functor, tabulate_stab, verify_uniqueness,
)

OK, INPUT_ERROR, VERIFY_FAILED, NEGATIVE = 0, 1, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(INPUT_ERROR)


def theory_for(X):
    if isinstance(X, PreordObj):
        return PreordTheory()
    if isinstance(X, EndoObj):
        return EndoTheory()
    raise InputError(f"no theory for {type(X).__name__}")


def _load(path: str, *kinds: str) -> Document:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        doc = docfmt.parse(text)
    except ParseError as exc:
        raise InputError(f"{path}:{exc.line}:{exc.column}: {exc.message}") from None
    if kinds and doc.kind not in kinds:
        raise InputError(f"{path}: expected a {' or '.join(kinds)} document, got {doc.kind}")
    return doc


def _object(path: str):
    doc = _load(path, "preord", "endo", "top")
    return doc.payload.preorder() if isinstance(doc.payload, TopSpace) else doc.payload


def _max_n(args) -> int:
    return args.max_n if args.max_n is not None else probe_bound()


# -- verbs -----------------------------------------------------------------------

def cmd_canon(args) -> int:
    X = _object(args.file)
    theory = theory_for(X)
    seq = canonical_sequence(X, theory)
    report = verify_canonical(seq, theory, theory.objects(_max_n(args)))
    if args.format == "dot":
        print(sequence_dot(seq), end="")
    else:
        print(f"X    = {X!r}")
        print(f"T(X) = {seq.torsion!r}")
        print(f"eps  = {list(seq.counit.table)}")
        print(f"eta  = {list(seq.unit.table)}")
        print(f"F(X) = {seq.free!r}")
        print(report.summary())
    return OK if report.ok else VERIFY_FAILED


def _partials(args) -> tuple[PartialMor, PartialMor]:
    p1 = _load(args.first, "partial").payload
    p2 = _load(args.second, "partial").payload
    if p1.src != p2.src or p1.dst != p2.dst:
        raise InputError("the two partial morphisms are not parallel")
    return p1, p2


def cmd_stable_eq(args) -> int:
    p1, p2 = _partials(args)
    S = StableCategory(theory_for(p1.src))
    same, diagram = S.eq(p1, p2)
    print("true" if same else "false")
    if diagram is not None:
        print(f"C   = {list(diagram.common.members)}")
        print(f"C1c = {list(diagram.comp1)}")
        print(f"C2c = {list(diagram.comp2)}")
    return OK if same else NEGATIVE


def cmd_compose(args) -> int:
    """``compose G F`` prints ``G . F``."""
    g_doc = _load(args.second, "morphism", "partial")
    f_doc = _load(args.first, "morphism", "partial")
    g, f = g_doc.payload, f_doc.payload
    try:
        if g_doc.kind == f_doc.kind == "morphism":
            out = compose(g, f)
        else:
            g = g if isinstance(g, PartialMor) else PartialMor.total(g)
            f = f if isinstance(f, PartialMor) else PartialMor.total(f)
            S = StableCategory(theory_for(f.src))
            out = S.compose(S.reduce(g), S.reduce(f)).partial
    except StabcatError as exc:
        raise InputError(str(exc)) from None
    print(docfmt.render(docfmt.as_document(out)), end="")
    return OK


def _kernel_like(args, which: str) -> int:
    doc = _load(args.file, "morphism", "partial")
    m = doc.payload
    src = m.dom if isinstance(m, Mor) else m.src
    theory = theory_for(src)
    probes = theory.objects(_max_n(args))
    if isinstance(m, Mor):
        if which == "kernel":
            out = theory.z_kernel(m)
            report = verify_z_kernel(out, m, theory, probes)
        else:
            out = theory.z_cokernel(m)
            report = verify_z_cokernel(m, out, theory, probes)
        printed = docfmt.as_document(out)
    else:
        S = StableCategory(theory)
        s = S.reduce(m)
        if which == "kernel":
            out = S.kernel_candidate(s)
            report = S.verify_kernel(out, s, probes)
        else:
            out = S.sigma_cokernel(s.partial.map) if s.support else S.identity(s.dst)
            report = S.verify_cokernel(s, out, probes)
        printed = docfmt.as_document(out.partial)
    print(docfmt.render(printed), end="")
    print("# " + report.summary().replace("\n", "\n# "))
    return OK if report.ok else VERIFY_FAILED


def cmd_kernel(args) -> int:
    return _kernel_like(args, "kernel")


def cmd_cokernel(args) -> int:
    return _kernel_like(args, "cokernel")


def cmd_verify(args) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    if args.suite != "all" and args.suite not in SUITES:
        raise InputError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}, all")
    cfg = SuiteConfig(max_n=args.max_n if args.max_n is not None else 3, seed=args.seed, corrupt=args.corrupt)
    ok = True
    for name in names:
        report = run_suite(name, cfg)
        print(report.render(), flush=True)
        ok &= report.ok
    return OK if ok else VERIFY_FAILED


def cmd_export_dot(args) -> int:
    X = _object(args.file)
    what = args.what or ("graph" if isinstance(X, EndoObj) else "hasse")
    if what == "sequence":
        print(sequence_dot(canonical_sequence(X, theory_for(X))), end="")
    elif what == "graph" and not isinstance(X, EndoObj):
        raise InputError("--what graph needs an endo document; use hasse for preorders")
    elif what == "hasse" and not isinstance(X, PreordObj):
        raise InputError("--what hasse needs a preord or top document")
    else:
        print(object_dot(X), end="")
    return OK


def cmd_universal(args) -> int:
    if args.target:
        target = _load(args.target, "tt-category").payload
        report = target.check()
        print(report.summary())
        return OK if report.ok else VERIFY_FAILED
    theory = PreordTheory() if args.category == "preord" else EndoTheory()
    S = StableCategory(theory)
    objs = theory.objects(args.max_n if args.max_n is not None else 3)
    stab = tabulate_stab(S, objs)
    if args.export:
        docfmt.dump(docfmt.as_document(stab.bare()), args.export)
    ok = True
    for kind in args.functor or G_KINDS:
        target = FiniteTTCategory.zero_category() if kind == "zero" else stab
        G = make_functor(kind, S, objs, target)
        try:
            H = induced_H(G, S, objs, target, stab)
        except StabcatError as exc:
            print(f"[FAIL] G={kind}: {exc}")
            ok = False
            continue
        report = check_induced(H, G, S, objs, target, stab)
        report.name = f"induced H, G={kind}"
        print(report.summary())
        ok &= report.ok
        sub_objs = sweep_objects(theory)
        if not set(sub_objs) <= set(objs):
            print(f"[SKIP] uniqueness, G={kind}: the sweep fragment needs --max-n 3 or more")
            continue
        sub = tabulate_stab(S, sub_objs)
        u = verify_uniqueness(make_functor(kind, S, sub_objs, target), H, S, sub_objs, sub, stab, target)
        print(u.summary())
        ok &= u.ok
    return OK if ok else VERIFY_FAILED


# -- wiring ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="stabcat", description="Pretorsion theories and stable categories on finite instances.")
    p.add_argument("--max-n", type=int, default=None, help="carrier bound for probes and enumeration")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    p.add_argument("--format", choices=("text", "dot"), default="text")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(fn=fn)
        for flag, kw in (("--max-n", dict(type=int)), ("--seed", dict(type=int)),
                         ("--format", dict(choices=("text", "dot")))):
            sp.add_argument(flag, default=argparse.SUPPRESS, **kw)
        return sp

    verb("canon", cmd_canon, "canonical sequence T(X) -> X -> F(X), with its oracle verdict").add_argument("file")
    sp = verb("stable-eq", cmd_stable_eq, "are two partial morphisms congruent?")
    sp.add_argument("first")
    sp.add_argument("second")
    sp = verb("compose", cmd_compose, "compose SECOND FIRST prints SECOND . FIRST")
    sp.add_argument("second")
    sp.add_argument("first")
    verb("kernel", cmd_kernel, "Z-kernel of a morphism, or stable kernel of a partial morphism").add_argument("file")
    verb("cokernel", cmd_cokernel, "Z-cokernel, or stable cokernel").add_argument("file")
    sp = verb("verify", cmd_verify, "run a verification suite")
    sp.add_argument("suite", help=f"one of {', '.join(SUITES)}, all")
    sp.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)
    sp = verb("export-dot", cmd_export_dot, "Graphviz text for an object or its canonical sequence")
    sp.add_argument("file")
    sp.add_argument("--what", choices=("graph", "hasse", "sequence"))
    sp = verb("universal", cmd_universal, "factor tt-functors through Stab, or check a tt-category file")
    sp.add_argument("--category", choices=("preord", "endo"), default="endo")
    sp.add_argument("--functor", choices=G_KINDS, action="append")
    sp.add_argument("--target", help="tt-category document to check instead")
    sp.add_argument("--export", help="write the tabulated Stab fragment here")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"stabcat: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except StabcatError as exc:
        print(f"stabcat: {type(exc).__name__}: {exc}", file=sys.stderr)
        return VERIFY_FAILED
