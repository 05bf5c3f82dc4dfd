"""Command-line front-end.

Subcommands: ``tree``, ``traces``, ``normalize``, ``classify``, ``decide``,
``translate``, ``invert``, ``check``, ``memorize``.

Exit codes: 0 success (``decide``: EQUAL), 1 ``decide``: NOT EQUAL or a
``check`` counterexample, 2 parse or usage errors, 3 atom-occurrence guard
exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import decompose, equiv, evaltree, normalize, terms
from .evaltree import ce, fe, format_tree, memorize, parse_tree, se, sorted_traces, to_dot
from .terms import ParseError, parse, print_term

_EVALUATORS = {"ffel": fe, "fscl": se, "mixed": ce}


def _add_common(sub: argparse.ArgumentParser, nterms: int, logics: tuple[str, ...],
                logic_required: bool) -> None:
    if nterms:
        sub.add_argument("terms", nargs="*", metavar="TERM",
                         help="input term(s) in concrete syntax")
        sub.add_argument("--stdin", action="store_true",
                         help="read the input from standard input (one per line)")
    if logics:
        sub.add_argument("--logic", choices=logics, required=logic_required,
                         default=None if logic_required else "mixed")
    sub.add_argument("--max-atoms", type=int, default=equiv.DEFAULT_MAX_ATOMS,
                     metavar="N", help="atom-occurrence guard for tree building")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leftseq",
        description="Evaluation trees, normal forms, and equivalence for "
                    "left-sequential propositional terms.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tree", help="print the evaluation tree of a term")
    _add_common(p, 1, ("ffel", "fscl", "mixed"), logic_required=False)
    p.add_argument("--dot", action="store_true", help="emit GraphViz instead of the text format")

    p = sub.add_parser("traces", help="print the sorted trace set of a term")
    _add_common(p, 1, ("ffel", "fscl", "mixed"), logic_required=False)

    p = sub.add_parser("normalize", help="print the normal form of a term")
    _add_common(p, 1, ("ffel", "fscl"), logic_required=True)

    p = sub.add_parser("classify", help="print the normal-form category of a term")
    _add_common(p, 1, ("ffel", "fscl"), logic_required=True)

    p = sub.add_parser("decide", help="decide equality of two terms")
    _add_common(p, 2, ("ffel", "fscl", "mixed"), logic_required=True)

    p = sub.add_parser("translate", help="translate full connectives into short-circuit ones")
    _add_common(p, 1, (), logic_required=False)

    p = sub.add_parser("invert", help="recover the normal form from an evaluation tree")
    p.add_argument("trees", nargs="*", metavar="TREE", help="tree in text format")
    p.add_argument("--stdin", action="store_true", help="read the tree from standard input")
    p.add_argument("--logic", choices=("ffel", "fscl"), required=True)

    p = sub.add_parser("check", help="run the randomized soundness suite over a catalog")
    p.add_argument("--catalog", default="all", metavar="NAME",
                   help="catalog name (default: all catalogs)")
    p.add_argument("--trials", type=int, default=100, metavar="N")
    p.add_argument("--seed", type=int, default=0, metavar="S")
    p.add_argument("--max-atoms", type=int, default=6, metavar="N",
                   help="atom budget per substituted variable")
    p.add_argument("--export", action="store_true",
                   help="print the catalog as a text table instead of checking it")

    p = sub.add_parser("memorize", help="apply the memorizing transform to a term's tree")
    _add_common(p, 1, ("ffel", "fscl", "mixed"), logic_required=False)

    return parser


def _read_inputs(ns: argparse.Namespace, count: int, what: str) -> list[str]:
    given = getattr(ns, "terms", None) or getattr(ns, "trees", None) or []
    if ns.stdin:
        if given:
            raise ParseError(f"both positional {what}s and --stdin given", 0)
        given = [line for line in sys.stdin.read().splitlines() if line.strip()]
    if len(given) != count:
        raise ParseError(f"expected {count} {what}(s), got {len(given)}", 0)
    return given


def _term_input(ns: argparse.Namespace, count: int = 1) -> list:
    sources = _read_inputs(ns, count, "term")
    out = []
    for source in sources:
        t = parse(source)
        n = terms.atom_occurrences(t)
        if n > ns.max_atoms:
            raise equiv.GuardExceeded(n, ns.max_atoms)
        out.append(t)
    return out


def _cmd_tree(ns: argparse.Namespace) -> int:
    (t,) = _term_input(ns)
    x = _EVALUATORS[ns.logic](t)
    print(to_dot(x) if ns.dot else format_tree(x))
    return 0


def _cmd_traces(ns: argparse.Namespace) -> int:
    (t,) = _term_input(ns)
    for trace in sorted_traces(_EVALUATORS[ns.logic](t)):
        print(trace)
    return 0


def _cmd_normalize(ns: argparse.Namespace) -> int:
    (t,) = _term_input(ns)
    nf = normalize.fel_normalize(t) if ns.logic == "ffel" else normalize.scl_normalize(t)
    print(print_term(nf))
    return 0


def _cmd_classify(ns: argparse.Namespace) -> int:
    (t,) = _term_input(ns)
    category = normalize.classify_fnf(t) if ns.logic == "ffel" else normalize.classify_snf(t)
    print(category)
    return 0


def _cmd_decide(ns: argparse.Namespace) -> int:
    p, q = _term_input(ns, 2)
    decide = {"ffel": equiv.equal_ffel, "fscl": equiv.equal_fscl,
              "mixed": equiv.equal_mixed}[ns.logic]
    result = decide(p, q, max_atoms=ns.max_atoms)
    if result.equal:
        print("EQUAL")
        return 0
    print("NOT EQUAL")
    print(f"witness: {result.witness}")
    return 1


def _cmd_translate(ns: argparse.Namespace) -> int:
    (t,) = _term_input(ns)
    print(print_term(equiv.translate_h(t)))
    return 0


def _cmd_invert(ns: argparse.Namespace) -> int:
    (source,) = _read_inputs(ns, 1, "tree")
    x = parse_tree(source)
    term = decompose.fel_g(x) if ns.logic == "ffel" else decompose.scl_g(x)
    print(print_term(term))
    return 0


def _cmd_check(ns: argparse.Namespace) -> int:
    if ns.catalog == "all":
        names = list(equiv.CATALOGS)
    elif ns.catalog in equiv.CATALOGS:
        names = [ns.catalog]
    else:
        known = ", ".join(equiv.CATALOGS)
        print(f"unknown catalog {ns.catalog!r} (known: {known})", file=sys.stderr)
        return 2
    if ns.export:
        print(equiv.catalog_table(names))
        return 0
    failures = 0
    for name in names:
        for schema in equiv.CATALOGS[name].schemas:
            report = equiv.check_schema(schema, ns.trials, ns.max_atoms, ns.seed)
            if report.passed:
                print(f"{name}/{schema.name}: ok ({report.trials} trials)")
            else:
                failures += 1
                cx = report.counterexample
                bindings = ", ".join(f"{v} := {print_term(t)}"
                                     for v, t in sorted(cx.substitution.items()))
                print(f"{name}/{schema.name}: FAIL at trial {report.trials} "
                      f"with {bindings}; witness {cx.witness}")
    return 1 if failures else 0


def _cmd_memorize(ns: argparse.Namespace) -> int:
    (t,) = _term_input(ns)
    print(format_tree(memorize(_EVALUATORS[ns.logic](t))))
    return 0


_COMMANDS = {
    "tree": _cmd_tree,
    "traces": _cmd_traces,
    "normalize": _cmd_normalize,
    "classify": _cmd_classify,
    "decide": _cmd_decide,
    "translate": _cmd_translate,
    "invert": _cmd_invert,
    "check": _cmd_check,
    "memorize": _cmd_memorize,
}


def run(argv: list[str]) -> int:
    """Parse and execute one command line; returns the exit status."""
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles --help and usage errors
        return int(exc.code or 0)
    try:
        return _COMMANDS[ns.command](ns)
    except equiv.GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, decompose.InversionError, normalize.NormalFormError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
