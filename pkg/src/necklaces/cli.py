"""Command-line interface.

Subcommands: dims, bracket, table1, table2, center, verify, classify, ngl,
decompose.  Global flags: --format {text,json,csv}, --seed N, --max-degree N,
--output PATH.  All output is deterministic for fixed flags and seed; exact
rationals are serialized as strings "p/q".
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .brackets import (
    BracketRule,
    center_check,
    center_element,
    check_grading,
    kontsevich_bracket,
    necklace_bracket,
    verify_double_jacobi,
    verify_loday_properties,
)
from .counting import enumerate_necklaces, necklace_count_by_enumeration, necklace_dimension
from .elements import (
    Necklace,
    NecklaceElement,
    format_element,
    parse_element,
    project_to_necklace,
)
from .linear_rules import (
    StructureConstants,
    check_degree1_commutator,
    gl_constants,
    linear_rule,
    matrix_unit_names,
    ngl,
)
from .poisson import casimir_check, change_coordinates
from .report import CheckReport
from .sampling import random_word, rng
from .sl2 import decompose_bruteforce, decompose_by_formula, table1
from .traces import classify_point, table2, verify_cayley_hamilton
from .words import format_word, letters, unstarred


def _necklace_element_json(e: NecklaceElement, names=None):
    return {
        "terms": [[str(c), format_word(n.representative, names)] for n, c in e],
        "text": format_element(e, names),
    }


def _emit(args, text_lines, payload, csv_lines=None):
    if args.format == "json":
        body = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        if csv_lines is None:
            raise SystemExit("csv output is not defined for this command")
        body = "\n".join(csv_lines) + "\n"
    else:
        body = "\n".join(text_lines) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _report_payload(report: CheckReport):
    return {
        "title": report.title,
        "ok": report.ok,
        "checks": [
            {"label": e.label, "ok": e.ok, **({"detail": e.detail} if e.detail else {})}
            for e in report.entries
        ],
    }


# --- subcommands ------------------------------------------------------------


def cmd_dims(args) -> int:
    d, kmax = args.d, args.kmax
    rows = []
    for k in range(0, kmax + 1):
        formula = necklace_dimension(d, k)
        enumerated = necklace_count_by_enumeration(d, k)
        rows.append((k, formula, enumerated, formula == enumerated))
    ok = all(r[3] for r in rows)
    text = [f"necklace dimensions, d={d}"] + [
        f"  k={k}: formula={f} enumerated={e} {'ok' if good else 'MISMATCH'}"
        for k, f, e, good in rows
    ]
    csv = ["k,formula,enumerated,ok"] + [
        f"{k},{f},{e},{'ok' if good else 'MISMATCH'}" for k, f, e, good in rows
    ]
    payload = {
        "d": d,
        "rows": [
            {"k": k, "formula": f, "enumerated": e, "ok": good}
            for k, f, e, good in rows
        ],
        "ok": ok,
    }
    _emit(args, text, payload, csv)
    return 0 if ok else 1


def _load_rule(spec: str):
    if spec == "canonical":
        return None  # resolved later once d is known
    if spec.startswith("ngl:"):
        return ngl(int(spec.split(":", 1)[1]))
    with open(spec) as fh:
        return linear_rule(StructureConstants.from_json(fh.read()))


def cmd_bracket(args) -> int:
    if args.rule == "canonical":
        e1 = project_to_necklace(parse_element(args.w1))
        e2 = project_to_necklace(parse_element(args.w2))
        d = args.d or max(
            (n.representative.max_index() for e in (e1, e2) for n in e.terms),
            default=1,
        )
        rule = BracketRule.canonical(d)
        result = necklace_bracket(rule, e1, e2)
        oracle = NecklaceElement()
        for n1, c1 in e1.terms.items():
            for n2, c2 in e2.terms.items():
                oracle = oracle + (c1 * c2) * kontsevich_bracket(n1, n2, d)
        agree = oracle == result
        names = None
    else:
        rule = _load_rule(args.rule)
        names = rule.display_names()
        alphabet = {v: k for k, v in names.items()} if names else None
        e1 = project_to_necklace(parse_element(args.w1, alphabet))
        e2 = project_to_necklace(parse_element(args.w2, alphabet))
        result = necklace_bracket(rule, e1, e2)
        oracle, agree = None, None

    text = [f"bracket: {format_element(result, names)}"]
    payload = {"bracket": _necklace_element_json(result, names)}
    if oracle is not None:
        text.append(f"splice oracle: {format_element(oracle, names)}")
        text.append("agree" if agree else "DISAGREE")
        payload["oracle"] = _necklace_element_json(oracle, names)
        payload["agree"] = agree
    _emit(args, text, payload)
    return 0 if agree in (True, None) else 1


def cmd_table1(args) -> int:
    nmax = args.nmax or args.max_degree or 8
    rows = table1(nmax)
    agree = {}
    for row in rows:
        if row.degree <= 14:
            agree[row.degree] = row == decompose_bruteforce(row.degree)
    ok = all(agree.values())
    weights = list(range(nmax, -1, -1))
    header = "," + ",".join(str(w) for w in weights)
    csv = [header]
    text = [f"multiplicities of highest weight modules, degrees 1..{nmax}"]
    text.append("degree | " + " ".join(f"{w:>3}" for w in weights))
    for row in rows:
        cells = [row.multiplicity(w) for w in weights]
        csv.append(f"{row.degree}," + ",".join(str(c) for c in cells))
        flag = "" if agree.get(row.degree, True) else "  ORACLE MISMATCH"
        text.append(
            f"{row.degree:>6} | " + " ".join(f"{c:>3}" for c in cells) + flag
        )
    payload = {
        "max_degree": nmax,
        "rows": [
            {
                "degree": row.degree,
                "multiplicities": {str(w): m for w, m in sorted(row.multiplicities.items())},
                "oracle_agrees": agree.get(row.degree),
            }
            for row in rows
        ],
        "ok": ok,
    }
    _emit(args, text, payload, csv)
    return 0 if ok else 1


AUDITED_CELL_NOTE = (
    "cell (tr((x*)^2), tr(x)) is pinned to -2*tr(x*) by antisymmetry "
    "with the (tr(x), tr((x*)^2)) entry 2*tr(x*)"
)


def cmd_table2(args) -> int:
    t = table2()
    strings = t.strings()
    ok = t.is_antisymmetric()
    width = max(len(s) for row in strings for s in row)
    text = ["poisson brackets of the trace generators (n = 2)"]
    text.append(
        " " * 14 + "  ".join(f"{g:>{width}}" for g in t.generators)
    )
    for g, row in zip(t.generators, strings):
        text.append(f"{g:>13} " + "  ".join(f"{s:>{width}}" for s in row))
    text.append(f"antisymmetric: {ok}")
    text.append(f"audit: {AUDITED_CELL_NOTE}")
    csv = ["," + ",".join(t.generators)]
    for g, row in zip(t.generators, strings):
        csv.append(g + "," + ",".join(row))
    payload = {
        "generators": list(t.generators),
        "entries": strings,
        "antisymmetric": ok,
        "audited_cell": {
            "row": "tr((x*)^2)",
            "col": "tr(x)",
            "value": strings[3][0],
            "note": AUDITED_CELL_NOTE,
        },
    }
    _emit(args, text, payload, csv)
    return 0 if ok else 1


def cmd_center(args) -> int:
    d, n, bound = args.d, args.n, args.bound
    report = center_check(d, n, bound)
    element = center_element(d, n)
    text = [
        f"central element c_{n} for d={d}: {format_element(element)}",
        f"brackets checked against necklaces of degree <= {bound}: "
        f"{report.samples_checked}, violations: {len(report.violations)}",
    ]
    payload = {
        "d": d,
        "n": n,
        "degree_bound": bound,
        "element": _necklace_element_json(element),
        "is_zero": element.is_zero,
        "checked": report.samples_checked,
        "violations": len(report.violations),
    }
    if d == 1:
        from .traces import center_witness

        lam = Fraction(args.witness_lambda)
        value = center_witness(n, lam) if n >= 1 else Fraction(0)
        text.append(f"witness value at lambda={lam}: {value}")
        payload["witness"] = {"lambda": str(lam), "value": str(value)}
    ok = report.ok
    text.append("pass" if ok else "FAIL")
    payload["ok"] = ok
    _emit(args, text, payload)
    return 0 if ok else 1


def _suite_jacobi(seed: int, max_degree: int) -> CheckReport:
    report = CheckReport("double Jacobi identity")
    r = rng(seed)
    for d in (1, 2):
        rule = BracketRule.canonical(d)
        alpha = letters(d)
        bad = 0
        budget = max(1, max_degree // 3)
        for _ in range(120):
            triple = [random_word(r, alpha, 0, budget) for _ in range(3)]
            if not verify_double_jacobi(rule, *triple).is_zero:
                bad += 1
        report.add(f"canonical rule, d={d}, 120 sampled triples", bad == 0)
    rule = ngl(2)
    alpha = unstarred(4)
    bad = 0
    for _ in range(120):
        triple = [random_word(r, alpha, 0, 2) for _ in range(3)]
        if not verify_double_jacobi(rule, *triple).is_zero:
            bad += 1
    report.add("matrix-algebra linear rule, 120 sampled triples", bad == 0)
    return report


def _suite_loday(seed: int, max_degree: int) -> CheckReport:
    report = CheckReport("Loday identity and commutator triviality")
    r = rng(seed)
    rule = BracketRule.canonical(1)
    alpha = letters(1)
    bad = 0
    for _ in range(100):
        triple = [random_word(r, alpha, 0, max(1, max_degree // 3)) for _ in range(3)]
        got = verify_loday_properties(rule, *triple)
        if got != (True, True):
            bad += 1
    report.add("canonical rule d=1, 100 sampled triples", bad == 0)
    return report


def _suite_grading(seed: int, max_degree: int) -> CheckReport:
    report = CheckReport("bracket grading")
    r = rng(seed)
    rule = BracketRule.canonical(1)
    necks = [n for k in range(max_degree + 1) for n in enumerate_necklaces(1, k)]
    pairs = [(r.choice(necks), r.choice(necks)) for _ in range(150)]
    got = check_grading(rule, pairs)
    report.add("canonical rule has degree -2", got.ok)
    rule = ngl(2)
    alpha = unstarred(4)
    pairs = [
        (
            Necklace.of(random_word(r, alpha, 1, 3)),
            Necklace.of(random_word(r, alpha, 1, 3)),
        )
        for _ in range(150)
    ]
    got = check_grading(rule, pairs)
    report.add("linear rule has degree -1", got.ok)
    return report


SUITES = {
    "jacobi": _suite_jacobi,
    "loday": _suite_loday,
    "grading": _suite_grading,
    "casimir": lambda seed, max_degree: casimir_check(),
    "cayley-hamilton": lambda seed, max_degree: verify_cayley_hamilton(2),
    "decoupling": lambda seed, max_degree: change_coordinates(),
}


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = [SUITES[name](args.seed, args.max_degree or 6) for name in names]
    ok = all(r.ok for r in reports)
    text = []
    for r in reports:
        text.extend(str(r).splitlines())
    payload = {"suites": [_report_payload(r) for r in reports], "ok": ok}
    _emit(args, text, payload)
    return 0 if ok else 1


def cmd_classify(args) -> int:
    coords = [Fraction(v) for v in (args.X, args.Y, args.E, args.F, args.H)]
    got = classify_point(coords)
    text = [str(got)]
    payload = {
        "leaf": got.leaf,
        "luna_type": got.luna_type,
        "casimir": str(got.casimir),
        "primed": [str(v) for v in got.primed],
    }
    _emit(args, text, payload)
    return 0


def cmd_ngl(args) -> int:
    n = args.n
    rule = ngl(n)
    names = matrix_unit_names(n)
    sc = gl_constants(n)
    report = check_degree1_commutator(sc, rule)
    text = [f"degree-1 brackets of the {n}x{n} matrix-algebra rule"]
    pairs = []
    units = sorted(names, key=lambda a: a.code)
    for a in units:
        for b in units:
            from .words import Word

            got = necklace_bracket(rule, Word([a]), Word([b]))
            pairs.append(
                {
                    "a": names[a],
                    "b": names[b],
                    "bracket": format_element(got, names),
                }
            )
            text.append(f"  {{{names[a]}, {names[b]}}} = {format_element(got, names)}")
    text.append(f"matches matrix commutators: {report.ok}")
    payload = {"n": n, "pairs": pairs, "matches_commutators": report.ok}
    _emit(args, text, payload)
    return 0 if report.ok else 1


def cmd_decompose(args) -> int:
    n = args.n
    formula = decompose_by_formula(n)
    oracle = decompose_bruteforce(n)
    agree = formula == oracle
    text = [f"degree {n} decomposes into highest weight modules:"]
    for w in sorted(formula.multiplicities, reverse=True):
        text.append(f"  weight {w}: multiplicity {formula.multiplicities[w]}")
    text.append(f"dimension: {formula.dimension()}")
    text.append(f"formula agrees with weight-space oracle: {agree}")
    payload = {
        "degree": n,
        "multiplicities": {str(w): m for w, m in sorted(formula.multiplicities.items())},
        "dimension": formula.dimension(),
        "oracle_agrees": agree,
    }
    _emit(args, text, payload)
    return 0 if agree else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    common.add_argument("--max-degree", type=int, default=None)
    common.add_argument("--output", default=None, help="write output to this path")

    parser = argparse.ArgumentParser(
        prog="necklaces",
        description="Exact computations in necklace Lie algebras of free algebras.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("dims", help="necklace dimensions: formula vs enumeration")
    p.add_argument("d", type=int)
    p.add_argument("kmax", type=int)
    p.set_defaults(func=cmd_dims)

    p = add_parser("bracket", help="necklace bracket of two elements")
    p.add_argument("w1")
    p.add_argument("w2")
    p.add_argument("--rule", default="canonical", help="canonical, ngl:N, or a JSON file")
    p.add_argument("--d", type=int, default=None, help="number of symbol pairs")
    p.set_defaults(func=cmd_bracket)

    p = add_parser("table1", help="highest weight multiplicities by degree")
    p.add_argument("nmax", type=int, nargs="?", default=None)
    p.set_defaults(func=cmd_table1)

    p = add_parser("table2", help="bracket table of the five trace generators")
    p.set_defaults(func=cmd_table2)

    p = add_parser("center", help="centrality check and witness values")
    p.add_argument("d", type=int)
    p.add_argument("n", type=int)
    p.add_argument("bound", type=int, nargs="?", default=6)
    p.add_argument("--witness-lambda", default="1")
    p.set_defaults(func=cmd_center)

    p = add_parser("verify", help="run a named invariant suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.set_defaults(func=cmd_verify)

    p = add_parser("classify", help="classify a point of the 5-dim quotient")
    for name in ("X", "Y", "E", "F", "H"):
        p.add_argument(name)
    p.set_defaults(func=cmd_classify)

    p = add_parser("ngl", help="matrix-algebra rule: degree-1 bracket table")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_ngl)

    p = add_parser("decompose", help="weight decomposition of one degree")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_decompose)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
