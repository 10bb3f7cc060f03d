"""Command-line front end.

Exit codes: 0 when every requested computation or verification passes,
1 when a verification check fails, 2 on usage or I/O errors.  With
``--json PATH`` each subcommand also writes a versioned report
(``"schema": 1``); identical invocations (including ``--seed``) produce
byte-identical files, so artifacts can be diffed across runs.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .formulas import (
    BadParity,
    CaseMismatch,
    formula_A,
    formula_AHT,
    formula_macmahon,
    theta_table_row,
)
from .linalg import (
    DET_STRATEGIES,
    NotRankOne,
    StrategyPrecondition,
    TooLarge,
    charpoly,
    coefficient_list,
    det,
    permanent,
)
from .matrices import (
    BadRange,
    bivariate_params,
    build_huckel,
    build_pascal,
    build_reduced,
    evaluate_matrix,
)
from .oracle import audit_passes, count_plane_partitions, square_coefficient_audit
from .poly import MultiPoly, NotDivisible, xvar, yvar
from .schur import CostGuard, condensation_det, condense
from .verify import (
    verify_conjecture1,
    verify_conjecture2,
    verify_conjecture3,
    verify_props,
)

_DOMAIN_ERRORS = (
    BadRange,
    BadParity,
    CaseMismatch,
    CostGuard,
    TooLarge,
    StrategyPrecondition,
    NotRankOne,
    NotDivisible,
)


@dataclass
class RunConfig:
    """Validated invocation: one subcommand plus its knobs."""

    subcommand: str
    n: int | None = None
    k: int | None = None
    mode: str = "symbolic"
    seed: int = 0
    strategy: str = "fraction-free-elimination"
    output: str | None = None
    verbosity: int = 0
    jobs: int = 1
    options: dict = field(default_factory=dict)


# -- parser ------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="huckelpascal",
        description="Exact determinants, permanents and verification reports "
        "for triangle/trapezium adjacency matrices and Pascal matrices.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_json(p):
        p.add_argument("--json", metavar="PATH", help="write a schema-1 JSON report")

    p = sub.add_parser(
        "det",
        help="exact determinant of a triangle/trapezium or Pascal matrix",
        description="Determinant of the trapezium adjacency matrix H_{k,n} "
        "(boundary weights symbolic unless --x/--y fix them), of its "
        "conjectured size-(n+1-k) binomial reduction, or of a Pascal matrix.",
    )
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--huckel", nargs=2, type=int, metavar=("K", "N"))
    src.add_argument("--reduced", nargs=2, type=int, metavar=("K", "N"))
    src.add_argument("--pascal", nargs=2, metavar=("KIND", "N"))
    p.add_argument("--x", type=int, help="uniform value for every x weight")
    p.add_argument("--y", type=int, help="uniform value for every y weight")
    p.add_argument("--strategy", choices=DET_STRATEGIES, default="fraction-free-elimination")
    add_json(p)

    p = sub.add_parser(
        "perm",
        help="exact permanent of a triangle/trapezium matrix",
        description="Permanent of H_{k,n}; conjecturally equal to its "
        "determinant because only even permutations contribute.",
    )
    p.add_argument("--huckel", nargs=2, type=int, metavar=("K", "N"), required=True)
    p.add_argument("--x", type=int)
    p.add_argument("--y", type=int)
    add_json(p)

    p = sub.add_parser(
        "charpoly",
        help="characteristic polynomial det(zI + M) of a Pascal matrix",
        description="Characteristic polynomial of a Pascal matrix; for the "
        "symmetric kind its coefficient list matches the bivariate triangle "
        "determinant row.",
    )
    p.add_argument("--pascal", nargs=2, metavar=("KIND", "N"), required=True)
    add_json(p)

    p = sub.add_parser(
        "condense",
        help="block condensation of the triangle/trapezium determinant",
        description="Repeatedly eliminates the largest odd tridiagonal block, "
        "shrinking H_{k,n} while preserving the determinant exactly; --trace "
        "records every elimination step of the full triangle.",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--trace", action="store_true")
    add_json(p)

    p = sub.add_parser(
        "formulas",
        help="product formulas and the unit-circle determinant table",
        description="Closed-form product sequences and the table of exact "
        "determinant values at unit-circle weights, with the asymptotic "
        "comparison column.",
    )
    p.add_argument("--table", action="store_true", required=True)
    p.add_argument("--max-n", type=int, default=6)
    add_json(p)

    p = sub.add_parser(
        "oracle",
        help="brute-force enumeration cross-checks",
        description="Independent oracles: boxed plane-partition enumeration "
        "against the product formula, and perfect-square audits of "
        "determinant coefficients.",
    )
    osub = p.add_subparsers(dest="action", required=True)
    op = osub.add_parser("partitions", help="count plane partitions in an a*b*c box")
    op.add_argument("a", type=int)
    op.add_argument("b", type=int)
    op.add_argument("c", type=int)
    add_json(op)
    op = osub.add_parser(
        "audit-squares", help="check triangle determinant coefficients are squares"
    )
    op.add_argument("--n", type=int, required=True)
    add_json(op)

    p = sub.add_parser(
        "verify",
        help="run conjecture/proposition verification reports",
        description="conj1: triangle determinant equals its size-(n+1) "
        "reduction; conj2: same for trapezia; conj3: permanent equals "
        "determinant; props: structural shape checks.",
    )
    p.add_argument("conjecture", choices=("conj1", "conj2", "conj3", "props"))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--mode", choices=("symbolic", "specialized"), default="symbolic")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    add_json(p)

    p = sub.add_parser(
        "tables",
        help="golden tables: determinant coefficient rows and angle values",
        description="The bivariate triangle determinant coefficient rows and "
        "the exact unit-circle determinant table.",
    )
    p.add_argument("--max-n", type=int, default=6)
    add_json(p)

    return parser


def _to_config(ns: argparse.Namespace) -> RunConfig:
    get = lambda name, default=None: getattr(ns, name, default)
    return RunConfig(
        subcommand=ns.subcommand,
        n=get("n"),
        k=get("k"),
        mode=get("mode", "symbolic"),
        seed=get("seed", 0) or 0,
        strategy=get("strategy", "fraction-free-elimination"),
        output=get("json"),
        verbosity=get("verbose", 0),
        jobs=get("jobs", 1) or 1,
        options={
            key: get(key)
            for key in ("huckel", "reduced", "pascal", "x", "y", "trace", "table",
                        "max_n", "action", "a", "b", "c", "conjecture")
            if get(key) is not None
        },
    )


def _validate(config: RunConfig, parser: argparse.ArgumentParser) -> None:
    opts = config.options
    if config.subcommand in ("det", "perm"):
        if ("x" in opts) != ("y" in opts):
            parser.error("--x and --y must be given together")
        if "pascal" in opts and "x" in opts:
            parser.error("--x/--y only apply to --huckel/--reduced")
    if config.subcommand == "condense":
        if opts.get("trace") and config.k:
            parser.error("--trace records full-triangle runs; drop --k")
    if config.subcommand == "verify":
        if config.k is not None and config.n is None:
            parser.error("--k requires --n")
        if config.jobs < 1:
            parser.error("--jobs must be >= 1")
    for name in ("n", "k"):
        value = getattr(config, name)
        if value is not None and value < 0:
            parser.error(f"--{name} must be >= 0")


# -- subcommand handlers ----------------------------------------------------------


def _poly_payload(value) -> dict:
    out = {"value": str(value)}
    if isinstance(value, MultiPoly):
        out["terms"] = value.to_json_terms()
    return out


def _uniform_params(k: int, n: int, opts: dict):
    if "x" in opts:
        return bivariate_params(k, n, opts["x"], opts["y"])
    return None


def _source_matrix(config: RunConfig):
    opts = config.options
    if "huckel" in opts:
        k, n = opts["huckel"]
        return build_huckel(k, n, _uniform_params(k, n, opts)), ("huckel", k, n)
    if "reduced" in opts:
        k, n = opts["reduced"]
        m = build_reduced(k, n)
        params = _uniform_params(k, n, opts)
        if params is not None:
            m = evaluate_matrix(m, params)
        return m, ("reduced", k, n)
    kind, n = opts["pascal"]
    return build_pascal(kind, int(n)), ("pascal", kind, int(n))


def _cmd_det(config: RunConfig):
    matrix, (kind, k, n) = _source_matrix(config)
    degree = None
    if config.strategy == "bivariate-interpolation" and "x" not in config.options:
        # interpolation works on a single weight pair: collapse first
        matrix = evaluate_matrix(
            matrix, bivariate_params(0, int(n), xvar(0), yvar(0))
        ) if kind != "pascal" else matrix
        degree = int(n) + 1 - (k if isinstance(k, int) else 0)
    value = det(matrix, config.strategy, degree=degree)
    print(value)
    if config.verbosity:
        print(matrix.to_grid(), file=sys.stderr)
    payload = {"matrix": {"kind": kind, "k": k, "n": n}, "strategy": config.strategy}
    payload.update(_poly_payload(value))
    return 0, payload


def _cmd_perm(config: RunConfig):
    k, n = config.options["huckel"]
    matrix = build_huckel(k, n, _uniform_params(k, n, config.options))
    value = permanent(matrix)
    print(value)
    payload = {"matrix": {"kind": "huckel", "k": k, "n": n}}
    payload.update(_poly_payload(value))
    return 0, payload


def _cmd_charpoly(config: RunConfig):
    kind, n = config.options["pascal"]
    n = int(n)
    p = charpoly(build_pascal(kind, n))
    print(p)
    payload = {
        "matrix": {"kind": kind, "n": n},
        "value": str(p),
        "coefficients": coefficient_list(p, "z", n + 1),
    }
    return 0, payload


def _cmd_condense(config: RunConfig):
    if config.options.get("trace"):
        trace = condense(config.n)
        for step in trace.steps:
            print(f"eliminated block m={step.m}: corner {step.border}, size {step.size}")
        print(trace.final.to_grid())
        payload = {
            "steps": [
                {"m": s.m, "border": s.border, "size": s.size} for s in trace.steps
            ],
            "final": trace.final.to_json(),
        }
        return 0, payload
    value = condensation_det(config.k or 0, config.n)
    print(value)
    payload = {"instance": {"k": config.k or 0, "n": config.n}}
    payload.update(_poly_payload(value))
    return 0, payload


def _formula_row(n: int) -> dict:
    row = theta_table_row(n)
    return {
        "n": n,
        "A": formula_A(n),
        "AHT": formula_AHT(n),
        "theta0": row["theta0"],
        "thetaPi6": str(row["thetaPi6"]),
        "thetaPi3": row["thetaPi3"],
        "thetaPi2": row["thetaPi2"],
        "thetaPi4": str(row["thetaPi4"]),
        "mitra": row["mitra"],
    }


_TABLE_COLUMNS = ("n", "A", "AHT", "theta0", "thetaPi6", "thetaPi3", "thetaPi2",
                  "thetaPi4", "mitra")


def _print_formula_table(rows: list[dict]) -> None:
    cells = [
        [("" if r[c] is None else f"{r[c]:.2f}" if isinstance(r[c], float) else str(r[c]))
         for c in _TABLE_COLUMNS]
        for r in rows
    ]
    cells.insert(0, list(_TABLE_COLUMNS))
    widths = [max(len(row[j]) for row in cells) for j in range(len(_TABLE_COLUMNS))]
    for row in cells:
        print("  ".join(c.rjust(w) for c, w in zip(row, widths)))


def _cmd_formulas(config: RunConfig):
    rows = [_formula_row(n) for n in range(2, config.options["max_n"] + 1)]
    _print_formula_table(rows)
    return 0, {"rows": rows}


def _cmd_oracle(config: RunConfig):
    opts = config.options
    if opts["action"] == "partitions":
        a, b, c = opts["a"], opts["b"], opts["c"]
        counted = count_plane_partitions(a, b, c)
        predicted = formula_macmahon(a, b, c)
        ok = counted == predicted
        print(f"enumerated: {counted}")
        print(f"product formula: {predicted}")
        print(f"match: {ok}")
        payload = {"box": [a, b, c], "enumerated": counted,
                   "formula": predicted, "match": ok}
        return (0 if ok else 1), payload
    p = condensation_det(0, config.n)
    entries = square_coefficient_audit(p)
    for e in entries:
        print(f"{e.monomial}: {e.coefficient} = {e.root}^2")
    ok = audit_passes(entries)
    print(f"all coefficients are perfect squares: {ok}")
    payload = {
        "n": config.n,
        "entries": [
            {"monomial": e.monomial, "coefficient": e.coefficient, "root": e.root}
            for e in entries
        ],
        "pass": ok,
    }
    return (0 if ok else 1), payload


_DEFAULT_INSTANCES = {
    ("conj1", "symbolic"): [{"n": n} for n in range(5)],
    ("conj1", "specialized"): [{"n": n} for n in range(9)],
    ("conj2", "symbolic"): [{"k": 6, "n": 7}, {"k": 7, "n": 9}, {"k": 6, "n": 9}],
    ("conj2", "specialized"): [{"k": 6, "n": 7}, {"k": 7, "n": 9}, {"k": 6, "n": 9}],
    ("conj3", "symbolic"): [
        {"k": 0, "n": 0}, {"k": 0, "n": 1}, {"k": 0, "n": 2},
        {"k": 1, "n": 1}, {"k": 1, "n": 2}, {"k": 2, "n": 2}, {"k": 2, "n": 3},
    ],
    ("conj3", "specialized"): [{"k": 0, "n": 3}, {"k": 1, "n": 3}],
    ("props", "symbolic"): [{"n": n} for n in range(7)],
    ("props", "specialized"): [{"n": n} for n in range(7)],
}


def _verify_task(task: tuple):
    conjecture, kwargs = task
    if conjecture == "conj1":
        return verify_conjecture1(**kwargs)
    if conjecture == "conj2":
        return verify_conjecture2(**kwargs)
    if conjecture == "conj3":
        return verify_conjecture3(**kwargs)
    return verify_props(**kwargs)


def _verify_instances(config: RunConfig) -> list[tuple]:
    name = config.options["conjecture"]
    if config.n is None:
        instances = _DEFAULT_INSTANCES[(name, config.mode)]
    elif name in ("conj2", "conj3"):
        instances = [{"k": config.k or 0, "n": config.n}]
    else:
        instances = [{"n": config.n}]
    tasks = []
    for inst in instances:
        kwargs = dict(inst)
        if name != "props":
            kwargs["mode"] = config.mode
            if config.mode == "specialized":
                kwargs["seed"] = config.seed
        tasks.append((name, kwargs))
    return tasks


def _cmd_verify(config: RunConfig):
    tasks = _verify_instances(config)
    if config.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            reports = list(pool.map(_verify_task, tasks))
    else:
        reports = [_verify_task(t) for t in tasks]
    reports.sort(key=lambda r: (r.conjecture, sorted(r.instance.items())))
    for r in reports:
        inst = ",".join(f"{k}={v}" for k, v in sorted(r.instance.items()))
        print(f"{r.conjecture}[{inst}] {r.mode}: {r.verdict}")
        if config.verbosity:
            print(f"  {r.method} ({r.elapsed_s:.2f}s)", file=sys.stderr)
    all_pass = all(r.passed() for r in reports)
    payload = {"reports": [r.to_json() for r in reports], "all_pass": all_pass}
    return (0 if all_pass else 1), payload


def _bivariate_row(n: int) -> list[int]:
    collapse = bivariate_params(0, n, xvar(0), yvar(0))
    matrix = build_huckel(0, n, collapse)
    p = det(matrix, "bivariate-interpolation", degree=n + 1) if n else det(matrix)
    return [p.coefficient({"x0": n + 1 - j, "y0": j}) for j in range(n + 2)]


def _cmd_tables(config: RunConfig):
    max_n = config.options["max_n"]
    rows = [_bivariate_row(n) for n in range(max_n + 1)]
    for n, row in enumerate(rows):
        print(f"n={n}: {row}")
    formula_rows = [_formula_row(n) for n in range(2, max_n + 1)]
    _print_formula_table(formula_rows)
    return 0, {"determinant_rows": rows, "angle_table": formula_rows}


_HANDLERS = {
    "det": _cmd_det,
    "perm": _cmd_perm,
    "charpoly": _cmd_charpoly,
    "condense": _cmd_condense,
    "formulas": _cmd_formulas,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
    "tables": _cmd_tables,
}


def _write_json(path: str, payload: dict) -> None:
    payload = {"schema": 1, **payload}
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    config = _to_config(ns)
    _validate(config, parser)
    try:
        code, payload = _HANDLERS[config.subcommand](config)
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if config.output is not None:
        payload["subcommand"] = config.subcommand
        try:
            _write_json(config.output, payload)
        except OSError as exc:
            print(f"error: cannot write {config.output}: {exc}", file=sys.stderr)
            return 2
    return code


if __name__ == "__main__":
    sys.exit(main())
