"""Command-line front end.

Subcommands: classify, homfly, bounds, examples, and the exhaustive
verification sweep that cross-checks the closed-form degree formulas against
the skein engine grouping by grouping.

Exit codes are a stable contract: 0 success, 1 usage error, 2 invalid input,
3 cross-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from multiprocessing import Pool

from . import engine, pretzel, seifert
from .braid_index import (
    CrossCheckError,
    DispatchGapError,
    braid_index,
    formula_Ee,
    theorem_case,
)
from .engine import EngineCache, profile
from .pretzel import (
    TWO_COMPONENT_UNLINK,
    PretzelInputError,
    RawPretzel,
    Type3Grouping,
    classify,
    enumerate_type3,
    parse_group,
    parse_strips,
    standardize,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_CHECK = 3

CSV_HEADER = "key,c,E_formula,e_formula,E_engine,e_engine,b0,upper,case,agree_Ee,agree_sandwich,micros"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _load_input(args) -> Type3Grouping | RawPretzel:
    if args.group:
        return parse_group(args.group)
    if args.strips:
        return parse_strips(args.strips)
    raise PretzelInputError("provide --strips or --group")


def _require_grouping(obj) -> Type3Grouping:
    if isinstance(obj, Type3Grouping):
        return obj
    std = standardize(obj)
    if std is TWO_COMPONENT_UNLINK:
        raise PretzelInputError("diagram cancels to the two-component unlink; not Type 3")
    lt = classify(std)
    if lt.grouping is None:
        raise PretzelInputError(f"diagram is {lt.tag}, not Type 3")
    return lt.grouping


# ---------------------------------------------------------------------------
# simple commands


def cmd_classify(args) -> int:
    obj = _load_input(args)
    if isinstance(obj, Type3Grouping):
        print(json.dumps({"type": "type3", "grouping": obj.to_json()}, indent=2))
        return EXIT_OK
    std = standardize(obj)
    if std is TWO_COMPONENT_UNLINK:
        print(json.dumps({"type": "unlink", "components": 2, "homfly": engine.DELTA.serialize()}, indent=2))
        return EXIT_OK
    lt = classify(std)
    print(json.dumps(lt.to_json(), indent=2))
    return EXIT_OK


def cmd_homfly(args) -> int:
    obj = _load_input(args)
    if isinstance(obj, RawPretzel):
        obj = standardize(obj)
    prof = profile(obj)
    print(f"H = {prof.polynomial.serialize()}")
    print(f"E = {prof.E}  e = {prof.e}  span = {prof.span}  b0 = {prof.b0}")
    print(f"p_h = {prof.p_h!r}")
    print(f"p_l = {prof.p_l!r}")
    return EXIT_OK


def cmd_bounds(args) -> int:
    g = _require_grouping(_load_input(args))
    policy = "assume-conjecture" if args.assume_conjecture else "strict"
    try:
        result = braid_index(g, policy=policy)
        plan = seifert.upper_bound(g)
    except (CrossCheckError, AssertionError) as exc:
        print(f"cross-check failure: {exc}", file=sys.stderr)
        return EXIT_CHECK
    if result.upper != plan.final_seifert_count:
        print("cross-check failure: clause and reduction plan disagree", file=sys.stderr)
        return EXIT_CHECK
    fe = formula_Ee(g)
    payload = {
        "input": g.notation(),
        "case_id": result.case_id,
        "kind": result.kind,
        "lower": result.lower,
        "upper": result.upper,
    }
    if result.resolved is not None:
        payload["resolved"] = result.resolved
    if result.conjectured is not None:
        payload["conjectured"] = result.conjectured
    if not fe.delegated:
        payload["E"] = fe.E
        payload["e"] = fe.e
    else:
        prof = profile(g)
        payload["E"] = prof.E
        payload["e"] = prof.e
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"input:   {payload['input']}")
        print(f"case:    {result.case_id}")
        print(f"kind:    {result.kind}")
        print(f"lower:   {result.lower}")
        print(f"upper:   {result.upper}")
        if result.resolved is not None:
            print(f"resolved braid index: {result.resolved}")
        if result.conjectured is not None:
            print(f"conjectured braid index: {result.conjectured}")
        print(f"plan:    {json.dumps(plan.to_json())}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# the worked examples


_EXAMPLES = (
    ("i", Type3Grouping((3, 1, 1, 1, 1, 1), (5, 4), (), ()), "exact", 5, None),
    ("ii", Type3Grouping((2, 2, 2, 1, 1), (2, 2, 2), (), ()), "exact", 6, None),
    ("iii", Type3Grouping((2,), (3,), (2,), ()), "interval", (3, 4), 4),
    ("iv", Type3Grouping((2,), (3,), (3,), ()), "exact", 4, None),
    ("v", Type3Grouping((3, 3, 2), (3,), (), (2, 2)), "exact", 8, None),
    ("vi", Type3Grouping((3, 1, 1, 1, 1, 1, 1, 1), (), (2, 2, 1), ()), "exact", 7, None),
)


def examples_report() -> tuple[list[dict], bool]:
    rows = []
    all_ok = True
    for label, g, kind, expected, resolved in _EXAMPLES:
        result = braid_index(g)
        if kind == "exact":
            ok = result.kind == "exact" and result.value == expected
            shown = result.value if result.kind == "exact" else (result.lower, result.upper)
        else:
            ok = (
                result.kind == "interval"
                and (result.lower, result.upper) == expected
                and result.resolved == resolved
            )
            shown = (result.lower, result.upper, result.resolved)
        rows.append(
            {
                "example": label,
                "input": g.notation(),
                "expected": expected if kind == "exact" else {"interval": list(expected), "resolved": resolved},
                "computed": shown,
                "case": result.case_id,
                "ok": ok,
            }
        )
        all_ok = all_ok and ok
    return rows, all_ok


def cmd_examples(args) -> int:
    rows, all_ok = examples_report()
    for row in rows:
        status = "PASS" if row["ok"] else "FAIL"
        print(f"({row['example']}) {row['input']}: expected {row['expected']}, "
              f"got {row['computed']} [{row['case']}] {status}")
    if not all_ok:
        return EXIT_CHECK
    return EXIT_OK


# ---------------------------------------------------------------------------
# sweep


@dataclass
class SweepRecord:
    key: str
    c: int
    E_formula: int
    e_formula: int
    E_engine: int
    e_engine: int
    b0: int
    upper: int
    case: str
    agree_Ee: bool
    agree_sandwich: bool
    micros: int

    def csv_row(self) -> str:
        flags = [str(self.agree_Ee).lower(), str(self.agree_sandwich).lower()]
        return ",".join(
            [
                self.key,
                str(self.c),
                str(self.E_formula),
                str(self.e_formula),
                str(self.E_engine),
                str(self.e_engine),
                str(self.b0),
                str(self.upper),
                self.case,
                *flags,
                str(self.micros),
            ]
        )

    def to_json(self) -> dict:
        return {
            "key": self.key,
            "c": self.c,
            "E_formula": self.E_formula,
            "e_formula": self.e_formula,
            "E_engine": self.E_engine,
            "e_engine": self.e_engine,
            "b0": self.b0,
            "upper": self.upper,
            "case": self.case,
            "agree_Ee": self.agree_Ee,
            "agree_sandwich": self.agree_sandwich,
            "micros": self.micros,
        }


def check_grouping(g: Type3Grouping, cache: EngineCache | None = None,
                   timing: bool = False, check_mirror: bool = False) -> SweepRecord:
    """Cross-check one grouping: formulas vs engine, sandwich, sign classes."""
    t0 = time.perf_counter() if timing else 0.0
    fe = formula_Ee(g)
    prof = profile(g, cache)
    if fe.delegated:
        E_f, e_f = prof.E, prof.e
        agree = True
    else:
        E_f, e_f = fe.E, fe.e
        agree = (E_f, e_f) == (prof.E, prof.e)
    if fe.sign_class_h is not None and not fe.sign_class_h.check(prof.p_h):
        agree = False
    if fe.sign_class_l is not None and not fe.sign_class_l.check(prof.p_l):
        agree = False

    case = theorem_case(g)
    plan = seifert.upper_bound(g, case)
    lower = prof.b0 if fe.delegated else fe.span_bound()
    upper = plan.final_seifert_count
    gap = upper - lower
    expected_gap = 1 if case.case_id.startswith("MT1e4") else 0
    sandwich = lower <= upper and gap == expected_gap and lower == case.lo

    if check_mirror:
        mirrored = engine.homfly(engine.state_for(g.mirror()), cache)
        if mirrored != prof.polynomial.subst_a_neg_inv():
            agree = False

    micros = int((time.perf_counter() - t0) * 1e6) if timing else 0
    return SweepRecord(
        key=g.notation(),
        c=g.crossings,
        E_formula=E_f,
        e_formula=e_f,
        E_engine=prof.E,
        e_engine=prof.e,
        b0=prof.b0,
        upper=upper,
        case=case.case_id,
        agree_Ee=agree,
        agree_sandwich=sandwich,
        micros=micros,
    )


def _worker(payload: tuple) -> list[dict]:
    keys, timing, check_mirror = payload
    cache = EngineCache()
    out = []
    for key in keys:
        g = Type3Grouping(*[tuple(part) for part in key])
        out.append(check_grouping(g, cache, timing=timing, check_mirror=check_mirror).to_json())
    return out


def sweep_records(max_crossings: int, workers: int = 1, timing: bool = False,
                  check_mirror: bool = False,
                  cache: EngineCache | None = None) -> list[SweepRecord]:
    groupings = list(enumerate_type3(max_crossings))
    if workers <= 1:
        return [check_grouping(g, cache, timing=timing, check_mirror=check_mirror)
                for g in groupings]
    keys = [g.canonical_key() for g in groupings]
    chunk = max(1, (len(keys) + 4 * workers - 1) // (4 * workers))
    batches = [(keys[i:i + chunk], timing, check_mirror) for i in range(0, len(keys), chunk)]
    rows: list[SweepRecord] = []
    with Pool(processes=workers) as pool:
        for batch in pool.map(_worker, batches):
            rows.extend(SweepRecord(**r) for r in batch)
    return rows


def render_report(rows: list[SweepRecord], fmt: str) -> str:
    if fmt == "csv":
        return "\n".join([CSV_HEADER] + [r.csv_row() for r in rows]) + "\n"
    return json.dumps([r.to_json() for r in rows], indent=1) + "\n"


def cmd_sweep(args) -> int:
    cache = EngineCache()
    rows = sweep_records(
        args.max_crossings,
        workers=args.workers,
        timing=(args.timing == "wall"),
        check_mirror=args.check,
        cache=cache,
    )
    report = render_report(rows, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report)
    else:
        sys.stdout.write(report)
    bad = [r for r in rows if not (r.agree_Ee and r.agree_sandwich)]
    print(
        f"sweep: {len(rows)} groupings, {len(bad)} disagreements; "
        f"cache {cache.stats() if args.workers <= 1 else 'per-worker'}",
        file=sys.stderr,
    )
    if bad:
        print(f"first failing record: {bad[0].to_json()}", file=sys.stderr)
        return EXIT_CHECK
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> _Parser:
    parser = _Parser(prog="pretzelbraid", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("--strips", help='raw strip list, e.g. "2,-3,4"')
        p.add_argument("--group", help='grouped form, e.g. "mu=2;nu=3;alpha=2;beta="')

    p = sub.add_parser("classify", help="classify a pretzel diagram")
    add_input(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("homfly", help="HOMFLY-PT polynomial and degree profile")
    add_input(p)
    p.set_defaults(func=cmd_homfly)

    p = sub.add_parser("bounds", help="braid-index bounds for a Type 3 pretzel")
    add_input(p)
    p.add_argument("--assume-conjecture", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("examples", help="reproduce the six worked example rows")
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser("sweep", help="exhaustive formula-vs-engine verification")
    p.add_argument("--max-crossings", type=int, default=10)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="write the report to a file")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--check", action="store_true",
                   help="also verify the mirror rule on every grouping")
    p.add_argument("--timing", choices=("off", "wall"), default="off",
                   help="fill the micros column (off keeps reports byte-stable)")
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except PretzelInputError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (CrossCheckError, DispatchGapError) as exc:
        print(f"cross-check failure: {exc}", file=sys.stderr)
        return EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
