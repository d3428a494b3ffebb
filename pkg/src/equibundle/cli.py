"""Command-line front end.

Exit codes: 0 success, 1 regression mismatch (``examples``), 2 invalid input,
3 inconclusive numerical oracle.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .characters import OracleInconclusive
from .classify import (
    BundleClass,
    bundle_from_pair,
    enumerate_bundles,
    fiber_of_J,
    liftable_coset,
    lifts_to_higher_action,
)
from .cohomog1 import builtin_example, load_system
from .hom_classes import HomClass, TargetGroup, ValidationError, delta_action, enumerate_hom_classes, restrict
from .invariants import chern_number, clutching_class, pontrjagin_euler, stiefel_whitney

SCHEMA = "equibundle/1"
EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_ORACLE = 0, 1, 2, 3


# -- report helpers -------------------------------------------------------------------


def _invariants(b: BundleClass) -> dict:
    out = {}
    for name, fn in (
        ("clutching", clutching_class),
        ("chern", chern_number),
        ("stiefel_whitney", stiefel_whitney),
        ("pontrjagin_euler", pontrjagin_euler),
    ):
        v = fn(b)
        if v.supported:
            out[name] = v.to_json()
    return out


def bundle_report(b: BundleClass, index: int | None = None) -> dict:
    row = {
        "gamma": b.gamma.to_json(),
        "alpha": b.alpha.to_json(),
        "beta": b.beta.to_json(),
        "coset": list(b.coset),
        "liftable": lifts_to_higher_action(b),
        "invariants": _invariants(b),
        "summary": str(b),
    }
    if index is not None:
        row = {"index": index, **row}
    return row


def _hom_report(h: HomClass, index: int) -> dict:
    d = delta_action(h)
    return {"index": index, **h.to_json(), "summary": str(h), "delta_fixed": d == h}


def _render_table(rows: list[dict], columns: list[str]) -> str:
    cells = [[str(r.get(c, "")) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines)


def _short_inv(inv: dict) -> str:
    return ", ".join(f"{k}={v['value']}" for k, v in inv.items())


# -- argument resolution --------------------------------------------------------------


def _target(args) -> TargetGroup:
    if not args.group:
        raise ValidationError("--group FAMILY:SIZE is required")
    return TargetGroup.parse(args.group)


def _n(args) -> int:
    if args.n is None:
        raise ValidationError("--n is required")
    if args.n < 2:
        raise ValidationError("--n must be at least 2")
    return args.n


def _bound(args, n: int) -> int | None:
    if n == 2 and args.bound is None:
        raise ValidationError("n = 2 requires --bound (R(2,G) is infinite)")
    return args.bound


def _resolve_hom(text: str | None, name: str, n: int, target: TargetGroup, bound: int | None) -> HomClass:
    if text is None:
        raise ValidationError(f"--{name} is required (an index into 'reps' output or a class JSON)")
    text = text.strip()
    if text.lstrip("-").isdigit():
        classes = enumerate_hom_classes(n, target, bound)
        i = int(text)
        if not 0 <= i < len(classes):
            raise ValidationError(f"--{name} index {i} out of range 0..{len(classes) - 1}")
        return classes[i]
    if not text.startswith("{"):
        path = Path(text)
        if not path.exists():
            raise ValidationError(f"--{name} is neither an index, JSON text nor an existing file")
        text = path.read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"--{name} is not valid JSON: {exc.msg}") from None
    h = HomClass.from_json(data)
    if h.source_n != n or h.target != target:
        raise ValidationError(f"--{name} describes SO({h.source_n}) -> {h.target}, not SO({n}) -> {target}")
    return h


def _pair(args):
    n, target = _n(args), _target(args)
    needs_bound = any(x is not None and x.strip().lstrip("-").isdigit() for x in (args.alpha, args.beta))
    bound = _bound(args, n) if needs_bound else args.bound
    a = _resolve_hom(args.alpha, "alpha", n, target, bound)
    b = _resolve_hom(args.beta, "beta", n, target, bound)
    return n, target, a, b


def _coset(text: str | None):
    if text is None:
        return None
    if any(ch not in "01" for ch in text):
        raise ValidationError("--coset must be a string of 0/1 digits")
    return tuple(int(ch) for ch in text)


# -- commands ----------------------------------------------------------------------


def cmd_reps(args):
    n, target = _n(args), _target(args)
    classes = enumerate_hom_classes(n, target, _bound(args, n))
    rows = [_hom_report(h, i) for i, h in enumerate(classes)]
    results = {"n": n, "group": str(target), "count": len(rows), "classes": rows}
    table = _render_table(
        [{"#": r["index"], "class": r["summary"], "delta-fixed": r["delta_fixed"]} for r in rows],
        ["#", "class", "delta-fixed"],
    )
    return results, f"R({n}, {target}): {len(rows)} classes\n{table}", EXIT_OK


def _bundle_table(rows: list[dict]) -> str:
    return _render_table(
        [
            {
                "#": r.get("index", ""),
                "alpha": HomClass.from_json(r["alpha"]).__str__().split(": ", 1)[1],
                "beta": HomClass.from_json(r["beta"]).__str__().split(": ", 1)[1],
                "coset": "".join(map(str, r["coset"])) or "-",
                "lift": "yes" if r["liftable"] else "no",
                "invariants": _short_inv(r["invariants"]),
            }
            for r in rows
        ],
        ["#", "alpha", "beta", "coset", "lift", "invariants"],
    )


def cmd_classify(args):
    n, target = _n(args), _target(args)
    bundles = enumerate_bundles(n, target, _bound(args, n))
    rows = [bundle_report(b, i) for i, b in enumerate(bundles)]
    results = {
        "n": n,
        "group": str(target),
        "count": len(rows),
        "liftable": sum(r["liftable"] for r in rows),
        "classes": rows,
    }
    head = f"E({n}, {target}): {len(rows)} classes, {results['liftable']} liftable"
    return results, f"{head}\n{_bundle_table(rows)}", EXIT_OK


def cmd_fiber(args):
    n, target, a, b = _pair(args)
    rows = [bundle_report(x, i) for i, x in enumerate(fiber_of_J(a, b))]
    results = {"n": n, "group": str(target), "gamma": restrict(a).to_json(), "count": len(rows), "classes": rows}
    return results, f"fiber of J over ({a}, {b}): {len(rows)} classes\n{_bundle_table(rows)}", EXIT_OK


def cmd_invariants(args):
    _, _, a, b = _pair(args)
    bundle = bundle_from_pair(a, b, _coset(args.coset))
    inv = _invariants(bundle)
    results = {"bundle": bundle_report(bundle), "invariants": inv}
    text = f"{bundle}\n" + ("\n".join(f"{k}: {v['value']} ({v['kind']})" for k, v in inv.items()) or "unsupported")
    return results, text, EXIT_OK


def cmd_lift_check(args):
    _, _, a, b = _pair(args)
    bundle = bundle_from_pair(a, b, _coset(args.coset))
    ok = lifts_to_higher_action(bundle)
    results = {
        "bundle": bundle_report(bundle),
        "liftable": ok,
        "delta_alpha": delta_action(a).to_json(),
        "liftable_coset": list(liftable_coset(a)),
    }
    return results, f"{bundle}: {'liftable' if ok else 'not liftable'}", EXIT_OK


def cmd_cohom1(args):
    bound = args.bound if args.bound is not None else 5
    if args.input:
        try:
            data = json.loads(Path(args.input).read_text())
        except OSError as exc:
            raise ValidationError(f"cannot read --input: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise ValidationError(f"--input is not valid JSON: {exc.msg} (line {exc.lineno})") from None
        result = load_system(data, bound)
    elif args.example:
        target = TargetGroup.parse(args.group) if args.group else None
        result = builtin_example(args.example, n=args.n, target=target, bound=bound)
    else:
        raise ValidationError("cohom1 needs --example NAME or --input FILE")
    results = result.to_json()
    if result.expected is not None:
        results["expected_count"] = result.expected
    rows = [{"#": i, "index": c["index"], "coset": c["coset"]} for i, c in enumerate(results["classes"])]
    text = (
        f"{result.name}: {len(result.special)} special manifold class(es), {result.count} bundle class(es)\n"
        + _render_table(rows, ["#", "index", "coset"])
    )
    return results, text, EXIT_OK


def cmd_examples(args):
    from .tables import run_cases

    selection = None if args.filter is None else [s.strip() for s in args.filter.split(",")]
    reports = run_cases(selection, perturb=args.perturb)
    failed = [r for r in reports if r.status == "FAIL"]
    results = {
        "cases": [r.to_json() for r in reports],
        "count": len(reports),
        "failed": len(failed),
    }
    lines = []
    for r in reports:
        lines.append(f"[{r.status:9}] {r.name}")
        lines += [f"    {m}" for m in r.mismatches + r.deviations]
    lines.append(f"{len(reports)} case(s), {len(failed)} failed")
    return results, "\n".join(lines), EXIT_MISMATCH if failed else EXIT_OK


COMMANDS = {
    "reps": cmd_reps,
    "classify": cmd_classify,
    "fiber": cmd_fiber,
    "invariants": cmd_invariants,
    "lift-check": cmd_lift_check,
    "cohom1": cmd_cohom1,
    "examples": cmd_examples,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equibundle", description="Classify SO(n)-equivariant principal bundles over spheres."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--format", choices=("json", "table"), default="json")
        p.add_argument("--out", help="write the report to this file instead of stdout")
        if name in ("reps", "classify", "fiber", "invariants", "lift-check", "cohom1"):
            p.add_argument("--n", type=int)
            p.add_argument("--group", help="target group as FAMILY:SIZE, e.g. SO:4")
            p.add_argument("--bound", type=int, help="weight bound (n = 2) or index bound (cohom1 ex2)")
        if name in ("fiber", "invariants", "lift-check"):
            p.add_argument("--alpha", help="index into 'reps' output, class JSON, or a JSON file")
            p.add_argument("--beta", help="index into 'reps' output, class JSON, or a JSON file")
        if name in ("invariants", "lift-check"):
            p.add_argument("--coset", help="element of pi_0(Z_gamma) as a 0/1 string")
        if name == "cohom1":
            p.add_argument("--example", choices=("ex1", "ex2", "ex3"))
            p.add_argument("--input", help="JSON file describing a cohomogeneity-one system")
        if name == "examples":
            p.add_argument("--filter", help="comma-separated case names (default: all)")
            p.add_argument("--perturb", help="self-test: perturb the golden values of this case")
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        results, text, code = COMMANDS[args.command](args)
    except ValidationError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID
    except OracleInconclusive as exc:
        print(f"oracle inconclusive: {exc}", file=stderr)
        return EXIT_ORACLE
    except NotImplementedError as exc:
        print(f"error: not supported: {exc}", file=stderr)
        return EXIT_INVALID
    if args.format == "json":
        request = {k: v for k, v in vars(args).items() if k not in ("format", "out") and v is not None}
        report = {
            "schema": SCHEMA,
            "tool": "equibundle",
            "version": __version__,
            "command": args.command,
            "request": request,
            "results": results,
        }
        output = json.dumps(report, indent=2) + "\n"
    else:
        output = text + "\n"
    if args.out:
        Path(args.out).write_text(output)
    else:
        stdout.write(output)
    return code


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
