"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 verification or
cross-check failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from . import bijections as bj
from . import enumeration as en
from . import structures as st
from .colours import (
    ColourSystem,
    colour_count,
    count_coloured_bruteforce,
    enumerate_coloured,
    parse_coloured,
)
from .errors import ColourDyckError
from .paths import DyckPath, Family, SchroederPath, TPath, enumerate_family, parse_path
from .render import plot_counts, to_ascii, to_svg

BRUTE_FORCE_MAX = 12

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


# -- helpers ------------------------------------------------------------------

def make_system(name: str, m: Optional[int] = None, weights: Optional[str] = None) -> ColourSystem:
    name = name.replace("-", "_")
    if name == "bounded":
        name = "bounded_ascent"
    if name == "custom":
        if not weights:
            raise UsageError("--system custom needs --weights a0,a1,...")
        return ColourSystem.custom(int(w) for w in weights.split(","))
    if name in ("bounded_ascent", "fibonacci"):
        if m is None:
            raise UsageError(f"--system {name} needs --m")
        return ColourSystem(name, m)
    return ColourSystem(name)


def closed_form(system: ColourSystem, n: int) -> Optional[int]:
    kind = system.kind
    if kind == "catalan":
        return en.count_catalan_coloured(n)
    if kind == "bounded_ascent":
        return en.count_bounded(n, system.m)
    if kind == "fibonacci":
        return en.count_fibonacci(n, system.m)
    if kind == "fibonacci_free":
        return en.count_little_schroeder(n)
    if kind == "schroeder":
        return en.count_schroeder_coloured(n)
    if kind == "trivial":
        return en.catalan(n)
    return None


def count_table(system: ColourSystem, lo: int, hi: int) -> list[dict]:
    series = en.solve_master([colour_count(system, k) for k in range(hi + 1)], hi)
    rows = []
    for n in range(lo, hi + 1):
        brute = count_coloured_bruteforce(n, system) if n <= BRUTE_FORCE_MAX else None
        closed = closed_form(system, n)
        values = [v for v in (brute, series[n], closed) if v is not None]
        rows.append({"n": n, "brute_force": brute, "series": series[n],
                     "closed_form": closed, "agree": len(set(values)) == 1})
    return rows


def emit_table(rows: list[dict], columns: list[str], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(rows) + "\n")
        return
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow(["" if r[c] is None else str(r[c]).lower() if isinstance(r[c], bool)
                        else r[c] for c in columns])
        return
    cells = [columns] + [[_text_cell(r[c]) for c in columns] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
    for row in cells:
        out.write("  ".join(v.rjust(w) for v, w in zip(row, widths)).rstrip() + "\n")


def _text_cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "agree" if v else "DIFFER"
    return str(v)


def parse_any(text: str):
    """Guess the kind of a CLI argument: JSON structure, coloured path or plain path."""
    text = text.strip()
    if text.startswith("{"):
        return st.from_json(text)
    if ";" in text:
        return parse_coloured(text)
    if set(text) & set("HG"):
        return TPath(text)
    if "L" in text:
        return SchroederPath(text)
    return DyckPath(text)


# -- bijection registry -------------------------------------------------------

@dataclass
class Bijection:
    forward: Callable
    inverse: Callable
    parse_in: Callable
    parse_out: Callable
    show_out: Callable
    show_in: Callable


def _coloured(system=None):
    return lambda text, m=None: parse_coloured(text, system)


def _json_structure(kind):
    def parse(text, m=None):
        obj = st.from_json(text)
        if not isinstance(obj, kind):
            raise ColourDyckError(f"expected a {kind.__name__} in JSON")
        return obj
    return parse


_as_json = lambda obj: obj.to_json()  # noqa: E731
_as_text = str

BIJECTIONS = {
    "theta": Bijection(lambda p, m=None: bj.theta(p), lambda t, m=None: bj.theta_inv(t),
                       lambda s, m=None: parse_path(s, "dyck"), _json_structure(st.NCTree),
                       _as_json, _as_text),
    "phi": Bijection(lambda p, m=None: bj.phi(p), lambda t, m=None: bj.phi_inv(t),
                     _coloured(), _json_structure(st.NCTree), _as_json, _as_text),
    "psi": Bijection(lambda p, m=None: bj.psi(p), lambda t, m=None: bj.psi_inv(t),
                     lambda s, m=None: parse_path(s, "dyck"),
                     _json_structure(st.NonCrossingPartition), _as_json, _as_text),
    "rho": Bijection(bj.rho, bj.rho_inv, _coloured(),
                     _json_structure(st.NonCrossingPartition), _as_json, _as_text),
    "sigma": Bijection(bj.sigma, bj.sigma_inv, _coloured(),
                       _json_structure(st.Dissection), _as_json, _as_text),
    "fib-ls": Bijection(lambda p, m=None: bj.fib_to_ls(p), lambda t, m=None: bj.ls_to_fib(t),
                        _coloured(), lambda s, m=None: s.strip(), _as_text, _as_text),
    "schroeder-t": Bijection(lambda p, m=None: bj.schroeder_to_t(p),
                             lambda t, m=None: bj.t_to_schroeder(t),
                             _coloured(ColourSystem.schroeder()), lambda s, m=None: s.strip(),
                             _as_text, _as_text),
}


def map_one(name: str, text: str, m: Optional[int] = None) -> str:
    inverse = name.endswith("-inv")
    base = name[:-4] if inverse else name
    if base not in BIJECTIONS:
        raise UsageError(f"unknown bijection {name!r}; choose from "
                         + ", ".join(sorted(BIJECTIONS)) + " and their -inv forms")
    b = BIJECTIONS[base]
    if inverse:
        return b.show_in(b.inverse(b.parse_out(text, m), m))
    return b.show_out(b.forward(b.parse_in(text, m), m))


# -- verification suites ------------------------------------------------------

@dataclass
class Suite:
    name: str
    system: Callable          # m -> ColourSystem, or None for plain Dyck paths
    forward: Callable         # (x, m) -> image
    inverse: Callable
    oracle: Callable          # (n, m) -> iterable of codomain elements
    key: Callable
    size_ok: Callable         # (image, n, m) -> bool
    guard: Callable           # n_max -> (limit kind, size)
    bounded: bool = False


def _dyck_domain(n, m):
    return enumerate_family(n, "dyck")


SUITES = {
    "theta": Suite(
        "theta", None, lambda x, m: bj.theta(x), lambda y, m: bj.theta_inv(y),
        lambda n, m: st.enumerate_structures("nco_tree", n + 1), lambda t: t.edges,
        lambda t, n, m: t.n == n + 1 and st.is_valid(t), lambda N: ("tree", N + 1)),
    "phi": Suite(
        "phi", lambda m: ColourSystem.catalan(), lambda x, m: bj.phi(x),
        lambda y, m: bj.phi_inv(y), lambda n, m: st.enumerate_structures("nc_tree", n + 1),
        lambda t: t.edges, lambda t, n, m: t.n == n + 1 and st.is_valid(t),
        lambda N: ("tree", N + 1)),
    "psi": Suite(
        "psi", None, lambda x, m: bj.psi(x), lambda y, m: bj.psi_inv(y),
        lambda n, m: st.enumerate_structures("partition", n), lambda p: p.blocks,
        lambda p, n, m: p.n == n and st.is_valid(p), lambda N: ("partition", N)),
    "rho": Suite(
        "rho", ColourSystem.bounded_ascent, bj.rho, bj.rho_inv,
        lambda n, m: st.enumerate_structures("even_partition", n, m), lambda p: p.blocks,
        lambda p, n, m: p.n == 2 * n and st.is_valid(p), lambda N: ("partition", 2 * N),
        bounded=True),
    "sigma": Suite(
        "sigma", ColourSystem.fibonacci, bj.sigma, bj.sigma_inv,
        lambda n, m: st.enumerate_structures("dissection", n, m), lambda d: d.diagonals,
        lambda d, n, m: d.k == n and st.is_valid(d), lambda N: ("polygon", N + 2),
        bounded=True),
    "fib-ls": Suite(
        "fib-ls", lambda m: ColourSystem.fibonacci_free(), lambda x, m: bj.fib_to_ls(x),
        lambda y, m: bj.ls_to_fib(y), lambda n, m: enumerate_family(n, "little_schroeder"),
        str, lambda p, n, m: p.span == 2 * n, lambda N: None),
    "schroeder-t": Suite(
        "schroeder-t", lambda m: ColourSystem.schroeder(), lambda x, m: bj.schroeder_to_t(x),
        lambda y, m: bj.t_to_schroeder(y), lambda n, m: st.enumerate_structures("t_path", n),
        str, lambda p, n, m: p.semilength == n, lambda N: ("t_path", N)),
}


def run_suite(suite: Suite, n_max: int, m: Optional[int] = None) -> dict:
    cases, images, failures = [], [], []
    for n in range(n_max + 1):
        domain = (_dyck_domain(n, m) if suite.system is None
                  else enumerate_coloured(n, suite.system(m)))
        seen = set()
        count = 0
        for x in domain:
            count += 1
            y = suite.forward(x, m)
            if not suite.size_ok(y, n, m):
                failures.append(f"size law n={n}: {x} -> {y}")
            back = suite.inverse(y, m)
            if back != x:
                failures.append(f"roundtrip n={n}: {x} -> {y} -> {back}")
            seen.add(suite.key(y))
        cases.append(count)
        images.append(len(seen))
        if len(seen) != count:
            failures.append(f"injectivity n={n}: {count} inputs, {len(seen)} images")
        oracle = {suite.key(z) for z in suite.oracle(n, m)}
        if oracle != seen:
            failures.append(f"surjectivity n={n}: oracle {len(oracle)}, image {len(seen)}")
    label = suite.name if m is None else f"{suite.name}(m={m})"
    return {"bijection": label, "cases": cases, "images": images,
            "pass": not failures, "failures": failures}


def verify(names: Iterable[str], n_max: int, ms: Optional[list] = None) -> list[dict]:
    suites = [SUITES[n] for n in names]
    for s in suites:
        guard = s.guard(n_max)
        if guard:
            st.check_size(*guard)
    results = []
    for s in suites:
        if s.bounded:
            for m in (ms or range(1, max(n_max, 1) + 1)):
                results.append(run_suite(s, n_max, m))
        else:
            results.append(run_suite(s, n_max))
    return results


# -- OEIS b-files -------------------------------------------------------------

@dataclass(frozen=True)
class BFile:
    entries: tuple

    def as_dict(self) -> dict:
        return dict(self.entries)


def parse_bfile(text: str) -> BFile:
    entries = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) < 2:
            raise ColourDyckError(f"b-file line {lineno}: expected 'index value'")
        idx, val = int(fields[0]), int(fields[1])
        if entries and idx <= entries[-1][0]:
            raise ColourDyckError(f"b-file line {lineno}: index {idx} is not increasing")
        entries.append((idx, val))
    return BFile(tuple(entries))


SEQUENCES = {
    "catalan": en.catalan,
    "catalan-coloured": en.count_catalan_coloured,
    "little-schroeder": en.count_little_schroeder,
    "large-schroeder": en.large_schroeder,
    "schroeder-coloured": en.count_schroeder_coloured,
}


def sequence_fn(tag: str, m: Optional[int]) -> Callable[[int], int]:
    if tag in SEQUENCES:
        return SEQUENCES[tag]
    if tag in ("bounded", "fibonacci"):
        if m is None:
            raise UsageError(f"sequence {tag} needs --m")
        return (lambda n: en.count_bounded(n, m)) if tag == "bounded" else (
            lambda n: en.count_fibonacci(n, m))
    raise UsageError(f"unknown sequence {tag!r}; choose from "
                     + ", ".join(sorted(SEQUENCES) + ["bounded", "fibonacci"]))


def oeis_check(tag: str, bfile: BFile, n_max: int, m: Optional[int] = None) -> dict:
    fn = sequence_fn(tag, m)
    compared, mismatch = 0, None
    for idx, val in bfile.entries:
        if idx < 0 or idx > n_max:
            continue
        got = fn(idx)
        compared += 1
        if got != val:
            mismatch = {"n": idx, "bfile": val, "computed": got}
            break
    return {"sequence": tag, "compared": compared, "mismatch": mismatch,
            "pass": mismatch is None and compared > 0}


# -- argument parsing ---------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colourdyck", description="Dyck paths with coloured ascents")
    parser.add_argument("--limit", action="append", default=[], metavar="KIND=N",
                        help="override an oracle guardrail (tree, partition, polygon, t_path)")
    sub = parser.add_subparsers(dest="command", required=True)

    table_fmt = argparse.ArgumentParser(add_help=False)
    table_fmt.add_argument("--format", choices=("text", "csv", "json"), default="text")

    p = sub.add_parser("count", parents=[table_fmt], help="triple-agreement count table")
    p.add_argument("--system", required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--weights")
    p.add_argument("--from", dest="lo", type=int, default=0)
    p.add_argument("--to", "--n-max", dest="hi", type=int, default=8)
    p.add_argument("--plot", metavar="FILE", help="also write a log-scale figure")

    p = sub.add_parser("list", parents=[table_fmt], help="list paths or coloured paths")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--family")
    g.add_argument("--system")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("map", help="apply a bijection or its inverse")
    p.add_argument("bijection")
    p.add_argument("input")
    p.add_argument("--m", type=int)

    p = sub.add_parser("verify", parents=[table_fmt], help="roundtrip/surjectivity suites")
    p.add_argument("bijection", help="a bijection name or 'all'")
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--m", type=int, action="append")

    p = sub.add_parser("render", help="draw a path or structure")
    p.add_argument("input")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("-o", "--output")

    p = sub.add_parser("oeis-check", parents=[table_fmt], help="compare against a b-file")
    p.add_argument("sequence")
    p.add_argument("bfile")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--m", type=int)
    return parser


def _cmd_count(args, out) -> int:
    system = make_system(args.system, args.m, args.weights)
    rows = count_table(system, args.lo, args.hi)
    emit_table(rows, ["n", "brute_force", "series", "closed_form", "agree"], args.format, out)
    if args.plot:
        plot_counts(rows, args.plot, title=str(system))
    return EXIT_OK if all(r["agree"] for r in rows) else EXIT_FAIL


def _cmd_list(args, out) -> int:
    if args.family:
        fam = Family.parse(args.family if args.m is None else f"{args.family}({args.m})")
        items = [str(p) for p in enumerate_family(args.n, fam)]
    else:
        items = [str(p) for p in enumerate_coloured(args.n, make_system(args.system, args.m))]
    if args.format == "json":
        out.write(json.dumps(items) + "\n")
    else:
        for s in items:
            out.write(s + "\n")
    return EXIT_OK


def _cmd_map(args, out) -> int:
    out.write(map_one(args.bijection, args.input, args.m) + "\n")
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    if args.bijection == "all":
        names = list(SUITES)
    elif args.bijection in SUITES:
        names = [args.bijection]
    else:
        raise UsageError(f"unknown bijection {args.bijection!r}")
    results = verify(names, args.n_max, args.m)
    if args.format == "json":
        out.write(json.dumps(results) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["bijection", "n", "cases", "images", "pass"])
        for r in results:
            for n, (c, i) in enumerate(zip(r["cases"], r["images"])):
                w.writerow([r["bijection"], n, c, i, str(r["pass"]).lower()])
    else:
        for r in results:
            verdict = "pass" if r["pass"] else "FAIL"
            out.write(f"{r['bijection']}: roundtrip {'+'.join(map(str, r['cases']))} "
                      f"cases: {verdict}\n")
            out.write(f"{r['bijection']}: surjective onto "
                      f"{'+'.join(map(str, r['images']))} oracle structures: {verdict}\n")
            for f in r["failures"][:10]:
                out.write(f"  {f}\n")
    return EXIT_OK if all(r["pass"] for r in results) else EXIT_FAIL


def _cmd_render(args, out) -> int:
    obj = parse_any(args.input)
    text = to_svg(obj) if args.format == "svg" else to_ascii(obj) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def _cmd_oeis(args, out) -> int:
    with open(args.bfile) as fh:
        bfile = parse_bfile(fh.read())
    result = oeis_check(args.sequence, bfile, args.n_max, args.m)
    if args.format == "json":
        out.write(json.dumps(result) + "\n")
    else:
        mm = result["mismatch"]
        if mm:
            out.write(f"{args.sequence}: mismatch at n={mm['n']}: b-file {mm['bfile']}, "
                      f"computed {mm['computed']}\n")
        elif result["compared"] == 0:
            out.write(f"{args.sequence}: no b-file entries with index <= {args.n_max}\n")
        else:
            out.write(f"{args.sequence}: {result['compared']} terms agree: pass\n")
    return EXIT_OK if result["pass"] else EXIT_FAIL


COMMANDS = {
    "count": _cmd_count, "list": _cmd_list, "map": _cmd_map, "verify": _cmd_verify,
    "render": _cmd_render, "oeis-check": _cmd_oeis,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    saved = dict(st.LIMITS)
    try:
        for item in args.limit:
            kind, _, value = item.partition("=")
            st.set_limit(kind, int(value))
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (ColourDyckError, ValueError, KeyError, OSError) as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return EXIT_USAGE
    finally:
        st.LIMITS.update(saved)


def run(argv=None) -> tuple[int, str, str]:
    """Run the CLI in-process and capture ``(exit code, stdout, stderr)``."""
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())
