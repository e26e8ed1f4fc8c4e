"""Command-line driver: ``webcalc eval|check|suite|char|list``.

Exit codes: 0 success, 1 inequality or failing identity, 2 parse error or
unknown name, 3 boundary mismatch.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import suites
from .checks import diff_text, dump_diff
from .evaluator import EvalConfig, SparseOperator, evaluate, parse_dump
from .scalars import Mode, ScalarRing, ScalarSyntaxError
from .webcore import BoundaryError, WebError, WebSyntaxError, boundary, obj_text, parse_web, print_web

REPORT_SCHEMA = "webcalc-report/1"
OPERATOR_SCHEMA = "webcalc-operator/1"
EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_BOUNDARY = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, msg: str, code: int):
        super().__init__(msg)
        self.code = code


@dataclass
class RunConfig:
    command: str
    N: list = field(default_factory=list)
    k: list | None = None
    mode: Mode | None = None
    jobs: int = 1
    fmt: str = "text"
    out: str | None = None
    strict: bool = False
    inputs: list = field(default_factory=list)


def int_range(text: str) -> list[int]:
    """``3``, ``2..4`` or ``2,3,5``."""
    out = []
    for part in text.split(","):
        if ".." in part:
            a, b = part.split("..", 1)
            out += list(range(int(a), int(b) + 1))
        else:
            out.append(int(part))
    return out


# ------------------------------------------------------------ operator cache

def _cache_dir() -> Path | None:
    d = os.environ.get("WEBCALC_CACHE_DIR")
    return Path(d) if d else None


def cache_key(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def write_operator(op: SparseOperator, mode: Mode) -> str:
    return (f"{OPERATOR_SCHEMA}\nN={op.N} mode={mode.value}\nsrc={obj_text(op.src)}\n"
            f"tgt={obj_text(op.tgt)}\n{op.dump()}")


def read_operator(text: str) -> SparseOperator:
    lines = text.split("\n", 4)
    if lines[0] != OPERATOR_SCHEMA:
        raise ValueError("not an operator file")
    head = dict(kv.split("=", 1) for kv in lines[1].split())
    N, mode = int(head["N"]), Mode.parse(head["mode"])
    src, tgt = boundary(lines[2][4:]), boundary(lines[3][4:])
    return parse_dump(lines[4] if len(lines) > 4 else "", src, tgt, ScalarRing(mode, N))


def evaluate_cached(expr, cfg: EvalConfig) -> SparseOperator:
    """Evaluate, reusing a content-addressed dump under WEBCALC_CACHE_DIR."""
    d = _cache_dir()
    if d is None:
        return evaluate(expr, cfg)
    key = cache_key(print_web(expr, cfg.N, cfg.mode))
    path = d / key[:2] / f"{key}.op"
    if path.exists():
        try:
            return read_operator(path.read_text())
        except (ValueError, KeyError):
            pass  # stale or corrupt entry: recompute and overwrite
    op = evaluate(expr, cfg)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(write_operator(op, cfg.mode))
    tmp.replace(path)
    return op


# ------------------------------------------------------------ input loading

def load(path: str, rc: RunConfig):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror}", EXIT_PARSE) from None
    N = rc.N[0] if rc.N else None
    try:
        wf = parse_web(text, N, rc.mode)
    except BoundaryError as exc:
        raise CliError(f"{path}: {exc}", EXIT_BOUNDARY) from None
    except (WebSyntaxError, ScalarSyntaxError, ValueError) as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from None
    if rc.mode is not None and wf.mode != rc.mode:
        raise CliError(f"{path}: header mode {wf.mode.value} conflicts with --mode {rc.mode.value}", EXIT_PARSE)
    return wf


def _eval_file(path: str, rc: RunConfig):
    wf = load(path, rc)
    cfg = EvalConfig(wf.N, wf.mode)
    try:
        return wf, cfg, evaluate_cached(wf.expr, cfg)
    except BoundaryError as exc:
        raise CliError(f"{path}: {exc}", EXIT_BOUNDARY) from None
    except WebError as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from None


def _emit(text: str, rc: RunConfig):
    if rc.out:
        Path(rc.out).write_text(text)
    else:
        sys.stdout.write(text)


# ------------------------------------------------------------ commands

def cmd_eval(rc: RunConfig) -> int:
    wf, cfg, op = _eval_file(rc.inputs[0], rc)
    if rc.fmt == "json":
        doc = {"schema": OPERATOR_SCHEMA, "N": wf.N, "mode": wf.mode.value, "src": obj_text(op.src),
               "tgt": obj_text(op.tgt), "shape": list(op.shape), "nnz": op.nnz(),
               "entries": [line.split("\t") for line in op.dump().splitlines()]}
        _emit(json.dumps(doc, indent=1) + "\n", rc)
    else:
        _emit(write_operator(op, wf.mode), rc)
    return EXIT_OK


def cmd_check(rc: RunConfig) -> int:
    (wa, _, a), (wb, _, b) = (_eval_file(p, rc) for p in rc.inputs[:2])
    if (wa.N, wa.mode) != (wb.N, wb.mode):
        raise CliError("the two files use different N or mode", EXIT_PARSE)
    if a.src != b.src or a.tgt != b.tgt:
        raise CliError(f"boundaries differ: {obj_text(a.src)} -> {obj_text(a.tgt)} vs "
                       f"{obj_text(b.src)} -> {obj_text(b.tgt)}", EXIT_BOUNDARY)
    equal = a == b
    if rc.fmt == "json":
        doc = {"schema": REPORT_SCHEMA, "equal": equal}
        if not equal:
            doc["first_difference"] = diff_text(a, b)
            doc["diff"] = dump_diff(a, b)
        _emit(json.dumps(doc, indent=1) + "\n", rc)
    else:
        _emit("equal\n" if equal else f"not equal: {diff_text(a, b)}\n", rc)
    return EXIT_OK if equal else EXIT_FAIL


def _run_units(units, jobs: int):
    if jobs > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(suites.run_unit, units))
    return [suites.run_unit(u) for u in units]


def cmd_suite(rc: RunConfig) -> int:
    name = rc.inputs[0]
    try:
        units = suites.expand(name, rc.N or None, rc.k)
    except KeyError:
        raise CliError(f"unknown suite {name!r}; known: {', '.join(suites.SUITES)}, all", EXIT_PARSE) from None
    if not units:
        raise CliError(f"suite {name!r} has nothing to run for N={rc.N}", EXIT_PARSE)
    results = _run_units(units, rc.jobs)
    counts = {"PASS": 0, "FAIL": 0, "XFAIL": 0, "XPASS": 0}
    for rs in results:
        for r in rs:
            counts[r.status] += 1
    ok = all(r.ok(rc.strict) for rs in results for r in rs)
    if rc.fmt == "json":
        doc = {"schema": REPORT_SCHEMA, "suite": name, "strict": rc.strict, "ok": ok,
               "summary": counts,
               "units": [{"suite": u[0], "N": u[1], "k": u[2], "results": [r.as_json() for r in rs]}
                         for u, rs in zip(units, results)]}
        _emit(json.dumps(doc, indent=1) + "\n", rc)
    else:
        lines = [r.line() for rs in results for r in rs]
        lines.append(" ".join(f"{k.lower()}={v}" for k, v in counts.items()) + f" ok={int(ok)}")
        _emit("\n".join(lines) + "\n", rc)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_char(rc: RunConfig) -> int:
    from .projectors import lookup
    from .symfun import character, e_expansion_text
    target = rc.inputs[0]
    if Path(target).exists():
        wf, cfg, op = _eval_file(target, rc)
        if wf.mode != Mode.ZETA:
            raise CliError("char needs a zeta-mode document", EXIT_PARSE)
    else:
        if not rc.N:
            raise CliError("char with a projector name needs --N", EXIT_PARSE)
        if rc.mode not in (None, Mode.ZETA):
            raise CliError("char needs --mode zeta", EXIT_PARSE)
        try:
            h = lookup(target, rc.N[0])
        except (KeyError, ValueError) as exc:
            raise CliError(str(exc), EXIT_PARSE) from None
        op = evaluate_cached(h.expr, EvalConfig(rc.N[0], Mode.ZETA))
    try:
        ch = character(op)
        poly = ch.sympoly()
    except ValueError as exc:
        raise CliError(f"no character: {exc}", EXIT_FAIL) from None
    if rc.fmt == "json":
        doc = {"schema": REPORT_SCHEMA, "N": op.N, "character": str(poly),
               "e_expansion": e_expansion_text(poly), "rank": ch.total(),
               "weights": [[list(w), m] for w, m in ch.mult]}
        _emit(json.dumps(doc, indent=1) + "\n", rc)
    else:
        _emit(f"{poly}\n= {e_expansion_text(poly)}\n", rc)
    return EXIT_OK


def cmd_list(rc: RunConfig) -> int:
    from .projectors import KINDS
    if rc.fmt == "json":
        doc = {"suites": {n: {"description": s.description, "N": list(s.n_values),
                              "k": list(s.k_values) if s.k_values else None}
                          for n, s in suites.SUITES.items()},
               "projectors": list(KINDS)}
        _emit(json.dumps(doc, indent=1) + "\n", rc)
        return EXIT_OK
    lines = [f"{n:10s} N={','.join(map(str, s.n_values))}"
             + (f" k={','.join(map(str, s.k_values))}" if s.k_values else "") + f"  {s.description}"
             for n, s in suites.SUITES.items()]
    lines.append("projectors: " + ", ".join(f"{k}:<arg>" for k in KINDS))
    _emit("\n".join(lines) + "\n", rc)
    return EXIT_OK


COMMANDS = {"eval": (cmd_eval, 1), "check": (cmd_check, 2), "suite": (cmd_suite, 1),
            "char": (cmd_char, 1), "list": (cmd_list, 0)}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="webcalc", description="Exact evaluation of gl(N) webs and annular webs.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("inputs", nargs="*", help="DSL files, a suite name or a projector key such as T:3")
    p.add_argument("--N", type=int_range, default=None, help="rank or range, e.g. 3 or 2..4")
    p.add_argument("--k", type=int_range, default=None, help="k range for the newton suite")
    p.add_argument("--mode", default=None, help="q, zeta or formalX")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    p.add_argument("--out", default=None, help="write the output here instead of stdout")
    p.add_argument("--strict", action="store_true", help="count documented discrepancies as failures")
    return p


def parse_args(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    try:
        mode = Mode.parse(ns.mode) if ns.mode else None
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    need = COMMANDS[ns.command][1]
    if len(ns.inputs) != need:
        raise CliError(f"{ns.command} takes {need} argument(s), got {len(ns.inputs)}", EXIT_PARSE)
    return RunConfig(ns.command, ns.N or [], ns.k, mode, max(1, ns.jobs), ns.fmt, ns.out, ns.strict,
                     list(ns.inputs))


def main(argv=None) -> int:
    try:
        rc = parse_args(sys.argv[1:] if argv is None else argv)
        return COMMANDS[rc.command][0](rc)
    except SystemExit as exc:  # argparse usage errors
        return EXIT_PARSE if exc.code else EXIT_OK
    except CliError as exc:
        print(f"webcalc: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
