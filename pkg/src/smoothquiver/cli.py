"""Command-line front end.

Exit status: 0 success, 2 unreadable or malformed input (with line and
column), 3 disagreement between engines or a failed internal check,
4 input the requested computation cannot handle.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import betti, cells, hilbert
from .errors import (
    ConsistencyError,
    InfeasibleTypeError,
    PreconditionError,
    QuiverInputError,
    UndefinedSlopeError,
)
from .qfile import QuiverFile, QuiverSyntaxError, format_quiver, read_quiver_file
from .qpoly import PolyQ
from .quiver import PolystableType, dot, frame, is_coprime, local_quiver, sub_vectors
from .suite import random_instances, run_suite

EXIT_OK, EXIT_PARSE, EXIT_DISAGREE, EXIT_INFEASIBLE = 0, 2, 3, 4
METHODS = ("recursion", "summation", "series", "multipartitions", "cells", "all")


class _Infeasible(Exception):
    pass


class _Disagreement(Exception):
    def __init__(self, message: str, results: dict):
        super().__init__(message)
        self.results = results


class Output:
    """Collects human or machine (key=value) lines."""

    def __init__(self, machine: bool, quiet: bool):
        self.machine, self.quiet, self.lines = machine, quiet, []

    def info(self, text: str):
        if not self.quiet and not self.machine:
            self.lines.append(text)

    def value(self, key: str, human: str, machine: Optional[str] = None):
        if self.machine:
            self.lines.append(f"{key}={human if machine is None else machine}")
        elif self.quiet:
            self.lines.append(human)
        else:
            self.lines.append(f"{key}: {human}")

    def poly(self, key: str, p: PolyQ):
        self.value(key, str(p), poly_machine(p))

    def text(self) -> str:
        return "".join(line + "\n" for line in self.lines)


def poly_machine(p: PolyQ) -> str:
    return " ".join(f"{k}:{c}" for k, c in sorted(p.coefficients.items(), reverse=True))


def _vec(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _parse_vector(text: str, k: int, what: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise QuiverSyntaxError(f"bad {what} {text!r}", 1, 1, "<command line>") from None
    if len(vals) != k or any(x < 0 for x in vals):
        raise QuiverSyntaxError(f"{what} needs {k} non-negative entries", 1, 1, "<command line>")
    return vals


# ---------------------------------------------------------------------------
# subcommands


def _engines(qf: QuiverFile, method: str, d, n, cache) -> dict[str, PolyQ]:
    Q, th = qf.quiver, qf.stability
    wanted = [m for m in METHODS[:-1] if method in (m, "all")]
    if not th.is_zero():
        if method in ("multipartitions", "cells"):
            raise _Infeasible(f"method '{method}' needs theta = 0")
        wanted = [m for m in wanted if m not in ("multipartitions", "cells")]
    out = {}
    for m in wanted:
        if m == "recursion":
            out[m] = betti.smooth_model_poincare_recursion(Q, th, d, n, cache)
        elif m == "summation":
            out[m] = betti.smooth_model_poincare_summation(Q, th, d, n) if any(d) else PolyQ(1)
        elif m == "series":
            out[m] = betti.smooth_model_poincare_series(Q, th, d, n, cache)
        elif m == "multipartitions":
            out[m] = hilbert.hilb_poincare_multipartitions(Q, d, n)
        else:
            out[m] = cells.hilb_poincare_cells(Q, d, n)
    if len(set(out.values())) > 1:
        raise _Disagreement(f"engines disagree at d={_vec(d)}", out)
    return out


def cmd_betti(qf: QuiverFile, args, out: Output):
    qf.require("d", "n")
    Q, th = qf.quiver, qf.stability
    if not any(qf.n):
        raise _Infeasible("framing vector n must be non-zero")
    cache = betti.PdCache()
    targets = [qf.d]
    if args.cap:
        cap = _parse_vector(args.cap, Q.num_vertices, "cap")
        if th.is_zero() or not any(qf.d):
            targets = [e for e in sub_vectors(cap) if any(e)]
        else:
            s = th.slope(qf.d)
            targets = [e for e in sub_vectors(cap) if any(e) and th.slope(e) == s]
    for e in targets:
        res = _engines(qf, args.method, e, qf.n, cache)
        p = next(iter(res.values()))
        if len(targets) > 1:
            out.poly(f"P{_vec(e)}", p)
        else:
            out.info(f"methods: {', '.join(res)}")
            out.value("dim", str(dot(qf.n, e) - Q.euler_form(e, e)))
            out.poly("poincare", p)


def cmd_pd(qf: QuiverFile, args, out: Output):
    qf.require("d")
    f = betti.p_d(qf.quiver, qf.stability, qf.d)
    out.value("P_d", str(f), f"{poly_machine(f.num)};{poly_machine(f.den)}")
    if any(qf.d) and is_coprime(qf.quiver, qf.stability, qf.d):
        out.poly("stable_poincare", betti.stable_poincare(qf.quiver, qf.stability, qf.d))


def cmd_euler(qf: QuiverFile, args, out: Output):
    qf.require("d")
    Q, d = qf.quiver, qf.d
    e = _parse_vector(args.e, Q.num_vertices, "e") if args.e else d
    out.value("euler_d_e", str(Q.euler_form(d, e)))
    out.value("euler_e_d", str(Q.euler_form(e, d)))
    if qf.n is not None:
        out.value("dim", str(dot(qf.n, d) - Q.euler_form(d, d)))


def cmd_hilb(qf: QuiverFile, args, out: Output):
    qf.require("d", "n")
    if qf.theta is not None and not qf.theta.is_zero():
        raise _Infeasible("hilb computes the theta = 0 case; the file declares a non-zero theta")
    Q, d, n = qf.quiver, qf.d, qf.n
    S = hilbert.multipartitions(Q, d, n)
    out.value("nonempty", "yes" if hilbert.hilb_nonempty(Q, d, n) else "no", str(hilbert.hilb_nonempty(Q, d, n)).lower())
    out.value("multipartitions", str(len(S)))
    if args.list:
        for lam in S:
            out.value("lambda", str(lam))
    method = args.method if args.method in ("multipartitions", "cells", "all") else "multipartitions"
    if method == "all":
        res = _engines(qf, "all", d, n, betti.PdCache())
        p = res["multipartitions"]
    elif method == "cells":
        p = cells.hilb_poincare_cells(Q, d, n)
    else:
        p = hilbert.hilb_poincare_multipartitions(Q, d, n)
    out.poly("poincare", p)


def cmd_nonempty(qf: QuiverFile, args, out: Output):
    qf.require("d")
    Q, th, d = qf.quiver, qf.stability, qf.d
    if qf.n is None:
        if not any(d):
            raise _Infeasible("semistable moduli need d != 0")
        ok = betti.sst_nonempty(Q, th, d)
        out.info("semistable moduli (no framing given)")
    else:
        if not any(qf.n):
            raise _Infeasible("framing vector n must be non-zero")
        ok = betti.smooth_model_nonempty(Q, th, d, qf.n)
        if th.is_zero() and ok != hilbert.hilb_nonempty(Q, d, qf.n):
            raise ConsistencyError("explicit and recursive non-emptiness criteria disagree")
    out.value("result", "nonempty" if ok else "empty")


def cmd_cells(qf: QuiverFile, args, out: Output):
    qf.require("d", "n")
    if qf.theta is not None and not qf.theta.is_zero():
        raise _Infeasible("cells exist for theta = 0 only")
    descs = cells.cell_descriptors(qf.quiver, qf.d, qf.n)
    if out.machine:
        for k, c in enumerate(descs, 1):
            out.lines.append(f"cell.{k}.forest={c.forest.notation()}")
            out.lines.append(f"cell.{k}.conditions={'; '.join(c.conditions())}")
            out.lines.append(f"cell.{k}.multipartition={c.multipartition}")
            out.lines.append(f"cell.{k}.dim={c.dimension}")
        out.lines.append(f"cells={len(descs)}")
    else:
        out.info(f"{len(descs)} cells")
        if descs:
            out.lines.append(cells.format_cell_table(descs))
    total = PolyQ({})
    for c in descs:
        total = total + PolyQ.monomial(c.dimension)
    out.poly("poincare", total)


def cmd_frame(qf: QuiverFile, args, out: Output):
    qf.require("d", "n")
    if not any(qf.n):
        raise _Infeasible("framing vector n must be non-zero")
    if not any(qf.d):
        raise _Infeasible("framing needs d != 0")
    fr = frame(qf.quiver, qf.d, qf.stability, qf.n)
    text = format_quiver(fr.extended, d=fr.d_hat, theta=fr.explicit_stability())
    if out.machine:
        out.lines.extend(f"line={ln}" for ln in text.splitlines())
    else:
        out.lines.append(text.rstrip("\n"))


def cmd_local_quiver(qf: QuiverFile, args, out: Output):
    qf.require("n")
    k = qf.quiver.num_vertices
    if not args.part:
        raise QuiverSyntaxError("local-quiver needs at least one --part VECTOR:MULTIPLICITY", 1, 1, "<command line>")
    parts, mults = [], []
    for spec in args.part:
        vec, _, z = spec.partition(":")
        parts.append(_parse_vector(vec, k, "part"))
        try:
            mults.append(int(z or 1))
        except ValueError:
            raise QuiverSyntaxError(f"bad multiplicity in {spec!r}", 1, 1, "<command line>") from None
    xi = PolystableType(parts, mults)
    if qf.d is not None and xi.total() != qf.d:
        raise _Infeasible(f"type sums to {_vec(xi.total())}, file declares d={_vec(qf.d)}")
    lq, dx, nx = local_quiver(qf.quiver, qf.n, xi)
    text = format_quiver(lq, d=dx, n=nx)
    if out.machine:
        out.lines.extend(f"line={ln}" for ln in text.splitlines())
    else:
        out.lines.append(text.rstrip("\n"))


def cmd_selftest(args, out: Output) -> int:
    insts = random_instances(args.count, seed=args.seed)
    failed = 0

    def progress(k, r):
        nonlocal failed
        if not r.ok:
            failed += 1
            out.lines.append(f"FAIL {r.instance.describe()}: {'; '.join(r.errors[:3])}")

    run_suite(insts, progress)
    out.value("instances", str(len(insts)))
    out.value("failures", str(failed))
    return EXIT_OK if failed == 0 else EXIT_DISAGREE


COMMANDS = {
    "euler": cmd_euler,
    "pd": cmd_pd,
    "betti": cmd_betti,
    "hilb": cmd_hilb,
    "nonempty": cmd_nonempty,
    "cells": cmd_cells,
    "frame": cmd_frame,
    "local-quiver": cmd_local_quiver,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true", help="key=value output")
    common.add_argument("--quiet", action="store_true", help="print results only")
    p = argparse.ArgumentParser(prog="smoothquiver", description="Poincare polynomials of smooth models of quiver moduli")
    sub = p.add_subparsers(dest="command", required=True)
    helps = {
        "euler": "Euler form values",
        "pd": "the rational function P_d",
        "betti": "Poincare polynomial of the smooth model",
        "hilb": "theta = 0: non-emptiness, multipartitions, Poincare polynomial",
        "nonempty": "decide non-emptiness",
        "cells": "list the cells of the Hilbert scheme",
        "frame": "print the framed quiver and dimension vector",
        "local-quiver": "print the local quiver of a polystable type",
    }
    for name, h in helps.items():
        sp = sub.add_parser(name, parents=[common], help=h)
        sp.add_argument("file", help="quiver file")
        sp.add_argument("--method", choices=METHODS, default="recursion" if name == "betti" else "multipartitions")
        sp.add_argument("--cap", help="report every e <= CAP in the slope class of d (betti)")
        if name == "euler":
            sp.add_argument("--e", help="second dimension vector (default d)")
        if name == "hilb":
            sp.add_argument("--list", action="store_true", help="list the multipartitions")
        if name == "local-quiver":
            sp.add_argument("--part", action="append", help="summand as VECTOR:MULTIPLICITY, e.g. 1,1,0:2")
    st = sub.add_parser("selftest", parents=[common], help="run the randomized cross-validation suite")
    st.add_argument("--count", type=int, default=200)
    st.add_argument("--seed", type=int, default=0)
    return p


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    out = Output(args.machine, args.quiet)
    status = EXIT_OK
    try:
        if args.command == "selftest":
            status = cmd_selftest(args, out)
        else:
            qf = read_quiver_file(args.file)
            COMMANDS[args.command](qf, args, out)
    except QuiverSyntaxError as exc:
        stdout.write(out.text())
        stderr.write(f"error: {exc}\n")
        return EXIT_PARSE
    except _Disagreement as exc:
        for m, p in exc.results.items():
            out.poly(m, p)
        stdout.write(out.text())
        stderr.write(f"error: {exc}\n")
        return EXIT_DISAGREE
    except ConsistencyError as exc:
        stdout.write(out.text())
        stderr.write(f"internal check failed: {exc}\n")
        return EXIT_DISAGREE
    except (_Infeasible, InfeasibleTypeError, PreconditionError, UndefinedSlopeError, QuiverInputError) as exc:
        stdout.write(out.text())
        stderr.write(f"infeasible: {exc}\n")
        return EXIT_INFEASIBLE
    stdout.write(out.text())
    return status


def main() -> None:
    sys.exit(run())
