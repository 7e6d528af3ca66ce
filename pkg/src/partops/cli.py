"""Command-line front end.

Subcommands: ``partitions`` (stream listings), ``count`` (exact counts),
``coeffs`` (named coefficient families), ``polys`` (polynomial families and
tables), ``bessel`` (leading-zero estimates), ``emit-symbolic`` (symbolic
coefficient sums), ``bench`` (generator/backend throughput with a correctness
gate).  Exit codes: 0 success, 1 computation or consistency failure, 2 usage
error.  All configuration comes from arguments; no environment variables.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import backends
from .benchmark import format_report, run_bench
from .classes import (PartitionClass, enumerate_class, is_self_conjugate,
                      transpose)
from .counting import (count_at_most_parts, count_partitions,
                       count_with_parts, is_pentagonal)
from .emission import EMIT_KINDS, emit_symbolic
from .enumeration import Order
from . import genfuncs
from . import named_sequences as ns
from .partition import format_partition, partition_json_line
from .rings import format_rational

__all__ = ["main"]


class CliError(Exception):
    """Computation or consistency failure (exit status 1)."""


def _add_class_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("partition class")
    g.add_argument("--min-element", type=int, default=1)
    g.add_argument("--max-element", type=int)
    g.add_argument("--max-multiplicity", type=int)
    g.add_argument("--distinct", action="store_true")
    g.add_argument("--exact-parts", type=int)
    g.add_argument("--max-parts", type=int)
    g.add_argument("--elements", metavar="SPEC",
                   help="odd, even, pentagonal, or a comma list like 1,2,5")
    g.add_argument("--require", type=int, action="append", default=[],
                   metavar="E", help="element that must occur (repeatable; "
                   "all must occur)")
    g.add_argument("--require-any", metavar="LIST",
                   help="comma list; at least one must occur")


def _class_from_args(args) -> PartitionClass:
    allowed = None
    if args.elements:
        spec = args.elements.strip().lower()
        if spec == "odd":
            allowed = lambda i: i % 2 == 1
        elif spec == "even":
            allowed = lambda i: i % 2 == 0
        elif spec == "pentagonal":
            allowed = is_pentagonal
        else:
            allowed = frozenset(int(tok) for tok in spec.split(","))
    return PartitionClass(
        min_element=args.min_element,
        max_element=args.max_element,
        max_multiplicity=args.max_multiplicity,
        distinct=args.distinct,
        exact_parts=args.exact_parts,
        max_parts=args.max_parts,
        allowed_elements=allowed,
        required_elements=frozenset(args.require),
        required_any=frozenset(int(t) for t in args.require_any.split(","))
        if args.require_any else frozenset(),
    )


def _grouped(n: int) -> str:
    s = str(n)
    neg = s.startswith("-")
    if neg:
        s = s[1:]
    chunks = []
    while s:
        chunks.append(s[-3:])
        s = s[:-3]
    return ("-" if neg else "") + " ".join(reversed(chunks))


def _decimal(q: Fraction, digits: int) -> str:
    sign = "-" if q < 0 else ""
    q = abs(q)
    scaled = q * 10 ** digits
    whole, rem = divmod(scaled.numerator, scaled.denominator)
    if 2 * rem >= scaled.denominator:
        whole += 1
    text = str(whole).rjust(digits + 1, "0")
    return f"{sign}{text[:-digits]}.{text[-digits:]}" if digits else sign + text


class _SplitWriter:
    """Rolls output into path.part000, path.part001, ... every n lines."""

    def __init__(self, path: str, every: int):
        self.path = path
        self.every = every
        self.lines = 0
        self.index = 0
        self.stream = None
        self._roll()

    def _roll(self):
        if self.stream:
            self.stream.close()
        self.stream = open(f"{self.path}.part{self.index:03d}", "w",
                           encoding="utf-8")
        self.index += 1
        self.lines = 0

    def write(self, text: str):
        self.stream.write(text)
        self.lines += text.count("\n")
        if self.lines >= self.every:
            self._roll()

    def close(self):
        if self.stream:
            self.stream.close()


def _cmd_partitions(args) -> int:
    klass = _class_from_args(args)
    if args.split and not args.output:
        raise CliError("--split needs --output")
    if args.output:
        out = (_SplitWriter(args.output, args.split) if args.split
               else open(args.output, "w", encoding="utf-8"))
    else:
        out = sys.stdout
    term = [0]

    def plain(view):
        term[0] += 1
        out.write(f"{term[0]}: {format_partition(view)}\n")

    def jsonl(view):
        out.write(partition_json_line(view) + "\n")

    def conj(view):
        term[0] += 1
        p = view.freeze()
        out.write(f"Partition {term[0]} is: {format_partition(p)} and its "
                  f"conjugate is: {format_partition(transpose(p), descending=True)}\n")

    def selfconj(view):
        p = view.freeze()
        if is_self_conjugate(p):
            term[0] += 1
            out.write(f"{term[0]}: {format_partition(p)}\n")

    if args.count_only:
        visitor = None
    elif args.conjugate:
        visitor = conj
    elif args.self_conjugate:
        visitor = selfconj
    else:
        visitor = jsonl if args.format == "jsonl" else plain

    n = enumerate_class(args.k, klass, visitor, order=Order(args.order),
                        backend=args.backend)
    if args.count_only:
        out.write(f"{n}\n")
    if out is not sys.stdout:
        out.close()
    return 0


def _cmd_count(args) -> int:
    klass = _class_from_args(args)
    default_class = klass == PartitionClass()
    if args.with_parts is not None:
        n = count_with_parts(args.k, args.with_parts)
    elif args.at_most_parts is not None:
        n = count_at_most_parts(args.k, args.at_most_parts)
    elif not default_class:
        if args.threads > 1:
            kern = backends.get_backend(args.backend)
            n = sum(enumerate_class(args.k, klass, backend=args.backend,
                                    branch=b)
                    for b in kern.brcp_first_branches(args.k, klass.min_element))
        else:
            n = enumerate_class(args.k, klass, backend=args.backend)
    else:
        route = args.route
        if route == "euler":
            n = count_partitions(args.k)
        elif route == "enumerate":
            if args.threads > 1:
                kern = backends.get_backend(args.backend)
                n = sum(kern.brcp_count(args.k, branch=b)
                        for b in kern.brcp_first_branches(args.k))
            else:
                n = enumerate_class(args.k, klass, backend=args.backend)
        else:
            n = genfuncs.partition_number(args.k, route)
    print(_grouped(n) if args.grouped else n)
    return 0


def _parse_rho(text: str) -> Fraction:
    return Fraction(text)


def _cmd_coeffs(args) -> int:
    fam = args.family
    if fam in ("cosecant", "secant", "reciprocal-log"):
        table = ns._family_table(fam, args.k)
        values = [table[i] for i in range(args.k + 1)]
        for k, v in enumerate(values):
            text = _decimal(v, args.decimal) if args.decimal else format_rational(v)
            print(f"{k}\t{text}")
        return 0
    if fam in ("gen-cosecant", "gen-secant", "gen-reciprocal-log"):
        base = fam[4:]
        pol = ns.generalized(base, args.k, args.route or "power")
        if args.rho is not None:
            val = pol.substitute(_parse_rho(args.rho))
            print(_decimal(val, args.decimal) if args.decimal
                  else format_rational(val))
        else:
            print(pol.render())
        return 0
    if fam == "bessel-h":
        for k in range(args.k + 1):
            print(f"{k}\t{ns.bessel_h(k).render()}")
        return 0
    raise CliError(f"unknown family {fam!r}")


def _cmd_polys(args) -> int:
    what = args.what
    route = args.route or "default"
    if what == "table-2a":
        print("k\tq(k,w)\tp(k,w)")
        for k in range(args.k + 1):
            print(f"{k}\t{genfuncs.q_poly(k).render()}\t{genfuncs.p_poly(k).render()}")
        return 0
    if what == "table-2b":
        print("k\tq(k,w,2)\tq(k,w,3)")
        for k in range(args.k + 1):
            qkr = genfuncs.q_omega_rho(k)
            two = qkr.substitute({"rho": Fraction(2)}).to_polynomial("w")
            three = qkr.substitute({"rho": Fraction(3)}).to_polynomial("w")
            print(f"{k}\t{two.render()}\t{three.render()}")
        return 0
    if what == "table-3":
        print("k\tQP(k; w,b,a)")
        for k in range(args.k + 1):
            print(f"{k}\t{genfuncs.qp_poly(k).render()}")
        return 0
    if what == "table-4":
        print("k\tHP(k; w,x,y)")
        for k in range(args.k + 1):
            print(f"{k}\t{genfuncs.hp_poly(k).render()}")
        return 0
    if what == "q":
        print(genfuncs.q_poly(args.k, route).render())
    elif what == "p":
        print(genfuncs.p_poly(args.k, route).render())
    elif what == "gamma":
        print(genfuncs.gamma_poly(args.k).render())
    elif what == "q-rho":
        pol = genfuncs.q_omega_rho(args.k, route)
        if args.rho is not None:
            pol = pol.substitute({"rho": _parse_rho(args.rho)}).to_polynomial("w")
        print(pol.render())
    elif what == "p-rho":
        pol = genfuncs.p_omega_rho(args.k)
        if args.rho is not None:
            pol = pol.substitute({"rho": _parse_rho(args.rho)}).to_polynomial("w")
        print(pol.render())
    elif what == "qp":
        print(genfuncs.qp_poly(args.k).render())
    elif what == "hp":
        print(genfuncs.hp_poly(args.k).render())
    else:
        raise CliError(f"unknown polynomial family {what!r}")
    return 0


def _scalar(text: str) -> float:
    return float(Fraction(text)) if "/" in text else float(text)


def _parse_nu(text: str) -> complex:
    """Order values like -3/2, 1.5, -1/3+1j, 3/2-1j."""
    t = text.replace(" ", "")
    if not t.endswith("j"):
        return complex(_scalar(t), 0.0)
    body = t[:-1]
    re_part, im_part = "", body
    for i in range(len(body) - 1, 0, -1):
        if body[i] in "+-" and body[i - 1] not in "eE":
            re_part, im_part = body[:i], body[i:]
            break
    if im_part in ("", "+", "-"):
        im_part += "1"
    return complex(_scalar(re_part) if re_part else 0.0, _scalar(im_part))


def _cmd_bessel(args) -> int:
    nu = _parse_nu(args.nu)
    plus, minus = ns.bessel_zero_estimate(nu, args.k)
    for root in (plus, minus):
        if abs(root.imag) < 1e-15:
            print(f"{root.real:+.15g}")
        else:
            print(f"{root.real:+.15g}{root.imag:+.15g}j")
    return 0


def _cmd_emit(args) -> int:
    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    emit_symbolic(args.what, args.k, out, wrap=args.wrap)
    if out is not sys.stdout:
        out.close()
    return 0


def _cmd_bench(args) -> int:
    ks = [int(tok) for tok in args.k.split(",")]
    orders = args.orders.split(",")
    if args.backends == "both":
        names = backends.available_backends()
    else:
        names = [args.backends]
    try:
        results = run_bench(ks, orders, names, sink=args.sink,
                            sink_path=args.output, repeat=args.repeat)
    except RuntimeError as exc:
        raise CliError(str(exc)) from exc
    sys.stdout.write(format_report(results, args.format))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="partops",
        description="Exact partition enumeration, counting, coefficient "
                    "families, and symbolic emission.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partitions", help="stream partitions of k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--order", choices=["brcp", "revlex", "ascending"],
                   default="brcp")
    p.add_argument("--format", choices=["text", "jsonl"], default="text")
    p.add_argument("--conjugate", action="store_true",
                   help="print each partition with its conjugate")
    p.add_argument("--self-conjugate", action="store_true",
                   help="print only self-conjugate partitions")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--output", metavar="PATH")
    p.add_argument("--split", type=int, metavar="N",
                   help="roll output files every N terms (needs --output)")
    p.add_argument("--backend", choices=["auto", "python", "compiled"],
                   default="auto")
    _add_class_flags(p)
    p.set_defaults(fn=_cmd_partitions)

    p = sub.add_parser("count", help="exact partition counts")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--route",
                   choices=["euler", "enumerate", "from-q", "from-gamma"],
                   default="euler")
    p.add_argument("--with-parts", type=int, metavar="M")
    p.add_argument("--at-most-parts", type=int, metavar="M")
    p.add_argument("--grouped", action="store_true",
                   help="group digits with spaces")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--backend", choices=["auto", "python", "compiled"],
                   default="auto")
    _add_class_flags(p)
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("coeffs", help="named coefficient families")
    p.add_argument("--family", required=True,
                   choices=["cosecant", "secant", "reciprocal-log",
                            "gen-cosecant", "gen-secant", "gen-reciprocal-log",
                            "bessel-h"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--rho", metavar="Q",
                   help="rational value for the generalized families")
    p.add_argument("--decimal", type=int, metavar="DIGITS",
                   help="decimal output with this many digits")
    p.add_argument("--route", choices=["power", "inner"])
    p.set_defaults(fn=_cmd_coeffs)

    p = sub.add_parser("polys", help="polynomial families and tables")
    p.add_argument("--what", required=True,
                   choices=["q", "p", "gamma", "q-rho", "p-rho", "qp", "hp",
                            "table-2a", "table-2b", "table-3", "table-4"])
    p.add_argument("--k", type=int, required=True,
                   help="order (or kmax for tables)")
    p.add_argument("--rho", metavar="Q")
    p.add_argument("--route")
    p.set_defaults(fn=_cmd_polys)

    p = sub.add_parser("bessel", help="leading Bessel-zero estimate")
    p.add_argument("--nu", required=True,
                   help="order: rational like -3/2 or complex like -1/3+1j")
    p.add_argument("--k", type=int, default=17,
                   help="coefficient order used in the ratio")
    p.set_defaults(fn=_cmd_bessel)

    p = sub.add_parser("emit-symbolic", help="symbolic coefficient sums")
    p.add_argument("--what", required=True, choices=list(EMIT_KINDS))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--wrap", action="store_true",
                   help="three terms per line with trailing plus")
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(fn=_cmd_emit)

    p = sub.add_parser("bench", help="generator/backend throughput")
    p.add_argument("--k", required=True, metavar="LIST",
                   help="comma list of k values")
    p.add_argument("--orders", default="brcp,revlex,ascending")
    p.add_argument("--backends", default="both",
                   choices=["both", "auto", "python", "compiled"])
    p.add_argument("--sink", choices=["null", "file"], default="null")
    p.add_argument("--output", metavar="PATH",
                   help="file sink target (with --sink file)")
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.add_argument("--repeat", type=int, default=1)
    p.set_defaults(fn=_cmd_bench)
    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ArithmeticError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return 1
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
