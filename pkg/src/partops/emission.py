"""Symbolic emission of coefficient formulas, one term per partition.

Four formats, matching the classic C-and-computer-algebra pipeline where a
partition generator prints each coefficient as a sum of symbolic terms to be
evaluated by a computer-algebra system:

* ``DS``  -- ``DS[k,n_]:=`` followed by one term per partition: the element
  factors ``p[i,n]^(f)``, the outer factor ``q[N] a^(N)``, and the multinomial
  ``N!/(a! b!)`` (omitted entirely when it cancels, i.e. when the partition
  has a single distinct element).
* ``ES``  -- reciprocal-series terms ``+-DS[0,0]^(-(N+1)) DS[i,n]^(f) ...``
  with the sign carrying the (-1)^N phase.
* ``pfn`` -- the partition-function sum over pentagonal-element partitions,
  each element i rendered as ``((-1)^(j))`` through its pentagonal index j,
  followed by the ``(-1)^(N)`` phase and the multinomial.
* ``dispfnpoly`` -- two blocks ``Q[k,-w_]:=`` and ``P[k,w_]:=`` over all
  partitions with divisor-polynomial factors ``DP[i,w]^(f)`` and the bare
  ``1/(a! b!)`` weight (no N! numerator in this family).

Terms stream in tree order.  ``DS``/``ES`` default to one term per line; the
``wrap3`` style puts three terms per line with a trailing ``+``, the format
used when feeding very large orders downstream.
"""

from __future__ import annotations

from typing import Callable, List

from .counting import pentagonal_index
from .classes import PENTAGONAL_ELEMENTS, enumerate_class
from .enumeration import enumerate_partitions

__all__ = ["emit_symbolic", "EMIT_KINDS"]

EMIT_KINDS = ("DS", "ES", "pfn", "dispfnpoly")


def _multinomial_text(items, n_parts: int, *, with_numerator: bool) -> str:
    """Multinomial factor text, or '' when nothing should print.

    ``with_numerator`` selects the N!/(...) form (which cancels when all
    parts sit on one distinct element) versus the bare 1/(...) form used by
    the divisor-polynomial family (printed whenever any frequency exceeds 1).
    """
    repeated = [f for _, f in items if f > 1]
    if with_numerator:
        if n_parts <= 1 or len(items) <= 1:
            return ""
        text = f"{n_parts}!"
        if repeated:
            inner = " ".join(f"{f}!" for f in repeated)
            text += f"/({inner})" if len(repeated) > 1 else f"/{inner}"
        return text
    if not repeated:
        return ""
    inner = " ".join(f"{f}!" for f in repeated)
    return f"/({inner})" if len(repeated) > 1 else f"/{inner}"


def _emit_stream(k: int, header: str, term_text: Callable, out,
                 *, klass=None, separator: str = "plus-newline") -> None:
    """Drive the enumeration, writing header, separators and term texts.

    Separator styles: ``plus-newline`` (one term per line, later lines led by
    '+'), ``signed-newline`` (term text starts with its own sign),
    ``wrap3`` ('+ ' between terms, newline after every third separator), and
    ``spaced-wrap3`` (' + ' between terms, same wrapping rule).
    """
    out.write(header)
    state = {"terms": 0, "seps": 0}

    def visit(view):
        first = state["terms"] == 0
        if not first:
            if separator == "plus-newline":
                out.write("\n+")
            elif separator == "signed-newline":
                out.write("\n")
            elif separator == "wrap3":
                out.write("+ ")
                state["seps"] += 1
                if state["seps"] % 3 == 0:
                    out.write("\n")
            elif separator == "spaced-wrap3":
                out.write(" + ")
                state["seps"] += 1
                if state["seps"] % 3 == 0:
                    out.write("\n")
        state["terms"] += 1
        out.write(term_text(view))

    if klass is None:
        enumerate_partitions(k, visit)
    else:
        enumerate_class(k, klass, visit)
    out.write("\n")


def _ds_term(view) -> str:
    bits: List[str] = []
    items = view.items()
    n = view.num_parts
    for e, f in items:
        bits.append(f"p[{e},n]^({f})" if f > 1 else f"p[{e},n]")
    bits.append(f"q[{n}] a^({n})" if n > 1 else f"q[{n}] a")
    mult = _multinomial_text(items, n, with_numerator=True)
    if mult:
        bits.append(mult)
    return " ".join(bits) + " "


def _es_term(view) -> str:
    items = view.items()
    n = view.num_parts
    sign = "-" if n % 2 else "+"
    bits = [f"DS[0,0]^(-{n + 1})"]
    for e, f in items:
        bits.append(f"DS[{e},n]^({f})" if f > 1 else f"DS[{e},n]")
    mult = _multinomial_text(items, n, with_numerator=True)
    if mult:
        bits.append(mult)
    return sign + " ".join(bits) + " "


def _pfn_term(view) -> str:
    items = view.items()
    n = view.num_parts
    bits: List[str] = []
    for e, f in items:
        j = pentagonal_index(e)
        base = f"((-1)^({j}))"
        bits.append(f"{base}^({f})" if f > 1 else base)
    bits.append(f"(-1)^({n})" if n > 1 else "(-1)")
    mult = _multinomial_text(items, n, with_numerator=True)
    if mult:
        bits.append(mult)
    return " ".join(bits) + " "


def _dp_term(view, *, phased: bool) -> str:
    items = view.items()
    n = view.num_parts
    bits: List[str] = []
    for e, f in items:
        bits.append(f"DP[{e},w]^({f})" if f > 1 else f"DP[{e},w]")
    text = " ".join(bits)
    if phased:
        text += " (-1)" + (f"^({n})" if n > 1 else "")
    mult = _multinomial_text(items, n, with_numerator=False)
    return text + mult + " "


def emit_symbolic(kind: str, k: int, out, *, wrap: bool = False) -> None:
    """Write the symbolic expansion of order k to a text stream.

    ``wrap=True`` selects the three-terms-per-line layout for DS/ES.
    """
    if k < 1:
        raise ValueError("symbolic emission needs k >= 1")
    if kind == "DS":
        _emit_stream(k, f"DS[{k},n_]:= ", _ds_term, out,
                     separator="wrap3" if wrap else "plus-newline")
    elif kind == "ES":
        _emit_stream(k, f"ES[{k},n_]:= ", _es_term, out,
                     separator="signed-newline")
    elif kind == "pfn":
        _emit_stream(k, f"p[{k}]:= ", _pfn_term, out,
                     klass=PENTAGONAL_ELEMENTS, separator="wrap3")
    elif kind == "dispfnpoly":
        _emit_stream(k, f"Q[{k},-w_]:= ", lambda v: _dp_term(v, phased=True),
                     out, separator="spaced-wrap3")
        out.write("\n")
        _emit_stream(k, f"P[{k},w_]:= ", lambda v: _dp_term(v, phased=False),
                     out, separator="spaced-wrap3")
    else:
        raise ValueError(f"unknown emission kind {kind!r}; "
                         f"expected one of {EMIT_KINDS}")
