import io
import re
from fractions import Fraction as F

import pytest

from partops import SeriesSpec, count_partitions, expand
from partops.emission import emit_symbolic

# printed reference outputs, compared after dropping all whitespace (the
# documented normalization: spacing and line breaks are typesetting noise)
PRINTED_DS4 = """DS[4,n_]:= p[4,n] q[1] a + p[1,n] p[3,n] q[2] a^(2) 2!
+ p[1,n]^(2) p[2,n] q[3] a^(3) 3!/2! + p[1,n]^(4) q[4] a^(4)
+ p[2,n]^(2) q[2] a^(2)"""

PRINTED_ES4 = """ES[4,n_]:= -DS[0,0]^(-2) DS[4,n] + DS[0,0]^(-3) DS[1,n] DS[3,n] 2!
- DS[0,0]^(-4) DS[1,n]^(2) DS[2,n] 3!/2! + DS[0,0]^(-5) DS[1,n]^(4)
+ DS[0,0]^(-3) DS[2,n]^(2)"""

PRINTED_PFN6 = """p[6]:= ((-1)^(1)) ((-1)^(2)) (-1)^(2) 2! + ((-1)^(1))^(4)
((-1)^(1)) (-1)^(5) 5!/4! +
((-1)^(1))^(6) (-1)^(6) + ((-1)^(1))^(2) ((-1)^(1))^(2)
(-1)^(4) 4!/(2! 2!) + ((-1)^(1))^(3) (-1)^(3)"""

PRINTED_DISPFNPOLY6 = """Q[6,-w_]:= DP[6,w] (-1) + DP[1,w] DP[5,w] (-1)^(2) +
DP[1,w]^(2) DP[4,w] (-1)^(3)/2! + DP[1,w]^(3) DP[3,w] (-1)^(4)/3! +
DP[1,w]^(4) DP[2,w] (-1)^(5)/4! +
DP[1,w]^(6) (-1)^(6)/6! + DP[1,w]^(2) DP[2,w]^(2) (-1)^(4)/(2! 2!)
+ DP[1,w] DP[2,w] DP[3,w] (-1)^(3) +
DP[2,w] DP[4,w] (-1)^(2) + DP[2,w]^(3) (-1)^(3)/3! + DP[3,w]^(2)
(-1)^(2)/2!

P[6,w_]:= DP[6,w]  + DP[1,w] DP[5,w]  +
DP[1,w]^(2) DP[4,w] /2! + DP[1,w]^(3) DP[3,w] /3! + DP[1,w]^(4) DP[2,w] /4! +
DP[1,w]^(6) /6! + DP[1,w]^(2) DP[2,w]^(2) /(2! 2!) + DP[1,w] DP[2,w] DP[3,w]  +
DP[2,w] DP[4,w]  + DP[2,w]^(3) /3! + DP[3,w]^(2) /2!"""


def emit(kind, k, **kw):
    buf = io.StringIO()
    emit_symbolic(kind, k, buf, **kw)
    return buf.getvalue()


def squeeze(text):
    return "".join(text.split())


@pytest.mark.parametrize("kind,k,want", [
    ("DS", 4, PRINTED_DS4),
    ("ES", 4, PRINTED_ES4),
    ("pfn", 6, PRINTED_PFN6),
    ("dispfnpoly", 6, PRINTED_DISPFNPOLY6),
])
def test_emission_matches_printed_output(kind, k, want):
    assert squeeze(emit(kind, k)) == squeeze(want)


def test_ds_term_count_is_partition_count():
    for k in range(1, 9):
        text = emit("DS", k)
        assert text.count("q[") == count_partitions(k), k


def test_es_first_order():
    assert squeeze(emit("ES", 1)) == squeeze("ES[1,n_]:= -DS[0,0]^(-2) DS[1,n]")


def test_wrap_three_terms_per_line():
    text = emit("DS", 7, wrap=True).rstrip("\n")
    lines = text.split("\n")
    for line in lines[:-1]:
        assert line.rstrip().endswith("+")
        assert line.count("q[") == 3
    assert sum(line.count("q[") for line in lines) == count_partitions(7)


TOKEN = re.compile(
    r"p\[(\d+),n\](?:\^\((\d+)\))?"      # element factor
    r"|q\[(\d+)\]"                       # outer coefficient
    r"|a(?:\^\((\d+)\))?"                # scalar power
    r"|(\d+)!(/\(?[\d! ]+\)?)?"          # multinomial
)


def eval_ds_term(term, p_values):
    """Evaluate one emitted term with p[i,n] -> p_values[i], q[N] -> 1,
    a -> 1."""
    from math import factorial
    value = F(1)
    for m in TOKEN.finditer(term):
        elem, elem_pow, _q, _a_pow, mult_num, mult_den = m.groups()
        if elem is not None:
            value *= p_values[int(elem)] ** int(elem_pow or 1)
        elif mult_num is not None:
            value *= factorial(int(mult_num))
            if mult_den:
                for d in re.findall(r"(\d+)!", mult_den):
                    value /= factorial(int(d))
    return value


def test_emitted_ds_evaluates_to_expansion():
    import random
    rng = random.Random(3)
    for k in range(1, 11):
        p_values = {i: F(rng.randint(-5, 5), rng.randint(1, 5))
                    for i in range(1, k + 1)}
        text = emit("DS", k)
        body = text.split(":=", 1)[1]
        total = sum(eval_ds_term(term, p_values)
                    for term in body.replace("\n", " ").split("+"))
        spec = SeriesSpec([p_values[i] for i in range(1, k + 1)],
                          outer_q=[F(1)] * (k + 1), a=1)
        assert total == expand(spec)[k], k


def test_emitted_pfn_evaluates_to_partition_count():
    # substitute the (-1) powers literally and evaluate
    from math import factorial
    for k in (5, 6, 9):
        text = emit("pfn", k)
        body = text.split(":=", 1)[1].replace("\n", " ")
        total = F(0)
        for term in body.split("+"):
            value = F(1)
            for base, power in re.findall(r"\(\(-1\)\^\((\d+)\)\)(?:\^\((\d+)\))?",
                                          term):
                value *= F(-1) ** int(base) * 1 if not power else \
                    (F(-1) ** int(base)) ** int(power)
            phase = re.search(r" \(-1\)(?:\^\((\d+)\))?", term)
            if phase:
                value *= F(-1) ** int(phase.group(1) or 1)
            mult = re.search(r"(\d+)!(/\(?[\d! ]+\)?)?", term)
            if mult:
                value *= factorial(int(mult.group(1)))
                if mult.group(2):
                    for d in re.findall(r"(\d+)!", mult.group(2)):
                        value /= factorial(int(d))
            total += value
        assert total == count_partitions(k), k


def test_emission_rejects_bad_input():
    with pytest.raises(ValueError):
        emit("DS", 0)
    with pytest.raises(ValueError):
        emit("nope", 3)
