# Copyright 2024 Lauricella Matrix Functions.
# License LGPL-3 or later (http://www.gnu.org/licenses/lgpl).

"""Transcription of the recursion and contiguous relations.

Entries are written in the notation of ``identity_notation``. Unit-step
formulas are given once as a body with a ``{s}`` placeholder for the
shifted target; the raising form sums ``n1 = 1..n`` over ``target + n1``
and the lowering form subtracts the sum over ``n1 = 0..n-1`` of
``target - n1``. C-lowering bodies use ``{c}`` for ``C + (2 - n1)I`` and
``{inv}`` for ``(C - n1 I)^-1 (C - (n1 - 1)I)^-1``.
"""

from .lauricella_kind import LauricellaKind
from .recursion_catalog import FAMILY_PREFIX, IdentityEntry, ShiftSpec, interchange


def _entry(tag, equation, lhs, rhs, form=None, hypotheses="", corrected=None, note=""):
    kind = LauricellaKind(tag)
    return IdentityEntry(
        family=FAMILY_PREFIX.get(kind.tag, kind.tag),
        kind=kind,
        equation=equation,
        lhs=ShiftSpec.parse(lhs),
        rhs=tuple(rhs),
        hypotheses=tuple(hypotheses.split()),
        form=form,
        corrected=tuple(corrected) if corrected else None,
        note=note,
    )


def _unit(tag, equations, target, bodies, hypotheses="", printed=None, note=""):
    """Raising and lowering unit-step forms, ``printed`` maps a direction
    to its right-hand side when the printed one differs."""
    printed = printed or {}
    up = ["F"] + ["sum[n1=1..n] " + b.format(s=target + "+n1") for b in bodies]
    down = ["F"] + ["- sum[n1=0..n-1] " + b.format(s=target + "-n1") for b in bodies]
    entries = []
    for equation, direction, rhs in (
        (equations[0], "+n", up),
        (equations[1], "-n", down),
    ):
        if direction in printed:
            entries.append(
                _entry(tag, equation, target + direction, printed[direction], "unit",
                       hypotheses, corrected=rhs, note=note)
            )
        else:
            entries.append(
                _entry(tag, equation, target + direction, rhs, "unit", hypotheses)
            )
    return entries


def _closed(tag, equations, target, form, raising, lowering, hypotheses=""):
    return [
        _entry(tag, equations[0], target + "+n", [raising], form, hypotheses),
        _entry(tag, equations[1], target + "-n", [lowering], form, hypotheses),
    ]


def _lower_c(tag, equation, target, bodies, hypotheses=""):
    fill = {
        "c": target + "+2-n1",
        "inv": "(%(t)s-n1)^-1 (%(t)s-n1+1)^-1" % {"t": target},
    }
    rhs = ["F"] + ["sum[n1=1..n] " + b.format(**fill) for b in bodies]
    return _entry(tag, equation, target + "-n", rhs, None, hypotheses)


def _family_a():
    hyp = "A:B_* B_*:B_* C_*:C_*"
    seed = "each[j] x_j B_j F[A+1,B_j+1,C_j+1] C_j^-1"
    return [
        *_unit("GA", ("c4eq1", "c43eq2"), "A",
               ["each[j] x_j B_j F[{s},B_j+1,C_j+1] C_j^-1"], hyp),
        _entry("GA", "c4meq1", "A+1", ["F", seed], "contiguous", hyp),
        _entry("GA", "c4meq2", "A+2",
               ["F", seed, "each[j] x_j B_j F[A+2,B_j+1,C_j+1] C_j^-1"],
               "twostep", hyp),
        _entry("GA", "c4meq3", "A-1",
               ["F", "- each[j] x_j B_j F[B_j+1,C_j+1] C_j^-1"], "contiguous", hyp),
        *_closed(
            "GA", ("c43eq3", "c43eq4"), "A", "multinomial",
            "sum[n_j<=n] multinom (B_j)_n_j x_j^n_j "
            "F[A+N,B_j+n_j,C_j+n_j] (C_j)^-1_n_j",
            "sum[n_j<=n] multinom (B_j)_n_j (-x_j)^n_j F[B_j+n_j,C_j+n_j] (C_j)^-1_n_j",
            hyp,
        ),
        *_unit("GA", ("c43eq5", "c43eq6"), "B_i",
               ["x_i A F[A+1,{s},C_i+1] C_i^-1"], "C_*:C_*"),
        *_closed(
            "GA", ("c43eq7", "c43eq8"), "B_i", "binomial",
            "sum[n1=0..n] binom (A)_n1 x_i^n1 F[A+n1,B_i+n1,C_i+n1] (C_i)^-1_n1",
            "sum[n1=0..n] binom (A)_n1 (-x_i)^n1 F[A+n1,C_i+n1] (C_i)^-1_n1",
            "C_*:C_*",
        ),
        _lower_c("GA", "c43eq9", "C_i",
                 ["x_i A B_i F[A+1,B_i+1,{c}] {inv}"], hyp),
    ]


def _family_b():
    hyp = "A_*:B_*"
    written = [
        *_unit("GB", ("c43eq11", "c43eq12"), "A_i",
               ["x_i B_i F[{s},B_i+1,C+1] C^-1"], hyp),
        *_closed(
            "GB", ("c43eq13", "c43eq14"), "A_i", "binomial",
            "sum[n1=0..n] binom (B_i)_n1 x_i^n1 F[A_i+n1,B_i+n1,C+n1] (C)^-1_n1",
            "sum[n1=0..n] binom (B_i)_n1 (-x_i)^n1 F[B_i+n1,C+n1] (C)^-1_n1",
            hyp,
        ),
    ]
    return written + [interchange(e, [("A_i", "B_i")]) for e in written] + [
        _lower_c("GB", "c43eq15", "C",
                 ["each[j] x_j A_j B_j F[A_j+1,B_j+1,{c}] {inv}"], hyp),
        _entry(
            "GB", "c4aeq15", "C-1",
            ["F", "each[j] x_j A_j B_j F[A_j+1,B_j+1,C+1] (C-1)^-1 C^-1"],
            "contiguous", hyp,
            note="Left-hand side printed as C - nI; the relation holds for a "
            "unit step.",
        ),
    ]


def _family_c():
    hyp = "A:B"
    written = [
        *_unit("GC", ("c43eq16", "c43eq17"), "A",
               ["each[j] x_j B F[{s},B+1,C_j+1] C_j^-1"], hyp),
        *_closed(
            "GC", ("c43eq18", "c43eq19"), "A", "multinomial",
            "sum[n_j<=n] multinom x_j^n_j (B)_N F[A+N,B+N,C_j+n_j] (C_j)^-1_n_j",
            "sum[n_j<=n] multinom (-x_j)^n_j (B)_N F[B+N,C_j+n_j] (C_j)^-1_n_j",
            hyp,
        ),
    ]
    return written + [interchange(e, [("A", "B")]) for e in written] + [
        _lower_c("GC", "c43eq20", "C_i",
                 ["x_i A B F[A+1,B+1,{c}] {inv}"], "A:B C_*:C_*"),
    ]


def _family_d():
    hyp = "A:B_*"
    return [
        *_unit("GD", ("c43eq21", "c43eq22"), "A",
               ["each[j] x_j B_j F[{s},B_j+1,C+1] C^-1"], hyp),
        *_closed(
            "GD", ("c43eq23", "c43eq24"), "A", "multinomial",
            "sum[n_j<=n] multinom x_j^n_j (B_j)_n_j F[A+N,B_j+n_j,C+N] (C)^-1_N",
            "sum[n_j<=n] multinom (-x_j)^n_j (B_j)_n_j F[B_j+n_j,C+N] (C)^-1_N",
            hyp,
        ),
        *_unit("GD", ("c43eq25", "c43eq26"), "B_i", ["x_i A F[A+1,{s},C+1] C^-1"]),
        *_closed(
            "GD", ("c43eq27", "c43eq28"), "B_i", "binomial",
            "sum[n1=0..n] binom (A)_n1 x_i^n1 F[A+n1,B_i+n1,C+n1] (C)^-1_n1",
            "sum[n1=0..n] binom (A)_n1 (-x_i)^n1 F[A+n1,C+n1] (C)^-1_n1",
        ),
        _lower_c("GD", "c43eq29", "C",
                 ["each[j] x_j A B_j F[A+1,B_j+1,{c}] {inv}"], hyp),
    ]


def _f3():
    return [
        *_unit("F3", ("c43eq30", "c43eq31"), "A_1",
               ["x_1 B_1 F[{s},B_1+1,C_1+1] C_1^-1"],
               "A_1:B_1 A_2:B_1 C_1:C_2 C_1:C_3"),
        *_closed(
            "F3", ("c43eq32", "c43eq33"), "A_1", "binomial",
            "sum[n1=0..n] binom (B_1)_n1 x_1^n1 F[A_1+n1,B_1+n1,C_1+n1] (C_1)^-1_n1",
            "sum[n1=0..n] binom (B_1)_n1 (-x_1)^n1 F[B_1+n1,C_1+n1] (C_1)^-1_n1",
            "A_1:B_1 A_2:B_1 C_1:C_2 C_1:C_3",
        ),
        *_unit("F3", ("c43eq34", "c43eq35"), "A_2",
               ["x_2 F[{s},B_2+1,C_2+1] B_2 C_2^-1",
                "x_3 B_1 F[{s},B_1+1,C_3+1] C_3^-1"],
               "A_1:B_1 A_2:B_1 B_2:C_1 B_2:C_2 B_2:C_3 C_2:C_3"),
        *_closed(
            "F3", ("c43eq36", "c43eq37"), "A_2", "multinomial",
            "sum[n1,n2<=n] multinom (B_1)_n2 x_2^n1 x_3^n2 "
            "F[A_2+N,B_1+n2,B_2+n1,C_2+n1,C_3+n2] (B_2)_n1 (C_2)^-1_n1 (C_3)^-1_n2",
            "sum[n1,n2<=n] multinom (B_1)_n2 (-x_2)^n1 (-x_3)^n2 "
            "F[B_1+n2,B_2+n1,C_2+n1,C_3+n2] (B_2)_n1 (C_2)^-1_n1 (C_3)^-1_n2",
            "A_1:B_1 A_2:B_1 B_2:C_1 B_2:C_2 B_2:C_3 C_2:C_3",
        ),
        *_unit("F3", ("c43eq38", "c43eq39"), "B_1",
               ["x_1 A_1 F[A_1+1,{s},C_1+1] C_1^-1",
                "x_3 A_2 F[A_2+1,{s},C_3+1] C_3^-1"],
               "A_1:A_2 C_1:C_2 C_1:C_3"),
        *_closed(
            "F3", ("c43eq40", "c43eq41"), "B_1", "multinomial",
            "sum[n1,n2<=n] multinom (A_1)_n1 (A_2)_n2 x_1^n1 x_3^n2 "
            "F[A_1+n1,A_2+n2,B_1+N,C_1+n1,C_3+n2] (C_1)^-1_n1 (C_3)^-1_n2",
            "sum[n1,n2<=n] multinom (A_1)_n1 (A_2)_n2 (-x_1)^n1 (-x_3)^n2 "
            "F[A_1+n1,A_2+n2,C_1+n1,C_3+n2] (C_1)^-1_n1 (C_3)^-1_n2",
            "A_1:A_2 C_1:C_2 C_1:C_3",
        ),
        *_unit("F3", ("c43eq42", "c43eq43"), "B_2",
               ["x_2 A_2 F[A_2+1,{s},C_2+1] C_2^-1"], "A_1:A_2 C_2:C_3"),
        *_closed(
            "F3", ("c43eq44", "c43eq45"), "B_2", "binomial",
            "sum[n1=0..n] binom (A_2)_n1 x_2^n1 F[A_2+n1,B_2+n1,C_2+n1] (C_2)^-1_n1",
            "sum[n1=0..n] binom (A_2)_n1 (-x_2)^n1 F[A_2+n1,C_2+n1] (C_2)^-1_n1",
            "A_1:A_2 C_2:C_3",
        ),
        _lower_c("F3", "c43eq46", "C_1",
                 ["x_1 A_1 B_1 F[A_1+1,B_1+1,{c}] {inv}"], "A_1:B_1 A_2:B_1 C_1:C_2"),
        _lower_c("F3", "c43eq47", "C_2",
                 ["x_2 A_2 F[A_2+1,B_2+1,{c}] B_2 {inv}"],
                 "A_1:A_2 B_2:C_1 B_2:C_2 B_2:C_3"),
        _lower_c("F3", "c43eq48", "C_3",
                 ["x_3 A_2 B_1 F[A_2+1,B_1+1,{c}] {inv}"], "A_1:A_2 A_1:B_1 A_2:B_1"),
    ]


def _f4():
    hyp_a = "A_1:B_1 A_1:B_2 B_1:B_2 C_1:C_2 C_1:C_3 C_2:C_3"
    printed_a = (
        "sum[n1,n2,n3<=n] multinom (B_1)_n1 (B_2)_n2+n3 x_1^n1 x_2^n2 x_3^n3 "
        "F[A_1+%s,B_1+n1,B_2+n2+n3,C_1+n1,C_2+n2,C_3+n3] "
        "(C_1)^-1_n1 (C_2)^-1_n2 (C_3)^-1_n3"
    )
    return [
        *_unit("F4", ("c43eq1", "c43eq49"), "A_1",
               ["x_1 B_1 F[{s},B_1+1,C_1+1] C_1^-1",
                "x_2 B_2 F[{s},B_2+1,C_2+1] C_2^-1",
                "x_3 B_2 F[{s},B_2+1,C_3+1] C_3^-1"],
               hyp_a),
        _entry("F4", "c43eq50", "A_1+n", [printed_a % "N_2"], "multinomial", hyp_a,
               corrected=[printed_a % "N"],
               note="Printed with A_1 + N_2 I; the shift of A_1 is n1 + n2 + n3."),
        _entry(
            "F4", "c43eq51", "A_1-n",
            ["sum[n1,n2,n3<=n] multinom (B_1)_n1 (B_2)_n2+n3 "
             "(-x_1)^n1 (-x_2)^n2 (-x_3)^n3 "
             "F[B_1+n1,B_2+n2+n3,C_1+n1,C_2+n2,C_3+n3] "
             "(C_1)^-1_n1 (C_2)^-1_n2 (C_3)^-1_n3"],
            "multinomial", hyp_a,
        ),
        *_unit("F4", ("c43eq52", "c43eq53"), "B_1",
               ["x_1 A_1 F[A_1+1,{s},C_1+1] C_1^-1"], "C_1:C_2 C_1:C_3"),
        *_closed(
            "F4", ("c43eq54", "c43eq55"), "B_1", "binomial",
            "sum[n1=0..n] binom (A_1)_n1 x_1^n1 F[A_1+n1,B_1+n1,C_1+n1] (C_1)^-1_n1",
            "sum[n1=0..n] binom (A_1)_n1 (-x_1)^n1 F[A_1+n1,C_1+n1] (C_1)^-1_n1",
            "C_1:C_2 C_1:C_3",
        ),
        *_unit("F4", ("c43eq56", "c43eq57"), "B_2",
               ["x_2 A_1 F[A_1+1,{s},C_2+1] C_2^-1",
                "x_3 A_1 F[A_1+1,{s},C_3+1] C_3^-1"],
               "C_2:C_3"),
        *_closed(
            "F4", ("c43eq58", "c43eq59"), "B_2", "multinomial",
            "sum[n1,n2<=n] multinom (A_1)_N x_2^n1 x_3^n2 "
            "F[A_1+N,B_2+N,C_2+n1,C_3+n2] (C_2)^-1_n1 (C_3)^-1_n2",
            "sum[n1,n2<=n] multinom (A_1)_N (-x_2)^n1 (-x_3)^n2 "
            "F[A_1+N,C_2+n1,C_3+n2] (C_2)^-1_n1 (C_3)^-1_n2",
            "C_2:C_3",
        ),
        _lower_c("F4", "c43eq60", "C_1",
                 ["x_1 A_1 B_1 F[A_1+1,B_1+1,{c}] {inv}"], "A_1:B_1 C_1:C_2 C_1:C_3"),
        _lower_c("F4", "c43eq61", "C_2",
                 ["x_2 A_1 F[A_1+1,B_2+1,{c}] B_2 {inv}"],
                 "B_2:C_1 B_2:C_2 B_2:C_3 C_2:C_3"),
        _lower_c("F4", "c43eq62", "C_3",
                 ["x_3 A_1 F[A_1+1,B_2+1,{c}] B_2 {inv}"], "B_2:C_1 B_2:C_2 B_2:C_3"),
    ]


def _f6():
    hyp_a1 = "A_1:B_1 A_2:B_1 A_3:B_1 C_1:C_2"
    printed_a2 = "sum[n1=0..n] binom %s^n1 F[%sB_2+n1,C_2+n1] (B_2)_n1 (C_%s)^-1_n1"
    return [
        *_unit("F6", ("c43eq63", "c43eq64"), "A_1",
               ["x_1 B_1 F[{s},B_1+1,C_1+1] C_1^-1"], hyp_a1),
        *_closed(
            "F6", ("c43eq65", "c43eq66"), "A_1", "binomial",
            "sum[n1=0..n] binom (B_1)_n1 x_1^n1 F[A_1+n1,B_1+n1,C_1+n1] (C_1)^-1_n1",
            "sum[n1=0..n] binom (B_1)_n1 (-x_1)^n1 F[B_1+n1,C_1+n1] (C_1)^-1_n1",
            hyp_a1,
        ),
        *_unit("F6", ("c43eq67", "c43eq68"), "A_2",
               ["x_2 F[{s},B_2+1,C_2+1] B_2 C_2^-1"], "B_2:C_1 B_2:C_2"),
        _entry("F6", "c43eq69", "A_2+n", [printed_a2 % ("x_2", "A_2+n1,", "1")],
               "binomial", "B_2:C_1 B_2:C_2",
               corrected=[printed_a2 % ("x_2", "A_2+n1,", "2")],
               note="Printed with (C_1)^-1_n1; the inverse Pochhammer belongs to C_2."),
        _entry("F6", "c43eq70", "A_2-n", [printed_a2 % ("(-x_2)", "", "1")],
               "binomial", "B_2:C_1 B_2:C_2",
               corrected=[printed_a2 % ("(-x_2)", "", "2")],
               note="Printed with (C_1)^-1_n1; the inverse Pochhammer belongs to C_2."),
        *_unit("F6", ("c43eq71", "c43eq72"), "A_3",
               ["x_3 B_1 F[{s},B_1+1,C_2+1] C_2^-1"], "A_1:B_1 A_2:B_1 A_3:B_1"),
        *_closed(
            "F6", ("c43eq73", "c43eq74"), "A_3", "binomial",
            "sum[n1=0..n] binom x_3^n1 (B_1)_n1 F[A_3+n1,B_1+n1,C_2+n1] (C_2)^-1_n1",
            "sum[n1=0..n] binom (-x_3)^n1 (B_1)_n1 F[B_1+n1,C_2+n1] (C_2)^-1_n1",
            "A_1:B_1 A_2:B_1 A_3:B_1",
        ),
        *_unit("F6", ("c43eq75", "c43eq76"), "B_1",
               ["x_1 A_1 F[A_1+1,{s},C_1+1] C_1^-1",
                "x_3 A_3 F[A_3+1,{s},C_2+1] C_2^-1"],
               "A_1:A_3 A_2:A_3 C_1:C_2"),
        *_closed(
            "F6", ("c43eq77", "c43eq78"), "B_1", "multinomial",
            "sum[n1,n2<=n] multinom (A_1)_n1 (A_3)_n2 x_1^n1 x_3^n2 "
            "F[A_1+n1,A_3+n2,B_1+N,C_1+n1,C_2+n2] (C_1)^-1_n1 (C_2)^-1_n2",
            "sum[n1,n2<=n] multinom (A_1)_n1 (A_3)_n2 (-x_1)^n1 (-x_3)^n2 "
            "F[A_1+n1,A_3+n2,C_1+n1,C_2+n2] (C_1)^-1_n1 (C_2)^-1_n2",
            "A_1:A_3 A_2:A_3 C_1:C_2",
        ),
        *_unit("F6", ("c43eq79", "c43eq80"), "B_2",
               ["x_2 A_2 F[A_2+1,{s},C_2+1] C_2^-1"], "A_1:A_2"),
        *_closed(
            "F6", ("c43eq81", "c43eq82"), "B_2", "binomial",
            "sum[n1=0..n] binom x_2^n1 (A_2)_n1 F[A_2+n1,B_2+n1,C_2+n1] (C_2)^-1_n1",
            "sum[n1=0..n] binom (-x_2)^n1 (A_2)_n1 F[A_2+n1,C_2+n1] (C_2)^-1_n1",
            "A_1:A_2",
        ),
        _lower_c("F6", "c43eq83", "C_1",
                 ["x_1 A_1 B_1 F[A_1+1,B_1+1,{c}] {inv}"], hyp_a1),
        _lower_c("F6", "c43eq84", "C_2",
                 ["x_2 A_2 F[A_2+1,B_2+1,{c}] B_2 {inv}",
                  "x_3 A_3 B_1 F[A_3+1,B_1+1,{c}] {inv}"],
                 "A_1:A_2 A_1:A_3 A_2:A_3 B_2:C_1 B_2:C_2 A_1:B_1 A_2:B_1 A_3:B_1"),
    ]


def _f7():
    entries = [
        *_unit("F7", ("c43eq85", "c43eq86"), "A_1",
               ["x_1 B_1 F[{s},B_1+1,C_1+1] C_1^-1"], "A_1:B_1 A_2:B_1"),
        *_closed(
            "F7", ("c43eq87", "c43eq88"), "A_1", "binomial",
            "sum[n1=0..n] binom (B_1)_n1 x_1^n1 F[A_1+n1,B_1+n1,C_1+n1] (C_1)^-1_n1",
            "sum[n1=0..n] binom (B_1)_n1 (-x_1)^n1 F[B_1+n1,C_1+n1] (C_1)^-1_n1",
            "A_1:B_1 A_2:B_1",
        ),
        *_unit("F7", ("c43eq89", "c43eq90"), "A_2",
               ["x_2 B_2 F[{s},B_2+1,C_1+1] C_1^-1",
                "x_3 F[{s},B_3+1,C_1+1] B_3 C_1^-1"],
               "A_1:B_2 A_2:B_2 B_1:B_2 C_1:B_3"),
        *_closed(
            "F7", ("c43eq91", "c43eq92"), "A_2", "multinomial",
            "sum[n1,n2<=n] multinom (B_2)_n1 x_2^n1 x_3^n2 "
            "F[A_2+N_2,B_2+n1,B_3+n2,C_1+N_2] (B_3)_n2 (C_1)^-1_N_2",
            "sum[n1,n2<=n] multinom (B_2)_n1 (-x_2)^n1 (-x_3)^n2 "
            "F[B_2+n1,B_3+n2,C_1+N_2] (B_3)_n2 (C_1)^-1_N_2",
            "A_1:B_2 A_2:B_2 B_1:B_2 C_1:B_3",
        ),
        *_unit("F7", ("c43eq93", "c43eq94"), "B_1",
               ["x_1 A_1 F[A_1+1,{s},C_1+1] C_1^-1"]),
        *_closed(
            "F7", ("c43eq95", "c43eq96"), "B_1", "binomial",
            "sum[n1=0..n] binom (A_1)_n1 x_1^n1 F[A_1+n1,B_1+n1,C_1+n1] (C_1)^-1_n1",
            "sum[n1=0..n] binom (A_1)_n1 (-x_1)^n1 F[A_1+n1,C_1+n1] (C_1)^-1_n1",
        ),
    ]
    for i in (2, 3):
        fill = {"i": i}
        entries += _unit("F7", ("c43eq97", "c43eq98"), "B_%d" % i,
                         ["x_%(i)d A_2 F[A_2+1,{s},C_1+1] C_1^-1" % fill], "A_1:A_2")
        entries += _closed(
            "F7", ("c43eq99", "c43eq100"), "B_%d" % i, "binomial",
            "sum[n1=0..n] binom (A_2)_n1 x_%(i)d^n1 "
            "F[A_2+n1,B_%(i)d+n1,C_1+n1] (C_1)^-1_n1" % fill,
            "sum[n1=0..n] binom (A_2)_n1 (-x_%(i)d)^n1 "
            "F[A_2+n1,C_1+n1] (C_1)^-1_n1" % fill,
            "A_1:A_2",
        )
    entries.append(
        _lower_c("F7", "c43eq101", "C_1",
                 ["x_1 A_1 B_1 F[A_1+1,B_1+1,{c}] {inv}",
                  "x_2 A_2 F[A_2+1,B_2+1,{c}] B_2 {inv}",
                  "x_3 A_2 F[A_2+1,B_3+1,{c}] B_3 {inv}"],
                 "A_1:A_2 A_1:B_1 A_2:B_1 B_2:C_1 B_3:C_1")
    )
    return entries


def _f8():
    hyp_a = "A_1:B_* B_*:B_* C_1:C_2"
    entries = [
        *_unit("F8", ("c43eq103", "c43eq102"), "A_1",
               ["x_1 B_1 F[{s},B_1+1,C_1+1] C_1^-1",
                "x_2 B_2 F[{s},B_2+1,C_2+1] C_2^-1",
                "x_3 B_3 F[{s},B_3+1,C_2+1] C_2^-1"],
               hyp_a),
        *_closed(
            "F8", ("c43eq104", "c43eq105"), "A_1", "multinomial",
            "sum[n1,n2,n3<=n] multinom (B_1)_n1 (B_2)_n2 (B_3)_n3 x_1^n1 x_2^n2 x_3^n3 "
            "F[A_1+N,B_1+n1,B_2+n2,B_3+n3,C_1+n1,C_2+n2+n3] (C_1)^-1_n1 (C_2)^-1_n2+n3",
            "sum[n1,n2,n3<=n] multinom (B_1)_n1 (B_2)_n2 (B_3)_n3 "
            "(-x_1)^n1 (-x_2)^n2 (-x_3)^n3 "
            "F[B_1+n1,B_2+n2,B_3+n3,C_1+n1,C_2+n2+n3] (C_1)^-1_n1 (C_2)^-1_n2+n3",
            hyp_a,
        ),
        *_unit("F8", ("c43eq106", "c43eq107"), "B_1",
               ["x_1 A_1 F[A_1+1,{s},C_1+1] C_1^-1"], "C_1:C_2"),
        *_closed(
            "F8", ("c43eq108", "c43eq109"), "B_1", "binomial",
            "sum[n1=0..n] binom (A_1)_n1 x_1^n1 F[A_1+n1,B_1+n1,C_1+n1] (C_1)^-1_n1",
            "sum[n1=0..n] binom (A_1)_n1 (-x_1)^n1 F[A_1+n1,C_1+n1] (C_1)^-1_n1",
            "C_1:C_2",
        ),
    ]
    for i in (2, 3):
        fill = {"i": i}
        entries += _unit("F8", ("c43eq110", "c43eq111"), "B_%d" % i,
                         ["x_%(i)d A_1 F[A_1+1,{s},C_2+1] C_2^-1" % fill])
        entries += _closed(
            "F8", ("c43eq112", "c43eq113"), "B_%d" % i, "binomial",
            "sum[n1=0..n] binom (A_1)_n1 x_%(i)d^n1 "
            "F[A_1+n1,B_%(i)d+n1,C_2+n1] (C_2)^-1_n1" % fill,
            "sum[n1=0..n] binom (A_1)_n1 (-x_%(i)d)^n1 "
            "F[A_1+n1,C_2+n1] (C_2)^-1_n1" % fill,
        )
    entries += [
        _lower_c("F8", "c43eq114", "C_1",
                 ["x_1 A_1 B_1 F[A_1+1,B_1+1,{c}] {inv}"], "A_1:B_1"),
        _lower_c("F8", "c43eq115", "C_2",
                 ["x_2 A_1 B_2 F[A_1+1,B_2+1,{c}] {inv}",
                  "x_3 A_1 F[A_1+1,B_3+1,{c}] B_3 {inv}"],
                 "A_1:B_2 B_1:B_2 B_3:C_1 B_3:C_2"),
    ]
    return entries


def _f10():
    hyp_a1 = "A_1:B_1 A_2:B_1 C_1:C_2"
    hyp_a2 = "B_2:C_1 B_2:C_2"
    first = [
        *_unit("F10", ("c43eq116", "c43eq117"), "A_1",
               ["x_1 B_1 F[{s},B_1+1,C_1+1] C_1^-1",
                "x_3 B_1 F[{s},B_1+1,C_2+1] C_2^-1"],
               hyp_a1),
        *_closed(
            "F10", ("c43eq118", "c43eq119"), "A_1", "multinomial",
            "sum[n1,n2<=n] multinom (B_1)_N_2 x_1^n1 x_3^n2 "
            "F[A_1+N_2,B_1+N_2,C_1+n1,C_2+n2] (C_1)^-1_n1 (C_2)^-1_n2",
            "sum[n1,n2<=n] multinom (B_1)_N_2 (-x_1)^n1 (-x_3)^n2 "
            "F[B_1+N_2,C_1+n1,C_2+n2] (C_1)^-1_n1 (C_2)^-1_n2",
            hyp_a1,
        ),
    ]
    second = [
        *_unit("F10", ("c43eq120", "c43eq121"), "A_2",
               ["x_2 F[{s},B_2+1,C_2+1] B_2 C_2^-1"], hyp_a2,
               printed={"-n": [
                   "F", "- sum[n1=0..n-1] x_2 F[A_2+n1,B_2+1,C_2+1] B_2 C_2^-1",
               ]},
               note="Printed with A_2 + n1 I inside the lowering sum."),
        *_closed(
            "F10", ("c43eq122", "c43eq123"), "A_2", "binomial",
            "sum[n1=0..n] binom x_2^n1 F[A_2+n1,B_2+n1,C_2+n1] (B_2)_n1 (C_2)^-1_n1",
            "sum[n1=0..n] binom (-x_2)^n1 F[B_2+n1,C_2+n1] (B_2)_n1 (C_2)^-1_n1",
            hyp_a2,
        ),
    ]
    return (
        first
        + [interchange(e, [("A_1", "B_1")]) for e in first]
        + second
        + [interchange(e, [("A_2", "B_2")]) for e in second]
        + [
            _lower_c("F10", "c43eq124", "C_1",
                     ["x_1 A_1 B_1 F[A_1+1,B_1+1,{c}] {inv}"], "A_1:B_1 A_2:B_1"),
            _lower_c("F10", "c43eq125", "C_2",
                     ["x_2 A_2 F[A_2+1,B_2+1,{c}] B_2 {inv}",
                      "x_3 A_1 B_1 F[A_1+1,B_1+1,{c}] {inv}"],
                     "A_1:A_2 A_1:B_1 A_2:B_1 B_2:C_1 B_2:C_2"),
        ]
    )


def _f11():
    hyp_a1 = "A_1:B_1 A_2:B_1 C_1:C_2"
    hyp_a2 = "A_1:B_1 A_2:B_1 B_2:C_1 B_2:C_2"
    hyp_b1 = "A_1:A_2 C_1:C_2"
    printed_b1 = (
        "sum[n1,n2<=n] multinom (A_1)_n1 (A_2)_n2 %(x1)s^n1 %(x3)s^n2 "
        "F[A_1+n1,%(a2)s%(b1)sC_1+n1,C_2+n2] (C_1)^-1_n1 (C_2)^-1_n2"
    )
    note_b1 = "Printed with the garbled shift A_+n_2I, read as A_2 + n2 I."
    c2_terms = "x_2 A_2 F[A_2+1,B_2+1,C_2+2-n1] B_2 (C_2-n1)^-1 (C_2-n1+1)^-1"
    return [
        *_unit("F11", ("c43eq126", "c43eq127"), "A_1",
               ["x_1 B_1 F[{s},B_1+1,C_1+1] C_1^-1"], hyp_a1),
        *_closed(
            "F11", ("c43eq128", "c43eq129"), "A_1", "binomial",
            "sum[n1=0..n] binom x_1^n1 (B_1)_n1 F[A_1+n1,B_1+n1,C_1+n1] (C_1)^-1_n1",
            "sum[n1=0..n] binom (-x_1)^n1 (B_1)_n1 F[B_1+n1,C_1+n1] (C_1)^-1_n1",
            hyp_a1,
        ),
        *_unit("F11", ("c43eq130", "c43eq131"), "A_2",
               ["x_2 F[{s},B_2+1,C_2+1] B_2 C_2^-1",
                "x_3 B_1 F[{s},B_1+1,C_2+1] C_2^-1"],
               hyp_a2),
        *_closed(
            "F11", ("c43eq132", "c43eq133"), "A_2", "multinomial",
            "sum[n1,n2<=n] multinom (B_1)_n2 x_2^n1 x_3^n2 "
            "F[A_2+N_2,B_1+n2,B_2+n1,C_2+N_2] (B_2)_n1 (C_2)^-1_N_2",
            "sum[n1,n2<=n] multinom (B_1)_n2 (-x_2)^n1 (-x_3)^n2 "
            "F[B_1+n2,B_2+n1,C_2+N_2] (B_2)_n1 (C_2)^-1_N_2",
            hyp_a2,
        ),
        *_unit("F11", ("c43eq134", "c43eq135"), "B_1",
               ["x_1 A_1 F[A_1+1,{s},C_1+1] C_1^-1",
                "x_3 A_2 F[A_2+1,{s},C_2+1] C_2^-1"],
               hyp_b1,
               printed={"-n": [
                   "F",
                   "- sum[n1=0..n-1] x_1 A_1 F[A_1+1,B_1+n1,C_1+1] C_1^-1",
                   "- sum[n1=0..n-1] x_3 A_2 F[A_2+1,B_1-n1,C_2+1] C_2^-1",
               ]},
               note="Printed with B_1 + n1 I in the first lowering sum."),
        _entry(
            "F11", "c43eq136", "B_1+n",
            [printed_b1 % {"x1": "x_1", "x3": "x_3", "a2": "", "b1": "B_1+N_2,"}],
            "multinomial", hyp_b1,
            corrected=[printed_b1 % {"x1": "x_1", "x3": "x_3", "a2": "A_2+n2,",
                                     "b1": "B_1+N_2,"}],
            note=note_b1,
        ),
        _entry(
            "F11", "c43eq137", "B_1-n",
            [printed_b1 % {"x1": "(-x_1)", "x3": "(-x_3)", "a2": "", "b1": ""}],
            "multinomial", hyp_b1,
            corrected=[printed_b1 % {"x1": "(-x_1)", "x3": "(-x_3)", "a2": "A_2+n2,",
                                     "b1": ""}],
            note=note_b1,
        ),
        *_unit("F11", ("c43eq138", "c43eq139"), "B_2",
               ["x_2 A_2 F[A_2+1,{s},C_2+1] C_2^-1"], "A_1:A_2"),
        *_closed(
            "F11", ("c43eq140", "c43eq141"), "B_2", "binomial",
            "sum[n1=0..n] binom x_2^n1 (A_2)_n1 F[A_2+n1,B_2+n1,C_2+n1] (C_2)^-1_n1",
            "sum[n1=0..n] binom (-x_2)^n1 (A_2)_n1 F[A_2+n1,C_2+n1] (C_2)^-1_n1",
            "A_1:A_2",
        ),
        _lower_c("F11", "c43eq142", "C_1",
                 ["x_1 A_1 B_1 F[A_1+1,B_1+1,{c}] {inv}"], "A_1:B_1 A_2:B_1"),
        _entry(
            "F11", "c43eq143", "C_2-n",
            ["F", "sum[n1=1..n] " + c2_terms,
             "sum[n1=1..n] x_3 A_1 B_1 F[A_1+1,B_1+1,C_2+2-n1] "
             "(C_2-n1)^-1 (C_2-n1+1)^-1"],
            None, "A_1:A_2 A_1:B_1 A_2:B_1 B_2:C_1 B_2:C_2",
            corrected=[
                "F", "sum[n1=1..n] " + c2_terms,
                "sum[n1=1..n] x_3 A_2 B_1 F[A_2+1,B_1+1,C_2+2-n1] "
                "(C_2-n1)^-1 (C_2-n1+1)^-1",
            ],
            note="Printed with A_1 in the x_3 term; x_3 pairs with A_2.",
        ),
    ]


def _f12():
    hyp_a1 = "A_1:B_1 A_2:B_1 B_2:C_1 B_2:C_2"
    hyp_a2 = "A_1:B_1 A_2:B_1"
    hyp_b1 = "A_1:A_2 C_1:C_2"
    note_a2 = "Printed with A_1 shifted; the x_2 step moves A_2."
    return [
        *_unit("F12", ("c43eq144", "c43eq145"), "A_1",
               ["x_1 B_1 F[{s},B_1+1,C_1+1] C_1^-1",
                "x_3 F[{s},B_2+1,C_2+1] B_2 C_2^-1"],
               hyp_a1),
        *_closed(
            "F12", ("c43eq146", "c43eq147"), "A_1", "multinomial",
            "sum[n1,n2<=n] multinom (B_1)_n1 x_1^n1 x_3^n2 "
            "F[A_1+N_2,B_1+n1,B_2+n2,C_1+n1,C_2+n2] (B_2)_n2 (C_1)^-1_n1 (C_2)^-1_n2",
            "sum[n1,n2<=n] multinom (B_1)_n1 (-x_1)^n1 (-x_3)^n2 "
            "F[B_1+n1,B_2+n2,C_1+n1,C_2+n2] (B_2)_n2 (C_1)^-1_n1 (C_2)^-1_n2",
            hyp_a1,
        ),
        *_unit("F12", ("c43eq148", "c43eq149"), "A_2",
               ["x_2 B_1 F[{s},B_1+1,C_2+1] C_2^-1"], hyp_a2,
               printed={
                   "+n": ["F", "sum[n1=1..n] x_2 B_1 F[A_1+n1,B_1+1,C_2+1] C_2^-1"],
                   "-n": ["F", "- sum[n1=0..n-1] x_2 B_1 F[A_1-n1,B_1+1,C_2+1] C_2^-1"],
               },
               note=note_a2),
        _entry(
            "F12", "c43eq150", "A_2+n",
            ["sum[n1=0..n] binom x_2^n1 (B_1)_n1 F[A_1+n1,B_1+n1,C_2+n1] (C_2)^-1_n1"],
            "binomial", hyp_a2,
            corrected=[
                "sum[n1=0..n] binom x_2^n1 (B_1)_n1 F[A_2+n1,B_1+n1,C_2+n1] (C_2)^-1_n1"
            ],
            note=note_a2,
        ),
        _entry(
            "F12", "c43eq151", "A_2-n",
            ["sum[n1=0..n] binom (-x_2)^n1 (B_1)_n1 F[B_1+n1,C_2+n1] (C_2)^-1_n1"],
            "binomial", hyp_a2,
        ),
        *_unit("F12", ("c43eq152", "c43eq153"), "B_1",
               ["x_1 A_1 F[A_1+1,{s},C_1+1] C_1^-1",
                "x_2 A_2 F[A_2+1,{s},C_2+1] C_2^-1"],
               hyp_b1,
               printed={"-n": [
                   "F",
                   "- sum[n1=0..n-1] x_1 A_1 F[A_1+1,B_1+1,C_1+1] C_1^-1",
                   "- sum[n1=0..n-1] x_2 A_2 F[A_2+1,B_1-n1,C_2+1] C_2^-1",
               ]},
               note="Printed with B_1 + I in the first lowering sum."),
        *_closed(
            "F12", ("c43eq154", "c43eq155"), "B_1", "multinomial",
            "sum[n1,n2<=n] multinom (A_1)_n1 (A_2)_n2 x_1^n1 x_2^n2 "
            "F[A_1+n1,A_2+n2,B_1+N_2,C_1+n1,C_2+n2] (C_1)^-1_n1 (C_2)^-1_n2",
            "sum[n1,n2<=n] multinom (A_1)_n1 (A_2)_n2 (-x_1)^n1 (-x_2)^n2 "
            "F[A_1+n1,A_2+n2,C_1+n1,C_2+n2] (C_1)^-1_n1 (C_2)^-1_n2",
            hyp_b1,
        ),
        *_unit("F12", ("c43eq156", "c43eq157"), "B_2",
               ["x_3 A_1 F[A_1+1,{s},C_2+1] C_2^-1"]),
        *_closed(
            "F12", ("c43eq158", "c43eq159"), "B_2", "binomial",
            "sum[n1=0..n] binom x_3^n1 (A_1)_n1 F[A_1+n1,B_2+n1,C_2+n1] (C_2)^-1_n1",
            "sum[n1=0..n] binom (-x_3)^n1 (A_1)_n1 F[A_1+n1,C_2+n1] (C_2)^-1_n1",
        ),
        _lower_c("F12", "c43eq160", "C_1",
                 ["x_1 A_1 B_1 F[A_1+1,B_1+1,{c}] {inv}"], "A_1:B_1 A_2:B_1 C_1:C_2"),
        _lower_c("F12", "c43eq161", "C_2",
                 ["x_2 A_2 B_1 F[A_2+1,B_1+1,{c}] {inv}",
                  "x_3 A_1 F[A_1+1,B_2+1,{c}] B_2 {inv}"],
                 "A_1:A_2 A_1:B_1 A_2:B_1 B_2:C_1 B_2:C_2"),
    ]


def _f13():
    hyp_a1 = "A_1:B_1 A_2:B_1"
    hyp_a2 = "A_1:B_1 A_2:B_1 B_2:C_1"
    return [
        *_unit("F13", ("c43eq162", "c43eq163"), "A_1",
               ["x_1 B_1 F[{s},B_1+1,C_1+1] C_1^-1"], hyp_a1),
        *_closed(
            "F13", ("c43eq164", "c43eq165"), "A_1", "binomial",
            "sum[n1=0..n] binom x_1^n1 (B_1)_n1 F[A_1+n1,B_1+n1,C_1+n1] (C_1)^-1_n1",
            "sum[n1=0..n] binom (-x_1)^n1 (B_1)_n1 F[B_1+n1,C_1+n1] (C_1)^-1_n1",
            hyp_a1,
        ),
        *_unit("F13", ("c43eq166", "c43eq167"), "A_2",
               ["x_2 F[{s},B_2+1,C_1+1] B_2 C_1^-1",
                "x_3 B_1 F[{s},B_1+1,C_1+1] C_1^-1"],
               hyp_a2),
        *_closed(
            "F13", ("c43eq168", "c43eq169"), "A_2", "multinomial",
            "sum[n1,n2<=n] multinom (B_1)_n2 x_2^n1 x_3^n2 "
            "F[A_2+N_2,B_1+n2,B_2+n1,C_1+N_2] (B_2)_n1 (C_1)^-1_N_2",
            "sum[n1,n2<=n] multinom (B_1)_n2 (-x_2)^n1 (-x_3)^n2 "
            "F[B_1+n2,B_2+n1,C_1+N_2] (B_2)_n1 (C_1)^-1_N_2",
            hyp_a2,
        ),
        *_unit("F13", ("c43eq170", "c43eq171"), "B_1",
               ["x_1 A_1 F[A_1+1,{s},C_1+1] C_1^-1",
                "x_3 A_2 F[A_2+1,{s},C_1+1] C_1^-1"],
               "A_1:A_2"),
        *_closed(
            "F13", ("c43eq172", "c43eq173"), "B_1", "multinomial",
            "sum[n1,n2<=n] multinom (A_1)_n1 (A_2)_n2 x_1^n1 x_3^n2 "
            "F[A_1+n1,A_2+n2,B_1+N_2,C_1+N_2] (C_1)^-1_N_2",
            "sum[n1,n2<=n] multinom (A_1)_n1 (A_2)_n2 (-x_1)^n1 (-x_3)^n2 "
            "F[A_1+n1,A_2+n2,C_1+N_2] (C_1)^-1_N_2",
            "A_1:A_2",
        ),
        *_unit("F13", ("c43eq174", "c43eq175"), "B_2",
               ["x_2 A_2 F[A_2+1,{s},C_1+1] C_1^-1"], "A_1:A_2"),
        *_closed(
            "F13", ("c43eq176", "c43eq177"), "B_2", "binomial",
            "sum[n1=0..n] binom x_2^n1 (A_2)_n1 F[A_2+n1,B_2+n1,C_1+n1] (C_1)^-1_n1",
            "sum[n1=0..n] binom (-x_2)^n1 (A_2)_n1 F[A_2+n1,C_1+n1] (C_1)^-1_n1",
            "A_1:A_2",
        ),
        _lower_c("F13", "c43eq178", "C_1",
                 ["x_1 A_1 B_1 F[A_1+1,B_1+1,{c}] {inv}",
                  "x_2 A_2 F[A_2+1,B_2+1,{c}] B_2 {inv}",
                  "x_3 A_2 B_1 F[A_2+1,B_1+1,{c}] {inv}"],
                 "A_1:A_2 A_1:B_1 A_2:B_1 B_2:C_1"),
    ]


def _f14():
    hyp_a1 = "A_1:B_1 B_2:C_1 B_2:C_2 C_1:C_2"
    return [
        *_unit("F14", ("c43eq179", "c43eq180"), "A_1",
               ["x_1 B_1 F[{s},B_1+1,C_1+1] C_1^-1",
                "x_2 F[{s},B_2+1,C_2+1] B_2 C_2^-1",
                "x_3 B_1 F[{s},B_1+1,C_2+1] C_2^-1"],
               hyp_a1),
        *_closed(
            "F14", ("c43eq181", "c43eq182"), "A_1", "multinomial",
            "sum[n1,n2,n3<=n] multinom (B_1)_n1+n3 x_1^n1 x_2^n2 x_3^n3 "
            "F[A_1+N_3,B_1+n1+n3,B_2+n2,C_1+n1,C_2+n2+n3] "
            "(B_2)_n2 (C_1)^-1_n1 (C_2)^-1_n2+n3",
            "sum[n1,n2,n3<=n] multinom (B_1)_n1+n3 (-x_1)^n1 (-x_2)^n2 (-x_3)^n3 "
            "F[B_1+n1+n3,B_2+n2,C_1+n1,C_2+n2+n3] "
            "(B_2)_n2 (C_1)^-1_n1 (C_2)^-1_n2+n3",
            hyp_a1,
        ),
        *_unit("F14", ("c43eq183", "c43eq184"), "B_1",
               ["x_1 A_1 F[A_1+1,{s},C_1+1] C_1^-1",
                "x_3 A_1 F[A_1+1,{s},C_2+1] C_2^-1"],
               "C_1:C_2"),
        *_closed(
            "F14", ("c43eq185", "c43eq186"), "B_1", "multinomial",
            "sum[n1,n2<=n] multinom (A_1)_N_2 x_1^n1 x_3^n2 "
            "F[A_1+N_2,B_1+N_2,C_1+n1,C_2+n2] (C_1)^-1_n1 (C_2)^-1_n2",
            "sum[n1,n2<=n] multinom (A_1)_N_2 (-x_1)^n1 (-x_3)^n2 "
            "F[A_1+N_2,C_1+n1,C_2+n2] (C_1)^-1_n1 (C_2)^-1_n2",
            "C_1:C_2",
        ),
        *_unit("F14", ("c43eq187", "c43eq188"), "B_2",
               ["x_2 A_1 F[A_1+1,{s},C_2+1] C_2^-1"]),
        *_closed(
            "F14", ("c43eq189", "c43eq190"), "B_2", "binomial",
            "sum[n1=0..n] binom x_2^n1 (A_1)_n1 F[A_1+n1,B_2+n1,C_2+n1] (C_2)^-1_n1",
            "sum[n1=0..n] binom (-x_2)^n1 (A_1)_n1 F[A_1+n1,C_2+n1] (C_2)^-1_n1",
        ),
        _lower_c("F14", "c43eq191", "C_1",
                 ["x_1 A_1 B_1 F[A_1+1,B_1+1,{c}] {inv}"], "A_1:B_1"),
        _lower_c("F14", "c43eq192", "C_2",
                 ["x_2 A_1 F[A_1+1,B_2+1,{c}] B_2 {inv}",
                  "x_3 A_1 B_1 F[A_1+1,B_1+1,{c}] {inv}"],
                 "A_1:B_1 B_2:C_1 B_2:C_2"),
    ]


def catalog_entries():
    entries = []
    for section in (
        _family_a, _family_b, _family_c, _family_d,
        _f3, _f4, _f6, _f7, _f8, _f10, _f11, _f12, _f13, _f14,
    ):
        entries.extend(section())
    return entries
