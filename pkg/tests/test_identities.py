"""Series identities, counting theorems, reports, and witness extraction."""

import json

import pytest

from schmidtq import (
    Series,
    SeriesContext,
    VerificationReport,
    cauchy_check,
    enum_side,
    geometric_inverse,
    in_class,
    ln_series,
    partitions_with_schmidt_weight,
    poch_infinite_inverse,
    product_side,
    residue_column_count,
    size_graded_context,
    substitute_one,
    sum_side,
    t1_slice_check,
    trivariate_context,
    verify_counting,
    verify_identity,
    witnesses,
)
from schmidtq.identities import _compare_sides, _repeated_size_count, _series_mismatch


# --- contexts ----------------------------------------------------------------


def test_contexts():
    ctx = trivariate_context(5)
    assert ctx.variables == ("q", "t1", "t2")
    assert ctx.caps == (5, 5, 5)
    ctx = size_graded_context(7)
    assert ctx.variables == ("q", "s")
    assert ctx.caps == (7, 7)
    with pytest.raises(ValueError):
        trivariate_context(-1)
    with pytest.raises(ValueError):
        size_graded_context(-2)


# --- reports -----------------------------------------------------------------


def test_report_validation():
    ok = VerificationReport("x", {}, {"q": 3}, "pass")
    assert ok.passed and ok.mismatch is None and ok.evidence_text() == ""
    with pytest.raises(ValueError):
        VerificationReport("x", {}, {}, "maybe")
    with pytest.raises(ValueError):
        VerificationReport("x", {}, {}, "fail")  # no evidence


def _all_strings(node):
    if isinstance(node, dict):
        return all(isinstance(k, str) for k in node) and all(
            _all_strings(v) for v in node.values()
        )
    if isinstance(node, list):
        return all(_all_strings(v) for v in node)
    return isinstance(node, str)


def test_report_json_uses_decimal_strings():
    bad = VerificationReport(
        "x",
        {"m": 3, "s": [1, 2]},
        {"q": 10},
        "fail",
        {"monomial": {"q": 2}, "lhs": 10**30, "rhs": 0, "sides": ["a", "b"]},
    )
    data = bad.to_json_dict()
    assert _all_strings(data)
    assert data["mismatch"]["lhs"] == str(10**30)
    parsed = json.loads(bad.to_json_text())
    assert parsed == data
    assert bad.to_json_text() == json.dumps(data, separators=(",", ":"), sort_keys=True)


def test_report_evidence_lines():
    bad = VerificationReport(
        "x",
        {},
        {},
        "fail",
        {"monomial": {"q": 2, "t1": 1}, "lhs": 3, "rhs": 4, "sides": ["sum", "enum"]},
    )
    assert bad.evidence_text() == "first mismatch at q^2*t1 (sum vs enum): 3 != 4"
    bucket = VerificationReport(
        "x", {}, {}, "fail", {"bucket": "rho=(1,)", "lhs": 1, "rhs": 2}
    )
    assert bucket.evidence_text() == "bucket rho=(1,): 1 != 2"


def test_series_mismatch_finds_first_by_graded_order():
    ctx = SeriesContext(("q",), (6,))
    a = Series(ctx, {(0,): 1, (2,): 5, (4,): 9})
    b = Series(ctx, {(0,): 1, (2,): 5, (4,): 9})
    assert _series_mismatch("a", a, "b", b) is None
    c = Series(ctx, {(0,): 1, (2,): 6, (4,): 0})
    got = _series_mismatch("a", a, "c", c)
    assert got == {"monomial": {"q": 2}, "lhs": 5, "rhs": 6, "sides": ["a", "c"]}
    report = _compare_sides("x", {}, {"q": 6}, [("a", a), ("c", c)])
    assert not report.passed and report.mismatch["monomial"] == {"q": 2}


# --- frozen coefficients -----------------------------------------------------


def test_constant_terms_at_cap_zero():
    for build in (
        lambda: sum_side("ak_trivariate", 0),
        lambda: product_side("ak_trivariate", qcap=0),
        lambda: enum_side("ak_trivariate", qcap=0),
        lambda: sum_side("overpartition", 0),
        lambda: product_side("overpartition", qcap=0),
        lambda: enum_side("overpartition", qcap=0),
    ):
        series = build()
        assert [(tuple(m), c) for m, c in series.sorted_terms()] == [((0, 0, 0), 1)]


def test_two_color_coefficient():
    assert sum_side("ak_trivariate", 4).coefficient_at(q=3, t1=1, t2=1) == 2
    assert product_side("ak_trivariate", qcap=4).coefficient_at(q=3, t1=1, t2=1) == 2
    assert enum_side("ak_trivariate", qcap=4).coefficient_at(q=3, t1=1, t2=1) == 2
    assert witnesses("ak_trivariate", {"q": 3, "t1": 1, "t2": 1}) == [
        "2_2,1_1",
        "2_1,1_2",
    ]


def test_overpartition_coefficient_on_every_side():
    for series in (
        sum_side("overpartition", 6),
        product_side("overpartition", qcap=6),
        enum_side("overpartition", qcap=6),
        enum_side("cor22", qcap=6),
    ):
        assert series.coefficient_at(q=6, t1=1, t2=2) == 6


def test_specializing_both_tracking_variables_recovers_totals():
    # Colored pairs of total 3 with the two-then-one palette: 10 of them.
    collapsed, saturated = substitute_one(
        substitute_one(enum_side("ak_trivariate", qcap=3), "t1").series, "t2"
    )
    assert saturated  # some term sits at the cap, totals are still exact here
    assert collapsed.coefficient_at(q=3) == 10
    collapsed, _ = substitute_one(
        substitute_one(enum_side("overpartition", qcap=3), "t1").series, "t2"
    )
    assert collapsed.coefficient_at(q=3) == 8  # overpartitions of 3


def test_size_graded_slices():
    mo = enum_side("mork_odd", scap=3)
    assert [(tuple(m), c) for m, c in mo.sorted_terms() if m[1] == 3] == [
        ((2, 3), 1),
        ((3, 3), 1),
    ]
    pa = enum_side("psi_all", scap=2, m=2, i=1)
    assert [(tuple(m), c) for m, c in pa.sorted_terms() if m[1] == 2] == [
        ((1, 2), 1),
        ((2, 2), 1),
    ]


# --- full verifications ------------------------------------------------------


@pytest.mark.parametrize("identity", ["ak_trivariate", "overpartition", "cor22"])
def test_trivariate_identities_pass(identity):
    report = verify_identity(identity, qcap=8)
    assert report.passed
    assert report.caps == {"q": 8, "t1": 8, "t2": 8}
    assert report.theorem == identity


@pytest.mark.parametrize("identity", ["mork_odd", "mork_even"])
def test_interleave_identities_pass(identity):
    report = verify_identity(identity, scap=10)
    assert report.passed
    assert report.caps == {"q": 10, "s": 10}


@pytest.mark.parametrize("m,i", [(2, 1), (2, 2), (3, 2)])
def test_residue_product_identities_pass(m, i):
    for identity in ("psi_all", "psi_dm"):
        report = verify_identity(identity, scap=8, m=m, i=i)
        assert report.passed
        assert report.params == {"m": m, "i": i}


def test_verify_is_deterministic():
    a = verify_identity("overpartition", qcap=6).to_json_text()
    b = verify_identity("overpartition", qcap=6).to_json_text()
    assert a == b


def test_bounded_class_product_is_a_factor_of_the_full_one():
    # Dropping the top residue block's factor turns the all-partitions
    # product into the bounded-multiplicity one.
    for m, i in ((2, 1), (3, 2), (4, 4)):
        ctx = size_graded_context(8)
        full = product_side("psi_all", scap=8, m=m, i=i)
        part = product_side("psi_dm", scap=8, m=m, i=i)
        missing = poch_infinite_inverse(
            ctx, ctx.monomial(q=min(m, i), s=m), ctx.monomial(q=i, s=m)
        )
        assert part * missing == full


def test_identity_argument_errors():
    with pytest.raises(ValueError):
        sum_side("mork_odd", 5)
    with pytest.raises(ValueError):
        verify_identity("nope", qcap=3)
    with pytest.raises(ValueError):
        verify_identity("overpartition")  # qcap missing
    with pytest.raises(ValueError):
        verify_identity("psi_all", scap=5, m=1, i=1)
    with pytest.raises(ValueError):
        verify_identity("psi_all", scap=5, m=3, i=4)
    with pytest.raises(ValueError):
        product_side("ak_trivariate", qcap=-1)
    with pytest.raises(ValueError):
        enum_side("nope", qcap=3)


# --- length recurrence -------------------------------------------------------


def test_length_recurrence_base_values():
    assert [(tuple(m), c) for m, c in ln_series(0, 3).sorted_terms()] == [((0, 0, 0), 1)]
    assert ln_series(1, 3).coefficient_at(q=1, t2=1) == 1
    assert ln_series(3, 6).coefficient_at(q=2, t1=1, t2=1) == 1
    assert not list(ln_series(5, 2).sorted_terms())  # step factor leaves the caps
    with pytest.raises(ValueError):
        ln_series(-1, 3)


def _exact_length_enumeration(n, qcap):
    ctx = trivariate_context(qcap)
    acc = {}
    for w in range(qcap + 1):
        for lam in partitions_with_schmidt_weight(w, 2, (1,), "P"):
            if len(lam) != n or not in_class(lam, "D", 4):
                continue
            key = (w, _repeated_size_count(lam), residue_column_count(lam, 2, 1))
            acc[key] = acc.get(key, 0) + 1
    return Series(ctx, acc)


def test_length_recurrence_matches_enumeration():
    for n in range(6):
        assert ln_series(n, 8) == _exact_length_enumeration(n, 8)


def test_length_recurrence_sums_to_the_identity():
    qcap = 8
    ctx = trivariate_context(qcap)
    total = ctx.zero()
    for n in range(2 * qcap + 2):
        total = total + ln_series(n, qcap)
    assert total == enum_side("cor22", qcap=qcap)


# --- standalone checks -------------------------------------------------------


def test_cauchy_explicit_two_factor_case():
    report = cauchy_check(2)
    assert report.passed
    assert report.caps == {"q": 1, "z": 2}
    ctx = SeriesContext(("q", "z"), (2, 2))
    product = (ctx.one() - Series(ctx, {ctx.monomial(z=1): 1})) * (
        ctx.one() - Series(ctx, {ctx.monomial(q=1, z=1): 1})
    )
    expected = Series(
        ctx,
        {
            ctx.monomial(): 1,
            ctx.monomial(z=1): -1,
            ctx.monomial(q=1, z=1): -1,
            ctx.monomial(q=1, z=2): 1,
        },
    )
    assert product == expected


def test_cauchy_ranges():
    assert cauchy_check(0).passed
    assert cauchy_check(12, 30).passed
    with pytest.raises(ValueError):
        cauchy_check(-1)


def test_fixed_power_slice():
    assert t1_slice_check(0, 8).passed
    assert t1_slice_check(1, 10).passed
    assert t1_slice_check(2, 12).passed
    with pytest.raises(ValueError):
        t1_slice_check(-1, 5)


# --- counting theorems -------------------------------------------------------


def test_counting_small_cases():
    assert verify_counting("schmidt", n=3).passed
    assert verify_counting("uncu", n=3).passed
    assert verify_counting("ak_main", n=5, m=3, s={1, 2}).passed
    assert verify_counting("franklin_ext", n=5, m=2, s={1}).passed


def test_franklin_profile_collision_regression():
    # At modulus 2 the repetition profiles ((1, 2),) and ((1, 3),) bank the
    # same single block, so their counts must be pooled before comparing
    # against the colored side; weight 5 is the first place this matters.
    report = verify_counting("franklin_ext", n=5, m=2, s={1})
    assert report.passed


def test_counting_argument_errors():
    with pytest.raises(ValueError):
        verify_counting("schmidt", n=3, m=3)
    with pytest.raises(ValueError):
        verify_counting("uncu", n=3, s=(1, 2))
    with pytest.raises(ValueError):
        verify_counting("ak_main", n=3, m=3)  # residues required
    with pytest.raises(ValueError):
        verify_counting("ak_main", n=3, m=3, s={1, 3})  # 3 = m not allowed here
    with pytest.raises(ValueError):
        verify_counting("franklin_ext", n=3, m=2, s={2})  # 1 must be present
    with pytest.raises(ValueError):
        verify_counting("schmidt", n=-1)
    with pytest.raises(ValueError):
        verify_counting("nope", n=3)


# --- witness extraction ------------------------------------------------------


def test_witness_lists():
    assert witnesses("cor22", {"q": 6, "t1": 1, "t2": 2}) == [
        "5,3,1,1",
        "4,4,2",
        "4,3,1,1,1",
        "4,2,2,2",
        "3,3,3,1",
        "3,2,2,2,1",
    ]
    assert witnesses("overpartition", {"q": 6, "t1": 1, "t2": 2}) == [
        "4,1',1",
        "4',1,1",
        "3,2,1'",
        "3,2',1",
        "3',2,1",
        "2',2,2",
    ]
    assert witnesses("psi_all", {"q": 2, "s": 2}, m=2, i=1) == ["2"]
    assert witnesses("mork_odd", {"q": 2, "s": 3}) == ["2,1"]


def test_witness_counts_match_coefficients():
    series = enum_side("overpartition", qcap=5)
    for mon, coeff in series.sorted_terms():
        found = witnesses(
            "overpartition", {"q": mon[0], "t1": mon[1], "t2": mon[2]}
        )
        assert len(found) == coeff


def test_witness_argument_errors():
    with pytest.raises(ValueError):
        witnesses("overpartition", {"z": 1})
    with pytest.raises(ValueError):
        witnesses("overpartition", {"q": -1})
    with pytest.raises(ValueError):
        witnesses("nope", {"q": 1})
    with pytest.raises(ValueError):
        witnesses("psi_all", {"q": 1, "s": 1})  # m, i required
