from fractions import Fraction

import numpy as np
import pytest

from ascheme.catalog import catalog_scheme, complete_scheme
from ascheme.core import relabel_classes, scheme_from_entries
from ascheme.errors import SplitRowMismatch, TooManyClasses
from ascheme.generator import (
    check_theorem_4class,
    check_theorem_amorphic,
    check_theorem_fission,
    check_theorem_one_pair,
    check_theorem_skew_types,
    classify_skew_4class,
    compare_fission_tables,
    find_generating_unions,
    generates,
    minimal_generating,
    permute_table_columns,
    predict_fission_table,
)
from ascheme.spectra import character_table, distinct_eigenvalue_count, union_spectrum

T12_APPLICABLE = {
    "cyclo-7-2",
    "cyclo-11-2",
    "cyclo-19-2",
    "cyclo-23-2",
    "cyclo-31-2",
    "schurian-z4",
    "schurian-frob21",
    "wreath-k2-qr3",
}
T13_APPLICABLE = T12_APPLICABLE | {"wreath-qr3-k2", "wreath-qr7-k2", "wreath-qr7-k3"}
T14_APPLICABLE = {
    "cyclo-5-4",
    "cyclo-13-4",
    "cyclo-29-4",
    "cyclo-37-4",
    "schurian-z8-m3",
    "schurian-z9-m4",
    "wreath-qr3-qr3",
    "wreath-qr3-paley5",
    "wreath-paley5-qr3",
    "wreath-qr7-paley5",
}
T41_APPLICABLE = {
    "cyclo-5-4",
    "cyclo-13-4",
    "cyclo-29-4",
    "cyclo-37-4",
    "schurian-z9-m4",
    "wreath-qr3-qr3",
}


def test_generates_qr7():
    s = catalog_scheme("cyclo-7-2")
    r = generates(s, (1,))
    assert r.eigen_count == 3 and r.span_rank == 3 and r.generates
    assert r.witness_verified
    assert r.witness == (
        (Fraction(1), Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(1), Fraction(0)),
        (Fraction(0), Fraction(-1, 2), Fraction(1, 2)),
    )
    r2 = generates(s, (1, 2))
    assert not r2.generates and r2.eigen_count == 2 and r2.witness is None


def test_generation_report_json():
    r = generates(catalog_scheme("cyclo-7-2"), (1,))
    js = r.to_json()
    assert js["witness"][2] == ["0", "-1/2", "1/2"]
    assert js["union"] == [1] and js["generates"] is True


def test_eigen_count_equals_span_rank_everywhere(catalog):
    for eid, s in catalog.items():
        if not s.is_commutative or s.d > 6:
            continue
        for r in find_generating_unions(s):
            assert r.eigen_count == r.span_rank, (eid, r.union)
            assert r.generates == (r.eigen_count == s.d + 1)
            if r.generates:
                assert r.witness_verified or s.n > 256, (eid, r.union)


def test_exact_count_agrees_with_float_spectrum(catalog, tables):
    """The minimal-polynomial count must match the clustered eigenvalue
    count from the character table for every union (dual oracles)."""
    for eid in ("cyclo-13-4", "schurian-z4", "cyclo-16-5", "wreath-qr3-qr3"):
        s = catalog[eid]
        e = tables[eid]
        for r in find_generating_unions(s):
            assert r.eigen_count == len(union_spectrum(e, r.union)), (eid, r.union)


def test_find_generating_unions_13_4():
    reps = find_generating_unions(catalog_scheme("cyclo-13-4"))
    gen = [r.union for r in reps if r.generates]
    assert gen == [
        (1,),
        (2,),
        (3,),
        (4,),
        (1, 3),
        (1, 4),
        (2, 3),
        (2, 4),
        (1, 2, 3),
        (1, 2, 4),
        (1, 3, 4),
        (2, 3, 4),
    ]
    assert minimal_generating(reps) == [(1,), (2,), (3,), (4,)]


def test_find_generating_unions_guard():
    e = np.array([[(y - x) % 14 for y in range(14)] for x in range(14)])
    s = scheme_from_entries(e)
    assert s.d == 13
    with pytest.raises(TooManyClasses):
        find_generating_unions(s)


def test_union_validation():
    s = catalog_scheme("cyclo-7-2")
    with pytest.raises(ValueError):
        generates(s, ())
    with pytest.raises(ValueError):
        generates(s, (0,))


# --- T1.2 ------------------------------------------------------------------


def test_one_pair_applicable_set(catalog):
    got = {
        eid
        for eid, s in catalog.items()
        if s.is_commutative and check_theorem_one_pair(s).applicable
    }
    assert got == T12_APPLICABLE


def test_one_pair_holds_everywhere(catalog):
    for eid in sorted(T12_APPLICABLE):
        v = check_theorem_one_pair(catalog[eid])
        assert v.applicable and v.holds, eid
        assert v.evidence["eigen_counts"] == [catalog[eid].d + 1] * 2
        assert v.evidence["generates"] == [True, True]


def test_one_pair_hypothesis_filter():
    # inner quotient class is disconnected, so the symmetrized pair class
    # cannot generate; the theorem must report inapplicable, not a failure
    v = check_theorem_one_pair(catalog_scheme("wreath-qr3-k2"))
    assert not v.applicable
    assert v.evidence["reason"] == "symmetrized pair class does not generate"
    v = check_theorem_one_pair(catalog_scheme("cyclo-13-4"))
    assert not v.applicable  # two pairs
    v = check_theorem_one_pair(catalog_scheme("petersen"))
    assert not v.applicable  # symmetric


def test_verdict_json_shape():
    v = check_theorem_one_pair(catalog_scheme("petersen"))
    js = v.to_json()
    assert js["applicable"] is False and "holds" not in js
    v = check_theorem_one_pair(catalog_scheme("cyclo-7-2"))
    js = v.to_json()
    assert js["holds"] is True and js["theorem"] == "T1.2"


# --- T1.3 ------------------------------------------------------------------


def test_amorphic_criterion_applicable_set(catalog):
    got = {
        eid
        for eid, s in catalog.items()
        if s.is_commutative and check_theorem_amorphic(s).applicable
    }
    assert got == T13_APPLICABLE


def test_amorphic_criterion_holds_everywhere(catalog):
    for eid in sorted(T13_APPLICABLE):
        v = check_theorem_amorphic(catalog[eid])
        assert v.applicable and v.holds, eid
        assert v.evidence["branch"] == "d<=3"
        assert v.evidence["predicted_generatable"] is True
        assert v.evidence["actual_generatable"] is True
        assert v.evidence["pair_union_witness"] is not None


def test_amorphic_criterion_skips_non_amorphic():
    v = check_theorem_amorphic(catalog_scheme("schurian-z8-m3"))
    assert not v.applicable
    assert v.evidence["reason"] == "symmetrization not amorphic"
    assert not check_theorem_amorphic(catalog_scheme("cyclo-13-4")).applicable


# --- T1.4 ------------------------------------------------------------------


def test_4class_applicable_set(catalog):
    got = {
        eid
        for eid, s in catalog.items()
        if s.is_commutative and check_theorem_4class(s).applicable
    }
    assert got == T14_APPLICABLE


FOUND_I = {
    "cyclo-5-4": 3,
    "cyclo-13-4": 3,
    "cyclo-29-4": 3,
    "cyclo-37-4": 3,
    "schurian-z8-m3": 3,
    "schurian-z9-m4": 2,
    "wreath-qr3-qr3": 2,
    "wreath-qr3-paley5": 2,
    "wreath-paley5-qr3": 2,
    "wreath-qr7-paley5": 2,
}


def test_4class_holds_with_expected_witness(catalog):
    for eid, expect_i in FOUND_I.items():
        v = check_theorem_4class(catalog[eid])
        assert v.applicable and v.holds, eid
        assert v.evidence["all_choices_hold"] is True
        first = v.evidence["choices"][0]
        assert first["found_i"] == expect_i, eid
        assert first["via_relabel"] is False
        assert first["outside_statement"] is False
        # the witness union must really have d+1 = 5 distinct eigenvalues
        key = {2: "2+3", 3: "3"}[expect_i]
        assert first["unions"][key]["eigen_count"] == 5
        assert first["unions"][key]["generates"] is True


def test_4class_choice_count_matches_pairs(catalog):
    for eid in T14_APPLICABLE:
        s = catalog[eid]
        v = check_theorem_4class(s)
        assert len(v.evidence["choices"]) == len(s.transpose_pairs), eid


def test_4class_stable_under_relabeling():
    s = catalog_scheme("cyclo-13-4")
    base = check_theorem_4class(s)
    t = relabel_classes(s, (0, 3, 4, 1, 2))
    v = check_theorem_4class(t)
    assert v.holds == base.holds
    assert v.evidence["all_choices_hold"] is True


def test_4class_inapplicable():
    assert not check_theorem_4class(catalog_scheme("cyclo-7-2")).applicable
    assert not check_theorem_4class(catalog_scheme("cyclo-17-4")).applicable


# --- T3.1 ------------------------------------------------------------------

EXPECTED_A = {
    "cyclo-7-2": ("-7", 1),
    "cyclo-11-2": ("-11", 1),
    "cyclo-19-2": ("-19", 1),
    "cyclo-23-2": ("-23", 1),
    "cyclo-31-2": ("-31", 1),
    "schurian-z4": ("-4", 2),
    "schurian-frob21": ("-7", 1),
    "wreath-qr3-k2": ("-3", 2),
    "wreath-k2-qr3": ("-12", 1),
    "wreath-qr7-k2": ("-7", 2),
    "wreath-qr7-k3": ("-7", 2),
}


def test_fission_prediction_holds_with_expected_radicand(catalog):
    got = {
        eid
        for eid, s in catalog.items()
        if s.is_commutative and check_theorem_fission(s).applicable
    }
    assert got == set(EXPECTED_A)
    for eid, (a, split) in EXPECTED_A.items():
        v = check_theorem_fission(catalog[eid])
        assert v.applicable and v.holds, eid
        assert v.evidence["a"] == a, eid
        assert v.evidence["split_row"] == split, eid
        assert v.evidence["max_deviation"] == 0.0, eid


def test_predict_fission_table_qr7():
    x = catalog_scheme("cyclo-7-2")
    sym_t = character_table(complete_scheme(7))
    pred = predict_fission_table(sym_t, 1, Fraction(-7))
    assert pred.multiplicities == (1, 3, 3)
    assert pred.valencies == (1, 3, 3)
    # split entries are exact quadratics (-1 +- i sqrt 7)/2
    rho = pred.exact[1][1]
    assert rho.q == Fraction(-1, 2) and rho.r == Fraction(1, 2) and rho.v == -7
    assert pred.exact[2][1] == rho.conjugate()
    computed = character_table(x)
    assert compare_fission_tables(pred, computed) < 1e-12


def test_predict_fission_table_validation():
    sym_t = character_table(complete_scheme(7))
    with pytest.raises(ValueError):
        predict_fission_table(sym_t, 1, Fraction(7))
    with pytest.raises(ValueError):
        predict_fission_table(sym_t, 0, Fraction(-7))
    odd = character_table(complete_scheme(4))  # multiplicity 3 cannot halve
    with pytest.raises(SplitRowMismatch):
        predict_fission_table(odd, 1, Fraction(-4))


def test_compare_fission_tables_row_order_invariant():
    x = catalog_scheme("cyclo-7-2")
    e = character_table(x)
    swapped = permute_table_columns(e, (0, 1, 2))
    P = e.P[[0, 2, 1]].copy()
    exact = (e.exact[0], e.exact[2], e.exact[1])
    from ascheme.spectra import EigenTable

    shuffled = EigenTable(
        P, e.multiplicities, exact, P.copy(), e.n, e.valencies
    )
    assert compare_fission_tables(shuffled, swapped) < 1e-12
    with pytest.raises(SplitRowMismatch):
        compare_fission_tables(e, character_table(catalog_scheme("cyclo-13-4")))


def test_permute_table_columns_validation():
    e = character_table(catalog_scheme("cyclo-7-2"))
    with pytest.raises(ValueError):
        permute_table_columns(e, (1, 0, 2))
    out = permute_table_columns(e, (0, 2, 1))
    assert (out.P[:, 1] == e.P[:, 2]).all()
    assert out.valencies == (1, 3, 3)


# --- T4.1 ------------------------------------------------------------------


def test_skew_types_applicable_set(catalog):
    got = {
        eid
        for eid, s in catalog.items()
        if s.is_commutative and check_theorem_skew_types(s).applicable
    }
    assert got == T41_APPLICABLE


EXPECTED_TYPE = {
    "cyclo-5-4": 3,
    "cyclo-13-4": 3,
    "cyclo-29-4": 3,
    "cyclo-37-4": 3,
    "schurian-z9-m4": 1,
    "wreath-qr3-qr3": 1,
}


def test_skew_types_hold(catalog):
    for eid, expect in EXPECTED_TYPE.items():
        v = check_theorem_skew_types(catalog[eid])
        assert v.applicable and v.holds, eid
        assert v.evidence["type"] == expect, eid


def test_skew_classification_type1():
    c = classify_skew_4class(catalog_scheme("wreath-qr3-qr3"))
    assert c.type == 1
    assert abs(c.radicands["b"]["computed"] - 3.0) < 1e-9
    assert abs(c.radicands["z"]["computed"] - 27.0) < 1e-9
    assert c.radicands["b"]["residual"] < 1e-9
    assert c.radicands["z"]["residual"] < 1e-9
    assert c.formulas_ok and c.row_sums_ok and c.properties_ok
    assert c.property_unions == {"1+3": 5, "2+4": 5}


def test_skew_classification_type3():
    c = classify_skew_4class(catalog_scheme("cyclo-13-4"))
    assert c.type == 3
    for name in ("y", "b", "z", "c"):
        assert c.radicands[name]["computed"] > 0
    # Galois-conjugate radicand pairs multiply to rational products
    assert abs(c.radicands["y"]["computed"] * c.radicands["b"]["computed"] - 13.0) < 1e-6
    assert c.property_unions == {"1": 5, "2": 5, "3": 5, "4": 5}
    assert c.row_sums_ok and c.properties_ok


def test_skew_type_depends_on_pair_convention():
    """Swapping which transpose pair is (1,2) exchanges types 1 and 2 and
    swaps the radicand roles (b, z) -> (c, y)."""
    s = catalog_scheme("wreath-qr3-qr3")
    flipped = relabel_classes(s, (0, 3, 4, 1, 2))
    c = classify_skew_4class(flipped)
    assert c.type == 2
    assert abs(c.radicands["y"]["computed"] - 27.0) < 1e-9
    assert abs(c.radicands["c"]["computed"] - 3.0) < 1e-9
    assert c.formulas_ok and c.properties_ok
    # the canonical-choice verdict is unaffected
    v = check_theorem_skew_types(flipped)
    assert v.applicable and v.holds


def test_skew_types_inapplicable():
    # nonsymmetric but with a symmetric nontrivial class: not skew
    assert not check_theorem_skew_types(catalog_scheme("schurian-z8-m3")).applicable
    assert not check_theorem_skew_types(catalog_scheme("cyclo-17-4")).applicable
