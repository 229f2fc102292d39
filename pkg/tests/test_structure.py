"""Substructure analysis: subsets, ideals, normality, simplicity, morphisms."""

import pytest

from groupoidlab import (
    CarrierError,
    IdentityId,
    Matrix,
    MixedNeutrosophic,
    Modular,
    PureNeutrosophic,
    Scalar,
    analyze,
    are_conjugate,
    build,
    check_homomorphism,
    classify_subset,
    enumerate_ideals,
    enumerate_subgroupoids,
    find_normal_subgroupoids,
    from_table,
    identity_holds_on_subset,
    is_normal_groupoid,
    is_simple,
    smarandache,
)
from groupoidlab.structure import subset_handle


# -- subset handles -------------------------------------------------------------


def test_subset_handle_accepts_indices_labels_and_elements():
    g = build(Modular(6), Scalar(), 2, 4)
    want = ((0, 2, 4), ("0", "2", "4"))
    for form in ([0, 2, 4], ["0", "2", "4"], [(0,), (2,), (4,)]):
        h = subset_handle(g, form)
        assert (h.indices, h.labels) == want


def test_subset_handle_rejections():
    g = build(Modular(6), Scalar(), 2, 4)
    with pytest.raises(CarrierError):
        subset_handle(g, [9])
    with pytest.raises(CarrierError):
        subset_handle(g, ["x"])
    with pytest.raises(CarrierError):
        classify_subset(g, [])


def test_subset_handle_deduplicates_and_sorts():
    g = build(Modular(6), Scalar(), 2, 4)
    h = subset_handle(g, [4, 0, 2, 4, 0])
    assert h.indices == (0, 2, 4)


# -- classification anchors -------------------------------------------------------


def test_left_ideal_that_is_not_right():
    c = classify_subset(build(Modular(10), Scalar(), 1, 5), [0, 5])
    assert c.closed and c.subgroupoid and c.semigroup
    assert c.left_ideal and not c.right_ideal and not c.two_sided_ideal
    assert not c.normal_subgroupoid


def test_pure_indeterminate_subset_flag():
    g = build(PureNeutrosophic(4), Scalar(), 3, 2)
    c = classify_subset(g, ["0", "2I"])
    assert c.pure_neutrosophic
    assert c.left_ideal and not c.right_ideal
    # flag never set over a plain residue carrier
    assert not classify_subset(build(Modular(4), Scalar(), 3, 2), [0, 2]).pure_neutrosophic


def test_pseudo_flag_marks_indeterminate_free_closed_subsets():
    m = build(MixedNeutrosophic(4), Scalar(), (1, 0), (1, 0))
    c = classify_subset(m, ["0", "2"])
    assert c.pseudo and c.closed and not c.pure_neutrosophic
    # over a pure-I carrier only the zero singleton qualifies
    z = build(PureNeutrosophic(4), Scalar(), 3, 2)
    assert classify_subset(z, ["0"]).pseudo
    assert not classify_subset(z, ["0", "2I"]).pseudo


def test_closure_facts_order_6():
    g = build(Modular(6), Scalar(), 2, 4)
    assert classify_subset(g, [0, 2, 4]).closed
    assert classify_subset(g, [0, 3]).closed
    assert not classify_subset(g, [0, 2]).closed
    assert not classify_subset(g, [0, 4]).closed


def test_semigroup_subset_inside_nonassociative_groupoid():
    g = build(Modular(7), Scalar(), 3, 4)
    assert not classify_subset(g, list(range(7))).semigroup
    assert classify_subset(build(Modular(10), Scalar(), 1, 5), [0, 5]).semigroup


# -- normality ---------------------------------------------------------------------


def test_normal_subgroupoids_order_8():
    g = build(Modular(8), Scalar(), 2, 6)
    assert classify_subset(g, [0, 2, 4]).normal_subgroupoid
    assert classify_subset(g, [0, 2, 4, 6]).normal_subgroupoid
    assert not classify_subset(g, [0, 4]).normal_subgroupoid
    normals = find_normal_subgroupoids(g)
    found = {h.indices for h in normals}
    assert (0, 2, 4, 6) in found
    assert (0, 2, 4) in found
    assert (0, 4) not in found
    # canonical order: smallest size first, then lexicographic
    assert find_normal_subgroupoids(g, first_only=True)[0].indices == (0, 2, 4)


def test_normality_requires_translate_sets_to_match_everywhere():
    g = build(Modular(6), Scalar(), 2, 4)
    assert classify_subset(g, [0, 2, 4]).normal_subgroupoid
    assert not classify_subset(g, [0, 3]).normal_subgroupoid


def test_normal_subgroupoid_whose_translates_are_fixed():
    g = build(Modular(12), Scalar(), 4, 8)
    assert classify_subset(g, [0, 4, 8]).normal_subgroupoid


# -- simplicity ----------------------------------------------------------------------


@pytest.mark.parametrize("n,t,u", [(7, 3, 4), (5, 2, 3), (7, 2, 5), (13, 2, 11)])
def test_simple_instances_have_no_proper_subgroupoid_but_zero(n, t, u):
    g = build(Modular(n), Scalar(), t, u)
    r = enumerate_subgroupoids(g)
    assert r.strategy == "power-set" and r.complete
    assert [h.indices for h in r.subsets] == [(0,)]
    verdict = is_simple(g)
    assert verdict.simple and verdict.complete and verdict.witness is None


def test_non_simple_instance_reports_first_witness():
    v = is_simple(build(Modular(8), Scalar(), 2, 6))
    assert not v.simple and v.complete
    assert v.witness.indices == (0, 2, 4)


def test_no_normal_subgroupoids_in_order_4():
    g = build(Modular(4), Scalar(), 2, 3)
    assert find_normal_subgroupoids(g) == []
    assert is_simple(g).simple


# -- whole-groupoid normality ----------------------------------------------------------


def test_is_normal_groupoid_verdicts():
    assert is_normal_groupoid(build(PureNeutrosophic(5), Scalar(), 2, 2,
                                    t_indeterminate=True, u_indeterminate=True))
    assert not is_normal_groupoid(build(Modular(4), Scalar(), 2, 3))
    # one-element groupoid satisfies everything vacuously
    assert is_normal_groupoid(from_table(("e",), ((0,),)))


# -- enumeration strategies --------------------------------------------------------------


def test_power_set_strategy_is_complete_for_small_orders():
    r = enumerate_subgroupoids(build(Modular(5), Scalar(), 2, 3))
    assert r.strategy == "power-set" and r.complete


def test_generated_closure_strategy_for_large_orders():
    r = enumerate_subgroupoids(build(Modular(30), Scalar(), 7, 11))
    assert r.strategy == "generated-closure" and not r.complete
    table = build(Modular(30), Scalar(), 7, 11).index_table()
    for h in r.subsets:
        s = set(h.indices)
        assert all(table[a][b] in s for a in s for b in s)


def test_ideal_enumeration():
    sets = enumerate_ideals(build(Modular(10), Scalar(), 1, 5))
    left = {h.indices for h in sets.left}
    right = {h.indices for h in sets.right}
    assert (0, 5) in left and (0, 5) not in right
    two = {h.indices for h in sets.two_sided}
    assert two == left & right


# -- smarandache --------------------------------------------------------------------------


def test_smarandache_strong_holds():
    v = smarandache(build(Modular(10), Scalar(), 5, 6), IdentityId.MOUFANG)
    assert v.status == "strong_holds"
    # the semigroup witness replays
    g = build(Modular(10), Scalar(), 5, 6)
    assert classify_subset(g, v.s_witness).semigroup


def test_smarandache_identity_on_witness_only():
    g = build(Modular(4), Scalar(), 2, 3)
    v = smarandache(g, IdentityId.BOL)
    assert v.status == "holds_on_semigroup_witness"
    assert v.s_witness.labels == ("1",)
    assert v.identity_witness.labels == ("0", "2")
    assert identity_holds_on_subset(g, v.identity_witness, IdentityId.BOL)
    assert v.identity_verdict.fails
    assert v.identity_verdict.witness_labels == ("1", "0", "0")


def test_smarandache_s_groupoid_only():
    v = smarandache(build(Modular(4), Scalar(), 2, 3), IdentityId.COMMUTATIVE)
    assert v.status == "s_groupoid_only"
    assert v.s_witness.labels == ("1",)
    assert v.identity_witness is None


def test_not_smarandache():
    v = smarandache(build(Modular(7), Scalar(), 3, 4))
    assert v.status == "not_smarandache"
    assert v.s_witness is None


def test_identity_holds_on_subset_direct():
    g = build(Modular(4), Scalar(), 2, 3)
    assert identity_holds_on_subset(g, [0, 2], IdentityId.BOL)
    assert not identity_holds_on_subset(g, [0, 1, 2, 3], IdentityId.BOL)


# -- conjugacy ------------------------------------------------------------------------------


def test_conjugate_subgroupoids():
    g = build(Modular(12), Scalar(), 1, 3)
    v = are_conjugate(g, [0, 3, 6, 9], [2, 5, 8, 11])
    assert v.conjugate and v.witness_label == "0" and v.side == "left"
    assert v.disjoint


def test_non_conjugate_disjoint_subsets():
    g = build(Modular(6), Scalar(), 2, 2)
    v = are_conjugate(g, [1, 4], [2, 5])
    assert not v.conjugate and v.witness_label is None and v.disjoint


# -- homomorphisms ----------------------------------------------------------------------------


def test_embedding_into_mixed_carrier_is_a_homomorphism():
    g = build(PureNeutrosophic(7), Scalar(), 2, 5)
    h = build(MixedNeutrosophic(7), Scalar(), (2, 0), (5, 0))
    v = check_homomorphism(g, h, lambda e: ((0, e[0]),))
    assert v.valid and v.star_respected and v.indeterminate_preserved


def test_index_shift_is_not_a_homomorphism():
    g = build(PureNeutrosophic(7), Scalar(), 2, 5)
    h = build(MixedNeutrosophic(7), Scalar(), (2, 0), (5, 0))
    v = check_homomorphism(g, h, [(i + 1) % 7 for i in range(7)])
    assert not v.valid and not v.star_respected
    assert "star not respected" in v.failure


def test_integer_slice_respects_star_but_drops_indeterminacy():
    g = build(PureNeutrosophic(4), Scalar(), 2, 3)
    h = build(MixedNeutrosophic(4), Scalar(), (2, 0), (3, 0))
    v = check_homomorphism(g, h, lambda e: ((e[0], 0),))
    assert not v.valid and v.star_respected and v.indeterminate_preserved is False
    assert "indeterminate element" in v.failure


def test_homomorphism_mapping_validation():
    g = build(PureNeutrosophic(7), Scalar(), 2, 5)
    h = build(MixedNeutrosophic(7), Scalar(), (2, 0), (5, 0))
    with pytest.raises(CarrierError):
        check_homomorphism(g, h, [0, 1])


# -- assembled report ---------------------------------------------------------------------------


def test_analyze_small_groupoid_is_complete():
    rep = analyze(build(Modular(8), Scalar(), 2, 6))
    j = rep.to_json()
    assert j["order"] == 8
    assert j["complete"] is True
    assert ["0", "2", "4", "6"] in j["normal"]
    assert j["simple"]["simple"] is False
    assert j["simple"]["witness"] == ["0", "2", "4"]


def test_analyze_large_groupoid_marks_incomplete():
    rep = analyze(build(Modular(30), Scalar(), 7, 11))
    assert rep.complete is False
