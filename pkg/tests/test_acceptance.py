"""Acceptance gate: ten binding criteria, one test each, stated time budgets.

Every expected value here is frozen: computed by hand or by an independent
oracle before the implementation was written, never copied back from the
code under test.
"""

import time

from click.testing import CliRunner

from groupoidlab import (
    CheckMode,
    IdentityId,
    IntervalOf,
    Matrix,
    MixedNeutrosophic,
    Modular,
    Poly,
    ProductKind,
    PureNeutrosophic,
    Scalar,
    build,
    check_identity,
    classify_subset,
    cli,
    count_class,
    enumerate_ideals,
    find_normal_subgroupoids,
    from_table,
    identity_holds_on_subset,
    is_simple,
    smarandache,
    verify_theorem,
)
from groupoidlab.shape import format_element


class _Clock:
    """Asserts the enclosed block finished inside its budget."""

    def __init__(self, seconds: float):
        self.budget = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        if exc[0] is None:
            elapsed = time.perf_counter() - self.start
            assert elapsed < self.budget, f"{elapsed:.2f}s exceeded {self.budget}s budget"


def _constant_zero(order: int):
    labels = tuple(str(i) for i in range(order))
    return from_table(labels, tuple((0,) * order for _ in range(order)))


def test_criterion_01_golden_worked_examples():
    # 1x3 rows mod 4 with (2,3)
    with _Clock(1.0):
        g = build(Modular(4), Matrix(1, 3), 2, 3)
        a, b, c = (3, 2, 1), (1, 0, 3), (0, 2, 2)
        ab = g.star(a, b)
        assert ab == (1, 0, 3)
        assert g.star(ab, c) == (2, 2, 0)
        assert g.star(a, g.star(b, c)) == (0, 2, 2)
        assert g.star(ab, c) != g.star(a, g.star(b, c))

    # 5x1 columns mod 12 with (2,3)
    with _Clock(1.0):
        g = build(Modular(12), Matrix(5, 1), 2, 3)
        a = (10, 2, 0, 0, 1)
        b = (3, 2, 11, 0, 0)
        c = (1, 0, 9, 2, 0)
        assert g.star(g.star(a, b), c) == (1, 8, 9, 6, 4)
        assert g.star(a, g.star(b, c)) == (11, 4, 3, 6, 2)

    # degree-4 shuffle products mod 5
    with _Clock(1.0):
        g = build(Modular(5), Poly(4, ProductKind.SHUFFLE), 1, 1)
        f = (1, 4, 3, 0, 0)
        p = (4, 0, 0, 1, 4)
        h = (1, 4, 1, 2, 3)
        fp = g.star(f, p)
        assert fp == (0, 0, 3, 0, 0)            # 3x^2
        assert g.star(p, f) == (1, 0, 0, 0, 4)  # 1 + 4x^4
        assert g.star(fp, h) == (0, 0, 1, 0, 0)  # x^2
        assert g.star(f, g.star(p, h)) == (0, 0, 4, 0, 0)  # 4x^2

    # 1x3 interval rows mod 5 with (2,3)
    with _Clock(1.0):
        carrier = IntervalOf(Modular(5))
        g = build(carrier, Matrix(1, 3), 2, 3)
        ab = g.star((1, 3, 2), (4, 1, 2))
        assert ab == (4, 4, 0)
        assert [carrier.format_value(v) for v in ab] == ["[0,4]", "[0,4]", "[0,0]"]
        assert format_element(carrier, Matrix(1, 3), ab) == "[[[0,4],[0,4],[0,0]]]"


def test_criterion_02_order_7_table_and_simplicity():
    expected = [
        [0, 4, 1, 5, 2, 6, 3],
        [3, 0, 4, 1, 5, 2, 6],
        [6, 3, 0, 4, 1, 5, 2],
        [2, 6, 3, 0, 4, 1, 5],
        [5, 2, 6, 3, 0, 4, 1],
        [1, 5, 2, 6, 3, 0, 4],
        [4, 1, 5, 2, 6, 3, 0],
    ]
    with _Clock(1.0):
        g = build(Modular(7), Scalar(), 3, 4)
        assert g.index_table() == expected
        verdict = is_simple(g)
        assert verdict.simple
        assert verdict.complete  # full power-set sweep, not a sampled shortcut


def test_criterion_03_iff_sweeps_for_associativity_and_idempotency():
    with _Clock(30.0):
        for carrier_cls in (Modular, PureNeutrosophic):
            for n in range(3, 17):
                for t in range(n):
                    for u in range(n):
                        assoc_pred = (t * t) % n == t and (u * u) % n == u
                        idem_pred = (t + u) % n == 1
                        if t == 0 and u == 0:
                            g = _constant_zero(n)
                        else:
                            g = build(carrier_cls(n), Scalar(), t, u)
                        a = check_identity(g, IdentityId.ASSOCIATIVE, CheckMode.EXHAUSTIVE)
                        i = check_identity(g, IdentityId.IDEMPOTENT, CheckMode.EXHAUSTIVE)
                        assert (a.status == "holds") == assoc_pred, (carrier_cls, n, t, u)
                        assert (i.status == "holds") == idem_pred, (carrier_cls, n, t, u)


def test_criterion_04_equal_pairs_satisfy_p_and_fail_alternatives():
    with _Clock(60.0):
        for n in range(3, 17):
            for t in range(1, n):
                g = build(Modular(n), Scalar(), t, t)
                v = check_identity(g, IdentityId.P_IDENTITY, CheckMode.EXHAUSTIVE)
                assert v.status == "holds", (n, t)
        for p in (2, 3, 5, 7, 11, 13, 17, 19, 23):
            for t in range(2, p):
                g = build(Modular(p), Scalar(), t, t)
                left = check_identity(g, IdentityId.LEFT_ALTERNATIVE, CheckMode.EXHAUSTIVE)
                right = check_identity(g, IdentityId.RIGHT_ALTERNATIVE, CheckMode.EXHAUSTIVE)
                assert left.status == "fails", (p, t)
                assert right.status == "fails", (p, t)


def test_criterion_05_left_ideals_mirror_right_ideals_under_pair_swap():
    with _Clock(120.0):
        for n in range(3, 13):
            for t in range(n):
                for u in range(n):
                    if t == 0 and u == 0:
                        continue
                    fwd = enumerate_ideals(build(Modular(n), Scalar(), t, u))
                    rev = enumerate_ideals(build(Modular(n), Scalar(), u, t))
                    left_fwd = {h.indices for h in fwd.left}
                    right_rev = {h.indices for h in rev.right}
                    assert left_fwd == right_rev, (n, t, u)


def test_criterion_06_simplicity_and_the_normal_subgroupoid_report():
    for n, t, u in ((5, 2, 3), (7, 2, 5), (13, 2, 11)):
        v = is_simple(build(Modular(n), Scalar(), t, u))
        assert v.simple and v.complete, (n, t, u)
    # the order-7 (3,4) table groupoid is likewise simple
    assert is_simple(build(Modular(7), Scalar(), 3, 4)).simple

    g = build(Modular(8), Scalar(), 2, 6)
    normals = find_normal_subgroupoids(g)
    found = {h.indices for h in normals}
    assert (0, 2, 4, 6) in found  # order n/t = 4
    assert classify_subset(g, [0, 2, 4, 6]).normal_subgroupoid
    # uniqueness is recorded, and extra normal subgroupoids come back as
    # disagreement data in the report tier rather than as a crash
    out = verify_theorem("T9")
    assert out.status == "report"
    obs = {o["instance"]: o for o in out.observations}["zn:8 (2,6)"]
    assert obs["claimed_order"] == 4
    assert obs["unique_of_claimed_order"] is True
    assert obs["principal_normal"] is True
    extra = [h for h in found if h != (0, 2, 4, 6)]
    assert bool(extra) == bool(obs["extra_normal_subgroupoids"])
    assert obs["agrees"] is False  # recorded, not raised


def test_criterion_07_smarandache_suite_with_witness_revalidation():
    g = build(Modular(10), Scalar(), 5, 6)
    v = smarandache(g, IdentityId.MOUFANG)
    assert v.status == "strong_holds"
    assert classify_subset(g, v.s_witness).semigroup

    g = build(Modular(4), Scalar(), 2, 3)
    v = smarandache(g, IdentityId.BOL)
    assert v.status == "holds_on_semigroup_witness"
    assert v.status != "strong_holds"
    assert classify_subset(g, v.s_witness).semigroup
    assert v.identity_witness.labels == ("0", "2")
    assert identity_holds_on_subset(g, v.identity_witness, IdentityId.BOL)

    g = build(Modular(6), Scalar(), 4, 3)
    v = smarandache(g, IdentityId.P_IDENTITY)
    assert v.status == "strong_holds"
    assert classify_subset(g, v.s_witness).semigroup

    g = build(Modular(14), Scalar(), 7, 8)
    for law in (IdentityId.LEFT_ALTERNATIVE, IdentityId.RIGHT_ALTERNATIVE):
        v = smarandache(g, law)
        assert v.status == "strong_holds", law
        assert classify_subset(g, v.s_witness).semigroup


def test_criterion_08_exact_counts():
    with _Clock(5.0):
        assert count_class(PureNeutrosophic(3), "all_pairs") == 2
        assert count_class(MixedNeutrosophic(3), "all_pairs") == 56
        assert count_class(MixedNeutrosophic(4), "all_pairs") == 210
        assert count_class(Modular(4), "level_one_pairs") == 6
        assert count_class(PureNeutrosophic(6), "idempotent_pairs", equal_pairs_included=True) == 4
        assert count_class(PureNeutrosophic(9), "idempotent_pairs", equal_pairs_included=True) == 7
        for n in range(3, 51):
            c = count_class(Modular(n), "idempotent_pairs", equal_pairs_included=True)
            assert c % 2 == n % 2, n


def test_criterion_09_lifted_verdicts_match_scalar_verdicts_exhaustively():
    with _Clock(300.0):
        pairs = [(t, u) for t in range(3) for u in range(3)]
        for t, u in pairs:
            if t == 0 and u == 0:
                scalar = _constant_zero(3)
                lifted = _constant_zero(81)
            else:
                scalar = build(Modular(3), Scalar(), t, u)
                lifted = build(Modular(3), Matrix(2, 2), t, u)
            assert lifted.order == 81 or (t, u) == (0, 0)
            for identity in IdentityId:
                vs = check_identity(scalar, identity, CheckMode.EXHAUSTIVE)
                vl = check_identity(lifted, identity, CheckMode.EXHAUSTIVE)
                assert vs.method == "exhaustive"
                assert vl.method == "exhaustive"  # sampled fallback forbidden
                assert vs.status == vl.status, (t, u, identity)


def test_criterion_10_verification_suite_is_deterministic():
    runner = CliRunner()
    args = ["verify", "--suite", "default", "--seed", "42", "--no-timing"]
    first = runner.invoke(cli.main, args)
    second = runner.invoke(cli.main, args)
    assert first.exit_code == 0
    assert second.exit_code == 0
    assert first.stdout == second.stdout  # byte-identical with timing excluded
