import itertools
import random
from fractions import Fraction as F

import pytest

from perioddomains import finflag as ffl
from perioddomains import rootdata as rd
from perioddomains import weyl
from perioddomains.errors import (
    BudgetExceeded,
    MalformedNu,
    SingularTransform,
    ValidationError,
    ZeroDimensional,
)


@pytest.mark.parametrize("p,e,m", [(2, 1, 1), (2, 1, 2), (2, 1, 3), (2, 1, 4),
                                   (3, 1, 1), (3, 1, 2), (5, 1, 1), (2, 2, 2)])
def test_field_axioms(p, e, m):
    ff = ffl.finite_field(p, e, m)
    Q = ff.order
    sample = range(Q) if Q <= 16 else random.Random(0).sample(range(Q), 16)
    for a in sample:
        assert ff.add(a, 0) == a
        assert ff.mul(a, 1) == a
        assert ff.add(a, ff.neg(a)) == 0
        if a:
            assert ff.mul(a, ff.inv(a)) == 1
    for a, b in itertools.product(sample, repeat=2):
        assert ff.add(a, b) == ff.add(b, a)
        assert ff.mul(a, b) == ff.mul(b, a)


def test_frobenius_fixes_exactly_the_base_field():
    ff = ffl.finite_field(2, 1, 3)
    fixed = {a for a in range(ff.order) if ff.frobenius(a) == a}
    assert fixed == set(ff.base_elements)
    ff = ffl.finite_field(2, 2, 2)  # base F4 inside F16
    fixed = {a for a in range(ff.order) if ff.frobenius(a) == a}
    assert fixed == set(ff.base_elements)
    assert len(fixed) == 4


def test_field_budget():
    with pytest.raises(BudgetExceeded):
        ffl.FiniteField(2, 1, 17)
    with pytest.raises(BudgetExceeded):
        ffl.FiniteField(2, 1, 5, max_order=16)


def test_gaussian_binomial():
    assert ffl.gaussian_binomial(2, 1, 4) == 5
    assert ffl.gaussian_binomial(3, 1, 2) == 7
    assert ffl.gaussian_binomial(3, 2, 2) == 7
    assert ffl.gaussian_binomial(4, 2, 3) == 130


@pytest.mark.parametrize("q,m,ell,dims,expected", [
    (2, 2, 1, (1,), 5),
    (2, 1, 2, (1, 2), 21),
    (2, 3, 2, (1,), 73),
    (3, 1, 2, (2,), 13),
    (2, 2, 3, (1, 3), 1785),  # 85 lines in F4^4, times 21 hyperplanes above each
])
def test_flag_counts(q, m, ell, dims, expected):
    ff = ffl.finite_field(q, 1, m)
    points = list(ffl.enumerate_flags(ff, ell, dims))
    assert len(points) == expected
    assert len(points) == ffl.flag_count(ell + 1, dims, ff.order)
    assert len(set(points)) == expected  # no duplicates


def test_flag_budget_and_validation():
    ff = ffl.finite_field(2, 1, 2)
    with pytest.raises(BudgetExceeded):
        list(ffl.enumerate_flags(ff, 2, (1, 2), max_points=3))
    with pytest.raises(ValidationError):
        list(ffl.enumerate_flags(ff, 2, (2, 1)))
    with pytest.raises(ValidationError):
        list(ffl.enumerate_flags(ff, 2, (3,)))


def test_subspace_enumeration_matches_gaussian_counts():
    ff = ffl.finite_field(3, 1, 1)
    for k in (1, 2):
        subs = list(ffl.enumerate_rref(3, k, range(3), ff))
        assert len(subs) == ffl.gaussian_binomial(3, k, 3)
        assert len(set(subs)) == len(subs)


def test_slope_examples():
    assert ffl.slope(2, (1, 2), (1, -1)) == 0
    assert ffl.slope(1, (1, 1), (2, -1, -1)) == 2
    assert ffl.slope(1, (0, 1), (2, -1, -1)) == -1
    with pytest.raises(ZeroDimensional):
        ffl.slope(0, (), (1, -1))


def test_run_lengths_and_dims():
    jumps, mults = ffl.run_lengths((2, -1, -1))
    assert jumps == (F(2), F(-1)) and mults == (1, 2)
    assert ffl.flag_dims((2, -1, -1)) == (1,)
    assert ffl.flag_dims((1, 0, -1)) == (1, 2)
    assert ffl.flag_dims((0, 0, 0)) == ()
    with pytest.raises(MalformedNu):
        ffl.run_lengths((0, 1, -1))


def test_semistable_p1_f4():
    ff = ffl.finite_field(2, 1, 2)
    rational = set(ff.base_elements)
    for x in ffl.enumerate_flags(ff, 1, (1,)):
        row = x.bases[0][0]
        is_rational = all(v in rational for v in row)
        assert ffl.is_semistable_subspace_test(x, (1, -1), ff) == (not is_rational)


def test_full_rational_flag_never_semistable():
    # any rational full flag is destabilized by its own first step
    ff = ffl.finite_field(2, 1, 2)
    point = ffl.FlagPoint(dims=(1, 2), bases=(((1, 0, 0),), ((1, 0, 0), (0, 1, 0))))
    assert not ffl.is_semistable_subspace_test(point, (1, 0, -1), ff)
    assert not ffl.is_semistable_strata_test(point, (1, 0, -1), ff)


def test_relative_position_identity_and_flip():
    ff = ffl.finite_field(2, 1, 2)
    ident = ((1, 0), (0, 1))
    std = ffl.FlagPoint(dims=(1,), bases=(((1, 0),),))
    w = ffl.relative_position(std, ident, ff)
    assert w.length == 0
    opposite = ffl.FlagPoint(dims=(1,), bases=(((0, 1),),))
    w = ffl.relative_position(opposite, ident, ff)
    assert w.length == 1


def test_relative_position_column_flip_on_coordinate_flags():
    # permuting the reference basis columns by the longest element sends the
    # position of a coordinate flag to the minimal representative of w0 w
    ff = ffl.finite_field(2, 1, 1)
    n = 3
    rs = rd.build_root_system("A", 2)
    w0 = weyl.longest_element(rs)
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    flipped = tuple(tuple(int(i == n - 1 - j) for j in range(n)) for i in range(n))
    for x in ffl.enumerate_flags(ff, 2, (1,)):
        w = ffl.relative_position(x, ident, ff)
        if all(sum(row) == 1 for row in x.bases[-1]):  # coordinate flag
            wf = ffl.relative_position(x, flipped, ff)
            expected = weyl.min_coset_rep(w0 * w, (2,))
            assert wf.root_perm == expected.root_perm


def test_relative_position_rejects_singular():
    ff = ffl.finite_field(2, 1, 2)
    std = ffl.FlagPoint(dims=(1,), bases=(((1, 0),),))
    with pytest.raises(SingularTransform):
        ffl.relative_position(std, ((1, 0), (1, 0)), ff)


@pytest.mark.parametrize("q,m,nu", [
    (2, 2, (1, -1)), (2, 3, (1, -1)), (3, 2, (1, -1)),
])
def test_two_routes_agree_rank_one(q, m, nu):
    ff = ffl.finite_field(q, 1, m)
    for x in ffl.enumerate_flags(ff, 1, ffl.flag_dims(nu)):
        assert ffl.is_semistable_subspace_test(x, nu, ff) == \
            ffl.is_semistable_strata_test(x, nu, ff)


@pytest.mark.parametrize("q,m,nu", [
    (2, 2, (2, -1, -1)), (2, 2, (1, 1, -2)), (2, 2, (1, 0, -1)),
    (3, 1, (1, 0, -1)),
])
def test_two_routes_agree_rank_two(q, m, nu):
    ff = ffl.finite_field(q, 1, m)
    for x in ffl.enumerate_flags(ff, 2, ffl.flag_dims(nu)):
        assert ffl.is_semistable_subspace_test(x, nu, ff) == \
            ffl.is_semistable_strata_test(x, nu, ff)


def test_two_routes_agree_rank_three_sample():
    ff = ffl.finite_field(2, 1, 2)
    nu = (3, -1, -1, -1)
    for x in ffl.enumerate_flags(ff, 3, ffl.flag_dims(nu)):
        assert ffl.is_semistable_subspace_test(x, nu, ff) == \
            ffl.is_semistable_strata_test(x, nu, ff)


def test_sampled_strata_test_never_underreports(rng):
    ff = ffl.finite_field(2, 1, 2)
    nu = (2, -1, -1)
    for x in ffl.enumerate_flags(ff, 2, (1,)):
        full = ffl.is_semistable_strata_test(x, nu, ff)
        sampled = ffl.is_semistable_strata_test(x, nu, ff, g_sample=20, rng=rng)
        if full:
            assert sampled


@pytest.mark.parametrize("q,m,expected", [
    (2, 2, 2), (2, 3, 6), (3, 2, 6),
])
def test_drinfeld_counts_rank_one(q, m, expected):
    ff = ffl.finite_field(q, 1, m)
    assert ffl.count_semistable(ff, 1, (1, -1)) == expected
    # matches |P1(F_{q^m})| - |P1(F_q)|
    assert expected == (q ** m + 1) - (q + 1)


@pytest.mark.parametrize("m,expected", [(2, 0), (3, 24)])
def test_counts_rank_two(m, expected):
    ff = ffl.finite_field(2, 1, m)
    assert ffl.count_semistable(ff, 2, (2, -1, -1)) == expected


def test_dual_counts_match():
    # Omega and its dual are isomorphic varieties, so the counts agree
    for m in (2, 3):
        ff = ffl.finite_field(2, 1, m)
        assert ffl.count_semistable(ff, 2, (2, -1, -1)) == \
            ffl.count_semistable(ff, 2, (1, 1, -2))


def test_fibration_count_for_full_flag_drinfeld():
    # nu = (4,-1,-3): first-step Drinfeld with a full P1-fiber over Omega
    ff = ffl.finite_field(2, 1, 3)
    count = ffl.count_semistable(ff, 2, (4, -1, -3))
    omega = ffl.count_semistable(ff, 2, (2, -1, -1))
    assert count == omega * (ff.order + 1)


def test_frobenius_stability_of_semistable_set():
    ff = ffl.finite_field(2, 1, 2)
    nu = (2, -1, -1)
    verdicts = {}
    for x in ffl.enumerate_flags(ff, 2, (1,)):
        verdicts[x.bases] = ffl.is_semistable_subspace_test(x, nu, ff)
    for bases, verdict in verdicts.items():
        frob_bases = tuple(
            tuple(tuple(ff.frobenius(v) for v in row) for row in step)
            for step in bases)
        assert verdicts[frob_bases] == verdict


def test_monotonicity_in_m():
    counts = [ffl.count_semistable(ffl.finite_field(2, 1, m), 1, (1, -1))
              for m in (1, 2, 3, 4)]
    assert counts == sorted(counts)


def test_every_point_semistable_when_unstable_locus_empty():
    # nu = 0 on a point-flag: nothing can destabilize
    ff = ffl.finite_field(2, 1, 2)
    points = list(ffl.enumerate_flags(ff, 1, ()))
    assert len(points) == 1
    assert ffl.is_semistable_subspace_test(points[0], (0, 0), ff)
    assert ffl.is_semistable_strata_test(points[0], (0, 0), ff)


def test_budget_rank_one():
    ff = ffl.finite_field(2, 1, 2)
    x = next(iter(ffl.enumerate_flags(ff, 1, (1,))))
    with pytest.raises(BudgetExceeded):
        ffl.is_semistable_subspace_test(x, (1, -1), ff, max_subspaces=1)
    with pytest.raises(BudgetExceeded):
        ffl.is_semistable_strata_test(x, (1, -1), ff, max_translates=1)


def test_res_pair_diagonal_complement():
    # degree-2 restriction of the rank-one group at q=2: working field F4 is
    # the quadratic extension itself; equal nonzero weights leave the
    # complement of a twisted-diagonal copy of P1(F4): 25 - 5 = 20 points
    ff = ffl.finite_field(2, 1, 2)
    count, total = ffl.count_semistable_res_pair(ff, (1, -1), (1, -1))
    assert (count, total) == (20, 25)
    points = ffl.projective_line_points(ff)
    unstable = [(L1, L2) for L1 in points for L2 in points
                if not ffl.is_semistable_res_pair(ff, L1, L2, (1, -1), (1, -1))]
    frob = {(L, ffl._frobenius_line(L, ff)) for L in points}
    assert set(unstable) == frob
    assert len(frob) == len(points) == 5


def test_res_pair_unequal_weights():
    ff = ffl.finite_field(2, 1, 2)
    # second factor trivial: the first factor must avoid rational points of
    # the quadratic-extension line, which over F4 itself leaves nothing
    count, total = ffl.count_semistable_res_pair(ff, (1, -1), (0, 0))
    assert (count, total) == (0, 5)
    # over F16 the twisted check leaves P1(F16) minus P1(F4) on the first factor
    ff16 = ffl.finite_field(2, 1, 4)
    count, total = ffl.count_semistable_res_pair(ff16, (2, -2), (1, -1))
    assert total == 17 * 17
    assert count == (17 - 5) * 17


def test_res_pair_validation():
    ff = ffl.finite_field(2, 1, 2)
    with pytest.raises(MalformedNu):
        ffl.count_semistable_res_pair(ff, (1, 0), (1, -1))
    odd = ffl.finite_field(2, 1, 3)
    with pytest.raises(ValidationError):
        ffl.is_semistable_res_pair(odd, (1, 0), (1, 0), (1, -1), (1, -1))
