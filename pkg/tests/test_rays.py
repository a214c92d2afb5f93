"""The facet algorithm and cone-level ray enumeration."""

import random

import pytest

from lrcone.cones import (
    HornDatum,
    all_horn_data,
    enumerate_horn,
    flatten,
    horn_slack,
    member,
    parse_point,
)
from lrcone.hilbert import lattice_points_bounded
from lrcone.rays import (
    certify,
    diagonal_no_facet_check,
    enumerate_rays,
    exact_rank,
    facet_rays,
    ind_hat,
    is_extremal,
    p2_hat,
    pi,
    pi_inverse,
    point_sub,
    primitive,
    special_rays,
    swap_datum,
    type1_data,
    type1_ray,
    x_ray,
    zero_point,
)

H631 = HornDatum(3, 3, 1, ((2,), (2,)), (3,))


def test_exact_rank():
    assert exact_rank([(1, 0), (0, 1)]) == 2
    assert exact_rank([(2, 4), (1, 2)]) == 1
    assert exact_rank([]) == 0


def test_primitive():
    from fractions import Fraction
    assert primitive(((2, 4), (0, 2))) == ((1, 2), (0, 1))
    assert primitive(((Fraction(1, 2),), (Fraction(1, 3),))) == ((3,), (2,))
    with pytest.raises(ValueError):
        primitive(((0,), (0,)))


def test_type1_data_worked_example():
    assert type1_data(H631) == [(1, 2), (2, 2), (3, 3)]


def test_type1_data_edge_rules():
    h = HornDatum(3, 3, 1, ((3,), (3,)), (3,))
    # a = 3 is not < r for j in {1,2}; (s,3) valid since 2 not in K
    assert type1_data(h) == [(3, 3)]
    h2 = HornDatum(2, 3, 1, ((1,), (1,)), (1,))
    # K = {1}: datum (s,1) needs a > 1
    assert type1_data(h2) == [(1, 1), (2, 1)]


def test_swap_datum():
    assert swap_datum(H631, (1, 2)) == ((((3,), (2,))), (3,))
    assert swap_datum(H631, (3, 3)) == ((((2,), (2,))), (2,))
    with pytest.raises(ValueError):
        swap_datum(H631, (1, 1))


def test_type1_rays_worked_example():
    assert type1_ray(H631, (1, 2)) == parse_point("1,1,0;1,0,0;1,1,1")
    assert type1_ray(H631, (2, 2)) == parse_point("1,0,0;1,1,0;1,1,1")
    assert type1_ray(H631, (3, 3)) == parse_point("1,0,0;1,0,0;1,1,0")


def test_type1_rays_on_facet_and_extremal():
    for h in all_horn_data(3, 3):
        for t in type1_data(h):
            ray = type1_ray(h, t)
            assert horn_slack(ray, h) == 0
            assert member(ray, "CSL")
            assert is_extremal(ray, "LR")


def test_pi_worked_examples():
    x = parse_point("1,0,0;1,0,1;1,1,0")
    assert pi(x, H631) == (parse_point("0;0;0"), parse_point("1,0;1,1;1,1"))
    y = parse_point("0,1,0;0,0,0;0,0,1")
    assert pi(y, H631) == (parse_point("1;0;1"), parse_point("0,0;0,0;0,0"))
    assert pi(zero_point(3, 3), H631) == (zero_point(1, 3), zero_point(2, 3))


def test_pi_inverse_roundtrip():
    x = parse_point("3,2,1;2,2,0;4,3,2")
    a, b = pi(x, H631)
    assert pi_inverse(a, b, H631) == x


def test_p2_hat_worked_examples():
    assert p2_hat(parse_point("1,0,0;1,0,1;1,1,0"), H631) == \
        parse_point("1,0,0;1,1,1;1,1,1")
    assert p2_hat(parse_point("0,1,0;0,0,0;0,0,1"), H631) == zero_point(3, 3)
    fixed = parse_point("1,0,0;1,0,0;1,0,0")
    assert p2_hat(fixed, H631) == fixed


def test_p2_hat_requires_facet_point():
    with pytest.raises(ValueError):
        p2_hat(parse_point("1,1,1;1,1,1;1,1,1"), H631)


def test_ind_hat_worked_examples():
    assert ind_hat(parse_point("0;0;0"), parse_point("1,0;1,1;1,1"), H631) == \
        parse_point("1,0,0;1,1,1;1,1,1")
    assert ind_hat(parse_point("1;0;1"), parse_point("0,0;0,0;0,0"), H631) == \
        zero_point(3, 3)
    assert ind_hat(parse_point("0;0;0"), parse_point("1,1;1,1;1,1"), H631) == \
        parse_point("2,1,1;2,1,1;2,2,2")


def test_is_extremal():
    assert is_extremal(parse_point("1,1;1,1;2,1"), "EqLR")
    assert not is_extremal(parse_point("2,1,1;2,1,1;2,2,2"), "EqLR")
    assert is_extremal(x_ray(1, 3, 3), "EqLR")
    with pytest.raises(ValueError):
        is_extremal(zero_point(2, 3), "LR")
    with pytest.raises(ValueError):
        is_extremal(parse_point("1,1;1,1;2,1"), "LR")  # nonmember


def test_special_rays():
    r1 = {p for p in special_rays(1, 3)}
    assert r1 == {parse_point("1;0;1"), parse_point("0;1;1"), parse_point("1;1;1")}
    r3 = special_rays(3, 3)
    assert parse_point("1,1,1;1,1,1;1,1,1") in r3
    assert parse_point("1,1,0;1,1,0;1,1,0") in r3
    assert (tuple(), ) not in r3
    # omega_1 + omega_1 < omega_3 excluded
    assert parse_point("1,0,0;1,0,0;1,1,1") not in r3


def test_worked_facet_decomposition():
    dec = facet_rays(H631, "EqLR")
    assert [p for _, p in dec.type1] == [
        parse_point("1,1,0;1,0,0;1,1,1"),
        parse_point("1,0,0;1,1,0;1,1,1"),
        parse_point("1,0,0;1,0,0;1,1,0")]
    expected_type2 = {parse_point(t) for t in (
        "0,0,0;1,0,0;1,0,0", "0,0,0;1,1,1;1,1,1",
        "1,0,0;0,0,0;1,0,0", "1,1,1;0,0,0;1,1,1",
        "1,0,0;1,0,0;1,0,0", "1,0,0;1,1,1;1,1,1",
        "1,1,1;1,0,0;1,1,1")}
    assert set(dec.type2_extremal) == expected_type2
    assert dec.type2_zero == 3
    assert set(dec.type2_nonextremal) == {
        parse_point("2,1,1;2,1,1;2,2,2"),
        parse_point("2,1,1;2,1,1;3,2,2")}


def test_ray_counts_small():
    assert len(enumerate_rays(1, 3, "LR")) == 2
    assert len(enumerate_rays(1, 3, "EqLR")) == 3
    assert len(enumerate_rays(2, 3, "LR")) == 5
    assert len(enumerate_rays(2, 3, "EqLR")) == 10
    assert len(enumerate_rays(3, 3, "LR")) == 10
    assert len(enumerate_rays(3, 3, "EqLR")) == 27


def test_rays_r2_table():
    table = ["0,0;1,0;1,0", "0,0;1,1;1,1", "1,0;0,0;1,0", "1,1;0,0;1,1",
             "1,0;1,0;1,1", "1,0;1,0;1,0", "1,0;1,1;1,1", "1,1;1,0;1,1",
             "1,1;1,1;1,1", "1,1;1,1;2,1"]
    assert set(enumerate_rays(2, 3, "EqLR")) == {parse_point(t) for t in table}


def test_rays_are_certified_and_primitive():
    for kind in ("LR", "EqLR"):
        rays = enumerate_rays(3, 3, kind)
        for p in rays:
            cert = certify(p, kind)
            assert cert.primitive and cert.extremal
        flats = [flatten(p) for p in rays]
        assert flats == sorted(flats)


def test_lr_equals_csl_plus_xj():
    for r in (1, 2, 3):
        lr = set(enumerate_rays(r, 3, "LR"))
        csl = set(enumerate_rays(r, 3, "CSL"))
        xs = {x_ray(j, r, 3) for j in (1, 2)}
        assert lr == csl | xs
        assert len(lr) == len(csl) + 2


def test_xj_on_every_horn_facet():
    for r in (2, 3):
        for j in (1, 2):
            xj = x_ray(j, r, 3)
            assert all(horn_slack(xj, h) == 0 for h in all_horn_data(r, 3))


def test_ortho_lemma_r3():
    # distinct type I rays on one facet: unit consecutive difference at the
    # datum's own position, zero at every other datum's position
    for h in all_horn_data(3, 3):
        pairs = [(t, type1_ray(h, t)) for t in type1_data(h)]
        for (t1, ray1) in pairs:
            for (t2, _) in pairs:
                j, a = t2
                if j < h.s:
                    diff = ray1[j - 1][a - 1] - ray1[j - 1][a]
                else:
                    diff = ray1[h.s - 1][a - 2] - ray1[h.s - 1][a - 1]
                assert diff == (1 if t1 == t2 else 0)


def test_noway_kernel_counts_r3():
    for h in all_horn_data(3, 3):
        data = type1_data(h)
        dec = facet_rays(h, "EqLR")
        assert dec.type2_zero == len(data)
        # pi of the type I rays spans the kernel
        vecs = []
        for t in data:
            a, b = pi(type1_ray(h, t), h)
            vecs.append(flatten(a) + flatten(b))
        assert exact_rank(vecs) == len(data)


def test_protheo_lattice_decomposition():
    # facet points decompose as nonneg integer type I combinations plus an
    # EqLR point of the complementary subcone
    rng = random.Random(7)
    for h in all_horn_data(3, 3):
        pts = [p for p in lattice_points_bounded(3, 3, "EqLR", 2)
               if horn_slack(p, h) == 0]
        for x in rng.sample(pts, min(25, len(pts))):
            z = p2_hat(x, h)
            assert member(z, "EqLR")
            diff = point_sub(x, z)
            # reconstruct the coefficients used by p2_hat
            coeffs = []
            for (j, a) in type1_data(h):
                if j < h.s:
                    coeffs.append(x[j - 1][a - 1] - x[j - 1][a])
                else:
                    coeffs.append(x[h.s - 1][a - 2] - x[h.s - 1][a - 1])
            assert all(c >= 0 and isinstance(c, int) for c in coeffs)
            rebuilt = zero_point(3, 3)
            for c, t in zip(coeffs, type1_data(h)):
                ray = type1_ray(h, t)
                rebuilt = tuple(tuple(u + c * v for u, v in zip(bu, bv))
                                for bu, bv in zip(rebuilt, ray))
            assert rebuilt == diff


def test_step4_rule_agreement_r4():
    # type1_ray raises on disagreement, so constructing every ray suffices
    for r in (2, 3, 4):
        for h in all_horn_data(r, 3):
            for t in type1_data(h):
                type1_ray(h, t)


def test_diagonal_no_facet_check():
    assert diagonal_no_facet_check(3, 3, 2)
    assert not diagonal_no_facet_check(3, 3, 1)
    assert diagonal_no_facet_check(1, 3, 1)
    for r in (2, 3, 4):
        for l in range(1, r + 1):
            assert diagonal_no_facet_check(r, 3, l) == (l >= r / 2)


def test_enumerate_rays_ceiling():
    with pytest.raises(ValueError):
        enumerate_rays(8, 3, "EqLR")
    with pytest.raises(ValueError):
        enumerate_rays(3, 3, "EqC")
