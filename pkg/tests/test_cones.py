"""Cone descriptions, membership oracles, and the shadow search."""

from fractions import Fraction
from itertools import product

import pytest

from lrcone.partitions import multi_coef, partitions_in_box, subpartitions, trim
from lrcone.cones import (
    HornDatum,
    all_horn_data,
    enumerate_horn,
    format_point,
    horn_slack,
    inequality_system,
    member,
    nonvanishing,
    parse_point,
    parse_subset,
    point_from_json,
    point_to_json,
    shadow,
)


def test_parse_and_format_roundtrip():
    text = "1,1,0;1,0,0;1,1,1"
    assert format_point(parse_point(text)) == text
    assert parse_subset("{2,4}") == (2, 4)
    p = parse_point(text)
    assert point_from_json(point_to_json(p)) == p


def test_enumerate_horn_r2():
    got = [(h.I, h.K) for h in enumerate_horn(2, 3, 1)]
    assert got == [(((1,), (1,)), (1,)),
                   (((1,), (2,)), (2,)),
                   (((2,), (1,)), (2,))]


def test_enumerate_horn_contains_worked_facet():
    assert any(h.I == ((2,), (2,)) and h.K == (3,)
               for h in enumerate_horn(3, 3, 1))


def test_enumerate_horn_range_errors():
    with pytest.raises(ValueError):
        enumerate_horn(1, 3, 1)
    with pytest.raises(ValueError):
        enumerate_horn(3, 3, 3)


def test_enumerate_horn_matches_brute_force():
    from itertools import combinations
    from lrcone.partitions import coef_of_subsets
    for r, d in ((2, 1), (3, 1), (3, 2)):
        subs = list(combinations(range(1, r + 1), d))
        brute = {(I1, I2, K) for I1, I2, K in product(subs, repeat=3)
                 if coef_of_subsets([I1, I2], K) == 1}
        got = {(h.I[0], h.I[1], h.K) for h in enumerate_horn(r, 3, d)}
        assert got == brute


def test_enumerate_horn_symmetric_in_inputs():
    for h in enumerate_horn(3, 3, 1):
        swapped = (h.I[1], h.I[0])
        assert any(g.I == swapped and g.K == h.K for g in enumerate_horn(3, 3, 1))


def test_inequality_system_r1_eqlr():
    sys = inequality_system(1, 3, "EqLR")
    # lam1>=0, lam2>=0, nu>=0, trace, two containments; no Horn forms
    labels = sorted(f.label for f in sys.forms)
    assert labels == ["containment", "containment", "nonneg", "nonneg",
                      "nonneg", "trace"]
    assert not any(f.label == "horn" for f in sys.forms)


def test_trace_is_equality_for_lr():
    sys = inequality_system(2, 3, "LR")
    trace = [f for f in sys.forms if f.label == "trace"]
    assert len(trace) == 1 and trace[0].rel == "=="
    eq_sys = inequality_system(2, 3, "EqLR")
    assert [f.rel for f in eq_sys.forms if f.label == "trace"] == [">="]


def test_worked_facet_form_present():
    sys = inequality_system(3, 3, "EqLR")
    target = None
    for f in sys.forms:
        if f.label == "horn" and f.datum.I == ((2,), (2,)) and f.datum.K == (3,):
            target = f
    # lam^1_2 + lam^2_2 - nu_3 >= 0
    assert target.coeffs == (0, 1, 0, 0, 1, 0, 0, 0, -1)


def test_member_examples():
    assert member(parse_point("1,0;1,0;1,1"), "LR")
    p = parse_point("1,1;1,1;2,1")
    assert member(p, "EqLR") and not member(p, "LR")
    assert member(parse_point("2,1,1;2,1,1;2,2,2"), "EqLR")


def test_member_rational_point():
    assert member(parse_point("1/2,0;1/2,0;1/2,1/2"), "LR")
    assert not member(parse_point("1/3,0;0,0;1/2,0"), "LR")


def test_member_shape_error():
    with pytest.raises(ValueError):
        inequality_system(2, 3, "LR").is_member(((1,), (1,), (1,)))


def test_horn_slack():
    h = HornDatum(3, 3, 1, ((2,), (2,)), (3,))
    assert horn_slack(parse_point("0,0,0;0,0,0;0,0,0"), h) == 0
    assert horn_slack(parse_point("1,1,0;1,0,0;1,1,1"), h) == 0
    assert horn_slack(parse_point("1,1,1;1,1,1;1,1,1"), h) == 1


def test_nonvanishing():
    assert nonvanishing([(1,), (1,)], (2,), False)
    assert nonvanishing([(1, 0), (1, 0)], (1, 1), True)
    assert not nonvanishing([(1, 0), (0, 0)], (0, 0), True)


def test_lr_membership_iff_coefficient_nonzero():
    # all partition triples in a 3x2 box
    parts = partitions_in_box(3, 2)
    for lam, mu, nu in product(parts, repeat=3):
        expected = multi_coef((lam, mu), nu) != 0
        assert nonvanishing([lam, mu], nu, False) == expected, (lam, mu, nu)


def test_face_inclusions():
    pts = [tuple(p) for p in product(partitions_in_box(2, 2), repeat=3)]
    for x in pts:
        if member(x, "CSL"):
            assert member(x, "LR")
        if member(x, "LR"):
            assert member(x, "C") and member(x, "EqLR")
        if member(x, "EqLR"):
            assert member(x, "EqC")


def test_nu_r_nonnegativity_is_implied():
    # LR system without the chamber/nonneg forms on nu_r never admits an
    # integer partition-tuple point with nu_r < 0 (footnote check, r <= 3)
    for r in (2, 3):
        sys = inequality_system(r, 3, "LR")
        keep = [f for f in sys.forms]
        for lam1 in partitions_in_box(r, 2):
            for lam2 in partitions_in_box(r, 2):
                for nu_hi in partitions_in_box(r - 1, 2 * r):
                    for nu_r in range(-2, 1):
                        if nu_hi and nu_hi[-1] < nu_r:
                            continue
                        nu = nu_hi + (nu_r,)
                        x = (lam1, lam2, nu)
                        flat = [v for b in x for v in b]
                        ok = all((f.dot(flat) == 0) if f.rel == "=="
                                 else (f.dot(flat) >= 0) for f in keep
                                 if f.coeffs[-1] == 0 or f.label in ("trace", "horn"))
                        if ok:
                            assert nu_r >= 0


def test_shadow_identity_on_lr():
    x = parse_point("1,0;1,0;1,1")
    assert shadow(x, 1) == x


def test_shadow_examples():
    assert shadow(parse_point("1,1;1,1;2,1"), 1) == parse_point("1,0;1,1;2,1")
    assert shadow(parse_point("1;1;1"), 2) == parse_point("1;0;1")


def test_shadow_properties():
    x = parse_point("2,1,1;2,1,1;2,2,2")
    for j in (1, 2):
        y = shadow(x, j)
        assert member(y, "LR")
        assert sum(sum(b) for b in y[:-1]) == sum(y[-1])
        for k in range(3):
            if k != j - 1:
                assert y[k] == x[k]


def test_shadow_domain_errors():
    with pytest.raises(ValueError):
        shadow(parse_point("1,0;0,0;0,0"), 1)  # not in EqLR
    with pytest.raises(ValueError):
        shadow(parse_point("1/2;0;1"), 1)  # not integral
    with pytest.raises(ValueError):
        shadow(parse_point("1;0;1"), 3)  # block index out of range
