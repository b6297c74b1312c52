import math
import random
from fractions import Fraction
from itertools import product

import pytest

from kakeya.bounds import count_Nq
from kakeya.gf import field_make
from kakeya.sets import (
    KakeyaSet,
    construct_even,
    construct_odd,
    construct_variant,
    even_size_formula,
    full_space,
    kakeya_set_from_dict,
    odd_size_formula,
    upper_bound_size,
    verify,
)
from kakeya.space import canonical_directions, line_points


def _odd_slab_points(field, n):
    """Brute-force D_n by filtering all of F_q^n."""
    sq = {field.mul(c, c) for c in field.elements()}
    out = set()
    for p in product(range(field.q), repeat=n):
        beta = p[-1]
        if all(field.add(a, field.mul(beta, beta)) in sq for a in p[:-1]):
            out.add(p)
    return out


def test_odd_core_size_q5_n3():
    # q choices for the last coordinate, (q+1)/2 per remaining coordinate
    field = field_make(5)
    assert len(_odd_slab_points(field, 3)) == 5 * 3**2


def test_odd_union_size_q3_n2():
    kset = construct_odd(field_make(3), 2)
    assert kset.size == 7


def test_odd_construction_matches_bruteforce_filter():
    for q in (3, 5, 7):
        field = field_make(q)
        for n in (2, 3):
            kset = construct_odd(field, n)
            expected = _odd_slab_points(field, n) | {
                p + (0,) for p in product(range(q), repeat=n - 1)
            }
            assert kset.points == frozenset(expected)
            assert kset.size == odd_size_formula(q, n)


def test_even_sizes_against_formula_and_enumeration():
    for q in (2, 4, 8):
        field = field_make(q)
        for n in (2, 3):
            kset = construct_even(field, n)
            brute = set()
            for p in product(range(q), repeat=n):
                beta = p[-1]
                img = field.artin_schreier_image(beta)
                if all(a in img for a in p[:-1]):
                    brute.add(p)
            assert kset.points == frozenset(brute)
            assert kset.size == even_size_formula(q, n)
    assert even_size_formula(4, 2) == 10
    assert even_size_formula(8, 2) == 36


def test_wrong_characteristic_rejected():
    with pytest.raises(ValueError):
        construct_odd(field_make(4), 2)
    with pytest.raises(ValueError):
        construct_even(field_make(5), 2)
    with pytest.raises(ValueError):
        construct_variant(field_make(4), 2, "recursive-odd")
    with pytest.raises(ValueError):
        construct_variant(field_make(8), 2, "even-style-odd")
    with pytest.raises(ValueError):
        construct_odd(field_make(5), 1)
    with pytest.raises(ValueError):
        construct_variant(field_make(5), 2, "nope")


def test_stored_witnesses_cover_their_lines():
    for q, variants in ((5, ("odd", "recursive-odd", "even-style-odd")),
                        (4, ("even",))):
        field = field_make(q)
        for variant in variants:
            for n in (2, 3):
                kset = construct_variant(field, n, variant)
                assert kset.witnesses is not None
                for b in canonical_directions(field, n):
                    a = kset.witnesses[b]
                    assert line_points(field, a, b) <= kset.points, (variant, b)


def test_odd_witness_square_identity():
    # along every constructed line, alpha_i + beta^2 is the square
    # (b_i/(2 b_n) + t b_n)^2
    field = field_make(7)
    kset = construct_odd(field, 3)
    two = field.add(1, 1)
    for b in canonical_directions(field, 3):
        if b[-1] == 0:
            continue
        a = kset.witnesses[b]
        for t in field.elements():
            pt = tuple(field.add(x, field.mul(t, y)) for x, y in zip(a, b))
            beta = pt[-1]
            for i, alpha in enumerate(pt[:-1]):
                val = field.add(alpha, field.mul(beta, beta))
                root = field.add(
                    field.div(b[i], field.mul(two, b[-1])),
                    field.mul(t, b[-1]),
                )
                assert val == field.mul(root, root)
                assert field.is_square(val)


def test_verify_full_space():
    res = verify(full_space(field_make(3), 2))
    assert res.ok


def test_verify_fails_without_zero_slab():
    # squares {0, 1} in F_3 cannot cover a full horizontal line
    field = field_make(3)
    core = _odd_slab_points(field, 2)
    res = verify(KakeyaSet(field, 2, frozenset(core)))
    assert not res.ok
    assert res.failing_direction == (1, 0)


def test_verify_even_example():
    assert verify(construct_even(field_make(4), 2)).ok


def test_verify_searches_without_witnesses():
    kset = construct_odd(field_make(5), 2)
    bare = KakeyaSet(kset.field, kset.n, kset.points)
    res = verify(bare)
    assert res.ok
    for b, a in res.witnesses.items():
        assert line_points(kset.field, a, b) <= kset.points


def test_verify_threaded_matches_sequential():
    kset = construct_odd(field_make(5), 2)
    assert verify(kset, threads=4) == verify(kset, threads=1)


def test_verify_translation_invariant():
    field = field_make(5)
    kset = construct_odd(field, 2)
    rng = random.Random(5)
    for _ in range(5):
        shift = tuple(rng.randrange(5) for _ in range(2))
        assert verify(kset.translate(shift)).ok


def test_recursive_variant_smaller_for_n3():
    for q in (3, 5, 7):
        field = field_make(q)
        rec = construct_variant(field, 3, "recursive-odd")
        plain = construct_odd(field, 3)
        assert rec.size < plain.size
        assert verify(rec).ok


def test_even_style_in_odd_characteristic_verifies():
    kset = construct_variant(field_make(5), 2, "even-style-odd")
    assert verify(kset).ok


def test_lemma_sandwich_for_verified_sets():
    # a real Kakeya set can never beat the counting bound
    for q, variant in ((3, "odd"), (5, "odd"), (4, "even"), (8, "even")):
        field = field_make(q)
        for n in (2, 3):
            kset = construct_variant(field, n, variant)
            assert verify(kset).ok
            for m in range(1, 2 * n + 1):
                assert math.comb(m + n - 1, n) * kset.size >= count_Nq(n, q, m)


def test_upper_bound_size_reports():
    rep = upper_bound_size(field_make(4), 2, "even")
    assert rep.exact == 10
    assert rep.leading_term == 8
    assert rep.remainder == 2
    assert rep.c_coefficient == Fraction(1, 2)
    rep = upper_bound_size(field_make(5), 3, "odd")
    assert rep.exact <= 45 + 25
    assert rep.leading_term == Fraction(125, 4)


def test_size_ratio_approaches_leading_constant():
    # closed-form evaluation only, no enumeration
    for n in (2, 3, 4):
        prev = None
        for q in (101, 499):
            ratio = Fraction(odd_size_formula(q, n), q**n)
            err = abs(ratio - Fraction(1, 2 ** (n - 1)))
            if prev is not None:
                assert err < prev
            prev = err
            assert err < Fraction(2, q)


def test_serialization_round_trip():
    kset = construct_even(field_make(4), 2)
    d = kset.to_dict()
    assert d["format"] == 1 and d["q"] == 4 and d["n"] == 2
    loaded = kakeya_set_from_dict(d)
    assert loaded.points == kset.points
    assert loaded.witnesses == kset.witnesses
    assert loaded.provenance == "even-construction"
