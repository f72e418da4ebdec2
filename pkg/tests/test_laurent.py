import random

import pytest

from mixbound import geometry
from mixbound.laurent import (
    LaurentPoly,
    as_poly_in_u1,
    combination_solve,
    exact_divides,
    in_ideal,
    normalize,
)

from conftest import L, random_laurent, random_nonmonomial


class TestLaurentBasics:
    def test_support_examples(self):
        assert L("u2+u1+u1^3u2").support() == {(0, 1), (1, 0), (3, 1)}
        assert LaurentPoly({}, 2).support() == set()
        assert L("1+u1+u2+u2^2").support() == {(0, 0), (1, 0), (0, 1), (0, 2)}

    def test_zero_coefficients_dropped(self):
        f = LaurentPoly({(0, 0): 2, (1, 1): 1}, 2)
        assert f.support() == {(1, 1)}

    def test_canonical_term_order(self):
        f = L("u1^2 + u2 + 1 + u1u2^-1", 3)
        assert [e for e, _ in f.terms()] == sorted(f.support())

    def test_mixed_moduli_rejected(self):
        with pytest.raises(ValueError):
            L("u1") * L("u1", 3)


class TestNormalize:
    def test_clears_negative_powers(self):
        shift, g = normalize(L("u1^-1u2 + 1"))
        assert shift == (-1, 0)
        assert g == L("u2 + u1")

    def test_already_normalized(self):
        f = L("u2+u1+u1^3u2")
        assert normalize(f) == ((0, 0), f)

    def test_monomial(self):
        shift, g = normalize(L("u1^2u2^3"))
        assert shift == (2, 3) and g == L("1")

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            normalize(LaurentPoly({}, 2))

    def test_roundtrip_is_identity(self, rng):
        for _ in range(100):
            f = random_laurent(rng, rng.choice([2, 3, 5]))
            if f.is_zero():
                continue
            shift, g = normalize(f)
            assert g.shift(shift) == f
            assert min(e1 for e1, _ in g.support()) == 0
            assert min(e2 for _, e2 in g.support()) == 0


class TestPolyInU1:
    def test_ringpoly_example(self):
        pu = as_poly_in_u1(L("u2+u1+u1^3u2"))
        assert [q.to_string("u2") for q in pu.coeffs] == ["u2", "1", "0", "u2"]
        assert pu.shift == (0, 0)

    def test_monomial_shift(self):
        pu = as_poly_in_u1(L("u1"))
        assert [q.to_string("u2") for q in pu.coeffs] == ["1"]
        assert pu.shift == (1, 0)

    def test_example_quadrilateral(self):
        pu = as_poly_in_u1(L("u1^2+u1u2^2+u2^3+u2"))
        assert [q.to_string("u2") for q in pu.coeffs] == ["u2+u2^3", "u2^2", "1"]

    def test_roundtrip(self, rng):
        for _ in range(100):
            f = random_laurent(rng, rng.choice([2, 3, 5]))
            if f.is_zero():
                continue
            assert as_poly_in_u1(f).to_laurent() == f


class TestMul:
    def test_frobenius_square(self):
        assert L("1+u1") * L("1+u1") == L("1+u1^2")

    def test_identity(self):
        f = L("u2+u1+u1^3u2")
        assert f * L("1") == f

    def test_hand_expansion(self):
        assert L("1+u1+u2") * L("u1u2") == L("u1u2+u1^2u2+u1u2^2")

    def test_commutative_associative(self):
        rng = random.Random(314)
        for _ in range(200):
            p = rng.choice([2, 3, 5])
            a, b, c = (random_laurent(rng, p) for _ in range(3))
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)

    def test_product_hull_is_minkowski_sum(self, rng):
        for _ in range(100):
            p = rng.choice([2, 3, 5])
            a, b = random_laurent(rng, p), random_laurent(rng, p)
            if a.is_zero() or b.is_zero():
                continue
            prod = a * b
            assert prod.support() <= geometry.minkowski_sum_points(
                a.support(), b.support()
            )
            got = geometry.convex_hull(prod.support())
            expected = geometry.convex_hull(
                geometry.minkowski_sum_points(a.support(), b.support())
            )
            assert got.vertices == expected.vertices


class TestExactDivides:
    def test_char2_square(self):
        assert exact_divides(L("1+u1+u2"), L("1+u1^2+u2^2")) == L("1+u1+u2")

    def test_degree_obstruction(self):
        assert exact_divides(L("u2+u1+u1^3u2"), L("u1")) is None

    def test_zero_dividend(self):
        assert exact_divides(L("1+u1"), LaurentPoly({}, 2)) == LaurentPoly({}, 2)

    def test_division_by_zero_rejected(self):
        with pytest.raises(ValueError):
            exact_divides(LaurentPoly({}, 2), L("1+u1"))

    def test_constructed_multiples_roundtrip(self):
        rng = random.Random(2718)
        done = 0
        while done < 200:
            p = rng.choice([2, 3, 5])
            f = random_laurent(rng, p)
            g = random_laurent(rng, p)
            if f.is_zero():
                continue
            done += 1
            q = exact_divides(f, f * g)
            assert q == g

    def test_non_multiples_rejected(self, rng):
        rejected = 0
        while rejected < 50:
            p = rng.choice([2, 3])
            f = random_nonmonomial(rng, p)
            g = random_laurent(rng, p)
            q = exact_divides(f, g)
            if q is None:
                rejected += 1
            else:
                assert f * q == g


class TestInIdeal:
    def test_generator_in_own_ideal(self):
        f = L("1+u1+u2")
        assert in_ideal(f, f)

    def test_units_not_in_proper_ideal(self):
        assert not in_ideal(L("u1"), L("1+u1+u2"))

    def test_constructed_member(self):
        f = L("1+u1+u2")
        assert in_ideal(f * L("u1^-1+u2"), f)

    def test_zero_in_ideal(self):
        assert in_ideal(LaurentPoly({}, 2), L("1+u1+u2"))

    def test_monomial_generator_rejected(self):
        with pytest.raises(ValueError):
            in_ideal(L("1+u1"), L("u1u2"))


class TestCombinationSolve:
    def test_support_shape_constants(self):
        ms = combination_solve(L("1+u1+u2"), [(0, 0), (1, 0), (0, 1)], 0,
                               constants_only=True)
        assert [m.to_string() for m in ms] == ["1", "1", "1"]

    def test_no_constant_pair(self):
        assert (
            combination_solve(L("1+u1+u2"), [(0, 0), (5, 0)], 0, constants_only=True)
            is None
        )

    def test_window_witness(self):
        ms = combination_solve(
            L("1+u1+u2+u2^2"), [(0, 0), (1, 0), (0, 2)], 1
        )
        assert [m.to_string() for m in ms] == ["1", "1", "u2^-1+1"]

    def test_monomial_rejected(self):
        with pytest.raises(ValueError):
            combination_solve(L("u1"), [(0, 0), (1, 0)], 0)

    def test_duplicate_points_rejected(self):
        with pytest.raises(ValueError):
            combination_solve(L("1+u1+u2"), [(0, 0), (0, 0)], 0)

    def test_returned_witnesses_verify(self, rng):
        done = 0
        while done < 60:
            p = rng.choice([2, 3])
            f = random_nonmonomial(rng, p, max_terms=4, span=2)
            pts = []
            while len(pts) < rng.randint(2, 3):
                pt = (rng.randint(-2, 2), rng.randint(-2, 2))
                if pt not in pts:
                    pts.append(pt)
            done += 1
            ms = combination_solve(f, pts, rng.choice([0, 1]))
            if ms is None:
                continue
            combo = LaurentPoly({}, p)
            for m, a in zip(ms, pts):
                combo = combo + m.shift(a)
            assert in_ideal(combo, f)
            assert any(not m.is_zero() for m in ms)
            for m in ms:
                if not m.is_zero():
                    assert exact_divides(f, m) is None

    def test_canonical_witness_leading_term_is_one(self, rng):
        done = 0
        while done < 40:
            p = rng.choice([2, 3])
            f = random_nonmonomial(rng, p, max_terms=4, span=2)
            pts = [(0, 0), (rng.randint(1, 3), rng.randint(0, 2))]
            if pts[1] == pts[0]:
                continue
            done += 1
            ms = combination_solve(f, pts, 1)
            if ms is None:
                continue
            first = next(m for m in ms if not m.is_zero())
            assert first.terms()[0] == ((0, 0), 1)
