import random
from fractions import Fraction

import pytest

from mixbound import geometry
from mixbound.geometry import (
    POINT,
    POLYGON,
    SEGMENT,
    canonical_direction,
    centroid,
    contains,
    convex_hull,
    cross,
    faces,
    proportional_triangle_match,
    slope_set,
    triangle_homothety,
)


class TestConvexHull:
    def test_figure1_triangle(self):
        h = convex_hull({(0, 1), (1, 0), (3, 1)})
        assert h.degeneracy == POLYGON
        assert h.vertices == ((0, 1), (1, 0), (3, 1))

    def test_edge_interior_point_dropped(self):
        h = convex_hull({(0, 0), (1, 0), (0, 1), (0, 2)})
        assert h.vertices == ((0, 0), (1, 0), (0, 2))

    def test_point(self):
        assert convex_hull({(2, 3)}).degeneracy == POINT

    def test_segment_keeps_extremes(self):
        h = convex_hull({(0, 0), (1, 0), (2, 0)})
        assert h.degeneracy == SEGMENT
        assert h.vertices == ((0, 0), (2, 0))

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            convex_hull(set())

    def test_coordinate_limit(self):
        with pytest.raises(ValueError):
            convex_hull({(1 << 21, 0), (0, 0)})

    def test_idempotent_and_contains_all(self):
        rng = random.Random(42)
        for _ in range(200):
            pts = {
                (rng.randint(-8, 8), rng.randint(-8, 8))
                for _ in range(rng.randint(1, 12))
            }
            h = convex_hull(pts)
            assert convex_hull(h.vertices).vertices == h.vertices
            assert all(contains(h, pt) for pt in pts)

    def test_vertex_minimality(self):
        rng = random.Random(43)
        checked = 0
        while checked < 200:
            pts = {
                (rng.randint(-8, 8), rng.randint(-8, 8))
                for _ in range(rng.randint(3, 12))
            }
            h = convex_hull(pts)
            if h.degeneracy != POLYGON:
                continue
            checked += 1
            for v in h.vertices:
                rest = set(h.vertices) - {v}
                smaller = convex_hull(rest)
                assert set(smaller.vertices) != set(h.vertices)
                assert not contains(smaller, v)

    def test_strict_convexity(self):
        rng = random.Random(44)
        for _ in range(100):
            pts = {
                (rng.randint(-8, 8), rng.randint(-8, 8))
                for _ in range(rng.randint(3, 12))
            }
            h = convex_hull(pts)
            if h.degeneracy != POLYGON:
                continue
            vs = h.vertices
            n = len(vs)
            for i in range(n):
                assert cross(vs[i], vs[(i + 1) % n], vs[(i + 2) % n]) > 0


class TestFaces:
    def test_figure1_normals(self):
        h = convex_hull({(0, 1), (1, 0), (3, 1)})
        assert {f.normal for f in faces(h)} == {(-1, -1), (1, -2), (0, 1)}

    def test_face_list_starts_at_lex_smallest_vertex(self):
        h = convex_hull({(0, 1), (1, 0), (3, 1)})
        assert faces(h)[0].start == (0, 1)

    def test_pentagon_face_count(self):
        h = convex_hull({(6, 0), (5, 1), (3, 2), (0, 1), (0, 3)})
        assert len(faces(h)) == 5

    def test_segment_single_face(self):
        h = convex_hull({(0, 0), (2, 0)})
        fs = faces(h)
        assert len(fs) == 1
        assert fs[0].lattice_length == 2
        assert fs[0].direction == (1, 0)

    def test_point_rejected(self):
        with pytest.raises(ValueError):
            faces(convex_hull({(1, 1)}))

    def test_normals_primitive_and_orthogonal(self):
        rng = random.Random(45)
        for _ in range(100):
            pts = {
                (rng.randint(-8, 8), rng.randint(-8, 8))
                for _ in range(rng.randint(3, 10))
            }
            h = convex_hull(pts)
            if h.degeneracy != POLYGON:
                continue
            for f in faces(h):
                assert f.normal[0] * f.direction[0] + f.normal[1] * f.direction[1] == 0
                import math

                assert math.gcd(f.normal[0], f.normal[1]) == 1

    def test_normals_point_outward_of_centroid(self):
        rng = random.Random(46)
        for _ in range(100):
            pts = {
                (rng.randint(-8, 8), rng.randint(-8, 8))
                for _ in range(rng.randint(3, 10))
            }
            h = convex_hull(pts)
            if h.degeneracy != POLYGON:
                continue
            cx, cy = centroid(h)
            for f in faces(h):
                mx = Fraction(f.start[0] + f.end[0], 2)
                my = Fraction(f.start[1] + f.end[1], 2)
                assert f.normal[0] * (mx - cx) + f.normal[1] * (my - cy) > 0


class TestSlopeSet:
    def test_figure1(self):
        h = convex_hull({(0, 1), (1, 0), (3, 1)})
        assert slope_set(faces(h)) == {(1, -1), (2, 1), (1, 0)}

    def test_square_two_directions(self):
        h = convex_hull({(0, 0), (1, 0), (1, 1), (0, 1)})
        assert slope_set(faces(h)) == {(1, 0), (0, 1)}

    def test_segment_single_direction(self):
        h = convex_hull({(0, 0), (2, 4)})
        assert slope_set(faces(h)) == {(1, 2)}

    def test_canonical_direction_sign(self):
        assert canonical_direction((-2, 4)) == (1, -2)
        assert canonical_direction((0, -3)) == (0, 1)


class TestTriangleMatch:
    @pytest.fixture
    def tri(self):
        return convex_hull({(0, 0), (1, 0), (0, 2)})

    def test_exact_match(self, tri):
        got = proportional_triangle_match([(0, 0), (1, 0), (0, 2)], tri)
        assert got is not None and got[1] == 1

    def test_doubled(self, tri):
        got = proportional_triangle_match([(0, 0), (2, 0), (0, 4)], tri)
        assert got is not None and got[1] == 2

    def test_mismatch(self, tri):
        assert proportional_triangle_match([(0, 0), (1, 0), (0, 1)], tri) is None

    def test_translation_invariance(self, tri):
        got = proportional_triangle_match([(5, 5), (6, 5), (5, 7)], tri)
        assert got is not None and got[1] == 1

    def test_collinear_shape(self, tri):
        assert proportional_triangle_match([(0, 0), (1, 0), (2, 0)], tri) is None

    def test_point_reflection_detected_with_negative_ratio(self, tri):
        got = triangle_homothety([(0, 0), (-1, 0), (0, -2)], tri)
        assert got is not None and got[1] == -1
        assert proportional_triangle_match([(0, 0), (-1, 0), (0, -2)], tri) is None

    def test_random_dilates_always_match(self):
        rng = random.Random(47)
        matched = 0
        while matched < 200:
            a, b, c = (
                (rng.randint(-6, 6), rng.randint(-6, 6)) for _ in range(3)
            )
            if cross(a, b, c) == 0:
                continue
            tri = convex_hull({a, b, c})
            if len(tri.vertices) != 3:
                continue
            q = rng.randint(1, 5)
            tx, ty = rng.randint(-9, 9), rng.randint(-9, 9)
            shape = [(q * v[0] + tx, q * v[1] + ty) for v in tri.vertices]
            rng.shuffle(shape)
            got = proportional_triangle_match(shape, tri)
            assert got is not None and got[1] == q
            matched += 1
