from fractions import Fraction

from hypothesis import given, strategies as st

from schubsing.convex import convex_coefficients, in_convex_hull


def test_triangle():
    tri = [(0, 0), (2, 0), (0, 2)]
    assert in_convex_hull((1, 1), tri)
    assert in_convex_hull((0, 0), tri)
    assert not in_convex_hull((2, 1), tri)
    assert convex_coefficients((1, 0), tri) == {(0, 0): Fraction(1, 2), (2, 0): Fraction(1, 2)}


def test_degenerate_sets():
    assert not in_convex_hull((0, 0), [])
    seg = [(0, 0, 0), (2, 2, 2)]
    assert in_convex_hull((1, 1, 1), seg)
    assert not in_convex_hull((1, 1, 0), seg)


def test_g2_point_outside():
    te = [(-1, 0), (0, 1), (1, 1), (-3, -2)]
    assert not in_convex_hull((-3, -1), te)
    assert in_convex_hull((-2, -1), te)


pts = st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4)),
               min_size=1, max_size=6)


@given(pts, st.data())
def test_combinations_are_members(points, data):
    weights = data.draw(st.lists(st.integers(0, 5), min_size=len(points), max_size=len(points)))
    if not any(weights):
        weights[0] = 1
    total = sum(weights)
    target = tuple(Fraction(sum(w * p[i] for w, p in zip(weights, points)), total) for i in range(3))
    # scale to integers: the test is affine, so scale both sides
    scaled = [tuple(total * c for c in p) for p in points]
    assert in_convex_hull(tuple(int(total * c) for c in target), scaled)


@given(pts)
def test_coefficients_reconstruct(points):
    p = points[0]
    c = convex_coefficients(p, points)
    assert c is not None and sum(c.values()) == 1
    assert all(sum(v * q[i] for q, v in c.items()) == p[i] for i in range(3))
