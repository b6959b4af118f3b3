import itertools

import pytest

from qkgrass import ring
from qkgrass.intcomb import binomial
from qkgrass.shapes import (
    ContextMismatchError,
    GrassContext,
    QuantumShape,
    ShapeError,
    all_classical_shapes,
    classicalize,
    col_count,
    conjugate,
    contains,
    corners,
    dual,
    from_partition,
    hook_partition,
    is_classical,
    is_horizontal_strip,
    is_rim,
    is_unbroken_rim,
    is_vertical_strip,
    make_shape,
    quantum_corners,
    rho,
    row_count,
    shift,
    skew_boxes,
    skew_size,
    strip_zeros,
    to_partition,
    translate,
)

GR24 = GrassContext(2, 4)


def test_context_validation():
    assert GrassContext(2, 4).width == 2
    with pytest.raises(ShapeError):
        GrassContext(0, 4)
    with pytest.raises(ShapeError):
        GrassContext(4, 4)


def test_shape_validation():
    assert make_shape(GrassContext(4, 10), (5, 5, 3, 0)).parts == (5, 5, 3, 0)
    with pytest.raises(ShapeError):
        make_shape(GR24, (1, 0, 0))  # wrong length
    with pytest.raises(ShapeError):
        make_shape(GR24, (0, 1))  # not weakly decreasing
    with pytest.raises(ShapeError):
        make_shape(GR24, (3, 0))  # wrap: parts[m] + (n-m) < parts[1]


def test_is_classical():
    assert is_classical(make_shape(GrassContext(4, 10), (5, 5, 3, 0)))
    assert not is_classical(make_shape(GR24, (3, 1)))
    assert not is_classical(make_shape(GR24, (0, -1)))


def test_shift_examples():
    assert shift(make_shape(GR24, (1, 0)), 1).parts == (3, 2)
    assert shift(make_shape(GR24, (3, 2)), -1).parts == (1, 0)
    assert shift(make_shape(GR24, (0, 0)), 1).parts == (3, 1)


def test_shift_round_trip():
    for parts in itertools.product(range(-4, 7), repeat=2):
        try:
            lam = make_shape(GR24, parts)
        except ShapeError:
            continue
        for d in range(-3, 4):
            assert shift(shift(lam, d), -d) == lam


def test_classicalize_examples():
    assert classicalize(make_shape(GR24, (3, 1))) == ((), 1)
    assert classicalize(make_shape(GR24, (3, 2))) == ((1,), 1)
    assert classicalize(make_shape(GR24, (2, 1))) == ((2, 1), 0)
    assert classicalize(make_shape(GR24, (0, -1))) == ((2, 1), -1)


def test_classicalize_is_the_unique_classical_shift():
    # window deliberately wider than [-n, n] in the shift degree
    for parts in itertools.product(range(-8, 11), repeat=2):
        try:
            lam = make_shape(GR24, parts)
        except ShapeError:
            continue
        mu, d = classicalize(lam)
        assert shift(from_partition(GR24, mu), d) == lam
        classical_ds = [
            e for e in range(-12, 13) if is_classical(shift(lam, -e))
        ]
        assert classical_ds == [d]


def test_partition_conversions():
    assert to_partition(make_shape(GR24, (2, 0))) == (2,)
    assert from_partition(GR24, (2,)).parts == (2, 0)
    assert strip_zeros((3, 1, 0, 0)) == (3, 1)
    with pytest.raises(ShapeError):
        to_partition(make_shape(GR24, (3, 1)))
    with pytest.raises(ShapeError):
        from_partition(GR24, (3,))


def test_containment_and_skew():
    lam = make_shape(GR24, (1, 0))
    nu = make_shape(GR24, (2, 1))
    assert contains(lam, nu) and not contains(nu, lam)
    assert skew_size(nu, lam) == 2
    assert skew_boxes(nu, lam) == [(1, 2), (2, 1)]
    with pytest.raises(ShapeError):
        skew_size(lam, nu)
    with pytest.raises(ContextMismatchError):
        contains(lam, make_shape(GrassContext(2, 5), (1, 0)))


def test_strip_predicates_examples():
    lam = make_shape(GR24, (1, 0))
    assert is_horizontal_strip(make_shape(GR24, (2, 1)), lam)
    assert is_vertical_strip(make_shape(GR24, (2, 1)), lam)
    assert not is_vertical_strip(make_shape(GR24, (3, 1)), lam)
    assert is_rim(make_shape(GR24, (2, 2)), lam)
    assert not is_rim(lam, lam)
    empty = make_shape(GR24, (0, 0))
    assert not is_rim(make_shape(GR24, (2, 2)), empty)
    assert is_unbroken_rim(make_shape(GR24, (3, 2)), lam)
    assert not is_unbroken_rim(make_shape(GR24, (2, 2)), lam)


def _extended_part(lam, i):
    # periodic extension lam_{i+m} = lam_i - (n-m), rows indexed from 1
    m, w = lam.context.m, lam.context.width
    k, r = divmod(i - 1, m)
    return lam.parts[r] - k * w


def _skew_has_2x2(nu, lam):
    m = lam.context.m
    for r in range(1, 2 * m + 1):
        lo = max(_extended_part(lam, r), _extended_part(lam, r + 1))
        hi = min(_extended_part(nu, r), _extended_part(nu, r + 1))
        # columns c, c+1 in both rows r, r+1
        if hi - lo >= 2:
            return True
    return False


def test_strip_predicates_match_generators():
    for ctx in (GrassContext(2, 5), GrassContext(3, 6)):
        for lam in all_classical_shapes(ctx):
            top = shift(lam, 1)
            candidates = [
                QuantumShape(ctx, parts)
                for parts in itertools.product(
                    *(range(lam.parts[i], top.parts[i] + 1) for i in range(ctx.m))
                )
                if all(parts[i] >= parts[i + 1] for i in range(ctx.m - 1))
                and parts[-1] + ctx.width >= parts[0]
            ]
            horiz = {nu for nu in candidates if is_horizontal_strip(nu, lam)}
            assert horiz == set(ring._horizontal_strips(lam))
            vert = {nu for nu in candidates if is_vertical_strip(nu, lam)}
            assert vert == set(ring._vertical_strips(lam))
            for nu in candidates:
                # a skew shape is a rim iff it is nonempty with no 2x2 block,
                # read periodically
                assert is_rim(nu, lam) == (nu != lam and not _skew_has_2x2(nu, lam))


def test_row_and_col_counts():
    lam = make_shape(GR24, (1, 0))
    nu = make_shape(GR24, (2, 1))
    assert row_count(nu, lam) == 2
    assert col_count(nu, lam) == 2
    # both boxes of (2,2)/(1,1) sit in column residue 2
    assert col_count(make_shape(GR24, (2, 2)), make_shape(GR24, (1, 1))) == 1


def test_translate():
    lam = make_shape(GR24, (1, 0))
    assert translate(lam, 1, 0).parts == (2, 1)
    assert translate(lam, 0, 1).parts == (2, 1)
    assert translate(lam, 1, 1).parts == (3, 2)
    assert translate(translate(lam, 2, -1), -2, 1) == lam
    # one full period is the identity: (m, m-n) ~ (0, 0)
    assert translate(lam, 2, -2) == lam


def test_quantum_corners_golden():
    gr48 = GrassContext(4, 8)
    assert quantum_corners(make_shape(gr48, (3, 3, 2, 0))) == 3
    assert quantum_corners(make_shape(gr48, (4, 3, 2, 0))) == 3
    assert quantum_corners(make_shape(gr48, (4, 2, 2, 1))) == 3
    ctx5, rho5 = rho(5)
    assert (ctx5.m, ctx5.n) == (5, 10)
    assert rho5.parts == (4, 3, 2, 1, 0)
    assert corners(rho5.parts) == 4
    assert quantum_corners(rho5) == 5


def test_quantum_corners_is_max_of_corner_counts():
    for n in range(2, 10):
        for m in range(1, n):
            ctx = GrassContext(m, n)
            for lam in all_classical_shapes(ctx):
                p = to_partition(lam)
                expect = max(corners(p), corners(dual(p, ctx)))
                assert quantum_corners(lam) == expect


def test_quantum_corners_translation_invariant():
    for parts in itertools.product(range(-4, 7), repeat=2):
        try:
            lam = make_shape(GR24, parts)
        except ShapeError:
            continue
        for r, s in itertools.product(range(-2, 3), repeat=2):
            assert quantum_corners(translate(lam, r, s)) == quantum_corners(lam)


def test_conjugate_and_dual():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    gr48 = GrassContext(4, 8)
    assert dual((3, 3, 2, 0), gr48) == (4, 2, 1, 1)
    assert dual((4, 3, 2, 0), gr48) == (4, 2, 1)
    assert dual((4, 2, 2, 1), gr48) == (3, 2, 2)
    assert corners((3, 3, 2, 0)) == 2
    assert corners((4, 2, 1, 1)) == 3
    with pytest.raises(ShapeError):
        dual((5,), gr48)


def test_hook_partition():
    assert hook_partition(3, 2) == (3, 1, 1, 1)
    assert hook_partition(0, 0) == (1,)
    with pytest.raises(ValueError):
        hook_partition(-1, 0)


def test_all_classical_shapes_count():
    for n in range(2, 9):
        for m in range(1, n):
            ctx = GrassContext(m, n)
            shapes_list = list(all_classical_shapes(ctx))
            assert len(shapes_list) == binomial(n, m)
            assert len(set(shapes_list)) == len(shapes_list)
            assert all(is_classical(s) for s in shapes_list)
