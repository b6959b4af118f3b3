import pytest

from qkgrass.ring import (
    GradedTerm,
    HookError,
    QLinearCombination,
    _apply,
    hook_decomposition,
    multiply_by_hook,
    normalize,
    pieri_col,
    pieri_row,
    translation_covariance_check,
    verify_support,
)
from qkgrass.shapes import (
    GrassContext,
    all_classical_shapes,
    is_rim,
    make_shape,
    translate,
)

GR24 = GrassContext(2, 4)


def _as_parts(lc):
    return {s.parts: c for s, c in lc.terms}


def test_linear_combination_arithmetic():
    lam = make_shape(GR24, (1, 0))
    mu = make_shape(GR24, (2, 1))
    x = QLinearCombination.basis(lam) + 2 * QLinearCombination.basis(mu)
    assert x.coefficient(lam) == 1 and x.coefficient(mu) == 2
    y = x - QLinearCombination.basis(lam)
    assert y.coefficient(lam) == 0
    assert y.support() == [mu]
    assert 0 * x == QLinearCombination.zero(GR24)
    assert QLinearCombination.from_dict(GR24, x.as_dict()) == x


def test_pieri_row_examples():
    assert _as_parts(pieri_row(make_shape(GR24, (2, 2)), 1)) == {(3, 2): 1}
    assert _as_parts(pieri_row(make_shape(GR24, (1, 0)), 1)) == {
        (2, 0): 1,
        (1, 1): 1,
        (2, 1): -1,
    }
    # j = 0 multiplies by the identity class
    lam = make_shape(GR24, (1, 0))
    assert pieri_row(lam, 0) == QLinearCombination.basis(lam)


def test_pieri_col_examples():
    assert _as_parts(pieri_col(make_shape(GR24, (1, 0)), 1)) == {
        (1, 1): 1,
        (2, 0): 1,
        (2, 1): -1,
    }
    lam = make_shape(GR24, (1, 0))
    assert pieri_col(lam, 0) == QLinearCombination.basis(lam)


def test_pieri_bounds():
    lam = make_shape(GR24, (1, 0))
    with pytest.raises(HookError):
        pieri_row(lam, 3)
    with pytest.raises(HookError):
        pieri_col(lam, 3)
    with pytest.raises(HookError):
        pieri_row(lam, -1)


def test_full_strip_is_a_translation():
    # a maximal column adds one full column; a maximal row adds one full row
    for n in range(2, 8):
        for m in range(1, n):
            ctx = GrassContext(m, n)
            for lam in all_classical_shapes(ctx):
                assert pieri_col(lam, m) == QLinearCombination.basis(
                    translate(lam, 0, 1)
                )
                assert pieri_row(lam, n - m) == QLinearCombination.basis(
                    translate(lam, 1, 0)
                )


def test_pieri_operators_commute():
    for n in range(2, 8):
        for m in range(1, n):
            ctx = GrassContext(m, n)
            for lam in all_classical_shapes(ctx):
                for i in range(m + 1):
                    for j in range(n - m + 1):
                        rc = _apply(pieri_row, pieri_col(lam, i), j)
                        cr = _apply(pieri_col, pieri_row(lam, j), i)
                        assert rc == cr


def test_hook_decomposition_examples():
    assert hook_decomposition(1, 1) == [
        (1, "col", (2,)),
        (1, "row", (2,)),
        (-1, "prod", (1, 1)),
    ]
    assert hook_decomposition(1, 2) == [
        (1, "col", (2,)),
        (1, "row", (2,)),
        (1, "row", (3,)),
        (-1, "prod", (1, 1)),
        (-1, "prod", (1, 2)),
    ]
    assert hook_decomposition(2, 1) == [
        (1, "col", (2,)),
        (1, "col", (3,)),
        (1, "row", (2,)),
        (-1, "prod", (1, 1)),
        (-1, "prod", (2, 1)),
    ]
    with pytest.raises(HookError):
        hook_decomposition(0, 1)


def test_worked_product():
    lam = make_shape(GR24, (1, 0))
    lc = multiply_by_hook(lam, 1, 1)
    assert _as_parts(lc) == {(2, 2): 1, (3, 1): 1, (3, 2): -1}
    assert normalize(lc) == [
        GradedTerm((2, 2), 0, 1),
        GradedTerm((), 1, 1),
        GradedTerm((1,), 1, -1),
    ]


def test_multiply_bounds():
    lam = make_shape(GR24, (1, 0))
    with pytest.raises(HookError):
        multiply_by_hook(lam, 2, 0)  # a+1 > m
    with pytest.raises(HookError):
        multiply_by_hook(lam, 0, 2)  # b+1 > n-m
    with pytest.raises(HookError):
        multiply_by_hook(lam, -1, 0)


def test_three_term_hook_identity():
    # O^{1^i} O^j = O^{(i-1 \ j)} + O^{(i \ j-1)} - O^{(i \ j)}
    for n in range(3, 8):
        for m in range(2, n - 1):
            ctx = GrassContext(m, n)
            for lam in all_classical_shapes(ctx):
                for i in range(1, m):
                    for j in range(1, n - m):
                        lhs = _apply(pieri_row, pieri_col(lam, i), j)
                        rhs = (
                            multiply_by_hook(lam, i - 1, j)
                            + multiply_by_hook(lam, i, j - 1)
                            - multiply_by_hook(lam, i, j)
                        )
                        assert lhs == rhs


def test_support_is_rim_between_shape_and_shift():
    for n in range(2, 7):
        for m in range(1, n):
            ctx = GrassContext(m, n)
            for lam in all_classical_shapes(ctx):
                for a in range(m):
                    for b in range(n - m):
                        assert verify_support(lam, a, b)
                        lc = multiply_by_hook(lam, a, b)
                        assert all(is_rim(nu, lam) for nu in lc.support())


def test_translation_covariance_spot_checks():
    lam = make_shape(GrassContext(2, 5), (2, 0))
    assert translation_covariance_check(lam, 1, 1, 1, 0)
    assert translation_covariance_check(lam, 1, 2, 0, 2)
    assert translation_covariance_check(lam, 0, 1, 2, 1)
