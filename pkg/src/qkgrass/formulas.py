"""Closed-form evaluation of the structure constant C_{m,n}(lambda, a, b),
the coefficient of q*O^lambda in O^lambda * O^{(a\\b)}.

Three equivalent formulas are provided (double alternating sum, single
alternating sum, manifestly positive sum), plus the auxiliary pair f, g
used to connect them, and the corner-count reduction to the staircase
instance c(t, a, b) = C_{t,2t}(rho_t, a, b).
"""

from __future__ import annotations

from dataclasses import dataclass

from .intcomb import binomial
from .shapes import (
    GrassContext,
    QuantumShape,
    ShapeError,
    conjugate,
    from_partition,
    is_classical,
    quantum_corners,
    strip_zeros,
)


def c_double_sum(t: int, a: int, b: int) -> int:
    """c(t,a,b) as the double alternating sum
    sum_{i,j} (-1)^{i+j+1} C(a-i+b-j, a-i) C(t-1, i-1) C(t-1, j-1)."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if a < 0 or b < 0:
        return 0
    return sum(
        (-1) ** (i + j + 1)
        * binomial(a - i + b - j, a - i)
        * binomial(t - 1, i - 1)
        * binomial(t - 1, j - 1)
        for i in range(1, a + 1)
        for j in range(1, b + 1)
    )


def C_direct(lam: QuantumShape, a: int, b: int) -> int:
    """C_{m,n}(lambda, a, b) via the direct double sum, where lambda has
    t quantum corners:
    sum_{i,j} (-1)^{n-i-j-1} C(a-i+b-j, a-i) C(t-1, m-i) C(t-1, n-m-j)."""
    if a < 0 or b < 0:
        return 0
    m, n = lam.context.m, lam.context.n
    t = quantum_corners(lam)
    return sum(
        (-1) ** (n - i - j - 1)
        * binomial(a - i + b - j, a - i)
        * binomial(t - 1, m - i)
        * binomial(t - 1, n - m - j)
        for i in range(1, a + 1)
        for j in range(1, b + 1)
    )


def c_single_sum(t: int, a: int, b: int) -> int:
    """c(t,a,b) as the single alternating sum
    sum_i (-1)^{b+i+1} C(t-1, i-1) C(t-2-a+i, b-1)."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if a < 0 or b < 0:
        return 0
    return sum(
        (-1) ** (b + i + 1) * binomial(t - 1, i - 1) * binomial(t - 2 - a + i, b - 1)
        for i in range(1, a + 1)
    )


def f_aux(t: int, a: int, b: int, r: int) -> int:
    """f(t,a,b,r) = sum_{i=1}^{a-1} (-1)^{a+i} C(t-1, i-1) C(t-2-a+r+i, b-1);
    defined for a >= 2, b >= 1."""
    _check_aux_domain(a, b)
    return sum(
        (-1) ** (a + i) * binomial(t - 1, i - 1) * binomial(t - 2 - a + r + i, b - 1)
        for i in range(1, a)
    )


def g_aux(t: int, a: int, b: int, r: int) -> int:
    """g(t,a,b,r) = -C(t-2, a-2) C(t-2+r, b-1)
    + sum_{i=1}^{a-1} (-1)^{a+i+1} C(t-2, i-1) C(t-2-a+r+i, b-2);
    defined for a >= 2, b >= 1.  Equal to f on the entire domain."""
    _check_aux_domain(a, b)
    head = -binomial(t - 2, a - 2) * binomial(t - 2 + r, b - 1)
    return head + sum(
        (-1) ** (a + i + 1) * binomial(t - 2, i - 1) * binomial(t - 2 - a + r + i, b - 2)
        for i in range(1, a)
    )


def _check_aux_domain(a: int, b: int):
    if a < 2 or b < 1:
        raise ValueError(f"f/g need a >= 2 and b >= 1, got a={a}, b={b}")


def c_positive(t: int, a: int, b: int) -> int:
    """The manifestly positive form:
    c(t,a,b) = (-1)^{a+b+1} sum_{i=1}^{min(a,b)} C(t-1-i, a-i) C(t-1-i, b-i),
    for t >= 1 and 0 <= a, b <= t (negatives give 0)."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if a < 0 or b < 0:
        return 0
    if a > t or b > t:
        raise ValueError(f"a and b must be at most t={t}, got a={a}, b={b}")
    total = sum(
        binomial(t - 1 - i, a - i) * binomial(t - 1 - i, b - i)
        for i in range(1, min(a, b) + 1)
    )
    return (-1) ** (a + b + 1) * total


def C_reduced(lam: QuantumShape, a: int, b: int) -> int:
    """C_{m,n}(lambda, a, b) via the reduction to the staircase:
    C_{m,n}(lambda, a, b) = c(t, a-m+t, b-n+m+t) for classical lambda
    with t quantum corners, 0 <= a <= m, 0 <= b <= n-m."""
    if not is_classical(lam):
        raise ShapeError(f"reduction requires a classical shape, got {lam.parts}")
    m, w = lam.context.m, lam.context.width
    if not (0 <= a <= m and 0 <= b <= w):
        raise ValueError(f"need 0 <= a <= {m} and 0 <= b <= {w}, got a={a}, b={b}")
    t = quantum_corners(lam)
    aa, bb = a - m + t, b - w + t
    if aa < 0 or bb < 0:
        return 0
    return c_positive(t, aa, bb)


@dataclass(frozen=True)
class ReductionState:
    """One stage of removing repeated rows/columns from (m, n, lambda, a, b)."""

    m: int
    n: int
    parts: tuple[int, ...]
    a: int
    b: int

    def __post_init__(self):
        padded = self.padded()
        if len(strip_zeros(self.parts)) > self.m or any(
            p > self.n - self.m or p < 0 for p in padded
        ):
            raise ShapeError(
                f"partition {self.parts} does not fit the "
                f"{self.m} x {self.n - self.m} rectangle"
            )

    def padded(self) -> tuple[int, ...]:
        parts = strip_zeros(self.parts)
        return parts + (0,) * (self.m - len(parts))

    def shape(self) -> QuantumShape:
        return from_partition(GrassContext(self.m, self.n), self.parts)


def _next_state(state: ReductionState) -> ReductionState | None:
    m, n = state.m, state.n
    padded = state.padded()
    w = n - m
    for i in range(m - 1):
        if padded[i] == padded[i + 1]:
            parts = strip_zeros(padded[:i] + padded[i + 1 :])
            return ReductionState(m - 1, n - 1, parts, state.a - 1, state.b)
    if padded[0] == w and padded[-1] == 0:
        # the zero row repeats the wrap row of the boundary period
        parts = strip_zeros(padded[:-1])
        return ReductionState(m - 1, n - 1, parts, state.a - 1, state.b)
    conj = conjugate(padded)
    conj = conj + (0,) * (w - len(conj))
    for j in range(w - 1):
        if conj[j] == conj[j + 1]:
            parts = strip_zeros(tuple(p - 1 if p > j else p for p in padded))
            return ReductionState(m, n - 1, parts, state.a, state.b - 1)
    if conj[0] == m and conj[-1] == 0:
        # the empty last column repeats the wrap column of the period
        return ReductionState(m, n - 1, state.parts, state.a, state.b - 1)
    return None


def reduce_step(state: ReductionState) -> ReductionState:
    """Remove one repeated row (preferred) or repeated column.

    Repeats are read off the boundary of the shape as a periodic lattice
    path: two equal entries in the zero-padded part list (or its padded
    conjugate), including the pair that wraps around the period.  Either
    removal preserves C_{m,n}(lambda, a, b) and the quantum corner count.
    """
    nxt = _next_state(state)
    if nxt is None:
        raise ValueError(f"no repeated row or column in {state.padded()}")
    return nxt


def reduce_fully(state: ReductionState) -> ReductionState:
    """Iterate reduce_step until no repeats remain (the staircase instance)."""
    while True:
        nxt = _next_state(state)
        if nxt is None:
            return state
        state = nxt
