"""Quantum shapes: order ideals of the quotient poset Z^2 / Z(m, m-n).

A shape is stored by the row-ends of its canonical rows 1..m.  Classical
shapes (all row-ends in [0, n-m]) are identified with Young diagrams,
represented as plain tuples of weakly decreasing positive ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


class ShapeError(ValueError):
    """Invalid shape data (length, monotonicity, or wrap constraint)."""


class ContextMismatchError(ValueError):
    """Operands live over different Grassmannian contexts."""


@dataclass(frozen=True)
class GrassContext:
    """The pair (m, n) fixing Gr(m, n) and its period vector (m, m-n)."""

    m: int
    n: int

    def __post_init__(self):
        if not (1 <= self.m < self.n):
            raise ShapeError(f"context requires 1 <= m < n, got m={self.m}, n={self.n}")

    @property
    def width(self) -> int:
        """Width n - m of the classical rectangle."""
        return self.n - self.m


@dataclass(frozen=True)
class QuantumShape:
    """Order ideal given by the row-ends (parts) of rows 1..m."""

    context: GrassContext
    parts: tuple[int, ...]

    def __post_init__(self):
        m, w = self.context.m, self.context.width
        if len(self.parts) != m:
            raise ShapeError(
                f"expected {m} parts for Gr({m},{self.context.n}), got {len(self.parts)}"
            )
        for i in range(m - 1):
            if self.parts[i] < self.parts[i + 1]:
                raise ShapeError(
                    f"parts must be weakly decreasing, violated at rows {i + 1},{i + 2}: {self.parts}"
                )
        if self.parts[-1] + w < self.parts[0]:
            raise ShapeError(
                f"wrap constraint violated: parts[m] + (n-m) = {self.parts[-1] + w} < parts[1] = {self.parts[0]}"
            )

    @property
    def size(self) -> int:
        return sum(self.parts)


def make_shape(context: GrassContext, parts) -> QuantumShape:
    """Validate and build a quantum shape from its row-ends."""
    return QuantumShape(context, tuple(parts))


def _same_context(a: QuantumShape, b: QuantumShape) -> GrassContext:
    if a.context != b.context:
        raise ContextMismatchError(f"contexts differ: {a.context} vs {b.context}")
    return a.context


def is_classical(lam: QuantumShape) -> bool:
    """True iff the shape is a Young diagram in the m x (n-m) rectangle."""
    w = lam.context.width
    return all(0 <= p <= w for p in lam.parts)


def shift(lam: QuantumShape, d: int) -> QuantumShape:
    """Shift the boundary of the shape by d diagonal steps (lambda[d])."""
    ctx = lam.context
    w = ctx.width
    parts = lam.parts
    for _ in range(d):
        parts = (parts[-1] + w + 1,) + tuple(p + 1 for p in parts[:-1])
    for _ in range(-d):
        parts = tuple(p - 1 for p in parts[1:]) + (parts[0] - w - 1,)
    return QuantumShape(ctx, parts)


def classicalize(lam: QuantumShape) -> tuple[tuple[int, ...], int]:
    """Return (mu, d) where lambda[-d] is the unique classical shape mu.

    mu is returned as a plain partition (trailing zeros stripped), so that
    the class of lam equals q^d times the class of mu.
    """
    w = lam.context.width
    d = 0
    cur = lam
    while not is_classical(cur):
        if cur.parts[0] > w:
            cur = shift(cur, -1)
            d += 1
        else:
            cur = shift(cur, 1)
            d -= 1
    return to_partition(cur), d


def to_partition(lam: QuantumShape) -> tuple[int, ...]:
    """Classical shape -> plain partition, stripping trailing zeros."""
    if not is_classical(lam):
        raise ShapeError(f"shape {lam.parts} is not classical")
    return strip_zeros(lam.parts)


def from_partition(context: GrassContext, partition) -> QuantumShape:
    """Plain partition -> classical shape, padding with zeros to m rows."""
    parts = tuple(partition)
    if len(parts) > context.m or any(p > context.width for p in parts):
        raise ShapeError(
            f"partition {parts} does not fit the {context.m} x {context.width} rectangle"
        )
    return QuantumShape(context, parts + (0,) * (context.m - len(parts)))


def strip_zeros(parts) -> tuple[int, ...]:
    out = list(parts)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def contains(lam: QuantumShape, nu: QuantumShape) -> bool:
    """True iff lam is a subset of nu (componentwise on row-ends)."""
    _same_context(lam, nu)
    return all(a <= b for a, b in zip(lam.parts, nu.parts))


def skew_size(nu: QuantumShape, lam: QuantumShape) -> int:
    """Number of boxes of nu/lam."""
    if not contains(lam, nu):
        raise ShapeError(f"{lam.parts} is not contained in {nu.parts}")
    return nu.size - lam.size


def skew_boxes(nu: QuantumShape, lam: QuantumShape) -> list[tuple[int, int]]:
    """Canonical boxes (row in 1..m, column) of the skew shape nu/lam."""
    if not contains(lam, nu):
        raise ShapeError(f"{lam.parts} is not contained in {nu.parts}")
    return [
        (i + 1, c)
        for i in range(lam.context.m)
        for c in range(lam.parts[i] + 1, nu.parts[i] + 1)
    ]


def is_horizontal_strip(nu: QuantumShape, lam: QuantumShape) -> bool:
    """At most one box of nu/lam in each column of the quotient poset."""
    if not contains(lam, nu):
        raise ShapeError(f"{lam.parts} is not contained in {nu.parts}")
    w = lam.context.width
    upper = lam.parts[-1] + w
    for i, n_i in enumerate(nu.parts):
        if n_i > upper:
            return False
        upper = lam.parts[i]
    return True


def is_vertical_strip(nu: QuantumShape, lam: QuantumShape) -> bool:
    """At most one box of nu/lam in each row of the quotient poset."""
    if not contains(lam, nu):
        raise ShapeError(f"{lam.parts} is not contained in {nu.parts}")
    return all(n_i <= l_i + 1 for n_i, l_i in zip(nu.parts, lam.parts))


def is_rim(nu: QuantumShape, lam: QuantumShape) -> bool:
    """Nonempty skew shape contained in lambda[1] (no 2x2 square)."""
    if not contains(lam, nu):
        raise ShapeError(f"{lam.parts} is not contained in {nu.parts}")
    return nu != lam and contains(nu, shift(lam, 1))


def is_unbroken_rim(nu: QuantumShape, lam: QuantumShape) -> bool:
    return nu == shift(lam, 1)


def row_count(nu: QuantumShape, lam: QuantumShape) -> int:
    """Number of nonempty rows of nu/lam among rows 1..m."""
    if not contains(lam, nu):
        raise ShapeError(f"{lam.parts} is not contained in {nu.parts}")
    return sum(1 for n_i, l_i in zip(nu.parts, lam.parts) if n_i > l_i)


def col_count(nu: QuantumShape, lam: QuantumShape) -> int:
    """Number of nonempty columns of nu/lam among columns 1..n-m.

    The periodic copies of one canonical box occupy exactly one column in
    that window, so the count equals the number of distinct column residues
    mod (n-m) over the skew boxes.
    """
    w = lam.context.width
    residues = {(c - 1) % w for _, c in skew_boxes(nu, lam)}
    return len(residues)


def translate(lam: QuantumShape, r: int, s: int) -> QuantumShape:
    """Translate r rows down and s columns to the right.

    Negative r or s apply the inverse steps.
    """
    ctx = lam.context
    w = ctx.width
    parts = lam.parts
    for _ in range(r):
        parts = (parts[-1] + w,) + parts[:-1]
    for _ in range(-r):
        parts = parts[1:] + (parts[0] - w,)
    if s:
        parts = tuple(p + s for p in parts)
    return QuantumShape(ctx, parts)


def quantum_corners(lam: QuantumShape) -> int:
    """Number of maximal boxes of the shape in the quotient poset."""
    parts = lam.parts + (lam.parts[0] - lam.context.width,)
    return sum(1 for i in range(lam.context.m) if parts[i] > parts[i + 1])


def conjugate(partition) -> tuple[int, ...]:
    parts = strip_zeros(partition)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def corners(partition) -> int:
    """Number of corners of a Young diagram: distinct nonzero part values."""
    return len({p for p in partition if p > 0})


def dual(partition, context: GrassContext) -> tuple[int, ...]:
    """Rectangle complement: dual_i = (n-m) - lam_{m+1-i}."""
    parts = strip_zeros(partition)
    if len(parts) > context.m or any(p > context.width for p in parts):
        raise ShapeError(
            f"partition {tuple(partition)} does not fit the "
            f"{context.m} x {context.width} rectangle"
        )
    padded = parts + (0,) * (context.m - len(parts))
    return strip_zeros(tuple(context.width - p for p in reversed(padded)))


def rho(t: int) -> tuple[GrassContext, QuantumShape]:
    """The staircase (t-1, ..., 1, 0) as a classical shape of Gr(t, 2t)."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    ctx = GrassContext(t, 2 * t)
    return ctx, QuantumShape(ctx, tuple(range(t - 1, -1, -1)))


def hook_partition(a: int, b: int) -> tuple[int, ...]:
    """The hook (a\\b): b+1 boxes across the first row, a+1 down the first column."""
    if a < 0 or b < 0:
        raise ValueError(f"hook parameters must be nonnegative, got ({a},{b})")
    return (b + 1,) + (1,) * a


def all_classical_shapes(context: GrassContext) -> Iterator[QuantumShape]:
    """All Young diagrams in the m x (n-m) rectangle, as classical shapes."""

    def rec(rows: int, maxpart: int):
        if rows == 0:
            yield ()
            return
        for p in range(maxpart, -1, -1):
            for rest in rec(rows - 1, p):
                yield (p,) + rest

    for parts in rec(context.m, context.width):
        yield QuantumShape(context, parts)
