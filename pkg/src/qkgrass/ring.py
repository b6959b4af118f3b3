"""The ring engine: sparse linear combinations over the quantum-shape basis,
the row and column Pieri rules, the hook decomposition, and the full
product of a basis class by a hook class.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import NamedTuple

from .intcomb import binomial
from .shapes import (
    ContextMismatchError,
    GrassContext,
    QuantumShape,
    classicalize,
    contains,
    shift,
    translate,
)


class HookError(ValueError):
    """Hook does not fit the rectangle of the context."""


class GradedTerm(NamedTuple):
    """One term of a normalized expansion: coeff * q^degree * O^shape."""

    shape: tuple[int, ...]
    degree: int
    coeff: int


@dataclass(frozen=True)
class QLinearCombination:
    """Finite integer combination of quantum-shape basis classes."""

    context: GrassContext
    terms: tuple[tuple[QuantumShape, int], ...]

    @staticmethod
    def zero(context: GrassContext) -> "QLinearCombination":
        return QLinearCombination(context, ())

    @staticmethod
    def basis(lam: QuantumShape) -> "QLinearCombination":
        return QLinearCombination(lam.context, ((lam, 1),))

    @staticmethod
    def from_dict(context: GrassContext, d: dict) -> "QLinearCombination":
        items = tuple(
            sorted(((s, c) for s, c in d.items() if c != 0), key=lambda t: t[0].parts)
        )
        for s, _ in items:
            if s.context != context:
                raise ContextMismatchError(f"term context {s.context} != {context}")
        return QLinearCombination(context, items)

    def as_dict(self) -> dict:
        return dict(self.terms)

    def coefficient(self, nu: QuantumShape) -> int:
        if nu.context != self.context:
            raise ContextMismatchError(f"contexts differ: {nu.context} vs {self.context}")
        return self.as_dict().get(nu, 0)

    def support(self) -> list[QuantumShape]:
        return [s for s, _ in self.terms]

    def __add__(self, other: "QLinearCombination") -> "QLinearCombination":
        if other.context != self.context:
            raise ContextMismatchError(
                f"contexts differ: {self.context} vs {other.context}"
            )
        d = self.as_dict()
        for s, c in other.terms:
            d[s] = d.get(s, 0) + c
        return QLinearCombination.from_dict(self.context, d)

    def __sub__(self, other: "QLinearCombination") -> "QLinearCombination":
        return self + (-1) * other

    def __rmul__(self, k: int) -> "QLinearCombination":
        if k == 0:
            return QLinearCombination.zero(self.context)
        return QLinearCombination(self.context, tuple((s, k * c) for s, c in self.terms))


def coefficient(lc: QLinearCombination, nu: QuantumShape) -> int:
    return lc.coefficient(nu)


def _horizontal_strips(lam: QuantumShape):
    """All nu with nu/lam a horizontal strip: independent choices
    nu_i in [lam_i, lam_{i-1}] with lam_0 = lam_m + n - m."""
    parts = lam.parts
    uppers = (parts[-1] + lam.context.width,) + parts[:-1]
    ranges = [range(lo, hi + 1) for lo, hi in zip(parts, uppers)]
    for nu_parts in iproduct(*ranges):
        yield QuantumShape(lam.context, nu_parts)


def _vertical_strips(lam: QuantumShape):
    """All nu with nu/lam a vertical strip: nu_i in {lam_i, lam_i + 1},
    filtered by the shape constraints."""
    m, w = lam.context.m, lam.context.width
    parts = lam.parts
    for mask in iproduct((0, 1), repeat=m):
        nu_parts = tuple(p + e for p, e in zip(parts, mask))
        if any(nu_parts[i] < nu_parts[i + 1] for i in range(m - 1)):
            continue
        if nu_parts[-1] + w < nu_parts[0]:
            continue
        yield QuantumShape(lam.context, nu_parts)


def pieri_row(lam: QuantumShape, j: int) -> QLinearCombination:
    """Product by the row class O^j via the quantum Pieri rule."""
    w = lam.context.width
    if not 0 <= j <= w:
        raise HookError(f"row length j must be in [0, {w}], got {j}")
    d = {}
    for nu in _horizontal_strips(lam):
        size = nu.size - lam.size
        rows = sum(1 for a, b in zip(nu.parts, lam.parts) if a > b)
        c = (-1) ** (size - j) * binomial(rows - 1, size - j)
        if c:
            d[nu] = d.get(nu, 0) + c
    return QLinearCombination.from_dict(lam.context, d)


def pieri_col(lam: QuantumShape, i: int) -> QLinearCombination:
    """Product by the column class O^{1^i} via the quantum Pieri rule."""
    m, w = lam.context.m, lam.context.width
    if not 0 <= i <= m:
        raise HookError(f"column length i must be in [0, {m}], got {i}")
    d = {}
    for nu in _vertical_strips(lam):
        size = nu.size - lam.size
        cols = len({(c - 1) % w for r, c in _grown_boxes(nu, lam)})
        c = (-1) ** (size - i) * binomial(cols - 1, size - i)
        if c:
            d[nu] = d.get(nu, 0) + c
    return QLinearCombination.from_dict(lam.context, d)


def _grown_boxes(nu: QuantumShape, lam: QuantumShape):
    for i in range(lam.context.m):
        for c in range(lam.parts[i] + 1, nu.parts[i] + 1):
            yield (i + 1, c)


def _apply(op, lc: QLinearCombination, arg: int) -> QLinearCombination:
    d = {}
    for s, c in lc.terms:
        for s2, c2 in op(s, arg).terms:
            d[s2] = d.get(s2, 0) + c * c2
    return QLinearCombination.from_dict(lc.context, d)


class HookTerm(NamedTuple):
    """One symbolic term of the hook decomposition.

    kind is "col" (O^{1^i}), "row" (O^j), or "prod" (O^{1^i} O^j); args
    holds (i,), (j,), or (i, j) accordingly.
    """

    coeff: int
    kind: str
    args: tuple[int, ...]


def hook_decomposition(a: int, b: int) -> list[HookTerm]:
    """Express O^{(a\\b)}, a, b >= 1, through columns, rows, and
    column-times-row products:

    O^{(a\\b)} = sum_{i=2}^{a+1} C(a-i+b, b-1) O^{1^i}
               + sum_{j=2}^{b+1} C(a+b-j, a-1) O^j
               - sum_{i=1}^{a} sum_{j=1}^{b} C(a-i+b-j, a-i) O^{1^i} O^j
    """
    if a < 1 or b < 1:
        raise HookError(f"hook decomposition needs a, b >= 1, got ({a},{b})")
    terms = []
    for i in range(2, a + 2):
        c = binomial(a - i + b, b - 1)
        if c:
            terms.append(HookTerm(c, "col", (i,)))
    for j in range(2, b + 2):
        c = binomial(a + b - j, a - 1)
        if c:
            terms.append(HookTerm(c, "row", (j,)))
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            c = binomial(a - i + b - j, a - i)
            if c:
                terms.append(HookTerm(-c, "prod", (i, j)))
    return terms


def multiply_by_hook(lam: QuantumShape, a: int, b: int) -> QLinearCombination:
    """The full quantum product O^lam * O^{(a\\b)}.

    Requires the hook to fit the rectangle: a + 1 <= m and b + 1 <= n - m.
    """
    m, w = lam.context.m, lam.context.width
    if a < 0 or b < 0:
        raise HookError(f"hook parameters must be nonnegative, got ({a},{b})")
    if a + 1 > m or b + 1 > w:
        raise HookError(
            f"hook ({a},{b}) does not fit the {m} x {w} rectangle "
            f"(needs a+1 <= m and b+1 <= n-m)"
        )
    if a == 0:
        return pieri_row(lam, b + 1)
    if b == 0:
        return pieri_col(lam, a + 1)
    acc = QLinearCombination.zero(lam.context)
    for term in hook_decomposition(a, b):
        if term.kind == "col":
            acc = acc + term.coeff * pieri_col(lam, term.args[0])
        elif term.kind == "row":
            acc = acc + term.coeff * pieri_row(lam, term.args[0])
        else:
            i, j = term.args
            acc = acc + term.coeff * _apply(pieri_row, pieri_col(lam, i), j)
    return acc


def normalize(lc: QLinearCombination) -> list[GradedTerm]:
    """Rewrite over the q-graded classical basis, sorted by (degree, parts)."""
    out = []
    for s, c in lc.terms:
        mu, d = classicalize(s)
        out.append(GradedTerm(mu, d, c))
    out.sort(key=lambda t: (t.degree, t.shape))
    return out


def verify_support(lam: QuantumShape, a: int, b: int) -> bool:
    """Check lam <= nu <= lam[1] for every support shape of the product."""
    top = shift(lam, 1)
    lc = multiply_by_hook(lam, a, b)
    return all(contains(lam, nu) and contains(nu, top) for nu in lc.support())


def translation_covariance_check(lam: QuantumShape, a: int, b: int, r: int, s: int) -> bool:
    """Check that translating the input translates every output coefficient."""
    base = multiply_by_hook(lam, a, b)
    moved = multiply_by_hook(translate(lam, r, s), a, b)
    for nu in base.support():
        if moved.coefficient(translate(nu, r, s)) != base.coefficient(nu):
            return False
    for nu in moved.support():
        if base.coefficient(translate(nu, -r, -s)) != moved.coefficient(nu):
            return False
    return True
