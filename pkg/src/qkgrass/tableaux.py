"""Set-valued tableaux and the K-theoretic Littlewood-Richardson rule.

This is the independent oracle for classical structure constants: it
counts set-valued fillings of lambda*mu whose reading word is a reverse
lattice word with a prescribed content, by exhaustive backtracking.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .intcomb import binomial
from .shapes import strip_zeros


@dataclass(frozen=True)
class SkewDiagram:
    """Skew Young diagram outer/inner; inner is padded with zeros."""

    outer: tuple[int, ...]
    inner: tuple[int, ...]

    def __post_init__(self):
        inner = self.inner + (0,) * (len(self.outer) - len(self.inner))
        if len(self.inner) > len(self.outer) or any(
            i > o for i, o in zip(inner, self.outer)
        ):
            raise ValueError(f"inner {self.inner} not contained in outer {self.outer}")

    def boxes(self) -> list[tuple[int, int]]:
        """0-indexed (row, col) boxes, row-major."""
        inner = self.inner + (0,) * (len(self.outer) - len(self.inner))
        return [
            (r, c)
            for r in range(len(self.outer))
            for c in range(inner[r], self.outer[r])
        ]

    @property
    def size(self) -> int:
        inner = self.inner + (0,) * (len(self.outer) - len(self.inner))
        return sum(o - i for o, i in zip(self.outer, inner))


def star_shape(lam, mu) -> SkewDiagram:
    """lambda*mu: place the bottom left corner of mu on the top right
    corner of lambda."""
    lam = strip_zeros(lam)
    mu = strip_zeros(mu)
    if not lam:
        return SkewDiagram(mu, ())
    if not mu:
        return SkewDiagram(lam, ())
    outer = tuple(p + lam[0] for p in mu) + lam
    inner = (lam[0],) * len(mu)
    return SkewDiagram(outer, inner)


Filling = dict[tuple[int, int], frozenset[int]]


def reading_word(diagram: SkewDiagram, filling: Filling) -> tuple[int, ...]:
    """Rows bottom to top, left to right within a row, each box ascending."""
    word = []
    inner = diagram.inner + (0,) * (len(diagram.outer) - len(diagram.inner))
    for r in range(len(diagram.outer) - 1, -1, -1):
        for c in range(inner[r], diagram.outer[r]):
            word.extend(sorted(filling[(r, c)]))
    return tuple(word)


def is_valid_filling(diagram: SkewDiagram, filling: Filling) -> bool:
    """Rows weakly increase (max <= min), columns strictly (max < min)."""
    boxes = set(diagram.boxes())
    for (r, c) in boxes:
        s = filling[(r, c)]
        if not s or min(s) < 1:
            return False
        if (r, c + 1) in boxes and max(s) > min(filling[(r, c + 1)]):
            return False
        if (r + 1, c) in boxes and max(s) >= min(filling[(r + 1, c)]):
            return False
    return True


def is_reverse_lattice(word) -> bool:
    """Every letter x > 1 is followed by strictly more x-1's than x's."""
    for pos, x in enumerate(word):
        if x == 1:
            continue
        suffix = word[pos + 1 :]
        if suffix.count(x - 1) <= suffix.count(x):
            return False
    return True


def content(word) -> tuple[int, ...]:
    """Multiplicities (c_1, ..., c_r) of the letters of the word."""
    if not word:
        return ()
    top = max(word)
    return tuple(sum(1 for x in word if x == i) for i in range(1, top + 1))


def count_lr_tableaux(
    diagram: SkewDiagram,
    nu,
    callback: Callable[[Filling], None] | None = None,
) -> int:
    """Count set-valued tableaux of the given shape whose reading word is a
    reverse lattice word with content exactly nu.

    Boxes are visited in reverse reading order (top row first, right to
    left, letters descending inside a box), so the word is built suffix
    first and the reverse lattice condition is enforced at each letter.
    An optional callback receives each complete filling.
    """
    nu = strip_zeros(nu)
    boxes = diagram.boxes()
    nboxes = len(boxes)
    if sum(nu) < nboxes:
        return 0
    if nboxes == 0:
        return 1 if not nu else 0
    nletters = len(nu)
    # reverse reading order: top row first, right to left within a row
    order = sorted(boxes, key=lambda rc: (rc[0], -rc[1]))
    box_set = set(boxes)
    remaining = [0] + list(nu)  # remaining[x] = unused copies of letter x
    counts = [0] * (nletters + 2)  # counts[x] = copies of x placed so far
    assigned: Filling = {}
    total = 0

    def choose_set(idx: int, letter: int, lo: int, picked: list[int]):
        """Pick the set for box order[idx], letters descending from `letter`
        down to `lo`; recurse into the next box when done."""
        nonlocal total
        if letter < lo:
            if picked:
                box = order[idx]
                assigned[box] = frozenset(picked)
                fill_box(idx + 1)
                del assigned[box]
            return
        # skip this letter
        choose_set(idx, letter - 1, lo, picked)
        # or place it, if content and the lattice condition allow
        if remaining[letter] > 0 and (
            letter == 1 or counts[letter - 1] > counts[letter]
        ):
            remaining[letter] -= 1
            counts[letter] += 1
            picked.append(letter)
            choose_set(idx, letter - 1, lo, picked)
            picked.pop()
            counts[letter] -= 1
            remaining[letter] += 1

    def fill_box(idx: int):
        nonlocal total
        if idx == nboxes:
            if all(r == 0 for r in remaining):
                total += 1
                if callback is not None:
                    callback(dict(assigned))
            return
        left = nboxes - idx
        budget = sum(remaining)
        if budget < left:
            return
        if any(r > left for r in remaining):
            return
        r, c = order[idx]
        lo = 1
        if (r - 1, c) in box_set:
            lo = max(assigned[(r - 1, c)]) + 1
        hi = nletters
        if (r, c + 1) in box_set:
            hi = min(hi, min(assigned[(r, c + 1)]))
        if lo > hi:
            return
        choose_set(idx, hi, lo, [])

    fill_box(0)
    return total


def lr_coefficient(lam, mu, nu) -> int:
    """Signed classical K-theory structure constant N_{lam,mu}^{nu} =
    (-1)^{|nu|-|lam|-|mu|} times the tableau count on lam*mu."""
    lam, mu, nu = strip_zeros(lam), strip_zeros(mu), strip_zeros(nu)
    count = count_lr_tableaux(star_shape(lam, mu), nu)
    return (-1) ** (sum(nu) - sum(lam) - sum(mu)) * count


def marked_content(t: int) -> tuple[int, ...]:
    """The content (t, t, t-1, ..., 3, 2): the staircase top minus one box."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if t == 1:
        return (1,)
    return (t,) + tuple(range(t, 1, -1))


def marked_pair_count(t: int, a: int, b: int) -> int:
    """Number of pairs (i, T): T a reverse-lattice set-valued tableau of
    shape (a\\b)*rho_t with content (t, t, t-1, ..., 2), and 1 <= i such
    that every box containing a letter j <= i holds exactly {j}."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if a < 0 or b < 0:
        raise ValueError(f"a and b must be nonnegative, got ({a},{b})")
    cap = min(a, b)
    if cap == 0:
        return 0
    hook = (b + 1,) + (1,) * a
    staircase = tuple(range(t - 1, 0, -1))
    diagram = star_shape(hook, staircase)
    nu = marked_content(t)
    total = 0

    def add_pairs(filling: Filling):
        nonlocal total
        singleton_ok = [True] * (len(nu) + 1)
        for s in filling.values():
            if len(s) > 1:
                for x in s:
                    singleton_ok[x] = False
        i = 0
        while i < cap and singleton_ok[i + 1]:
            i += 1
        total += i

    count_lr_tableaux(diagram, nu, callback=add_pairs)
    return total


def marked_pair_formula(t: int, a: int, b: int) -> int:
    """Closed form sum_{i=1}^{min(a,b)} C(t-1-i, a-i) C(t-1-i, b-i)."""
    return sum(
        binomial(t - 1 - i, a - i) * binomial(t - 1 - i, b - i)
        for i in range(1, min(a, b) + 1)
    )
