"""Conformance sweeps cross-checking the ring engine, the closed forms,
and the tableau oracle against each other."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import formulas, ring, shapes, tableaux
from .shapes import GrassContext, all_classical_shapes, from_partition, shift


@dataclass
class VerificationReport:
    suite: str
    parameters: dict
    cases: list = field(default_factory=list)
    passed: int = 0
    failed: int = 0
    wall_time: float = 0.0

    def record(self, inputs: dict, values: dict):
        vals = list(values.values())
        ok = all(v == vals[0] for v in vals)
        self.cases.append({"inputs": inputs, "values": values, "ok": ok})
        if ok:
            self.passed += 1
        else:
            self.failed += 1

    def record_flag(self, inputs: dict, ok: bool, detail=None):
        case = {"inputs": inputs, "ok": ok}
        if detail is not None:
            case["detail"] = detail
        self.cases.append(case)
        if ok:
            self.passed += 1
        else:
            self.failed += 1

    def failures(self) -> list:
        return [c for c in self.cases if not c["ok"]]

    def summary(self) -> dict:
        return {
            "suite": self.suite,
            "parameters": self.parameters,
            "passed": self.passed,
            "failed": self.failed,
            "wall_time": self.wall_time,
            "failures": self.failures()[:20],
        }


def _contexts(max_n: int):
    for n in range(2, max_n + 1):
        for m in range(1, n):
            yield GrassContext(m, n)


def _fitting_hooks(ctx: GrassContext):
    for a in range(ctx.m):
        for b in range(ctx.width):
            yield a, b


def suite_formula_agreement(max_t: int = 12) -> VerificationReport:
    rep = VerificationReport("formula-agreement", {"max_t": max_t})
    start = time.perf_counter()
    for t in range(1, max_t + 1):
        for a in range(t + 1):
            for b in range(t + 1):
                rep.record(
                    {"t": t, "a": a, "b": b},
                    {
                        "double_sum": formulas.c_double_sum(t, a, b),
                        "single_sum": formulas.c_single_sum(t, a, b),
                        "positive": formulas.c_positive(t, a, b),
                    },
                )
    rep.wall_time = time.perf_counter() - start
    return rep


def suite_f_equals_g(
    t_range=(-5, 8), a_range=(2, 8), b_range=(1, 8), r_range=(-5, 5)
) -> VerificationReport:
    rep = VerificationReport(
        "f-equals-g",
        {"t": t_range, "a": a_range, "b": b_range, "r": r_range},
    )
    start = time.perf_counter()
    for t in range(t_range[0], t_range[1] + 1):
        for a in range(a_range[0], a_range[1] + 1):
            for b in range(b_range[0], b_range[1] + 1):
                for r in range(r_range[0], r_range[1] + 1):
                    rep.record(
                        {"t": t, "a": a, "b": b, "r": r},
                        {
                            "f": formulas.f_aux(t, a, b, r),
                            "g": formulas.g_aux(t, a, b, r),
                        },
                    )
    rep.wall_time = time.perf_counter() - start
    return rep


def suite_pieri_vs_closed_form(max_n: int = 8) -> VerificationReport:
    """The main-theorem check: the q O^lambda coefficient from the Pieri
    engine equals both closed forms, for every classical shape and every
    fitting hook."""
    rep = VerificationReport("pieri-vs-closed-form", {"max_n": max_n})
    start = time.perf_counter()
    for ctx in _contexts(max_n):
        for lam in all_classical_shapes(ctx):
            top = shift(lam, 1)
            for a, b in _fitting_hooks(ctx):
                engine = ring.multiply_by_hook(lam, a, b).coefficient(top)
                rep.record(
                    {"m": ctx.m, "n": ctx.n, "lam": lam.parts, "a": a, "b": b},
                    {
                        "pieri": engine,
                        "reduced": formulas.C_reduced(lam, a, b),
                        "direct": formulas.C_direct(lam, a, b),
                    },
                )
    rep.wall_time = time.perf_counter() - start
    return rep


def suite_support(max_n: int = 8) -> VerificationReport:
    """Every support shape nu satisfies lam <= nu <= lam[1] and nu/lam a rim."""
    rep = VerificationReport("support", {"max_n": max_n})
    start = time.perf_counter()
    for ctx in _contexts(max_n):
        for lam in all_classical_shapes(ctx):
            top = shift(lam, 1)
            for a, b in _fitting_hooks(ctx):
                lc = ring.multiply_by_hook(lam, a, b)
                ok = all(
                    shapes.contains(lam, nu)
                    and shapes.contains(nu, top)
                    and shapes.is_rim(nu, lam)
                    for nu in lc.support()
                )
                rep.record_flag(
                    {"m": ctx.m, "n": ctx.n, "lam": lam.parts, "a": a, "b": b}, ok
                )
    rep.wall_time = time.perf_counter() - start
    return rep


def suite_signs(max_n: int = 8) -> VerificationReport:
    """Sign rule and degree bound on every normalized product term."""
    rep = VerificationReport("signs", {"max_n": max_n})
    start = time.perf_counter()
    for ctx in _contexts(max_n):
        for lam in all_classical_shapes(ctx):
            for a, b in _fitting_hooks(ctx):
                terms = ring.normalize(ring.multiply_by_hook(lam, a, b))
                ok = True
                for shape, d, coeff in terms:
                    sign = (-1) ** (sum(shape) + d * ctx.n - lam.size - (a + b + 1))
                    if sign * coeff < 0:
                        ok = False
                    if d not in (0, 1):
                        ok = False
                    if d == 1 and not shapes.contains(
                        from_partition(ctx, shape), lam
                    ):
                        ok = False
                rep.record_flag(
                    {"m": ctx.m, "n": ctx.n, "lam": lam.parts, "a": a, "b": b}, ok
                )
    rep.wall_time = time.perf_counter() - start
    return rep


def suite_translation(max_n: int = 7, samples: int = 200, seed: int = 20260823) -> VerificationReport:
    """Random translated products have identically translated expansions."""
    rep = VerificationReport(
        "translation", {"max_n": max_n, "samples": samples, "seed": seed}
    )
    start = time.perf_counter()
    rng = random.Random(seed)
    contexts = [c for c in _contexts(max_n) if c.m >= 1]
    for _ in range(samples):
        ctx = rng.choice(contexts)
        lam = rng.choice(list(all_classical_shapes(ctx)))
        hooks = list(_fitting_hooks(ctx))
        a, b = rng.choice(hooks)
        r, s = rng.randrange(4), rng.randrange(4)
        ok = ring.translation_covariance_check(lam, a, b, r, s)
        rep.record_flag(
            {"m": ctx.m, "n": ctx.n, "lam": lam.parts, "a": a, "b": b, "r": r, "s": s},
            ok,
        )
    rep.wall_time = time.perf_counter() - start
    return rep


def suite_lr_classical(max_n: int = 7, max_hook_size: int = 5) -> VerificationReport:
    """Degree-0 product coefficients equal the set-valued tableau counts."""
    rep = VerificationReport(
        "lr-classical", {"max_n": max_n, "max_hook_size": max_hook_size}
    )
    start = time.perf_counter()
    for ctx in _contexts(max_n):
        shapes_list = list(all_classical_shapes(ctx))
        for lam in shapes_list:
            lam_p = shapes.to_partition(lam)
            for a, b in _fitting_hooks(ctx):
                if a + b + 1 > max_hook_size:
                    continue
                hook = shapes.hook_partition(a, b)
                degree0 = {
                    term.shape: term.coeff
                    for term in ring.normalize(ring.multiply_by_hook(lam, a, b))
                    if term.degree == 0
                }
                for nu in shapes_list:
                    nu_p = shapes.to_partition(nu)
                    inputs = {
                        "m": ctx.m,
                        "n": ctx.n,
                        "lam": lam_p,
                        "a": a,
                        "b": b,
                        "nu": nu_p,
                    }
                    if nu.size < lam.size + a + b + 1:
                        # every box holds a nonempty set, so no filling can
                        # have this content; the count is 0 without searching
                        rep.record_flag(inputs, degree0.get(nu_p, 0) == 0)
                        continue
                    rep.record(
                        inputs,
                        {
                            "pieri": degree0.get(nu_p, 0),
                            "tableaux": tableaux.lr_coefficient(lam_p, hook, nu_p),
                        },
                    )
    rep.wall_time = time.perf_counter() - start
    return rep


def suite_marked_pairs(max_t: int = 5) -> VerificationReport:
    """Enumerated marked pairs match the magnitude of the positive formula."""
    rep = VerificationReport("marked-pairs", {"max_t": max_t})
    start = time.perf_counter()
    for t in range(1, max_t + 1):
        for a in range(min(t, t - 1) + 1):
            for b in range(min(t, t - 1) + 1):
                rep.record(
                    {"t": t, "a": a, "b": b},
                    {
                        "pairs": tableaux.marked_pair_count(t, a, b),
                        "formula": abs(formulas.c_positive(t, a, b)),
                    },
                )
    rep.wall_time = time.perf_counter() - start
    return rep


def suite_reduction_chain(max_n: int = 8) -> VerificationReport:
    """Reduction chains end at the staircase and keep the closed forms constant."""
    rep = VerificationReport("reduction-chain", {"max_n": max_n})
    start = time.perf_counter()
    for ctx in _contexts(max_n):
        for lam in all_classical_shapes(ctx):
            t = shapes.quantum_corners(lam)
            for a, b in _fitting_hooks(ctx):
                state = formulas.ReductionState(
                    ctx.m, ctx.n, shapes.to_partition(lam), a, b
                )
                value = formulas.C_direct(lam, a, b)
                ok = True
                while True:
                    nxt = formulas._next_state(state)
                    if nxt is None:
                        break
                    state = nxt
                    if formulas.C_direct(state.shape(), state.a, state.b) != value:
                        ok = False
                        break
                if ok:
                    # terminal is the staircase or its one-column translate
                    # (the latter for shapes touching the full rectangle);
                    # both have t quantum corners and the same constant
                    staircases = (
                        tuple(range(t - 1, -1, -1)),
                        tuple(range(t, 0, -1)),
                    )
                    ok = (
                        state.m == t
                        and state.n == 2 * t
                        and state.padded() in staircases
                        and state.a == a - ctx.m + t
                        and state.b == b - ctx.width + t
                    )
                rep.record_flag(
                    {"m": ctx.m, "n": ctx.n, "lam": lam.parts, "a": a, "b": b}, ok
                )
    rep.wall_time = time.perf_counter() - start
    return rep


SUITES = {
    "formula-agreement": suite_formula_agreement,
    "f-equals-g": suite_f_equals_g,
    "pieri-vs-closed-form": suite_pieri_vs_closed_form,
    "support": suite_support,
    "signs": suite_signs,
    "translation": suite_translation,
    "lr-classical": suite_lr_classical,
    "marked-pairs": suite_marked_pairs,
    "reduction-chain": suite_reduction_chain,
}


def run_suite(name: str, **kwargs) -> VerificationReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](**kwargs)
