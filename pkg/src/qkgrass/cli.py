"""Command-line surface: products, structure constants, formula values,
LR counts, and conformance sweeps."""

from __future__ import annotations

import json
import sys

import click

from . import formulas, ring, shapes, tableaux, verify

EXIT_INPUT_ERROR = 1
EXIT_CONFORMANCE_FAILURE = 2


def _parse_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise click.ClickException(f"expected comma-separated integers, got {text!r}")


def _parse_context(text: str) -> shapes.GrassContext:
    vals = _parse_ints(text)
    if len(vals) != 2:
        raise click.ClickException(f"context must be 'm,n', got {text!r}")
    try:
        return shapes.GrassContext(*vals)
    except ValueError as exc:
        raise click.ClickException(str(exc))


def _parse_shape(ctx: shapes.GrassContext, text: str) -> shapes.QuantumShape:
    try:
        return shapes.make_shape(ctx, _parse_ints(text))
    except ValueError as exc:
        raise click.ClickException(str(exc))


def _parse_hook(text: str) -> tuple[int, int]:
    vals = _parse_ints(text)
    if len(vals) != 2:
        raise click.ClickException(f"hook must be 'a,b', got {text!r}")
    return vals


def product_document(
    ctx: shapes.GrassContext, lam: shapes.QuantumShape, a: int, b: int
) -> dict:
    terms = ring.normalize(ring.multiply_by_hook(lam, a, b))
    return {
        "context": [ctx.m, ctx.n],
        "shape": list(lam.parts),
        "hook": [a, b],
        "terms": [
            {"shape": list(t.shape), "degree": t.degree, "coefficient": t.coeff}
            for t in terms
        ],
    }


def document_to_terms(doc: dict) -> list[ring.GradedTerm]:
    """Parse a product document back into graded terms (round-trip)."""
    return [
        ring.GradedTerm(tuple(t["shape"]), t["degree"], t["coefficient"])
        for t in doc["terms"]
    ]


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def render_table(doc: dict) -> str:
    lines = [
        f"O^{tuple(doc['shape'])} * O^({doc['hook'][0]}\\{doc['hook'][1]}) "
        f"in QK(Gr({doc['context'][0]},{doc['context'][1]}))"
    ]
    for t in doc["terms"]:
        q = "" if t["degree"] == 0 else (" q" if t["degree"] == 1 else f" q^{t['degree']}")
        lines.append(f"  {t['coefficient']:+d}{q} O^{tuple(t['shape'])}")
    return "\n".join(lines) + "\n"


@click.group()
def main():
    """Hook-class products in the quantum K-theory ring of a Grassmannian."""


@main.command()
@click.option("--context", "context_text", required=True, help="m,n")
@click.option("--shape", "shape_text", required=True, help="comma-separated row-ends")
@click.option("--hook", "hook_text", required=True, help="a,b")
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table")
def product(context_text, shape_text, hook_text, fmt):
    """Expand O^shape * O^(a\\b) over the q-graded classical basis."""
    ctx = _parse_context(context_text)
    lam = _parse_shape(ctx, shape_text)
    a, b = _parse_hook(hook_text)
    try:
        doc = product_document(ctx, lam, a, b)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    renderer = render_json if fmt == "json" else render_table
    click.echo(renderer(doc), nl=False)


@main.command()
@click.option("--context", "context_text", required=True, help="m,n")
@click.option("--shape", "shape_text", required=True, help="comma-separated row-ends")
@click.option("--hook", "hook_text", required=True, help="a,b")
def coeff(context_text, shape_text, hook_text):
    """The coefficient C_{m,n}(shape, a, b) of q O^shape, cross-checked."""
    ctx = _parse_context(context_text)
    lam = _parse_shape(ctx, shape_text)
    a, b = _parse_hook(hook_text)
    try:
        reduced = formulas.C_reduced(lam, a, b)
        direct = formulas.C_direct(lam, a, b)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    if reduced != direct:
        click.echo(
            f"conformance failure: reduced formula gives {reduced}, "
            f"direct formula gives {direct}",
            err=True,
        )
        sys.exit(EXIT_CONFORMANCE_FAILURE)
    click.echo(str(reduced))


@main.command(name="c-formula")
@click.argument("t", type=int)
@click.argument("a", type=int)
@click.argument("b", type=int)
def c_formula(t, a, b):
    """The staircase constant c(t, a, b), cross-checked over all three forms."""
    try:
        positive = formulas.c_positive(t, a, b)
        double = formulas.c_double_sum(t, a, b)
        single = formulas.c_single_sum(t, a, b)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    if not positive == double == single:
        click.echo(
            f"conformance failure: positive={positive}, double={double}, single={single}",
            err=True,
        )
        sys.exit(EXIT_CONFORMANCE_FAILURE)
    click.echo(str(positive))


@main.command()
@click.option("--context", "context_text", required=True, help="m,n")
@click.option("--shape", "shape_text", required=True, help="comma-separated row-ends")
def corners(context_text, shape_text):
    """Quantum corner count of a shape."""
    ctx = _parse_context(context_text)
    lam = _parse_shape(ctx, shape_text)
    click.echo(str(shapes.quantum_corners(lam)))


@main.command()
@click.option("--lam", "lam_text", required=True, help="partition, e.g. '2,1'")
@click.option("--mu", "mu_text", required=True, help="partition")
@click.option("--nu", "nu_text", required=True, help="partition")
@click.option("--list", "list_tableaux", is_flag=True, help="list the counted tableaux")
def lr(lam_text, mu_text, nu_text, list_tableaux):
    """Classical K-theory structure constant via set-valued tableaux."""
    lam, mu, nu = (_parse_ints(t) for t in (lam_text, mu_text, nu_text))
    for name, p in (("lam", lam), ("mu", mu), ("nu", nu)):
        if any(p[i] < p[i + 1] for i in range(len(p) - 1)) or any(x < 0 for x in p):
            raise click.ClickException(f"{name} is not a partition: {p}")
    diagram = tableaux.star_shape(lam, mu)
    listing = []

    def collect(filling):
        rows = []
        inner = diagram.inner + (0,) * (len(diagram.outer) - len(diagram.inner))
        for r in range(len(diagram.outer)):
            rows.append(
                [sorted(filling[(r, c)]) for c in range(inner[r], diagram.outer[r])]
            )
        listing.append(rows)

    count = tableaux.count_lr_tableaux(
        diagram, nu, callback=collect if list_tableaux else None
    )
    sign = (-1) ** (sum(nu) - sum(lam) - sum(mu))
    click.echo(str(sign * count))
    for rows in listing:
        click.echo(json.dumps(rows))


@main.command(name="verify")
@click.option("--suite", "suite_name", required=True)
@click.option("--max-n", type=int, default=None, help="bound on n for sweep suites")
@click.option("--max-t", type=int, default=None, help="bound on t for formula suites")
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table")
def verify_cmd(suite_name, max_n, max_t, fmt):
    """Run a conformance sweep; nonzero exit on any failure."""
    kwargs = {}
    if max_n is not None:
        kwargs["max_n"] = max_n
    if max_t is not None:
        kwargs["max_t"] = max_t
    try:
        report = verify.run_suite(suite_name, **kwargs)
    except KeyError as exc:
        raise click.ClickException(exc.args[0])
    except TypeError:
        raise click.ClickException(
            f"suite {suite_name!r} does not accept the given range options"
        )
    summary = report.summary()
    if fmt == "json":
        click.echo(json.dumps(summary, indent=2))
    else:
        click.echo(
            f"suite {report.suite}: {report.passed} passed, {report.failed} failed "
            f"({report.wall_time:.2f}s)"
        )
        for failure in summary["failures"]:
            click.echo(f"  FAIL {failure}")
    if report.failed:
        sys.exit(EXIT_CONFORMANCE_FAILURE)


if __name__ == "__main__":
    main()
