"""Command-line front door.

Human-readable summaries go to stdout; machine formats (CSV/JSON/DOT)
are written only when --out is given.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from .simulator import (
    DegenerateStatsError,
    average_scaling,
    export_stats_json,
    gaussian_fit,
    simulate,
    stats_from_csv,
    stats_to_csv,
)
from .solver import (
    CapacityError,
    DEFAULT_EXPORT_LIMIT,
    DEFAULT_SOLVE_LIMIT,
    bounds_report,
    export_tree,
    extreme_lengths,
    solve,
    winning_line,
)
from .strategies import make_policy, play_game


@click.group()
def main() -> None:
    """The two-player Zeckendorf game: solver, simulator, play service."""


def _write(out: Path | None, text: str) -> None:
    if out is not None:
        out.write_text(text)


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(1)


@main.command("simulate")
@click.option("--n", type=int, required=True)
@click.option("--trials", type=int, default=9999, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--workers", type=int, default=1, show_default=True)
@click.option("--out", type=click.Path(path_type=Path), default=None,
              help="write histogram CSV here; '<out>.json' gets the stats JSON")
def simulate_cmd(n: int, trials: int, seed: int, workers: int, out: Path | None):
    """Monte Carlo random-game length statistics."""
    try:
        stats = simulate(n, trials, seed, workers=workers)
    except ValueError as exc:
        _fail(str(exc))
    click.echo(
        f"n={n} trials={trials} seed={seed} mean={stats.mean:.3f} "
        f"var={stats.variance:.3f} skew={stats.skewness:.4f} "
        f"exkurt={stats.excess_kurtosis:.4f} "
        f"p1_wins={stats.p1_wins} p2_wins={stats.p2_wins}"
    )
    if out is not None:
        out.write_text(stats_to_csv(stats))
        out.with_suffix(out.suffix + ".json").write_text(export_stats_json(stats))
        click.echo(f"wrote {out}")


@main.command()
@click.option("--stats", "stats_path", type=click.Path(path_type=Path, exists=True),
              required=True, help="histogram CSV produced by `simulate --out`")
@click.option("--out", type=click.Path(path_type=Path), default=None)
def fit(stats_path: Path, out: Path | None):
    """Moment-matched Gaussian fit of a saved length histogram."""
    stats = stats_from_csv(stats_path.read_text())
    try:
        result = gaussian_fit(stats)
    except DegenerateStatsError as exc:
        _fail(str(exc))
    click.echo(f"mu={result.mu:.4f} sigma={result.sigma:.4f}")
    _write(out, export_stats_json(stats, result))


@main.command()
@click.option("--ns", type=str, default="50,100,150,200", show_default=True,
              help="comma-separated n values")
@click.option("--trials", type=int, default=999, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--workers", type=int, default=1, show_default=True)
@click.option("--out", type=click.Path(path_type=Path), default=None)
def scaling(ns: str, trials: int, seed: int, workers: int, out: Path | None):
    """Mean game length vs n with the least-squares line."""
    try:
        values = [int(x) for x in ns.split(",") if x.strip()]
        report = average_scaling(values, trials, seed, workers=workers)
    except ValueError as exc:
        _fail(str(exc))
    for n, mean in report.means:
        click.echo(f"n={n} mean={mean:.3f}")
    click.echo(f"slope={report.slope:.4f} intercept={report.intercept:.4f}")
    _write(out, json.dumps(report.to_json(), indent=2))


@main.command("solve")
@click.option("--n", type=int, required=True)
@click.option("--limit", type=int, default=DEFAULT_SOLVE_LIMIT, show_default=True)
@click.option("--out", type=click.Path(path_type=Path), default=None)
def solve_cmd(n: int, limit: int, out: Path | None):
    """Optimal-play winner and exact length range by exhaustive search."""
    try:
        report = solve(n, limit=limit)
    except (CapacityError, ValueError) as exc:
        _fail(str(exc))
    click.echo(
        f"n={n} winner={report.winner.value} min={report.min_length} "
        f"max={report.max_length} states={report.reachable_states} "
        f"parities={','.join(sorted(report.parities))}"
    )
    _write(out, json.dumps(report.to_json(), indent=2))


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--out", type=click.Path(path_type=Path), default=None)
def bounds(n: int, out: Path | None):
    """Theoretical length bounds (no search)."""
    try:
        report = bounds_report(n)
    except ValueError as exc:
        _fail(str(exc))
    click.echo(
        f"n={n} lower={report.lower} ell={report.ell} upper={report.upper} "
        f"log_upper={report.log_upper:.3f}"
    )
    _write(out, json.dumps(report.to_json(), indent=2))


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--limit", type=int, default=DEFAULT_SOLVE_LIMIT, show_default=True)
def lengths(n: int, limit: int):
    """Exact shortest and longest game lengths."""
    try:
        lo, hi = extreme_lengths(n, limit=limit)
    except (CapacityError, ValueError) as exc:
        _fail(str(exc))
    click.echo(f"n={n} min={lo} max={hi}")


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--limit", type=int, default=DEFAULT_SOLVE_LIMIT, show_default=True)
@click.option("--out", type=click.Path(path_type=Path), default=None)
def line(n: int, limit: int, out: Path | None):
    """One optimal principal variation."""
    try:
        moves = winning_line(n, limit=limit)
    except (CapacityError, ValueError) as exc:
        _fail(str(exc))
    click.echo(" -> ".join(str(m) for m in moves))
    _write(out, json.dumps([m.to_json() for m in moves], indent=2))


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["dot", "json"]),
              default="dot", show_default=True)
@click.option("--limit", type=int, default=DEFAULT_EXPORT_LIMIT, show_default=True)
@click.option("--out", type=click.Path(path_type=Path), default=None)
def tree(n: int, fmt: str, limit: int, out: Path | None):
    """Full game DAG as DOT or JSON, winning line marked."""
    try:
        doc = export_tree(n, fmt=fmt, limit=limit)
    except (CapacityError, ValueError) as exc:
        _fail(str(exc))
    if out is None:
        click.echo(doc, nl=False)
    else:
        out.write_text(doc)
        click.echo(f"wrote {out}")


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--policy", type=click.Choice(["greedy", "longest", "random"]),
              default="random", show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(path_type=Path), default=None)
def play(n: int, policy: str, seed: int, out: Path | None):
    """Play one full game with a policy and report the record."""
    try:
        record = play_game(n, make_policy(policy, seed=seed))
    except ValueError as exc:
        _fail(str(exc))
    click.echo(
        f"n={n} policy={record.policy} length={record.length} "
        f"winner={record.winner.value}"
    )
    _write(out, json.dumps(record.to_json(), indent=2))


@main.command()
@click.option("--host", default=None, help="bind address; default from "
              "ZECKGAME_HOST or 127.0.0.1")
@click.option("--port", type=int, default=None, help="default from "
              "ZECKGAME_PORT or 8000")
def serve(host: str | None, port: int | None):
    """Run the HTTP play/analysis service."""
    import uvicorn

    from .service import create_app

    host = host or os.environ.get("ZECKGAME_HOST", "127.0.0.1")
    port = port or int(os.environ.get("ZECKGAME_PORT", "8000"))
    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
