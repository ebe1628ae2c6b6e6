"""Command-line front end: class tables, product reports, minimum sweeps,
and the full verification suite with a per-(q, check) JSON result cache."""

from __future__ import annotations

import concurrent.futures
import hashlib
import json
import os
import tempfile
from datetime import datetime, timezone
from pathlib import Path

import click

from . import __version__
from .checks import ALL_CHECKS, CheckResult, applicable_checks, run_checks
from .classes import ClassLabel, class_table, classify
from .field import Field, make_field, prime_factors
from .matrices import det, from_literal
from .products import CSV_HEADER, min_product_classes, product_report

CACHE_DIR_ENV = "SL2Q_CACHE_DIR"
DEFAULT_CACHE_DIR = ".sl2q-cache"
# time-derived values are excluded from report checksums so that cached and
# fresh runs compare byte-identical
VOLATILE_KEYS = {"timestamp", "elapsed_ms"}


def prime_powers_up_to(n: int) -> list[int]:
    out = []
    for q in range(2, n + 1):
        p = prime_factors(q)
        if len(p) == 1:
            out.append(q)
    return out


def field_for(q: int) -> Field:
    ps = prime_factors(q)
    if len(ps) != 1:
        raise click.UsageError(f"{q} is not a prime power")
    p = ps[0]
    m = 0
    qq = q
    while qq > 1:
        qq //= p
        m += 1
    try:
        return make_field(p, m)
    except ValueError as e:
        raise click.UsageError(str(e)) from None


def _strip_volatile(obj):
    if isinstance(obj, dict):
        return {k: _strip_volatile(v) for k, v in obj.items() if k not in VOLATILE_KEYS}
    if isinstance(obj, list):
        return [_strip_volatile(v) for v in obj]
    return obj


def canonical_checksum(payload) -> str:
    blob = json.dumps(_strip_volatile(payload), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def _atomic_write(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# -- result cache -----------------------------------------------------------

def _cache_key(F: Field, check: str, seed: int) -> dict:
    return {"version": __version__, "p": F.p, "m": F.m, "check": check, "seed": seed}


def _cache_path(cache_dir: Path, q: int, check: str) -> Path:
    return cache_dir / f"q{q:04d}_{check}.json"


def _cache_load(path: Path, key: dict) -> CheckResult | None:
    if not path.exists():
        return None
    try:
        data = json.loads(path.read_text())
        if data.get("key") != key:
            return None
        return CheckResult.from_json(data["result"])
    except (json.JSONDecodeError, KeyError, TypeError) as e:
        click.echo(f"warning: discarding corrupt cache entry {path}: {e}", err=True)
        return None


def _cache_store(path: Path, key: dict, result: CheckResult) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    _atomic_write(path, json.dumps({"key": key, "result": result.to_json()}, indent=1, sort_keys=True))


def _check_job(args: tuple) -> dict:
    # process-pool worker: rebuild the field locally, run one check
    p, m, name, seed = args
    F = make_field(p, m)
    return run_checks(F, [name], seed=seed)[0].to_json()


# -- commands ----------------------------------------------------------------

@click.group()
@click.version_option(__version__)
def main():
    """Exact conjugacy-class product computations over GF(q)."""


@main.command("table")
@click.option("--q", "q", type=int, required=True, help="Field size (prime power).")
@click.option("--format", "fmt", type=click.Choice(["text", "json", "csv"]), default="text")
def cmd_table(q: int, fmt: str):
    """List the conjugacy classes: label, representative, size."""
    F = field_for(q)
    table = class_table(F)
    if fmt == "json":
        click.echo(json.dumps(table.to_json(F), indent=1, sort_keys=True))
        return
    if fmt == "csv":
        click.echo("label,rep,size")
        for e in table.entries:
            click.echo(f'{e.label},"{e.rep}",{e.size}')
        return
    click.echo(f"q={q} p={F.p} m={F.m} modulus={list(F.modulus)}")
    click.echo(f"{'label':<10}{'representative':<20}size")
    total = 0
    for e in table.entries:
        click.echo(f"{str(e.label):<10}{str(e.rep):<20}{e.size}")
        total += e.size
    click.echo(f"{len(table)} classes, sizes sum to {total} = q(q^2-1)")


def _parse_operand(F: Field, text: str) -> ClassLabel:
    text = text.strip()
    try:
        if text.startswith("["):
            M = from_literal(F, text)
            if det(F, M) != 1:
                raise ValueError(f"operand {text} has determinant {det(F, M)}, not 1")
            return classify(F, M)
        label = ClassLabel.parse(text)
        class_table(F).entry(label)  # existence check
        return label
    except ValueError as e:
        raise click.UsageError(str(e)) from None


@main.command("eta")
@click.option("--q", "q", type=int, required=True)
@click.option("--a", "a_text", required=True, help="Class label or matrix literal [[a,b],[c,d]].")
@click.option("--b", "b_text", required=True, help="Class label or matrix literal.")
@click.option("--format", "fmt", type=click.Choice(["text", "json", "csv"]), default="text")
def cmd_eta(q: int, a_text: str, b_text: str, fmt: str):
    """Class decomposition of the product of two conjugacy classes."""
    F = field_for(q)
    la, lb = _parse_operand(F, a_text), _parse_operand(F, b_text)
    report = product_report(F, la, lb)
    if fmt == "json":
        click.echo(json.dumps(report.to_json(), indent=1, sort_keys=True))
    elif fmt == "csv":
        click.echo(CSV_HEADER)
        click.echo(report.csv_row())
    else:
        click.echo(f"q={q}  {la} x {lb}")
        click.echo(f"eta = {report.num_classes}")
        click.echo("classes: " + " ".join(str(l) for l in report.labels))
        click.echo("traces:  " + " ".join(str(t) for t in report.traces))


@main.command("min")
@click.option("--q", "q", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def cmd_min(q: int, fmt: str):
    """Minimum product class count over noncentral class pairs."""
    F = field_for(q)
    value, (la, lb) = min_product_classes(F)
    if fmt == "json":
        click.echo(json.dumps({"q": q, "min": value, "witness": [str(la), str(lb)]}, sort_keys=True))
    else:
        click.echo(f"q={q}: minimum {value} classes, witness {la} x {lb}")


@main.command("sweep")
@click.option("--qmax", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None,
              help="Write to a file instead of stdout.")
def cmd_sweep(qmax: int, fmt: str, out_path: str | None):
    """Product reports for every noncentral class pair, all q <= qmax."""
    if qmax < 2:
        raise click.UsageError("--qmax must be at least 2")
    reports = []
    for q in prime_powers_up_to(qmax):
        F = field_for(q)
        labels = class_table(F).noncentral_labels()
        for i, la in enumerate(labels):
            for lb in labels[i:]:
                reports.append(product_report(F, la, lb))
    if fmt == "json":
        text = json.dumps({"version": __version__, "qmax": qmax,
                           "reports": [r.to_json() for r in reports]}, indent=1, sort_keys=True)
    else:
        text = "\n".join([CSV_HEADER] + [r.csv_row() for r in reports]) + "\n"
    if out_path:
        _atomic_write(Path(out_path), text)
        click.echo(f"wrote {len(reports)} reports to {out_path}")
    else:
        click.echo(text, nl=False)


@main.command("verify")
@click.option("--qmax", type=int, required=True)
@click.option("--checks", "check_names", default=None,
              help="Comma-separated subset of checks (default: all applicable).")
@click.option("--seed", type=int, default=0, show_default=True,
              help="Seed for the sampled regimes of large-q checks.")
@click.option("--out", "out_dir", type=click.Path(file_okay=False), default="sl2q-verify",
              show_default=True, help="Directory for report.json, min_classes.csv, manifest.json.")
@click.option("--cache-dir", "cache_dir", type=click.Path(file_okay=False), default=None,
              help=f"Result cache directory (default ${CACHE_DIR_ENV} or {DEFAULT_CACHE_DIR}).")
@click.option("--no-cache", is_flag=True, help="Recompute everything, ignore and skip the cache.")
@click.option("--jobs", type=int, default=1, show_default=True,
              help="Parallel worker processes across (q, check) items.")
@click.pass_context
def cmd_verify(ctx, qmax: int, check_names: str | None, seed: int, out_dir: str,
               cache_dir: str | None, no_cache: bool, jobs: int):
    """Run the verification suite for every prime power q <= qmax.

    Exits nonzero if any executed check fails.
    """
    if qmax < 2:
        raise click.UsageError("--qmax must be at least 2")
    selected = None
    if check_names:
        selected = [s.strip() for s in check_names.split(",") if s.strip()]
        unknown = [s for s in selected if s not in ALL_CHECKS]
        if unknown:
            raise click.UsageError(f"unknown checks: {', '.join(unknown)}; "
                                   f"known: {', '.join(ALL_CHECKS)}")
    cache = Path(cache_dir or os.environ.get(CACHE_DIR_ENV) or DEFAULT_CACHE_DIR)

    work: list[tuple[int, Field, str]] = []
    for q in prime_powers_up_to(qmax):
        F = field_for(q)
        names = applicable_checks(q)
        if selected is not None:
            names = [n for n in names if n in selected]
        for n in names:
            work.append((q, F, n))

    results: dict[tuple[int, str], CheckResult] = {}
    cached: set[tuple[int, str]] = set()
    todo: list[tuple[int, Field, str]] = []
    for q, F, n in work:
        hit = None if no_cache else _cache_load(_cache_path(cache, q, n), _cache_key(F, n, seed))
        if hit is not None:
            results[(q, n)] = hit
            cached.add((q, n))
        else:
            todo.append((q, F, n))

    if jobs > 1 and todo:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            for (q, F, n), payload in zip(
                todo, pool.map(_check_job, [(F.p, F.m, n, seed) for _, F, n in todo])
            ):
                results[(q, n)] = CheckResult.from_json(payload)
    else:
        for q, F, n in todo:
            results[(q, n)] = run_checks(F, [n], seed=seed)[0]

    if not no_cache:
        for q, F, n in todo:
            _cache_store(_cache_path(cache, q, n), _cache_key(F, n, seed), results[(q, n)])

    ordered = [results[(q, n)] for q, F, n in work]
    for q, F, n in work:
        r = results[(q, n)]
        mark = "PASS" if r.passed else "FAIL"
        extra = "  (cached)" if (q, n) in cached else ""
        click.echo(f"q={q:<4}{n:<24}{mark}{r.elapsed_ms:10.1f} ms{extra}")

    all_passed = all(r.passed for r in ordered)
    command = f"verify --qmax {qmax} --seed {seed}" + (
        f" --checks {','.join(selected)}" if selected else "")
    report = {
        "version": __version__,
        "command": command,
        "qmax": qmax,
        "seed": seed,
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "all_passed": all_passed,
        "results": [r.to_json() for r in ordered],
    }
    min_rows = ["q,min"]
    for r in ordered:
        if r.check == "min_class_bounds" and "min_classes" in r.details:
            min_rows.append(f"{r.q},{r.details['min_classes']}")
    csv_text = "\n".join(min_rows) + "\n"

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    report_text = json.dumps(report, indent=1, sort_keys=True)
    _atomic_write(out / "report.json", report_text)
    _atomic_write(out / "min_classes.csv", csv_text)
    manifest = {
        "version": __version__,
        "command": command,
        "fields": [field_for(q).to_json() | {"q": q} for q in prime_powers_up_to(qmax)],
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "checksums": {
            "report.json": canonical_checksum(report),
            "min_classes.csv": hashlib.sha256(csv_text.encode()).hexdigest(),
        },
    }
    _atomic_write(out / "manifest.json", json.dumps(manifest, indent=1, sort_keys=True))
    click.echo(f"report in {out}/  ({'all passed' if all_passed else 'FAILURES'})")
    if not all_passed:
        ctx.exit(1)


if __name__ == "__main__":
    main()
