"""Command-line interface: sampling, verification, profile tooling, benchmarks."""
from __future__ import annotations

import json
import sys
import time

import click

from .combinatorics import PascalCache
from .disk import sample_patterns_disk
from .kgprofile import PredicateWeights, Profile, ProfileError, pattern_to_subprofile, profile_to_qdb
from .oracle import compare_empirical, enumerate_distribution
from .qdb import LengthUtility, PriceTable, QdbError, load_qdb, serialize_qdb
from .sampler import SampleRequest, sample_patterns
from .synth import generate_qdb
from .weighting import ZeroMassError, build_weight_index, weigh_transaction


def _parse_max(value: str | None) -> int | None:
    if value is None or value.lower() in ("inf", "infinity", "none"):
        return None
    try:
        return int(value)
    except ValueError:
        raise click.UsageError(f"--max must be an integer or 'inf', got {value!r}")


def _length_utility(mode: str, min_len: int, max_text: str | None) -> LengthUtility:
    try:
        return LengthUtility(mode=mode, min_len=min_len, max_len=_parse_max(max_text))
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _load_prices(path) -> PriceTable | None:
    if path is None:
        return None
    try:
        return PriceTable.load(path)
    except QdbError as exc:
        raise click.ClickException(str(exc))


def _load_db(path, prices):
    try:
        return load_qdb(path, prices)
    except (OSError, QdbError) as exc:
        raise click.ClickException(str(exc))


def _load_profile(path) -> Profile:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return Profile.from_json(json.load(fh))
    except (OSError, json.JSONDecodeError, ProfileError) as exc:
        raise click.ClickException(str(exc))


def _load_predicate_weights(path) -> PredicateWeights:
    if path is None:
        return PredicateWeights()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return PredicateWeights(json.load(fh))
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        raise click.ClickException(str(exc))


def _write_out(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _dump_jsonl(objs) -> str:
    return "".join(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n" for obj in objs)


@click.group()
def main():
    """Exact high-utility pattern sampling for quantitative databases."""


@main.command()
@click.option("--out", required=True, type=click.Path(dir_okay=False))
@click.option("-n", "--transactions", default=1000, show_default=True)
@click.option("--avg-len", default=10, show_default=True)
@click.option("--items", default=10_000, show_default=True)
@click.option("--max-quantity", default=100, show_default=True)
@click.option("--seed", default=0, show_default=True)
def gen(out, transactions, avg_len, items, max_quantity, seed):
    """Generate a synthetic qDB file."""
    try:
        generate_qdb(out, transactions, avg_len, items, max_quantity, seed)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    click.echo(f"wrote {transactions} transactions to {out}")


_common = [
    click.option("--mode", type=click.Choice(["hup", "haup"]), default="hup", show_default=True),
    click.option("--min", "min_len", default=1, show_default=True),
    click.option("--max", "max_text", default=None, help="integer or 'inf' [default: inf]"),
]


def _with_common(fn):
    for deco in reversed(_common):
        fn = deco(fn)
    return fn


@main.command()
@click.option("--db", "db_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--prices", type=click.Path(exists=True, dir_okay=False))
@_with_common
@click.option("--out", type=click.Path(dir_okay=False))
def weigh(db_path, prices, mode, min_len, max_text, out):
    """Dump W(t) for every transaction as JSON lines."""
    utility = _length_utility(mode, min_len, max_text)
    db = _load_db(db_path, _load_prices(prices))
    cache = PascalCache(db.max_transaction_length())
    rows = [
        {"transaction": t.tid, "weight": weigh_transaction(t, utility, cache).total}
        for t in db.transactions
    ]
    _write_out(_dump_jsonl(rows), out)


@main.command()
@click.option("--db", "db_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--profile", "profile_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--prices", type=click.Path(exists=True, dir_okay=False))
@click.option("--predicate-weights", "pw_path", type=click.Path(exists=True, dir_okay=False))
@_with_common
@click.option("-k", default=1, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--disk", is_flag=True, help="use the two-pass streaming pipeline")
@click.option("--out", type=click.Path(dir_okay=False))
def sample(db_path, profile_path, prices, pw_path, mode, min_len, max_text, k, seed, disk, out):
    """Draw k patterns proportionally to weighted utility; JSONL output."""
    if (db_path is None) == (profile_path is None):
        raise click.UsageError("provide exactly one of --db or --profile")
    if profile_path is not None and (prices or disk):
        raise click.UsageError("--prices/--disk apply to --db input only")
    utility = _length_utility(mode, min_len, max_text)
    if k < 1:
        raise click.UsageError("-k must be >= 1")
    request = SampleRequest(utility=utility, k=k, seed=seed)
    try:
        if disk:
            records, _ = sample_patterns_disk(db_path, request, _load_prices(prices))
            db = _load_db(db_path, _load_prices(prices))  # labels for output only
        else:
            if db_path is not None:
                db = _load_db(db_path, _load_prices(prices))
            else:
                db, _ = profile_to_qdb(_load_profile(profile_path), _load_predicate_weights(pw_path))
            cache = PascalCache(db.max_transaction_length())
            index = build_weight_index(db, utility, cache)
            records = sample_patterns(db, index, request, cache)
    except ZeroMassError as exc:
        raise click.ClickException(str(exc))
    _write_out(_dump_jsonl(r.to_json(db) for r in records), out)


@main.command("oracle-check")
@click.option("--db", "db_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--prices", type=click.Path(exists=True, dir_okay=False))
@_with_common
@click.option("-k", default=200_000, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False))
def oracle_check(db_path, prices, mode, min_len, max_text, k, seed, out):
    """Enumerate the exact distribution, sample k patterns, report the fit."""
    utility = _length_utility(mode, min_len, max_text)
    db = _load_db(db_path, _load_prices(prices))
    cache = PascalCache(db.max_transaction_length())
    try:
        dist = enumerate_distribution(db, utility)
        index = build_weight_index(db, utility, cache)
        records = sample_patterns(db, index, SampleRequest(utility, k, seed), cache)
    except (ZeroMassError, RuntimeError) as exc:
        raise click.ClickException(str(exc))
    report = compare_empirical(dist, records)
    _write_out(json.dumps(report.to_json(), sort_keys=True, indent=2) + "\n", out)


@main.command("convert-profile")
@click.option("--profile", "profile_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--predicate-weights", "pw_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--direction", type=click.Choice(["out", "in", "both"]), default="both", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False))
@click.option("--prices-out", type=click.Path(dir_okay=False), help="write the matching item price file")
def convert_profile(profile_path, pw_path, direction, out, prices_out):
    """Convert a profile JSON to qDB text (items are edge ids)."""
    profile = _load_profile(profile_path)
    pw = _load_predicate_weights(pw_path)
    db, mapping = profile_to_qdb(profile, pw, direction)
    _write_out(serialize_qdb(db), out)
    if prices_out:
        lines = [f"{edge_id} {pw.weight(edge.predicate)}" for edge_id, edge in mapping.items()]
        with open(prices_out, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")


@main.command()
@click.option("--profile", "profile_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--items", "items_text", required=True, help="comma-separated edge ids")
@click.option("--out", type=click.Path(dir_okay=False))
def subprofile(profile_path, items_text, out):
    """Rebuild the sub-profile induced by a pattern's edge ids."""
    profile = _load_profile(profile_path)
    edge_ids = [part.strip() for part in items_text.split(",") if part.strip()]
    if not edge_ids:
        raise click.UsageError("--items must name at least one edge id")
    try:
        sub = pattern_to_subprofile(edge_ids, profile)
    except ProfileError as exc:
        raise click.ClickException(str(exc))
    _write_out(json.dumps(sub.to_json(), sort_keys=True, indent=2) + "\n", out)


@main.command()
@click.option("--db", "db_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--gen", "gen_spec", help="e.g. 'n=1000000,avg=10,items=10000'")
@_with_common
@click.option("-k", default=10_000, show_default=True, help="number of timed draws")
@click.option("--seed", default=0, show_default=True)
def bench(db_path, gen_spec, mode, min_len, max_text, k, seed):
    """Measure preprocessing wall time and drawing time per pattern."""
    import tempfile

    if (db_path is None) == (gen_spec is None):
        raise click.UsageError("provide exactly one of --db or --gen")
    utility = _length_utility(mode, min_len, max_text)
    tmp = None
    if gen_spec is not None:
        params = {}
        for part in gen_spec.split(","):
            key, _, value = part.partition("=")
            params[key.strip()] = int(value)
        tmp = tempfile.NamedTemporaryFile(suffix=".qdb", delete=False)
        tmp.close()
        generate_qdb(
            tmp.name,
            transactions=params.get("n", 1000),
            avg_length=params.get("avg", 10),
            items=params.get("items", 10_000),
            max_quantity=params.get("maxq", 100),
            seed=seed,
        )
        db_path = tmp.name

    started = time.perf_counter()
    db = _load_db(db_path, None)
    cache = PascalCache(db.max_transaction_length())
    try:
        index = build_weight_index(db, utility, cache)
    except ZeroMassError as exc:
        raise click.ClickException(str(exc))
    preprocess = time.perf_counter() - started

    started = time.perf_counter()
    sample_patterns(db, index, SampleRequest(utility, k, seed), cache)
    per_pattern_ms = (time.perf_counter() - started) * 1000 / k
    click.echo(f"preprocess: {preprocess:.3f} s")
    click.echo(f"draw: {per_pattern_ms:.4f} ms/pattern over {k} draws")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
@click.option("--edge-cap", default=10**6, show_default=True)
def serve(host, port, edge_cap):
    """Run the HTTP sampling service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(edge_cap=edge_cap), host=host, port=port)


if __name__ == "__main__":
    main()
