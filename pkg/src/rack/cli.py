"""Command-line interface: convert, build, recommend, eval, stats.

Option resolution order is flags, then ``RACK_*`` environment variables,
then the TOML config file given via ``--config``, then built-in defaults.
Exit codes: 0 success, 2 usage, 3 I/O, 4 file format, 5 empty query.
"""

from __future__ import annotations

import functools
import sys
from pathlib import Path

import click

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from . import corpusstats, evaluation
from .codeextract import load_whitelist
from .convert import convert_posts_xml
from .corpus import CorpusDocument, read_jsonl
from .errors import EmptyQueryError, FormatError, RackError, RackIOError
from .index import BuildConfig, build_index, load_index, save_index
from .ranker import RankerConfig, rank_apis
from .textprep import QueryTermMode, StopWordList, extract_query_keywords

EXIT_IO = 3
EXIT_FORMAT = 4
EXIT_EMPTY_QUERY = 5

_MODE_CHOICES = [mode.value for mode in QueryTermMode]

# Accepted config keys, normalized to option names.
_KEY_ALIASES = {
    "stopwords_path": "stopwords",
    "query_term_mode": "terms",
    "top_k": "top",
    "whitelist_path": "whitelist",
}


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except EmptyQueryError as exc:
            _fail(str(exc), EXIT_EMPTY_QUERY)
        except FormatError as exc:
            _fail(str(exc), EXIT_FORMAT)
        except (RackIOError, OSError) as exc:
            _fail(str(exc), EXIT_IO)
        except RackError as exc:
            _fail(str(exc), 1)

    return wrapper


def _load_config(path: str) -> dict:
    try:
        with open(path, "rb") as handle:
            raw = tomllib.load(handle)
    except OSError as exc:
        raise click.ClickException(f"cannot read config {path}: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise click.ClickException(f"bad config {path}: {exc}") from exc

    flat = {}
    sections = {}
    for key, value in raw.items():
        if isinstance(value, dict):
            sections[key] = {_KEY_ALIASES.get(k, k): v for k, v in value.items()}
        else:
            flat[_KEY_ALIASES.get(key, key)] = value

    commands = ["convert", "build", "recommend", "eval"]
    stats_commands = ["api-freq", "package-coverage", "keyword-coverage"]
    default_map: dict = {}
    for name in commands:
        default_map[name] = dict(flat)
        default_map[name].update(sections.get(name, {}))
    default_map["stats"] = {}
    for name in stats_commands:
        default_map["stats"][name] = dict(flat)
        default_map["stats"][name].update(sections.get(name, {}))
    return default_map


def _load_stops(path: str | None) -> StopWordList:
    return StopWordList.from_file(path) if path else StopWordList.default()


def _iter_documents(path: str):
    for item in read_jsonl(path):
        if isinstance(item, CorpusDocument):
            yield item


@click.group(context_settings={"auto_envvar_prefix": "RACK"})
@click.option(
    "--config",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="TOML config file supplying option defaults.",
)
@click.pass_context
def main(ctx: click.Context, config: str | None) -> None:
    """Mine keyword-API associations from Q&A corpora and recommend APIs."""
    if config:
        ctx.default_map = _load_config(config)


@main.command()
@click.argument("posts_xml", type=click.Path(exists=True, dir_okay=False))
@click.argument("out_jsonl", type=click.Path(dir_okay=False, writable=True))
@click.option("--tag", default="java", show_default=True, help="Required question tag.")
@click.option(
    "--min-answers", default=3, show_default=True, help="Minimum answers per question."
)
@click.option(
    "--require-code/--no-require-code",
    default=True,
    show_default=True,
    help="Keep only questions whose accepted answer contains a <code> element.",
)
@_handle_errors
def convert(posts_xml, out_jsonl, tag, min_answers, require_code):
    """Convert a Stack Exchange Posts XML dump to corpus JSONL."""
    report = convert_posts_xml(
        posts_xml, out_jsonl, tag=tag, min_answers=min_answers, require_code=require_code
    )
    click.echo(f"questions seen\t{report.questions_seen}")
    click.echo(f"kept\t{report.kept}")
    for reason in sorted(report.dropped):
        click.echo(f"dropped:{reason}\t{report.dropped[reason]}")
    click.echo(f"malformed rows\t{report.malformed_rows}")


@main.command()
@click.argument("corpus", type=click.Path(exists=True, dir_okay=False))
@click.argument("out_dir", type=click.Path(file_okay=False))
@click.option("--stopwords", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--whitelist", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option(
    "--min-count", default=1, show_default=True, help="Drop associations below this count."
)
@_handle_errors
def build(corpus, out_dir, stopwords, whitelist, min_count):
    """Build the association and context indices from a JSONL corpus."""
    config = BuildConfig(
        stops=_load_stops(stopwords),
        whitelist=frozenset(load_whitelist(whitelist)) if whitelist else None,
        min_count=min_count,
    )
    result = build_index(read_jsonl(corpus), config)
    save_index(result.assoc, result.ctx, out_dir, config_hash=config.fingerprint())
    click.echo(f"documents\t{result.assoc.doc_count}")
    click.echo(f"keywords\t{result.assoc.vocabulary_size}")
    click.echo(f"associations\t{result.assoc.association_count}")
    for reason in sorted(result.report.skipped):
        click.echo(f"skipped:{reason}\t{result.report.skipped[reason]}")


@main.command()
@click.argument("index_dir", type=click.Path(exists=True, file_okay=False))
@click.argument("query", nargs=-1, required=True)
@click.option("--top", default=10, show_default=True, help="Number of APIs to recommend.")
@click.option(
    "--terms",
    type=click.Choice(_MODE_CHOICES),
    default=QueryTermMode.NOUN_AND_VERB.value,
    show_default=True,
    help="Query term selection mode.",
)
@click.option("--delta", default=5, show_default=True, help="Candidate list cutoff.")
@click.option("--gamma", default=0.0, show_default=True, help="Coherence threshold.")
@click.option("--explain", is_flag=True, help="Show per-heuristic score breakdown.")
@click.option("--json", "as_json", is_flag=True, help="Emit machine-readable JSON.")
@click.option("--stopwords", type=click.Path(exists=True, dir_okay=False), default=None)
@_handle_errors
def recommend(index_dir, query, top, terms, delta, gamma, explain, as_json, stopwords):
    """Translate a natural-language query into ranked API classes."""
    loaded = load_index(index_dir)
    stops = _load_stops(stopwords)
    mode = QueryTermMode.from_string(terms)
    query_text = " ".join(query)
    keywords = extract_query_keywords(query_text, mode, stops)
    if not keywords:
        raise EmptyQueryError(f"no keywords left after preprocessing {query_text!r}")
    cfg = RankerConfig(delta=delta, gamma=gamma, top_k=top)
    ranked = rank_apis(loaded.assoc, loaded.ctx, keywords, cfg)

    if as_json:
        import json as jsonlib

        payload = {
            "query": query_text,
            "mode": mode.value,
            "keywords": sorted(keywords),
            "results": [
                {
                    "rank": position,
                    "api": scored.api,
                    "total": scored.total,
                    "kac_parts": [[kw, score] for kw, score in scored.kac_parts],
                    "kkc_parts": [
                        [[a, b], score] for (a, b), score in scored.kkc_parts
                    ],
                }
                for position, scored in enumerate(ranked, 1)
            ],
        }
        click.echo(jsonlib.dumps(payload, indent=2))
        return

    for position, scored in enumerate(ranked, 1):
        click.echo(f"{position}\t{scored.api}\t{scored.total:.6f}")
        if explain:
            for kw, score in scored.kac_parts:
                click.echo(f"\tkac\t{kw}\t{score:.6f}")
            for (a, b), score in scored.kkc_parts:
                click.echo(f"\tkkc\t{a}+{b}\t{score:.6f}")


@main.command("eval")
@click.argument("index_dir", type=click.Path(exists=True, file_okay=False))
@click.argument("gold", type=click.Path(exists=True, dir_okay=False))
@click.option("--k", "ks", default="3,5,10", show_default=True, help="Comma-separated Ks.")
@click.option(
    "--modes",
    default=QueryTermMode.NOUN_AND_VERB.value,
    show_default=True,
    help="Comma-separated query term modes.",
)
@click.option("--delta", default=5, show_default=True)
@click.option("--gamma", default=0.0, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Emit machine-readable JSON.")
@click.option("--stopwords", type=click.Path(exists=True, dir_okay=False), default=None)
@_handle_errors
def eval_command(index_dir, gold, ks, modes, delta, gamma, as_json, stopwords):
    """Score the recommender against a gold set."""
    try:
        k_values = [int(part) for part in ks.split(",") if part.strip()]
        mode_values = [
            QueryTermMode.from_string(part.strip())
            for part in modes.split(",")
            if part.strip()
        ]
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from exc
    if not k_values or not mode_values:
        raise click.BadParameter("need at least one K and one mode")

    loaded = load_index(index_dir)
    entries = evaluation.load_gold(gold)
    cfg = RankerConfig(delta=delta, gamma=gamma, top_k=max(k_values))
    reports = evaluation.run_experiment(
        loaded.assoc, loaded.ctx, entries, cfg, mode_values, k_values, _load_stops(stopwords)
    )
    if as_json:
        click.echo(evaluation.reports_to_json(reports))
    else:
        for report in reports:
            click.echo(evaluation.format_report_table(report))
            click.echo("")


@main.group()
def stats() -> None:
    """Exploratory corpus statistics."""


@stats.command("api-freq")
@click.argument("corpus", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--whitelist", type=click.Path(exists=True, dir_okay=False), required=True,
    help="Closed class set, one name per line.",
)
@click.option("--distinct", is_flag=True, help="Count distinct classes per answer.")
@_handle_errors
def stats_api_freq(corpus, whitelist, distinct):
    """Per-answer API usage frequency distribution."""
    allowed = load_whitelist(whitelist)
    dist = corpusstats.api_frequency_stats(
        _iter_documents(corpus), allowed, distinct=distinct
    )
    click.echo(f"# answers\t{dist.count}")
    click.echo(f"# mean\t{dist.mean:.4f}")
    for q in sorted(dist.quantiles):
        click.echo(f"# quantile\t{q}\t{dist.quantiles[q]}")
    click.echo("frequency\tanswers")
    for value in sorted(dist.histogram):
        click.echo(f"{value}\t{dist.histogram[value]}")


@stats.command("package-coverage")
@click.argument("corpus", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--packages", type=click.Path(exists=True, dir_okay=False), required=True,
    help="TSV of package to comma-separated class names.",
)
@_handle_errors
def stats_package_coverage(corpus, packages):
    """Per-package class coverage in accepted answers."""
    package_map = corpusstats.load_package_map(packages)
    report = corpusstats.package_coverage(_iter_documents(corpus), package_map)
    click.echo("package\tclasses_total\tclasses_seen\tclass_coverage\tanswer_fraction")
    for row in report.rows:
        click.echo(
            f"{row.package}\t{row.classes_total}\t{row.classes_seen}"
            f"\t{row.class_coverage:.4f}\t{row.answer_fraction:.4f}"
        )
    click.echo(f"# mean class coverage\t{report.mean_class_coverage:.4f}")


@stats.command("keyword-coverage")
@click.argument("corpus", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--queries", type=click.Path(exists=True, dir_okay=False), required=True,
    help="Query log, one query per line, optional YYYY-MM-DD<TAB> prefix.",
)
@click.option(
    "--filter", "filter_terms",
    default=",".join(sorted(corpusstats.DEFAULT_QUERY_FILTER)),
    show_default=True,
    help="Comma-separated terms a query must contain.",
)
@click.option("--stopwords", type=click.Path(exists=True, dir_okay=False), default=None)
@_handle_errors
def stats_keyword_coverage(corpus, queries, filter_terms, stopwords):
    """Coverage of query-log keywords by corpus title tokens."""
    log_entries = corpusstats.load_query_log(queries)
    terms = {t.strip() for t in filter_terms.split(",") if t.strip()}
    try:
        report = corpusstats.keyword_coverage(
            (doc.title for doc in _iter_documents(corpus)),
            log_entries,
            _load_stops(stopwords),
            filter_terms=terms,
        )
    except ValueError as exc:
        _fail(str(exc), EXIT_FORMAT)
        return
    click.echo(f"# filtered queries\t{report.filtered_query_count}")
    click.echo(f"# query keywords\t{report.query_keywords}")
    click.echo(f"# matched keywords\t{report.matched_keywords}")
    click.echo(f"# coverage\t{report.fraction:.4f}")
    for year, fraction in report.per_year.items():
        click.echo(f"# coverage[{year}]\t{fraction:.4f}")
    click.echo(f"# mean keywords per title\t{report.title_keyword_counts.mean:.4f}")
    click.echo("keywords_in_title\ttitles")
    for value in sorted(report.title_keyword_counts.histogram):
        click.echo(f"{value}\t{report.title_keyword_counts.histogram[value]}")


if __name__ == "__main__":
    main()
