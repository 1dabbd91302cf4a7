"""Command line: analyze, build-dict, import, evaluate, serve, export."""

import functools
import json
from pathlib import Path

import click

from ..datasets import load_dataset, load_profiles
from ..dictionary import (CANDIDATE_THRESHOLD, WikiCrawler,
                          build_dictionary, ingest_corpus, save_ranking)
from ..errors import ReqlintError
from ..evaluation import evaluate
from ..scoring.alpha import POLICIES, AlphaProfile, default_alpha_config
from ..smells.lexicon import default_lexicon, save_lexicon
from .api import DATA_DIR_ENV, create_app
from .service import Workbench, analysis_document

_CONFIG = default_alpha_config()

data_dir_option = click.option(
    "--data-dir", envvar=DATA_DIR_ENV, default="reqlint_data",
    show_default=True, help="workbench store directory "
    f"(env {DATA_DIR_ENV})")


def friendly_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ReqlintError as err:
            raise click.ClickException(str(err)) from err
    return wrapper


def profile_options(fn):
    decorators = [
        click.option("--domains", default="CS", show_default=True,
                     help="'+'-separated domain codes"),
        click.option("--criticality", default="non_critical",
                     show_default=True,
                     type=click.Choice(sorted(_CONFIG.criticality))),
        click.option("--req-type", "requirement_type",
                     default="functional", show_default=True,
                     type=click.Choice(sorted(_CONFIG.requirement_type))),
        click.option("--template", default="single_sentence",
                     show_default=True,
                     type=click.Choice(sorted(_CONFIG.template))),
    ]
    for decorator in reversed(decorators):
        fn = decorator(fn)
    return fn


def _profile(domains, criticality, requirement_type, template):
    return AlphaProfile(
        domains=tuple(d.strip() for d in domains.split("+") if d.strip()),
        criticality=criticality,
        requirement_type=requirement_type,
        template=template,
    )


def _project_by_name(bench: Workbench, name: str):
    matches = [p for p in bench.list_projects() if p["name"] == name]
    if not matches:
        raise click.ClickException(f"no project named {name!r}")
    if len(matches) > 1:
        ids = ", ".join(p["id"] for p in matches)
        raise click.ClickException(
            f"project name {name!r} is ambiguous (ids: {ids})")
    return matches[0]


@click.group()
def main():
    """Requirements quality workbench."""


@main.command()
@click.argument("source", type=click.File("r"), default="-")
@profile_options
@click.option("--format", "fmt", type=click.Choice(["table", "json"]),
              default="table", show_default=True)
@friendly_errors
def analyze(source, domains, criticality, requirement_type, template,
            fmt):
    """Analyze requirement text from FILE (default: stdin)."""
    text = source.read().strip()
    if not text:
        raise click.ClickException("no text to analyze")
    profile = _profile(domains, criticality, requirement_type, template)
    alphas = {policy: profile.alpha(policy) for policy in POLICIES}
    document = analysis_document(text, alphas, default_lexicon())
    if fmt == "json":
        document["text"] = text
        click.echo(json.dumps(document, indent=2))
        return
    if document["findings"]:
        click.echo("findings")
        for f in document["findings"]:
            click.echo(f"  {f['start']:>4}-{f['end']:<4} "
                       f"{f['column']:<22} {f['matched_text']}")
    else:
        click.echo("findings: none")
    click.echo(f"words {document['n_words']}  "
               f"sentences {document['n_sentences']}  "
               f"smelly {document['n_smelly_words']}  "
               f"smell types {document['n_smell_types']}")
    click.echo(f"clarity {document['clarity']:.4f}")
    alpha = document["alpha"]
    testability = document["testability"]
    click.echo(f"alpha       softened {alpha['softened']:.4f}  "
               f"hardened {alpha['hardened']:.4f}")
    click.echo(f"testability softened {testability['softened']:.4f}  "
               f"hardened {testability['hardened']:.4f}")


@main.command("build-dict")
@click.argument("corpus_dir",
                type=click.Path(file_okay=False, path_type=Path))
@click.option("--reference", default="CS", show_default=True,
              help="reference domain directory name")
@click.option("--n", "top_n", default=1000, show_default=True,
              help="how many frequent reference words to rank")
@click.option("--dim", default=50, show_default=True)
@click.option("--window", default=10, show_default=True)
@click.option("--min-count", default=5, show_default=True)
@click.option("--epochs", default=5, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--threshold", default=CANDIDATE_THRESHOLD,
              show_default=True, help="candidate mean-similarity cutoff")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path),
              default=Path("ranking.csv"), show_default=True)
@click.option("--lexicon-out",
              type=click.Path(dir_okay=False, path_type=Path),
              default=None, help="also write candidates as a "
              "label-ready lexicon CSV")
@click.option("--crawl", multiple=True, metavar="DOMAIN=CATEGORY",
              help="fetch a wiki category into corpus_dir/DOMAIN first")
@click.option("--api-url",
              default="https://en.wikipedia.org/w/api.php",
              show_default=True)
@click.option("--sub-cats", default=500, show_default=True,
              help="categories to expand per crawl")
@click.option("--pages", default=20, show_default=True,
              help="longest pages kept per category")
@friendly_errors
def build_dict(corpus_dir, reference, top_n, dim, window, min_count,
               epochs, seed, threshold, out, lexicon_out, crawl,
               api_url, sub_cats, pages):
    """Rank cross-domain word stability over CORPUS_DIR."""
    if crawl:
        crawler = WikiCrawler(api_url)
        for spec in crawl:
            if "=" not in spec:
                raise click.ClickException(
                    f"--crawl expects DOMAIN=CATEGORY, got {spec!r}")
            domain, category = spec.split("=", 1)
            click.echo(f"crawling {category} into {domain}/ ...")
            docs = crawler.crawl_domain(category, corpus_dir / domain,
                                        sub_cats=sub_cats, pages=pages)
            click.echo(f"  {len(docs)} documents cached")
    corpora = ingest_corpus(corpus_dir)
    click.echo(f"domains: {', '.join(sorted(corpora))}")
    ranked = build_dictionary(corpora, reference=reference, top_n=top_n,
                              threshold=threshold, dim=dim,
                              window=window, min_count=min_count,
                              epochs=epochs, seed=seed)
    save_ranking(ranked, out)
    candidates = ranked.candidates()
    click.echo(f"ranked {len(ranked)} words; {len(candidates)} "
               f"candidates below {threshold}")
    click.echo(f"ranking written to {out}")
    if lexicon_out is not None:
        save_lexicon(ranked.to_lexicon(), lexicon_out)
        click.echo(f"candidate lexicon written to {lexicon_out}")


@main.command("import")
@click.argument("project_name")
@click.argument("csv_file",
                type=click.Path(exists=True, dir_okay=False,
                                path_type=Path))
@data_dir_option
@profile_options
@friendly_errors
def import_cmd(project_name, csv_file, data_dir, domains, criticality,
               requirement_type, template):
    """Import a labeled dataset CSV into PROJECT_NAME.

    The project is created with the given profile options when it does
    not exist yet.
    """
    bench = Workbench(data_dir)
    matches = [p for p in bench.list_projects()
               if p["name"] == project_name]
    if matches:
        project = matches[0]
    else:
        profile = _profile(domains, criticality, requirement_type,
                           template)
        project = bench.create_project(project_name, profile)
        click.echo(f"created project {project_name} ({project['id']})")
    result = bench.import_dataset(project["id"],
                                  csv_file.read_text(encoding="utf-8"))
    click.echo(f"added {len(result['added'])}, "
               f"skipped {result['skipped']} duplicates")
    for error in result["errors"]:
        click.echo(f"warning: {error}", err=True)


@main.command("evaluate")
@click.option("--dataset", type=click.Path(exists=True, dir_okay=False),
              default=None,
              help="labeled CSV (bundled corpus if omitted)")
@click.option("--profiles", "profiles_path",
              type=click.Path(exists=True, dir_okay=False), default=None,
              help="project profile CSV (bundled set if omitted)")
@click.option("--format", "fmt", type=click.Choice(["table", "json"]),
              default="table", show_default=True)
@click.option("--permutations", default=2000, show_default=True)
@click.option("--seed", default=0, show_default=True)
@friendly_errors
def evaluate_cmd(dataset, profiles_path, fmt, permutations, seed):
    """Score the detector against an annotated dataset."""
    records = load_dataset(dataset)
    profiles = load_profiles(profiles_path)
    report = evaluate(records, profiles, permutations=permutations,
                      seed=seed)
    if fmt == "json":
        click.echo(json.dumps(report.to_json(), indent=2))
    else:
        click.echo(report.render())


@main.command()
@click.argument("project_name")
@data_dir_option
@click.option("-o", "--out", type=click.File("w"), default="-",
              help="output file (default: stdout)")
@friendly_errors
def export(project_name, data_dir, out):
    """Write a project's requirements and labels as dataset CSV."""
    bench = Workbench(data_dir)
    project = _project_by_name(bench, project_name)
    out.write(bench.export_dataset(project["id"]))


@main.command()
@click.option("--port", default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@data_dir_option
def serve(port, host, data_dir):
    """Run the HTTP API (and the web UI when built)."""
    import uvicorn

    uvicorn.run(create_app(data_dir=data_dir), host=host, port=port)
