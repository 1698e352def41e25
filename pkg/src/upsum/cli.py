"""Batch front-end: summarize / evaluate / noise / sweep-nf.

Corpus layout on disk::

    data_root/
      topics/<topic_id>.txt          # id: / title: / narrative: lines
      clusters/<topic_id>/A/*.xml|txt
      clusters/<topic_id>/B/*.xml|txt
      refs/<topic_id>.<set>.<annotator>.txt   # reference summaries

Summaries land in ``output_dir/<topic>.<set>.txt`` next to a JSON run
manifest. Exit codes: 0 success, 1 partial failure (some topic failed),
2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import logging
import os
import random
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from datetime import date
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from . import assembly, kernels, preprocess, rouge
from .corpus import Cluster, Document, History, Topic, build_history, load_cluster, load_topic
from .errors import ConfigError, EmptyReferencesError, NoNoiseSourceError, UpsumError
from .ranking import RankingConfig, select_for_summary
from .similarity import TermVector

log = logging.getLogger(__name__)

SUMMARY_FILE = re.compile(r"^(?P<topic>.+)\.(?P<set>[AB])\.txt$")
REF_FILE = re.compile(r"^(?P<topic>.+)\.(?P<set>[AB])\.(?P<annotator>[^.]+)\.txt$")

DEFAULT_NOISE_FRACTIONS = (0.0, 0.17, 0.29, 0.5)
DEFAULT_SWEEP_GRID = tuple(round(i * 0.04, 10) for i in range(26))


@dataclass(frozen=True)
class RunConfig:
    """Run parameters; flags > config file > defaults."""

    data_root: Path
    output_dir: Path
    alpha: float = 0.7
    nf_override: float | None = None
    lambda_: float = 0.5
    budget: int = 100
    redundancy_threshold: float = 0.8
    scorer: str = "smmr"
    lcs_denominator: str = "min"
    stoplist: Path | None = None
    lexicon: Path | None = None
    temporal_rules: Path | None = None
    markers: Path | None = None
    refs: Path | None = None
    seed: int = 0
    jobs: int = 0

    def validate(self) -> None:
        try:
            self.ranking_config()
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        if self.scorer not in ("smmr", "mmr", "nr"):
            raise ConfigError(f"scorer must be smmr, mmr or nr, got {self.scorer!r}")
        if self.jobs < 0:
            raise ConfigError(f"jobs must be >= 0, got {self.jobs!r}")
        if not self.data_root.is_dir():
            raise ConfigError(f"data root {self.data_root} is not a directory")
        for name in ("stoplist", "lexicon", "temporal_rules", "markers"):
            path = getattr(self, name)
            if path is not None and not Path(path).is_file():
                raise ConfigError(f"{name} file {path} does not exist")

    def ranking_config(self) -> RankingConfig:
        return RankingConfig(
            alpha=self.alpha,
            lambda_=self.lambda_,
            nf=self.nf_override,
            word_budget=self.budget,
            redundancy_threshold=self.redundancy_threshold,
            lcs_denominator=self.lcs_denominator,
        )

    def refs_dir(self) -> Path:
        return self.refs if self.refs is not None else self.data_root / "refs"

    def echo(self) -> dict:
        out = {}
        for key, value in self.__dict__.items():
            out[key] = str(value) if isinstance(value, Path) else value
        return out


@dataclass
class Resources:
    stoplist: preprocess.Stoplist
    lexicon: preprocess.Lexicon
    temporal_rules: tuple[assembly.TemporalRule, ...]
    markers: tuple[str, ...]


def load_resources(cfg: RunConfig) -> Resources:
    return Resources(
        stoplist=(
            preprocess.Stoplist.from_file(cfg.stoplist)
            if cfg.stoplist
            else preprocess.default_stoplist()
        ),
        lexicon=(
            preprocess.Lexicon.from_file(cfg.lexicon)
            if cfg.lexicon
            else preprocess.default_lexicon()
        ),
        temporal_rules=(
            assembly.load_temporal_rules(cfg.temporal_rules)
            if cfg.temporal_rules
            else assembly.default_temporal_rules()
        ),
        markers=(
            assembly.load_markers(cfg.markers) if cfg.markers else assembly.default_markers()
        ),
    )


# ---------------------------------------------------------------------------
# corpus discovery and loading


@dataclass
class TopicData:
    topic: Topic
    clusters: dict[str, Cluster]
    errors: dict[str, str] = field(default_factory=dict)


def discover_topic_ids(data_root: Path) -> list[str]:
    topics_dir = data_root / "topics"
    if not topics_dir.is_dir():
        raise ConfigError(f"no topics directory under {data_root}")
    return sorted(p.stem for p in topics_dir.glob("*.txt"))


def load_corpus(cfg: RunConfig) -> dict[str, TopicData]:
    corpus: dict[str, TopicData] = {}
    for topic_id in discover_topic_ids(cfg.data_root):
        topic = load_topic(cfg.data_root / "topics" / f"{topic_id}.txt")
        data = TopicData(topic=topic, clusters={})
        for set_label in ("A", "B"):
            cluster_dir = cfg.data_root / "clusters" / topic_id / set_label
            if not cluster_dir.is_dir():
                data.errors[set_label] = f"missing cluster directory {cluster_dir}"
                continue
            try:
                data.clusters[set_label] = load_cluster(
                    cluster_dir, set_label, cluster_id=f"{topic_id}.{set_label}"
                )
            except UpsumError as exc:
                data.errors[set_label] = str(exc)
        corpus[topic_id] = data
    if not corpus:
        raise ConfigError(f"no topics found under {cfg.data_root}")
    return corpus


def load_references(refs_dir: Path) -> dict[tuple[str, str], list[str]]:
    refs: dict[tuple[str, str], list[str]] = {}
    if not refs_dir.is_dir():
        return refs
    for path in sorted(refs_dir.iterdir()):
        match = REF_FILE.match(path.name)
        if not match:
            continue
        key = (match.group("topic"), match.group("set"))
        refs.setdefault(key, []).append(path.read_text(encoding="utf-8"))
    return refs


# ---------------------------------------------------------------------------
# summarization core

_WORKER: dict | None = None  # set before forking worker processes


def summarize_topic_data(
    data: TopicData,
    resources: Resources,
    cfg: RunConfig,
    table: assembly.AcronymTable,
    nf_override: float | None = None,
    sets: Sequence[str] = ("A", "B"),
) -> tuple[dict[str, assembly.Summary], dict[str, str]]:
    """Produce the A summary and the B update summary for one topic.

    Set A is summarized against an empty history; set B against the history
    built from set A. Returns summaries plus per-set error strings.
    """
    rcfg = cfg.ranking_config()
    if nf_override is not None:
        rcfg = replace(rcfg, nf=nf_override)
    topic = preprocess.preprocess_topic(data.topic, resources.stoplist, resources.lexicon)
    summaries: dict[str, assembly.Summary] = {}
    errors = dict(data.errors)

    sentences_a = None
    cluster_a = data.clusters.get("A")
    if cluster_a is not None:
        sentences_a = preprocess.preprocess_cluster(
            cluster_a, resources.stoplist, resources.lexicon
        )

    for set_label in sets:
        if set_label in errors:
            continue
        cluster = data.clusters.get(set_label)
        if cluster is None:
            errors[set_label] = "cluster not loaded"
            continue
        try:
            if set_label == "A":
                sentences = sentences_a or []
                history = History((), 1)
            else:
                sentences = preprocess.preprocess_cluster(
                    cluster, resources.stoplist, resources.lexicon
                )
                if cluster_a is not None and sentences_a is not None:
                    history = build_history([cluster_a], {cluster_a.id: sentences_a})
                else:
                    history = History((), 1)
            selected = select_for_summary(sentences, topic, history, rcfg, cfg.scorer)
            summaries[set_label] = assembly.assemble(
                selected,
                cfg.budget,
                table,
                temporal_rules=resources.temporal_rules,
                markers=resources.markers,
                topic_id=topic.id,
                set_label=set_label,
            )
        except UpsumError as exc:
            errors[set_label] = str(exc)
    return summaries, errors


def _topic_worker(topic_id: str) -> tuple[str, dict[str, str], dict[str, str], float]:
    assert _WORKER is not None, "worker context not initialized"
    started = time.perf_counter()
    summaries, errors = summarize_topic_data(
        _WORKER["corpus"][topic_id],
        _WORKER["resources"],
        _WORKER["cfg"],
        _WORKER["table"],
    )
    texts = {label: s.final_text for label, s in summaries.items()}
    return topic_id, texts, errors, time.perf_counter() - started


def _run_topics(
    corpus: dict[str, TopicData],
    resources: Resources,
    cfg: RunConfig,
    table: assembly.AcronymTable,
) -> dict[str, tuple[dict[str, str], dict[str, str], float]]:
    """Summarize every topic, with a process pool when jobs > 1."""
    global _WORKER
    _WORKER = {"corpus": corpus, "resources": resources, "cfg": cfg, "table": table}
    jobs = cfg.jobs or os.cpu_count() or 1
    results: dict[str, tuple[dict[str, str], dict[str, str], float]] = {}
    try:
        if jobs > 1 and len(corpus) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for topic_id, texts, errors, took in pool.map(_topic_worker, sorted(corpus)):
                    results[topic_id] = (texts, errors, took)
        else:
            for topic_id in sorted(corpus):
                topic_id, texts, errors, took = _topic_worker(topic_id)
                results[topic_id] = (texts, errors, took)
    finally:
        _WORKER = None
    return results


def _write_summaries(
    results: Mapping[str, tuple[dict[str, str], dict[str, str], float]],
    out_dir: Path,
) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    for topic_id in sorted(results):
        texts, _, _ = results[topic_id]
        for set_label, text in sorted(texts.items()):
            (out_dir / f"{topic_id}.{set_label}.txt").write_text(
                text + "\n", encoding="utf-8"
            )


def _write_manifest(
    command: str,
    cfg: RunConfig,
    results: Mapping[str, tuple[dict[str, str], dict[str, str], float]],
    out_dir: Path,
    extra: dict | None = None,
) -> None:
    manifest = {
        "command": command,
        "config": cfg.echo(),
        "kernel_backend": kernels.BACKEND,
        "topics": [
            {
                "id": topic_id,
                "outputs": sorted(
                    f"{topic_id}.{label}.txt" for label in results[topic_id][0]
                ),
                "errors": results[topic_id][1],
            }
            for topic_id in sorted(results)
        ],
        "timings": {topic_id: round(results[topic_id][2], 6) for topic_id in sorted(results)},
    }
    if extra:
        manifest.update(extra)
    (out_dir / "manifest.json").write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )


def run_summarize(cfg: RunConfig) -> int:
    corpus = load_corpus(cfg)
    resources = load_resources(cfg)
    table = assembly.mine_acronyms(
        [c for data in corpus.values() for c in data.clusters.values()]
    )
    results = _run_topics(corpus, resources, cfg, table)
    _write_summaries(results, cfg.output_dir)
    _write_manifest("summarize", cfg, results, cfg.output_dir)
    failed = [tid for tid, (_, errors, _) in results.items() if errors]
    for tid in sorted(failed):
        log.warning("topic %s: %s", tid, results[tid][1])
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# evaluation


def _collect_candidates(summaries_dir: Path) -> dict[tuple[str, str], str]:
    candidates: dict[tuple[str, str], str] = {}
    if not summaries_dir.is_dir():
        raise ConfigError(f"summary directory {summaries_dir} does not exist")
    for path in sorted(summaries_dir.iterdir()):
        match = SUMMARY_FILE.match(path.name)
        if match:
            key = (match.group("topic"), match.group("set"))
            candidates[key] = path.read_text(encoding="utf-8")
    if not candidates:
        raise ConfigError(f"no summary files under {summaries_dir}")
    return candidates


def run_evaluate(cfg: RunConfig, summaries_dir: Path | None = None) -> int:
    target = summaries_dir if summaries_dir is not None else cfg.output_dir
    candidates = _collect_candidates(target)
    references = load_references(cfg.refs_dir())
    try:
        report = rouge.evaluate_run(candidates, references)
    except EmptyReferencesError as exc:
        print(f"evaluate: {exc}", file=sys.stderr)
        return 1
    (target / "rouge_report.csv").write_text(report.to_csv(), encoding="utf-8")
    (target / "rouge_report.txt").write_text(report.format_table() + "\n", encoding="utf-8")
    print(report.format_table())
    return 0


# ---------------------------------------------------------------------------
# noise experiment


def _noise_rng(seed: int, topic_id: str, set_label: str, fraction: float) -> random.Random:
    key = f"{seed}:{topic_id}:{set_label}:{fraction:.6f}".encode()
    return random.Random(int.from_bytes(hashlib.sha256(key).digest()[:8], "big"))


def _inject_noise(
    corpus: dict[str, TopicData],
    fraction: float,
    seed: int,
) -> dict[str, TopicData]:
    """Copy the corpus with seeded foreign documents added to each cluster."""
    if fraction == 0.0:
        return corpus
    if not 0.0 <= fraction < 1.0:
        raise ConfigError(f"noise fraction must be in [0, 1), got {fraction!r}")
    foreign: dict[str, list[Document]] = {
        topic_id: sorted(
            (
                doc
                for other_id, other in corpus.items()
                if other_id != topic_id
                for cluster in other.clusters.values()
                for doc in cluster.documents
            ),
            key=lambda d: (d.cluster_id, d.id),
        )
        for topic_id in corpus
    }
    noised: dict[str, TopicData] = {}
    for topic_id, data in corpus.items():
        clusters: dict[str, Cluster] = {}
        for set_label, cluster in data.clusters.items():
            pool = foreign[topic_id]
            count = round(fraction / (1.0 - fraction) * len(cluster.documents))
            count = min(count, len(pool))
            rng = _noise_rng(seed, topic_id, set_label, fraction)
            injected = [
                replace(doc, id=f"noise.{doc.id}", cluster_id=cluster.id)
                for doc in rng.sample(pool, count)
            ]
            documents = tuple(
                sorted(cluster.documents + tuple(injected), key=lambda d: (d.timestamp, d.id))
            )
            clusters[set_label] = Cluster(cluster.id, set_label, documents)
        noised[topic_id] = TopicData(topic=data.topic, clusters=clusters, errors=dict(data.errors))
    return noised


def _fraction_label(fraction: float) -> str:
    return f"{fraction:g}".replace(".", "_")


def run_noise(cfg: RunConfig, fractions: Sequence[float]) -> int:
    corpus = load_corpus(cfg)
    if len(corpus) < 2:
        raise NoNoiseSourceError("noise injection needs at least two topics")
    resources = load_resources(cfg)
    references = load_references(cfg.refs_dir())
    rows = []
    status = 0
    for fraction in fractions:
        noised = _inject_noise(corpus, fraction, cfg.seed)
        table = assembly.mine_acronyms(
            [c for data in noised.values() for c in data.clusters.values()]
        )
        out_dir = cfg.output_dir / f"noise_{_fraction_label(fraction)}"
        results = _run_topics(noised, resources, cfg, table)
        _write_summaries(results, out_dir)
        _write_manifest("noise", cfg, results, out_dir, extra={"noise_fraction": fraction})
        if any(errors for _, errors, _ in results.values()):
            status = 1
        row: dict[str, object] = {
            "fraction": fraction,
            "documents_added": sum(
                len(c.documents) for d in noised.values() for c in d.clusters.values()
            )
            - sum(len(c.documents) for d in corpus.values() for c in d.clusters.values()),
        }
        if references:
            candidates = {
                (tid, label): text
                for tid, (texts, _, _) in results.items()
                for label, text in texts.items()
            }
            try:
                report = rouge.evaluate_run(candidates, references)
                row.update(
                    rouge1=report.rouge1, rouge2=report.rouge2, rouge_su4=report.rouge_su4
                )
            except EmptyReferencesError:
                pass
        rows.append(row)
    _write_score_table(cfg.output_dir / "noise_report.csv", "fraction", rows)
    for row in rows:
        print(_format_score_row("fraction", row))
    return status


# ---------------------------------------------------------------------------
# novelty-factor sweep


def run_sweep_nf(cfg: RunConfig, grid: Sequence[float]) -> int:
    if not grid:
        raise ConfigError("sweep-nf needs a non-empty grid")
    for value in grid:
        if value < 0.0:
            raise ConfigError(f"novelty factor must be >= 0, got {value!r}")
    corpus = load_corpus(cfg)
    resources = load_resources(cfg)
    references = load_references(cfg.refs_dir())
    table = assembly.mine_acronyms(
        [c for data in corpus.values() for c in data.clusters.values()]
    )
    rows = []
    status = 0
    for value in grid:
        out_dir = cfg.output_dir / "sweep_nf" / _fraction_label(value)
        out_dir.mkdir(parents=True, exist_ok=True)
        candidates: dict[tuple[str, str], str] = {}
        for topic_id in sorted(corpus):
            summaries, errors = summarize_topic_data(
                corpus[topic_id], resources, cfg, table, nf_override=value, sets=("B",)
            )
            if errors.get("B"):
                status = 1
                continue
            if "B" in summaries:
                text = summaries["B"].final_text
                candidates[(topic_id, "B")] = text
                (out_dir / f"{topic_id}.B.txt").write_text(text + "\n", encoding="utf-8")
        row: dict[str, object] = {"nf": value, "topics": len(candidates)}
        if references and candidates:
            try:
                report = rouge.evaluate_run(candidates, references)
                row.update(
                    rouge1=report.rouge1, rouge2=report.rouge2, rouge_su4=report.rouge_su4
                )
            except EmptyReferencesError:
                pass
        rows.append(row)
    _write_score_table(cfg.output_dir / "sweep_nf.csv", "nf", rows)
    for row in rows:
        print(_format_score_row("nf", row))
    return status


# ---------------------------------------------------------------------------
# report helpers


_SCORE_FIELDS = ("rouge1", "rouge2", "rouge_su4")


def _write_score_table(path: Path, key: str, rows: Sequence[Mapping[str, object]]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    extras = sorted({k for row in rows for k in row} - {key, *_SCORE_FIELDS})
    header = [key, *extras, *_SCORE_FIELDS]
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        record = []
        for column in header:
            value = row.get(column, "")
            if isinstance(value, float) and column in _SCORE_FIELDS:
                value = f"{value:.6f}"
            record.append(value)
        writer.writerow(record)
    path.write_text(out.getvalue(), encoding="utf-8")


def _format_score_row(key: str, row: Mapping[str, object]) -> str:
    parts = [f"{key}={row[key]}"]
    for metric in _SCORE_FIELDS:
        if metric in row:
            parts.append(f"{metric}={row[metric]:.5f}")
    return "  ".join(parts)


# ---------------------------------------------------------------------------
# argument parsing


def _parse_floats(text: str) -> list[float]:
    """Parse '0,0.17,0.5' or 'start:stop:step' into a float list."""
    text = text.strip()
    if ":" in text:
        start, stop, step = (float(p) for p in text.split(":"))
        if step <= 0:
            raise argparse.ArgumentTypeError("step must be positive")
        count = int(round((stop - start) / step)) + 1
        return [round(start + i * step, 10) for i in range(max(count, 0))]
    return [float(p) for p in text.split(",") if p.strip()]


def _load_config_file(path: Path) -> dict[str, str]:
    values = {}
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
        values[key.strip().lower().replace("-", "_")] = value.strip()
    return values


_CONFIG_TYPES = {
    "data_root": Path,
    "output_dir": Path,
    "alpha": float,
    "nf": float,
    "lambda": float,
    "budget": int,
    "redundancy_threshold": float,
    "scorer": str,
    "lcs_denominator": str,
    "stoplist": Path,
    "lexicon": Path,
    "temporal_rules": Path,
    "markers": Path,
    "refs": Path,
    "seed": int,
    "jobs": int,
}

_CONFIG_FIELDS = {
    "data_root": "data_root",
    "output_dir": "output_dir",
    "alpha": "alpha",
    "nf": "nf_override",
    "lambda": "lambda_",
    "budget": "budget",
    "redundancy_threshold": "redundancy_threshold",
    "scorer": "scorer",
    "lcs_denominator": "lcs_denominator",
    "stoplist": "stoplist",
    "lexicon": "lexicon",
    "temporal_rules": "temporal_rules",
    "markers": "markers",
    "refs": "refs",
    "seed": "seed",
    "jobs": "jobs",
}


def make_run_config(args: argparse.Namespace) -> RunConfig:
    """Merge defaults, config file values and command-line flags."""
    values: dict[str, object] = {}
    if args.config:
        raw = _load_config_file(Path(args.config))
        for key, text in raw.items():
            if key not in _CONFIG_TYPES:
                raise ConfigError(f"unknown config key {key!r}")
            try:
                values[_CONFIG_FIELDS[key]] = _CONFIG_TYPES[key](text)
            except ValueError as exc:
                raise ConfigError(f"config key {key!r}: {exc}") from exc
    for key, field_name in _CONFIG_FIELDS.items():
        flag = "nf" if key == "nf" else key
        arg = getattr(args, flag.replace("-", "_"), None)
        if arg is not None:
            values[field_name] = Path(arg) if _CONFIG_TYPES[key] is Path else arg
    if "data_root" not in values or "output_dir" not in values:
        raise ConfigError("--data-root and --output are required (flag or config file)")
    cfg = RunConfig(**values)  # type: ignore[arg-type]
    cfg.validate()
    return cfg


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="flat key = value configuration file")
    parser.add_argument("--data-root", dest="data_root", help="corpus root directory")
    parser.add_argument("--output", dest="output_dir", help="output directory")
    parser.add_argument("--alpha", type=float, help="relevance interpolation (default 0.7)")
    parser.add_argument(
        "--nf", type=float, help="novelty factor override (default: 1/c from the history)"
    )
    parser.add_argument(
        "--lambda", type=float, dest="lambda_", help="MMR/NR interpolation (default 0.5)"
    )
    parser.add_argument("--budget", type=int, help="summary word budget (default 100)")
    parser.add_argument(
        "--redundancy-threshold",
        type=float,
        dest="redundancy_threshold",
        help="within-summary similarity threshold (default 0.8)",
    )
    parser.add_argument(
        "--scorer", choices=("smmr", "mmr", "nr"), help="sentence scorer (default smmr)"
    )
    parser.add_argument(
        "--lcs-denominator",
        dest="lcs_denominator",
        choices=("min", "max", "mean"),
        help="normalization of the common-substring measure (default min)",
    )
    parser.add_argument("--stoplist", help="stopword file (default: packaged)")
    parser.add_argument("--lexicon", help="word-root TSV (default: packaged)")
    parser.add_argument(
        "--temporal-rules", dest="temporal_rules", help="temporal rule TSV (default: packaged)"
    )
    parser.add_argument("--markers", help="discursive marker list (default: packaged)")
    parser.add_argument("--refs", help="reference summary directory (default: data_root/refs)")
    parser.add_argument("--seed", type=int, help="noise sampling seed (default 0)")
    parser.add_argument("--jobs", type=int, help="worker processes (default: cpu count)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="upsum",
        description="Query-oriented multi-document update summarizer.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sum = sub.add_parser("summarize", help="summarize every topic (set A, then set B)")
    _add_common_flags(p_sum)

    p_eval = sub.add_parser("evaluate", help="score produced summaries against references")
    _add_common_flags(p_eval)

    p_noise = sub.add_parser("noise", help="noise-injection robustness experiment")
    _add_common_flags(p_noise)
    p_noise.add_argument(
        "--fractions",
        type=_parse_floats,
        default=list(DEFAULT_NOISE_FRACTIONS),
        help="comma list of noise fractions (default 0,0.17,0.29,0.5)",
    )

    p_sweep = sub.add_parser("sweep-nf", help="novelty-factor sweep over set-B summaries")
    _add_common_flags(p_sweep)
    p_sweep.add_argument(
        "--grid",
        type=_parse_floats,
        default=list(DEFAULT_SWEEP_GRID),
        help="comma list or start:stop:step (default 0:1:0.04)",
    )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = make_run_config(args)
        if args.command == "summarize":
            return run_summarize(cfg)
        if args.command == "evaluate":
            return run_evaluate(cfg)
        if args.command == "noise":
            return run_noise(cfg, args.fractions)
        if args.command == "sweep-nf":
            return run_sweep_nf(cfg, args.grid)
        parser.error(f"unknown command {args.command!r}")
    except (ConfigError, NoNoiseSourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
