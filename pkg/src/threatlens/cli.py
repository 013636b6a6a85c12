"""Operator command line: train, evaluate, classify, serve.

Exit codes: 0 success, 2 ingestion/input errors, 3 training/model errors,
4 listen port busy, 64 conflicting classify flags. With --json, standard
output carries exactly one JSON document; everything else goes to stderr.
"""

from __future__ import annotations

import json
import os
import socket
import sys

import click

from .features.schema import SchemaMismatch, check_same_schema
from .models.boosting import GbdtConfig, InvalidConfig, train_gbdt
from .models.datasets import DatasetFormatError, load_phishing_csv, load_spam_csv
from .models.errors import SingleClassDataset
from .models.metrics import DegenerateLabels, MetricsReport, evaluate
from .models.naive_bayes import (
    NonPositiveAlpha,
    nb_positive_probability,
    nb_predict,
    train_multinomial_nb,
)
from .models.split import EmptyDataset, split_dataset
from .text.vectorize import EmptyVocabulary, build_vocabulary, vectorize
from .text.tokenizer import preprocess
from .service.app import (
    ApiError,
    AppState,
    ClassifyTextRequest,
    ClassifyUrlRequest,
    _classify_text,
    _classify_url,
    create_app,
)
from .service.bundle import (
    CorruptBundle,
    IoFailure,
    UnsupportedFormatVersion,
    load_model_bundle,
    make_bundle,
    save_model_bundle,
)
from .service.config import load_config

EXIT_INGESTION = 2
EXIT_TRAINING = 3
EXIT_PORT_BUSY = 4
EXIT_USAGE = 64

INGESTION_ERRORS = (DatasetFormatError, EmptyDataset, IoFailure, OSError)
TRAINING_ERRORS = (SingleClassDataset, NonPositiveAlpha, InvalidConfig,
                   EmptyVocabulary, SchemaMismatch, DegenerateLabels,
                   CorruptBundle, UnsupportedFormatVersion, ValueError)


def _err(message: str) -> None:
    click.echo(message, err=True)


def _info(ctx, message: str) -> None:
    # In --json mode stdout is reserved for the one JSON document.
    click.echo(message, err=ctx.obj["json"])


def _print_metrics(ctx, task: str, seed: int, report: MetricsReport) -> None:
    _info(ctx, f"task: {task}   seed: {seed}")
    _info(ctx, f"{'metric':<12}{'score':>10}")
    for name in ("accuracy", "precision", "recall", "f1", "roc_auc"):
        _info(ctx, f"{name:<12}{getattr(report, name):>10.4f}")
    _info(ctx, f"confusion: tp={report.tp} fp={report.fp} "
               f"tn={report.tn} fn={report.fn}")


def _emit_json(ctx, document: dict) -> None:
    if ctx.obj["json"]:
        click.echo(json.dumps(document))


@click.group()
@click.option("--json", "json_mode", is_flag=True,
              help="Emit one JSON document on stdout.")
@click.option("--seed", type=int, default=42, show_default=True,
              help="Seed for the deterministic dataset shuffle.")
@click.option("--config", "config_path", type=click.Path(), default=None,
              help="Service config file (YAML).")
@click.pass_context
def main(ctx, json_mode, seed, config_path):
    """Threat-analysis engine: train models, reproduce metric tables,
    classify ad hoc inputs, and run the JSON service."""
    ctx.ensure_object(dict)
    ctx.obj["json"] = json_mode
    ctx.obj["seed"] = seed
    ctx.obj["config_path"] = config_path


def _train_spam(dataset_path, seed, alpha, min_count, train_fraction):
    data = load_spam_csv(dataset_path)
    train_rows, test_rows = split_dataset(list(data.rows), train_fraction, seed)
    train_tokens = [(preprocess(text), label) for text, label in train_rows]
    vocab = build_vocabulary([tokens for tokens, _ in train_tokens],
                             min_count=min_count)
    train_vectors = [(vectorize(tokens, vocab), label)
                     for tokens, label in train_tokens]
    model = train_multinomial_nb(train_vectors, vocab, alpha=alpha)
    scores, predictions, labels = [], [], []
    for text, label in test_rows:
        vector = vectorize(preprocess(text), vocab)
        predictions.append(nb_predict(model, vector)[0])
        scores.append(nb_positive_probability(model, vector, "spam"))
        labels.append(label)
    report = evaluate(scores, predictions, labels, positive_class="spam")
    return model, vocab, report


def _train_url(dataset_path, seed, config, train_fraction):
    data = load_phishing_csv(dataset_path)
    indices = list(range(len(data.labels)))
    train_idx, test_idx = split_dataset(indices, train_fraction, seed)
    y = [int(label == "phishing") for label in data.labels]
    X_train = data.X[train_idx]
    y_train = [y[i] for i in train_idx]
    model = train_gbdt(X_train, y_train, data.schema, config)
    from .models.boosting import gbdt_predict_batch
    probs = gbdt_predict_batch(model, data.X[test_idx])
    predictions = ["phishing" if p >= 0.5 else "legitimate" for p in probs]
    labels = [data.labels[i] for i in test_idx]
    report = evaluate(list(probs), predictions, labels, positive_class="phishing")
    return model, data.schema, report


def _merge_bundle(output, task, nb=None, vocab=None, gbdt=None, schema=None,
                  report=None):
    existing = None
    if os.path.exists(output):
        try:
            existing = load_model_bundle(output)
        except (IoFailure, CorruptBundle, UnsupportedFormatVersion):
            existing = None
    metrics = dict(existing.training_metrics) if existing else {}
    if task == "spam":
        metrics["nb"] = report
        gbdt = existing.gbdt_model if existing else None
        schema = existing.schema if existing else None
    else:
        metrics["gbdt"] = report
        nb = existing.nb_model if existing else None
        vocab = existing.vocabulary if existing else None
    return make_bundle(schema=schema, vocabulary=vocab, nb_model=nb,
                       gbdt_model=gbdt, training_metrics=metrics)


@main.command()
@click.option("--task", type=click.Choice(["url", "spam"]), required=True)
@click.option("--dataset", "dataset_path", type=click.Path(), required=True)
@click.option("--output", "output_path", type=click.Path(), required=True,
              help="Bundle file to write (merged when it already exists).")
@click.option("--train-fraction", type=float, default=0.8, show_default=True)
@click.option("--alpha", type=float, default=1.0, show_default=True,
              help="Laplace smoothing (spam task).")
@click.option("--min-count", type=int, default=1, show_default=True,
              help="Vocabulary threshold (spam task).")
@click.option("--n-trees", type=int, default=100, show_default=True)
@click.option("--learning-rate", type=float, default=0.1, show_default=True)
@click.option("--max-leaves", type=int, default=31, show_default=True)
@click.option("--min-samples-leaf", type=int, default=20, show_default=True)
@click.option("--l2-lambda", type=float, default=1.0, show_default=True)
@click.pass_context
def train(ctx, task, dataset_path, output_path, train_fraction, alpha,
          min_count, n_trees, learning_rate, max_leaves, min_samples_leaf,
          l2_lambda):
    """Train on the 80% split, evaluate on the held-out 20%, write the
    bundle, and print the metric table."""
    seed = ctx.obj["seed"]
    if not os.path.exists(dataset_path):
        _err(f"dataset not found: {dataset_path}")
        sys.exit(EXIT_INGESTION)
    try:
        if task == "spam":
            model, vocab, report = _train_spam(dataset_path, seed, alpha,
                                               min_count, train_fraction)
            bundle = _merge_bundle(output_path, task, nb=model, vocab=vocab,
                                   report=report)
        else:
            config = GbdtConfig(n_trees=n_trees, learning_rate=learning_rate,
                                max_leaves=max_leaves,
                                min_samples_leaf=min_samples_leaf,
                                l2_lambda=l2_lambda, seed=seed)
            model, schema, report = _train_url(dataset_path, seed, config,
                                               train_fraction)
            bundle = _merge_bundle(output_path, task, gbdt=model,
                                   schema=schema, report=report)
        save_model_bundle(bundle, output_path)
    except INGESTION_ERRORS as exc:
        _err(f"ingestion error: {exc}")
        sys.exit(EXIT_INGESTION)
    except TRAINING_ERRORS as exc:
        _err(f"training error: {exc}")
        sys.exit(EXIT_TRAINING)
    _print_metrics(ctx, task, seed, report)
    _info(ctx, f"bundle written to {output_path}")
    _emit_json(ctx, {"task": task, "seed": seed, "bundle": str(output_path),
                     "metrics": report.as_dict()})


@main.command("evaluate")
@click.option("--task", type=click.Choice(["url", "spam"]), required=True)
@click.option("--bundle", "bundle_path", type=click.Path(), required=True)
@click.option("--dataset", "dataset_path", type=click.Path(), required=True)
@click.option("--train-fraction", type=float, default=0.8, show_default=True)
@click.pass_context
def evaluate_cmd(ctx, task, bundle_path, dataset_path, train_fraction):
    """Re-run the deterministic split and print held-out metrics for an
    already-trained bundle, without retraining."""
    seed = ctx.obj["seed"]
    for path in (bundle_path, dataset_path):
        if not os.path.exists(path):
            _err(f"file not found: {path}")
            sys.exit(EXIT_INGESTION)
    try:
        bundle = load_model_bundle(bundle_path)
        if task == "spam":
            if bundle.nb_model is None:
                raise ValueError("bundle holds no text model")
            data = load_spam_csv(dataset_path)
            _, test_rows = split_dataset(list(data.rows), train_fraction, seed)
            scores, predictions, labels = [], [], []
            for text, label in test_rows:
                vector = vectorize(preprocess(text), bundle.vocabulary)
                predictions.append(nb_predict(bundle.nb_model, vector)[0])
                scores.append(nb_positive_probability(bundle.nb_model, vector,
                                                      "spam"))
                labels.append(label)
            report = evaluate(scores, predictions, labels, positive_class="spam")
        else:
            if bundle.gbdt_model is None:
                raise ValueError("bundle holds no URL model")
            data = load_phishing_csv(dataset_path)
            check_same_schema(bundle.schema, data.schema)
            indices = list(range(len(data.labels)))
            _, test_idx = split_dataset(indices, train_fraction, seed)
            from .models.boosting import gbdt_predict_batch
            probs = gbdt_predict_batch(bundle.gbdt_model, data.X[test_idx])
            predictions = ["phishing" if p >= 0.5 else "legitimate"
                           for p in probs]
            labels = [data.labels[i] for i in test_idx]
            report = evaluate(list(probs), predictions, labels,
                              positive_class="phishing")
    except INGESTION_ERRORS as exc:
        _err(f"ingestion error: {exc}")
        sys.exit(EXIT_INGESTION)
    except TRAINING_ERRORS as exc:
        _err(f"evaluation error: {exc}")
        sys.exit(EXIT_TRAINING)
    _print_metrics(ctx, task, seed, report)
    _emit_json(ctx, {"task": task, "seed": seed, "metrics": report.as_dict()})


@main.command()
@click.option("--bundle", "bundle_path", type=click.Path(), required=True)
@click.option("--url", "url_input", default=None)
@click.option("--text", "text_input", default=None)
@click.pass_context
def classify(ctx, bundle_path, url_input, text_input):
    """Classify one URL or one text; prints a single-line JSON verdict in
    the same shape as the service response."""
    if (url_input is None) == (text_input is None):
        _err("exactly one of --url or --text is required")
        sys.exit(EXIT_USAGE)
    if not os.path.exists(bundle_path):
        _err(f"bundle not found: {bundle_path}")
        sys.exit(EXIT_INGESTION)
    try:
        bundle = load_model_bundle(bundle_path)
        state = AppState(load_config(ctx.obj["config_path"]), bundle)
        if url_input is not None:
            verdict = _classify_url(state, ClassifyUrlRequest(url=url_input))
        else:
            verdict = _classify_text(state, ClassifyTextRequest(text=text_input))
    except ApiError as exc:
        _err(exc.message)
        sys.exit(EXIT_INGESTION)
    except (IoFailure, CorruptBundle, UnsupportedFormatVersion) as exc:
        _err(f"bundle error: {exc}")
        sys.exit(EXIT_INGESTION)
    click.echo(json.dumps(verdict))


@main.command()
@click.option("--bundle", "bundle_path", type=click.Path(), required=True)
@click.option("--port", type=int, default=None,
              help="Listen port override (also THREATLENS_PORT).")
@click.pass_context
def serve(ctx, bundle_path, port):
    """Load the bundle and serve the JSON API until interrupted."""
    import uvicorn

    try:
        config = load_config(ctx.obj["config_path"])
        bundle = load_model_bundle(bundle_path)
    except (IoFailure, CorruptBundle, UnsupportedFormatVersion, OSError) as exc:
        _err(f"cannot start: {exc}")
        sys.exit(EXIT_INGESTION)
    listen_port = port if port is not None else config.port
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((config.host, listen_port))
    except OSError:
        _err(f"port {listen_port} is busy")
        sys.exit(EXIT_PORT_BUSY)
    finally:
        probe.close()
    app = create_app(AppState(config, bundle))
    _info(ctx, f"serving on http://{config.host}:{listen_port}")
    uvicorn.run(app, host=config.host, port=listen_port, log_level="warning")
    sys.exit(0)


if __name__ == "__main__":
    main()
