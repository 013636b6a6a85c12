"""Versioned model-bundle persistence.

A bundle is one self-describing JSON document with top-level keys
format_version, created_at, schema, vocabulary, nb, gbdt, training_metrics
and checksum. The checksum is the SHA-256 of the canonical serialization
(sorted keys, no whitespace) of every other field, so corruption and
truncation are detected on load. Floats survive the round trip exactly:
serialization uses shortest-round-trip decimal forms.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from datetime import datetime, timezone

import numpy as np

from ..features.schema import FeatureSchema
from ..models.boosting import GbdtModel, Tree
from ..models.metrics import MetricsReport
from ..models.naive_bayes import NbModel
from ..text.vectorize import Vocabulary

FORMAT_VERSION = 1


class IoFailure(OSError):
    pass


class UnsupportedFormatVersion(ValueError):
    pass


class CorruptBundle(ValueError):
    pass


@dataclass(frozen=True)
class ModelBundle:
    format_version: int
    created_at: str
    schema: FeatureSchema | None
    vocabulary: Vocabulary | None
    nb_model: NbModel | None
    gbdt_model: GbdtModel | None
    training_metrics: dict[str, MetricsReport]

    def __post_init__(self):
        if self.nb_model is None and self.gbdt_model is None:
            raise ValueError("bundle must hold at least one model")
        if self.nb_model is not None and self.vocabulary is None:
            raise ValueError("nb model requires the vocabulary")
        if self.gbdt_model is not None and self.schema is None:
            raise ValueError("gbdt model requires the schema")

    def models_loaded(self) -> list[str]:
        loaded = []
        if self.nb_model is not None:
            loaded.append("nb")
        if self.gbdt_model is not None:
            loaded.append("gbdt")
        return loaded

    def version_id(self) -> str:
        return _checksum(_payload(self))[:12]


def make_bundle(schema=None, vocabulary=None, nb_model=None, gbdt_model=None,
                training_metrics=None, created_at=None) -> ModelBundle:
    return ModelBundle(
        format_version=FORMAT_VERSION,
        created_at=created_at or datetime.now(timezone.utc).isoformat(),
        schema=schema,
        vocabulary=vocabulary,
        nb_model=nb_model,
        gbdt_model=gbdt_model,
        training_metrics=dict(training_metrics or {}),
    )


def _schema_to_json(schema: FeatureSchema | None):
    if schema is None:
        return None
    return {"name": schema.name, "version": schema.version,
            "columns": [[name, group] for name, group in schema.columns]}


def _schema_from_json(data) -> FeatureSchema | None:
    if data is None:
        return None
    return FeatureSchema(name=data["name"], version=data["version"],
                         columns=tuple((c, g) for c, g in data["columns"]))


def _nb_to_json(model: NbModel | None):
    if model is None:
        return None
    return {
        "classes": list(model.classes),
        "log_priors": model.log_priors.tolist(),
        "log_likelihoods": model.log_likelihoods.tolist(),
        "alpha": model.alpha,
    }


def _nb_from_json(data, vocabulary: Vocabulary | None) -> NbModel | None:
    if data is None:
        return None
    if vocabulary is None:
        raise CorruptBundle("nb model present without vocabulary")
    return NbModel(
        classes=tuple(data["classes"]),
        log_priors=np.asarray(data["log_priors"], dtype=np.float64),
        log_likelihoods=np.asarray(data["log_likelihoods"], dtype=np.float64),
        vocabulary=vocabulary,
        alpha=float(data["alpha"]),
    )


def _gbdt_to_json(model: GbdtModel | None):
    if model is None:
        return None
    return {
        "base_score": model.base_score,
        "learning_rate": model.learning_rate,
        "trees": [
            {
                "feature": tree.feature,
                "threshold": tree.threshold,
                "left": tree.left,
                "right": tree.right,
                "default_left": tree.default_left,
                "value": tree.value,
            }
            for tree in model.trees
        ],
    }


def _gbdt_from_json(data, schema: FeatureSchema | None) -> GbdtModel | None:
    if data is None:
        return None
    if schema is None:
        raise CorruptBundle("gbdt model present without schema")
    trees = tuple(
        Tree(feature=list(t["feature"]), threshold=[float(x) for x in t["threshold"]],
             left=list(t["left"]), right=list(t["right"]),
             default_left=[bool(x) for x in t["default_left"]],
             value=[float(x) for x in t["value"]])
        for t in data["trees"]
    )
    return GbdtModel(schema=schema, base_score=float(data["base_score"]),
                     learning_rate=float(data["learning_rate"]), trees=trees)


def _metrics_to_json(metrics: dict[str, MetricsReport]):
    return {name: report.as_dict() for name, report in metrics.items()}


def _metrics_from_json(data) -> dict[str, MetricsReport]:
    out = {}
    for name, values in (data or {}).items():
        out[name] = MetricsReport(**values)
    return out


def _payload(bundle: ModelBundle) -> dict:
    return {
        "format_version": bundle.format_version,
        "created_at": bundle.created_at,
        "schema": _schema_to_json(bundle.schema),
        "vocabulary": ({"terms": list(bundle.vocabulary.terms)}
                       if bundle.vocabulary is not None else None),
        "nb": _nb_to_json(bundle.nb_model),
        "gbdt": _gbdt_to_json(bundle.gbdt_model),
        "training_metrics": _metrics_to_json(bundle.training_metrics),
    }


def _checksum(payload: dict) -> str:
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"),
                           allow_nan=False)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def save_model_bundle(bundle: ModelBundle, path) -> None:
    payload = _payload(bundle)
    document = dict(payload, checksum=_checksum(payload))
    try:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(document, fh, indent=1, allow_nan=False)
            fh.write("\n")
    except OSError as exc:
        raise IoFailure(f"cannot write bundle to {path}: {exc}") from exc


def load_model_bundle(path) -> ModelBundle:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise IoFailure(f"cannot read bundle from {path}: {exc}") from exc
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CorruptBundle(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(document, dict) or "format_version" not in document:
        raise CorruptBundle(f"{path}: missing format_version")
    version = document["format_version"]
    if not isinstance(version, int) or version > FORMAT_VERSION or version < 1:
        raise UnsupportedFormatVersion(
            f"{path}: format_version {version!r}, supported <= {FORMAT_VERSION}")
    stored_checksum = document.get("checksum")
    payload = {k: v for k, v in document.items() if k != "checksum"}
    if stored_checksum != _checksum(payload):
        raise CorruptBundle(f"{path}: checksum mismatch")
    try:
        schema = _schema_from_json(payload["schema"])
        vocabulary = (Vocabulary(tuple(payload["vocabulary"]["terms"]))
                      if payload["vocabulary"] is not None else None)
        nb_model = _nb_from_json(payload["nb"], vocabulary)
        gbdt_model = _gbdt_from_json(payload["gbdt"], schema)
        metrics = _metrics_from_json(payload.get("training_metrics"))
        return ModelBundle(
            format_version=version,
            created_at=payload["created_at"],
            schema=schema,
            vocabulary=vocabulary,
            nb_model=nb_model,
            gbdt_model=gbdt_model,
            training_metrics=metrics,
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, (CorruptBundle, UnsupportedFormatVersion)):
            raise
        raise CorruptBundle(f"{path}: malformed bundle ({exc})") from exc
