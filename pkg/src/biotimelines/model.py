"""Linear max-margin relevance classifier.

Trained by deterministic epoch-wise subgradient descent on the
L2-regularized hinge loss with step size 1/(lambda*t); the visit order is
reshuffled each epoch by a generator seeded once from the fixed seed, so
identical inputs and seed give a bit-identical model. The bias is
unregularized. Relevant iff score > 0; ties are non-relevant.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

import numpy as np

from .errors import DegenerateTrainingSet, SchemaMismatch
from .features import FeatureSchema, featurize_all
from .kg import TemporalKG
from .supervision import LabeledRelation

MODEL_FIELDS = ["source", "lambda", "epochs", "seed", "bias", "weights", "schema_hash"]


@dataclass(frozen=True)
class Hyperparams:
    lambda_: float = 1e-3
    epochs: int = 50
    seed: int = 42

    def __post_init__(self):
        if self.lambda_ <= 0:
            raise ValueError("lambda must be positive")
        if self.epochs < 1:
            raise ValueError("epochs must be positive")


@dataclass
class RelevanceModel:
    weights: np.ndarray
    bias: float
    source: str
    hyperparams: Hyperparams
    schema_hash: str
    epoch_losses: list[float] = field(default_factory=list, compare=False, repr=False)


def hinge_loss(weights: np.ndarray, bias: float, X: np.ndarray, y: np.ndarray) -> float:
    """Mean hinge loss max(0, 1 - y*(Xw + b))."""
    margins = y * (X @ weights + bias)
    return float(np.mean(np.maximum(0.0, 1.0 - margins)))


def objective(
    weights: np.ndarray, bias: float, X: np.ndarray, y: np.ndarray, lambda_: float
) -> float:
    """Regularized training objective: lambda/2 ||w||^2 + mean hinge."""
    return 0.5 * lambda_ * float(weights @ weights) + hinge_loss(weights, bias, X, y)


def train_arrays(
    X: np.ndarray, y: np.ndarray, hyperparams: Hyperparams
) -> tuple[np.ndarray, float, list[float]]:
    """Core solver on raw arrays; labels must be +/-1 with both classes present.

    Returns (weights, bias, objective value at each epoch boundary).
    """
    if X.ndim != 2 or X.shape[0] != y.shape[0]:
        raise SchemaMismatch(f"feature matrix {X.shape} does not match {y.shape[0]} labels")
    if not (np.any(y > 0) and np.any(y < 0)):
        raise DegenerateTrainingSet("training set must contain both classes")

    n = X.shape[0]
    lambda_ = hyperparams.lambda_
    rng = np.random.default_rng(hyperparams.seed)
    weights = np.zeros(X.shape[1], dtype=np.float64)
    bias = 0.0
    losses: list[float] = []
    t = 0
    for _ in range(hyperparams.epochs):
        for i in rng.permutation(n):
            t += 1
            eta = 1.0 / (lambda_ * t)
            violated = y[i] * (X[i] @ weights + bias) < 1.0
            weights *= 1.0 - eta * lambda_
            if violated:
                weights += eta * y[i] * X[i]
                bias += eta * y[i]
        losses.append(objective(weights, bias, X, y, lambda_))
    return weights, bias, losses


def train(
    benchmark: list[LabeledRelation],
    schema: FeatureSchema,
    kg: TemporalKG,
    hyperparams: Hyperparams = Hyperparams(),
) -> RelevanceModel:
    """Train one relevance model from a single-source labeled benchmark."""
    sources = {record.source for record in benchmark}
    if len(sources) != 1:
        raise ValueError(f"benchmark must be filtered to one source, got {sorted(sources)}")
    X = featurize_all([record.relation for record in benchmark], kg, schema)
    y = np.array([1.0 if record.relevant else -1.0 for record in benchmark])
    weights, bias, losses = train_arrays(X, y, hyperparams)
    return RelevanceModel(
        weights=weights,
        bias=bias,
        source=sources.pop(),
        hyperparams=hyperparams,
        schema_hash=schema.schema_hash,
        epoch_losses=losses,
    )


def score(model: RelevanceModel, vec: np.ndarray) -> float:
    """Raw margin weights . vec + bias."""
    if vec.shape != model.weights.shape:
        raise SchemaMismatch(f"vector shape {vec.shape} != weights shape {model.weights.shape}")
    return float(model.weights @ vec + model.bias)


def predict(model: RelevanceModel, vec: np.ndarray) -> bool:
    """Relevant iff the score is strictly positive."""
    return score(model, vec) > 0.0


def model_to_json(model: RelevanceModel) -> dict:
    return {
        "source": model.source,
        "lambda": model.hyperparams.lambda_,
        "epochs": model.hyperparams.epochs,
        "seed": model.hyperparams.seed,
        "bias": model.bias,
        "weights": [float(w) for w in model.weights],
        "schema_hash": model.schema_hash,
    }


def model_from_json(doc: dict) -> RelevanceModel:
    return RelevanceModel(
        weights=np.array(doc["weights"], dtype=np.float64),
        bias=float(doc["bias"]),
        source=doc["source"],
        hyperparams=Hyperparams(
            lambda_=doc["lambda"], epochs=doc["epochs"], seed=doc["seed"]
        ),
        schema_hash=doc["schema_hash"],
    )


def save_model(model: RelevanceModel, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(model_to_json(model), indent=2) + "\n", encoding="utf-8")


def load_model(path: Union[str, Path]) -> RelevanceModel:
    return model_from_json(json.loads(Path(path).read_text(encoding="utf-8")))
