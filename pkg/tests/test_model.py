from dataclasses import replace

import numpy as np
import pytest

from biotimelines import (
    DegenerateTrainingSet,
    Hyperparams,
    SchemaMismatch,
    extract_relations,
    featurize,
    load_model,
    predict,
    save_model,
    score,
    train,
)
from biotimelines.model import RelevanceModel, hinge_loss, train_arrays

from synth import separable_set


def make_model(weights, bias, source="wikipedia", schema_hash="x"):
    return RelevanceModel(
        weights=np.asarray(weights, dtype=np.float64),
        bias=bias,
        source=source,
        hyperparams=Hyperparams(),
        schema_hash=schema_hash,
    )


class TestSolver:
    def test_separable_set_fits_exactly(self):
        X, y = separable_set()
        weights, bias, _ = train_arrays(X, y, Hyperparams())
        assert np.all(np.sign(X @ weights + bias) == y)
        assert hinge_loss(weights, bias, X, y) < 1e-3

    def test_objective_non_increasing_beyond_first_epoch(self):
        X, y = separable_set()
        _, _, losses = train_arrays(X, y, Hyperparams())
        assert len(losses) == Hyperparams().epochs
        for earlier, later in zip(losses[1:], losses[2:]):
            assert later <= earlier

    def test_single_class_rejected(self):
        X, y = separable_set()
        with pytest.raises(DegenerateTrainingSet):
            train_arrays(X, np.ones_like(y), Hyperparams())
        with pytest.raises(DegenerateTrainingSet):
            train_arrays(X, -np.ones_like(y), Hyperparams())

    def test_same_seed_bit_identical(self):
        X, y = separable_set()
        w1, b1, _ = train_arrays(X, y, Hyperparams(seed=42))
        w2, b2, _ = train_arrays(X, y, Hyperparams(seed=42))
        assert b1 == b2
        assert np.array_equal(w1, w2)

    def test_different_seed_differs(self):
        X, y = separable_set()
        w1, _, _ = train_arrays(X, y, Hyperparams(seed=42))
        w2, _, _ = train_arrays(X, y, Hyperparams(seed=43))
        assert not np.array_equal(w1, w2)

    def test_bad_hyperparams_rejected(self):
        with pytest.raises(ValueError):
            Hyperparams(lambda_=0.0)
        with pytest.raises(ValueError):
            Hyperparams(epochs=0)


class TestScorePredict:
    def test_zero_model_scores_zero(self):
        model = make_model(np.zeros(4), 0.0)
        assert score(model, np.array([1.0, 2.0, 3.0, 4.0])) == 0.0

    def test_unit_weight_arithmetic(self):
        model = make_model([0.0, 1.0, 0.0], bias=-1.0)
        assert score(model, np.array([0.0, 2.0, 0.0])) == 1.0

    def test_tie_is_non_relevant(self):
        model = make_model(np.zeros(3), 0.0)
        assert predict(model, np.zeros(3)) is False

    @pytest.mark.parametrize("bias,expected", [(0.7, True), (-0.2, False)])
    def test_sign_thresholding(self, bias, expected):
        model = make_model(np.zeros(2), bias)
        assert predict(model, np.zeros(2)) is expected

    def test_dimension_mismatch(self):
        model = make_model(np.zeros(3), 0.0)
        with pytest.raises(SchemaMismatch):
            score(model, np.zeros(4))

    def test_positive_scaling_never_changes_predictions(self):
        rng = np.random.default_rng(99)
        model = make_model(rng.normal(size=8), float(rng.normal()))
        for c in (1e-6, 0.5, 3.0, 1e6):
            scaled = replace(model, weights=model.weights * c, bias=model.bias * c)
            for _ in range(200):
                vec = rng.normal(size=8) * rng.choice([1e-3, 1.0, 1e3])
                assert predict(model, vec) == predict(scaled, vec)


class TestFixtureModels:
    def test_sources_and_schema_hash(self, models, schema):
        assert set(models) == {"wikipedia", "bio_web"}
        for source, model in models.items():
            assert model.source == source
            assert model.schema_hash == schema.schema_hash
            assert model.weights.shape == (schema.dimension,)

    def test_president_relation_scores_positive(self, kg, schema, models):
        president = next(
            r
            for r in extract_relations(kg, "JohnAdams")
            if r.property_id == "positionHeld" and r.object == "PresidentOfUS"
        )
        assert score(models["wikipedia"], featurize(president, kg, schema)) > 0

    def test_models_disagree_somewhere(self, kg, schema, models):
        disagreements = [
            rel
            for rel in extract_relations(kg, "JohnAdams")
            if predict(models["wikipedia"], featurize(rel, kg, schema))
            != predict(models["bio_web"], featurize(rel, kg, schema))
        ]
        assert disagreements

    def test_mixed_source_benchmark_rejected(self, benchmark, schema, kg):
        with pytest.raises(ValueError):
            train(benchmark.records, schema, kg, Hyperparams())

    def test_degenerate_benchmark_rejected(self, benchmark, schema, kg):
        positives = [r for r in benchmark.records if r.source == "wikipedia" and r.relevant]
        with pytest.raises(DegenerateTrainingSet):
            train(positives, schema, kg, Hyperparams())


class TestSerialization:
    def test_round_trip_scores_exactly_equal(self, kg, schema, models, tmp_path):
        path = tmp_path / "model.wikipedia.json"
        save_model(models["wikipedia"], path)
        loaded = load_model(path)
        assert loaded.source == "wikipedia"
        assert loaded.schema_hash == models["wikipedia"].schema_hash
        for rel in extract_relations(kg, "JohnAdams"):
            vec = featurize(rel, kg, schema)
            assert score(loaded, vec) == score(models["wikipedia"], vec)  # 0 ulps

    def test_two_trainings_write_identical_bytes(self, benchmark, schema, kg, tmp_path):
        records = [r for r in benchmark.records if r.source == "bio_web"]
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        save_model(train(records, schema, kg, Hyperparams(seed=42)), a)
        save_model(train(records, schema, kg, Hyperparams(seed=42)), b)
        assert a.read_bytes() == b.read_bytes()
