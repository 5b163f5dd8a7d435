"""Turn relations into vectors and train the two relevance models.

Features: property one-hot, subject type-tag multi-hot, then a numeric
block (object importance, relation kind, duration, offsets from birth
and death, boundary flags). One model is trained per corpus flavor; the
two flavors emphasize different properties, so the models disagree in
interesting places.
"""

from pathlib import Path

import numpy as np

from biotimelines import (
    Hyperparams, build_benchmark, build_schema, extract_relations, featurize,
    load_kg, predict, score, train,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
kg = load_kg(FIXTURES / "mini_ekg")
result = build_benchmark(kg, FIXTURES / "corpus")
schema = build_schema(result.records, kg)
print(f"schema: {len(schema.property_vocab)} properties + "
      f"{len(schema.type_vocab)} type tags + 9 numeric = {schema.dimension} dims")

marriage = next(
    r for r in extract_relations(kg, "JohnAdams") if r.property_id == "marriedTo"
)
vec = featurize(marriage, kg, schema)
base = len(schema.property_vocab) + len(schema.type_vocab)
print(f"\nmarriage vector: property bit at {int(np.argmax(vec[:base]))}, "
      f"log-duration {vec[base + 4]:.2f}, start offset {vec[base + 5]:+.1f}y")

models = {}
for source in ("wikipedia", "bio_web"):
    subset = [r for r in result.records if r.source == source]
    models[source] = train(subset, schema, kg, Hyperparams(seed=42))
    losses = models[source].epoch_losses
    print(f"\n{source}: trained on {len(subset)} examples, "
          f"objective {losses[0]:.4f} -> {losses[-1]:.4f}")
    weights = models[source].weights[: len(schema.property_vocab)]
    ranked = sorted(zip(schema.property_vocab, weights), key=lambda kv: -kv[1])
    top = ", ".join(f"{p} {w:+.2f}" for p, w in ranked[:4])
    bottom = ", ".join(f"{p} {w:+.2f}" for p, w in ranked[-2:])
    print(f"  strongest properties: {top}")
    print(f"  weakest:              {bottom}")

print("\nwhere the two models disagree for John Adams:")
for rel in extract_relations(kg, "JohnAdams"):
    vec = featurize(rel, kg, schema)
    wiki, web = predict(models["wikipedia"], vec), predict(models["bio_web"], vec)
    if wiki != web:
        print(f"  {rel.property_id:<16} {rel.object_key:<24} "
              f"wikipedia={score(models['wikipedia'], vec):+.2f} "
              f"bio_web={score(models['bio_web'], vec):+.2f}")
