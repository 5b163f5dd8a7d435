"""Command line pipeline: validate, benchmark, train, timeline, serve.

Every command is a thin wrapper over the library modules, deterministic
given identical inputs and flags; ``--timestamp`` pins generated_at so
output files are byte-reproducible.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import features, kg, model, service, supervision
from .errors import BiotimelinesError


def _load_models(models_dir: Path):
    schema = features.load_schema(models_dir / "schema.json")
    models = {}
    for source in supervision.SOURCES:
        path = models_dir / f"model.{source}.json"
        if path.exists():
            models[source] = model.load_model(path)
    if not models:
        raise FileNotFoundError(f"no model.<source>.json files in {models_dir}")
    return models, schema


def cmd_validate(args) -> int:
    report = kg.validate_kg(args.data, max_errors=args.max_errors)
    for key in ("persons", "entities", "events", "facts"):
        print(f"{report.counts.get(key, 0)} {key}")
    if not report.ok:
        for err in report.errors:
            print(f"error: {err}", file=sys.stderr)
        return 1
    return 0


def cmd_benchmark(args) -> int:
    graph = kg.load_kg(args.data)
    result = supervision.build_benchmark(graph, args.corpus)
    supervision.write_benchmark(result.records, args.out)
    for message in result.skipped:
        print(f"warning: {message}", file=sys.stderr)
    summary = result.summary
    print(f"{summary['persons']} persons, {summary['relations']} labeled relations")
    for source, positives in summary["positives"].items():
        print(f"  {source}: {positives} positives")
    return 0


def cmd_train(args) -> int:
    graph = kg.load_kg(args.data)
    records = supervision.read_benchmark(args.benchmark)
    schema = features.build_schema(records, graph)
    subset = [record for record in records if record.source == args.source]
    trained = model.train(
        subset,
        schema,
        graph,
        model.Hyperparams(lambda_=getattr(args, "lambda"), epochs=args.epochs, seed=args.seed),
    )
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    model.save_model(trained, out)
    features.save_schema(schema, out.parent / "schema.json")
    print(
        f"trained {args.source} model on {len(subset)} examples, "
        f"final objective {trained.epoch_losses[-1]:.6f}"
    )
    return 0


def _make_service(args, clock=None) -> service.TimelineService:
    graph = kg.load_kg(args.data)
    models, schema = _load_models(Path(args.models))
    kwargs = {}
    if clock is not None:
        kwargs["clock"] = clock
    return service.TimelineService(
        graph, models, schema, cache_size=args.cache_size, **kwargs
    )


def cmd_timeline(args) -> int:
    clock = (lambda: args.timestamp) if args.timestamp else None
    svc = _make_service(args, clock=clock)
    body, _ = svc.export_bytes(args.person, args.model)
    Path(args.out).write_bytes(body + b"\n")
    print(f"wrote {args.out}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    svc = _make_service(args)
    app = service.create_app(svc, static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biotimelines",
        description="Biography timelines from a temporal knowledge graph",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a dump directory and print counts")
    p.add_argument("data", help="dump directory with entities.tsv, events.tsv, facts.tsv")
    p.add_argument("--max-errors", type=int, default=20, help="errors to report before stopping")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("benchmark", help="label relations against a biography corpus")
    p.add_argument("data", help="dump directory")
    p.add_argument("corpus", help="corpus directory with <source>/<person_id>.txt files")
    p.add_argument("--out", required=True, help="output JSONL path")
    p.set_defaults(func=cmd_benchmark)

    p = sub.add_parser("train", help="train one relevance model from a benchmark")
    p.add_argument("benchmark", help="benchmark JSONL path")
    p.add_argument("--data", required=True, help="dump directory (feature context)")
    p.add_argument("--source", required=True, choices=supervision.SOURCES)
    p.add_argument("--out", required=True, help="model JSON path; schema.json written beside it")
    p.add_argument("--lambda", type=float, default=1e-3, help="L2 regularization strength")
    p.add_argument("--epochs", type=int, default=50)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("timeline", help="write one person's export document")
    p.add_argument("data", help="dump directory")
    p.add_argument("models", help="directory with model.<source>.json and schema.json")
    p.add_argument("person", help="person id")
    p.add_argument("--model", default="wikipedia", choices=supervision.SOURCES)
    p.add_argument("--out", required=True, help="output JSON path")
    p.add_argument("--timestamp", default=None, help="pin generated_at (RFC 3339)")
    p.add_argument("--cache-size", type=int, default=service.DEFAULT_CACHE_SIZE)
    p.set_defaults(func=cmd_timeline)

    p = sub.add_parser("serve", help="run the HTTP+JSON service")
    p.add_argument("--data", required=True, help="dump directory")
    p.add_argument("--models", required=True, help="model directory")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--cache-size", type=int, default=service.DEFAULT_CACHE_SIZE)
    p.add_argument("--static", default=None, help="directory with the web UI bundle")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BiotimelinesError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except FileNotFoundError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
