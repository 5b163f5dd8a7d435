"""Build a grouped biography timeline, then serve it over HTTP.

The timeline splits every extracted relation into relevant entries and
rejected leftovers (the export keeps both), groups entries by property
label (singletons pool under "Misc."), and carries linked events and
related people. The HTTP layer caches rendered documents per
(person, model) with single-flight builds.
"""

import json
import socket
import threading
import time
import urllib.request
from pathlib import Path

import uvicorn

from biotimelines import (
    Hyperparams, build_benchmark, build_schema, build_timeline, load_kg, train,
)
from biotimelines.service import TimelineService, create_app

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
kg = load_kg(FIXTURES / "mini_ekg")
result = build_benchmark(kg, FIXTURES / "corpus")
schema = build_schema(result.records, kg)
models = {
    source: train([r for r in result.records if r.source == source], schema, kg,
                  Hyperparams(seed=42))
    for source in ("wikipedia", "bio_web")
}

timeline = build_timeline(kg, "JohnAdams", models["wikipedia"], schema)
print(f"timeline for John Adams: {len(timeline.entries)} entries, "
      f"{len(timeline.rejected)} rejected")
lanes: dict[str, list] = {}
for entry in timeline.entries:
    lanes.setdefault(entry.group_label, []).append(entry)
for group, entries in lanes.items():
    print(f"\n  [{group}]")
    for entry in entries:
        start = entry.relation.validity.start.iso() if entry.relation.validity.start else "..."
        end = entry.relation.validity.end.iso() if entry.relation.validity.end else "..."
        print(f"    {start} .. {end}  {entry.object_label}")
print(f"\n  events: {[ev.label for ev in timeline.events][:3]} ...")
print(f"  related: {[pid for pid, _ in timeline.related_people][:4]}")

# Now the same data over HTTP, cache behavior included.
service = TimelineService(kg, models, schema)
with socket.socket() as sock:
    sock.bind(("127.0.0.1", 0))
    port = sock.getsockname()[1]
server = uvicorn.Server(uvicorn.Config(create_app(service), port=port, log_level="error"))
threading.Thread(target=server.run, daemon=True).start()
while not server.started:
    time.sleep(0.05)

base = f"http://127.0.0.1:{port}"
for attempt in ("first", "second"):
    with urllib.request.urlopen(f"{base}/api/timeline/JohnAdams") as resp:
        print(f"\n{attempt} request: cache={resp.headers['cache']}, "
              f"{len(resp.read())} bytes")
with urllib.request.urlopen(f"{base}/api/export/JohnAdams") as resp:
    export = json.loads(resp.read())
print(f"export: {len(export['entries'])} entries, {len(export['rejected'])} rejected, "
      f"generated_at {export['generated_at']}")
with urllib.request.urlopen(f"{base}/api/stats") as resp:
    print(f"stats: {resp.read().decode()}")
server.should_exit = True
