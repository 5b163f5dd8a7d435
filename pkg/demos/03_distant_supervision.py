"""Label relations against textual biographies, with no manual annotation.

A relation counts as relevant when some sentence mentions its object (any
alias, whole words) together with a year inside the relation's validity
window; literal-date relations match on the property label instead. The
first matching sentence is kept as evidence.
"""

from pathlib import Path

from biotimelines import build_benchmark, extract_relations, label_relations, load_kg
from biotimelines.supervision import BiographyDoc

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
kg = load_kg(FIXTURES / "mini_ekg")

bio_path = FIXTURES / "corpus" / "wikipedia" / "JohnAdams.txt"
sentences = [line for line in bio_path.read_text().splitlines() if line.strip()]
doc = BiographyDoc(person="JohnAdams", source="wikipedia", sentences=tuple(sentences))

relations = extract_relations(kg, "JohnAdams")
for record in label_relations(kg, doc, relations):
    rel = record.relation
    if record.relevant:
        ev = record.evidence
        print(f"  + {rel.property_id:<16} {rel.object_key:<28} "
              f"sentence {ev.sentence_index} ({ev.matched_label!r}, {ev.matched_year})")
    else:
        print(f"  - {rel.property_id:<16} {rel.object_key}")

# The full benchmark walks corpus/<source>/<person>.txt for both flavors.
result = build_benchmark(kg, FIXTURES / "corpus")
print(f"\nbenchmark: {result.summary['persons']} persons, "
      f"{result.summary['relations']} labeled relations")
for source, positives in result.summary["positives"].items():
    total = sum(1 for r in result.records if r.source == source)
    print(f"  {source:<10} {positives}/{total} relevant")
