"""Extract a person's candidate temporal relations.

Three ways a relation gets its dates:
  kind 1 - the object itself is a date ("born 1735-10-30"),
  kind 2 - the fact carries an asserted validity span,
  kind 3 - no span, so the object's own existence (or an event's
           happening time) is intersected with the subject's lifespan.

A fact with an asserted span never also yields a kind-3 relation, and a
kind-3 candidate whose intersection is empty is dropped entirely.
"""

from pathlib import Path

from biotimelines import extract_relations, load_kg

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
kg = load_kg(FIXTURES / "mini_ekg")

for rel in extract_relations(kg, "JohnAdams"):
    start = rel.validity.start.iso() if rel.validity.start else "..."
    end = rel.validity.end.iso() if rel.validity.end else "..."
    print(f"  kind={int(rel.kind)} [{start} .. {end}] {rel.property_id:<16} {rel.object_key}")

# The child relation shows the lifespan clipping: John Quincy Adams died
# in 1848, but his father's timeline ends at the father's death in 1826.
child = next(
    r for r in extract_relations(kg, "JohnAdams")
    if r.property_id == "child" and r.object == "JohnQuincyAdams"
)
print(f"\nchild relation ends {child.validity.end.iso()} "
      f"(the father's death, not the son's)")

# For the mother the same fact clips at 1818 instead.
child = next(
    r for r in extract_relations(kg, "AbigailAdams")
    if r.property_id == "child" and r.object == "JohnQuincyAdams"
)
print(f"for Abigail Adams it ends {child.validity.end.iso()}")

# And a relation whose object existed wholly outside the subject's life
# (John Locke died in 1704) is not a candidate at all.
assert not any(r.object == "JohnLocke" for r in extract_relations(kg, "JohnAdams"))
print("\nrelations pointing outside the lifespan are dropped (John Locke: none)")
