"""Load the bundled mini knowledge graph and look around.

The graph lives in three TSV files (entities, events, facts). Loading
validates referential integrity, date sanity, and id uniqueness, then
hands back an immutable, indexed graph.
"""

from pathlib import Path

from biotimelines import load_kg

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

kg = load_kg(FIXTURES / "mini_ekg")
print(f"{kg.n_persons} persons, {len(kg.entities)} entities, "
      f"{len(kg.events)} events, {len(kg.facts)} facts")

# Substring search over every name variant, most-linked persons first.
print("\nsearch 'adams':")
for person in kg.search_persons("adams", limit=5):
    print(f"  {person.id:<20} links={person.link_count:<4} {person.label}")

adams = kg.person("JohnAdams")
print(f"\n{adams.label}: {adams.existence.start.iso()} .. {adams.existence.end.iso()}")
print(f"tags: {sorted(adams.type_tags)}")
print(f"description: {adams.description}")
print(f"facts recorded: {len(kg.facts_of('JohnAdams'))}")
print(f"events attended: {[ev.id for ev in kg.events_of('JohnAdams')]}")
