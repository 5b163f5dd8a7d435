/** Selection model: at most one entry selected; everything highlighted is
 * derived from that entry's linked ids. Pure functions, no DOM. */

import type { EntryJson, EventJson, ModelSource, TimelineJson } from "./types.js";

export interface SelectionState {
  selectedEntry: string | null;
  selectedEvent: string | null;
  selectedPerson: string | null;
  modelSource: ModelSource;
}

export interface Highlights {
  entryKeys: Set<string>;
  eventIds: Set<string>;
  personIds: Set<string>;
  markerKeys: Set<string>;
}

export function initialState(model: ModelSource): SelectionState {
  return { selectedEntry: null, selectedEvent: null, selectedPerson: null, modelSource: model };
}

/** Stable identity of an entry within one timeline document. */
export function entryKey(entry: EntryJson): string {
  return [entry.property, entry.object, entry.start ?? "", entry.end ?? "", entry.kind].join("|");
}

const MIN = "";
const MAX = "￿";

/** ISO date strings compare lexicographically; null bounds are infinite. */
export function intervalsOverlap(
  aStart: string | null, aEnd: string | null,
  bStart: string | null, bEnd: string | null,
): boolean {
  return (aStart ?? MIN) <= (bEnd ?? MAX) && (bStart ?? MIN) <= (aEnd ?? MAX);
}

/** Events whose happening time overlaps the entry's validity interval. */
export function linkedEvents(entry: EntryJson, events: EventJson[]): EventJson[] {
  return events.filter((ev) => intervalsOverlap(entry.start, entry.end, ev.start, ev.end));
}

/** The related person the entry points at, if its object is one. */
export function linkedPerson(entry: EntryJson, timeline: TimelineJson): string | null {
  if (entry.object_kind !== "entity") return null;
  const related = timeline.related_people.find((p) => p.id === entry.object);
  return related ? related.id : null;
}

export function selectEntry(
  state: SelectionState, entry: EntryJson, timeline: TimelineJson,
): SelectionState {
  const events = linkedEvents(entry, timeline.events);
  return {
    ...state,
    selectedEntry: entryKey(entry),
    selectedEvent: events.length ? events[0].id : null,
    selectedPerson: linkedPerson(entry, timeline),
  };
}

export function selectEvent(state: SelectionState, event: EventJson): SelectionState {
  return { ...state, selectedEntry: null, selectedEvent: event.id, selectedPerson: null };
}

export function clearSelection(state: SelectionState): SelectionState {
  return { ...state, selectedEntry: null, selectedEvent: null, selectedPerson: null };
}

/** Everything the views must highlight for the current selection. */
export function highlightsFor(state: SelectionState, timeline: TimelineJson): Highlights {
  const highlights: Highlights = {
    entryKeys: new Set(),
    eventIds: new Set(),
    personIds: new Set(),
    markerKeys: new Set(),
  };
  if (state.selectedEntry !== null) {
    const entry = timeline.entries.find((e) => entryKey(e) === state.selectedEntry);
    if (entry) {
      highlights.entryKeys.add(state.selectedEntry);
      if (entry.location) highlights.markerKeys.add(`entry:${state.selectedEntry}`);
      for (const ev of linkedEvents(entry, timeline.events)) {
        highlights.eventIds.add(ev.id);
        if (ev.location) highlights.markerKeys.add(`event:${ev.id}`);
      }
      const person = linkedPerson(entry, timeline);
      if (person) highlights.personIds.add(person);
    }
  } else if (state.selectedEvent !== null) {
    const event = timeline.events.find((ev) => ev.id === state.selectedEvent);
    if (event) {
      highlights.eventIds.add(event.id);
      if (event.location) highlights.markerKeys.add(`event:${event.id}`);
      for (const pid of event.participants) highlights.personIds.add(pid);
    }
  }
  return highlights;
}
