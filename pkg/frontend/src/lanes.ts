/** Lane layout: one horizontal lane per group label, lanes ordered by the
 * start date of their earliest entry. */

import type { EntryJson, EventJson, TimelineJson } from "./types.js";

export interface Lane {
  label: string;
  entries: EntryJson[];
}

const MIN = "";

export function computeLanes(entries: EntryJson[]): Lane[] {
  const byLabel = new Map<string, EntryJson[]>();
  for (const entry of entries) {
    const lane = byLabel.get(entry.group_label);
    if (lane) lane.push(entry);
    else byLabel.set(entry.group_label, [entry]);
  }
  const lanes = [...byLabel.entries()].map(([label, laneEntries]) => ({
    label,
    entries: laneEntries,
  }));
  lanes.sort((a, b) => {
    const aFirst = a.entries[0].start ?? MIN;
    const bFirst = b.entries[0].start ?? MIN;
    if (aFirst !== bFirst) return aFirst < bFirst ? -1 : 1;
    return a.label < b.label ? -1 : a.label > b.label ? 1 : 0;
  });
  return lanes;
}

function yearOf(iso: string): number {
  return parseInt(iso.slice(0, 4), 10);
}

/** Inclusive year domain spanning lifespan, entries, and events. */
export function timeDomain(timeline: TimelineJson): [number, number] {
  const years: number[] = [];
  const push = (iso: string | null) => {
    if (iso !== null) years.push(yearOf(iso));
  };
  if (timeline.person.existence) {
    push(timeline.person.existence.start);
    push(timeline.person.existence.end);
  }
  for (const entry of timeline.entries) {
    push(entry.start);
    push(entry.end);
  }
  for (const event of timeline.events) {
    push(event.start);
    push(event.end);
  }
  if (!years.length) return [1900, 2000];
  const lo = Math.min(...years);
  const hi = Math.max(...years);
  return [lo - 2, hi + 2];
}

/** Fraction of the way through [lo, hi] for an ISO date (clamped 0..1). */
export function timeScale(domain: [number, number]): (iso: string) => number {
  const [lo, hi] = domain;
  const span = Math.max(hi - lo, 1);
  return (iso: string) => {
    const yearFraction = yearOf(iso) + (dayOfYearFraction(iso) || 0);
    return Math.min(1, Math.max(0, (yearFraction - lo) / span));
  };
}

function dayOfYearFraction(iso: string): number {
  const month = parseInt(iso.slice(5, 7), 10);
  const day = parseInt(iso.slice(8, 10), 10);
  if (Number.isNaN(month) || Number.isNaN(day)) return 0;
  return ((month - 1) * 30.4 + (day - 1)) / 365;
}

export function eventsChronological(events: EventJson[]): EventJson[] {
  return [...events].sort((a, b) => {
    const aStart = a.start ?? MIN;
    const bStart = b.start ?? MIN;
    if (aStart !== bStart) return aStart < bStart ? -1 : 1;
    return a.id < b.id ? -1 : 1;
  });
}
