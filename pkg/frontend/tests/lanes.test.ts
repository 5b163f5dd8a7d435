import { describe, expect, it } from "vitest";

import { computeLanes, eventsChronological, timeDomain, timeScale } from "../src/lanes.js";
import type { TimelineJson } from "../src/types.js";

import timelineDoc from "./fixtures/timeline_john_adams_wikipedia.json";

const timeline = timelineDoc as unknown as TimelineJson;

describe("computeLanes", () => {
  it("renders one lane per group label computed by the API", () => {
    const lanes = computeLanes(timeline.entries);
    const laneLabels = new Set(lanes.map((lane) => lane.label));
    const apiLabels = new Set(timeline.entries.map((entry) => entry.group_label));
    expect(laneLabels).toEqual(apiLabels);
    expect(laneLabels.has("Misc.")).toBe(true);
    expect(laneLabels.has("Position held")).toBe(true);
  });

  it("every entry lands in exactly one lane", () => {
    const lanes = computeLanes(timeline.entries);
    const total = lanes.reduce((n, lane) => n + lane.entries.length, 0);
    expect(total).toBe(timeline.entries.length);
    for (const lane of lanes) {
      for (const entry of lane.entries) {
        expect(entry.group_label).toBe(lane.label);
      }
    }
  });

  it("orders lanes by their first entry start date", () => {
    const lanes = computeLanes(timeline.entries);
    const firsts = lanes.map((lane) => lane.entries[0].start ?? "");
    expect([...firsts].sort()).toEqual(firsts);
  });
});

describe("time scale", () => {
  it("covers lifespan and entries with padding", () => {
    const [lo, hi] = timeDomain(timeline);
    expect(lo).toBeLessThanOrEqual(1735);
    expect(hi).toBeGreaterThanOrEqual(1826);
  });

  it("maps the domain monotonically into [0, 1]", () => {
    const domain = timeDomain(timeline);
    const scale = timeScale(domain);
    const points = ["1735-10-30", "1764-10-25", "1797-03-04", "1826-07-04"];
    const mapped = points.map(scale);
    expect([...mapped].sort((a, b) => a - b)).toEqual(mapped);
    for (const value of mapped) {
      expect(value).toBeGreaterThanOrEqual(0);
      expect(value).toBeLessThanOrEqual(1);
    }
  });
});

describe("eventsChronological", () => {
  it("sorts by start date with id tie-break", () => {
    const sorted = eventsChronological(timeline.events);
    const keys = sorted.map((ev) => [ev.start ?? "", ev.id] as const);
    const expected = [...keys].sort((a, b) =>
      a[0] !== b[0] ? (a[0] < b[0] ? -1 : 1) : a[1] < b[1] ? -1 : 1,
    );
    expect(keys).toEqual(expected);
  });
});
