/** DOM rendering for the five linked components. Views render once per
 * timeline fetch; selection changes only toggle highlight classes. */

import { computeLanes, eventsChronological, timeDomain, timeScale } from "./lanes.js";
import { collectMarkers, renderMap } from "./map.js";
import { entryKey, type Highlights } from "./state.js";
import type { EntryJson, TimelineJson } from "./types.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K, className?: string, text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function spanText(entry: EntryJson): string {
  if (entry.start !== null && entry.start === entry.end) return entry.start;
  return `${entry.start ?? "…"} – ${entry.end ?? "…"}`;
}

export function renderBio(container: HTMLElement, timeline: TimelineJson): void {
  container.textContent = "";
  const person = timeline.person;
  const heading = el("h2", "bio-name", person.label);
  container.appendChild(heading);
  if (person.existence) {
    container.appendChild(
      el("div", "bio-lifespan",
         `${person.existence.start ?? "…"} – ${person.existence.end ?? "…"}`),
    );
  }
  if (person.description) {
    container.appendChild(el("p", "bio-description", person.description));
  }
  if (person.external_url) {
    const link = el("a", "bio-link", "Encyclopedia article");
    link.setAttribute("href", person.external_url);
    link.setAttribute("target", "_blank");
    container.appendChild(link);
  }
}

export function renderTimeline(container: HTMLElement, timeline: TimelineJson): void {
  container.textContent = "";
  if (!timeline.entries.length) {
    container.appendChild(el("p", "empty-state", "No timeline entries for this person."));
    return;
  }
  const domain = timeDomain(timeline);
  const scale = timeScale(domain);
  const axis = el("div", "timeline-axis");
  axis.appendChild(el("span", "axis-label", String(domain[0])));
  axis.appendChild(el("span", "axis-label axis-end", String(domain[1])));
  container.appendChild(axis);

  if (timeline.person.existence?.start) {
    const band = el("div", "lifespan-band");
    const left = scale(timeline.person.existence.start);
    const right = timeline.person.existence.end ? scale(timeline.person.existence.end) : 1;
    band.style.left = `${(left * 100).toFixed(2)}%`;
    band.style.width = `${Math.max((right - left) * 100, 0.5).toFixed(2)}%`;
    band.title = "lifespan";
    const bandTrack = el("div", "lane lifespan-lane");
    bandTrack.appendChild(band);
    container.appendChild(bandTrack);
  }

  for (const lane of computeLanes(timeline.entries)) {
    const row = el("div", "lane");
    row.dataset.group = lane.label;
    row.appendChild(el("div", "lane-label", lane.label));
    const track = el("div", "lane-track");
    for (const entry of lane.entries) {
      const key = entryKey(entry);
      const isPoint = entry.start !== null && entry.start === entry.end;
      const node = el("button", isPoint ? "entry entry-point" : "entry entry-span");
      node.dataset.entryKey = key;
      node.title = `${entry.property_label}: ${entry.object_label} (${spanText(entry)})`;
      const left = entry.start ? scale(entry.start) : 0;
      const right = entry.end ? scale(entry.end) : 1;
      node.style.left = `${(left * 100).toFixed(2)}%`;
      if (!isPoint) {
        node.style.width = `${Math.max((right - left) * 100, 0.8).toFixed(2)}%`;
      }
      node.appendChild(el("span", "entry-label", entry.object_label));
      track.appendChild(node);
    }
    row.appendChild(track);
    container.appendChild(row);
  }
}

export function renderMapPanel(container: HTMLElement, timeline: TimelineJson): void {
  renderMap(container, collectMarkers(timeline));
}

export function renderRelated(container: HTMLElement, timeline: TimelineJson): void {
  container.textContent = "";
  if (!timeline.related_people.length) {
    container.appendChild(el("p", "empty-state", "No related people."));
    return;
  }
  const list = el("ul", "related-list");
  for (const person of timeline.related_people) {
    const item = el("li", "related-person");
    item.dataset.personId = person.id;
    const link = el("a", "related-link", person.label);
    link.setAttribute("href", `#/person/${person.id}?model=${timeline.model_source}`);
    item.appendChild(link);
    item.appendChild(el("span", "related-count", `×${person.count}`));
    list.appendChild(item);
  }
  container.appendChild(list);
}

export function renderEvents(container: HTMLElement, timeline: TimelineJson): void {
  container.textContent = "";
  if (!timeline.events.length) {
    container.appendChild(el("p", "empty-state", "No recorded events."));
    return;
  }
  const list = el("ol", "event-list");
  for (const event of eventsChronological(timeline.events)) {
    const item = el("li", "event-item");
    item.dataset.eventId = event.id;
    item.appendChild(el("span", "event-date", event.start ?? ""));
    item.appendChild(el("span", "event-label", event.label));
    if (event.description) {
      item.appendChild(el("p", "event-description", event.description));
    }
    list.appendChild(item);
  }
  container.appendChild(list);
}

/** Pop-over detail: every field of the selected entry, verbatim. */
export function renderDetails(container: HTMLElement, entry: EntryJson | null): void {
  container.textContent = "";
  if (entry === null) {
    container.hidden = true;
    return;
  }
  container.hidden = false;
  container.appendChild(el("h3", "details-title", `${entry.property_label}: ${entry.object_label}`));
  const dl = el("dl", "details-fields");
  for (const [field, value] of Object.entries(entry)) {
    dl.appendChild(el("dt", undefined, field));
    dl.appendChild(el("dd", undefined, JSON.stringify(value)));
  }
  container.appendChild(dl);
}

export function applyHighlights(root: HTMLElement, highlights: Highlights): void {
  for (const node of root.querySelectorAll<HTMLElement>("[data-entry-key]")) {
    node.classList.toggle("selected", highlights.entryKeys.has(node.dataset.entryKey!));
  }
  for (const node of root.querySelectorAll<HTMLElement>("[data-event-id]")) {
    node.classList.toggle("highlight", highlights.eventIds.has(node.dataset.eventId!));
  }
  for (const node of root.querySelectorAll<HTMLElement>("[data-person-id]")) {
    node.classList.toggle("highlight", highlights.personIds.has(node.dataset.personId!));
  }
  for (const node of root.querySelectorAll<HTMLElement>("[data-marker-key]")) {
    node.classList.toggle("highlight", highlights.markerKeys.has(node.dataset.markerKey!));
  }
}
