/** Application shell: routes, fetches, renders, and wires selection. */

import { ApiClient, ApiError, StaleResponse } from "./api.js";
import { formatHash, parseHash } from "./router.js";
import {
  clearSelection,
  entryKey,
  highlightsFor,
  initialState,
  selectEntry,
  selectEvent,
  type SelectionState,
} from "./state.js";
import {
  applyHighlights,
  renderBio,
  renderDetails,
  renderEvents,
  renderMapPanel,
  renderRelated,
  renderTimeline,
} from "./render.js";
import type { ModelSource, TimelineJson } from "./types.js";

const SKELETON = `
  <div class="banner" data-role="banner" hidden></div>
  <header class="toolbar">
    <form data-role="search-form" class="search">
      <input data-role="search-input" type="search" placeholder="Find a person…" />
      <button type="submit">Search</button>
    </form>
    <ul class="search-results" data-role="search-results"></ul>
    <div class="model-toggle" data-role="model-toggle">
      <label><input type="radio" name="model" value="wikipedia" checked /> wikipedia</label>
      <label><input type="radio" name="model" value="bio_web" /> bio_web</label>
    </div>
    <a data-role="export-link" class="export-link" hidden download>Export JSON</a>
  </header>
  <section class="bio" data-role="bio"></section>
  <main class="columns">
    <section class="map" data-role="map"></section>
    <section class="timeline" data-role="timeline"></section>
  </main>
  <aside class="details" data-role="details" hidden></aside>
  <footer class="columns">
    <section class="related" data-role="related"><h3>Related people</h3><div data-role="related-list"></div></section>
    <section class="events" data-role="events"><h3>Events</h3><div data-role="event-list"></div></section>
  </footer>
`;

export class App {
  state: SelectionState = initialState("wikipedia");
  timeline: TimelineJson | null = null;
  private loadedRoute = "";

  constructor(
    private root: HTMLElement,
    private api: ApiClient,
    private win: Window = window,
  ) {}

  boot(): Promise<void> {
    this.root.innerHTML = SKELETON;
    this.win.addEventListener("hashchange", () => void this.handleRoute());
    this.root.addEventListener("click", (event) => this.handleClick(event));
    this.panel("search-form").addEventListener("submit", (event) => {
      event.preventDefault();
      void this.runSearch();
    });
    this.panel("model-toggle").addEventListener("change", () => {
      const chosen = this.root.querySelector<HTMLInputElement>(
        "input[name=model]:checked",
      )!.value as ModelSource;
      const route = parseHash(this.win.location.hash);
      if (route.person) {
        this.win.location.hash = formatHash(route.person, chosen);
      }
      void this.handleRoute();
    });
    return this.handleRoute();
  }

  panel(role: string): HTMLElement {
    return this.root.querySelector<HTMLElement>(`[data-role="${role}"]`)!;
  }

  async handleRoute(): Promise<void> {
    const route = parseHash(this.win.location.hash);
    if (!route.person) {
      this.panel("bio").textContent = "Search for a person to see a biography timeline.";
      this.loadedRoute = "";
      return;
    }
    const routeKey = `${route.person}|${route.model}`;
    if (routeKey === this.loadedRoute && this.timeline) return;
    try {
      const timeline = await this.api.timeline(route.person, route.model);
      this.timeline = timeline;
      this.loadedRoute = routeKey;
      this.state = initialState(route.model);
      this.showBanner(null);
      this.renderAll();
    } catch (error) {
      if (error instanceof StaleResponse) return;
      if ((error as Error | undefined)?.name === "AbortError") return;
      const message =
        error instanceof ApiError ? error.message : "service unavailable, try again";
      this.showBanner(message);
    }
  }

  renderAll(): void {
    const timeline = this.timeline!;
    renderBio(this.panel("bio"), timeline);
    renderTimeline(this.panel("timeline"), timeline);
    renderMapPanel(this.panel("map"), timeline);
    renderRelated(this.panel("related-list"), timeline);
    renderEvents(this.panel("event-list"), timeline);
    renderDetails(this.panel("details"), null);

    const toggle = this.root.querySelector<HTMLInputElement>(
      `input[name=model][value="${timeline.model_source}"]`,
    );
    if (toggle) toggle.checked = true;
    const exportLink = this.panel("export-link") as HTMLAnchorElement;
    exportLink.hidden = false;
    exportLink.href = this.api.exportUrl(timeline.person.id, this.state.modelSource);
    this.applySelection();
  }

  private applySelection(): void {
    if (!this.timeline) return;
    applyHighlights(this.root, highlightsFor(this.state, this.timeline));
    const selected = this.timeline.entries.find(
      (entry) => entryKey(entry) === this.state.selectedEntry,
    );
    renderDetails(this.panel("details"), selected ?? null);
  }

  private handleClick(event: Event): void {
    if (!this.timeline) return;
    const target = event.target as HTMLElement;

    const entryNode = target.closest<HTMLElement>("[data-entry-key]");
    if (entryNode) {
      const entry = this.timeline.entries.find(
        (candidate) => entryKey(candidate) === entryNode.dataset.entryKey,
      );
      if (entry) {
        this.state = selectEntry(this.state, entry, this.timeline);
        this.applySelection();
      }
      return;
    }

    const eventNode = target.closest<HTMLElement>("[data-event-id]");
    if (eventNode) {
      const linked = this.timeline.events.find((ev) => ev.id === eventNode.dataset.eventId);
      if (linked) {
        this.state = selectEvent(this.state, linked);
        this.applySelection();
      }
      return;
    }

    // related-person rows navigate (their inner <a> drives the hash)
    if (target.closest("[data-person-id]") || target.closest("a,button,input,label,form")) {
      return;
    }

    this.state = clearSelection(this.state);
    this.applySelection();
  }

  private async runSearch(): Promise<void> {
    const input = this.panel("search-input") as HTMLInputElement;
    const query = input.value.trim();
    const results = this.panel("search-results");
    results.textContent = "";
    if (!query) return;
    try {
      const persons = await this.api.searchPersons(query);
      for (const person of persons) {
        const item = document.createElement("li");
        const link = document.createElement("a");
        link.textContent = person.label;
        link.setAttribute("href", formatHash(person.id, this.state.modelSource));
        item.appendChild(link);
        results.appendChild(item);
      }
      if (!persons.length) {
        results.appendChild(
          Object.assign(document.createElement("li"), { textContent: "no matches" }),
        );
      }
    } catch (error) {
      this.showBanner(error instanceof ApiError ? error.message : "search failed");
    }
  }

  private showBanner(message: string | null): void {
    const banner = this.panel("banner");
    banner.hidden = message === null;
    banner.textContent = message ?? "";
  }
}
