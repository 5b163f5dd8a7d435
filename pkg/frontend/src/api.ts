/** Typed client for the documented JSON endpoints.
 *
 * Timeline fetches are latest-wins per person: starting a new fetch for a
 * person aborts the previous in-flight one, and a stale response (raced
 * past the abort) is discarded.
 */

import type { ModelSource, PersonSummaryJson, TimelineJson } from "./types.js";

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export class StaleResponse extends Error {
  constructor() {
    super("superseded by a newer request");
  }
}

type FetchLike = (url: string, init?: { signal?: AbortSignal }) => Promise<Response>;

export class ApiClient {
  private inflight = new Map<string, { controller: AbortController; seq: number }>();
  private seq = 0;

  constructor(
    private base: string = "",
    private fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async getJson<T>(path: string, signal?: AbortSignal): Promise<T> {
    const response = await this.fetchFn(this.base + path, { signal });
    if (!response.ok) {
      let message = `request failed with status ${response.status}`;
      try {
        const body = await response.json();
        if (body && typeof body.error === "string") message = body.error;
      } catch {
        // keep the generic message
      }
      throw new ApiError(response.status, message);
    }
    return (await response.json()) as T;
  }

  async searchPersons(query: string, limit = 8): Promise<PersonSummaryJson[]> {
    const params = new URLSearchParams({ q: query, limit: String(limit) });
    return this.getJson(`/api/persons?${params}`);
  }

  async timeline(personId: string, model: ModelSource): Promise<TimelineJson> {
    const previous = this.inflight.get(personId);
    if (previous) previous.controller.abort();
    const controller = new AbortController();
    const seq = ++this.seq;
    this.inflight.set(personId, { controller, seq });
    try {
      const doc = await this.getJson<TimelineJson>(
        `/api/timeline/${personId}?model=${model}`, controller.signal,
      );
      if (this.inflight.get(personId)?.seq !== seq) throw new StaleResponse();
      return doc;
    } finally {
      if (this.inflight.get(personId)?.seq === seq) this.inflight.delete(personId);
    }
  }

  exportUrl(personId: string, model: ModelSource): string {
    return `${this.base}/api/export/${personId}?model=${model}`;
  }
}
