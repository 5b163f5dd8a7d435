/** Hash routing: #/person/<id>?model=<flavor>. The URL is the single
 * source of truth for (person, model), so back/forward just works. */

import { MODEL_SOURCES, type ModelSource } from "./types.js";

export interface Route {
  person: string | null;
  model: ModelSource;
}

export function parseHash(hash: string): Route {
  const match = /^#\/person\/([A-Za-z0-9_]+)(?:\?(.*))?$/.exec(hash);
  if (!match) return { person: null, model: "wikipedia" };
  const params = new URLSearchParams(match[2] ?? "");
  const model = params.get("model");
  return {
    person: match[1],
    model: MODEL_SOURCES.includes(model as ModelSource) ? (model as ModelSource) : "wikipedia",
  };
}

export function formatHash(person: string, model: ModelSource): string {
  return `#/person/${person}?model=${model}`;
}
