/** JSON shapes served by the timeline API (consumed verbatim). */

export interface GeoPointJson {
  lat: number;
  lon: number;
}

export interface IntervalJson {
  start: string | null;
  end: string | null;
}

export interface PersonJson {
  id: string;
  label: string;
  aliases: string[];
  description: string | null;
  existence: IntervalJson | null;
  location: GeoPointJson | null;
  link_count: number;
  external_url?: string;
}

export interface EntryJson {
  subject: string;
  property: string;
  property_label: string;
  object: string;
  object_kind: "entity" | "date";
  start: string | null;
  end: string | null;
  kind: number;
  score: number;
  relevant: boolean;
  object_label: string;
  group_label: string;
  location: GeoPointJson | null;
}

export interface EventJson {
  id: string;
  label: string;
  description: string;
  start: string | null;
  end: string | null;
  location: GeoPointJson | null;
  participants: string[];
}

export interface RelatedPersonJson {
  id: string;
  label: string;
  count: number;
  link_count: number;
}

export interface TimelineJson {
  person: PersonJson;
  model_source: string;
  generated_at: string;
  entries: EntryJson[];
  events: EventJson[];
  related_people: RelatedPersonJson[];
}

export interface PersonSummaryJson {
  id: string;
  label: string;
  link_count: number;
  existence: IntervalJson | null;
  description: string | null;
}

export type ModelSource = "wikipedia" | "bio_web";

export const MODEL_SOURCES: ModelSource[] = ["wikipedia", "bio_web"];
