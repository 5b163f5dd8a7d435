/** Dependency-free SVG scatter map (equirectangular projection). */

import type { TimelineJson } from "./types.js";
import { entryKey } from "./state.js";

export interface Marker {
  key: string;
  lat: number;
  lon: number;
  title: string;
  kind: "entry" | "event";
}

export function collectMarkers(timeline: TimelineJson): Marker[] {
  const markers: Marker[] = [];
  for (const entry of timeline.entries) {
    if (entry.location) {
      markers.push({
        key: `entry:${entryKey(entry)}`,
        lat: entry.location.lat,
        lon: entry.location.lon,
        title: `${entry.property_label}: ${entry.object_label}`,
        kind: "entry",
      });
    }
  }
  for (const event of timeline.events) {
    if (event.location) {
      markers.push({
        key: `event:${event.id}`,
        lat: event.location.lat,
        lon: event.location.lon,
        title: event.label,
        kind: "event",
      });
    }
  }
  return markers;
}

interface Viewport {
  minLon: number;
  maxLon: number;
  minLat: number;
  maxLat: number;
}

function viewportFor(markers: Marker[]): Viewport {
  if (!markers.length) return { minLon: -180, maxLon: 180, minLat: -90, maxLat: 90 };
  const lons = markers.map((m) => m.lon);
  const lats = markers.map((m) => m.lat);
  const pad = 6;
  return {
    minLon: Math.max(-180, Math.min(...lons) - pad),
    maxLon: Math.min(180, Math.max(...lons) + pad),
    minLat: Math.max(-90, Math.min(...lats) - pad),
    maxLat: Math.min(90, Math.max(...lats) + pad),
  };
}

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 400;
const HEIGHT = 220;

export function renderMap(container: HTMLElement, markers: Marker[]): void {
  container.textContent = "";
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);
  svg.classList.add("map-canvas");

  const view = viewportFor(markers);
  const x = (lon: number) =>
    ((lon - view.minLon) / Math.max(view.maxLon - view.minLon, 1e-6)) * WIDTH;
  const y = (lat: number) =>
    ((view.maxLat - lat) / Math.max(view.maxLat - view.minLat, 1e-6)) * HEIGHT;

  for (let lon = Math.ceil(view.minLon / 10) * 10; lon <= view.maxLon; lon += 10) {
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(x(lon)));
    line.setAttribute("x2", String(x(lon)));
    line.setAttribute("y1", "0");
    line.setAttribute("y2", String(HEIGHT));
    line.classList.add("graticule");
    svg.appendChild(line);
  }
  for (let lat = Math.ceil(view.minLat / 10) * 10; lat <= view.maxLat; lat += 10) {
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", "0");
    line.setAttribute("x2", String(WIDTH));
    line.setAttribute("y1", String(y(lat)));
    line.setAttribute("y2", String(y(lat)));
    line.classList.add("graticule");
    svg.appendChild(line);
  }

  for (const marker of markers) {
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(x(marker.lon)));
    circle.setAttribute("cy", String(y(marker.lat)));
    circle.setAttribute("r", "5");
    circle.classList.add("marker", `marker-${marker.kind}`);
    circle.dataset.markerKey = marker.key;
    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = marker.title;
    circle.appendChild(title);
    svg.appendChild(circle);
  }
  container.appendChild(svg);
}
