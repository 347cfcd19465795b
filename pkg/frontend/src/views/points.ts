/**
 * Granular points map: the current result page's records as dots over a
 * lightly shaded state backdrop. The grid payload deliberately omits
 * coordinates, so each page record's point comes from its detail endpoint
 * (cached by id in the store).
 */

import { featureBounds, featurePath, fillFor, maxCount, viewBoxFor } from "../geometry.js";
import { Interaction } from "../state.js";
import { GeoDoc, PhotosResponse } from "../types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export function renderPoints(
  container: HTMLElement,
  photos: PhotosResponse | null,
  states: GeoDoc | null,
  pointCache: Record<string, { lat: number; lon: number } | null>,
  dispatch: (action: Interaction) => void,
): void {
  container.replaceChildren();
  if (!states) {
    container.textContent = "No geometry loaded.";
    return;
  }
  const bounds = featureBounds(states.features);
  if (!bounds) {
    container.textContent = "No geometry loaded.";
    return;
  }
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("class", "choropleth points");
  svg.setAttribute("viewBox", viewBoxFor(bounds));
  svg.setAttribute("preserveAspectRatio", "xMidYMid meet");

  const max = maxCount(states);
  for (const feature of states.features) {
    const path = document.createElementNS(SVG_NS, "path");
    path.setAttribute("d", featurePath(feature));
    path.setAttribute("fill", fillFor(feature.properties.count, max));
    path.setAttribute("class", "region backdrop");
    svg.appendChild(path);
  }

  for (const record of photos?.page_records ?? []) {
    const point = pointCache[record.id];
    if (!point) continue;
    const dot = document.createElementNS(SVG_NS, "circle");
    dot.setAttribute("cx", String(point.lon));
    dot.setAttribute("cy", String(-point.lat));
    dot.setAttribute("r", "0.35");
    dot.setAttribute("class", "photo-point");
    dot.dataset.id = record.id;
    dot.addEventListener("click", () => dispatch({ kind: "open-photo", id: record.id }));
    svg.appendChild(dot);
  }
  container.appendChild(svg);
}
