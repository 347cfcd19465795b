/**
 * Fixed-zoom choropleth. With no state selected it shows the state layer;
 * clicking a state sets the state facet and the map zooms to that state's
 * geometry and switches to its counties. All geometry and every count come
 * from the server's count-annotated GeoJSON for the current filter.
 */

import { featureBounds, featurePath, fillFor, maxCount, viewBoxFor } from "../geometry.js";
import { Interaction, ViewSelection } from "../state.js";
import { GeoDoc, GeoFeature } from "../types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export function renderMap(
  container: HTMLElement,
  selection: ViewSelection,
  counties: GeoDoc | null,
  states: GeoDoc | null,
  dispatch: (action: Interaction) => void,
): void {
  container.replaceChildren();
  if (!states) {
    container.textContent = "No geometry loaded.";
    return;
  }
  const selectedState = selection.filter.state;
  const zoomed = selectedState !== null && counties !== null;
  const layer = zoomed ? counties! : states;
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("class", "choropleth");
  svg.dataset.layer = zoomed ? "counties" : "states";

  let focus = layer.features;
  if (zoomed) {
    const stateFeature = states.features.find(
      (f) => f.properties.state === selectedState,
    );
    if (stateFeature) focus = [stateFeature];
  }
  const bounds = featureBounds(focus.length ? focus : layer.features);
  if (!bounds) {
    container.textContent = "No geometry loaded.";
    return;
  }
  svg.setAttribute("viewBox", viewBoxFor(bounds));
  svg.setAttribute("preserveAspectRatio", "xMidYMid meet");

  const max = maxCount(layer);
  for (const feature of layer.features) {
    svg.appendChild(featureElement(feature, max, selection, dispatch));
  }
  container.appendChild(svg);
}

function featureElement(
  feature: GeoFeature,
  max: number,
  selection: ViewSelection,
  dispatch: (action: Interaction) => void,
): SVGPathElement {
  const path = document.createElementNS(SVG_NS, "path");
  path.setAttribute("d", featurePath(feature));
  path.setAttribute("fill", fillFor(feature.properties.count, max));
  path.setAttribute("class", "region");
  const count = feature.properties.count;
  const fips = feature.properties.fips as string | undefined;
  const state = feature.properties.state as string | undefined;
  if (fips !== undefined) {
    path.dataset.fips = fips;
    path.dataset.count = String(count);
    const name = (feature.properties.name as string | undefined) ?? fips;
    appendTitle(path, `${name}: ${count}`);
    path.addEventListener("click", () => {
      if (selection.filter.state !== null) {
        dispatch({ kind: "county-click", state: selection.filter.state, county: fips });
      }
    });
  } else if (state !== undefined) {
    path.dataset.state = state;
    path.dataset.count = String(count);
    appendTitle(path, `${state}: ${count}`);
    path.addEventListener("click", () => dispatch({ kind: "map-click", state }));
  }
  return path;
}

function appendTitle(path: SVGPathElement, text: string): void {
  const title = document.createElementNS(SVG_NS, "title");
  title.textContent = text;
  path.appendChild(title);
}
