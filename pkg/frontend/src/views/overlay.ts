/**
 * Record overlay: the large image over the right-hand views, metadata whose
 * values apply their facet when clicked, both recommendation strips, and a
 * small inlay locator map that keeps the spatial context. Closing leaves the
 * underlying views and FilterState untouched.
 */

import { featureBounds, featurePath, viewBoxFor } from "../geometry.js";
import { Interaction } from "../state.js";
import { GeoDoc, NeighborRef, RecordDetail } from "../types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export function renderOverlay(
  container: HTMLElement,
  detail: RecordDetail | null,
  states: GeoDoc | null,
  dispatch: (action: Interaction) => void,
): void {
  container.replaceChildren();
  if (!detail) {
    container.hidden = true;
    return;
  }
  container.hidden = false;

  const panel = document.createElement("section");
  panel.className = "overlay-panel";
  panel.dataset.id = detail.id;

  const close = document.createElement("button");
  close.type = "button";
  close.className = "overlay-close";
  close.textContent = "×";
  close.addEventListener("click", () => dispatch({ kind: "close-photo" }));
  panel.appendChild(close);

  const figure = document.createElement("figure");
  const img = document.createElement("img");
  img.className = "overlay-image";
  img.src = detail.image_url;
  img.alt = detail.caption ?? detail.id;
  figure.appendChild(img);
  if (detail.caption) {
    const caption = document.createElement("figcaption");
    caption.textContent = detail.caption;
    figure.appendChild(caption);
  }
  panel.appendChild(figure);

  panel.appendChild(metadataList(detail, dispatch));

  const inlay = document.createElement("div");
  inlay.className = "overlay-inlay";
  renderInlayMap(inlay, detail, states);
  panel.appendChild(inlay);

  panel.appendChild(strip("Similar captions", "text", detail.neighbors.text, dispatch));
  panel.appendChild(strip("Visually similar", "visual", detail.neighbors.visual, dispatch));

  container.appendChild(panel);
}

function metadataList(detail: RecordDetail, dispatch: (a: Interaction) => void): HTMLElement {
  const dl = document.createElement("dl");
  dl.className = "overlay-meta";

  const add = (label: string, value: string, action?: Interaction) => {
    const dt = document.createElement("dt");
    dt.textContent = label;
    const dd = document.createElement("dd");
    if (action) {
      const link = document.createElement("button");
      link.type = "button";
      link.className = "facet-link";
      link.dataset.facet = label;
      link.textContent = value;
      link.addEventListener("click", () => dispatch(action));
      dd.appendChild(link);
    } else {
      dd.textContent = value;
    }
    dl.append(dt, dd);
  };

  if (detail.photographer !== null) {
    add("photographer", detail.photographer, {
      kind: "photographer-click",
      name: detail.photographer,
    });
  }
  if (detail.year !== null) {
    const label = detail.month !== null ? `${detail.month}/${detail.year}` : String(detail.year);
    add("date", label, { kind: "timeline-drag", yearStart: detail.year, yearEnd: detail.year });
  }
  if (detail.state !== null) {
    if (detail.county_name !== null && detail.county_fips !== null) {
      add("place", `${detail.county_name}, ${detail.state}`, {
        kind: "county-click",
        state: detail.state,
        county: detail.county_fips,
      });
    } else {
      add("place", detail.state, { kind: "map-click", state: detail.state });
    }
  }
  if (detail.theme_path !== null) {
    add("theme", detail.theme_path.join(" / "), {
      kind: "theme-click",
      path: detail.theme_path,
    });
  }
  return dl;
}

function renderInlayMap(container: HTMLElement, detail: RecordDetail, states: GeoDoc | null): void {
  if (!states || !states.features.length) return;
  const bounds = featureBounds(states.features);
  if (!bounds) return;
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("class", "inlay-map");
  svg.setAttribute("viewBox", viewBoxFor(bounds));
  for (const feature of states.features) {
    const path = document.createElementNS(SVG_NS, "path");
    path.setAttribute("d", featurePath(feature));
    path.setAttribute("class", "region backdrop");
    svg.appendChild(path);
  }
  if (detail.map_point) {
    const dot = document.createElementNS(SVG_NS, "circle");
    dot.setAttribute("cx", String(detail.map_point.lon));
    dot.setAttribute("cy", String(-detail.map_point.lat));
    dot.setAttribute("r", "0.6");
    dot.setAttribute("class", "inlay-point");
    svg.appendChild(dot);
  }
  container.appendChild(svg);
}

function strip(
  title: string,
  method: string,
  neighbors: NeighborRef[] | undefined,
  dispatch: (a: Interaction) => void,
): HTMLElement {
  const section = document.createElement("section");
  section.className = "neighbor-strip";
  section.dataset.method = method;
  const heading = document.createElement("h3");
  heading.textContent = title;
  section.appendChild(heading);
  const row = document.createElement("ul");
  if (neighbors === undefined) {
    const note = document.createElement("p");
    note.className = "strip-empty";
    note.textContent =
      method === "text" ? "No caption to compare." : "No embedding for this photo.";
    section.appendChild(note);
    return section;
  }
  for (const neighbor of neighbors) {
    const item = document.createElement("li");
    const tile = document.createElement("button");
    tile.type = "button";
    tile.className = "neighbor-tile";
    tile.dataset.id = neighbor.id;
    tile.textContent = `${neighbor.id} (${neighbor.score.toFixed(3)})`;
    tile.addEventListener("click", () => dispatch({ kind: "open-photo", id: neighbor.id }));
    item.appendChild(tile);
    row.appendChild(item);
  }
  section.appendChild(row);
  return section;
}
