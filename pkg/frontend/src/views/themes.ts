/**
 * Single-level treemap over the children of the current theme prefix.
 * Clicking a tile descends (sets the prefix); the breadcrumb climbs back up.
 * Zero-count nodes stay visible as empty tiles so the hierarchy never hides.
 */

import { Interaction, ViewSelection } from "../state.js";
import { ThemeNodeJson, ThemesResponse } from "../types.js";

export function renderThemes(
  container: HTMLElement,
  selection: ViewSelection,
  themes: ThemesResponse | null,
  dispatch: (action: Interaction) => void,
): void {
  container.replaceChildren();
  if (!themes) {
    container.textContent = "No theme data.";
    return;
  }
  const prefix = selection.filter.theme ?? [];
  const children = nodesAt(themes, prefix);

  const crumb = document.createElement("nav");
  crumb.className = "theme-crumb";
  crumb.appendChild(crumbLink("All themes", [], dispatch));
  prefix.forEach((name, i) => {
    crumb.appendChild(document.createTextNode(" / "));
    crumb.appendChild(crumbLink(name, prefix.slice(0, i + 1), dispatch));
  });
  container.appendChild(crumb);

  const board = document.createElement("div");
  board.className = "treemap";
  const total = children.reduce((sum, node) => sum + node.count, 0);
  for (const node of children) {
    const tile = document.createElement("button");
    tile.type = "button";
    tile.className = "theme-tile";
    tile.dataset.theme = [...prefix, node.name].join("/");
    tile.dataset.count = String(node.count);
    const share = total > 0 ? node.count / total : 0;
    tile.style.flexGrow = String(Math.max(share * 100, 1));
    tile.innerHTML = "";
    const label = document.createElement("span");
    label.className = "theme-name";
    label.textContent = node.name;
    const count = document.createElement("span");
    count.className = "theme-count";
    count.textContent = String(node.count);
    tile.append(label, count);
    tile.addEventListener("click", () =>
      dispatch({ kind: "theme-click", path: [...prefix, node.name] }),
    );
    board.appendChild(tile);
  }
  if (!children.length) {
    const leaf = document.createElement("p");
    leaf.className = "theme-leaf";
    leaf.textContent = "No narrower themes.";
    board.appendChild(leaf);
  }
  container.appendChild(board);
}

function nodesAt(themes: ThemesResponse, prefix: string[]): ThemeNodeJson[] {
  let nodes = themes.children;
  for (const name of prefix) {
    const next = nodes.find((node) => node.name === name);
    if (!next) return [];
    nodes = next.children;
  }
  return nodes;
}

function crumbLink(
  label: string,
  path: string[],
  dispatch: (action: Interaction) => void,
): HTMLButtonElement {
  const link = document.createElement("button");
  link.type = "button";
  link.className = "crumb";
  link.textContent = label;
  link.addEventListener("click", () => dispatch({ kind: "theme-click", path }));
  return link;
}
