/**
 * Photographer-by-year timeline under the current filter. Only the most
 * prolific photographers (top 15 by filtered count, plus any currently
 * selected) are shown until the "other photographers" expander is opened.
 * Dragging across year cells selects an inclusive year range; clicking a
 * photographer's name toggles that facet.
 */

import { Interaction, ViewSelection } from "../state.js";
import { Aggregates } from "../types.js";

export const TOP_PHOTOGRAPHERS = 15;

interface DragState {
  anchor: number;
  current: number;
}

let drag: DragState | null = null;
let expanded = false;

export function collapseTimeline(): void {
  expanded = false;
  drag = null;
}

export function renderTimeline(
  container: HTMLElement,
  selection: ViewSelection,
  aggregates: Aggregates | null,
  dispatch: (action: Interaction) => void,
): void {
  container.replaceChildren();
  if (!aggregates) return;
  const timeline = aggregates.timeline;

  const totals = new Map<string, number>();
  const yearSet = new Set<number>();
  for (const [name, byYear] of Object.entries(timeline)) {
    let sum = 0;
    for (const [year, count] of Object.entries(byYear)) {
      sum += count;
      yearSet.add(Number(year));
    }
    totals.set(name, sum);
  }
  const selected = selection.filter.photographers;
  for (const name of selected) if (!totals.has(name)) totals.set(name, 0);

  const ranked = [...totals.entries()].sort(
    (a, b) => b[1] - a[1] || a[0].localeCompare(b[0]),
  );
  const top = ranked.slice(0, TOP_PHOTOGRAPHERS).map(([name]) => name);
  const visible = new Set(expanded ? ranked.map(([name]) => name) : top);
  for (const name of selected) visible.add(name);
  const hiddenCount = ranked.length - new Set([...top, ...selected]).size;

  const years = [...yearSet].sort((a, b) => a - b);
  if (!years.length && selection.filter.yearStart !== null) {
    years.push(selection.filter.yearStart);
    if (selection.filter.yearEnd !== null) years.push(selection.filter.yearEnd);
  }

  const table = document.createElement("div");
  table.className = "timeline";

  const header = document.createElement("div");
  header.className = "timeline-row timeline-head";
  header.appendChild(cell("timeline-name", ""));
  for (const year of years) {
    const head = cell("year-head", String(year));
    head.dataset.year = String(year);
    markSelected(head, year, selection);
    wireDrag(head, year, dispatch, container);
    header.appendChild(head);
  }
  table.appendChild(header);

  for (const [name] of ranked) {
    if (!visible.has(name)) continue;
    const row = document.createElement("div");
    row.className = "timeline-row";
    row.dataset.photographer = name;
    const label = document.createElement("button");
    label.type = "button";
    label.className = "timeline-name";
    label.textContent = name;
    if (selected.includes(name)) label.classList.add("selected");
    label.addEventListener("click", () =>
      dispatch({ kind: "photographer-click", name }),
    );
    row.appendChild(label);
    const byYear = timeline[name] ?? {};
    for (const year of years) {
      const count = byYear[String(year)] ?? 0;
      const box = cell("year-cell", count > 0 ? String(count) : "");
      box.dataset.year = String(year);
      box.dataset.count = String(count);
      if (count > 0) box.classList.add("occupied");
      markSelected(box, year, selection);
      wireDrag(box, year, dispatch, container);
      row.appendChild(box);
    }
    table.appendChild(row);
  }
  container.appendChild(table);

  if (hiddenCount > 0 && !expanded) {
    const more = document.createElement("button");
    more.type = "button";
    more.className = "other-photographers";
    more.textContent = `other photographers (${hiddenCount})`;
    more.addEventListener("click", () => {
      expanded = true;
      container.dispatchEvent(new CustomEvent("timeline-rerender", { bubbles: true }));
    });
    container.appendChild(more);
  } else if (expanded && ranked.length > TOP_PHOTOGRAPHERS) {
    const fewer = document.createElement("button");
    fewer.type = "button";
    fewer.className = "other-photographers";
    fewer.textContent = "fewer photographers";
    fewer.addEventListener("click", () => {
      expanded = false;
      container.dispatchEvent(new CustomEvent("timeline-rerender", { bubbles: true }));
    });
    container.appendChild(fewer);
  }
}

function cell(className: string, text: string): HTMLSpanElement {
  const span = document.createElement("span");
  span.className = className;
  span.textContent = text;
  return span;
}

function markSelected(el: HTMLElement, year: number, selection: ViewSelection): void {
  const { yearStart, yearEnd } = selection.filter;
  if (yearStart !== null && yearEnd !== null && yearStart <= year && year <= yearEnd) {
    el.classList.add("in-range");
  }
}

function wireDrag(
  el: HTMLElement,
  year: number,
  dispatch: (action: Interaction) => void,
  container: HTMLElement,
): void {
  el.addEventListener("mousedown", (event) => {
    event.preventDefault();
    drag = { anchor: year, current: year };
    container.classList.add("dragging");
  });
  el.addEventListener("mouseenter", () => {
    if (drag) drag.current = year;
  });
  el.addEventListener("mouseup", () => {
    if (!drag) return;
    const { anchor } = drag;
    drag = null;
    container.classList.remove("dragging");
    dispatch({ kind: "timeline-drag", yearStart: Math.min(anchor, year), yearEnd: Math.max(anchor, year) });
  });
}
