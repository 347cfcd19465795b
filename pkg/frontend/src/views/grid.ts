/**
 * Result grid: one page of thumbnails with minimal metadata, a running total,
 * pagination, and the clear control. Clicking a photo opens the overlay.
 */

import { Interaction, ViewSelection } from "../state.js";
import { PhotosResponse } from "../types.js";

export function renderGrid(
  container: HTMLElement,
  selection: ViewSelection,
  photos: PhotosResponse | null,
  dispatch: (action: Interaction) => void,
): void {
  container.replaceChildren();
  if (!photos) {
    container.textContent = "Loading…";
    return;
  }

  const head = document.createElement("header");
  head.className = "grid-head";
  const total = document.createElement("span");
  total.className = "grid-total";
  total.dataset.total = String(photos.aggregates.total);
  total.textContent = `${photos.aggregates.total.toLocaleString()} photographs`;
  const clear = document.createElement("button");
  clear.type = "button";
  clear.className = "clear-filter";
  clear.textContent = "Clear";
  clear.addEventListener("click", () => dispatch({ kind: "clear" }));
  head.append(total, clear);
  container.appendChild(head);

  const list = document.createElement("ul");
  list.className = "photo-grid";
  for (const record of photos.page_records) {
    const item = document.createElement("li");
    item.className = "photo-cell";
    item.dataset.id = record.id;
    const button = document.createElement("button");
    button.type = "button";
    button.addEventListener("click", () => dispatch({ kind: "open-photo", id: record.id }));
    const img = document.createElement("img");
    img.src = record.thumb_url;
    img.alt = record.id;
    img.loading = "lazy";
    const meta = document.createElement("span");
    meta.className = "photo-meta";
    meta.textContent = [
      record.photographer ?? "unknown",
      record.month !== null && record.year !== null
        ? `${record.month}/${record.year}`
        : record.year !== null
          ? String(record.year)
          : "",
      record.county_name !== null && record.state !== null
        ? `${record.county_name}, ${record.state}`
        : (record.state ?? ""),
    ]
      .filter(Boolean)
      .join(" · ");
    button.append(img, meta);
    item.appendChild(button);
    list.appendChild(item);
  }
  container.appendChild(list);

  const pager = document.createElement("nav");
  pager.className = "pager";
  const prev = document.createElement("button");
  prev.type = "button";
  prev.className = "page-prev";
  prev.textContent = "‹ prev";
  prev.disabled = selection.filter.page <= 0;
  prev.addEventListener("click", () =>
    dispatch({ kind: "page", page: selection.filter.page - 1 }),
  );
  const label = document.createElement("span");
  label.className = "page-label";
  label.textContent = photos.total_pages
    ? `page ${photos.page + 1} of ${photos.total_pages}`
    : "no results";
  const next = document.createElement("button");
  next.type = "button";
  next.className = "page-next";
  next.textContent = "next ›";
  next.disabled = photos.page + 1 >= photos.total_pages;
  next.addEventListener("click", () =>
    dispatch({ kind: "page", page: selection.filter.page + 1 }),
  );
  pager.append(prev, label, next);
  container.appendChild(pager);
}
