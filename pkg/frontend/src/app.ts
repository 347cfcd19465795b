/**
 * App shell: builds the layout, renders every view from the store, and keeps
 * the URL in lockstep with the selection so any exploration state is a link.
 */

import { ApiClient } from "./api.js";
import { Interaction, decodeSelection, encodeSelection } from "./state.js";
import { Store } from "./store.js";
import { renderGrid } from "./views/grid.js";
import { renderMap } from "./views/map.js";
import { renderOverlay } from "./views/overlay.js";
import { renderPoints } from "./views/points.js";
import { renderThemes } from "./views/themes.js";
import { renderTimeline } from "./views/timeline.js";

const VIEWS = ["map", "points", "themes"] as const;

export function mountApp(root: HTMLElement, client: ApiClient, win: Window): Store {
  root.innerHTML = `
    <div class="banner" hidden></div>
    <div class="layout">
      <aside class="grid-pane"></aside>
      <section class="main-pane">
        <nav class="view-switch">
          ${VIEWS.map(
            (view) => `<button type="button" class="switch" data-view="${view}">${view}</button>`,
          ).join("")}
        </nav>
        <div class="main-view"></div>
        <div class="timeline-pane"></div>
      </section>
    </div>
    <div class="overlay-host" hidden></div>
  `;
  const banner = root.querySelector<HTMLElement>(".banner")!;
  const gridPane = root.querySelector<HTMLElement>(".grid-pane")!;
  const mainView = root.querySelector<HTMLElement>(".main-view")!;
  const timelinePane = root.querySelector<HTMLElement>(".timeline-pane")!;
  const overlayHost = root.querySelector<HTMLElement>(".overlay-host")!;

  const store = new Store(client);
  const dispatch = (action: Interaction) => {
    void store.apply(action);
  };

  for (const button of root.querySelectorAll<HTMLButtonElement>(".switch")) {
    button.addEventListener("click", () =>
      dispatch({ kind: "view", view: button.dataset.view as (typeof VIEWS)[number] }),
    );
  }
  timelinePane.addEventListener("timeline-rerender", () => render(store));

  let syncingFromUrl = false;
  win.addEventListener("popstate", () => {
    syncingFromUrl = true;
    void store.restore(decodeSelection(win.location.search)).finally(() => {
      syncingFromUrl = false;
    });
  });

  function syncUrl(): void {
    const encoded = encodeSelection(store.selection);
    const current = win.location.search;
    if (!syncingFromUrl && encoded !== current) {
      win.history.pushState(null, "", win.location.pathname + encoded);
    }
  }

  function render(current: Store): void {
    const { selection, data } = current;
    banner.hidden = data.error === null;
    banner.textContent = data.error ?? "";

    for (const button of root.querySelectorAll<HTMLButtonElement>(".switch")) {
      button.classList.toggle("active", button.dataset.view === selection.view);
    }

    renderGrid(gridPane, selection, data.photos, dispatch);
    renderTimeline(timelinePane, selection, data.photos?.aggregates ?? null, dispatch);
    if (selection.view === "map") {
      renderMap(mainView, selection, data.counties, data.states, dispatch);
    } else if (selection.view === "points") {
      const ids = data.photos?.page_records.map((r) => r.id) ?? [];
      void current.ensurePoints(ids);
      renderPoints(mainView, data.photos, data.states, current.pointCache, dispatch);
    } else {
      renderThemes(mainView, selection, data.themes, dispatch);
    }
    renderOverlay(overlayHost, selection.overlayId ? data.detail : null, data.states, dispatch);
    syncUrl();
  }

  store.subscribe(render);
  void store.restore(decodeSelection(win.location.search));
  return store;
}
