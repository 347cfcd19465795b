/**
 * The shared selection: one FilterState drives every linked view, plus the
 * active main view and the optional photo overlay. All transitions are pure
 * functions so the scenario tests can exercise them directly, and the URL
 * codec round-trips the whole selection so any exploration state is a link.
 */

export type MainView = "map" | "points" | "themes";

export interface FilterState {
  state: string | null;
  county: string | null;
  /** sorted, unique; empty means all photographers */
  photographers: string[];
  yearStart: number | null;
  yearEnd: number | null;
  /** theme path prefix, root first */
  theme: string[] | null;
  page: number;
}

export interface ViewSelection {
  view: MainView;
  filter: FilterState;
  overlayId: string | null;
}

export const EMPTY_FILTER: FilterState = {
  state: null,
  county: null,
  photographers: [],
  yearStart: null,
  yearEnd: null,
  theme: null,
  page: 0,
};

export const INITIAL_SELECTION: ViewSelection = {
  view: "map",
  filter: EMPTY_FILTER,
  overlayId: null,
};

export type Interaction =
  | { kind: "map-click"; state: string }
  | { kind: "county-click"; state: string; county: string }
  | { kind: "timeline-drag"; yearStart: number; yearEnd: number }
  | { kind: "photographer-click"; name: string }
  | { kind: "theme-click"; path: string[] }
  | { kind: "page"; page: number }
  | { kind: "view"; view: MainView }
  | { kind: "open-photo"; id: string }
  | { kind: "close-photo" }
  | { kind: "clear" };

export function filtersEqual(a: FilterState, b: FilterState): boolean {
  return (
    a.state === b.state &&
    a.county === b.county &&
    a.photographers.length === b.photographers.length &&
    a.photographers.every((name, i) => name === b.photographers[i]) &&
    a.yearStart === b.yearStart &&
    a.yearEnd === b.yearEnd &&
    (a.theme === null) === (b.theme === null) &&
    (a.theme === null || (a.theme.length === b.theme!.length &&
      a.theme.every((part, i) => part === b.theme![i]))) &&
    a.page === b.page
  );
}

export function selectionsEqual(a: ViewSelection, b: ViewSelection): boolean {
  return a.view === b.view && a.overlayId === b.overlayId && filtersEqual(a.filter, b.filter);
}

/** Apply one interaction; facet changes reset the page to 0. */
export function applySelection(sel: ViewSelection, action: Interaction): ViewSelection {
  const f = sel.filter;
  switch (action.kind) {
    case "map-click": {
      if (f.state === action.state) return sel; // re-click is a no-op
      return withFilter(sel, { ...f, state: action.state, county: null, page: 0 });
    }
    case "county-click": {
      if (f.state === action.state && f.county === action.county) return sel;
      return withFilter(sel, { ...f, state: action.state, county: action.county, page: 0 });
    }
    case "timeline-drag": {
      const lo = Math.min(action.yearStart, action.yearEnd);
      const hi = Math.max(action.yearStart, action.yearEnd);
      if (f.yearStart === lo && f.yearEnd === hi) return sel;
      return withFilter(sel, { ...f, yearStart: lo, yearEnd: hi, page: 0 });
    }
    case "photographer-click": {
      const names = f.photographers.includes(action.name)
        ? f.photographers.filter((n) => n !== action.name)
        : [...f.photographers, action.name].sort();
      return withFilter(sel, { ...f, photographers: names, page: 0 });
    }
    case "theme-click": {
      const path = action.path.length ? [...action.path] : null;
      return withFilter(sel, { ...f, theme: path, page: 0 });
    }
    case "page":
      return withFilter(sel, { ...f, page: Math.max(0, action.page) });
    case "view":
      return sel.view === action.view ? sel : { ...sel, view: action.view };
    case "open-photo":
      return sel.overlayId === action.id ? sel : { ...sel, overlayId: action.id };
    case "close-photo":
      return sel.overlayId === null ? sel : { ...sel, overlayId: null };
    case "clear":
      return { ...sel, filter: EMPTY_FILTER, overlayId: null };
  }
}

function withFilter(sel: ViewSelection, filter: FilterState): ViewSelection {
  return { ...sel, filter };
}

/** Query parameters understood by /api/photos, /api/themes, and /geo/*. */
export function filterParams(filter: FilterState): [string, string][] {
  const params: [string, string][] = [];
  if (filter.state !== null) params.push(["state", filter.state]);
  if (filter.county !== null) params.push(["county", filter.county]);
  for (const name of filter.photographers) params.push(["photographer", name]);
  if (filter.yearStart !== null) params.push(["year_start", String(filter.yearStart)]);
  if (filter.yearEnd !== null) params.push(["year_end", String(filter.yearEnd)]);
  if (filter.theme !== null) params.push(["theme", filter.theme.join("/")]);
  if (filter.page !== 0) params.push(["page", String(filter.page)]);
  return params;
}

/** The browser URL carries the filter params plus `view` and `photo`. */
export function encodeSelection(sel: ViewSelection): string {
  const params = new URLSearchParams(filterParams(sel.filter));
  if (sel.view !== "map") params.set("view", sel.view);
  if (sel.overlayId !== null) params.set("photo", sel.overlayId);
  const text = params.toString();
  return text ? `?${text}` : "";
}

export function decodeSelection(query: string): ViewSelection {
  const params = new URLSearchParams(query);
  const themeRaw = params.get("theme");
  const viewRaw = params.get("view");
  const view: MainView =
    viewRaw === "points" || viewRaw === "themes" ? viewRaw : "map";
  return {
    view,
    overlayId: params.get("photo"),
    filter: {
      state: params.get("state"),
      county: params.get("county"),
      photographers: params.getAll("photographer").filter(Boolean).sort(),
      yearStart: intOrNull(params.get("year_start")),
      yearEnd: intOrNull(params.get("year_end")),
      theme: themeRaw ? themeRaw.split("/").filter(Boolean) : null,
      page: intOrNull(params.get("page")) ?? 0,
    },
  };
}

function intOrNull(raw: string | null): number | null {
  if (raw === null || raw === "") return null;
  const value = Number.parseInt(raw, 10);
  return Number.isNaN(value) ? null : value;
}
