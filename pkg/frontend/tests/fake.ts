/**
 * In-memory ApiClient over a deterministic fixture archive. It mirrors the
 * documented API semantics (conjunctive facets, aggregates under the full
 * filter, ascending-id pagination at 60 per page, zero-retaining theme tree,
 * count-annotated GeoJSON), so tests can compare what the UI renders against
 * a direct client call for the same filter.
 */

import { ApiClient } from "../src/api.js";
import { FilterState } from "../src/state.js";
import {
  Aggregates,
  GeoDoc,
  GeoFeature,
  PhotosResponse,
  RecordDetail,
  ThemeNodeJson,
  ThemesResponse,
} from "../src/types.js";

export interface FixtureRecord {
  id: string;
  caption: string | null;
  photographer: string | null;
  year: number | null;
  month: number | null;
  state: string | null;
  county_fips: string | null;
  county_name: string | null;
  lat: number | null;
  lon: number | null;
  theme_path: string[] | null;
  image_url: string;
  thumb_url: string;
}

const PAGE_SIZE = 60;

const COUNTIES: Record<string, [string, string, number, number][]> = {
  Texas: [
    ["48029", "Bexar", -98.5, 29.4],
    ["48113", "Dallas", -96.8, 32.8],
  ],
  Iowa: [
    ["19099", "Jasper", -93.1, 41.7],
    ["19153", "Polk", -93.6, 41.6],
  ],
  California: [["06037", "Los Angeles", -118.2, 34.1]],
};
const THEMES: string[][] = [
  ["The Land", "Farms", "Corn"],
  ["The Land", "Erosion"],
  ["Work", "Industry"],
  ["People", "Children"],
];

export function makeFixture(): FixtureRecord[] {
  const records: FixtureRecord[] = [];
  let serial = 0;
  const add = (
    photographer: string | null,
    state: string | null,
    countyIndex: number,
    year: number | null,
    themeIndex: number,
    captioned: boolean,
  ) => {
    const id = `f${String(serial++).padStart(4, "0")}`;
    const county = state !== null ? COUNTIES[state][countyIndex % COUNTIES[state].length] : null;
    records.push({
      id,
      caption: captioned ? `Fixture caption ${id} barn field workers` : null,
      photographer,
      year,
      month: year !== null ? (serial % 12) + 1 : null,
      state,
      county_fips: county ? county[0] : null,
      county_name: county ? county[1] : null,
      lat: county ? county[3] + (serial % 5) * 0.05 : null,
      lon: county ? county[2] + (serial % 5) * 0.05 : null,
      theme_path: THEMES[themeIndex % THEMES.length],
      image_url: `https://img.test/full/${id}.jpg`,
      thumb_url: `https://img.test/thumb/${id}.jpg`,
    });
  };

  for (let i = 0; i < 12; i++) add("Russell Lee", "Texas", i, 1937 + (i % 5), i, i % 2 === 0);
  for (let i = 0; i < 8; i++) add("Russell Lee", "Iowa", i, 1936 + (i % 4), i, true);
  for (let i = 0; i < 10; i++) add("Dorothea Lange", "Texas", i, 1938 + (i % 3), i + 1, true);
  for (let i = 0; i < 10; i++) add("Gordon Parks", "California", i, 1940 + (i % 3), i, i % 3 === 0);
  for (let i = 0; i < 12; i++) add("Walker Evans", "Iowa", i, 1936 + (i % 6), i, true);
  // Long tail so the timeline's top-15 cutoff and expander are exercised.
  for (let i = 0; i < 18; i++) {
    add(`Minor Photographer ${String(i).padStart(2, "0")}`, "Iowa", i, 1939, i, false);
  }
  add(null, null, 0, null, 2, true); // no photographer, no geography, no year
  return records;
}

function matches(r: FixtureRecord, f: FilterState): boolean {
  if (f.state !== null && r.state !== f.state) return false;
  if (f.county !== null && r.county_fips !== f.county) return false;
  if (f.photographers.length && (r.photographer === null || !f.photographers.includes(r.photographer))) {
    return false;
  }
  if (f.yearStart !== null || f.yearEnd !== null) {
    if (r.year === null) return false;
    if (f.yearStart !== null && r.year < f.yearStart) return false;
    if (f.yearEnd !== null && r.year > f.yearEnd) return false;
  }
  if (f.theme !== null) {
    if (r.theme_path === null || r.theme_path.length < f.theme.length) return false;
    for (let i = 0; i < f.theme.length; i++) {
      if (r.theme_path[i] !== f.theme[i]) return false;
    }
  }
  return true;
}

function aggregatesOf(records: FixtureRecord[]): Aggregates {
  const agg: Aggregates = {
    total: records.length,
    county_counts: {},
    state_counts: {},
    timeline: {},
    theme_counts: {},
  };
  for (const r of records) {
    if (r.county_fips !== null) {
      agg.county_counts[r.county_fips] = (agg.county_counts[r.county_fips] ?? 0) + 1;
    }
    if (r.state !== null) {
      agg.state_counts[r.state] = (agg.state_counts[r.state] ?? 0) + 1;
    }
    if (r.photographer !== null && r.year !== null) {
      const years = (agg.timeline[r.photographer] ??= {});
      years[String(r.year)] = (years[String(r.year)] ?? 0) + 1;
    }
    if (r.theme_path !== null) {
      for (let depth = 1; depth <= r.theme_path.length; depth++) {
        const key = r.theme_path.slice(0, depth).join("/");
        agg.theme_counts[key] = (agg.theme_counts[key] ?? 0) + 1;
      }
    }
  }
  return agg;
}

function square(cx: number, cy: number, half: number): number[][][] {
  return [
    [
      [cx - half, cy - half],
      [cx + half, cy - half],
      [cx + half, cy + half],
      [cx - half, cy + half],
      [cx - half, cy - half],
    ],
  ];
}

export class FakeClient implements ApiClient {
  records: FixtureRecord[];
  /** Pending gate: when set, requests wait on it (for latest-wins tests). */
  gate: Promise<void> | null = null;
  failNext = 0;
  calls: string[] = [];

  constructor(records: FixtureRecord[] = makeFixture()) {
    this.records = [...records].sort((a, b) => (a.id < b.id ? -1 : 1));
  }

  private async admit(name: string): Promise<void> {
    this.calls.push(name);
    if (this.gate) await this.gate;
    if (this.failNext > 0) {
      this.failNext -= 1;
      throw new Error("synthetic API failure");
    }
  }

  private matching(filter: FilterState): FixtureRecord[] {
    return this.records.filter((r) => matches(r, filter));
  }

  async photos(filter: FilterState): Promise<PhotosResponse> {
    await this.admit("photos");
    const subset = this.matching(filter);
    const start = filter.page * PAGE_SIZE;
    return {
      aggregates: aggregatesOf(subset),
      page: filter.page,
      total_pages: subset.length ? Math.ceil(subset.length / PAGE_SIZE) : 0,
      page_records: subset.slice(start, start + PAGE_SIZE).map((r) => ({
        id: r.id,
        thumb_url: r.thumb_url,
        photographer: r.photographer,
        year: r.year,
        month: r.month,
        state: r.state,
        county_name: r.county_name,
      })),
    };
  }

  async detail(id: string): Promise<RecordDetail> {
    await this.admit("detail");
    const index = this.records.findIndex((r) => r.id === id);
    if (index === -1) throw new Error(`no photo with id '${id}'`);
    const r = this.records[index];
    const pick = (offset: number) => this.records[(index + offset) % this.records.length].id;
    const neighbors: RecordDetail["neighbors"] = {
      visual: [1, 2, 3].map((offset) => ({ id: pick(offset), score: 0.9 - offset * 0.1 })),
    };
    if (r.caption !== null) {
      neighbors.text = [4, 5].map((offset) => ({ id: pick(offset), score: 0.8 - offset * 0.05 }));
    }
    const detail: RecordDetail = { ...r, theme_path: r.theme_path ? [...r.theme_path] : null, neighbors };
    if (r.lat !== null && r.lon !== null) detail.map_point = { lat: r.lat, lon: r.lon };
    return detail;
  }

  async themes(filter: FilterState): Promise<ThemesResponse> {
    await this.admit("themes");
    const counts = aggregatesOf(this.matching(filter)).theme_counts;
    const allPaths = new Set<string>();
    for (const r of this.records) {
      if (r.theme_path === null) continue;
      for (let depth = 1; depth <= r.theme_path.length; depth++) {
        allPaths.add(r.theme_path.slice(0, depth).join("/"));
      }
    }
    const build = (prefix: string[]): ThemeNodeJson[] => {
      const names = new Set<string>();
      for (const key of allPaths) {
        const parts = key.split("/");
        if (parts.length === prefix.length + 1 && prefix.every((p, i) => parts[i] === p)) {
          names.add(parts[parts.length - 1]);
        }
      }
      return [...names].sort().map((name) => {
        const path = [...prefix, name];
        return {
          name,
          count: counts[path.join("/")] ?? 0,
          children: build(path),
        };
      });
    };
    return { children: build([]) };
  }

  async geoCounties(filter: FilterState): Promise<GeoDoc> {
    await this.admit("geoCounties");
    const counts = aggregatesOf(this.matching(filter)).county_counts;
    const features: GeoFeature[] = [];
    for (const list of Object.values(COUNTIES)) {
      for (const [fips, name, lon, lat] of list) {
        features.push({
          type: "Feature",
          properties: { fips, name, count: counts[fips] ?? 0 },
          geometry: { type: "Polygon", coordinates: square(lon, lat, 0.6) },
        });
      }
    }
    return { type: "FeatureCollection", features };
  }

  async geoStates(filter: FilterState): Promise<GeoDoc> {
    await this.admit("geoStates");
    const counts = aggregatesOf(this.matching(filter)).state_counts;
    const centers: Record<string, [number, number]> = {
      Texas: [-97.6, 31.1],
      Iowa: [-93.3, 41.7],
      California: [-118.2, 34.1],
    };
    const features: GeoFeature[] = Object.entries(centers).map(([state, [lon, lat]]) => ({
      type: "Feature",
      properties: { state, count: counts[state] ?? 0 },
      geometry: { type: "Polygon", coordinates: square(lon, lat, 2.2) },
    }));
    return { type: "FeatureCollection", features };
  }
}

/** Drain queued microtasks/timers so store fetch chains settle. */
export async function flush(turns = 6): Promise<void> {
  for (let i = 0; i < turns; i++) {
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}
