/**
 * Orchestrates interactions: apply the pure selection transition, re-fetch
 * every visible view with the same FilterState, and commit atomically.
 *
 * Latest filter wins: each refresh takes a token and a response only commits
 * while its token is still current, so a slow stale response can never
 * overwrite a newer one. On API failure the previous selection and data are
 * retained and an error banner message is set instead.
 */

import { ApiClient } from "./api.js";
import {
  INITIAL_SELECTION,
  Interaction,
  ViewSelection,
  applySelection,
  filtersEqual,
  selectionsEqual,
} from "./state.js";
import { GeoDoc, PhotosResponse, RecordDetail, ThemesResponse } from "./types.js";

export interface AppData {
  photos: PhotosResponse | null;
  themes: ThemesResponse | null;
  counties: GeoDoc | null;
  states: GeoDoc | null;
  detail: RecordDetail | null;
  error: string | null;
}

export type Listener = (store: Store) => void;

export class Store {
  selection: ViewSelection = INITIAL_SELECTION;
  data: AppData = {
    photos: null,
    themes: null,
    counties: null,
    states: null,
    detail: null,
    error: null,
  };

  /** Per-photo map_point lookups for the points view (null = no coordinates). */
  pointCache: Record<string, { lat: number; lon: number } | null> = {};

  private listeners: Listener[] = [];
  private token = 0;
  private detailToken = 0;

  constructor(private client: ApiClient) {}

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private notify(): void {
    for (const listener of [...this.listeners]) listener(this);
  }

  /** Load the selection encoded in a URL (initial boot and popstate). */
  async restore(selection: ViewSelection): Promise<void> {
    this.selection = selection;
    const jobs: Promise<void>[] = [this.refresh()];
    if (selection.overlayId !== null) jobs.push(this.loadDetail(selection.overlayId));
    await Promise.all(jobs);
  }

  async apply(action: Interaction): Promise<void> {
    const previous = this.selection;
    const next = applySelection(previous, action);
    if (selectionsEqual(next, previous)) return; // idempotent: no duplicate fetches
    this.selection = next;

    const jobs: Promise<void>[] = [];
    if (!filtersEqual(next.filter, previous.filter)) {
      jobs.push(this.refresh(previous));
    }
    if (next.overlayId !== previous.overlayId) {
      if (next.overlayId === null) {
        this.data.detail = null; // closing leaves every other view untouched
      } else {
        jobs.push(this.loadDetail(next.overlayId));
      }
    }
    this.notify();
    await Promise.all(jobs);
  }

  private async refresh(rollback?: ViewSelection): Promise<void> {
    const token = ++this.token;
    const filter = this.selection.filter;
    try {
      const [photos, themes, counties, states] = await Promise.all([
        this.client.photos(filter),
        this.client.themes(filter),
        this.client.geoCounties(filter),
        this.client.geoStates(filter),
      ]);
      if (token !== this.token) return; // a newer filter superseded this fetch
      this.data = { ...this.data, photos, themes, counties, states, error: null };
      this.notify();
    } catch (error) {
      if (token !== this.token) return;
      if (rollback !== undefined) this.selection = rollback;
      this.data = { ...this.data, error: error instanceof Error ? error.message : String(error) };
      this.notify();
    }
  }

  /** Fetch coordinates for the given page records once each (points view). */
  async ensurePoints(ids: string[]): Promise<void> {
    const missing = ids.filter((id) => !(id in this.pointCache));
    if (!missing.length) return;
    await Promise.all(
      missing.map(async (id) => {
        try {
          const detail = await this.client.detail(id);
          this.pointCache[id] = detail.map_point ?? null;
        } catch {
          this.pointCache[id] = null;
        }
      }),
    );
    this.notify();
  }

  private async loadDetail(id: string): Promise<void> {
    const token = ++this.detailToken;
    try {
      const detail = await this.client.detail(id);
      if (token !== this.detailToken || this.selection.overlayId !== id) return;
      this.data = { ...this.data, detail, error: null };
      this.notify();
    } catch (error) {
      if (token !== this.detailToken) return;
      this.selection = { ...this.selection, overlayId: null };
      this.data = { ...this.data, error: error instanceof Error ? error.message : String(error) };
      this.notify();
    }
  }
}
