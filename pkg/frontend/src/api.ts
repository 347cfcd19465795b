/** API client. Every view reads through this; nothing computes its own filtering. */

import { FilterState, filterParams } from "./state.js";
import { GeoDoc, PhotosResponse, RecordDetail, ThemesResponse } from "./types.js";

export interface ApiClient {
  photos(filter: FilterState): Promise<PhotosResponse>;
  detail(id: string): Promise<RecordDetail>;
  themes(filter: FilterState): Promise<ThemesResponse>;
  geoCounties(filter: FilterState): Promise<GeoDoc>;
  geoStates(filter: FilterState): Promise<GeoDoc>;
}

export class HttpClient implements ApiClient {
  constructor(private base: string = "") {}

  private async get<T>(path: string, filter?: FilterState): Promise<T> {
    const query = filter ? new URLSearchParams(filterParams(filter)).toString() : "";
    const url = this.base + path + (query ? `?${query}` : "");
    const response = await fetch(url);
    if (!response.ok) {
      let message = `${response.status} on ${path}`;
      try {
        const body = await response.json();
        if (body && typeof body.message === "string") message = body.message;
      } catch {
        // keep the status message
      }
      throw new Error(message);
    }
    return (await response.json()) as T;
  }

  photos(filter: FilterState): Promise<PhotosResponse> {
    return this.get("/api/photos", filter);
  }

  detail(id: string): Promise<RecordDetail> {
    return this.get(`/api/photos/${encodeURIComponent(id)}`);
  }

  themes(filter: FilterState): Promise<ThemesResponse> {
    return this.get("/api/themes", filter);
  }

  geoCounties(filter: FilterState): Promise<GeoDoc> {
    return this.get("/geo/counties", filter);
  }

  geoStates(filter: FilterState): Promise<GeoDoc> {
    return this.get("/geo/states", filter);
  }
}
