/** Wire types for the archive exploration API. */

export interface PhotoSummary {
  id: string;
  thumb_url: string;
  photographer: string | null;
  year: number | null;
  month: number | null;
  state: string | null;
  county_name: string | null;
}

export interface Aggregates {
  total: number;
  county_counts: Record<string, number>;
  state_counts: Record<string, number>;
  /** photographer -> year (as string) -> count */
  timeline: Record<string, Record<string, number>>;
  /** "/"-joined theme path -> count */
  theme_counts: Record<string, number>;
}

export interface PhotosResponse {
  aggregates: Aggregates;
  page: number;
  total_pages: number;
  page_records: PhotoSummary[];
}

export interface NeighborRef {
  id: string;
  score: number;
}

export interface RecordDetail {
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
  neighbors: { text?: NeighborRef[]; visual?: NeighborRef[] };
  map_point?: { lat: number; lon: number };
}

export interface ThemeNodeJson {
  name: string;
  count: number;
  children: ThemeNodeJson[];
}

export interface ThemesResponse {
  children: ThemeNodeJson[];
}

export interface GeoFeature {
  type: "Feature";
  properties: { count: number } & Record<string, unknown>;
  geometry: { type: string; coordinates: unknown } | null;
}

export interface GeoDoc {
  type: "FeatureCollection";
  features: GeoFeature[];
}
