/** Linear lon/lat projection and SVG path building for fixed-zoom GeoJSON maps. */

import { GeoDoc, GeoFeature } from "./types.js";

export interface Bounds {
  minX: number;
  minY: number;
  maxX: number;
  maxY: number;
}

type Ring = [number, number][];

function rings(feature: GeoFeature): Ring[] {
  const geometry = feature.geometry;
  if (!geometry) return [];
  if (geometry.type === "Polygon") return geometry.coordinates as Ring[];
  if (geometry.type === "MultiPolygon") {
    return (geometry.coordinates as Ring[][]).flat();
  }
  return [];
}

export function featureBounds(features: GeoFeature[]): Bounds | null {
  let bounds: Bounds | null = null;
  for (const feature of features) {
    for (const ring of rings(feature)) {
      for (const [x, y] of ring) {
        if (bounds === null) {
          bounds = { minX: x, minY: y, maxX: x, maxY: y };
        } else {
          bounds.minX = Math.min(bounds.minX, x);
          bounds.minY = Math.min(bounds.minY, y);
          bounds.maxX = Math.max(bounds.maxX, x);
          bounds.maxY = Math.max(bounds.maxY, y);
        }
      }
    }
  }
  return bounds;
}

/** SVG viewBox string for lon/lat bounds (y axis flipped), with padding. */
export function viewBoxFor(bounds: Bounds, pad = 1.0): string {
  const width = bounds.maxX - bounds.minX + 2 * pad;
  const height = bounds.maxY - bounds.minY + 2 * pad;
  return `${bounds.minX - pad} ${-bounds.maxY - pad} ${width} ${height}`;
}

/** Path data in projected coordinates (x = lon, y = -lat). */
export function featurePath(feature: GeoFeature): string {
  const parts: string[] = [];
  for (const ring of rings(feature)) {
    if (!ring.length) continue;
    const [x0, y0] = ring[0];
    parts.push(`M${x0},${-y0}`);
    for (let i = 1; i < ring.length; i++) {
      const [x, y] = ring[i];
      parts.push(`L${x},${-y}`);
    }
    parts.push("Z");
  }
  return parts.join("");
}

export function maxCount(doc: GeoDoc): number {
  let max = 0;
  for (const feature of doc.features) max = Math.max(max, feature.properties.count);
  return max;
}

/** Choropleth fill: white through a fixed blue, linear in count/max. */
export function fillFor(count: number, max: number): string {
  if (max <= 0 || count <= 0) return "#f3f2ee";
  const t = Math.min(1, count / max);
  const channel = Math.round(235 - t * 150);
  return `rgb(${channel - 20},${channel},235)`;
}
