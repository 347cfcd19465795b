import { describe, expect, it } from "vitest";

import { Store } from "../src/store.js";
import { INITIAL_SELECTION } from "../src/state.js";
import { FakeClient, flush } from "./fake.js";

describe("Store", () => {
  it("loads every view for the initial selection", async () => {
    const client = new FakeClient();
    const store = new Store(client);
    await store.restore(INITIAL_SELECTION);
    expect(store.data.photos?.aggregates.total).toBe(client.records.length);
    expect(store.data.themes?.children.length).toBeGreaterThan(0);
    expect(store.data.states?.features.length).toBeGreaterThan(0);
    expect(store.data.counties?.features.length).toBeGreaterThan(0);
  });

  it("re-fetches all views with the same filter on interaction", async () => {
    const client = new FakeClient();
    const store = new Store(client);
    await store.restore(INITIAL_SELECTION);
    client.calls.length = 0;
    await store.apply({ kind: "map-click", state: "Texas" });
    expect(client.calls.sort()).toEqual(["geoCounties", "geoStates", "photos", "themes"]);
    const texans = client.records.filter((r) => r.state === "Texas").length;
    expect(store.data.photos?.aggregates.total).toBe(texans);
  });

  it("identical interactions trigger no duplicate fetches", async () => {
    const client = new FakeClient();
    const store = new Store(client);
    await store.restore(INITIAL_SELECTION);
    await store.apply({ kind: "timeline-drag", yearStart: 1939, yearEnd: 1941 });
    client.calls.length = 0;
    await store.apply({ kind: "timeline-drag", yearStart: 1939, yearEnd: 1941 });
    expect(client.calls).toEqual([]);
  });

  it("view switching alone does not re-fetch", async () => {
    const client = new FakeClient();
    const store = new Store(client);
    await store.restore(INITIAL_SELECTION);
    client.calls.length = 0;
    await store.apply({ kind: "view", view: "themes" });
    expect(client.calls).toEqual([]);
  });

  it("keeps the previous state and raises a banner on API failure", async () => {
    const client = new FakeClient();
    const store = new Store(client);
    await store.restore(INITIAL_SELECTION);
    const before = store.data.photos;
    client.failNext = 4; // all four view fetches fail
    await store.apply({ kind: "map-click", state: "Texas" });
    expect(store.data.error).toContain("synthetic");
    expect(store.selection.filter.state).toBeNull(); // previous state retained
    expect(store.data.photos).toBe(before);
  });

  it("latest filter wins over a slow stale response", async () => {
    const client = new FakeClient();
    const store = new Store(client);
    await store.restore(INITIAL_SELECTION);

    let release!: () => void;
    client.gate = new Promise<void>((resolve) => {
      release = resolve;
    });
    const slow = store.apply({ kind: "map-click", state: "Iowa" });
    client.gate = null;
    await store.apply({ kind: "map-click", state: "Texas" });
    const texans = client.records.filter((r) => r.state === "Texas").length;
    expect(store.data.photos?.aggregates.total).toBe(texans);
    release();
    await slow;
    await flush();
    // The stale Iowa response must not have overwritten the Texas data.
    expect(store.data.photos?.aggregates.total).toBe(texans);
    expect(store.selection.filter.state).toBe("Texas");
  });

  it("caches map points once per photo id", async () => {
    const client = new FakeClient();
    const store = new Store(client);
    await store.restore(INITIAL_SELECTION);
    const ids = store.data.photos!.page_records.slice(0, 5).map((r) => r.id);
    client.calls.length = 0;
    await store.ensurePoints(ids);
    expect(client.calls.filter((c) => c === "detail").length).toBe(5);
    client.calls.length = 0;
    await store.ensurePoints(ids);
    expect(client.calls).toEqual([]);
  });
});
