import { describe, expect, it } from "vitest";

import {
  DEFAULT_STATE,
  fromQuery,
  normalize,
  sameState,
  toQuery,
  VIEWS,
} from "../src/state.js";
import type { QueryState } from "../src/state.js";

function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

function randomState(rand: () => number): QueryState {
  const pick = <T>(xs: readonly T[]) => xs[Math.floor(rand() * xs.length)] as T;
  const day = () =>
    `2021-${String(1 + Math.floor(rand() * 12)).padStart(2, "0")}-${String(
      1 + Math.floor(rand() * 28),
    ).padStart(2, "0")}`;
  return normalize({
    view: pick(VIEWS),
    keyword: pick(["", "festival", "terrible news", "趋势"]),
    from: rand() < 0.5 ? "" : day(),
    to: rand() < 0.5 ? "" : day(),
    media: pick(["", "government", "mass", "social"]),
    region: pick(["", "hubei", "guangdong"]),
    page: 1 + Math.floor(rand() * 9),
    docId: rand() < 0.5 ? "" : "abc123def4567890",
  });
}

describe("query state", () => {
  it("round-trips through the URL for 300 random states", () => {
    const rand = mulberry32(42);
    for (let i = 0; i < 300; i++) {
      const state = randomState(rand);
      const back = fromQuery(toQuery(state));
      expect(back).toEqual(state);
    }
  });

  it("round-trips with a leading question mark", () => {
    const state = normalize({
      ...DEFAULT_STATE,
      keyword: "festival",
      view: "trends",
      from: "2021-04-08",
      to: "2021-04-11",
    });
    expect(fromQuery("?" + toQuery(state))).toEqual(state);
  });

  it("keeps defaults out of the query string", () => {
    expect(toQuery({ ...DEFAULT_STATE })).toBe("");
    expect(fromQuery("")).toEqual(DEFAULT_STATE);
  });

  it("swaps an inverted date range", () => {
    const state = normalize({ ...DEFAULT_STATE, from: "2021-05-02", to: "2021-05-01" });
    expect(state.from).toBe("2021-05-01");
    expect(state.to).toBe("2021-05-02");
  });

  it("rejects malformed dates and bad pages", () => {
    const state = fromQuery("from=yesterday&to=2021-13-99x&page=-3");
    expect(state.from).toBe("");
    expect(state.to).toBe("");
    expect(state.page).toBe(1);
  });

  it("falls back to results for unknown views and empty detail ids", () => {
    expect(fromQuery("view=dashboard").view).toBe("results");
    expect(fromQuery("view=detail").view).toBe("results");
    expect(fromQuery("view=detail&doc=x1").view).toBe("detail");
  });

  it("drops the document id outside the detail view", () => {
    const state = fromQuery("view=trends&doc=deadbeef");
    expect(state.docId).toBe("");
  });

  it("treats logically equal states as the same", () => {
    const a = fromQuery("q=festival&page=2");
    const b = normalize({ ...DEFAULT_STATE, keyword: "festival", page: 2 });
    expect(sameState(a, b)).toBe(true);
    expect(sameState(a, DEFAULT_STATE)).toBe(false);
  });
});
