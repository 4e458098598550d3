/** Query state held entirely in the URL, so any view is shareable. */

export const VIEWS = ["results", "trends", "regions", "media", "detail"] as const;
export type View = (typeof VIEWS)[number];

export interface QueryState {
  view: View;
  keyword: string;
  from: string;
  to: string;
  media: string;
  region: string;
  page: number;
  docId: string;
}

export const DEFAULT_STATE: QueryState = {
  view: "results",
  keyword: "",
  from: "",
  to: "",
  media: "",
  region: "",
  page: 1,
  docId: "",
};

const DATE_RE = /^\d{4}-\d{2}-\d{2}$/;

function cleanDate(value: string): string {
  return DATE_RE.test(value) ? value : "";
}

/**
 * Force the invariants: known view, valid dates with from <= to, page >= 1,
 * and a detail view only when a document id is present.
 */
export function normalize(state: QueryState): QueryState {
  const out = { ...state };
  if (!VIEWS.includes(out.view)) out.view = "results";
  out.from = cleanDate(out.from);
  out.to = cleanDate(out.to);
  if (out.from && out.to && out.from > out.to) {
    [out.from, out.to] = [out.to, out.from];
  }
  if (!Number.isInteger(out.page) || out.page < 1) out.page = 1;
  if (out.view === "detail" && !out.docId) out.view = "results";
  if (out.view !== "detail") out.docId = "";
  return out;
}

/** Serialize to a query string, omitting default values. */
export function toQuery(state: QueryState): string {
  const s = normalize(state);
  const params = new URLSearchParams();
  if (s.view !== DEFAULT_STATE.view) params.set("view", s.view);
  if (s.keyword) params.set("q", s.keyword);
  if (s.from) params.set("from", s.from);
  if (s.to) params.set("to", s.to);
  if (s.media) params.set("media", s.media);
  if (s.region) params.set("region", s.region);
  if (s.page !== 1) params.set("page", String(s.page));
  if (s.docId) params.set("doc", s.docId);
  return params.toString();
}

/** Parse a query string (with or without the leading "?"). */
export function fromQuery(query: string): QueryState {
  const params = new URLSearchParams(query.startsWith("?") ? query.slice(1) : query);
  const page = Number.parseInt(params.get("page") ?? "1", 10);
  return normalize({
    view: (params.get("view") ?? "results") as View,
    keyword: params.get("q") ?? "",
    from: params.get("from") ?? "",
    to: params.get("to") ?? "",
    media: params.get("media") ?? "",
    region: params.get("region") ?? "",
    page: Number.isNaN(page) ? 1 : page,
    docId: params.get("doc") ?? "",
  });
}

export function sameState(a: QueryState, b: QueryState): boolean {
  return toQuery(a) === toQuery(b);
}
