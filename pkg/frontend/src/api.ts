/** Typed client for the opinion analytics API with latest-wins requests. */

import type {
  ClassifyResult,
  DocumentRecord,
  DocumentsPage,
  MediaSummary,
  RegionRow,
  TrendPoint,
} from "./types.js";
import type { QueryState } from "./state.js";

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status: number,
    readonly field: string | null = null,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

function isAbort(err: unknown): boolean {
  // fetch rejects with a DOMException, which is not an Error subclass
  return (
    typeof err === "object" &&
    err !== null &&
    (err as { name?: unknown }).name === "AbortError"
  );
}

/**
 * Each logical channel ("documents", "trends", ...) keeps at most one
 * request in flight: starting a new one aborts its predecessor, and the
 * superseded call resolves to null so stale responses are never rendered.
 */
export class ApiClient {
  private controllers = new Map<string, AbortController>();

  constructor(
    private baseUrl: string = "",
    private fetchFn: typeof fetch = (...args) => fetch(...args),
  ) {}

  private async request<T>(
    channel: string,
    path: string,
    init: RequestInit = {},
  ): Promise<T | null> {
    this.controllers.get(channel)?.abort();
    const controller = new AbortController();
    this.controllers.set(channel, controller);
    let response: Response;
    try {
      response = await this.fetchFn(this.baseUrl + path, {
        ...init,
        signal: controller.signal,
      });
    } catch (err) {
      if (isAbort(err)) return null;
      throw new ApiError(String(err), 0);
    }
    if (controller.signal.aborted) return null;
    if (!response.ok) {
      let detail: { message?: string; field?: string } = {};
      try {
        detail = await response.json();
      } catch {
        /* non-JSON error body */
      }
      throw new ApiError(
        detail.message ?? `request failed with status ${response.status}`,
        response.status,
        detail.field ?? null,
      );
    }
    try {
      return (await response.json()) as T;
    } catch (err) {
      if (isAbort(err)) return null;
      throw new ApiError("invalid JSON in response", response.status);
    }
  }

  private rangeParams(state: QueryState): URLSearchParams {
    const params = new URLSearchParams();
    if (state.keyword) params.set("q", state.keyword);
    if (state.from) params.set("from", state.from);
    if (state.to) params.set("to", state.to);
    return params;
  }

  documents(state: QueryState, pageSize = 10): Promise<DocumentsPage | null> {
    const params = this.rangeParams(state);
    if (state.media) params.set("media_type", state.media);
    if (state.region) params.set("region", state.region);
    params.set("page", String(state.page));
    params.set("page_size", String(pageSize));
    return this.request("documents", `/api/documents?${params}`);
  }

  document(id: string): Promise<DocumentRecord | null> {
    return this.request("document", `/api/documents/${encodeURIComponent(id)}`);
  }

  trends(state: QueryState): Promise<TrendPoint[] | null> {
    const qs = this.rangeParams(state).toString();
    return this.request("trends", `/api/trends${qs ? "?" + qs : ""}`);
  }

  regions(state: QueryState): Promise<RegionRow[] | null> {
    const qs = this.rangeParams(state).toString();
    return this.request("regions", `/api/regions${qs ? "?" + qs : ""}`);
  }

  mediaSummary(state: QueryState): Promise<MediaSummary | null> {
    const qs = this.rangeParams(state).toString();
    return this.request("media", `/api/media-summary${qs ? "?" + qs : ""}`);
  }

  classify(text: string): Promise<ClassifyResult | null> {
    return this.request("classify", "/api/classify", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ text }),
    });
  }
}
