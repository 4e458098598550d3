/** Application shell: URL-driven state, fetching, and view switching. */

import { ApiClient, ApiError } from "./api.js";
import { fromQuery, normalize, sameState, toQuery, VIEWS } from "./state.js";
import type { QueryState, View } from "./state.js";
import { renderDetail } from "./render/detail.js";
import { renderMedia } from "./render/media.js";
import { renderRegions } from "./render/regions.js";
import { renderResults } from "./render/results.js";
import { renderTrends } from "./render/trends.js";

const VIEW_LABELS: Record<View, string> = {
  results: "search",
  trends: "trends",
  regions: "regions",
  media: "media",
  detail: "document",
};

export class App {
  private state: QueryState;
  private banner!: HTMLElement;
  private main!: HTMLElement;
  private nav!: HTMLElement;
  private form!: HTMLFormElement;

  constructor(
    private root: HTMLElement,
    private client: ApiClient,
    private win: Window = window,
  ) {
    this.state = fromQuery(this.win.location.search);
    this.buildChrome();
    this.win.addEventListener("popstate", () => {
      this.state = fromQuery(this.win.location.search);
      void this.render();
    });
  }

  /** Current normalized state; tests use this for URL round-trips. */
  getState(): QueryState {
    return { ...this.state };
  }

  private buildChrome(): void {
    this.root.replaceChildren();

    const header = document.createElement("header");
    header.className = "app-header";
    const title = document.createElement("h1");
    title.textContent = "opinion dashboard";
    header.appendChild(title);

    this.nav = document.createElement("nav");
    this.nav.className = "views";
    for (const view of VIEWS) {
      if (view === "detail") continue;
      const btn = document.createElement("button");
      btn.dataset.view = view;
      btn.textContent = VIEW_LABELS[view];
      btn.addEventListener("click", () => {
        this.apply({ ...this.state, view, docId: "", page: 1 });
      });
      this.nav.appendChild(btn);
    }
    header.appendChild(this.nav);

    this.form = document.createElement("form");
    this.form.className = "filters";
    this.form.innerHTML = `
      <input name="q" type="search" placeholder="keyword" />
      <input name="from" type="date" />
      <input name="to" type="date" />
      <select name="media">
        <option value="">all media</option>
        <option value="government">government</option>
        <option value="mass">mass</option>
        <option value="social">social</option>
      </select>
      <input name="region" type="text" placeholder="region" />
      <button type="submit">apply</button>
    `;
    this.form.addEventListener("submit", (event) => {
      event.preventDefault();
      const data = new FormData(this.form);
      this.apply({
        ...this.state,
        keyword: String(data.get("q") ?? ""),
        from: String(data.get("from") ?? ""),
        to: String(data.get("to") ?? ""),
        media: String(data.get("media") ?? ""),
        region: String(data.get("region") ?? ""),
        page: 1,
      });
    });
    header.appendChild(this.form);
    this.root.appendChild(header);

    this.banner = document.createElement("div");
    this.banner.className = "error-banner hidden";
    this.banner.setAttribute("role", "alert");
    this.root.appendChild(this.banner);

    this.main = document.createElement("main");
    this.root.appendChild(this.main);
  }

  private syncChrome(): void {
    for (const btn of this.nav.querySelectorAll("button")) {
      btn.classList.toggle("active", btn.dataset.view === this.state.view);
    }
    const field = (name: string) =>
      this.form.elements.namedItem(name) as HTMLInputElement | HTMLSelectElement;
    field("q").value = this.state.keyword;
    field("from").value = this.state.from;
    field("to").value = this.state.to;
    field("media").value = this.state.media;
    field("region").value = this.state.region;
  }

  /** Adopt a new state, reflect it in the URL, and re-render. */
  apply(next: QueryState): void {
    const normalized = normalize(next);
    if (!sameState(normalized, this.state)) {
      this.state = normalized;
      const query = toQuery(normalized);
      this.win.history.pushState(null, "", query ? `?${query}` : this.win.location.pathname);
    }
    void this.render();
  }

  private showError(message: string): void {
    this.banner.textContent = message;
    this.banner.classList.remove("hidden");
  }

  async render(): Promise<void> {
    this.banner.classList.add("hidden");
    this.syncChrome();
    const state = this.state;
    try {
      switch (state.view) {
        case "results":
          return await this.renderResults(state);
        case "detail":
          return await this.renderDetail(state);
        case "trends": {
          const points = await this.client.trends(state);
          if (points !== null) renderTrends(this.main, points);
          return;
        }
        case "regions": {
          const rows = await this.client.regions(state);
          if (rows !== null) {
            renderRegions(this.main, rows, (region) => {
              this.apply({ ...state, view: "results", region, page: 1 });
            });
          }
          return;
        }
        case "media": {
          const summary = await this.client.mediaSummary(state);
          if (summary !== null) renderMedia(this.main, summary);
          return;
        }
      }
    } catch (err) {
      if (err instanceof ApiError) {
        this.showError(err.field ? `${err.message} (${err.field})` : err.message);
        return;
      }
      throw err;
    }
  }

  private async renderResults(state: QueryState): Promise<void> {
    const page = await this.client.documents(state);
    if (page === null) return;
    renderResults(this.main, page, {
      onOpen: (docId) => this.apply({ ...state, view: "detail", docId }),
      onPage: (p) => this.apply({ ...state, page: p }),
    });
  }

  private async renderDetail(state: QueryState): Promise<void> {
    const doc = await this.client.document(state.docId);
    if (doc === null) return;
    renderDetail(this.main, doc, () => {
      this.apply({ ...state, view: "results", docId: "" });
    });
  }
}

/** Browser entry point; tests construct App directly instead. */
export function boot(): App {
  const root = document.getElementById("app");
  if (!root) throw new Error("missing #app element");
  const app = new App(root, new ApiClient(""));
  void app.render();
  return app;
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  boot();
}
