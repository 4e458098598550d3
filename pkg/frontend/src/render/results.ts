/** Paged search results: one row per document, with a pager. */

import type { DocumentsPage } from "../types.js";

export interface ResultsHandlers {
  onOpen: (docId: string) => void;
  onPage: (page: number) => void;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function badge(kind: string, value: string): HTMLSpanElement {
  return el("span", `badge ${kind}-${value || "none"}`, value || "n/a");
}

export function renderResults(
  container: HTMLElement,
  page: DocumentsPage,
  handlers: ResultsHandlers,
): void {
  container.replaceChildren();

  if (page.total === 0) {
    container.appendChild(el("div", "empty", "no results"));
    return;
  }

  const list = el("div", "results");
  for (const doc of page.documents) {
    const row = el("article", "row");
    row.dataset.id = doc.id;
    row.dataset.publishedAt = doc.published_at;

    const head = el("header");
    head.appendChild(el("h3", "title", doc.title || "(untitled)"));
    const time = el("time", "date", doc.published_at);
    time.setAttribute("datetime", doc.published_at);
    head.appendChild(time);
    row.appendChild(head);

    const meta = el("div", "meta");
    meta.appendChild(el("span", "source", doc.source_name));
    meta.appendChild(badge("media", doc.media_type));
    meta.appendChild(badge("sentiment", doc.sentiment_label ?? "unscored"));
    row.appendChild(meta);

    row.appendChild(el("p", "abstract", doc.abstract));
    const kws = el("ul", "keywords");
    for (const kw of doc.keywords) kws.appendChild(el("li", undefined, kw));
    row.appendChild(kws);

    row.addEventListener("click", () => handlers.onOpen(doc.id));
    list.appendChild(row);
  }
  container.appendChild(list);

  const lastPage = page.page * page.page_size >= page.total;
  const pager = el("nav", "pager");
  const prev = el("button", "prev", "previous");
  prev.disabled = page.page <= 1;
  prev.addEventListener("click", () => handlers.onPage(page.page - 1));
  const label = el("span", "page-label", `page ${page.page}`);
  const next = el("button", "next", "next");
  next.disabled = lastPage;
  next.addEventListener("click", () => handlers.onPage(page.page + 1));
  pager.append(prev, label, next);
  container.appendChild(pager);
}
