/** Full single-document view. */

import type { DocumentRecord } from "../types.js";

export function renderDetail(
  container: HTMLElement,
  doc: DocumentRecord,
  onBack: () => void,
): void {
  container.replaceChildren();

  const view = document.createElement("article");
  view.className = "detail";
  view.dataset.id = doc.id;

  const back = document.createElement("button");
  back.className = "back";
  back.textContent = "back to results";
  back.addEventListener("click", onBack);
  view.appendChild(back);

  const title = document.createElement("h2");
  title.textContent = doc.title || "(untitled)";
  view.appendChild(title);

  const meta = document.createElement("p");
  meta.className = "meta";
  const sentiment =
    doc.sentiment_label === null
      ? "unscored"
      : `${doc.sentiment_label} (score ${doc.sentiment_score})`;
  const model =
    doc.model_probability === null
      ? "model: n/a"
      : `model probability ${doc.model_probability}`;
  meta.textContent =
    `${doc.published_at} · ${doc.source_name} · ${doc.media_type} · ` +
    `${sentiment} · ${model}`;
  view.appendChild(meta);

  if (doc.regions.length > 0) {
    const regions = document.createElement("p");
    regions.className = "regions";
    regions.textContent =
      `regions: ${doc.regions.join(", ")}` +
      (doc.primary_region ? ` (primary ${doc.primary_region})` : "");
    view.appendChild(regions);
  }

  const abstract = document.createElement("p");
  abstract.className = "abstract";
  abstract.textContent = doc.abstract;
  view.appendChild(abstract);

  const body = document.createElement("div");
  body.className = "content";
  body.textContent = doc.content;
  view.appendChild(body);

  if (doc.keywords.length > 0) {
    const kws = document.createElement("ul");
    kws.className = "keywords";
    for (const kw of doc.keywords) {
      const li = document.createElement("li");
      li.textContent = kw;
      kws.appendChild(li);
    }
    view.appendChild(kws);
  }

  const link = document.createElement("a");
  link.href = doc.url;
  link.textContent = "original source";
  link.rel = "noopener";
  view.appendChild(link);

  container.appendChild(view);
}
