/** Per-media-type cards: count, positive ratio, score histogram, box stats. */

import type { MediaEntry, MediaSummary } from "../types.js";

function statRow(label: string, exact: number): HTMLElement {
  const row = document.createElement("div");
  row.className = "stat";
  const name = document.createElement("span");
  name.className = "stat-label";
  name.textContent = label;
  const value = document.createElement("span");
  value.className = "stat-value";
  value.dataset.exact = String(exact);
  value.title = String(exact);
  value.textContent = Number.isInteger(exact) ? String(exact) : exact.toFixed(3);
  row.append(name, value);
  return row;
}

function histogram(entry: MediaEntry): HTMLElement {
  const wrap = document.createElement("div");
  wrap.className = "histogram";
  const max = Math.max(1, ...entry.score_histogram.counts);
  entry.score_histogram.counts.forEach((count, i) => {
    const bar = document.createElement("div");
    bar.className = "bar";
    bar.style.height = `${(count / max) * 100}%`;
    bar.dataset.count = String(count);
    const lo = entry.score_histogram.bin_edges[i];
    const hi = entry.score_histogram.bin_edges[i + 1];
    bar.title = `[${lo}, ${hi}): ${count}`;
    wrap.appendChild(bar);
  });
  return wrap;
}

export function renderMedia(container: HTMLElement, summary: MediaSummary): void {
  container.replaceChildren();

  const names = Object.keys(summary);
  if (names.length === 0) {
    const empty = document.createElement("div");
    empty.className = "empty";
    empty.textContent = "no media data";
    container.appendChild(empty);
    return;
  }

  const board = document.createElement("div");
  board.className = "media-board";
  for (const name of names) {
    const entry = summary[name];
    if (!entry) continue;
    const card = document.createElement("section");
    card.className = "media-card";
    card.dataset.media = name;

    const head = document.createElement("h3");
    head.textContent = name;
    card.appendChild(head);

    card.appendChild(statRow("documents", entry.count));
    card.appendChild(statRow("positive ratio", entry.ppr));
    card.appendChild(histogram(entry));

    if (entry.box_stats) {
      const box = document.createElement("div");
      box.className = "box-stats";
      box.appendChild(statRow("min", entry.box_stats.min));
      box.appendChild(statRow("q1", entry.box_stats.q1));
      box.appendChild(statRow("median", entry.box_stats.median));
      box.appendChild(statRow("q3", entry.box_stats.q3));
      box.appendChild(statRow("max", entry.box_stats.max));
      card.appendChild(box);
    } else {
      const none = document.createElement("p");
      none.className = "no-scores";
      none.textContent = "no scored documents";
      card.appendChild(none);
    }
    board.appendChild(card);
  }
  container.appendChild(board);
}
