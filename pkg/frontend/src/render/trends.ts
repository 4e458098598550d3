/** Daily count and positive-ratio chart with exact-value hover. */

import type { TrendPoint } from "../types.js";

const SENTINEL_PPR = 0.5;
const W = 640;
const H = 240;
const PAD = 28;

const SVG_NS = "http://www.w3.org/2000/svg";

function svgEl(tag: string, attrs: Record<string, string>): SVGElement {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  return node;
}

/**
 * Two series share the date axis: document count scaled to its own maximum
 * and ppr on a fixed 0..1 scale. Every day gets an invisible hit band whose
 * hover swaps the exact (date, count, ppr) into the tooltip, and days at
 * the small-sample sentinel are drawn as hollow neutral markers.
 */
export function renderTrends(container: HTMLElement, points: TrendPoint[]): void {
  container.replaceChildren();

  if (points.length === 0) {
    const empty = document.createElement("div");
    empty.className = "empty";
    empty.textContent = "no data in range";
    container.appendChild(empty);
    return;
  }

  const tooltip = document.createElement("div");
  tooltip.className = "tooltip";
  tooltip.textContent = "hover a day for exact values";

  const svg = svgEl("svg", {
    viewBox: `0 0 ${W} ${H}`,
    class: "trends-chart",
    role: "img",
  }) as SVGSVGElement;

  const innerW = W - 2 * PAD;
  const innerH = H - 2 * PAD;
  const maxCount = Math.max(1, ...points.map((p) => p.count));
  const xAt = (i: number) =>
    PAD + (points.length === 1 ? innerW / 2 : (i * innerW) / (points.length - 1));
  const yCount = (c: number) => PAD + innerH - (c / maxCount) * innerH;
  const yPpr = (r: number) => PAD + innerH - r * innerH;

  const countLine = points.map((p, i) => `${xAt(i)},${yCount(p.count)}`).join(" ");
  svg.appendChild(
    svgEl("polyline", { points: countLine, class: "series-count", fill: "none" }),
  );
  const pprLine = points.map((p, i) => `${xAt(i)},${yPpr(p.ppr)}`).join(" ");
  svg.appendChild(
    svgEl("polyline", { points: pprLine, class: "series-ppr", fill: "none" }),
  );

  points.forEach((p, i) => {
    const marker = svgEl("circle", {
      cx: String(xAt(i)),
      cy: String(yPpr(p.ppr)),
      r: "4",
      class: p.ppr === SENTINEL_PPR ? "ppr-point sentinel" : "ppr-point",
    });
    svg.appendChild(marker);

    const band = svgEl("rect", {
      x: String(xAt(i) - innerW / Math.max(1, points.length - 1) / 2),
      y: "0",
      width: String(innerW / Math.max(1, points.length - 1)),
      height: String(H),
      class: "hit",
      fill: "transparent",
    });
    band.dataset.date = p.date;
    band.dataset.count = String(p.count);
    band.dataset.ppr = String(p.ppr);
    band.addEventListener("mouseover", () => {
      tooltip.textContent = `${p.date} · count ${p.count} · ppr ${p.ppr}`;
    });
    svg.appendChild(band);
  });

  container.appendChild(svg);
  container.appendChild(tooltip);

  const legend = document.createElement("div");
  legend.className = "legend";
  legend.innerHTML =
    '<span class="key key-count">count</span> <span class="key key-ppr">positive ratio</span>' +
    ' <span class="key key-sentinel">small-sample days show the neutral 0.5 marker</span>';
  container.appendChild(legend);
}
