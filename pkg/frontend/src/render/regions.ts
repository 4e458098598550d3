/** Region tiles colored by positive ratio, sized labels by attention. */

import { cssColor, pprColor } from "../color.js";
import type { RegionRow } from "../types.js";

const SENTINEL_PPR = 0.5;

export function renderRegions(
  container: HTMLElement,
  rows: RegionRow[],
  onSelect: (region: string) => void,
): void {
  container.replaceChildren();

  if (rows.length === 0) {
    const empty = document.createElement("div");
    empty.className = "empty";
    empty.textContent = "no regional data";
    container.appendChild(empty);
    return;
  }

  const grid = document.createElement("div");
  grid.className = "region-grid";
  for (const row of rows) {
    const tile = document.createElement("button");
    tile.className = "region-tile";
    tile.style.background = cssColor(pprColor(row.ppr));
    tile.dataset.region = row.region;
    tile.dataset.ppr = String(row.ppr);
    tile.dataset.count = String(row.count);
    tile.dataset.attention = String(row.attention);
    if (row.ppr === SENTINEL_PPR) {
      tile.classList.add("neutral");
      tile.title = "insufficient data";
    } else {
      tile.title = `positive ratio ${row.ppr}`;
    }

    const name = document.createElement("span");
    name.className = "region-name";
    name.textContent = row.region;
    const share = document.createElement("span");
    share.className = "attention";
    share.textContent = `${Math.round(row.attention * 100)}%`;
    const count = document.createElement("span");
    count.className = "count";
    count.textContent = `${row.count} docs`;

    tile.append(name, share, count);
    tile.addEventListener("click", () => onSelect(row.region));
    grid.appendChild(tile);
  }
  container.appendChild(grid);
}
