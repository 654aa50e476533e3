// Decomposition explorer: a class-colored number grid for one n and an SVG
// chart of |D|/n, |A|/n, |C|/n across 1..n. Data comes entirely from the
// decomposition endpoint; fetches are cancellable so slider drags do not
// pile up stale requests.

import type { DecompositionDoc, GameApi } from "./api.js";
import { classLookup } from "./board.js";

// Membership palette: D red, A yellow, C blue.
export const CLASS_COLORS: Record<"D" | "A" | "C", string> = {
  D: "#d64541",
  A: "#f4c542",
  C: "#4169b8",
};

export interface RatioPoint {
  n: number;
  d: number;
  a: number;
  c: number;
}

export function ratioPoint(dec: DecompositionDoc): RatioPoint {
  return {
    n: dec.n,
    d: dec.d.length / dec.n,
    a: dec.a.length / dec.n,
    c: dec.c.length / dec.n,
  };
}

export async function loadRatioSeries(
  api: GameApi,
  nMax: number,
  signal?: AbortSignal,
): Promise<RatioPoint[]> {
  const series: RatioPoint[] = [];
  for (let n = 1; n <= nMax; n += 1) {
    series.push(ratioPoint(await api.getDecomposition(n, signal)));
  }
  return series;
}

export function renderClassGrid(root: HTMLElement, dec: DecompositionDoc): void {
  const doc = root.ownerDocument;
  root.textContent = "";
  const lookup = classLookup(dec);
  const grid = doc.createElement("div");
  grid.className = "explorer-grid";
  for (let value = 1; value <= dec.n; value += 1) {
    const cell = doc.createElement("span");
    const klass = lookup.get(value) ?? "C";
    cell.className = `explorer-cell class-${klass.toLowerCase()}`;
    cell.style.backgroundColor = CLASS_COLORS[klass];
    cell.title = `${value}: ${klass}`;
    cell.textContent = String(value);
    grid.appendChild(cell);
  }
  root.appendChild(grid);
}

function polyline(doc: Document, points: string, color: string): SVGElement {
  const el = doc.createElementNS("http://www.w3.org/2000/svg", "polyline");
  el.setAttribute("points", points);
  el.setAttribute("fill", "none");
  el.setAttribute("stroke", color);
  el.setAttribute("stroke-width", "1.5");
  return el;
}

export function renderRatioChart(
  root: HTMLElement,
  series: RatioPoint[],
  width = 560,
  height = 160,
): void {
  const doc = root.ownerDocument;
  root.textContent = "";
  if (series.length === 0) return;
  const svg = doc.createElementNS("http://www.w3.org/2000/svg", "svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("width", String(width));
  svg.setAttribute("height", String(height));
  svg.setAttribute("role", "img");

  const nMax = series[series.length - 1].n;
  const x = (n: number) => (nMax <= 1 ? 0 : ((n - 1) / (nMax - 1)) * (width - 10) + 5);
  const y = (ratio: number) => height - 5 - ratio * (height - 10);

  for (const key of ["d", "a", "c"] as const) {
    const pts = series.map((p) => `${x(p.n).toFixed(1)},${y(p[key]).toFixed(1)}`).join(" ");
    const color = CLASS_COLORS[key.toUpperCase() as "D" | "A" | "C"];
    const line = polyline(doc, pts, color);
    line.dataset.series = key;
    svg.appendChild(line);
  }
  root.appendChild(svg);
}
