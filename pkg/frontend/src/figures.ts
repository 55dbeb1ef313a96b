/** The four figure kinds rendered onto a software canvas. */

import { Canvas, colormap, lighten, SERIES_COLORS } from "./raster.js";
import { HeatmapData, meanBand, Series } from "./data.js";

const M = { left: 46, right: 14, top: 22, bottom: 30 };

function fmt(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 0.01 && a < 10000) {
    return Number(v.toPrecision(3)).toString();
  }
  return v.toExponential(1).replace("e-", "e-").replace("e+", "e+");
}

class Axes {
  constructor(
    readonly cv: Canvas,
    readonly x0: number, readonly y0: number,
    readonly w: number, readonly h: number,
    readonly xmin: number, readonly xmax: number,
    readonly ymin: number, readonly ymax: number,
  ) {}

  px(x: number): number {
    const t = this.xmax === this.xmin ? 0.5
      : (x - this.xmin) / (this.xmax - this.xmin);
    return this.x0 + t * this.w;
  }

  py(y: number): number {
    const t = this.ymax === this.ymin ? 0.5
      : (y - this.ymin) / (this.ymax - this.ymin);
    return this.y0 + this.h - t * this.h;
  }

  frame(title: string): void {
    const black: [number, number, number] = [0, 0, 0];
    this.cv.line(this.x0, this.y0, this.x0, this.y0 + this.h, black);
    this.cv.line(this.x0, this.y0 + this.h, this.x0 + this.w,
                 this.y0 + this.h, black);
    this.cv.text(this.x0, this.y0 - 12, title.toLowerCase(), black);
    for (const t of [0, 0.5, 1]) {
      const xv = this.xmin + t * (this.xmax - this.xmin);
      const yv = this.ymin + t * (this.ymax - this.ymin);
      const px = this.px(xv);
      const py = this.py(yv);
      this.cv.line(px, this.y0 + this.h, px, this.y0 + this.h + 3, black);
      this.cv.text(px - 8, this.y0 + this.h + 6, fmt(xv), black);
      this.cv.line(this.x0 - 3, py, this.x0, py, black);
      this.cv.text(Math.max(0, this.x0 - 44), py - 3, fmt(yv), black);
    }
  }

  polyline(xs: number[], ys: number[], rgb: [number, number, number]): void {
    for (let i = 1; i < xs.length; i++) {
      this.cv.line(this.px(xs[i - 1]), this.py(ys[i - 1]),
                   this.px(xs[i]), this.py(ys[i]), rgb);
    }
    if (xs.length === 1) this.cv.set(this.px(xs[0]), this.py(ys[0]), rgb);
  }

  band(xs: number[], lo: number[], hi: number[],
       rgb: [number, number, number]): void {
    for (let i = 1; i < xs.length; i++) {
      const a = Math.round(this.px(xs[i - 1]));
      const b = Math.round(this.px(xs[i]));
      for (let x = a; x <= b; x++) {
        const u = a === b ? 0 : (x - a) / (b - a);
        const l = lo[i - 1] + u * (lo[i] - lo[i - 1]);
        const h = hi[i - 1] + u * (hi[i] - hi[i - 1]);
        this.cv.vspan(x, this.py(l), this.py(h), rgb);
      }
    }
  }
}

function bounds(series: Series[]): [number, number, number, number] {
  let xmin = Infinity, xmax = -Infinity, ymin = Infinity, ymax = -Infinity;
  for (const s of series) {
    for (const v of s.xs) { xmin = Math.min(xmin, v); xmax = Math.max(xmax, v); }
    for (const v of s.ys) { ymin = Math.min(ymin, v); ymax = Math.max(ymax, v); }
  }
  if (!isFinite(xmin)) { xmin = 0; xmax = 1; ymin = 0; ymax = 1; }
  if (xmin === xmax) { xmax = xmin + 1; }
  if (ymin === ymax) { ymax = ymin + 1; ymin = ymin - (ymin !== 0 ? 0 : 1); }
  const pad = 0.05 * (ymax - ymin);
  return [xmin, xmax, ymin - pad, ymax + pad];
}

/** Heatmap panels sharing one color scale across all inputs. */
export function renderHeatmap(grids: HeatmapData[], panel = 300): Canvas {
  const n = Math.max(1, grids.length);
  const barW = 18;
  const cv = new Canvas(M.left + n * (panel + 10) + barW + 30 + M.right,
                        M.top + panel + M.bottom);
  let vmin = Infinity, vmax = -Infinity;
  for (const g of grids) {
    for (const row of g.values) {
      for (const v of row) { vmin = Math.min(vmin, v); vmax = Math.max(vmax, v); }
    }
  }
  if (!isFinite(vmin)) { vmin = 0; vmax = 1; }
  const span = vmax > vmin ? vmax - vmin : 1;
  grids.forEach((g, gi) => {
    const ox = M.left + gi * (panel + 10);
    const nx = Math.max(1, g.xs.length);
    const ny = Math.max(1, g.ys.length);
    const cw = panel / nx;
    const ch = panel / ny;
    for (let yi = 0; yi < g.ys.length; yi++) {
      for (let xi = 0; xi < g.xs.length; xi++) {
        const t = (g.values[yi][xi] - vmin) / span;
        // draw with y increasing upward
        cv.fillRect(ox + xi * cw, M.top + panel - (yi + 1) * ch,
                    Math.ceil(cw), Math.ceil(ch), colormap(t));
      }
    }
    cv.text(ox, M.top - 12, `panel ${gi}`, [0, 0, 0]);
  });
  // shared color bar
  const bx = M.left + n * (panel + 10) + 6;
  for (let y = 0; y < panel; y++) {
    const t = 1 - y / (panel - 1);
    cv.fillRect(bx, M.top + y, barW, 1, colormap(t));
  }
  cv.text(bx + barW + 2, M.top - 2, fmt(vmax), [0, 0, 0]);
  cv.text(bx + barW + 2, M.top + panel - 6, fmt(vmin), [0, 0, 0]);
  return cv;
}

/** One panel per interaction label: mean across seeds with min-max band. */
export function renderInteractions(perSeed: Series[][], width = 900,
                                   height = 520): Canvas {
  const labels = [...new Set(perSeed.flat().map((s) => s.label))];
  const cv = new Canvas(width, height);
  const cols = 2;
  const rows = Math.max(1, Math.ceil(labels.length / cols));
  const pw = (width - M.left - M.right - (cols - 1) * 30) / cols;
  const ph = (height - M.top - M.bottom - (rows - 1) * 36) / rows;
  labels.forEach((label, li) => {
    const seedSeries = perSeed
      .map((seed) => seed.find((s) => s.label === label))
      .filter((s): s is Series => s !== undefined);
    const col = li % cols;
    const row = Math.floor(li / cols);
    const x0 = M.left + col * (pw + 30);
    const y0 = M.top + row * (ph + 36);
    const [xmin, xmax] = bounds(seedSeries);
    const ax = new Axes(cv, x0, y0, pw, ph, xmin, xmax, 0, 1);
    ax.frame(label);
    const band = meanBand(seedSeries);
    const color = SERIES_COLORS[li % SERIES_COLORS.length];
    if (band.xs.length) {
      ax.band(band.xs, band.lo, band.hi, lighten(color, 0.75));
      ax.polyline(band.xs, band.mean, color);
    }
  });
  return cv;
}

export function renderCurves(perFile: Series[][], title: string,
                             width = 640, height = 420,
                             yFloorZero = false): Canvas {
  const cv = new Canvas(width, height);
  const flat = perFile.flat();
  let [xmin, xmax, ymin, ymax] = bounds(flat);
  if (yFloorZero) ymin = 0;
  const ax = new Axes(cv, M.left, M.top, width - M.left - M.right,
                      height - M.top - M.bottom, xmin, xmax, ymin, ymax);
  ax.frame(title);
  let k = 0;
  for (const file of perFile) {
    for (const s of file) {
      ax.polyline(s.xs, s.ys, SERIES_COLORS[k % SERIES_COLORS.length]);
      k += 1;
    }
  }
  return cv;
}
