/** Readers for the run-artifact formats: plain CSV and JSON-lines. */

import { readFileSync } from "node:fs";

export interface HeatmapData {
  xs: number[];
  ys: number[];
  /** values[yi][xi] */
  values: number[][];
  label: string;
}

export function readHeatmapCsv(path: string): HeatmapData {
  const lines = readFileSync(path, "utf-8").trim().split(/\r?\n/);
  if (lines.length <= 1) {
    return { xs: [], ys: [], values: [], label: path };
  }
  const xs = new Set<number>();
  const ys = new Set<number>();
  const cells: Array<[number, number, number]> = [];
  for (const line of lines.slice(1)) {
    const [x, y, v] = line.split(",").map(Number);
    xs.add(x);
    ys.add(y);
    cells.push([x, y, v]);
  }
  const xsArr = [...xs].sort((a, b) => a - b);
  const ysArr = [...ys].sort((a, b) => a - b);
  const xi = new Map(xsArr.map((v, i) => [v, i]));
  const yi = new Map(ysArr.map((v, i) => [v, i]));
  const values = ysArr.map(() => xsArr.map(() => 0));
  for (const [x, y, v] of cells) {
    values[yi.get(y)!][xi.get(x)!] = v;
  }
  return { xs: xsArr, ys: ysArr, values, label: path };
}

export interface Series {
  xs: number[];
  ys: number[];
  label: string;
}

/** interactions.csv: iteration,label,fraction -> one series per label. */
export function readInteractionsCsv(path: string): Series[] {
  const lines = readFileSync(path, "utf-8").trim().split(/\r?\n/);
  const byLabel = new Map<string, Series>();
  for (const line of lines.slice(1)) {
    if (!line) continue;
    const [it, label, fraction] = line.split(",");
    if (!byLabel.has(label)) {
      byLabel.set(label, { xs: [], ys: [], label });
    }
    const s = byLabel.get(label)!;
    s.xs.push(Number(it));
    s.ys.push(Number(fraction));
  }
  return [...byLabel.values()];
}

export function readJsonl(path: string): Array<Record<string, unknown>> {
  const text = readFileSync(path, "utf-8").trim();
  if (!text) return [];
  return text.split(/\r?\n/).map((l) => JSON.parse(l));
}

/** metrics.jsonl -> per-member training-loss series. */
export function readLossSeries(path: string): Series[] {
  const rows = readJsonl(path);
  const out: Series[] = [];
  for (const row of rows) {
    const it = row["iteration"] as number;
    const losses = row["train_loss"] as number[];
    losses.forEach((v, m) => {
      if (!out[m]) out[m] = { xs: [], ys: [], label: `member ${m}` };
      out[m].xs.push(it);
      out[m].ys.push(v);
    });
  }
  return out;
}

/** success.jsonl -> one series of success rate vs checkpoint iteration. */
export function readSuccessSeries(path: string): Series {
  const rows = readJsonl(path);
  const pts = rows
    .map((r) => [r["iteration"] as number, r["success_rate"] as number])
    .sort((a, b) => a[0] - b[0]);
  return { xs: pts.map((p) => p[0]), ys: pts.map((p) => p[1]), label: path };
}

/** Mean and min-max envelope across seed series sharing the same xs. */
export function meanBand(series: Series[]): { xs: number[]; mean: number[];
                                              lo: number[]; hi: number[] } {
  if (series.length === 0) return { xs: [], mean: [], lo: [], hi: [] };
  const xs = series[0].xs;
  const mean: number[] = [];
  const lo: number[] = [];
  const hi: number[] = [];
  for (let i = 0; i < xs.length; i++) {
    const vals = series.filter((s) => i < s.ys.length).map((s) => s.ys[i]);
    mean.push(vals.reduce((a, b) => a + b, 0) / vals.length);
    lo.push(Math.min(...vals));
    hi.push(Math.max(...vals));
  }
  return { xs, mean, lo, hi };
}
