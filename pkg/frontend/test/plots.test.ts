import { mkdtempSync, writeFileSync, readFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { inflateSync } from "node:zlib";
import { describe, expect, it } from "vitest";

import { encodePng } from "../src/png.js";
import { Canvas, colormap } from "../src/raster.js";
import { meanBand, readHeatmapCsv, readInteractionsCsv,
         readLossSeries, readSuccessSeries } from "../src/data.js";
import { parseArgs, renderToBuffer } from "../src/cli.js";

function tmpfile(name: string, content: string): string {
  const dir = mkdtempSync(join(tmpdir(), "plots-"));
  const p = join(dir, name);
  writeFileSync(p, content);
  return p;
}

function decodePixels(png: Buffer): { w: number; h: number; data: Buffer } {
  expect(png.subarray(0, 8)).toEqual(
    Buffer.from([0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a]));
  let off = 8;
  let w = 0, h = 0;
  const idat: Buffer[] = [];
  while (off < png.length) {
    const len = png.readUInt32BE(off);
    const type = png.subarray(off + 4, off + 8).toString("ascii");
    const data = png.subarray(off + 8, off + 8 + len);
    if (type === "IHDR") {
      w = data.readUInt32BE(0);
      h = data.readUInt32BE(4);
      expect(data[8]).toBe(8);
      expect(data[9]).toBe(2);
    } else if (type === "IDAT") {
      idat.push(Buffer.from(data));
    }
    off += 12 + len;
  }
  const raw = inflateSync(Buffer.concat(idat));
  expect(raw.length).toBe(h * (1 + w * 3));
  const out = Buffer.alloc(w * h * 3);
  for (let y = 0; y < h; y++) {
    expect(raw[y * (1 + w * 3)]).toBe(0); // filter None
    raw.copy(out, y * w * 3, y * (1 + w * 3) + 1, (y + 1) * (1 + w * 3));
  }
  return { w, h, data: out };
}

describe("png encoder", () => {
  it("round-trips pixels losslessly", () => {
    const cv = new Canvas(17, 9, [10, 20, 30]);
    cv.fillRect(2, 3, 5, 4, [200, 100, 50]);
    cv.line(0, 0, 16, 8, [0, 0, 0]);
    const png = encodePng(cv.width, cv.height, cv.pixels);
    const { w, h, data } = decodePixels(png);
    expect(w).toBe(17);
    expect(h).toBe(9);
    expect(Buffer.from(cv.pixels).equals(data)).toBe(true);
  });
});

describe("readers", () => {
  it("parses heatmap csv into a grid", () => {
    const p = tmpfile("h.csv",
      "x,y,value\n0,0,1.0\n1,0,2.0\n0,1,3.0\n1,1,4.0\n");
    const g = readHeatmapCsv(p);
    expect(g.xs).toEqual([0, 1]);
    expect(g.values).toEqual([[1, 2], [3, 4]]);
  });

  it("parses interactions csv into labeled series", () => {
    const p = tmpfile("i.csv",
      "iteration,label,fraction\n1,a,0.25\n1,b,0.75\n2,a,0.5\n2,b,0.5\n");
    const series = readInteractionsCsv(p);
    expect(series.map((s) => s.label).sort()).toEqual(["a", "b"]);
    const a = series.find((s) => s.label === "a")!;
    expect(a.xs).toEqual([1, 2]);
    expect(a.ys).toEqual([0.25, 0.5]);
  });

  it("parses metrics and success jsonl", () => {
    const m = tmpfile("m.jsonl",
      '{"iteration":1,"train_loss":[2.0,3.0]}\n' +
      '{"iteration":2,"train_loss":[1.0,2.5]}\n');
    const loss = readLossSeries(m);
    expect(loss.length).toBe(2);
    expect(loss[0].ys).toEqual([2.0, 1.0]);
    const s = tmpfile("s.jsonl",
      '{"iteration":50,"success_rate":0.7}\n' +
      '{"iteration":25,"success_rate":0.4}\n');
    const succ = readSuccessSeries(s);
    expect(succ.xs).toEqual([25, 50]);
    expect(succ.ys).toEqual([0.4, 0.7]);
  });

  it("mean band over seeds", () => {
    const band = meanBand([
      { xs: [1, 2], ys: [0.0, 1.0], label: "x" },
      { xs: [1, 2], ys: [1.0, 0.0], label: "x" },
    ]);
    expect(band.mean).toEqual([0.5, 0.5]);
    expect(band.lo).toEqual([0, 0]);
    expect(band.hi).toEqual([1, 1]);
  });
});

describe("figures", () => {
  const interactionsCsv =
    "iteration,label,fraction\n" +
    [1, 2, 3].map((i) =>
      `${i},agent_free_space,${1 - 0.1 * i}\n${i},one_object_moves,${0.1 * i}`,
    ).join("\n") + "\n";

  it("identical inputs produce identical bytes for every kind", () => {
    const h = tmpfile("h.csv", "x,y,value\n0,0,1\n1,0,2\n0,1,0\n1,1,5\n");
    const i = tmpfile("i.csv", interactionsCsv);
    const s = tmpfile("s.jsonl", '{"iteration":50,"success_rate":0.7}\n');
    const m = tmpfile("m.jsonl", '{"iteration":1,"train_loss":[2.0]}\n' +
                                 '{"iteration":2,"train_loss":[1.0]}\n');
    for (const [kind, inputs] of [["heatmap", [h]],
                                  ["interactions", [i, i]],
                                  ["success", [s]],
                                  ["loss", [m]]] as const) {
      const a = renderToBuffer({ kind, inputs: [...inputs], out: "" });
      const b = renderToBuffer({ kind, inputs: [...inputs], out: "" });
      expect(a.equals(b)).toBe(true);
    }
  });

  it("all-zero heatmap renders a uniform panel", () => {
    const h = tmpfile("z.csv", "x,y,value\n0,0,0\n1,0,0\n0,1,0\n1,1,0\n");
    const png = renderToBuffer({ kind: "heatmap", inputs: [h], out: "" });
    const { data, w } = decodePixels(png);
    const base = colormap(0);
    // sample inside the panel area
    const at = (x: number, y: number) =>
      [data[(y * w + x) * 3], data[(y * w + x) * 3 + 1],
       data[(y * w + x) * 3 + 2]];
    expect(at(100, 100)).toEqual([...base]);
    expect(at(200, 200)).toEqual([...base]);
  });

  it("empty-series inputs still render", () => {
    const e = tmpfile("empty.csv", "x,y,value\n");
    const png = renderToBuffer({ kind: "heatmap", inputs: [e], out: "" });
    expect(png.length).toBeGreaterThan(100);
    const es = tmpfile("empty.jsonl", "");
    const png2 = renderToBuffer({ kind: "success", inputs: [es], out: "" });
    expect(png2.length).toBeGreaterThan(100);
  });

  it("cli arg parsing", () => {
    const args = parseArgs(["--kind", "loss", "--in", "a", "b",
                            "--out", "o.png"]);
    expect(args).toEqual({ kind: "loss", inputs: ["a", "b"], out: "o.png" });
    expect(() => parseArgs(["--kind", "loss"])).toThrow();
  });
});
