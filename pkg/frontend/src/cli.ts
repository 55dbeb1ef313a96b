/**
 * Figure renderer for run artifacts.
 *
 *   freeplay-plot --kind heatmap      --in h1.csv h2.csv --out fig.png
 *   freeplay-plot --kind interactions --in seedA/interactions.csv seedB/... --out fig.png
 *   freeplay-plot --kind success      --in run/success.jsonl --out fig.png
 *   freeplay-plot --kind loss         --in run/metrics.jsonl --out fig.png
 *
 * Identical inputs produce identical output bytes.
 */

import { writeFileSync } from "node:fs";
import { encodePng } from "./png.js";
import { renderCurves, renderHeatmap, renderInteractions } from "./figures.js";
import { readHeatmapCsv, readInteractionsCsv, readLossSeries,
         readSuccessSeries } from "./data.js";

export interface Args {
  kind: string;
  inputs: string[];
  out: string;
}

export function parseArgs(argv: string[]): Args {
  let kind = "";
  let out = "";
  const inputs: string[] = [];
  let mode = "";
  for (const a of argv) {
    if (a === "--kind" || a === "--in" || a === "--out") {
      mode = a;
    } else if (mode === "--kind") {
      kind = a;
      mode = "";
    } else if (mode === "--out") {
      out = a;
      mode = "";
    } else if (mode === "--in") {
      inputs.push(a);
    } else {
      throw new Error(`unexpected argument ${a}`);
    }
  }
  if (!kind || !out) throw new Error("--kind and --out are required");
  return { kind, inputs, out };
}

export function renderToBuffer(args: Args): Buffer {
  let canvas;
  if (args.kind === "heatmap") {
    canvas = renderHeatmap(args.inputs.map(readHeatmapCsv));
  } else if (args.kind === "interactions") {
    canvas = renderInteractions(args.inputs.map(readInteractionsCsv));
  } else if (args.kind === "success") {
    canvas = renderCurves(args.inputs.map((p) => [readSuccessSeries(p)]),
                          "success rate vs iteration", 640, 420, true);
  } else if (args.kind === "loss") {
    canvas = renderCurves(args.inputs.map(readLossSeries),
                          "training loss vs iteration");
  } else {
    throw new Error(`unknown figure kind ${args.kind}`);
  }
  return encodePng(canvas.width, canvas.height, canvas.pixels);
}

export function main(argv: string[]): number {
  const args = parseArgs(argv);
  writeFileSync(args.out, renderToBuffer(args));
  console.log(`wrote ${args.out}`);
  return 0;
}

if (process.argv[1] && process.argv[1].endsWith("cli.js")) {
  process.exit(main(process.argv.slice(2)));
}
