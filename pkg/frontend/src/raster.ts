/** Software framebuffer with just enough drawing for the figure kinds. */

export class Canvas {
  readonly width: number;
  readonly height: number;
  readonly pixels: Uint8Array;

  constructor(width: number, height: number, bg: [number, number, number] = [255, 255, 255]) {
    this.width = width;
    this.height = height;
    this.pixels = new Uint8Array(width * height * 3);
    for (let i = 0; i < width * height; i++) {
      this.pixels[i * 3] = bg[0];
      this.pixels[i * 3 + 1] = bg[1];
      this.pixels[i * 3 + 2] = bg[2];
    }
  }

  set(x: number, y: number, rgb: [number, number, number]): void {
    x = Math.round(x);
    y = Math.round(y);
    if (x < 0 || y < 0 || x >= this.width || y >= this.height) return;
    const i = (y * this.width + x) * 3;
    this.pixels[i] = rgb[0];
    this.pixels[i + 1] = rgb[1];
    this.pixels[i + 2] = rgb[2];
  }

  fillRect(x0: number, y0: number, w: number, h: number,
           rgb: [number, number, number]): void {
    for (let y = Math.max(0, Math.round(y0));
         y < Math.min(this.height, Math.round(y0 + h)); y++) {
      for (let x = Math.max(0, Math.round(x0));
           x < Math.min(this.width, Math.round(x0 + w)); x++) {
        this.set(x, y, rgb);
      }
    }
  }

  line(x0: number, y0: number, x1: number, y1: number,
       rgb: [number, number, number]): void {
    let ax = Math.round(x0), ay = Math.round(y0);
    const bx = Math.round(x1), by = Math.round(y1);
    const dx = Math.abs(bx - ax), dy = -Math.abs(by - ay);
    const sx = ax < bx ? 1 : -1, sy = ay < by ? 1 : -1;
    let err = dx + dy;
    for (;;) {
      this.set(ax, ay, rgb);
      if (ax === bx && ay === by) break;
      const e2 = 2 * err;
      if (e2 >= dy) { err += dy; ax += sx; }
      if (e2 <= dx) { err += dx; ay += sy; }
    }
  }

  /** Vertical span fill between two y values at one x column. */
  vspan(x: number, yA: number, yB: number, rgb: [number, number, number]): void {
    const lo = Math.round(Math.min(yA, yB));
    const hi = Math.round(Math.max(yA, yB));
    for (let y = lo; y <= hi; y++) this.set(x, y, rgb);
  }

  text(x: number, y: number, s: string, rgb: [number, number, number],
       scale = 1): void {
    let cx = Math.round(x);
    for (const ch of s) {
      const glyph = FONT[ch] ?? FONT["?"];
      for (let r = 0; r < 7; r++) {
        for (let c = 0; c < 5; c++) {
          if ((glyph[r] >> (4 - c)) & 1) {
            for (let dy = 0; dy < scale; dy++) {
              for (let dx = 0; dx < scale; dx++) {
                this.set(cx + c * scale + dx, y + r * scale + dy, rgb);
              }
            }
          }
        }
      }
      cx += 6 * scale;
    }
  }
}

/** Perceptually ordered dark-to-bright colormap (piecewise linear). */
export function colormap(t: number): [number, number, number] {
  const x = Math.min(1, Math.max(0, t));
  const stops: Array<[number, number, number, number]> = [
    [0.0, 68, 1, 84],
    [0.25, 59, 82, 139],
    [0.5, 33, 145, 140],
    [0.75, 94, 201, 98],
    [1.0, 253, 231, 37],
  ];
  for (let i = 1; i < stops.length; i++) {
    if (x <= stops[i][0]) {
      const [t0, r0, g0, b0] = stops[i - 1];
      const [t1, r1, g1, b1] = stops[i];
      const u = t1 === t0 ? 0 : (x - t0) / (t1 - t0);
      return [Math.round(r0 + u * (r1 - r0)),
              Math.round(g0 + u * (g1 - g0)),
              Math.round(b0 + u * (b1 - b0))];
    }
  }
  return [253, 231, 37];
}

export const SERIES_COLORS: Array<[number, number, number]> = [
  [31, 119, 180], [255, 127, 14], [44, 160, 44], [214, 39, 40],
  [148, 103, 189], [140, 86, 75],
];

export function lighten(rgb: [number, number, number],
                        f: number): [number, number, number] {
  return [Math.round(rgb[0] + (255 - rgb[0]) * f),
          Math.round(rgb[1] + (255 - rgb[1]) * f),
          Math.round(rgb[2] + (255 - rgb[2]) * f)];
}

// 5x7 bitmap font, one row per byte (top to bottom), 5 MSBs used
const FONT: Record<string, number[]> = {
  "0": [0x0e, 0x11, 0x13, 0x15, 0x19, 0x11, 0x0e],
  "1": [0x04, 0x0c, 0x04, 0x04, 0x04, 0x04, 0x0e],
  "2": [0x0e, 0x11, 0x01, 0x02, 0x04, 0x08, 0x1f],
  "3": [0x1f, 0x02, 0x04, 0x02, 0x01, 0x11, 0x0e],
  "4": [0x02, 0x06, 0x0a, 0x12, 0x1f, 0x02, 0x02],
  "5": [0x1f, 0x10, 0x1e, 0x01, 0x01, 0x11, 0x0e],
  "6": [0x06, 0x08, 0x10, 0x1e, 0x11, 0x11, 0x0e],
  "7": [0x1f, 0x01, 0x02, 0x04, 0x08, 0x08, 0x08],
  "8": [0x0e, 0x11, 0x11, 0x0e, 0x11, 0x11, 0x0e],
  "9": [0x0e, 0x11, 0x11, 0x0f, 0x01, 0x02, 0x0c],
  ".": [0x00, 0x00, 0x00, 0x00, 0x00, 0x0c, 0x0c],
  "-": [0x00, 0x00, 0x00, 0x1f, 0x00, 0x00, 0x00],
  "+": [0x00, 0x04, 0x04, 0x1f, 0x04, 0x04, 0x00],
  "e": [0x00, 0x00, 0x0e, 0x11, 0x1f, 0x10, 0x0e],
  " ": [0, 0, 0, 0, 0, 0, 0],
  "?": [0x0e, 0x11, 0x01, 0x02, 0x04, 0x00, 0x04],
  "a": [0x00, 0x00, 0x0e, 0x01, 0x0f, 0x11, 0x0f],
  "b": [0x10, 0x10, 0x1e, 0x11, 0x11, 0x11, 0x1e],
  "c": [0x00, 0x00, 0x0e, 0x10, 0x10, 0x11, 0x0e],
  "d": [0x01, 0x01, 0x0f, 0x11, 0x11, 0x11, 0x0f],
  "f": [0x06, 0x08, 0x1c, 0x08, 0x08, 0x08, 0x08],
  "g": [0x00, 0x0f, 0x11, 0x11, 0x0f, 0x01, 0x0e],
  "h": [0x10, 0x10, 0x1e, 0x11, 0x11, 0x11, 0x11],
  "i": [0x04, 0x00, 0x0c, 0x04, 0x04, 0x04, 0x0e],
  "j": [0x02, 0x00, 0x06, 0x02, 0x02, 0x12, 0x0c],
  "k": [0x10, 0x10, 0x12, 0x14, 0x18, 0x14, 0x12],
  "l": [0x0c, 0x04, 0x04, 0x04, 0x04, 0x04, 0x0e],
  "m": [0x00, 0x00, 0x1a, 0x15, 0x15, 0x15, 0x15],
  "n": [0x00, 0x00, 0x1e, 0x11, 0x11, 0x11, 0x11],
  "o": [0x00, 0x00, 0x0e, 0x11, 0x11, 0x11, 0x0e],
  "p": [0x00, 0x1e, 0x11, 0x11, 0x1e, 0x10, 0x10],
  "q": [0x00, 0x0f, 0x11, 0x11, 0x0f, 0x01, 0x01],
  "r": [0x00, 0x00, 0x16, 0x19, 0x10, 0x10, 0x10],
  "s": [0x00, 0x00, 0x0f, 0x10, 0x0e, 0x01, 0x1e],
  "t": [0x08, 0x08, 0x1c, 0x08, 0x08, 0x09, 0x06],
  "u": [0x00, 0x00, 0x11, 0x11, 0x11, 0x13, 0x0d],
  "v": [0x00, 0x00, 0x11, 0x11, 0x11, 0x0a, 0x04],
  "w": [0x00, 0x00, 0x15, 0x15, 0x15, 0x15, 0x0a],
  "x": [0x00, 0x00, 0x11, 0x0a, 0x04, 0x0a, 0x11],
  "y": [0x00, 0x11, 0x11, 0x0f, 0x01, 0x11, 0x0e],
  "z": [0x00, 0x00, 0x1f, 0x02, 0x04, 0x08, 0x1f],
  "_": [0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x1f],
  "/": [0x01, 0x01, 0x02, 0x04, 0x08, 0x10, 0x10],
  ":": [0x00, 0x0c, 0x0c, 0x00, 0x0c, 0x0c, 0x00],
};
