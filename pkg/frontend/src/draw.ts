/* Turns a tiling document into flat draw instructions and paints them on a
 * canvas.  Every coordinate comes straight from the server document; the
 * only work here is ordering, scaling, and skipping what cannot be drawn.
 * Deepest copies paint first so near copies sit on top, matching the
 * server's own vector output.  A copy touching infinity (a null vertex or
 * a marked interior) has no meaningful filled region in the chart and gets
 * an open outline only.
 */

import { Point, TilingDocument, CopyRecord } from "./types.js";

export interface PolyDraw {
  points: Point[];
  intensity: number;
  outlineOnly: boolean;
  copyIndex: number;
  depth: number;
}

export interface ViewBox {
  x: number;
  y: number;
  width: number;
  height: number;
}

function copyVisible(doc: TilingDocument, copy: CopyRecord): boolean {
  if (doc.kind !== "spherical") return true;
  const r = doc.style.viewport_radius;
  return copy.vertices.some((v) => v !== null && Math.hypot(v[0], v[1]) <= r);
}

export function drawList(doc: TilingDocument): PolyDraw[] {
  const order = doc.copies
    .map((_, i) => i)
    .sort((a, b) => doc.copies[b].depth - doc.copies[a].depth || a - b);
  const out: PolyDraw[] = [];
  for (const i of order) {
    const copy = doc.copies[i];
    if (!copyVisible(doc, copy)) continue;
    const finite = copy.vertices.filter((v): v is Point => v !== null);
    if (finite.length < 2) continue;
    out.push({
      points: finite,
      intensity: copy.intensity,
      outlineOnly: copy.contains_infinity || finite.length < copy.vertices.length,
      copyIndex: i,
      depth: copy.depth,
    });
  }
  return out;
}

export function viewBox(doc: TilingDocument): ViewBox {
  if (doc.kind === "euclidean") {
    let x0 = Infinity;
    let x1 = -Infinity;
    let y0 = Infinity;
    let y1 = -Infinity;
    for (const copy of doc.copies) {
      for (const v of copy.vertices) {
        if (v === null) continue;
        x0 = Math.min(x0, v[0]);
        x1 = Math.max(x1, v[0]);
        y0 = Math.min(y0, v[1]);
        y1 = Math.max(y1, v[1]);
      }
    }
    if (x0 > x1) return { x: -1.05, y: -1.05, width: 2.1, height: 2.1 };
    const mx = 0.05 * Math.max(x1 - x0, 1e-9);
    const my = 0.05 * Math.max(y1 - y0, 1e-9);
    return { x: x0 - mx, y: y0 - my, width: x1 - x0 + 2 * mx, height: y1 - y0 + 2 * my };
  }
  // the disk (or the spherical chart window) sits in the unit circle
  return { x: -1.05, y: -1.05, width: 2.1, height: 2.1 };
}

export function renderToCanvas(canvas: HTMLCanvasElement, doc: TilingDocument): void {
  const ctx = canvas.getContext("2d");
  if (ctx === null) return;
  const box = viewBox(doc);
  const scale = Math.min(canvas.width / box.width, canvas.height / box.height);
  ctx.setTransform(1, 0, 0, 1, 0, 0);
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.translate(canvas.width / 2, canvas.height / 2);
  // chart y points up; canvas y points down
  ctx.scale(scale, -scale);
  ctx.translate(-(box.x + box.width / 2), -(box.y + box.height / 2));
  ctx.lineWidth = 0.004 * box.width;
  ctx.strokeStyle = doc.style.stroke;
  ctx.fillStyle = doc.style.fill;
  ctx.lineJoin = "round";
  for (const poly of drawList(doc)) {
    ctx.beginPath();
    ctx.moveTo(poly.points[0][0], poly.points[0][1]);
    for (let i = 1; i < poly.points.length; i += 1) {
      ctx.lineTo(poly.points[i][0], poly.points[i][1]);
    }
    if (poly.outlineOnly) {
      ctx.stroke();
    } else {
      ctx.closePath();
      ctx.globalAlpha = poly.intensity;
      ctx.fill();
      ctx.globalAlpha = 1;
      ctx.stroke();
    }
  }
  if (doc.kind !== "euclidean") {
    ctx.beginPath();
    ctx.arc(0, 0, 1, 0, 2 * Math.PI);
    ctx.lineWidth = 0.006 * box.width;
    ctx.stroke();
  }
}
