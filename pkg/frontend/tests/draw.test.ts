import { describe, expect, it } from "vitest";

import { drawList, viewBox } from "../src/draw.js";
import { Point } from "../src/types.js";
import { makeCopy, makeDoc } from "./fixtures.js";

describe("draw list", () => {
  it("paints deepest copies first and keeps ties in document order", () => {
    const doc = makeDoc({
      copies: [
        makeCopy({ depth: 0 }),
        makeCopy({ depth: 2 }),
        makeCopy({ depth: 1 }),
        makeCopy({ depth: 2 }),
      ],
    });
    expect(drawList(doc).map((p) => p.copyIndex)).toEqual([1, 3, 2, 0]);
  });

  it("draws exactly the document's coordinates", () => {
    const doc = makeDoc();
    const polys = drawList(doc);
    expect(polys).toHaveLength(1);
    polys[0].points.forEach((point, k) => {
      // the same arrays the document carries: nothing is recomputed
      expect(point).toBe(doc.copies[0].vertices[k]);
    });
    expect(polys[0].intensity).toBe(doc.copies[0].intensity);
    expect(polys[0].outlineOnly).toBe(false);
  });

  it("outlines copies that touch infinity instead of filling them", () => {
    const doc = makeDoc({
      copies: [
        makeCopy({ vertices: [[0, 0], [0.3, 0], null] }),
        makeCopy({ contains_infinity: true }),
        makeCopy(),
      ],
    });
    const polys = drawList(doc);
    expect(polys.map((p) => p.outlineOnly)).toEqual([true, true, false]);
    expect(polys[0].points).toHaveLength(2);
  });

  it("skips spherical copies entirely outside the viewport", () => {
    const far: (Point | null)[] = [
      [9, 9],
      [9.3, 9],
      [9, 9.3],
    ];
    const spherical = makeDoc({
      kind: "spherical",
      copies: [makeCopy(), makeCopy({ vertices: far })],
    });
    expect(drawList(spherical)).toHaveLength(1);
    const hyperbolic = makeDoc({ copies: [makeCopy(), makeCopy({ vertices: far })] });
    expect(drawList(hyperbolic)).toHaveLength(2);
  });

  it("skips copies with fewer than two finite vertices", () => {
    const doc = makeDoc({
      copies: [makeCopy({ vertices: [null, null, [0, 0]] })],
    });
    expect(drawList(doc)).toHaveLength(0);
  });
});

describe("view box", () => {
  it("hugs the copies with a five-percent margin in the plane", () => {
    const doc = makeDoc({
      kind: "euclidean",
      copies: [
        makeCopy({ vertices: [[0, 0], [2, 0], [2, 1]] }),
        makeCopy({ vertices: [[0, 0], [2, 1], [0, 1]] }),
      ],
    });
    const box = viewBox(doc);
    expect(box.x).toBeCloseTo(-0.1, 12);
    expect(box.y).toBeCloseTo(-0.05, 12);
    expect(box.width).toBeCloseTo(2.2, 12);
    expect(box.height).toBeCloseTo(1.1, 12);
  });

  it("frames the unit disk otherwise", () => {
    expect(viewBox(makeDoc())).toEqual({ x: -1.05, y: -1.05, width: 2.1, height: 2.1 });
  });
});
