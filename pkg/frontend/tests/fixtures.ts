/* Shared test fixtures: minimal but schema-complete server records. */

import { ClassificationRecord, CopyRecord, Point, TilingDocument } from "../src/types.js";

export function makeCopy(over: Partial<CopyRecord> = {}): CopyRecord {
  return {
    matrix: { a: [1, 0], b: [0, 0], c: [0, 0], d: [1, 0] },
    flip: false,
    depth: 0,
    path: [],
    intensity: 1,
    center: [0, 0],
    contains_infinity: false,
    vertices: [
      [0, 0],
      [0.3, 0],
      [0, 0.3],
    ] as (Point | null)[],
    ...over,
  };
}

export function makeDoc(over: Partial<TilingDocument> = {}): TilingDocument {
  return {
    kind: "hyperbolic",
    notation: "*22222",
    euler_char: -0.75,
    vertices: [
      [0, 0],
      [0.3, 0],
      [0, 0.3],
    ],
    corner_orders: [2, 2, 2, 2, 2],
    side_lengths: [1, 1, 1, 1, 1],
    base_point: [0, 0],
    closure_residual: 1e-15,
    overlapping: false,
    style: {
      emphasis: "universal",
      attenuations: [1, 1, 1, 1, 1],
      viewport_radius: 3,
      stroke: "#222222",
      fill: "#4477aa",
      size: 800,
    },
    copies: [makeCopy()],
    ...over,
  };
}

export function makeClassification(
  over: Partial<ClassificationRecord> = {},
): ClassificationRecord {
  return {
    notation: "*22222",
    canonical: "*22222",
    kind: "hyperbolic",
    euler_char: -0.75,
    euler_char_exact: "-3/4",
    is_orbifold: true,
    is_bad: false,
    is_realizable: true,
    constructible: true,
    free_variables: 0,
    roles: [],
    ...over,
  };
}

export function jsonResponse(body: unknown, status = 200): Response {
  const text = typeof body === "string" ? body : JSON.stringify(body);
  return new Response(text, {
    status,
    headers: { "Content-Type": "application/json; charset=utf-8" },
  });
}
