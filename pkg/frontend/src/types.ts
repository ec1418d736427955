/* Wire types for the tiling service.  These mirror the JSON records the
 * server emits verbatim; nothing here is computed client-side.
 */

export type GeometryKind = "spherical" | "euclidean" | "hyperbolic";

export type EmphasisMode = "orbifold" | "universal" | "translational" | "custom";

/* A finite chart point [x, y]; points at infinity serialize as null. */
export type Point = [number, number];

export interface ClassificationRecord {
  notation: string;
  canonical: string;
  kind: GeometryKind;
  euler_char: number;
  euler_char_exact?: string;
  is_orbifold: boolean;
  is_bad: boolean;
  is_realizable: boolean;
  constructible: boolean;
  free_variables: number | null;
  roles: string[] | null;
}

export interface CopyMatrix {
  a: Point;
  b: Point;
  c: Point;
  d: Point;
}

export interface CopyRecord {
  matrix: CopyMatrix;
  flip: boolean;
  depth: number;
  path: number[];
  intensity: number;
  center: Point | null;
  contains_infinity: boolean;
  vertices: (Point | null)[];
}

export interface TilingStyle {
  emphasis: string;
  attenuations: number[];
  viewport_radius: number;
  stroke: string;
  fill: string;
  size: number;
}

export interface TilingDocument {
  kind: GeometryKind;
  notation: string;
  euler_char: number;
  vertices: (Point | null)[];
  corner_orders: number[];
  side_lengths: number[];
  base_point: Point | null;
  closure_residual: number;
  overlapping: boolean;
  style: TilingStyle;
  copies: CopyRecord[];
}

export interface ApiError {
  error: string;
  message: string;
  hint?: string;
  position?: number;
  cut_index?: number;
  residuals?: Record<string, number | number[]>;
}

export interface CoverPayload {
  notation: string;
  free_vars?: number[];
  options?: {
    max_depth?: number;
    max_copies?: number;
    min_diameter?: number;
  };
  style?: {
    emphasis?: string;
    attenuations?: number[];
    size?: number;
  };
}
