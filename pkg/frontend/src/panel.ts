/* Designer panel state and its interaction rules.
 *
 * The panel is pure bookkeeping: wall count, per-node corner orders on the
 * disk, free-variable sliders, and per-mirror attenuation sliders.  All
 * geometry stays on the server; the only rules enforced here are the
 * interactive ones.  A one-wall room locks its single node at 1.  A
 * two-wall room keeps both nodes equal: editing either updates the other
 * before anything is sent.  Changing the wall count resets every node to
 * the default order.  Dragging an individual attenuation slider leaves the
 * preset and enters custom mode.
 */

import { CoverPayload, EmphasisMode } from "./types.js";

export const DEFAULT_WALLS = 5;
export const DEFAULT_ORDER = 2;
export const DEFAULT_FREE_VAR = 1.4;
export const MIN_WALLS = 1;
export const MAX_WALLS = 8;
export const MIN_ORDER = 1;
export const MAX_ORDER = 64;

export interface PanelState {
  walls: number;
  orders: number[];
  freeVars: number[];
  emphasis: EmphasisMode;
  attenuations: number[];
}

function clamp(value: number, lo: number, hi: number): number {
  if (!Number.isFinite(value)) return lo;
  return Math.min(hi, Math.max(lo, value));
}

function resize(values: number[], length: number, fill: number): number[] {
  const out = values.slice(0, length);
  while (out.length < length) out.push(fill);
  return out;
}

/* Preset attenuation vectors: orbifold kills every mirror image, universal
 * keeps them all, translational keeps a single mirror live.  These match
 * the server's own preset resolution, so sliders show exactly what the
 * service will use.
 */
export function presetVector(mode: EmphasisMode, mirrors: number): number[] {
  if (mode === "orbifold") return new Array(mirrors).fill(0);
  if (mode === "universal") return new Array(mirrors).fill(1);
  if (mode === "translational") {
    const att: number[] = new Array(mirrors).fill(0);
    if (mirrors > 0) att[0] = 1;
    return att;
  }
  throw new Error("custom emphasis has no preset vector");
}

/* One mirror per wall: the attenuation sliders track the wall count. */
export function mirrorCount(state: PanelState): number {
  return state.walls;
}

export function createPanel(): PanelState {
  return {
    walls: DEFAULT_WALLS,
    orders: new Array(DEFAULT_WALLS).fill(DEFAULT_ORDER),
    freeVars: [],
    emphasis: "universal",
    attenuations: presetVector("universal", DEFAULT_WALLS),
  };
}

export function setWalls(state: PanelState, walls: number): PanelState {
  const n = Math.round(clamp(walls, MIN_WALLS, MAX_WALLS));
  const orders = n === 1 ? [1] : new Array(n).fill(DEFAULT_ORDER);
  const attenuations =
    state.emphasis === "custom"
      ? resize(state.attenuations, n, 0)
      : presetVector(state.emphasis, n);
  return { ...state, walls: n, orders, attenuations };
}

export function setOrder(state: PanelState, index: number, value: number): PanelState {
  if (state.walls === 1) {
    // the only node is locked at 1
    return { ...state, orders: [1] };
  }
  const v = clamp(value, MIN_ORDER, MAX_ORDER);
  const orders = state.orders.slice();
  if (state.walls === 2) {
    // both corners of a two-wall room share one order
    orders[0] = v;
    orders[1] = v;
  } else if (index >= 0 && index < orders.length) {
    orders[index] = v;
  }
  return { ...state, orders };
}

export function setFreeVar(state: PanelState, index: number, value: number): PanelState {
  if (index < 0 || index >= state.freeVars.length) return state;
  const freeVars = state.freeVars.slice();
  freeVars[index] = clamp(value, 0.05, 8);
  return { ...state, freeVars };
}

/* Fit the slider list to the count the server reported for the current
 * room, keeping values the user already chose.
 */
export function syncFreeVars(state: PanelState, count: number): PanelState {
  if (count === state.freeVars.length) return state;
  return { ...state, freeVars: resize(state.freeVars, count, DEFAULT_FREE_VAR) };
}

export function applyEmphasis(state: PanelState, mode: EmphasisMode): PanelState {
  if (mode === "custom") return { ...state, emphasis: "custom" };
  return { ...state, emphasis: mode, attenuations: presetVector(mode, mirrorCount(state)) };
}

export function setAttenuation(state: PanelState, index: number, value: number): PanelState {
  if (index < 0 || index >= state.attenuations.length) return state;
  const attenuations = state.attenuations.slice();
  attenuations[index] = clamp(value, 0, 1);
  return { ...state, attenuations, emphasis: "custom" };
}

/* Notation text for the current orders: single digits stay bare, anything
 * longer or fractional is parenthesized, e.g. [2,3,6] -> "*236" and
 * [1.5,12,12] -> "*(1.5)(12)(12)".
 */
export function notationText(orders: number[]): string {
  let out = "*";
  for (const k of orders) {
    const bare = Number.isInteger(k) && k >= 1 && k <= 9;
    out += bare ? String(k) : "(" + String(k) + ")";
  }
  return out;
}

export function nonIntegerOrders(state: PanelState): boolean {
  return state.orders.some((k) => !Number.isInteger(k));
}

export function classifyPayload(state: PanelState): { notation: string } {
  return { notation: notationText(state.orders) };
}

export function coverPayload(state: PanelState): CoverPayload {
  const payload: CoverPayload = { notation: notationText(state.orders) };
  if (state.freeVars.length > 0) payload.free_vars = state.freeVars.slice();
  payload.style =
    state.emphasis === "custom"
      ? { attenuations: state.attenuations.slice() }
      : { emphasis: state.emphasis };
  return payload;
}
