import { describe, expect, it } from "vitest";

import {
  applyEmphasis,
  coverPayload,
  createPanel,
  nonIntegerOrders,
  notationText,
  presetVector,
  setAttenuation,
  setFreeVar,
  setOrder,
  setWalls,
  syncFreeVars,
  DEFAULT_FREE_VAR,
} from "../src/panel.js";

describe("panel defaults", () => {
  it("starts with five walls of order two", () => {
    const panel = createPanel();
    expect(panel.walls).toBe(5);
    expect(panel.orders).toEqual([2, 2, 2, 2, 2]);
    expect(panel.emphasis).toBe("universal");
    expect(panel.attenuations).toEqual([1, 1, 1, 1, 1]);
  });
});

describe("wall-count rules", () => {
  it("locks the single node at 1 when there is one wall", () => {
    let panel = setWalls(createPanel(), 1);
    expect(panel.orders).toEqual([1]);
    panel = setOrder(panel, 0, 7);
    expect(panel.orders).toEqual([1]);
  });

  it("keeps both nodes equal when there are two walls", () => {
    let panel = setWalls(createPanel(), 2);
    expect(panel.orders).toEqual([2, 2]);
    panel = setOrder(panel, 0, 5);
    expect(panel.orders).toEqual([5, 5]);
    panel = setOrder(panel, 1, 3.5);
    expect(panel.orders).toEqual([3.5, 3.5]);
  });

  it("resets every node to 2 when the wall count changes", () => {
    let panel = setWalls(createPanel(), 3);
    panel = setOrder(panel, 1, 3);
    panel = setOrder(panel, 2, 6);
    expect(panel.orders).toEqual([2, 3, 6]);
    panel = setWalls(panel, 4);
    expect(panel.orders).toEqual([2, 2, 2, 2]);
    panel = setWalls(panel, 3);
    expect(panel.orders).toEqual([2, 2, 2]);
  });

  it("clamps orders at the lower bound", () => {
    const panel = setOrder(setWalls(createPanel(), 3), 0, 0.2);
    expect(panel.orders[0]).toBe(1);
  });
});

describe("emphasis presets", () => {
  it("orbifold zeroes every mirror", () => {
    const panel = applyEmphasis(createPanel(), "orbifold");
    expect(panel.emphasis).toBe("orbifold");
    expect(panel.attenuations).toEqual([0, 0, 0, 0, 0]);
  });

  it("universal keeps every mirror at 1", () => {
    const panel = applyEmphasis(applyEmphasis(createPanel(), "orbifold"), "universal");
    expect(panel.attenuations).toEqual([1, 1, 1, 1, 1]);
  });

  it("translational keeps a single mirror live", () => {
    const panel = applyEmphasis(createPanel(), "translational");
    expect(panel.attenuations).toEqual([1, 0, 0, 0, 0]);
  });

  it("preset vectors follow the wall count", () => {
    const panel = applyEmphasis(setWalls(createPanel(), 4), "orbifold");
    expect(panel.attenuations).toEqual([0, 0, 0, 0]);
    expect(presetVector("translational", 3)).toEqual([1, 0, 0]);
  });

  it("dragging one slider leaves the preset and enters custom mode", () => {
    let panel = applyEmphasis(createPanel(), "orbifold");
    panel = setAttenuation(panel, 1, 0.6);
    expect(panel.emphasis).toBe("custom");
    expect(panel.attenuations).toEqual([0, 0.6, 0, 0, 0]);
  });

  it("attenuations clamp to [0, 1]", () => {
    const panel = setAttenuation(createPanel(), 0, 1.7);
    expect(panel.attenuations[0]).toBe(1);
  });
});

describe("notation text", () => {
  it("keeps single digits bare and parenthesizes the rest", () => {
    expect(notationText([2, 3, 6])).toBe("*236");
    expect(notationText([10, 3])).toBe("*(10)3");
    expect(notationText([1.5, 12, 12])).toBe("*(1.5)(12)(12)");
  });

  it("flags non-integer orders", () => {
    const base = setWalls(createPanel(), 3);
    expect(nonIntegerOrders(base)).toBe(false);
    expect(nonIntegerOrders(setOrder(base, 0, 1.5))).toBe(true);
  });
});

describe("free variables", () => {
  it("pads and truncates to the reported count", () => {
    let panel = syncFreeVars(createPanel(), 2);
    expect(panel.freeVars).toEqual([DEFAULT_FREE_VAR, DEFAULT_FREE_VAR]);
    panel = setFreeVar(panel, 0, 0.7);
    panel = syncFreeVars(panel, 1);
    expect(panel.freeVars).toEqual([0.7]);
  });

  it("is a no-op when the count already matches", () => {
    const panel = syncFreeVars(createPanel(), 2);
    expect(syncFreeVars(panel, 2)).toBe(panel);
  });
});

describe("cover payload", () => {
  it("sends the preset name while a preset is active", () => {
    const payload = coverPayload(applyEmphasis(createPanel(), "orbifold"));
    expect(payload.style).toEqual({ emphasis: "orbifold" });
    expect(payload.free_vars).toBeUndefined();
  });

  it("sends the explicit vector in custom mode", () => {
    const panel = setAttenuation(applyEmphasis(createPanel(), "orbifold"), 2, 0.4);
    const payload = coverPayload(panel);
    expect(payload.style).toEqual({ attenuations: [0, 0, 0.4, 0, 0] });
  });

  it("includes free variables once the count is known", () => {
    const panel = syncFreeVars(createPanel(), 2);
    const payload = coverPayload(panel);
    expect(payload.notation).toBe("*22222");
    expect(payload.free_vars).toEqual([1.4, 1.4]);
  });
});
