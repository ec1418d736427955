/* Wires the designer page together: the node disk, the sliders, the preset
 * buttons, the classification badge, the banners, and the canvas.  State
 * transitions live in panel.ts, traffic in client.ts, painting in draw.ts;
 * this file only moves values between the DOM and those modules.
 */

import {
  applyEmphasis,
  createPanel,
  nonIntegerOrders,
  notationText,
  setAttenuation,
  setFreeVar,
  setOrder,
  setWalls,
  syncFreeVars,
  MAX_WALLS,
  MIN_WALLS,
  PanelState,
} from "./panel.js";
import { ClientView, DesignerClient } from "./client.js";
import { renderToCanvas } from "./draw.js";
import { EmphasisMode } from "./types.js";

const PRESETS: EmphasisMode[] = ["orbifold", "translational", "universal"];

function must<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) throw new Error("missing element #" + id);
  return node as T;
}

const apiBase =
  new URLSearchParams(window.location.search).get("api") ?? "http://127.0.0.1:8750";

const canvas = must<HTMLCanvasElement>("tiling");
const badge = must<HTMLSpanElement>("badge");
const statusLine = must<HTMLSpanElement>("status");
const notationBox = must<HTMLSpanElement>("notation");
const warningBox = must<HTMLDivElement>("warning");
const bannerBox = must<HTMLDivElement>("banner");
const wallsInput = must<HTMLInputElement>("walls");
const wallsReadout = must<HTMLSpanElement>("walls-readout");
const nodeDisk = must<HTMLDivElement>("nodes");
const freeVarBox = must<HTMLDivElement>("free-vars");
const attBox = must<HTMLDivElement>("attenuations");
const presetBox = must<HTMLDivElement>("presets");

let panel: PanelState = createPanel();
let roles: string[] = [];

const client = new DesignerClient(apiBase, onView);

function send(): void {
  notationBox.textContent = notationText(panel.orders);
  refreshWarning();
  client.schedule(panel);
}

function refreshWarning(): void {
  if (nonIntegerOrders(panel)) {
    warningBox.textContent =
      "not an orbifold — reflections will not tile seamlessly";
    warningBox.hidden = false;
  } else {
    warningBox.hidden = true;
  }
}

function capitalize(word: string): string {
  return word.charAt(0).toUpperCase() + word.slice(1);
}

// ---------------------------------------------------------------------------
// controls

function rebuildNodes(): void {
  nodeDisk.textContent = "";
  const n = panel.walls;
  for (let i = 0; i < n; i += 1) {
    const input = document.createElement("input");
    input.type = "number";
    input.step = "0.5";
    input.min = "1";
    input.max = "12";
    input.value = String(panel.orders[i]);
    input.className = "node";
    input.disabled = n === 1;
    const angle = -Math.PI / 2 + (2 * Math.PI * i) / n;
    const x = 50 + 42 * Math.cos(angle);
    const y = 50 + 42 * Math.sin(angle);
    input.style.left = x + "%";
    input.style.top = y + "%";
    input.addEventListener("input", () => {
      const v = parseFloat(input.value);
      if (!Number.isFinite(v)) return;
      panel = setOrder(panel, i, v);
      if (panel.walls === 2) {
        // the sibling snaps to match before anything is sent
        const siblings = nodeDisk.querySelectorAll<HTMLInputElement>("input");
        siblings.forEach((other, j) => {
          if (j !== i) other.value = String(panel.orders[j]);
        });
      }
      send();
    });
    nodeDisk.appendChild(input);
  }
}

function slider(
  min: number,
  max: number,
  step: number,
  value: number,
  label: string,
  onInput: (v: number, readout: HTMLSpanElement) => void,
): HTMLDivElement {
  const row = document.createElement("div");
  row.className = "slider-row";
  const name = document.createElement("label");
  name.textContent = label;
  const input = document.createElement("input");
  input.type = "range";
  input.min = String(min);
  input.max = String(max);
  input.step = String(step);
  input.value = String(value);
  const readout = document.createElement("span");
  readout.className = "readout";
  readout.textContent = value.toFixed(2);
  input.addEventListener("input", () => {
    const v = parseFloat(input.value);
    readout.textContent = v.toFixed(2);
    onInput(v, readout);
  });
  row.appendChild(name);
  row.appendChild(input);
  row.appendChild(readout);
  return row;
}

function rebuildFreeVars(): void {
  freeVarBox.textContent = "";
  if (panel.freeVars.length === 0) {
    const note = document.createElement("p");
    note.className = "note";
    note.textContent = "this room has no free variables";
    freeVarBox.appendChild(note);
    return;
  }
  panel.freeVars.forEach((value, i) => {
    const label = roles[i] ?? "length " + (i + 1);
    freeVarBox.appendChild(
      slider(0.2, 4, 0.01, value, label, (v) => {
        panel = setFreeVar(panel, i, v);
        send();
      }),
    );
  });
}

function rebuildAttenuations(): void {
  attBox.textContent = "";
  panel.attenuations.forEach((value, i) => {
    attBox.appendChild(
      slider(0, 1, 0.01, value, "mirror " + (i + 1), (v) => {
        panel = setAttenuation(panel, i, v);
        refreshPresetButtons();
        send();
      }),
    );
  });
}

function refreshPresetButtons(): void {
  presetBox.querySelectorAll<HTMLButtonElement>("button").forEach((button) => {
    button.classList.toggle("active", button.dataset.mode === panel.emphasis);
  });
}

function buildPresetButtons(): void {
  for (const mode of PRESETS) {
    const button = document.createElement("button");
    button.type = "button";
    button.textContent = mode;
    button.dataset.mode = mode;
    button.addEventListener("click", () => {
      panel = applyEmphasis(panel, mode);
      rebuildAttenuations();
      refreshPresetButtons();
      send();
    });
    presetBox.appendChild(button);
  }
  refreshPresetButtons();
}

wallsInput.min = String(MIN_WALLS);
wallsInput.max = String(MAX_WALLS);
wallsInput.value = String(panel.walls);
wallsReadout.textContent = String(panel.walls);
wallsInput.addEventListener("input", () => {
  const n = parseInt(wallsInput.value, 10);
  if (!Number.isFinite(n)) return;
  panel = setWalls(panel, n);
  wallsReadout.textContent = String(panel.walls);
  rebuildNodes();
  rebuildAttenuations();
  send();
});

// ---------------------------------------------------------------------------
// server view

function onView(view: ClientView): void {
  const cls = view.classification;
  if (cls !== null) {
    badge.textContent = capitalize(cls.kind);
    badge.className = "badge " + cls.kind;
    roles = cls.roles ?? [];
    if (cls.free_variables !== null) {
      const synced = syncFreeVars(panel, cls.free_variables);
      if (synced !== panel) {
        panel = synced;
        rebuildFreeVars();
      }
    }
  }
  if (view.banner !== null) {
    const title =
      view.banner.kind === "bad-orbifold"
        ? "bad orbifold"
        : view.banner.kind === "network"
          ? "service unreachable"
          : "request rejected";
    bannerBox.textContent = "";
    const strong = document.createElement("strong");
    strong.textContent = title + ": ";
    bannerBox.appendChild(strong);
    bannerBox.appendChild(document.createTextNode(view.banner.message));
    if (view.banner.hint) {
      const hint = document.createElement("div");
      hint.className = "hint";
      hint.textContent = view.banner.hint;
      bannerBox.appendChild(hint);
    }
    bannerBox.hidden = false;
  } else {
    bannerBox.hidden = true;
  }
  if (view.tiling !== null) {
    renderToCanvas(canvas, view.tiling);
    statusLine.textContent = view.pending
      ? "working..."
      : view.tiling.copies.length +
        " copies of " +
        view.tiling.notation +
        (view.tiling.overlapping ? " (overlapping)" : "");
  } else {
    statusLine.textContent = view.pending ? "working..." : "no tiling yet";
  }
}

rebuildNodes();
rebuildFreeVars();
rebuildAttenuations();
buildPresetButtons();
notationBox.textContent = notationText(panel.orders);
refreshWarning();
void client.flush(panel);
