/* Client for the tiling service.
 *
 * Each parameter change schedules one debounced request chain: classify
 * first (cheap, and it tells the panel how many free variables the room
 * wants), then the cover itself.  At most one chain is in flight; a newer
 * change aborts the older one, and any late response from an abandoned
 * chain is discarded.  The last good tiling document is retained through
 * every failure, so the canvas never goes blank: the view always holds the
 * exact response text of the most recent successful cover.
 */

import { classifyPayload, coverPayload, syncFreeVars, PanelState } from "./panel.js";
import { ApiError, ClassificationRecord, TilingDocument } from "./types.js";

export const DEBOUNCE_MS = 150;

export type BannerKind = "bad-orbifold" | "rejected" | "network";

export interface Banner {
  kind: BannerKind;
  message: string;
  hint?: string;
}

export interface ClientView {
  classification: ClassificationRecord | null;
  tiling: TilingDocument | null;
  tilingText: string | null;
  banner: Banner | null;
  pending: boolean;
}

export type Fetcher = (url: string, init: RequestInit) => Promise<Response>;

function bannerFor(status: number, text: string): Banner {
  let message = "request rejected (status " + status + ")";
  let hint: string | undefined;
  try {
    const body = JSON.parse(text) as ApiError;
    if (body.message) message = body.message;
    if (body.hint) hint = body.hint;
  } catch {
    // non-JSON error body: keep the status line
  }
  return { kind: status === 422 ? "bad-orbifold" : "rejected", message, hint };
}

export class DesignerClient {
  view: ClientView = {
    classification: null,
    tiling: null,
    tilingText: null,
    banner: null,
    pending: false,
  };

  private baseUrl: string;
  private onView: (view: ClientView) => void;
  private fetcher: Fetcher;
  private debounceMs: number;
  private timer: ReturnType<typeof setTimeout> | null = null;
  private controller: AbortController | null = null;
  private generation = 0;
  private queued: PanelState | null = null;

  constructor(
    baseUrl: string,
    onView: (view: ClientView) => void,
    fetcher?: Fetcher,
    debounceMs?: number,
  ) {
    this.baseUrl = baseUrl;
    this.onView = onView;
    this.fetcher = fetcher ?? ((url, init) => fetch(url, init));
    this.debounceMs = debounceMs ?? DEBOUNCE_MS;
  }

  /* Debounced entry point: remembers the newest state and flushes it once
   * the input stream pauses.
   */
  schedule(state: PanelState): void {
    this.queued = state;
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => {
      this.timer = null;
      const state = this.queued;
      if (state !== null) void this.flush(state);
    }, this.debounceMs);
  }

  async flush(state: PanelState): Promise<void> {
    this.queued = null;
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    const gen = ++this.generation;
    if (this.controller !== null) this.controller.abort();
    const controller = new AbortController();
    this.controller = controller;
    this.view.pending = true;
    this.onView(this.view);
    try {
      const cls = await this.post("/api/classify", classifyPayload(state), controller);
      if (gen !== this.generation) return;
      let working = state;
      if (cls.status === 200) {
        const record = JSON.parse(cls.text) as ClassificationRecord;
        this.view.classification = record;
        if (record.free_variables !== null) {
          working = syncFreeVars(state, record.free_variables);
        }
      }
      const cover = await this.post("/api/cover", coverPayload(working), controller);
      if (gen !== this.generation) return;
      if (cover.status === 200) {
        this.view.tilingText = cover.text;
        this.view.tiling = JSON.parse(cover.text) as TilingDocument;
        this.view.banner = null;
      } else {
        this.view.banner = bannerFor(cover.status, cover.text);
      }
    } catch (err) {
      if (gen !== this.generation) return;
      if ((err as { name?: string }).name === "AbortError") return;
      this.view.banner = {
        kind: "network",
        message: "cannot reach the tiling service; showing the last good tiling",
      };
    } finally {
      if (gen === this.generation) {
        this.view.pending = false;
        this.onView(this.view);
      }
    }
  }

  private async post(
    path: string,
    body: unknown,
    controller: AbortController,
  ): Promise<{ status: number; text: string }> {
    const response = await this.fetcher(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
      signal: controller.signal,
    });
    return { status: response.status, text: await response.text() };
  }
}
