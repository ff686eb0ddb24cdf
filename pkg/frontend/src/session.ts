/** Client session state machine.
 *
 * Committed rounds always mirror the server history (refresh() re-reads
 * them), and at most one proposal is pending. The server image bytes are
 * the artifacts; this layer never repaints them.
 */

import { ApiClient } from "./api.js";
import { GuidanceOverrides, InpaintResponse, SessionRound } from "./types.js";

export type Status = "empty" | "idle" | "pending" | "proposal";

export interface Proposal {
  prompt: string;
  resultImage: string; // base64 PNG
  mask: string;
  blendedImage: string;
  proposalId: string;
  seed: number;
}

export interface GuidanceControls {
  s_image: number;
  s_text: number;
  steps: number;
  mask_threshold: number;
}

export const DEFAULT_CONTROLS: GuidanceControls = {
  s_image: 1.5,
  s_text: 7.5,
  steps: 100,
  mask_threshold: 0.5,
};

export class UISession {
  status: Status = "empty";
  sessionId: string;
  baseImage: string | null = null;
  currentImage: string | null = null;
  rounds: SessionRound[] = [];
  proposal: Proposal | null = null;
  controls: GuidanceControls = { ...DEFAULT_CONTROLS };
  lastError: string | null = null;
  private listeners: Array<() => void> = [];

  constructor(
    private api: ApiClient,
    sessionId?: string,
  ) {
    this.sessionId = sessionId ?? `ui-${Date.now()}-${Math.floor(Math.random() * 1e6)}`;
  }

  onChange(fn: () => void): void {
    this.listeners.push(fn);
  }

  private emit(): void {
    for (const fn of this.listeners) fn();
  }

  setBaseImage(imageB64: string): void {
    this.baseImage = imageB64;
    this.currentImage = imageB64;
    this.rounds = [];
    this.proposal = null;
    this.status = "idle";
    this.emit();
  }

  /** Request a proposal for the current image; no commitment yet. */
  async propose(prompt: string, seed?: number): Promise<void> {
    if (!prompt.trim()) {
      this.lastError = "prompt must not be empty";
      this.emit();
      return; // client-side validation: no request leaves the browser
    }
    if (this.status === "pending" || this.status === "empty") return;
    this.status = "pending";
    this.lastError = null;
    this.emit();
    const guidance: GuidanceOverrides = { ...this.controls };
    if (seed !== undefined) guidance.seed = seed;
    try {
      const resp: InpaintResponse = await this.api.inpaint({
        image: this.rounds.length === 0 ? (this.baseImage ?? undefined) : undefined,
        prompt,
        guidance,
        session_id: this.sessionId,
      });
      this.proposal = {
        prompt,
        resultImage: resp.result_image,
        mask: resp.mask,
        blendedImage: resp.blended_image,
        proposalId: resp.proposal_id ?? "",
        seed: resp.seed,
      };
      this.status = "proposal";
    } catch (e) {
      this.lastError = String(e);
      this.status = this.rounds.length || this.baseImage ? "idle" : "empty";
    }
    this.emit();
  }

  /** Commit the pending proposal into the server session. */
  async commit(): Promise<void> {
    if (this.status !== "proposal" || !this.proposal) return;
    try {
      await this.api.apply(this.sessionId, this.proposal.proposalId);
      await this.refresh();
    } catch (e) {
      // proposal retained so the user can retry
      this.lastError = String(e);
      this.emit();
    }
  }

  /** Drop the pending proposal; the session is untouched server-side. */
  reject(): void {
    if (this.status !== "proposal") return;
    this.proposal = null;
    this.status = "idle";
    this.emit();
  }

  /** Re-read the authoritative history from the server. */
  async refresh(): Promise<void> {
    const sess = await this.api.getSession(this.sessionId);
    this.baseImage = sess.base_image;
    this.currentImage = sess.current_image;
    this.rounds = sess.rounds;
    this.proposal = null;
    this.status = "idle";
    this.lastError = null;
    this.emit();
  }

  /** Bytes for the download button: exactly the server's current image. */
  downloadBytes(): Uint8Array {
    if (!this.currentImage) throw new Error("no image yet");
    return base64ToBytes(this.currentImage);
  }
}

export function base64ToBytes(b64: string): Uint8Array {
  if (typeof atob === "function") {
    const bin = atob(b64);
    const out = new Uint8Array(bin.length);
    for (let i = 0; i < bin.length; i++) out[i] = bin.charCodeAt(i);
    return out;
  }
  return new Uint8Array(Buffer.from(b64, "base64"));
}

export function bytesToBase64(bytes: Uint8Array): string {
  if (typeof btoa === "function") {
    let bin = "";
    for (const b of bytes) bin += String.fromCharCode(b);
    return btoa(bin);
  }
  return Buffer.from(bytes).toString("base64");
}
