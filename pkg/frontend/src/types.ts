/** Wire types of the editing service (mirrors the HTTP/JSON contract). */

export interface GuidanceOverrides {
  s_image?: number;
  s_text?: number;
  steps?: number;
  mask_threshold?: number;
  seed?: number;
}

export interface InpaintRequest {
  image?: string; // base64 PNG; omitted when the session already has one
  prompt: string;
  guidance?: GuidanceOverrides;
  session_id?: string;
}

export interface InpaintResponse {
  result_image: string;
  mask: string;
  blended_image: string;
  seed: number;
  timing_ms: number;
  proposal_id?: string;
}

export interface ApplyResponse {
  round_index: number;
  current_image: string;
}

export interface SessionRound {
  caption: string;
  guidance: Record<string, unknown>;
  result_image: string;
  mask: string;
  blended_image: string;
}

export interface SessionResponse {
  session_id: string;
  base_image: string;
  current_image: string;
  rounds: SessionRound[];
}

export interface HealthResponse {
  status: string;
  ckpt_hash: string;
  vocab: string[];
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public reason: string,
    message?: string,
  ) {
    super(message ?? `${status}: ${reason}`);
  }
}
