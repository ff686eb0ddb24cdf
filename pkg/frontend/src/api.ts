/** Thin typed client for the editing service. Fetch is injectable for tests. */

import {
  ApiError,
  ApplyResponse,
  HealthResponse,
  InpaintRequest,
  InpaintResponse,
  SessionResponse,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private baseUrl: string,
    private fetchFn: FetchLike = fetch.bind(globalThis),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let resp: Response;
    try {
      resp = await this.fetchFn(this.baseUrl + path, init);
    } catch (e) {
      throw new ApiError(0, "network_error", String(e));
    }
    let body: unknown = null;
    try {
      body = await resp.json();
    } catch {
      /* non-JSON error body */
    }
    if (!resp.ok) {
      const detail = (body as { detail?: { reason?: string } })?.detail;
      throw new ApiError(resp.status, detail?.reason ?? "http_error");
    }
    return body as T;
  }

  health(): Promise<HealthResponse> {
    return this.request<HealthResponse>("/v1/health");
  }

  inpaint(req: InpaintRequest): Promise<InpaintResponse> {
    return this.request<InpaintResponse>("/v1/inpaint", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(req),
    });
  }

  apply(sessionId: string, proposalId: string): Promise<ApplyResponse> {
    return this.request<ApplyResponse>(`/v1/session/${sessionId}/apply`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ proposal_id: proposalId }),
    });
  }

  getSession(sessionId: string): Promise<SessionResponse> {
    return this.request<SessionResponse>(`/v1/session/${sessionId}`);
  }
}
