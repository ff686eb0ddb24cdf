import { createHash } from "node:crypto";
import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { bytesToBase64, UISession } from "../src/session.js";
import { MockServer } from "./mockserver.js";

function makeSession(server: MockServer): UISession {
  const api = new ApiClient("http://svc.local", server.fetchFn);
  const s = new UISession(api, "test-session");
  s.setBaseImage(bytesToBase64(new TextEncoder().encode("PNG:base")));
  return s;
}

function sha256(bytes: Uint8Array): string {
  return createHash("sha256").update(bytes).digest("hex");
}

describe("UISession", () => {
  it("propose -> commit -> refresh restores identical history", async () => {
    const server = new MockServer();
    const s = makeSession(server);
    await s.propose("red circle", 7);
    expect(s.status).toBe("proposal");
    await s.commit();
    expect(s.status).toBe("idle");
    expect(s.rounds.length).toBe(1);
    const before = JSON.stringify(s.rounds);
    const currentBefore = s.currentImage;

    // a fresh client (page refresh) restores the same state from the server
    const s2 = new UISession(new ApiClient("http://svc.local", server.fetchFn), "test-session");
    await s2.refresh();
    expect(JSON.stringify(s2.rounds)).toBe(before);
    expect(s2.currentImage).toBe(currentBefore);
  });

  it("downloaded bytes hash-match the server artifact", async () => {
    const server = new MockServer();
    const s = makeSession(server);
    await s.propose("red circle", 3);
    await s.commit();
    const serverSession = server.sessions.get("test-session")!;
    const serverB64 = serverSession.rounds[0].blended_image;
    const serverBytes = Uint8Array.from(Buffer.from(serverB64, "base64"));
    expect(sha256(s.downloadBytes())).toBe(sha256(serverBytes));
  });

  it("guidance overrides appear in the server session log", async () => {
    const server = new MockServer();
    const s = makeSession(server);
    s.controls = { s_image: 2.5, s_text: 9.0, steps: 40, mask_threshold: 0.35 };
    await s.propose("red circle", 42);
    await s.commit();
    const logged = server.sessions.get("test-session")!.rounds[0].guidance;
    expect(logged.s_image).toBe(2.5);
    expect(logged.s_text).toBe(9.0);
    expect(logged.steps).toBe(40);
    expect(logged.mask_threshold).toBe(0.35);
    expect(logged.seed).toBe(42);
  });

  it("empty prompt is rejected client-side without a request", async () => {
    const server = new MockServer();
    const s = makeSession(server);
    await s.propose("   ");
    expect(server.inpaintCalls.length).toBe(0);
    expect(s.lastError).toContain("empty");
    expect(s.status).toBe("idle");
  });

  it("reject drops the proposal and leaves the server untouched", async () => {
    const server = new MockServer();
    const s = makeSession(server);
    await s.propose("red circle", 1);
    expect(s.proposal).not.toBeNull();
    s.reject();
    expect(s.proposal).toBeNull();
    expect(s.status).toBe("idle");
    expect(server.sessions.get("test-session")!.rounds.length).toBe(0);
  });

  it("server failure shows an error and keeps the proposal for retry", async () => {
    const server = new MockServer();
    const s = makeSession(server);
    await s.propose("red circle", 1);
    server.failNext = 500;
    await s.commit();
    expect(s.lastError).toContain("injected_failure");
    expect(s.proposal).not.toBeNull(); // retained
    await s.commit(); // retry succeeds
    expect(s.rounds.length).toBe(1);
  });

  it("second round omits the client image (server uses session current)", async () => {
    const server = new MockServer();
    const s = makeSession(server);
    await s.propose("red circle", 1);
    await s.commit();
    await s.propose("red circle", 2);
    await s.commit();
    expect(server.inpaintCalls[0].image).toBeDefined();
    expect(server.inpaintCalls[1].image).toBeUndefined();
    expect(s.rounds.length).toBe(2);
  });

  it("propose while pending is ignored (single in-flight request)", async () => {
    const server = new MockServer();
    const s = makeSession(server);
    const p1 = s.propose("red circle", 1);
    const p2 = s.propose("red circle", 2); // status is pending: no-op
    await Promise.all([p1, p2]);
    expect(server.inpaintCalls.length).toBe(1);
  });
});
