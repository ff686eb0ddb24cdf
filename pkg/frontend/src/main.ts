/** DOM wiring for the iterative editor. */

import { ApiClient } from "./api.js";
import { composeOverlay, maskArea } from "./overlay.js";
import { bytesToBase64, DEFAULT_CONTROLS, UISession } from "./session.js";

const SERVER_KEY = "diffadd.server";
const SESSION_KEY = "diffadd.session";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function pngUrl(b64: string): string {
  return `data:image/png;base64,${b64}`;
}

async function decodeToImageData(b64: string): Promise<ImageData> {
  const img = new Image();
  img.src = pngUrl(b64);
  await img.decode();
  const canvas = document.createElement("canvas");
  canvas.width = img.naturalWidth;
  canvas.height = img.naturalHeight;
  const ctx = canvas.getContext("2d")!;
  ctx.drawImage(img, 0, 0);
  return ctx.getImageData(0, 0, canvas.width, canvas.height);
}

async function drawProposal(
  session: UISession,
  showOverlay: boolean,
): Promise<void> {
  const canvas = el<HTMLCanvasElement>("proposal-canvas");
  const prop = session.proposal;
  if (!prop) return;
  const base = await decodeToImageData(prop.resultImage);
  canvas.width = base.width;
  canvas.height = base.height;
  const ctx = canvas.getContext("2d")!;
  if (showOverlay) {
    const mask = await decodeToImageData(prop.mask);
    const composed = new Uint8ClampedArray(
      composeOverlay(base.data, mask.data),
    ) as Uint8ClampedArray<ArrayBuffer>;
    ctx.putImageData(new ImageData(composed, base.width, base.height), 0, 0);
    el<HTMLSpanElement>("mask-area").textContent = `${maskArea(mask.data)} px`;
  } else {
    ctx.putImageData(base, 0, 0);
  }
}

function renderHistory(session: UISession): void {
  const strip = el<HTMLDivElement>("history");
  strip.innerHTML = "";
  session.rounds.forEach((round, i) => {
    const cell = document.createElement("div");
    cell.className = "round";
    const img = document.createElement("img");
    img.src = pngUrl(round.blended_image);
    img.title = `round ${i + 1}: ${round.caption}`;
    const label = document.createElement("div");
    label.textContent = `${i + 1}. ${round.caption}`;
    cell.append(img, label);
    strip.append(cell);
  });
}

function render(session: UISession, showOverlay: boolean): void {
  el<HTMLSpanElement>("status").textContent = session.status;
  const err = el<HTMLDivElement>("error-banner");
  if (session.lastError) {
    err.textContent = session.lastError;
    err.style.display = "block";
  } else {
    err.style.display = "none";
  }
  const current = el<HTMLImageElement>("current-image");
  if (session.currentImage) current.src = pngUrl(session.currentImage);
  el<HTMLButtonElement>("propose").disabled = session.status !== "idle";
  el<HTMLButtonElement>("accept").disabled = session.status !== "proposal";
  el<HTMLButtonElement>("reject").disabled = session.status !== "proposal";
  el<HTMLDivElement>("proposal-pane").style.display =
    session.status === "proposal" ? "block" : "none";
  renderHistory(session);
  if (session.status === "proposal") void drawProposal(session, showOverlay);
}

function readControls(session: UISession): void {
  session.controls = {
    s_image: Number(el<HTMLInputElement>("s-image").value),
    s_text: Number(el<HTMLInputElement>("s-text").value),
    steps: Number(el<HTMLInputElement>("steps").value),
    mask_threshold: Number(el<HTMLInputElement>("mask-threshold").value),
  };
}

export function boot(): void {
  const params = new URLSearchParams(location.search);
  const server =
    params.get("server") ?? localStorage.getItem(SERVER_KEY) ?? location.origin;
  localStorage.setItem(SERVER_KEY, server);
  const api = new ApiClient(server);
  const stored = localStorage.getItem(SESSION_KEY) ?? undefined;
  const session = new UISession(api, stored);
  localStorage.setItem(SESSION_KEY, session.sessionId);
  let showOverlay = true;

  session.onChange(() => render(session, showOverlay));

  el<HTMLInputElement>("file-input").addEventListener("change", async (ev) => {
    const input = ev.target as HTMLInputElement;
    const file = input.files?.[0];
    if (!file) return;
    const bytes = new Uint8Array(await file.arrayBuffer());
    // fresh session per upload
    localStorage.removeItem(SESSION_KEY);
    const fresh = new UISession(api);
    localStorage.setItem(SESSION_KEY, fresh.sessionId);
    Object.assign(session, {
      sessionId: fresh.sessionId,
      rounds: [],
      proposal: null,
      lastError: null,
    });
    session.setBaseImage(bytesToBase64(bytes));
  });

  el<HTMLButtonElement>("propose").addEventListener("click", () => {
    readControls(session);
    void session.propose(el<HTMLInputElement>("prompt").value);
  });
  el<HTMLButtonElement>("accept").addEventListener("click", () => void session.commit());
  el<HTMLButtonElement>("reject").addEventListener("click", () => session.reject());
  el<HTMLInputElement>("overlay-toggle").addEventListener("change", (ev) => {
    showOverlay = (ev.target as HTMLInputElement).checked;
    render(session, showOverlay);
  });
  el<HTMLButtonElement>("download").addEventListener("click", () => {
    const bytes = session.downloadBytes();
    const buf = new ArrayBuffer(bytes.length);
    new Uint8Array(buf).set(bytes);
    const blob = new Blob([buf], { type: "image/png" });
    const a = document.createElement("a");
    a.href = URL.createObjectURL(blob);
    a.download = "edited.png";
    a.click();
    URL.revokeObjectURL(a.href);
  });

  // restore a persisted session on page load, if the server knows it
  void session.refresh().catch(() => {
    session.status = "empty";
  });
  render(session, showOverlay);
}

boot();
