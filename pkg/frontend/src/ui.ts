// DOM wiring: an enroll panel and a login panel sharing the drawing surface
// logic. All matching policy lives server-side; this file only captures
// strokes, renders them live, and displays what the API returns.

import { ApiClient, describeError } from "./api.js";
import { CaptureSession } from "./capture.js";
import { verdictText } from "./format.js";
import type { CaptureMode, TimedPoint } from "./types.js";

const STROKE_STYLE = "#d33";

interface DrawingSurface {
  canvas: HTMLCanvasElement;
  session: () => CaptureSession | null;
  reset: (width: number, height: number, mode: CaptureMode) => CaptureSession;
  setBackground: (img: HTMLImageElement | null) => void;
  redraw: () => void;
}

function makeSurface(mode: CaptureMode): DrawingSurface {
  const canvas = document.createElement("canvas");
  canvas.width = 480;
  canvas.height = 360;
  canvas.className = "pad";
  const ctx = canvas.getContext("2d")!;
  let session: CaptureSession | null = null;
  let background: HTMLImageElement | null = null;

  function redraw() {
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    if (background) {
      ctx.drawImage(background, 0, 0, canvas.width, canvas.height);
    } else {
      ctx.fillStyle = "#f4f4f4";
      ctx.fillRect(0, 0, canvas.width, canvas.height);
    }
    if (!session) return;
    ctx.strokeStyle = STROKE_STYLE;
    ctx.fillStyle = STROKE_STYLE;
    ctx.lineWidth = 3;
    ctx.lineJoin = "round";
    ctx.lineCap = "round";
    for (const stroke of session.allStrokes()) drawStroke(ctx, stroke);
  }

  function samplePoint(ev: PointerEvent) {
    const rect = canvas.getBoundingClientRect();
    return {
      x: ((ev.clientX - rect.left) / rect.width) * canvas.width,
      y: ((ev.clientY - rect.top) / rect.height) * canvas.height,
      timeStamp: ev.timeStamp,
    };
  }

  canvas.addEventListener("pointerdown", (ev) => {
    if (!session) return;
    canvas.setPointerCapture(ev.pointerId);
    session.pointerDown(samplePoint(ev));
    redraw();
  });
  canvas.addEventListener("pointermove", (ev) => {
    if (!session) return;
    session.pointerMove(samplePoint(ev));
    redraw();
  });
  canvas.addEventListener("pointerup", (ev) => {
    if (!session) return;
    session.pointerUp(samplePoint(ev));
    redraw();
  });

  return {
    canvas,
    session: () => session,
    reset(width, height, newMode) {
      canvas.width = width;
      canvas.height = height;
      session = new CaptureSession(width, height, newMode);
      redraw();
      return session;
    },
    setBackground(img) {
      background = img;
      redraw();
    },
    redraw,
  };
}

function drawStroke(ctx: CanvasRenderingContext2D, stroke: TimedPoint[]) {
  if (stroke.length === 0) return;
  if (stroke.length === 1) {
    ctx.beginPath();
    ctx.arc(stroke[0].x, stroke[0].y, 2, 0, 2 * Math.PI);
    ctx.fill();
    return;
  }
  ctx.beginPath();
  ctx.moveTo(stroke[0].x, stroke[0].y);
  for (const p of stroke.slice(1)) ctx.lineTo(p.x, p.y);
  ctx.stroke();
}

function field(label: string, input: HTMLElement): HTMLLabelElement {
  const wrap = document.createElement("label");
  wrap.className = "field";
  wrap.append(label, input);
  return wrap;
}

function banner(): HTMLParagraphElement {
  const p = document.createElement("p");
  p.className = "banner";
  return p;
}

function buildEnrollPanel(client: ApiClient): HTMLElement {
  const panel = document.createElement("section");
  panel.append(Object.assign(document.createElement("h2"), { textContent: "Create account" }));

  const username = document.createElement("input");
  username.placeholder = "username";
  const file = document.createElement("input");
  file.type = "file";
  file.accept = "image/*";
  const threshold = document.createElement("input");
  threshold.type = "range";
  threshold.min = "0";
  threshold.max = "1";
  threshold.step = "0.05";
  threshold.value = "0.8";
  const thresholdLabel = document.createElement("span");
  thresholdLabel.textContent = " 0.80";
  threshold.addEventListener("input", () => {
    thresholdLabel.textContent = ` ${Number(threshold.value).toFixed(2)}`;
  });

  const surface = makeSurface("enroll");
  const clearBtn = Object.assign(document.createElement("button"), { textContent: "clear" });
  const submitBtn = Object.assign(document.createElement("button"), {
    textContent: "create account",
    disabled: true,
  });
  const status = banner();

  let imageBase64 = "";

  function updateSubmit() {
    const s = surface.session();
    submitBtn.disabled = !(username.value.trim() && imageBase64 && s && s.hasStrokes());
  }
  username.addEventListener("input", updateSubmit);
  surface.canvas.addEventListener("pointerup", updateSubmit);

  file.addEventListener("change", () => {
    const selected = file.files?.[0];
    if (!selected) return;
    const reader = new FileReader();
    reader.onload = () => {
      const dataUrl = reader.result as string;
      imageBase64 = dataUrl.slice(dataUrl.indexOf(",") + 1);
      const img = new Image();
      img.onload = () => {
        // drawing happens at the displayed size; those are the dims we enroll
        const scale = Math.min(1, 640 / img.naturalWidth);
        surface.reset(Math.round(img.naturalWidth * scale),
                      Math.round(img.naturalHeight * scale), "enroll");
        surface.setBackground(img);
        updateSubmit();
      };
      img.src = dataUrl;
    };
    reader.readAsDataURL(selected);
  });

  clearBtn.addEventListener("click", () => {
    surface.session()?.clear(); // strokes only; the background image stays
    surface.redraw();
    updateSubmit();
  });

  submitBtn.addEventListener("click", async () => {
    const s = surface.session();
    if (!s) return;
    try {
      const summary = await client.enroll({
        username: username.value.trim(),
        threshold: Number(threshold.value),
        image_base64: imageBase64,
        image_width: s.canvasWidth,
        image_height: s.canvasHeight,
        gesture: s.toGesture(),
      });
      status.textContent =
        `account ${summary.username} created, threshold ${summary.threshold}`;
    } catch (err) {
      status.textContent = describeError(err);
    }
  });

  panel.append(field("username ", username), field("image ", file),
               field("threshold ", threshold), thresholdLabel,
               surface.canvas, clearBtn, submitBtn, status);
  return panel;
}

function buildLoginPanel(client: ApiClient): HTMLElement {
  const panel = document.createElement("section");
  panel.append(Object.assign(document.createElement("h2"), { textContent: "Log in" }));

  const username = document.createElement("input");
  username.placeholder = "username";
  const loadBtn = Object.assign(document.createElement("button"), { textContent: "load image" });
  const surface = makeSurface("login");
  const clearBtn = Object.assign(document.createElement("button"), { textContent: "clear" });
  const submitBtn = Object.assign(document.createElement("button"), {
    textContent: "log in",
    disabled: true,
  });
  const status = banner();

  loadBtn.addEventListener("click", async () => {
    try {
      const ch = await client.challenge(username.value.trim());
      const img = new Image();
      img.onload = () => {
        surface.reset(ch.image_width, ch.image_height, "login");
        surface.setBackground(img);
        submitBtn.disabled = true;
      };
      img.src = `data:image/*;base64,${ch.image_base64}`;
      status.textContent = "draw your gesture over the image";
    } catch (err) {
      status.textContent = describeError(err);
    }
  });

  surface.canvas.addEventListener("pointerup", () => {
    submitBtn.disabled = !surface.session()?.hasStrokes();
  });
  clearBtn.addEventListener("click", () => {
    surface.session()?.clear();
    surface.redraw();
    submitBtn.disabled = true;
  });

  submitBtn.addEventListener("click", async () => {
    const s = surface.session();
    if (!s) return;
    try {
      const result = await client.login(username.value.trim(), s.toGesture());
      status.textContent = verdictText(result);
      if (!result.accepted) s.clear(); // invite a fresh try, degree shown above
    } catch (err) {
      // network failure keeps the strokes so the user can just resubmit
      status.textContent = describeError(err);
    }
  });

  panel.append(field("username ", username), loadBtn, surface.canvas,
               clearBtn, submitBtn, status);
  return panel;
}

export function buildApp(root: HTMLElement, client: ApiClient): void {
  const title = document.createElement("h1");
  title.textContent = "gesturelock";
  root.append(title, buildEnrollPanel(client), buildLoginPanel(client));
}
