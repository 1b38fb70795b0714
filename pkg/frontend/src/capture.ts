// Stroke capture over a drawing surface, kept free of DOM types so the same
// logic runs under node tests. Feed it the (x, y, timeStamp) of pointer
// events; it accumulates strokes of timed points in canvas coordinates.

import type { CaptureMode, GestureJson, TimedPoint } from "./types.js";

export interface PointerSample {
  x: number;
  y: number;
  timeStamp: number; // ms, any monotone clock (pointer events provide one)
}

export class CaptureSession {
  readonly canvasWidth: number;
  readonly canvasHeight: number;
  readonly mode: CaptureMode;

  private strokes: TimedPoint[][] = [];
  private current: TimedPoint[] | null = null;
  private strokeStart = 0;

  constructor(canvasWidth: number, canvasHeight: number, mode: CaptureMode) {
    if (canvasWidth <= 0 || canvasHeight <= 0) {
      throw new Error(`capture canvas must be positive, got ${canvasWidth}x${canvasHeight}`);
    }
    this.canvasWidth = canvasWidth;
    this.canvasHeight = canvasHeight;
    this.mode = mode;
  }

  pointerDown(sample: PointerSample): void {
    if (this.current) this.finishStroke(); // missed pointer-up; close the old stroke
    this.strokeStart = sample.timeStamp;
    this.current = [this.toPoint(sample)];
  }

  pointerMove(sample: PointerSample): void {
    if (!this.current) return; // hover without a press
    this.current.push(this.toPoint(sample));
  }

  pointerUp(sample?: PointerSample): void {
    if (!this.current) return;
    if (sample) this.current.push(this.toPoint(sample));
    this.finishStroke();
  }

  clear(): void {
    this.strokes = [];
    this.current = null;
  }

  hasStrokes(): boolean {
    return this.strokes.length > 0;
  }

  strokeCount(): number {
    return this.strokes.length;
  }

  /** Finished strokes plus the one in progress, for live rendering. */
  allStrokes(): TimedPoint[][] {
    return this.current ? [...this.strokes, this.current] : [...this.strokes];
  }

  /** The gesture in wire format; only finished strokes are included. */
  toGesture(): GestureJson {
    return {
      canvas_width: this.canvasWidth,
      canvas_height: this.canvasHeight,
      strokes: this.strokes.map((s) => s.map((p) => ({ ...p }))),
    };
  }

  private toPoint(sample: PointerSample): TimedPoint {
    // clamp to the canvas edge: dragging off-surface keeps capturing
    const x = Math.min(Math.max(sample.x, 0), this.canvasWidth);
    const y = Math.min(Math.max(sample.y, 0), this.canvasHeight);
    let t = sample.timeStamp - this.strokeStart;
    if (t < 0) t = 0;
    const prev = this.current?.at(-1);
    if (prev && t < prev.t) t = prev.t; // guard against clock jitter
    return { x, y, t };
  }

  private finishStroke(): void {
    if (this.current && this.current.length > 0) {
      this.strokes.push(this.current);
    }
    this.current = null;
  }
}
