// Wire formats shared with the server. Field names must match exactly.

export interface TimedPoint {
  x: number;
  y: number;
  t: number; // ms since the start of the containing stroke
}

export interface GestureJson {
  canvas_width: number;
  canvas_height: number;
  strokes: TimedPoint[][];
}

export interface ProfileSummary {
  username: string;
  threshold: number;
  image_id: string;
  image_width: number;
  image_height: number;
  created_at: string;
}

export interface ChallengeJson {
  image_id: string;
  image_base64: string;
  image_width: number;
  image_height: number;
}

export interface MatchResultJson {
  degree: number;
  accepted: boolean;
  offset: { dx: number; dy: number };
  per_pixel: number[];
}

export interface EnrollRequest {
  username: string;
  threshold: number;
  image_base64: string;
  image_width: number;
  image_height: number;
  gesture: GestureJson;
}

export type CaptureMode = "enroll" | "login";
