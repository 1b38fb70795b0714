import type { MatchResultJson } from "./types.js";

/** Whole percent for display, rounded half-up (0.745 -> 75). */
export function percentDisplay(degree: number): number {
  return Math.floor(degree * 100 + 0.5);
}

/** The verdict line shown after a login attempt. */
export function verdictText(result: MatchResultJson): string {
  const pct = percentDisplay(result.degree);
  return result.accepted ? `${pct}% - success` : `${pct}% - failed, adjust and retry`;
}
