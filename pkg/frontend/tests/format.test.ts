import { describe, expect, it } from "vitest";

import { percentDisplay, verdictText } from "../src/format.js";
import type { MatchResultJson } from "../src/types.js";

function result(degree: number, accepted: boolean): MatchResultJson {
  return { degree, accepted, offset: { dx: 0, dy: 0 }, per_pixel: [] };
}

describe("percentDisplay", () => {
  it("rounds half-up to whole percents", () => {
    expect(percentDisplay(1)).toBe(100);
    expect(percentDisplay(0.9)).toBe(90);
    expect(percentDisplay(0.74)).toBe(74);
    expect(percentDisplay(0.745)).toBe(75);
    expect(percentDisplay(0.7449)).toBe(74);
    expect(percentDisplay(0.005)).toBe(1);
    expect(percentDisplay(0)).toBe(0);
  });
});

describe("verdictText", () => {
  it("renders an accepted login", () => {
    expect(verdictText(result(0.9, true))).toBe("90% - success");
  });
  it("renders a rejected login with a retry hint", () => {
    expect(verdictText(result(0.74, false))).toBe("74% - failed, adjust and retry");
  });
});
