// Thin typed client for the four service endpoints.

import type {
  ChallengeJson,
  EnrollRequest,
  GestureJson,
  MatchResultJson,
  ProfileSummary,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    detail: string,
  ) {
    super(detail);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const resp = await fetch(url, {
    headers: { "Content-Type": "application/json" },
    ...init,
  });
  const body = await resp.json();
  if (!resp.ok) {
    throw new ApiError(resp.status, body.error ?? "Unknown", body.detail ?? resp.statusText);
  }
  return body as T;
}

export class ApiClient {
  constructor(readonly baseUrl: string = "") {}

  enroll(req: EnrollRequest): Promise<ProfileSummary> {
    return request(`${this.baseUrl}/api/accounts`, {
      method: "POST",
      body: JSON.stringify(req),
    });
  }

  challenge(username: string): Promise<ChallengeJson> {
    return request(`${this.baseUrl}/api/accounts/${encodeURIComponent(username)}/challenge`);
  }

  login(username: string, gesture: GestureJson): Promise<MatchResultJson> {
    return request(`${this.baseUrl}/api/accounts/${encodeURIComponent(username)}/login`, {
      method: "POST",
      body: JSON.stringify({ gesture }),
    });
  }

  setThreshold(username: string, threshold: number): Promise<ProfileSummary> {
    return request(`${this.baseUrl}/api/accounts/${encodeURIComponent(username)}/threshold`, {
      method: "PUT",
      body: JSON.stringify({ threshold }),
    });
  }
}

/** Human-readable message for an enroll/login failure. */
export function describeError(err: unknown): string {
  if (err instanceof ApiError) {
    switch (err.code) {
      case "DuplicateUsername":
        return "username taken, pick another";
      case "UnknownUser":
        return "no account with that username";
      case "InvalidThreshold":
        return "threshold must be between 0 and 1";
      case "InvalidGesture":
        return `the drawing was rejected: ${err.message}`;
      default:
        return err.message;
    }
  }
  return "network problem, your drawing is kept - try again";
}
