import type { Candidate, ExportFormat, SessionState } from "./types.js";

export class ApiError extends Error {
  constructor(
    public code: string,
    message: string,
    public status: number,
  ) {
    super(message);
  }
}

async function fail(resp: Response): Promise<never> {
  let code = "HTTP_ERROR";
  let message = `${resp.status} ${resp.statusText}`;
  try {
    const body = await resp.json();
    if (body && typeof body.code === "string") {
      code = body.code;
      message = body.message ?? message;
    }
  } catch {
    // not a problem-detail body; keep the generic message
  }
  throw new ApiError(code, message, resp.status);
}

/** Thin typed wrapper over the service API.  No proof logic lives here:
 * every state the UI shows is a response from the service. */
export class VeracityClient {
  constructor(private base: string = "") {}

  private async json<T>(path: string, init?: RequestInit): Promise<T> {
    const resp = await fetch(this.base + path, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    if (!resp.ok) await fail(resp);
    return (await resp.json()) as T;
  }

  createSession(goal: string, config: string): Promise<SessionState> {
    return this.json("/sessions", {
      method: "POST",
      body: JSON.stringify({ goal, config }),
    });
  }

  getSession(id: string): Promise<SessionState> {
    return this.json(`/sessions/${id}`);
  }

  async rules(id: string, holeId: string): Promise<Candidate[]> {
    const body = await this.json<{ candidates: Candidate[] }>(
      `/sessions/${id}/holes/${holeId}/rules`,
    );
    return body.candidates;
  }

  apply(id: string, holeId: string, candidate: number): Promise<SessionState> {
    return this.json(`/sessions/${id}/holes/${holeId}/apply`, {
      method: "POST",
      body: JSON.stringify({ candidate }),
    });
  }

  undo(id: string): Promise<SessionState> {
    return this.json(`/sessions/${id}/undo`, { method: "POST" });
  }

  async exportProof(id: string, format: ExportFormat, scale = "1"): Promise<string> {
    const resp = await fetch(
      `${this.base}/sessions/${id}/export?format=${format}&scale=${encodeURIComponent(scale)}`,
    );
    if (!resp.ok) await fail(resp);
    return resp.text();
  }
}
