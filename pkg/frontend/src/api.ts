/** Thin typed client for the voganpress HTTP API. */

import type {
  Circling,
  Diagram,
  DiagramRef,
  EquivalentResponse,
  FamilyTemplate,
  PressResponse,
  ReduceResponse,
  RelatedResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private readonly fetchFn: FetchLike;

  constructor(
    readonly baseUrl: string,
    fetchFn?: FetchLike,
  ) {
    this.fetchFn = fetchFn ?? ((url, init) => fetch(url, init));
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const resp = await this.fetchFn(this.baseUrl + path, init);
    if (!resp.ok) {
      let code = "error";
      let message = `HTTP ${resp.status}`;
      try {
        const body = (await resp.json()) as { code?: string; message?: string };
        code = body.code ?? code;
        message = body.message ?? message;
      } catch {
        // non-JSON error body: keep the generic message
      }
      throw new ApiError(resp.status, code, message);
    }
    return (await resp.json()) as T;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  families(): Promise<{ families: FamilyTemplate[] }> {
    return this.request("/families");
  }

  getDiagram(ref: DiagramRef): Promise<Diagram> {
    const query = new URLSearchParams({ family: ref.family });
    for (const [key, value] of Object.entries(ref.params)) {
      query.set(key, String(value));
    }
    return this.request(`/diagram?${query.toString()}`);
  }

  press(ref: DiagramRef, circling: Circling, vertex: number): Promise<PressResponse> {
    return this.post("/press", { ...ref, circling, vertex });
  }

  reduce(ref: DiagramRef, circling: Circling): Promise<ReduceResponse> {
    return this.post("/reduce", { ...ref, circling });
  }

  related(ref: DiagramRef, c1: Circling, c2: Circling): Promise<RelatedResponse> {
    return this.post("/related", { ...ref, c1, c2 });
  }

  equivalent(ref: DiagramRef, c1: Circling, c2: Circling): Promise<EquivalentResponse> {
    return this.post("/equivalent", { ...ref, c1, c2 });
  }

  /** The API has no admissibility route; /reduce doubles as the probe
   * (422 not_admissible means inadmissible). */
  async probeAdmissible(ref: DiagramRef, circling: Circling): Promise<boolean> {
    try {
      await this.reduce(ref, circling);
      return true;
    } catch (err) {
      if (err instanceof ApiError && err.code === "not_admissible") {
        return false;
      }
      throw err;
    }
  }
}
