/** Typed client for the stateless engine service.
 *
 * The explorer never computes flips or compatibility locally; every
 * transition goes through these calls.  Raw response text is preserved so
 * callers can compare payloads byte for byte against the CLI.
 */

import type {
  CheckReport,
  MapResponse,
  PathResponse,
  WireArc,
  WireFlip,
  WireTri,
} from "./types.js";

export class ServiceError extends Error {
  constructor(public status: number, public payload: unknown) {
    super(`service error ${status}`);
  }
}

export interface Reply<T> {
  data: T;
  raw: string;
  status: number;
}

export class ServiceClient {
  private seq = 0;

  constructor(private baseUrl: string = "") {}

  /** Monotone sequence stamps; stale responses are dropped by callers. */
  nextSeq(): number {
    return ++this.seq;
  }

  isCurrent(seq: number): boolean {
    return seq === this.seq;
  }

  private async post<T>(path: string, body: unknown): Promise<Reply<T>> {
    const resp = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    const raw = await resp.text();
    const data = JSON.parse(raw);
    if (!resp.ok) {
      throw new ServiceError(resp.status, data);
    }
    return { data: data as T, raw, status: resp.status };
  }

  private async get<T>(path: string): Promise<Reply<T>> {
    const resp = await fetch(this.baseUrl + path);
    const raw = await resp.text();
    const data = JSON.parse(raw);
    if (!resp.ok) {
      throw new ServiceError(resp.status, data);
    }
    return { data: data as T, raw, status: resp.status };
  }

  validate(tri: WireTri): Promise<Reply<CheckReport>> {
    return this.post("/validate", tri);
  }

  flip(tri: WireTri, arc: WireArc): Promise<Reply<WireFlip>> {
    return this.post("/flip", { tri, arc });
  }

  path(from: WireTri, to: WireTri): Promise<Reply<PathResponse>> {
    return this.post("/path", { from, to });
  }

  shift(tri: WireTri, x: string): Promise<Reply<WireTri>> {
    return this.post("/shift", { tri, x });
  }

  mapArc(n: number, arc: WireArc): Promise<Reply<MapResponse>> {
    return this.post("/map", { n, arc });
  }

  model(n: number): Promise<Reply<unknown>> {
    return this.get(`/model?n=${n}`);
  }
}
