/** Typed client for the engine's JSON API. Every verdict in the UI comes
 * from this client; nothing is classified locally. */

import type { AnomalyReport, CapturedRequest, TextVerdict, UrlVerdict } from "./types.js";

export class ServiceError extends Error {
  constructor(readonly code: number, message: string) {
    super(message);
  }
}

/** Thrown when the service cannot be reached at all (offline state). */
export class ServiceUnreachable extends Error {}

type FetchLike = typeof fetch;

export class ServiceClient {
  constructor(
    private readonly origin: string,
    private readonly fetchImpl: FetchLike = fetch,
    private readonly timeoutMs = 5000,
  ) {}

  private async request<T>(path: string, body?: unknown): Promise<T> {
    const controller = new AbortController();
    const timer = setTimeout(() => controller.abort(), this.timeoutMs);
    let response: Response;
    try {
      response = await this.fetchImpl(`${this.origin}${path}`, {
        method: body === undefined ? "GET" : "POST",
        headers: body === undefined ? undefined : { "Content-Type": "application/json" },
        body: body === undefined ? undefined : JSON.stringify(body),
        signal: controller.signal,
      });
    } catch (err) {
      throw new ServiceUnreachable(String(err));
    } finally {
      clearTimeout(timer);
    }
    const payload = await response.json().catch(() => ({}));
    if (!response.ok) {
      const message =
        typeof payload === "object" && payload !== null && "error" in payload
          ? String((payload as { error: unknown }).error)
          : `HTTP ${response.status}`;
      throw new ServiceError(response.status, message);
    }
    return payload as T;
  }

  classifyUrl(url: string, enrich?: boolean): Promise<UrlVerdict> {
    return this.request("/api/v1/classify-url", enrich === undefined ? { url } : { url, enrich });
  }

  classifyText(text: string): Promise<TextVerdict> {
    return this.request("/api/v1/classify-text", { text });
  }

  postLogs(entries: CapturedRequest[]): Promise<AnomalyReport> {
    return this.request("/api/v1/logs", { entries });
  }

  health(): Promise<{ status: string; models_loaded: string[] }> {
    return this.request("/api/v1/health");
  }
}
