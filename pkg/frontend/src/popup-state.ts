/** Popup view logic, kept free of DOM and browser APIs for testing. */

import { ServiceClient } from "./api.js";
import type { CachedVerdict, UrlVerdict } from "./types.js";
import { STALE_AFTER_MS } from "./types.js";

export type UrlPanel =
  | { kind: "disabled"; reason: string }
  | { kind: "offline"; cached: CachedVerdict | null }
  | { kind: "verdict"; verdict: UrlVerdict; stale: boolean; fetchedAtMs: number };

export function isClassifiableUrl(url: string | undefined): url is string {
  return !!url && (url.startsWith("http://") || url.startsWith("https://"));
}

/** Resolve the verdict panel for the active tab: serve a fresh cache hit,
 * otherwise ask the engine; on failure fall back to the cache, marked
 * stale, or report the engine offline. */
export async function resolveUrlPanel(
  client: ServiceClient,
  tabUrl: string | undefined,
  cached: CachedVerdict | null,
  nowMs: number,
): Promise<{ panel: UrlPanel; cacheUpdate: CachedVerdict | null }> {
  if (!isClassifiableUrl(tabUrl)) {
    return {
      panel: { kind: "disabled", reason: "This page cannot be classified." },
      cacheUpdate: null,
    };
  }
  if (cached && cached.url === tabUrl && nowMs - cached.fetched_at_ms <= STALE_AFTER_MS) {
    return {
      panel: { kind: "verdict", verdict: cached.verdict, stale: false, fetchedAtMs: cached.fetched_at_ms },
      cacheUpdate: null,
    };
  }
  try {
    const verdict = await client.classifyUrl(tabUrl);
    const fresh: CachedVerdict = { verdict, fetched_at_ms: nowMs, url: tabUrl };
    return {
      panel: { kind: "verdict", verdict, stale: false, fetchedAtMs: nowMs },
      cacheUpdate: fresh,
    };
  } catch {
    if (cached && cached.url === tabUrl) {
      return {
        panel: { kind: "verdict", verdict: cached.verdict, stale: true, fetchedAtMs: cached.fetched_at_ms },
        cacheUpdate: null,
      };
    }
    return { panel: { kind: "offline", cached: null }, cacheUpdate: null };
  }
}

export function isVerdictStale(fetchedAtMs: number, nowMs: number): boolean {
  return nowMs - fetchedAtMs > STALE_AFTER_MS;
}

export function formatScorePercent(score: number): string {
  return `${Math.round(score * 100)}%`;
}

export function validateScanInput(text: string): string | null {
  return text.trim().length === 0 ? "Paste some text to scan." : null;
}
