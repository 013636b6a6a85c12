/** Extension-storage helpers: the one shared state between background and
 * popup contexts. */

import type { AnomalyReport, CachedVerdict } from "./types.js";
import { DEFAULT_SERVICE_ORIGIN } from "./types.js";

const ORIGIN_KEY = "service_origin";
const REPORT_KEY = "latest_report";
const REACHABLE_KEY = "service_reachable";
const VERDICT_KEY_PREFIX = "verdict_tab_";

export async function getServiceOrigin(): Promise<string> {
  const items = await chrome.storage.local.get(ORIGIN_KEY);
  const value = items[ORIGIN_KEY];
  return typeof value === "string" && value ? value : DEFAULT_SERVICE_ORIGIN;
}

export async function setServiceOrigin(origin: string): Promise<void> {
  await chrome.storage.local.set({ [ORIGIN_KEY]: origin.replace(/\/+$/, "") });
}

export async function storeSweepResult(
  report: AnomalyReport | null,
  reachable: boolean,
): Promise<void> {
  const items: Record<string, unknown> = { [REACHABLE_KEY]: reachable };
  if (report) items[REPORT_KEY] = report;
  await chrome.storage.local.set(items);
}

export async function loadSweepResult(): Promise<{
  report: AnomalyReport | null;
  reachable: boolean;
}> {
  const items = await chrome.storage.local.get([REPORT_KEY, REACHABLE_KEY]);
  return {
    report: (items[REPORT_KEY] as AnomalyReport | undefined) ?? null,
    reachable: items[REACHABLE_KEY] !== false,
  };
}

export async function loadCachedVerdict(tabId: number): Promise<CachedVerdict | null> {
  const key = `${VERDICT_KEY_PREFIX}${tabId}`;
  const items = await chrome.storage.local.get(key);
  return (items[key] as CachedVerdict | undefined) ?? null;
}

export async function storeCachedVerdict(
  tabId: number,
  cached: CachedVerdict,
): Promise<void> {
  await chrome.storage.local.set({ [`${VERDICT_KEY_PREFIX}${tabId}`]: cached });
}
