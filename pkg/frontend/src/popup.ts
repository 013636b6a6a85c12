/** Popup: URL verdict for the active tab, paste-to-scan spam check, and
 * the latest network threat report. */

import { ServiceClient, ServiceError, ServiceUnreachable } from "./api.js";
import {
  formatScorePercent,
  isVerdictStale,
  resolveUrlPanel,
  validateScanInput,
} from "./popup-state.js";
import {
  getServiceOrigin,
  loadCachedVerdict,
  loadSweepResult,
  storeCachedVerdict,
} from "./storage.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function setBanner(node: HTMLElement, kind: "ok" | "warn" | "muted", text: string): void {
  node.className = `banner ${kind}`;
  node.textContent = text;
}

async function renderUrlPanel(client: ServiceClient): Promise<void> {
  const banner = el<HTMLDivElement>("url-banner");
  const detail = el<HTMLDivElement>("url-detail");
  const tabs = await chrome.tabs.query({ active: true, currentWindow: true });
  const tab = tabs[0];
  if (!tab) {
    setBanner(banner, "muted", "No active tab.");
    return;
  }
  const cached = tab.id !== undefined ? await loadCachedVerdict(tab.id) : null;
  const { panel, cacheUpdate } = await resolveUrlPanel(client, tab.url, cached, Date.now());
  if (cacheUpdate && tab.id !== undefined) {
    await storeCachedVerdict(tab.id, cacheUpdate);
  }
  switch (panel.kind) {
    case "disabled":
      setBanner(banner, "muted", panel.reason);
      return;
    case "offline":
      setBanner(banner, "muted", "Engine offline: verdict unavailable.");
      return;
    case "verdict": {
      const verdict = panel.verdict;
      const pct = formatScorePercent(verdict.score);
      if (verdict.verdict === "phishing") {
        setBanner(banner, "warn", `Caution: phishing suspected (${pct})`);
      } else {
        setBanner(banner, "ok", `legitimate (${pct})`);
      }
      const staleNote =
        panel.stale || isVerdictStale(panel.fetchedAtMs, Date.now())
          ? " — stale verdict"
          : "";
      detail.textContent = `model ${verdict.model_version}${staleNote}`;
      detail.classList.toggle("stale", !!staleNote);
      return;
    }
  }
}

async function scanText(client: ServiceClient): Promise<void> {
  const input = el<HTMLTextAreaElement>("scan-input");
  const result = el<HTMLDivElement>("scan-result");
  const problem = validateScanInput(input.value);
  if (problem) {
    setBanner(result, "muted", problem);
    return;
  }
  try {
    const verdict = await client.classifyText(input.value);
    const stats = verdict.text_stats;
    const kind = verdict.verdict === "spam" ? "warn" : "ok";
    setBanner(result, kind,
      `${verdict.verdict} (${formatScorePercent(verdict.score)}) · ` +
      `${stats.num_characters} chars, ${stats.num_words} words, ` +
      `${stats.num_sentences} sentences`);
  } catch (err) {
    if (err instanceof ServiceUnreachable) {
      setBanner(result, "muted", "Engine offline: cannot scan.");
    } else if (err instanceof ServiceError) {
      setBanner(result, "muted", err.message);
    } else {
      throw err;
    }
  }
}

async function renderThreatPanel(): Promise<void> {
  const node = el<HTMLDivElement>("threat-panel");
  const { report, reachable } = await loadSweepResult();
  if (!reachable) {
    setBanner(node, "muted", "Engine offline: no network reports.");
    return;
  }
  if (!report) {
    setBanner(node, "muted", "No network report yet.");
    return;
  }
  const kind = report.threat_level === "high" ? "warn"
    : report.threat_level === "medium" ? "warn" : "ok";
  const top = report.offending_hosts[0];
  setBanner(node, kind,
    `threat: ${report.threat_level} · ${report.total} requests, ` +
    `error ratio ${(report.error_ratio * 100).toFixed(1)}%` +
    (top ? ` · worst host ${top.host} (${top.errors})` : ""));
}

async function init(): Promise<void> {
  const origin = await getServiceOrigin();
  const client = new ServiceClient(origin);
  el<HTMLButtonElement>("scan-button").addEventListener("click", () => {
    void scanText(client);
  });
  el<HTMLAnchorElement>("open-options").addEventListener("click", (event) => {
    event.preventDefault();
    void chrome.runtime.openOptionsPage();
  });
  await Promise.all([renderUrlPanel(client), renderThreatPanel()]);
}

void init();
