/** Background worker: observe completed requests, sweep them to the
 * engine every 30 seconds, keep the badge in sync with the threat level. */

import { ServiceClient } from "./api.js";
import { badgeStateFor } from "./badge.js";
import { RequestBuffer } from "./buffer.js";
import { runSweep } from "./sweep.js";
import { getServiceOrigin, storeSweepResult } from "./storage.js";
import { SWEEP_PERIOD_S } from "./types.js";

const SWEEP_ALARM = "threatlens-sweep";

const buffer = new RequestBuffer();

chrome.webRequest.onCompleted.addListener(
  (details) => {
    // only completed transactions carry a status code and get buffered
    buffer.push({
      timestamp_ms: Math.max(1, Math.round(details.timeStamp)),
      method: details.method,
      url: details.url,
      status_code: details.statusCode,
      origin_tab: details.tabId >= 0 ? String(details.tabId) : null,
    });
  },
  { urls: ["<all_urls>"] },
);

async function applyBadge(reportReachable: Awaited<ReturnType<typeof runSweep>>): Promise<void> {
  const state = badgeStateFor(reportReachable.report, reportReachable.reachable);
  await chrome.action.setBadgeText({ text: state.text });
  await chrome.action.setBadgeBackgroundColor({ color: state.color });
  await chrome.action.setTitle({ title: state.title });
}

async function sweep(): Promise<void> {
  const origin = await getServiceOrigin();
  const client = new ServiceClient(origin);
  const outcome = await runSweep(buffer, client);
  await storeSweepResult(outcome.report, outcome.reachable);
  await applyBadge(outcome);
}

// Alarm granularity is the browser's floor (30 s in recent Chromium for
// unpacked extensions, otherwise one minute); the engine applies its own
// window regardless of jitter here.
chrome.alarms.create(SWEEP_ALARM, { periodInMinutes: SWEEP_PERIOD_S / 60 });

chrome.alarms.onAlarm.addListener((alarm) => {
  if (alarm.name === SWEEP_ALARM) {
    void sweep();
  }
});
