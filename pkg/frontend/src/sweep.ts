/** The periodic sweep: post buffered requests, keep the returned report.
 * Pure logic with injected client and state sink so tests can drive it
 * without a browser. */

import { ServiceClient, ServiceUnreachable } from "./api.js";
import type { RequestBuffer } from "./buffer.js";
import type { AnomalyReport } from "./types.js";

export interface SweepOutcome {
  posted: number;
  report: AnomalyReport | null;
  reachable: boolean;
}

export async function runSweep(
  buffer: RequestBuffer,
  client: ServiceClient,
): Promise<SweepOutcome> {
  const entries = buffer.drain();
  try {
    const report = await client.postLogs(entries);
    return { posted: entries.length, report, reachable: true };
  } catch (err) {
    // network failure: keep the batch for the next tick
    buffer.requeue(entries);
    if (err instanceof ServiceUnreachable) {
      return { posted: 0, report: null, reachable: false };
    }
    throw err;
  }
}
