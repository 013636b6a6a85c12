/** Badge rendering is a pure function of (latest report, reachability). */

import type { AnomalyReport } from "./types.js";

export interface BadgeState {
  text: string;
  color: string;
  title: string;
}

export function badgeStateFor(
  report: AnomalyReport | null,
  reachable: boolean,
): BadgeState {
  if (!reachable) {
    return { text: "?", color: "#9e9e9e", title: "threatlens: engine offline" };
  }
  const level = report?.threat_level ?? "none";
  switch (level) {
    case "high":
      return { text: "!", color: "#d32f2f", title: "threatlens: HIGH network threat" };
    case "medium":
      return { text: "!", color: "#f9a825", title: "threatlens: elevated network errors" };
    default:
      // none/low stay neutral so the badge only demands attention when due
      return { text: "", color: "#2e7d32", title: "threatlens: network normal" };
  }
}
