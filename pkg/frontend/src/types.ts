/** Wire types mirroring the service API (see ../API.md). */

export interface UrlVerdict {
  input_echo: string;
  verdict: "phishing" | "legitimate";
  score: number;
  model_version: string;
  latency_ms: number;
  imputed_feature_count: number;
}

export interface TextStats {
  num_characters: number;
  num_words: number;
  num_sentences: number;
}

export interface TextVerdict {
  input_echo: string;
  verdict: "spam" | "ham";
  score: number;
  model_version: string;
  latency_ms: number;
  text_stats: TextStats;
}

export type ThreatLevel = "none" | "low" | "medium" | "high";

export interface AnomalyReport {
  window_start_ms: number;
  window_end_ms: number;
  counts: Record<string, number>;
  total: number;
  error_ratio: number;
  threat_level: ThreatLevel;
  offending_hosts: { host: string; errors: number }[];
}

/** One observed network transaction; mirrors the service's log entry. */
export interface CapturedRequest {
  timestamp_ms: number;
  method: string;
  url: string;
  status_code: number;
  origin_tab: string | null;
}

/** Cached per-tab URL verdict; stale after STALE_AFTER_MS. */
export interface CachedVerdict {
  verdict: UrlVerdict;
  fetched_at_ms: number;
  url: string;
}

export const STALE_AFTER_MS = 60_000;
export const SWEEP_PERIOD_S = 30;
export const BUFFER_CAPACITY = 5000;
export const DEFAULT_SERVICE_ORIGIN = "http://127.0.0.1:8974";
