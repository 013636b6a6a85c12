"""Threat-analysis engine: phishing-URL scoring, spam-text filtering, and
HTTP-log anomaly reports, served over a JSON HTTP API."""

__version__ = "0.1.0"
