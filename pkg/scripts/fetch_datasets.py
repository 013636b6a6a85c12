"""Fetches the two training datasets and normalizes them to the ingestion
formats under data/ (see README, "Datasets").

  spam.csv      5,5xx SMS messages, header (label, text), labels ham/spam.
                Default source: the UCI "SMS Spam Collection" archive.
  phishing.csv  11,430 URLs with 87 numeric features and a status label,
                from the phishing-url dataset on the Hugging Face hub.

Both downloads can be replaced with local files (--spam-file /
--phishing-file) when the canonical hosts are unreachable; the script then
only normalizes. Requires plain internet access; it is not part of the
package itself.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import urllib.request
import zipfile
from pathlib import Path

SPAM_ZIP_URL = "https://archive.ics.uci.edu/static/public/228/sms+spam+collection.zip"
PHISHING_API_URL = "https://huggingface.co/api/datasets/pirocheto/phishing-url"
PHISHING_RESOLVE = "https://huggingface.co/datasets/pirocheto/phishing-url/resolve/main/{name}"


def _download(url: str) -> bytes:
    print(f"fetching {url}")
    with urllib.request.urlopen(url, timeout=60) as response:
        return response.read()


def _write_spam_csv(rows: list[tuple[str, str]], dest: Path) -> None:
    ok = [r for r in rows if r[0] in ("ham", "spam")]
    if len(ok) < 5500:
        raise SystemExit(f"spam dataset looks wrong: only {len(ok)} usable rows")
    with open(dest, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["label", "text"])
        writer.writerows(ok)
    print(f"wrote {dest} ({len(ok)} messages)")


def fetch_spam(dest: Path, local_file: str | None, url: str | None) -> None:
    if local_file:
        raw = Path(local_file).read_bytes()
        if raw[:2] == b"PK":
            with zipfile.ZipFile(io.BytesIO(raw)) as zf:
                raw = zf.read("SMSSpamCollection")
        text = raw.decode("utf-8", errors="replace")
        if "\t" in text.splitlines()[0]:
            rows = [tuple(line.split("\t", 1)) for line in text.splitlines() if line]
        else:
            # Kaggle-style spam.csv: header v1,v2 plus empty trailing columns
            decoded = raw.decode("latin-1")
            reader = csv.reader(io.StringIO(decoded))
            rows = [(r[0], r[1]) for r in list(reader)[1:] if len(r) >= 2]
        _write_spam_csv(rows, dest)
        return
    payload = _download(url or SPAM_ZIP_URL)
    with zipfile.ZipFile(io.BytesIO(payload)) as zf:
        body = zf.read("SMSSpamCollection").decode("utf-8")
    rows = [tuple(line.split("\t", 1)) for line in body.splitlines() if line]
    _write_spam_csv(rows, dest)


def _normalize_phishing(text: str, dest: Path) -> None:
    reader = csv.reader(io.StringIO(text))
    rows = list(reader)
    header = rows[0]
    if "status" not in header or "url" not in header:
        raise SystemExit(f"unexpected phishing header: {header[:5]}...")
    n_features = len(header) - 2
    print(f"header: url + {n_features} features + status")
    with open(dest, "w", newline="", encoding="utf-8") as fh:
        csv.writer(fh).writerows(rows)
    print(f"wrote {dest} ({len(rows) - 1} URLs)")


def fetch_phishing(dest: Path, local_file: str | None, url: str | None) -> None:
    if local_file:
        _normalize_phishing(Path(local_file).read_text(encoding="utf-8"), dest)
        return
    if url:
        _normalize_phishing(_download(url).decode("utf-8"), dest)
        return
    listing = json.loads(_download(PHISHING_API_URL))
    names = [s["rfilename"] for s in listing.get("siblings", [])]
    csv_names = [n for n in names if n.endswith(".csv")]
    if not csv_names:
        raise SystemExit(
            f"no CSV file in the dataset repo (found: {names}); pass "
            f"--phishing-url or --phishing-file with a CSV export")
    # Prefer a full export over split files.
    csv_names.sort(key=lambda n: ("train" in n or "test" in n, n))
    payload = _download(PHISHING_RESOLVE.format(name=csv_names[0]))
    _normalize_phishing(payload.decode("utf-8"), dest)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dest", default="data", help="output directory")
    parser.add_argument("--spam-url", default=None)
    parser.add_argument("--spam-file", default=None)
    parser.add_argument("--phishing-url", default=None)
    parser.add_argument("--phishing-file", default=None)
    parser.add_argument("--only", choices=["spam", "phishing"], default=None)
    args = parser.parse_args()

    dest = Path(args.dest)
    dest.mkdir(parents=True, exist_ok=True)
    failures = 0
    if args.only in (None, "spam"):
        try:
            fetch_spam(dest / "spam.csv", args.spam_file, args.spam_url)
        except Exception as exc:
            print(f"spam fetch failed: {exc}", file=sys.stderr)
            failures += 1
    if args.only in (None, "phishing"):
        try:
            fetch_phishing(dest / "phishing.csv", args.phishing_file,
                           args.phishing_url)
        except Exception as exc:
            print(f"phishing fetch failed: {exc}", file=sys.stderr)
            failures += 1
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
