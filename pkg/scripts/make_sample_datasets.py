"""Regenerates the 20-row sample datasets under data/samples/.

The samples document the two ingestion formats. Lexical columns in the
phishing sample carry real extractor output for each URL; content and
external columns carry deterministic stub values, since the sample exists
to pin the file format rather than to train a real model.

Run from the repository root:  python3 scripts/make_sample_datasets.py
"""

from __future__ import annotations

import csv
import hashlib
from pathlib import Path

from threatlens.featuremap import MISSING
from threatlens.features.providers import (
    StubPageContentProvider,
    StubSearchIndexProvider,
    StubWhoisProvider,
)
from threatlens.urls.lexical import extract_lexical_features
from threatlens.urls.parsing import parse_url

OUT_DIR = Path(__file__).resolve().parents[1] / "data" / "samples"

# Canonical phishing-dataset column order: url, 87 features, status.
FEATURE_COLUMNS = [
    "length_url", "length_hostname", "ip", "nb_dots", "nb_hyphens", "nb_at",
    "nb_qm", "nb_and", "nb_or", "nb_eq", "nb_underscore", "nb_tilde",
    "nb_percent", "nb_slash", "nb_star", "nb_colon", "nb_comma",
    "nb_semicolumn", "nb_dollar", "nb_space", "nb_www", "nb_com", "nb_dslash",
    "http_in_path", "https_token", "ratio_digits_url", "ratio_digits_host",
    "punycode", "port", "tld_in_path", "tld_in_subdomain",
    "abnormal_subdomain", "nb_subdomains", "prefix_suffix", "random_domain",
    "shortening_service", "path_extension", "nb_redirection",
    "nb_external_redirection", "length_words_raw", "char_repeat",
    "shortest_words_raw", "shortest_word_host", "shortest_word_path",
    "longest_words_raw", "longest_word_host", "longest_word_path",
    "avg_words_raw", "avg_word_host", "avg_word_path", "phish_hints",
    "domain_in_brand", "brand_in_subdomain", "brand_in_path",
    "suspecious_tld", "statistical_report", "nb_hyperlinks",
    "ratio_intHyperlinks", "ratio_extHyperlinks", "ratio_nullHyperlinks",
    "nb_extCSS", "ratio_intRedirection", "ratio_extRedirection",
    "ratio_intErrors", "ratio_extErrors", "login_form", "external_favicon",
    "links_in_tags", "submit_email", "ratio_intMedia", "ratio_extMedia",
    "sfh", "iframe", "popup_window", "safe_anchor", "onmouseover",
    "right_clic", "empty_title", "domain_in_title", "domain_with_copyright",
    "whois_registered_domain", "domain_registration_length", "domain_age",
    "web_traffic", "dns_record", "google_index", "page_rank",
]

LEGITIMATE_URLS = [
    "https://www.wikipedia.org/wiki/Phishing",
    "https://github.com/python/cpython",
    "https://www.python.org/downloads/",
    "https://docs.djangoproject.com/en/5.0/topics/security/",
    "https://news.ycombinator.com/item?id=1",
    "https://www.bbc.co.uk/news/technology",
    "https://stackoverflow.com/questions/tagged/security",
    "https://www.gov.uk/browse/citizenship",
    "https://edition.cnn.com/business",
    "https://www.mozilla.org/en-US/firefox/",
]

PHISHING_URLS = [
    "http://paypal-secure-verify.tk/login/confirm.php?id=48213",
    "http://192.168.12.77/webscr/signin/update.html",
    "http://secure-appleid.com-verify.gq/account/login",
    "http://bit.ly/2xPaYqR",
    "http://xn--pypal-4ve.com/security/update",
    "http://bankofamerica.com.session-check.xyz/auth?token=9f8e7d",
    "http://free-gift-card.win/claim$$$/now.php",
    "http://login.micros0ft-support.ml/reset%20password",
    "http://chase.com@203.0.113.4/verify/account",
    "http://www-amazon-com.account-update.top/signin?next=//evil",
]

SPAM_ROWS = [
    ("ham", "Ok lar... Joking wif u oni..."),
    ("spam", "Free entry in 2 a wkly comp to win FA Cup final tkts. Text FA to 87121 to receive entry question!"),
    ("ham", "I'll call you when I get off work around 6."),
    ("spam", "WINNER!! As a valued network customer you have been selected to receive a 900 prize reward! Claim now."),
    ("ham", "Are we still meeting for lunch at noon?"),
    ("spam", "URGENT! You have won a 1 week FREE membership in our 100,000 prize Jackpot! Txt CLAIM to 81010."),
    ("ham", "Don't forget to bring the charger when you come."),
    ("spam", "Congratulations! Your mobile number has won 5000 cash. Call 09061701461 to claim."),
    ("ham", "The meeting moved to Thursday, same room."),
    ("spam", "XXXMobileMovieClub: To use your credit, click the WAP link in the next txt message."),
    ("ham", "Thanks for the ride yesterday, I owe you one."),
    ("spam", "Had your mobile 11 months or more? U R entitled to update to the latest camera phone for FREE!"),
    ("ham", "Can you send me the notes from class?"),
    ("spam", "SIX chances to win CASH! From 100 to 20,000 pounds txt CSH11 and send to 87575."),
    ("ham", "Running late, start without me."),
    ("spam", "You have 1 new voicemail. Please call 08719181513 now!"),
    ("ham", "Happy birthday! Hope you have a great day."),
    ("spam", "Reply with your name and address to claim your free laptop today only."),
    ("ham", "Dinner at ours on Saturday? Bring the kids."),
    ("spam", "FreeMsg: Txt STOP to end. Win a brand new car by entering our prize draw NOW!"),
]


def _hash01(key: str, modulus: int = 2) -> int:
    digest = hashlib.sha256(key.encode("utf-8")).digest()
    return int.from_bytes(digest[:4], "big") % modulus


def _format(value) -> str:
    if isinstance(value, float):
        return f"{value:.6f}".rstrip("0").rstrip(".") or "0"
    return str(value)


def phishing_row(url: str, label: str) -> list[str]:
    parts = parse_url(url)
    lexical = extract_lexical_features(url, parts)
    stubs = {}
    for provider_cls in (StubWhoisProvider, StubSearchIndexProvider,
                         StubPageContentProvider):
        stubs.update(provider_cls(seed=7).fetch(parts))
    values = [url]
    for column in FEATURE_COLUMNS:
        if column in lexical:
            value = lexical[column]
        elif column in stubs and stubs[column] is not MISSING:
            value = stubs[column]
        else:
            value = _hash01(f"{column}:{parts.host}")
        values.append(_format(value))
    values.append(label)
    return values


def main() -> None:
    OUT_DIR.mkdir(parents=True, exist_ok=True)

    with open(OUT_DIR / "spam_sample.csv", "w", newline="",
              encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["label", "text"])
        writer.writerows(SPAM_ROWS)

    with open(OUT_DIR / "phishing_sample.csv", "w", newline="",
              encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["url"] + FEATURE_COLUMNS + ["status"])
        # Interleave classes so any deterministic 80:20 split of 20 rows
        # keeps both labels on both sides.
        for legit, phish in zip(LEGITIMATE_URLS, PHISHING_URLS):
            writer.writerow(phishing_row(legit, "legitimate"))
            writer.writerow(phishing_row(phish, "phishing"))

    print(f"samples written to {OUT_DIR}")


if __name__ == "__main__":
    main()
