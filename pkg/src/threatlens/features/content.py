"""Content features from page markup, via tolerant tag scanning.

Scanning is best-effort: malformed markup never raises, it just yields
whatever tags the parser can recover. An empty document yields all-MISSING
entries, since "no page" is different from "a page with nothing in it".
"""

from __future__ import annotations

from html.parser import HTMLParser

from ..featuremap import MISSING, check_feature_map
from ..urls.parsing import MalformedUrl, parse_url

_RESOURCE_TAGS = frozenset(
    ("img", "script", "link", "iframe", "source", "video", "audio", "embed"))

CONTENT_FEATURE_NAMES = (
    "nb_hyperlinks", "ratio_intHyperlinks", "ratio_extHyperlinks",
    "iframe", "login_form", "empty_title", "nb_extCSS", "external_favicon",
    "nb_ext_resources",
)


def _link_host(value: str) -> str | None:
    """Host of an absolute http(s) reference, None for relative ones."""
    value = value.strip()
    if not value.lower().startswith(("http://", "https://")):
        return None
    try:
        return parse_url(value).host
    except MalformedUrl:
        return None


class _Scanner(HTMLParser):
    def __init__(self, page_host):
        super().__init__(convert_charrefs=True)
        self.page_host = page_host
        self.hyperlinks = 0
        self.external_links = 0
        self.iframes = 0
        self.login_inputs = 0
        self.ext_css = 0
        self.ext_favicon = 0
        self.ext_resources = 0
        self.title_text = ""
        self.saw_title = False
        self._in_title = False

    def _is_external(self, url_value: str) -> bool:
        host = _link_host(url_value)
        if host is None:
            return False
        return self.page_host is None or host != self.page_host

    def handle_starttag(self, tag, attrs):
        attrs = {k: (v or "") for k, v in attrs}
        if tag == "a":
            href = attrs.get("href", "").strip()
            if href:
                self.hyperlinks += 1
                if self._is_external(href):
                    self.external_links += 1
        elif tag == "iframe":
            self.iframes += 1
        elif tag == "input":
            kind = attrs.get("type", "").lower()
            hint = (attrs.get("name", "") + " " + attrs.get("id", "")).lower()
            if kind == "password" or "login" in hint or "signin" in hint:
                self.login_inputs += 1
        elif tag == "link":
            rel = attrs.get("rel", "").lower()
            href = attrs.get("href", "")
            if "stylesheet" in rel and self._is_external(href):
                self.ext_css += 1
            if "icon" in rel and self._is_external(href):
                self.ext_favicon = 1
        elif tag == "title":
            self.saw_title = True
            self._in_title = True
        if tag in _RESOURCE_TAGS:
            ref = attrs.get("src", "") or attrs.get("href", "")
            if ref and self._is_external(ref):
                self.ext_resources += 1

    def handle_endtag(self, tag):
        if tag == "title":
            self._in_title = False

    def handle_data(self, data):
        if self._in_title:
            self.title_text += data


def extract_content_features(html: str, page_host: str | None = None) -> dict:
    """Markup-derived features; ``page_host`` (lowercase) distinguishes
    internal from external references when known."""
    if not html:
        return {name: MISSING for name in CONTENT_FEATURE_NAMES}
    scanner = _Scanner(page_host)
    try:
        scanner.feed(html)
        scanner.close()
    except Exception:
        pass  # keep whatever was scanned before the parser gave up
    links = scanner.hyperlinks
    ext = scanner.external_links
    features = {
        "nb_hyperlinks": links,
        "ratio_intHyperlinks": (links - ext) / links if links else 0.0,
        "ratio_extHyperlinks": ext / links if links else 0.0,
        "iframe": int(scanner.iframes > 0),
        "login_form": int(scanner.login_inputs > 0),
        "empty_title": int(not scanner.saw_title or not scanner.title_text.strip()),
        "nb_extCSS": scanner.ext_css,
        "external_favicon": scanner.ext_favicon,
        "nb_ext_resources": scanner.ext_resources,
    }
    return check_feature_map(features)
