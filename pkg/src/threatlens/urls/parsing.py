"""URL decomposition into structural parts.

Parsing is deliberately conservative: scheme and host are lowercased,
everything else (path, query, fragment, percent-encodings) is preserved
verbatim so that downstream character counts see the raw attack surface.
"""

from __future__ import annotations

import ipaddress
import re
from dataclasses import dataclass, field

from .suffix import SuffixList, default_suffix_list


class MalformedUrl(ValueError):
    """Raised when no well-formed (scheme, host) can be derived."""


_SCHEME_RE = re.compile(r"^([a-zA-Z][a-zA-Z0-9+.\-]*)://")
_IPV4_RE = re.compile(r"^(\d{1,3})\.(\d{1,3})\.(\d{1,3})\.(\d{1,3})$")
_LABEL_RE = re.compile(r"^[^\s.]+$")


@dataclass(frozen=True)
class UrlParts:
    scheme: str
    host: str
    port: int | None
    path: str
    query: str
    fragment: str
    is_ip_host: bool
    subdomain_labels: tuple[str, ...]
    registrable_domain: str
    tld: str
    raw: str = field(default="", compare=False)

    def reassemble(self) -> str:
        url = f"{self.scheme}://{self.host}"
        if self.port is not None:
            url += f":{self.port}"
        url += self.path
        if self.query:
            url += f"?{self.query}"
        if self.fragment:
            url += f"#{self.fragment}"
        return url


def _is_ipv4(host: str) -> bool:
    m = _IPV4_RE.match(host)
    return bool(m) and all(int(part) <= 255 for part in m.groups())


def _split_netloc(netloc: str) -> tuple[str, int | None]:
    # Bracketed IPv6 keeps its brackets so reassembly round-trips.
    if netloc.startswith("["):
        end = netloc.find("]")
        if end < 0:
            raise MalformedUrl(f"unterminated IPv6 literal in {netloc!r}")
        host, rest = netloc[: end + 1], netloc[end + 1:]
    else:
        host, sep, port_part = netloc.partition(":")
        rest = sep + port_part
    if not rest:
        return host, None
    if not rest.startswith(":"):
        raise MalformedUrl(f"unexpected characters after host in {netloc!r}")
    port_text = rest[1:]
    if not port_text.isdigit():
        raise MalformedUrl(f"non-numeric port {port_text!r}")
    port = int(port_text)
    if not 1 <= port <= 65535:
        raise MalformedUrl(f"port {port} out of range")
    return host, port


def parse_url(raw: str, suffixes: SuffixList | None = None) -> UrlParts:
    """Parse ``raw`` into :class:`UrlParts`.

    A missing scheme is assumed to be ``http``; schemes other than
    http/https are rejected. Raises :class:`MalformedUrl` when no valid
    host can be derived or the port is out of range.
    """
    if not raw:
        raise MalformedUrl("empty URL")
    if suffixes is None:
        suffixes = default_suffix_list()

    m = _SCHEME_RE.match(raw)
    if m:
        scheme = m.group(1).lower()
        if scheme not in ("http", "https"):
            raise MalformedUrl(f"unsupported scheme {scheme!r}")
        remainder = raw[m.end():]
    else:
        if "://" in raw:
            raise MalformedUrl(f"illegal scheme in {raw!r}")
        scheme = "http"
        remainder = raw

    # Split off fragment, then query, then path; the rest is the netloc.
    remainder, _, fragment = remainder.partition("#")
    remainder, _, query = remainder.partition("?")
    slash = remainder.find("/")
    if slash >= 0:
        netloc, path = remainder[:slash], remainder[slash:]
    else:
        netloc, path = remainder, ""

    # Strip userinfo if present; '@' in the authority is a classic trick.
    netloc = netloc.rpartition("@")[2]
    if not netloc:
        raise MalformedUrl(f"no host in {raw!r}")

    host, port = _split_netloc(netloc)
    host = host.lower()
    if not host:
        raise MalformedUrl(f"no host in {raw!r}")

    if host.startswith("[") and host.endswith("]"):
        try:
            ipaddress.IPv6Address(host[1:-1])
        except ValueError as exc:
            raise MalformedUrl(f"invalid IPv6 literal {host!r}") from exc
        return UrlParts(scheme, host, port, path, query, fragment,
                        is_ip_host=True, subdomain_labels=(),
                        registrable_domain=host, tld="", raw=raw)

    labels = host.split(".")
    if not all(_LABEL_RE.match(label) for label in labels):
        raise MalformedUrl(f"invalid host {host!r}")

    if _is_ipv4(host):
        return UrlParts(scheme, host, port, path, query, fragment,
                        is_ip_host=True, subdomain_labels=(),
                        registrable_domain=host, tld="", raw=raw)

    subdomains, registrable, tld = suffixes.split(host)
    return UrlParts(scheme, host, port, path, query, fragment,
                    is_ip_host=False, subdomain_labels=tuple(subdomains),
                    registrable_domain=registrable, tld=tld, raw=raw)
