"""Registrable-domain splitting against a bundled public-suffix snapshot.

The snapshot is a plain text file, one rule per line, ``#`` comments.
Rules follow the usual public-suffix conventions: a literal rule matches
its own labels, ``*`` matches exactly one label, and ``!`` marks an
exception that wins over a wildcard. When nothing matches, the last label
is taken as the suffix.
"""

from __future__ import annotations

import functools
from importlib import resources


class SuffixList:
    def __init__(self, rules):
        self._plain = set()
        self._wildcard = set()   # stored without the leading "*."
        self._exception = set()  # stored without the leading "!"
        for rule in rules:
            if rule.startswith("!"):
                self._exception.add(rule[1:])
            elif rule.startswith("*."):
                self._wildcard.add(rule[2:])
            else:
                self._plain.add(rule)

    @classmethod
    def from_file(cls, path) -> "SuffixList":
        with open(path, encoding="utf-8") as fh:
            return cls.from_lines(fh)

    @classmethod
    def from_lines(cls, lines) -> "SuffixList":
        rules = []
        for line in lines:
            line = line.strip()
            if line and not line.startswith("#"):
                rules.append(line.lower())
        return cls(rules)

    def split(self, host: str) -> tuple[list[str], str, str]:
        """Split ``host`` into (subdomain labels, registrable domain, suffix).

        ``host`` must be a lowercase dotted hostname (no IP literals).
        When the host itself is a public suffix, the registrable domain is
        the host and there are no subdomain labels.
        """
        labels = host.split(".")
        n = len(labels)
        exception_len = None
        longest_len = 0
        for i in range(n):
            candidate = ".".join(labels[i:])
            rest = ".".join(labels[i + 1:])
            if exception_len is None and candidate in self._exception:
                exception_len = n - i - 1
            if candidate in self._plain:
                longest_len = max(longest_len, n - i)
            if rest and rest in self._wildcard:
                longest_len = max(longest_len, n - i)
        if exception_len is not None:
            suffix_len = exception_len
        else:
            suffix_len = longest_len or 1  # default rule: the last label
        suffix_len = max(suffix_len, 1)
        suffix = ".".join(labels[-suffix_len:])
        if suffix_len >= len(labels):
            return [], host, suffix
        registrable = ".".join(labels[-(suffix_len + 1):])
        return labels[: -(suffix_len + 1)], registrable, suffix


@functools.lru_cache(maxsize=4)
def _load_bundled(name: str) -> SuffixList:
    text = resources.files("threatlens.urls").joinpath("data", name).read_text("utf-8")
    return SuffixList.from_lines(text.splitlines())


def default_suffix_list() -> SuffixList:
    return _load_bundled("public_suffix_snapshot.txt")
