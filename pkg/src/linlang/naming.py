"""Identifier rules and deterministic fresh-name allocation."""

from __future__ import annotations

import re

from .errors import InvalidIdentifier

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

#: Token that denotes the empty string in every text format.
EPS = "eps"


def is_valid_name(name: str) -> bool:
    return bool(NAME_RE.match(name)) and name != EPS


def check_name(name: str, role: str = "symbol", span=None) -> str:
    if not isinstance(name, str) or not NAME_RE.match(name):
        raise InvalidIdentifier(f"invalid {role} name {name!r}", span=span)
    if name == EPS:
        raise InvalidIdentifier(f"{EPS!r} is reserved and cannot name a {role}", span=span)
    return name


def fresh_name(base: str, used: set[str]) -> str:
    """Smallest-index name of the form ``<base>_k`` not present in ``used``.

    Falls back to ``base`` itself when it is free, so generated names stay
    readable; callers mutate ``used`` themselves if they allocate repeatedly.
    """
    if base not in used and is_valid_name(base):
        return base
    k = 1
    while f"{base}_{k}" in used:
        k += 1
    return f"{base}_{k}"
