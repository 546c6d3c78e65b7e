"""JSON network documents.

Three body formats are read::

    {"q": 2, "n": 2, "format": "table", "table": ["00", "10", "01", "11"]}
    {"q": 2, "n": 2, "format": "rules", "rules": ["!x1", "!x2"]}
    {"q": 2, "n": 3, "format": "arrangement", "cubes": ["**0", "1**"],
     "free_choice": {"2": "negate"}}

``table`` lists the image of every configuration in canonical index order.
Saving always writes the table form on a single line, keys in the order
``q, n, format, table``, followed by a newline; loading and re-saving such
a document reproduces it byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Union

from ..boolean import ArrangementNetworkSpec, build_arrangement_network
from ..core import Network, NetworkError, config_str
from .rules import network_from_rules

PathLike = Union[str, Path]


class FormatError(NetworkError):
    pass


@dataclass(frozen=True)
class NetworkDocument:
    q: int
    n: int
    format: str
    body: Any


def _int_field(doc: dict, key: str) -> int:
    if key not in doc:
        raise FormatError(f"missing field {key!r}")
    v = doc[key]
    if not isinstance(v, int) or isinstance(v, bool):
        raise FormatError(f"field {key!r} must be an integer")
    return v


def parse_document(doc: Any) -> NetworkDocument:
    if not isinstance(doc, dict):
        raise FormatError("a network document must be a JSON object")
    q, n = _int_field(doc, "q"), _int_field(doc, "n")
    if q < 2 or n < 1:
        raise FormatError("need q >= 2 and n >= 1")
    fmt = doc.get("format", "table")
    if fmt == "table":
        table = doc.get("table")
        if not isinstance(table, list):
            raise FormatError("field 'table' must be a list of configuration strings")
        if len(table) != q**n:
            raise FormatError(f"expected {q**n} entries, got {len(table)}")
        for k, row in enumerate(table):
            if not isinstance(row, str) or len(row) != n:
                raise FormatError(f"entry {k} must be a string of {n} digits")
            bad = [c for c in row if not c.isdigit() or int(c) >= q]
            if bad:
                raise FormatError(f"entry {k} ({row!r}) has digit {bad[0]!r} outside 0..{q - 1}")
        return NetworkDocument(q, n, fmt, table)
    if fmt == "rules":
        if q != 2:
            raise FormatError("rules documents are Boolean only (q = 2)")
        rules = doc.get("rules")
        if not isinstance(rules, list) or not all(isinstance(r, str) for r in rules):
            raise FormatError("field 'rules' must be a list of expressions")
        if len(rules) != n:
            raise FormatError(f"expected {n} rules, got {len(rules)}")
        return NetworkDocument(q, n, fmt, rules)
    if fmt == "arrangement":
        if q != 2:
            raise FormatError("arrangement documents are Boolean only (q = 2)")
        cubes = doc.get("cubes")
        if not isinstance(cubes, list) or not cubes or not all(isinstance(c, str) and len(c) == n for c in cubes):
            raise FormatError(f"field 'cubes' must be a nonempty list of length-{n} patterns over 0, 1, *")
        choice = doc.get("free_choice", {})
        if not isinstance(choice, dict):
            raise FormatError("field 'free_choice' must map node numbers to const0, const1 or negate")
        try:
            choice = {int(k): v for k, v in choice.items()}
        except ValueError as exc:
            raise FormatError(f"bad free_choice key: {exc}") from None
        return NetworkDocument(q, n, fmt, {"cubes": cubes, "free_choice": choice})
    raise FormatError(f"unknown format {fmt!r}; expected table, rules or arrangement")


def to_network(doc: NetworkDocument) -> Network:
    if doc.format == "table":
        return Network.from_table(doc.q, doc.n, doc.body)
    if doc.format == "rules":
        return network_from_rules(doc.body, doc.n)
    spec = ArrangementNetworkSpec.from_patterns(doc.body["cubes"], doc.body["free_choice"])
    return build_arrangement_network(spec)


def loads(text: str) -> Network:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON: {exc}") from None
    return to_network(parse_document(doc))


def load(path: PathLike) -> Network:
    return loads(Path(path).read_text(encoding="utf-8"))


def dumps(f: Network) -> str:
    if f.q > 10:
        raise FormatError("digit-string tables support q <= 10")
    doc = {"q": f.q, "n": f.n, "format": "table", "table": [config_str(r) for r in f.table]}
    return json.dumps(doc) + "\n"


def save(f: Network, path: PathLike) -> None:
    Path(path).write_text(dumps(f), encoding="utf-8")


def dump_arrangement(patterns, free_choice) -> str:
    n = len(patterns[0])
    doc = {
        "q": 2,
        "n": n,
        "format": "arrangement",
        "cubes": list(patterns),
        "free_choice": {str(k): v for k, v in sorted(free_choice.items())},
    }
    return json.dumps(doc) + "\n"
