"""Text formats for relations, sequences, partitions, and bijections.

All four formats share one lexical layer: UTF-8 text, blank lines and
lines starting with `#` ignored, `---` on a line of its own as the only
structural separator.  Parsers raise :class:`ParseError` (exit 2 at the
CLI) for malformed text; whether the parsed object makes sense is the
library's business and surfaces as a domain error (exit 1).

- relation: optional ground header, one element per line, then `---`,
  then one pair per line as `x < y`.  Without a separator every line is
  a pair.  Elements seen only in pairs join the ground in order of first
  appearance.
- sequence: one element per line.
- partition: blocks of one-element lines separated by `---` lines.
- bijection: one mapping per line as `y -> x`, whitespace-separated.
"""

from __future__ import annotations

from .constructions import Bijection, Partition
from .core import Pair, Poset, check_token
from .errors import InvalidToken, ParseError


def _meaningful_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((lineno, line))
    return out


def _one_token(line: str, path: str | None, lineno: int) -> str:
    fields = line.split()
    if len(fields) != 1:
        raise ParseError("expected one element per line", path, lineno)
    try:
        return check_token(fields[0])
    except InvalidToken as exc:
        raise ParseError(str(exc), path, lineno) from None


def _pair(line: str, path: str | None, lineno: int) -> Pair:
    if "<" not in line:
        raise ParseError("expected a pair written as 'x < y'", path, lineno)
    left, _, right = line.partition("<")
    if "<" in right:
        raise ParseError("more than one '<' on the line", path, lineno)
    try:
        return check_token(left.strip()), check_token(right.strip())
    except InvalidToken as exc:
        raise ParseError(str(exc), path, lineno) from None


def parse_relation(
    text: str, path: str | None = None
) -> tuple[tuple[str, ...], list[Pair]]:
    """Read a relation file into (ground sequence, pair list).

    The ground keeps the header order; elements appearing only in pairs
    are appended in first-appearance order.  Duplicates and order-axiom
    problems are left for validation, which reports them as domain
    errors with witnesses.
    """
    lines = _meaningful_lines(text)
    separators = [i for i, (_, line) in enumerate(lines) if line == "---"]
    if len(separators) > 1:
        lineno = lines[separators[1]][0]
        raise ParseError("more than one '---' separator", path, lineno)
    if separators:
        cut = separators[0]
        header, body = lines[:cut], lines[cut + 1 :]
    else:
        header, body = [], lines

    ground: list[str] = []
    seen: set[str] = set()
    for lineno, line in header:
        tok = _one_token(line, path, lineno)
        ground.append(tok)
        seen.add(tok)
    pairs: list[Pair] = []
    for lineno, line in body:
        x, y = _pair(line, path, lineno)
        pairs.append((x, y))
        for tok in (x, y):
            if tok not in seen:
                ground.append(tok)
                seen.add(tok)
    return tuple(ground), pairs


def parse_sequence(text: str, path: str | None = None) -> tuple[str, ...]:
    """Read a sequence file: one element per line, order preserved."""
    return tuple(
        _one_token(line, path, lineno)
        for lineno, line in _meaningful_lines(text)
    )


def parse_partition(text: str, path: str | None = None) -> Partition:
    """Read a partition file: blocks of elements separated by `---` lines.

    A file with no content and no separator is the empty partition.
    Once a separator appears, every segment must be a nonempty block;
    the Partition type rejects empty ones.
    """
    lines = _meaningful_lines(text)
    blocks: list[tuple[str, ...]] = []
    current: list[str] = []
    saw_separator = False
    for lineno, line in lines:
        if line == "---":
            saw_separator = True
            blocks.append(tuple(current))
            current = []
        else:
            current.append(_one_token(line, path, lineno))
    if saw_separator or current:
        blocks.append(tuple(current))
    return Partition(tuple(blocks))


def parse_bijection(text: str, path: str | None = None) -> Bijection:
    """Read a bijection file: one mapping per line as `y -> x`."""
    pairs: list[tuple[str, str]] = []
    for lineno, line in _meaningful_lines(text):
        fields = line.split()
        if len(fields) != 3 or fields[1] != "->":
            raise ParseError("expected a mapping written as 'y -> x'", path, lineno)
        try:
            pairs.append((check_token(fields[0]), check_token(fields[2])))
        except InvalidToken as exc:
            raise ParseError(str(exc), path, lineno) from None
    return Bijection(tuple(pairs))


def format_relation(poset: Poset) -> str:
    """Canonical relation text: full ground header, separator, sorted pairs.

    Pairs are ordered by ground position of both endpoints, so equal
    posets serialize to identical bytes.  Output re-parses to the same
    ground and relation.
    """
    lines = list(poset.ground)
    lines.append("---")
    lines.extend(f"{x} < {y}" for x, y in poset.sorted_pairs())
    return "\n".join(lines) + "\n"
