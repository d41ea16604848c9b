"""Exact string matchers instrumented to count character comparisons.

Four matchers share one interface: naive scan, Knuth-Morris-Pratt,
Boyer-Moore-Horspool, and the anchor-first Horspool variant (fbas).
All of them operate on raw bytes, return 0-based byte offsets, and
count every text-byte vs pattern-byte equality test made during the
search phase. Preprocessing comparisons are not counted.

The fbas matcher keeps Horspool's bad-character shift rule untouched
and changes only the verification order inside a window: the pattern's
rarest byte (the anchor) is tested first, so a window whose anchor
mismatches is rejected after exactly one comparison.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from ._bytes import as_bytes, byte_value
from .errors import EmptyCorpus, EmptyPattern, InvalidProbability
from .freq import FrequencyTable, default_table, select_anchor
from .metrics import ComparisonCounter


class Mode(enum.Enum):
    """Stop at the first match, or enumerate all (including overlapping)."""

    FIRST_MATCH = "first"
    ALL_MATCHES = "all"


@dataclass
class SearchQuery:
    """A text/pattern pair plus the match mode.

    Strings are coerced to UTF-8 bytes. The pattern must be non-empty;
    the text may be shorter than the pattern, in which case searches
    return an empty outcome.
    """

    text: bytes
    pattern: bytes
    mode: Mode = Mode.ALL_MATCHES

    def __post_init__(self):
        self.text = as_bytes(self.text)
        self.pattern = as_bytes(self.pattern)
        if not self.pattern:
            raise EmptyPattern("pattern must contain at least one byte")


@dataclass
class SearchOutcome:
    """Match positions plus instrumentation for one search.

    ``alignments`` counts window positions examined; ``anchor_hits`` is
    non-zero only for the fbas matcher. When window recording was on,
    the three ``window_*`` lists hold, per examined alignment, its text
    position, its comparison cost, and (fbas only) whether the anchor
    test succeeded there.
    """

    positions: list[int] = field(default_factory=list)
    comparisons: int = 0
    alignments: int = 0
    anchor_hits: int = 0
    window_positions: list[int] | None = None
    window_costs: list[int] | None = None
    window_anchor_hits: list[bool] | None = None

    @property
    def found(self) -> bool:
        return bool(self.positions)


@dataclass(frozen=True)
class ShiftTable:
    """Horspool bad-character shifts for one pattern.

    ``entries[c]`` is the distance from the last occurrence of byte c
    in the pattern prefix (all but the final byte) to the pattern end.
    Bytes absent from that prefix shift by the full pattern length.
    """

    entries: Mapping[int, int]
    pattern_length: int

    def __post_init__(self):
        object.__setattr__(self, "entries", MappingProxyType(dict(self.entries)))

    def step(self, last_window_byte: int) -> int:
        """Shift distance for a window ending in the given byte, in 1..m."""
        return self.entries.get(last_window_byte, self.pattern_length)


def build_shift_table(pattern) -> ShiftTable:
    """Build the bad-character table: for each byte in the pattern prefix,
    m - 1 - (its last prefix index). For m = 1 the table is empty and
    every byte shifts by 1."""
    pat = as_bytes(pattern)
    m = len(pat)
    if m == 0:
        raise EmptyPattern("cannot build a shift table for an empty pattern")
    entries: dict[int, int] = {}
    for i in range(m - 1):
        entries[pat[i]] = m - 1 - i
    return ShiftTable(entries, m)


def _empty_outcome(record_windows: bool) -> SearchOutcome:
    if record_windows:
        return SearchOutcome(window_positions=[], window_costs=[], window_anchor_hits=[])
    return SearchOutcome()


def naive_search(query: SearchQuery, record_windows: bool = False) -> SearchOutcome:
    """Check every window left to right; the correctness oracle for the rest."""
    text, pat = query.text, query.pattern
    n, m = len(text), len(pat)
    if n < m:
        return _empty_outcome(record_windows)
    first_only = query.mode is Mode.FIRST_MATCH
    counter = ComparisonCounter(record_windows)
    positions: list[int] = []
    window_positions: list[int] | None = [] if record_windows else None
    alignments = 0

    for pos in range(n - m + 1):
        alignments += 1
        if window_positions is not None:
            window_positions.append(pos)
        cost = 0
        matched = True
        for i in range(m):
            cost += 1
            if text[pos + i] != pat[i]:
                matched = False
                break
        counter.add_window(cost)
        if matched:
            positions.append(pos)
            if first_only:
                break

    return SearchOutcome(
        positions=positions,
        comparisons=counter.total,
        alignments=alignments,
        window_positions=window_positions,
        window_costs=counter.per_alignment,
        window_anchor_hits=[False] * alignments if record_windows else None,
    )


def _failure_function(pat: bytes) -> list[int]:
    # Longest proper prefix of pat[:i+1] that is also its suffix.
    m = len(pat)
    fail = [0] * m
    k = 0
    for i in range(1, m):
        while k > 0 and pat[i] != pat[k]:
            k = fail[k - 1]
        if pat[i] == pat[k]:
            k += 1
        fail[i] = k
    return fail


def kmp_search(query: SearchQuery, record_windows: bool = False) -> SearchOutcome:
    """Knuth-Morris-Pratt with the classic failure function.

    Only search-phase comparisons are counted; building the failure
    function is preprocessing. An alignment here is a distinct value of
    the implicit window start (text index minus pattern index) at which
    at least one comparison was made.
    """
    text, pat = query.text, query.pattern
    n, m = len(text), len(pat)
    if n < m:
        return _empty_outcome(record_windows)
    first_only = query.mode is Mode.FIRST_MATCH
    fail = _failure_function(pat)
    counter = ComparisonCounter(record_windows)
    positions: list[int] = []
    window_positions: list[int] | None = [] if record_windows else None
    alignments = 0
    last_start = -1
    window_cost = 0

    i = j = 0
    while i < n:
        start = i - j
        if start != last_start:
            if last_start >= 0:
                counter.add_window(window_cost)
            window_cost = 0
            alignments += 1
            last_start = start
            if window_positions is not None:
                window_positions.append(start)
        window_cost += 1
        if text[i] == pat[j]:
            i += 1
            j += 1
            if j == m:
                positions.append(i - m)
                if first_only:
                    break
                j = fail[j - 1]
        elif j > 0:
            j = fail[j - 1]
        else:
            i += 1
    if last_start >= 0:
        counter.add_window(window_cost)

    return SearchOutcome(
        positions=positions,
        comparisons=counter.total,
        alignments=alignments,
        window_positions=window_positions,
        window_costs=counter.per_alignment,
        window_anchor_hits=[False] * alignments if record_windows else None,
    )


def bmh_search(query: SearchQuery, record_windows: bool = False) -> SearchOutcome:
    """Boyer-Moore-Horspool: verify right to left, shift by the
    bad-character rule on the last window byte."""
    text, pat = query.text, query.pattern
    n, m = len(text), len(pat)
    if n < m:
        return _empty_outcome(record_windows)
    first_only = query.mode is Mode.FIRST_MATCH
    shift = build_shift_table(pat)
    counter = ComparisonCounter(record_windows)
    positions: list[int] = []
    window_positions: list[int] | None = [] if record_windows else None
    alignments = 0

    pos = 0
    limit = n - m
    while pos <= limit:
        alignments += 1
        if window_positions is not None:
            window_positions.append(pos)
        cost = 0
        j = m - 1
        while j >= 0:
            cost += 1
            if text[pos + j] != pat[j]:
                break
            j -= 1
        counter.add_window(cost)
        if j < 0:
            positions.append(pos)
            if first_only:
                break
        pos += shift.step(text[pos + m - 1])

    return SearchOutcome(
        positions=positions,
        comparisons=counter.total,
        alignments=alignments,
        window_positions=window_positions,
        window_costs=counter.per_alignment,
        window_anchor_hits=[False] * alignments if record_windows else None,
    )


def fbas_search(
    query: SearchQuery,
    table: FrequencyTable | None = None,
    record_windows: bool = False,
) -> SearchOutcome:
    """Anchor-first Horspool search.

    Each window first tests the anchor byte (one comparison). Only on
    an anchor hit are the remaining positions verified, left to right,
    skipping the anchor and stopping at the first mismatch, so a full
    match costs exactly m comparisons and an anchor miss exactly one.
    Shifts use the same bad-character rule as bmh_search, on the last
    window byte, whether or not the window matched.
    """
    text, pat = query.text, query.pattern
    n, m = len(text), len(pat)
    if n < m:
        return _empty_outcome(record_windows)
    first_only = query.mode is Mode.FIRST_MATCH
    if table is None:
        table = default_table()
    sel = select_anchor(pat, table)
    a = sel.index
    anchor_char = sel.character
    shift = build_shift_table(pat)
    counter = ComparisonCounter(record_windows)
    positions: list[int] = []
    window_positions: list[int] | None = [] if record_windows else None
    window_anchor_hits: list[bool] | None = [] if record_windows else None
    alignments = 0
    anchor_hits = 0

    pos = 0
    limit = n - m
    while pos <= limit:
        alignments += 1
        if window_positions is not None:
            window_positions.append(pos)
        cost = 1
        hit = text[pos + a] == anchor_char
        matched = False
        if hit:
            anchor_hits += 1
            matched = True
            for i in range(m):
                if i == a:
                    continue
                cost += 1
                if text[pos + i] != pat[i]:
                    matched = False
                    break
        counter.add_window(cost)
        if window_anchor_hits is not None:
            window_anchor_hits.append(hit)
        if matched:
            positions.append(pos)
            if first_only:
                break
        pos += shift.step(text[pos + m - 1])

    return SearchOutcome(
        positions=positions,
        comparisons=counter.total,
        alignments=alignments,
        anchor_hits=anchor_hits,
        window_positions=window_positions,
        window_costs=counter.per_alignment,
        window_anchor_hits=window_anchor_hits,
    )


ALGORITHMS = ("naive", "kmp", "bmh", "fbas")


def search(
    query: SearchQuery,
    algorithm: str = "fbas",
    table: FrequencyTable | None = None,
    record_windows: bool = False,
) -> SearchOutcome:
    """Run one of the four matchers by name."""
    if algorithm == "fbas":
        return fbas_search(query, table, record_windows=record_windows)
    if algorithm == "naive":
        return naive_search(query, record_windows=record_windows)
    if algorithm == "kmp":
        return kmp_search(query, record_windows=record_windows)
    if algorithm == "bmh":
        return bmh_search(query, record_windows=record_windows)
    raise ValueError(f"unknown algorithm {algorithm!r}, expected one of {ALGORITHMS}")


@dataclass(frozen=True)
class ComparisonEstimate:
    """Expected per-window comparison cost for an anchor-first search."""

    match_probability: float
    pattern_length: int
    expected_comparisons: float


def expected_comparisons(match_probability: float, pattern_length: int) -> ComparisonEstimate:
    """Model of the mean window cost: 1 + p * (m - 1).

    One comparison always happens (the first position tested); with
    probability p it matches and the remaining m - 1 positions are
    charged. Early mismatch stopping makes the model exact for m <= 2
    and an upper bound for longer patterns.
    """
    if not 0.0 <= match_probability <= 1.0:
        raise InvalidProbability(f"match probability must be in [0, 1], got {match_probability}")
    if pattern_length < 1:
        raise EmptyPattern("pattern length must be at least 1")
    return ComparisonEstimate(
        match_probability=match_probability,
        pattern_length=pattern_length,
        expected_comparisons=1.0 + match_probability * (pattern_length - 1),
    )


def char_probability(text, c) -> float:
    """Relative frequency of byte c in text, byte-exact (no case folding)."""
    data = as_bytes(text)
    if not data:
        raise EmptyCorpus("cannot estimate a probability from empty text")
    return data.count(byte_value(c)) / len(data)
