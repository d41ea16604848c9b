"""Shared test helpers: an independent match oracle and a CLI runner."""
from __future__ import annotations

import contextlib
import io
import sys

from fbas.cli import main


# Reference comparison counts for the classic 12-pattern benchmark over the
# full Divina Commedia (551,846 bytes). Arithmetic fixtures only: the derived
# statistics must reproduce the reference improvement percentages from these
# counts. (label, length, naive, kmp, bmh, fbas, improvement_pct)
KNOWN_BENCHMARK_ROWS = [
    ("inferno",       7,   13269,   12334,    2260,    2247, 0.58),
    ("paradiso",      8,  192754,  188270,   30357,   29711, 2.13),
    ("purgatorio",   10,  223283,  218785,   30211,   28711, 4.97),
    ("beatrice",      8,  555464,  551846,   92715,   86111, 7.12),
    ("dante",         5,  565860,  549395,  135666,  129119, 4.83),
    ("virtute",       7,    4161,    4078,     717,     699, 2.51),
    ("canoscenza",   10,  144380,  138566,   18400,   17175, 6.66),
    ("nel mezzo",     9,   46088,   43679,    6243,    5815, 6.86),
    ("selva oscura", 12,     147,     146,      29,      27, 6.90),
    ("amor",          4,    1707,    1557,     460,     449, 2.39),
    ("luce",          4,   10184,    9733,    2802,    2723, 2.82),
    ("dolce",         5,    1740,    1701,     415,     407, 1.93),
]
KNOWN_TOTALS = (1759037, 1720090, 320275, 303194)


def oracle_positions(text: bytes, pattern: bytes, first_only: bool = False) -> list[int]:
    """Slicing-based brute-force oracle, independent of the library's matchers."""
    m = len(pattern)
    found = []
    for i in range(len(text) - m + 1):
        if text[i:i + m] == pattern:
            found.append(i)
            if first_only:
                break
    return found


def run_cli(argv: list[str], stdin: bytes = b"") -> tuple[int, str, str]:
    """Invoke the CLI entry point in-process, capturing stdout/stderr."""
    out, err = io.StringIO(), io.StringIO()
    old_stdin = sys.stdin
    sys.stdin = io.TextIOWrapper(io.BytesIO(stdin), encoding="utf-8")
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            try:
                code = main(argv)
            except SystemExit as exc:  # argparse usage errors
                code = exc.code if isinstance(exc.code, int) else 2
    finally:
        sys.stdin = old_stdin
    return code, out.getvalue(), err.getvalue()
