"""Words, heights, validation and step classification for colored Motzkin paths.

Cells of a working sequence are plain ints:

    0          level step ``L``
    2k - 1     up step of color k     (``U1`` = 1, ``U2`` = 3, ...)
    2k         down step of color k   (``D1`` = 2, ``D2`` = 4, ...)
    -v         output letter v (a row index, v >= 1)

With this encoding numeric order on steps is the canonical token order
``L < U1 < D1 < U2 < D2 < ...`` and ``code > 0`` tests for a colored step.
Letters are transparent to every height computation.

Public positions (reports, traces, rendering) are 1-based.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

LEVEL = 0


def up(k: int) -> int:
    if k < 1:
        raise ValueError(f"color must be >= 1, got {k}")
    return 2 * k - 1


def down(k: int) -> int:
    if k < 1:
        raise ValueError(f"color must be >= 1, got {k}")
    return 2 * k


def letter(v: int) -> int:
    if v < 1:
        raise ValueError(f"letter must be >= 1, got {v}")
    return -v


def is_step(c: int) -> bool:
    return c >= 0


def is_up(c: int) -> bool:
    return c > 0 and c & 1 == 1


def is_down(c: int) -> bool:
    return c > 0 and c & 1 == 0


def is_letter(c: int) -> bool:
    return c < 0


def color(c: int) -> int:
    """Color of a colored step; 0 for a level step."""
    if c < 0:
        raise ValueError("letters carry no color")
    return (c + 1) >> 1


class InvalidWordError(ValueError):
    """Raised when an input word violates its defining conditions."""


class PathClass(Enum):
    LOWER = "lower"  # no top-color steps at all
    HAT = "hat"  # top-color pairs present, no enclosed level step
    BAR = "bar"  # some level step enclosed in a top-color pair


# ---------------------------------------------------------------------------
# text formats

_TOKEN_RE = re.compile(r"^(L|[UD](\d+))$")


def token_str(c: int) -> str:
    if c == LEVEL:
        return "L"
    if c < 0:
        return str(-c)
    return ("U" if c & 1 else "D") + str(color(c))


def parse_token(text: str) -> int:
    m = _TOKEN_RE.match(text.strip().upper())
    if not m:
        raise InvalidWordError(f"bad step token {text!r}")
    if m.group(1) == "L":
        return LEVEL
    k = int(m.group(2))
    if k < 1:
        raise InvalidWordError(f"bad step color in {text!r}")
    return up(k) if m.group(1)[0] == "U" else down(k)


def parse_path(text: str) -> tuple[int, ...]:
    """Parse ``"U1 L D1"`` style text into step codes."""
    return tuple(parse_token(t) for t in text.split())


def format_path(cells: Iterable[int]) -> str:
    return " ".join(token_str(c) for c in cells)


def parse_word(text: str) -> tuple[int, ...]:
    """Parse a Yamanouchi word.

    Accepts comma- or whitespace-separated integers, or a bare digit string
    such as ``12132123`` when every letter is a single digit.
    """
    text = text.strip()
    if not text:
        return ()
    if re.fullmatch(r"\d+", text):
        parts = list(text)
    else:
        parts = [p for p in re.split(r"[\s,]+", text) if p]
    try:
        word = tuple(int(p) for p in parts)
    except ValueError:
        raise InvalidWordError(f"bad word {text!r}") from None
    if any(v < 1 for v in word):
        raise InvalidWordError(f"letters must be >= 1 in {text!r}")
    return word


def format_word(word: Iterable[int], sep: str = " ") -> str:
    return sep.join(str(v) for v in word)


# ---------------------------------------------------------------------------
# heights and validation

def heights(cells: Sequence[int], k: int, d: int | None = None) -> list[int]:
    """Prefix heights h_k after each cell; letter cells repeat the previous value."""
    if k < 1 or (d is not None and k > d):
        raise ValueError(f"color {k} out of range for d={d}")
    u, w = up(k), down(k)
    h = 0
    out = []
    for c in cells:
        if c == u:
            h += 1
        elif c == w:
            h -= 1
        out.append(h)
    return out


def height_profile(cells: Sequence[int], d: int) -> list[tuple[int, ...]]:
    """All heights (h_1, ..., h_d) after each cell."""
    h = [0] * (d + 1)
    out = []
    for c in cells:
        if c > 0:
            k = (c + 1) >> 1
            if k <= d:
                h[k] += 1 if c & 1 else -1
        out.append(tuple(h[1:]))
    return out


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    condition: str | None = None
    position: int | None = None  # 1-based
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "PASS"
        return f"FAIL {self.condition} at {self.position}"


PASS = ValidationReport(True)


def validate_motzkin(steps: Sequence[int], d: int) -> ValidationReport:
    """Check (M1) balance and (M2) height ordering of a step word."""
    if d < 0:
        return ValidationReport(False, "ALPHABET", 0, "negative color bound")
    h = [0] * (d + 2)
    for j, c in enumerate(steps, 1):
        if c < 0:
            return ValidationReport(False, "ALPHABET", j, "letter in a step word")
        if c == 0:
            continue
        k = (c + 1) >> 1
        if k > d:
            return ValidationReport(False, "ALPHABET", j, f"color {k} exceeds d={d}")
        if c & 1:
            h[k] += 1
            if k > 1 and h[k] > h[k - 1]:
                return ValidationReport(False, "M2", j, f"h_{k} > h_{k - 1}")
        else:
            h[k] -= 1
            if h[k] < h[k + 1] or h[k] < 0:
                return ValidationReport(False, "M2", j, f"h_{k} < h_{k + 1} or negative")
    for k in range(1, d + 1):
        if h[k] != 0:
            return ValidationReport(False, "M1", len(steps), f"color {k} unbalanced")
    return PASS


def path_part(cells: Iterable[int]) -> tuple[int, ...]:
    return tuple(c for c in cells if c >= 0)


def validate_yamanouchi(word: Sequence[int], max_rows: int) -> ValidationReport:
    counts = [0] * (max(word, default=0) + 2)
    for j, v in enumerate(word, 1):
        if v < 1:
            return ValidationReport(False, "ALPHABET", j, f"letter {v} < 1")
        if v > max_rows:
            return ValidationReport(False, "ROWS", j, f"letter {v} > {max_rows}")
        counts[v] += 1
        if v > 1 and counts[v] > counts[v - 1]:
            return ValidationReport(False, "BALLOT", j, f"more {v}s than {v - 1}s")
    return PASS


def require_motzkin(steps: Sequence[int], d: int) -> None:
    report = validate_motzkin(steps, d)
    if not report:
        raise InvalidWordError(f"not a {d}-Motzkin word: {report} ({report.detail})")


def require_yamanouchi(word: Sequence[int], max_rows: int) -> None:
    report = validate_yamanouchi(word, max_rows)
    if not report:
        raise InvalidWordError(f"not a Yamanouchi word: {report} ({report.detail})")


# ---------------------------------------------------------------------------
# classification and matching

def classify(path: Sequence[int], d: int) -> PathClass:
    if d < 1:
        raise ValueError("classification needs d >= 1")
    top_up, top_down = up(d), down(d)
    h = 0
    has_top = False
    for c in path:
        if c == top_up:
            h += 1
            has_top = True
        elif c == top_down:
            h -= 1
        elif c == LEVEL and h > 0:
            return PathClass.BAR
    return PathClass.HAT if has_top else PathClass.LOWER


def matching_partner(cells: Sequence[int], i: int) -> int:
    """1-based position of the step matched with the colored step at ``i``."""
    c = cells[i - 1]
    if c <= 0:
        raise ValueError(f"position {i} is not a colored step")
    u = c if c & 1 else c - 1
    w = u + 1
    step = 1 if c == u else -1
    bal = 0
    j = i - 1
    while 0 <= j < len(cells):
        if cells[j] == u:
            bal += step
        elif cells[j] == w:
            bal -= step
        if bal == 0:
            return j + 1
        j += step
    raise ValueError(f"step at {i} has no partner")


def matching_pairs(cells: Sequence[int], k: int) -> list[tuple[int, int]]:
    """All matching (U(k), D(k)) pairs as 1-based (open, close) positions."""
    u, w = up(k), down(k)
    stack: list[int] = []
    pairs = []
    for j, c in enumerate(cells, 1):
        if c == u:
            stack.append(j)
        elif c == w:
            if not stack:
                raise ValueError(f"unmatched D{k} at {j}")
            pairs.append((stack.pop(), j))
    if stack:
        raise ValueError(f"unmatched U{k} at {stack[-1]}")
    return sorted(pairs)


def check_nesting_properties(path: Sequence[int], d: int | None = None) -> bool:
    """(N1) every color is a parenthesis system; (N2) every (k+1)-pair sits
    strictly inside some k-pair."""
    if d is None:
        d = max((color(c) for c in path if c >= 0), default=0)
    pairs_by_color = {}
    for k in range(1, d + 1):
        try:
            pairs_by_color[k] = matching_pairs(path, k)
        except ValueError:
            return False
    for k in range(1, d):
        outer = pairs_by_color[k]
        for a, b in pairs_by_color[k + 1]:
            if not any(i < a and b < j for i, j in outer):
                return False
    return True


def _scan_up_steps(cells: Sequence[int], d: int, critical: bool) -> dict[int, set[int]]:
    h = [0] * (d + 2)
    found: dict[int, set[int]] = {}
    for j, c in enumerate(cells, 1):
        if c <= 0:
            continue
        k = (c + 1) >> 1
        if c & 1:
            h[k] += 1
            if critical and k >= 2 and h[k] == h[k - 1]:
                found.setdefault(k, set()).add(j)
            elif not critical and k < d and h[k] == h[k + 1] + 1:
                found.setdefault(k, set()).add(j)
        else:
            h[k] -= 1
    return found


def critical_up_steps(cells: Sequence[int], k: int, d: int | None = None) -> set[int]:
    """Positions of U(k) with h_k = h_{k-1} there (2 <= k)."""
    if k < 2:
        raise ValueError("critical steps need k >= 2")
    d = max(k, d or 0)
    return _scan_up_steps(cells, d, critical=True).get(k, set())


def exceeding_up_steps(cells: Sequence[int], k: int, d: int) -> set[int]:
    """Positions of U(k) with h_k = h_{k+1} + 1 there (1 <= k <= d-1)."""
    if not 1 <= k < d:
        raise ValueError(f"exceeding steps need 1 <= k < d, got k={k}, d={d}")
    return _scan_up_steps(cells, d, critical=False).get(k, set())


# ---------------------------------------------------------------------------
# statistics

def shape_of(word: Sequence[int]) -> tuple[int, ...]:
    counts: dict[int, int] = {}
    for v in word:
        counts[v] = counts.get(v, 0) + 1
    rows = [counts.get(i, 0) for i in range(1, max(counts, default=0) + 1)]
    if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
        raise InvalidWordError(f"letter counts {rows} are not a partition")
    return tuple(rows)


def conjugate(shape: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(1 for r in shape if r > j) for j in range(shape[0] if shape else 0))


def odd_columns(word: Sequence[int]) -> int:
    return sum(1 for col in conjugate(shape_of(word)) if col % 2 == 1)


def level_steps(path: Iterable[int]) -> int:
    return sum(1 for c in path if c == LEVEL)
