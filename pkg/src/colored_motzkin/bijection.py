"""The bijection between colored Motzkin paths and Yamanouchi words.

The forward map rewrites a path in place, one iteration at a time, turning
one down step per iteration into an output letter.  Each color stage ``d``
first removes level steps enclosed in top-color pairs (emitting ``2d+1``),
then removes the remaining top-color up steps (emitting ``2d``), and then
hands the now ``(d-1)``-colored path to the stage below.  Stage 1 finishes by
turning the surviving level steps into letters ``1``.

The inverse undoes the stages bottom-up, recovering each letter's steps
right to left.

Critical and exceeding step sets are computed once at the start of every
iteration and held fixed while the iteration scans.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .core import (
    InvalidWordError,
    format_path,
    require_motzkin,
    require_yamanouchi,
    token_str,
)

FORWARD = "forward"
BACKWARD = "backward"


class ConstructionError(RuntimeError):
    """A scan ran off the sequence.  Never expected for valid input."""


@dataclass(frozen=True)
class IterationRecord:
    """Audit trail of one iteration.  All positions are 1-based.

    Forward records carry ``chain = (b_d, ..., b_1)``; backward records carry
    ``chain = (c, located down steps in scan order)``.  ``marked_pairs`` lists
    ``(left, right, color)`` for every marked pair other than the chain, with
    the color taken before the rewrite.
    """

    direction: str
    step: str
    stage: int
    anchor: int | None
    chain: tuple[int, ...]
    marked_pairs: tuple[tuple[int, int, int], ...]
    letter: int | None
    letter_positions: tuple[int, ...]
    before: tuple[int, ...]
    after: tuple[int, ...]

    def to_line(self) -> str:
        pairs = ",".join(f"({p},{q},{k})" for p, q, k in self.marked_pairs)
        chain = ",".join(map(str, self.chain))
        letters = ",".join(map(str, self.letter_positions))
        return (
            f"{self.direction} step={self.step} stage={self.stage} "
            f"anchor={self.anchor if self.anchor is not None else '-'} "
            f"chain=({chain}) pairs=[{pairs}] "
            f"letter={self.letter if self.letter is not None else '-'}@({letters})"
        )


@dataclass
class Trace:
    direction: str
    d: int
    input: tuple[int, ...]
    output: tuple[int, ...] = ()
    records: list[IterationRecord] = field(default_factory=list)

    def to_text(self) -> str:
        return "\n".join(r.to_line() for r in self.records)


def _step_name(d: int, forward: bool, bar: bool) -> str:
    if forward:
        return "ACE"[min(d, 3) - 1] + ("1" if bar else "2")
    return "BDF"[min(d, 3) - 1] + ("3" if bar else "2")


# ---------------------------------------------------------------------------
# forward

def _forward_scan(cells: list[int], d: int):
    """One pass: first enclosed level step, first U(d), critical up steps."""
    h = [0] * (d + 1)
    enclosed = first_top = None
    critical = set()
    top_up = 2 * d - 1
    for j, c in enumerate(cells):
        if c > 0:
            k = (c + 1) >> 1
            if c & 1:
                h[k] += 1
                if k >= 2 and h[k] == h[k - 1]:
                    critical.add(j)
                if c == top_up and first_top is None:
                    first_top = j
            else:
                h[k] -= 1
        elif c == 0 and enclosed is None and h[d] > 0:
            enclosed = j
    return enclosed, first_top, critical


def _next(cells: list[int], j: int, code: int) -> int:
    n = len(cells)
    while j < n and cells[j] != code:
        j += 1
    if j == n:
        raise ConstructionError(f"no {token_str(code)} found scanning right")
    return j


def _forward_iteration(cells: list[int], d: int, a: int, bar: bool, critical: set[int]):
    """Locate the down-step chain from anchor ``a`` and rewrite ``cells``.

    Returns ``(chain, marked_pairs, b1)`` with 0-based positions.
    """
    b = _next(cells, a + 1, 2 * d)
    chain = [b]
    pairs = []
    if d == 1:
        b1 = b
        marked = []
    else:
        marked = [b]
        pending: list[int] = []  # marked up steps waiting for their partner
        top_up, top_down = 2 * d - 1, 2 * d
        K = d - 1
        j = b + 1
        n = len(cells)
        while True:
            if j >= n:
                raise ConstructionError(f"ran off the path searching for D{K}")
            c = cells[j]
            if K == d - 1:
                if c == top_up and j in critical:
                    q = _next(cells, j + 1, top_down)
                    marked += (j, q)
                    pairs.append((j, q, d))
                    j = q + 1
                    continue
            elif c == 2 * K + 1 and j in critical:
                marked.append(j)
                pending.append(j)
                K += 1
                j += 1
                continue
            if c == 2 * K:
                if K == 1:
                    b1 = j
                    break
                marked.append(j)
                if pending and cells[pending[-1]] == 2 * K - 1:
                    pairs.append((pending.pop(), j, K))
                else:
                    chain.append(j)
                K -= 1
            j += 1
        chain.append(b1)

    cells[a] = 2 * d if bar else 0
    for m in marked:
        cells[m] -= 2
    cells[b1] = -(2 * d + 1 if bar else 2 * d)
    return chain, pairs, b1


def _forward(cells: list[int], d: int, records: list | None) -> None:
    for stage in range(d, 0, -1):
        for bar in (True, False):
            while True:
                enclosed, first_top, critical = _forward_scan(cells, stage)
                a = enclosed if bar else first_top
                if a is None:
                    break
                before = tuple(cells) if records is not None else None
                chain, pairs, b1 = _forward_iteration(cells, stage, a, bar, critical)
                if records is not None:
                    records.append(IterationRecord(
                        FORWARD, _step_name(stage, True, bar), stage, a + 1,
                        tuple(p + 1 for p in chain),
                        tuple((p + 1, q + 1, k) for p, q, k in pairs),
                        -cells[b1], (b1 + 1,), before, tuple(cells),
                    ))
    before = tuple(cells) if records is not None else None
    ones = []
    for j, c in enumerate(cells):
        if c == 0:
            cells[j] = -1
            ones.append(j + 1)
    if records is not None and ones:
        records.append(IterationRecord(
            FORWARD, "A3", 0, None, (), (), 1, tuple(ones), before, tuple(cells),
        ))


def phi(path: Sequence[int], d: int) -> tuple[int, ...]:
    """Map a d-Motzkin word to the Yamanouchi word of an SYT with <= 2d+1 rows."""
    require_motzkin(path, d)
    cells = list(path)
    _forward(cells, d, None)
    return tuple(-c for c in cells)


def phi_trace(path: Sequence[int], d: int) -> Trace:
    require_motzkin(path, d)
    cells = list(path)
    trace = Trace(FORWARD, d, tuple(path))
    _forward(cells, d, trace.records)
    trace.output = tuple(-c for c in cells)
    return trace


# ---------------------------------------------------------------------------
# backward

def _exceeding(cells: list[int], d: int) -> set[int]:
    h = [0] * (d + 2)
    found = set()
    for j, c in enumerate(cells):
        if c > 0:
            k = (c + 1) >> 1
            if c & 1:
                h[k] += 1
                if k < d and h[k] == h[k + 1] + 1:
                    found.add(j)
            else:
                h[k] -= 1
    return found


def _backward_iteration(cells: list[int], d: int, c: int, bar: bool):
    """Undo one forward iteration whose letter sits at 0-based ``c``.

    Returns ``(a, chain, marked_pairs)`` with 0-based positions.
    """
    exceeding = _exceeding(cells, d)
    target = 2 * d if bar else 0  # D(d) for letter 2d+1, L for letter 2d
    chain = [c]
    marked = []
    pairs = []
    pending: list[int] = []
    in_final = d == 1  # scanning for the anchor
    K = 1
    j = c - 1
    while True:
        if j < 0:
            raise ConstructionError(
                "ran off the word searching for "
                + (token_str(target) if in_final else f"D{K}")
            )
        x = cells[j]
        if in_final:
            if x == 2 * d - 3 and j in exceeding:  # U(d-1)
                marked.append(j)
                pending.append(j)
                K = d - 1
                in_final = False
                j -= 1
                continue
            if x == target:
                a = j
                break
        else:
            if K >= 2 and x == 2 * K - 3 and j in exceeding:  # U(K-1)
                marked.append(j)
                pending.append(j)
                K -= 1
                j -= 1
                continue
            if x == 2 * K:
                marked.append(j)
                if pending and cells[pending[-1]] == 2 * K - 1:
                    pairs.append((j, pending.pop(), K))
                else:
                    chain.append(j)
                if K == d - 1:
                    in_final = True
                else:
                    K += 1
        j -= 1

    cells[a] = 0 if bar else 2 * d - 1
    cells[c] = 2
    for m in marked:
        cells[m] += 2
    return a, chain, pairs


def _rightmost(cells: list[int], code: int) -> int:
    for j in range(len(cells) - 1, -1, -1):
        if cells[j] == code:
            return j
    return -1


def _backward(cells: list[int], d: int, records: list | None) -> None:
    before = tuple(cells) if records is not None else None
    ones = []
    for j, c in enumerate(cells):
        if c == -1:
            cells[j] = 0
            ones.append(j + 1)
    if records is not None:
        records.append(IterationRecord(
            BACKWARD, "B1", 0, None, (), (), 1, tuple(ones), before, tuple(cells),
        ))
    for stage in range(1, d + 1):
        for bar in (False, True):
            code = -(2 * stage + 1 if bar else 2 * stage)
            while True:
                c = _rightmost(cells, code)
                if c < 0:
                    break
                before = tuple(cells) if records is not None else None
                a, chain, pairs = _backward_iteration(cells, stage, c, bar)
                if records is not None:
                    records.append(IterationRecord(
                        BACKWARD, _step_name(stage, False, bar), stage, a + 1,
                        tuple(p + 1 for p in chain),
                        tuple((p + 1, q + 1, k) for p, q, k in pairs),
                        -code, (c + 1,), before, tuple(cells),
                    ))


def _check_word(word: Sequence[int], d: int) -> None:
    if d < 0:
        raise InvalidWordError("d must be >= 0")
    require_yamanouchi(word, 2 * d + 1)


def phi_inv(word: Sequence[int], d: int) -> tuple[int, ...]:
    """Recover the d-Motzkin word of a Yamanouchi word with letters <= 2d+1."""
    _check_word(word, d)
    cells = [-v for v in word]
    _backward(cells, d, None)
    return tuple(cells)


def phi_inv_trace(word: Sequence[int], d: int) -> Trace:
    _check_word(word, d)
    cells = [-v for v in word]
    trace = Trace(BACKWARD, d, tuple(word))
    _backward(cells, d, trace.records)
    trace.output = tuple(cells)
    return trace


# ---------------------------------------------------------------------------
# single iterations, exposed for the verification harness

def invert_record(record: IterationRecord) -> tuple[int, ...]:
    """Apply the single backward step matching a forward ``record`` to its
    ``after`` snapshot and return the recovered sequence."""
    if record.direction != FORWARD:
        raise ValueError("expected a forward record")
    cells = list(record.after)
    if record.step == "A3":
        for p in record.letter_positions:
            cells[p - 1] = 0
        return tuple(cells)
    d = record.stage
    bar = record.letter == 2 * d + 1
    _backward_iteration(cells, d, record.letter_positions[0] - 1, bar)
    return tuple(cells)


