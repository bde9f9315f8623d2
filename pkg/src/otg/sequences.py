"""Ternary creation sequences and their canonical form.

A sequence is written most-recently-added first and ends at the implicit
initial vertex ``*``: ``"+-0-*"`` adds ``-``, then ``0``, then ``-``,
then ``+`` on top of ``*``.  ``+`` is an out-dominating source, ``-`` an
in-dominated sink and ``0`` an isolated vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Union


class Symbol(str, Enum):
    # str values make tuples of symbols sort as Plus < Minus < Zero
    PLUS = "+"
    MINUS = "-"
    ZERO = "0"

    def __str__(self) -> str:
        return self.value

    @property
    def is_zero(self) -> bool:
        return self is Symbol.ZERO


PLUS, MINUS, ZERO = Symbol.PLUS, Symbol.MINUS, Symbol.ZERO


class SequenceParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True, order=True)
class TernarySequence:
    symbols: tuple[Symbol, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbols", tuple(Symbol(s) for s in self.symbols))

    @classmethod
    def parse(cls, text: str) -> TernarySequence:
        """Parse ``[+-0]*`` with an optional trailing ``*``."""
        symbols = []
        for i, ch in enumerate(text):
            if ch == "*":
                if i != len(text) - 1:
                    raise SequenceParseError("'*' must be the final character", i)
                break
            try:
                symbols.append(Symbol(ch))
            except ValueError:
                raise SequenceParseError(f"illegal character {ch!r}", i) from None
        return cls(tuple(symbols))

    def __str__(self) -> str:
        return "".join(s.value for s in self.symbols) + "*"

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    @property
    def n(self) -> int:
        """Number of vertices of the graph this sequence builds."""
        return len(self.symbols) + 1

    def symbol_of_vertex(self, v: int) -> Symbol:
        """Symbol recorded for vertex index ``v`` (``1 <= v < n``)."""
        if not 1 <= v < self.n:
            raise IndexError(f"vertex {v} has no symbol (valid: 1..{self.n - 1})")
        return self.symbols[len(self.symbols) - v]

    def magnitudes(self) -> TernarySequence:
        """Drop signs: every Minus becomes Plus."""
        return TernarySequence(tuple(PLUS if s is MINUS else s for s in self.symbols))


SequenceLike = Union[TernarySequence, str, Iterable[Symbol]]


def as_sequence(s: SequenceLike) -> TernarySequence:
    if isinstance(s, TernarySequence):
        return s
    if isinstance(s, str):
        return TernarySequence.parse(s)
    return TernarySequence(tuple(s))


def nonzero_runs(s: TernarySequence) -> list[tuple[int, int]]:
    """Half-open position ranges of the maximal runs of nonzero symbols."""
    runs = []
    start = None
    for i, sym in enumerate(s.symbols):
        if sym.is_zero:
            if start is not None:
                runs.append((start, i))
                start = None
        elif start is None:
            start = i
    if start is not None:
        runs.append((start, len(s.symbols)))
    return runs


def _star_run(s: TernarySequence) -> tuple[int, int] | None:
    runs = nonzero_runs(s)
    if runs and runs[-1][1] == len(s.symbols):
        return runs[-1]
    return None


def canonicalize(s: SequenceLike) -> TernarySequence:
    """Representative of the isomorphism class of ``dtg_build(s)``.

    Each nonzero run is sorted Plus-before-Minus, and the run touching
    ``*`` becomes all Plus.
    """
    s = as_sequence(s)
    out = list(s.symbols)
    star = _star_run(s)
    for a, b in nonzero_runs(s):
        if (a, b) == star:
            out[a:b] = [PLUS] * (b - a)
        else:
            minus = out[a:b].count(MINUS)
            out[a:b] = [PLUS] * (b - a - minus) + [MINUS] * minus
    return TernarySequence(tuple(out))


def is_canonical(s: SequenceLike) -> bool:
    s = as_sequence(s)
    star = _star_run(s)
    for a, b in nonzero_runs(s):
        run = s.symbols[a:b]
        if (a, b) == star:
            if MINUS in run:
                return False
        elif any(x is MINUS and y is PLUS for x, y in zip(run, run[1:])):
            return False
    return True


def swap_equal_magnitude(s: SequenceLike, k: int) -> TernarySequence:
    """Exchange the symbols of vertices ``k`` and ``k - 1``.

    Vertex indices follow construction order (``*`` is vertex 0), so
    ``k`` ranges over ``2..n-1``.  Both symbols must be nonzero, or both
    zero (a no-op).
    """
    s = as_sequence(s)
    if not 2 <= k <= s.n - 1:
        raise ValueError(f"swap position {k} out of range 2..{s.n - 1}")
    hi, lo = s.symbol_of_vertex(k), s.symbol_of_vertex(k - 1)
    if hi.is_zero != lo.is_zero:
        raise ValueError(f"cannot swap {hi} with {lo}: magnitudes differ")
    out = list(s.symbols)
    i = len(out) - k
    out[i], out[i + 1] = out[i + 1], out[i]
    return TernarySequence(tuple(out))


@dataclass(frozen=True)
class BlockForm:
    """Run-length form ``(+^p -^m 0^z) ... (+^p -^m 0^z) +^p0 *``.

    ``blocks`` is ordered most-recent-first, matching the text encoding.
    """

    blocks: tuple[tuple[int, int, int], ...]
    p0: int = 0

    def __post_init__(self) -> None:
        blocks = tuple(tuple(int(x) for x in b) for b in self.blocks)
        for i, (p, m, z) in enumerate(blocks):
            if p < 0 or m < 0:
                raise ValueError(f"block {i} has a negative count")
            if z < 1:
                raise ValueError(f"block {i} must end in at least one zero")
        if self.p0 < 0:
            raise ValueError("p0 must be non-negative")
        object.__setattr__(self, "blocks", blocks)

    @property
    def length(self) -> int:
        return sum(p + m + z for p, m, z in self.blocks) + self.p0


def to_blocks(s: SequenceLike) -> BlockForm:
    """Run-length encode ``s``; per run only the Plus/Minus counts survive."""
    s = as_sequence(s)
    blocks = []
    p = m = z = 0
    for sym in s.symbols:
        if sym.is_zero:
            z += 1
            continue
        if z:
            blocks.append((p, m, z))
            p = m = z = 0
        if sym is PLUS:
            p += 1
        else:
            m += 1
    if z:
        blocks.append((p, m, z))
        p = m = 0
    if m:
        raise ValueError(f"{s}: the run next to '*' contains Minus; canonicalize first")
    return BlockForm(tuple(blocks), p)


def from_blocks(b: BlockForm) -> TernarySequence:
    out: list[Symbol] = []
    for p, m, z in b.blocks:
        out += [PLUS] * p + [MINUS] * m + [ZERO] * z
    out += [PLUS] * b.p0
    return TernarySequence(tuple(out))


def enumerate_canonical(n: int) -> Iterator[TernarySequence]:
    """Yield every canonical sequence on ``n`` vertices, in lexicographic order."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    length = n - 1
    prefix: list[Symbol] = []

    def walk(run_has_minus: bool) -> Iterator[TernarySequence]:
        remaining = length - len(prefix)
        if remaining == 0:
            yield TernarySequence(tuple(prefix))
            return
        if not run_has_minus:
            prefix.append(PLUS)
            yield from walk(False)
            prefix.pop()
        # a Minus needs a later Zero to keep it away from '*'
        if remaining > 1:
            prefix.append(MINUS)
            yield from walk(True)
            prefix.pop()
        prefix.append(ZERO)
        yield from walk(False)
        prefix.pop()

    yield from walk(False)
