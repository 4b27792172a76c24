"""LZ78 parse as a computable upper-bound surrogate for algorithmic information.

Kolmogorov-Chaitin complexity itself is uncomputable; the phrase count and
bit cost of an LZ78 parse bound description length from above and are what
this module reports.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Hashable, Sequence

from .errors import DomainError, SymbolOutOfRange

# Symbol slot of a final phrase that matched the dictionary but had no input left to extend it.
NO_SYMBOL = None


@dataclass(frozen=True)
class Lz78Parse:
    phrases: tuple[tuple[int, int | None], ...]
    alphabet_size_S: int
    source_length: int

    def decode(self) -> list[int]:
        table: list[tuple[int, ...]] = [()]
        out: list[int] = []
        for prefix, symbol in self.phrases:
            phrase = table[prefix] + (() if symbol is NO_SYMBOL else (symbol,))
            table.append(phrase)
            out.extend(phrase)
        return out


@dataclass(frozen=True)
class ComplexityEstimate:
    phrase_count: int
    bit_estimate: float


def _ceil_log2(n: int) -> int:
    # exact for integers, unlike math.ceil(math.log2(n))
    return (n - 1).bit_length()


def lz78_parse(message: Sequence[int], alphabet_size: int) -> Lz78Parse:
    """Greedy LZ78 parse of a sequence of symbol indices in ``range(alphabet_size)``."""
    if alphabet_size < 1:
        raise DomainError(f"alphabet size must be >= 1, got {alphabet_size}")
    dictionary: dict[tuple[int, int], int] = {}
    phrases: list[tuple[int, int | None]] = []
    node = 0
    for pos, sym in enumerate(message):
        try:
            sym = operator.index(sym)
        except TypeError:
            raise SymbolOutOfRange(f"symbol {sym!r} at position {pos} is not an integer index") from None
        if not 0 <= sym < alphabet_size:
            raise SymbolOutOfRange(
                f"symbol {sym} at position {pos} outside alphabet of size {alphabet_size}"
            )
        nxt = dictionary.get((node, sym))
        if nxt is not None:
            node = nxt
            continue
        phrases.append((node, sym))
        dictionary[(node, sym)] = len(phrases)
        node = 0
    if node:
        phrases.append((node, NO_SYMBOL))
    return Lz78Parse(tuple(phrases), alphabet_size, len(message))


def complexity_estimate(p: Lz78Parse) -> ComplexityEstimate:
    """Bits = sum over phrases j = 1..c of ceil(log2 j) + ceil(log2 S)."""
    c = len(p.phrases)
    literal = _ceil_log2(p.alphabet_size_S)
    bits = sum(_ceil_log2(j) + literal for j in range(1, c + 1))
    return ComplexityEstimate(c, float(bits))


def symbols_to_indices(message: Sequence[Hashable]) -> tuple[list[int], int]:
    """Map arbitrary symbols to indices by first appearance; returns (indices, alphabet size)."""
    index: dict[Hashable, int] = {}
    out = [index.setdefault(s, len(index)) for s in message]
    return out, max(len(index), 1)
