# -*- coding: utf-8 -*-
from typing import Iterable, Iterator, Optional, Sequence, Tuple, TypeVar
import itertools

T = TypeVar("T")


def lex_product(bounds: Sequence[int], descending: bool = False) -> Iterator[Tuple[int, ...]]:
    """
    Tuples of [0, b_1) x ... x [0, b_k) in lexicographic order.

    Unlike itertools.product, which copies every input into a tuple first,
    the ranges are re-iterated on wrap-around, so a single bound may be
    huge. An empty `bounds` yields the single empty tuple.
    """
    if descending:
        ranges = [range(b - 1, -1, -1) for b in bounds]
    else:
        ranges = [range(b) for b in bounds]
    if any(len(r) == 0 for r in ranges):
        return
    iterators = [iter(r) for r in ranges]
    values = [next(i) for i in iterators]
    while True:
        yield tuple(values)
        for index in reversed(range(len(iterators))):
            try:
                values[index] = next(iterators[index])
                break
            except StopIteration:
                iterators[index] = iter(ranges[index])
                values[index] = next(iterators[index])
        else:
            return


def capped(stream: Iterable[T], limit: Optional[int] = None) -> Iterator[T]:
    if limit is None:
        return iter(stream)
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    return itertools.islice(stream, limit)


def format_residues(residues: Sequence[int]) -> str:
    return ", ".join(str(x) for x in residues)


def parse_residues(text: str) -> Tuple[int, ...]:
    """'7,4' or '(7, 4)' -> (7, 4)"""
    stripped = text.strip().strip("()[]")
    if not stripped:
        raise ValueError("Empty residue vector")
    return tuple(int(part) for part in stripped.split(","))
