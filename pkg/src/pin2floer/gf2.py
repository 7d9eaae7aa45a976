"""
Bit-packed linear algebra over GF(2).

Vectors are Python ints: bit ``i`` is the coefficient of basis element ``i``.
Matrices are sequences of column images, so applying a matrix is an XOR of
the columns selected by the set bits of the input.  Elimination keys on the
highest set bit, which keeps every reduction deterministic.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


def bits(v: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``v`` in increasing order."""
    while v:
        low = v & -v
        yield low.bit_length() - 1
        v ^= low


def apply(cols: Sequence[int], v: int) -> int:
    """Apply the matrix with column images ``cols`` to the vector ``v``."""
    out = 0
    while v:
        low = v & -v
        out ^= cols[low.bit_length() - 1]
        v ^= low
    return out


def compose(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Column images of the product ``a @ b``."""
    return [apply(a, col) for col in b]


class Echelon:
    """Incrementally grown row space with distinct leading bits.

    ``add`` returns True when the vector was independent of what was
    already stored.  Reduction is by leading (highest) bit only, which is
    enough for membership and rank.
    """

    __slots__ = ("_piv",)

    def __init__(self, vectors: Iterable[int] = ()):
        self._piv: dict[int, int] = {}
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self._piv)

    def reduce(self, v: int) -> int:
        piv = self._piv
        while v:
            r = piv.get(v.bit_length() - 1)
            if r is None:
                return v
            v ^= r
        return 0

    def add(self, v: int) -> bool:
        v = self.reduce(v)
        if not v:
            return False
        self._piv[v.bit_length() - 1] = v
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0


def rank(vectors: Iterable[int]) -> int:
    """Rank of a family of vectors."""
    return len(Echelon(vectors))


def kernel(cols: Sequence[int]) -> list[int]:
    """Basis of the kernel of the map with column images ``cols``.

    Each column is tagged with its own index in the low bits; once the
    image part is eliminated the tag records a kernel vector.  The result
    is deterministic in the column order.
    """
    n = len(cols)
    piv: dict[int, int] = {}
    out = []
    for i, c in enumerate(cols):
        w = (c << n) | (1 << i)
        while w >> n:
            top = w.bit_length() - 1
            r = piv.get(top)
            if r is None:
                piv[top] = w
                break
            w ^= r
        else:
            out.append(w)
    return out


def matrix_rank(cols: Sequence[int]) -> int:
    """Rank of the map with column images ``cols``."""
    return rank(cols)
