"""
The cellular chain algebra of Pin(2).

As an algebra it is F[s, j] / (sj = j^3 s, s^2 = 0, j^4 = 1) with the basis
j^a s^e, a in 0..3, e in 0..1, stored at index ``a + 4e``.  Elements are
8-bit masks over that basis.  The differential is determined by
d(j) = 0 and d(s) = 1 + j^2.
"""

from __future__ import annotations

from functools import reduce

NBASIS = 8
ONE = 1 << 0
J = 1 << 1
J2 = 1 << 2
S = 1 << 4

#: subalgebra generated by j^2 and s; chains of the circle subgroup
S1_BASIS = (0, 2, 4, 6)
#: 0-cells j^a
J_BASIS = (0, 1, 2, 3)


def index(a: int, e: int) -> int:
    return (a % 4) + 4 * e


def jpow(i: int) -> int:
    return i & 3


def spow(i: int) -> int:
    return i >> 2


def basis_degree(i: int) -> int:
    return i >> 2


def basis_name(i: int) -> str:
    a, e = jpow(i), spow(i)
    parts = []
    if a:
        parts.append("j" if a == 1 else f"j{a}")
    if e:
        parts.append("s")
    return "".join(parts) or "1"


def _basis_product(g: int, h: int) -> int | None:
    a, e = jpow(g), spow(g)
    b, f = jpow(h), spow(h)
    if e == 0:
        return index(a + b, f)
    if f == 1:
        return None
    # s j^b = j^{3b} s
    return index(a + 3 * b, 1)


#: PRODUCT[g][h] is the basis index of g*h, or None when it vanishes
PRODUCT = tuple(tuple(_basis_product(g, h) for h in range(NBASIS)) for g in range(NBASIS))

#: boundary of each basis element as a mask
BOUNDARY = tuple(
    0 if spow(g) == 0 else (1 << index(jpow(g), 0)) | (1 << index(jpow(g) + 2, 0))
    for g in range(NBASIS)
)

#: the two-sided inverse on cells, with the s-cell reversed: s^{-1} = j^2 s
ANTIPODE = tuple(index(-jpow(g), 0) if spow(g) == 0 else index(jpow(g) + 2, 1) for g in range(NBASIS))


def _terms(x: int):
    i = 0
    while x:
        if x & 1:
            yield i
        x >>= 1
        i += 1


def mul(x: int, y: int) -> int:
    """Product of two algebra elements."""
    out = 0
    for g in _terms(x):
        row = PRODUCT[g]
        for h in _terms(y):
            p = row[h]
            if p is not None:
                out ^= 1 << p
    return out


def boundary(x: int) -> int:
    return reduce(lambda acc, g: acc ^ BOUNDARY[g], _terms(x), 0)


def augmentation(x: int) -> int:
    """Image in F under j -> 1, s -> 0."""
    return bin(x & 0b1111).count("1") & 1


def fmt(x: int) -> str:
    if not x:
        return "0"
    return " + ".join(basis_name(g) for g in _terms(x))


def terms(x: int) -> list[int]:
    return list(_terms(x))
