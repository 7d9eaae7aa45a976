"""Closed-form rows of the Brieskorn family tables, transcribed as data."""

from __future__ import annotations

from pin2floer.modules import GradedModule


def V(bottom, length=None, mult=1):
    return GradedModule.tower(4, bottom, length, mult)


def strand(first, last, fn):
    """Sum of V_{fn(i)}(1) for i = first..last (empty when last < first)."""
    out = GradedModule(4)
    for i in range(first, last + 1):
        out = out + V(fn(i), 1)
    return out


def _rows_2_5():
    return {
        "20k+11": (lambda k: (2, 5, 20 * k + 11),
                   lambda k: V(2) + V(-1) + V(0) + V(-1, 1, k) + strand(1, 2 * k + 1, lambda i: -1 - 2 * i),
                   (1, -1, -1, 0)),
        "20k+1": (lambda k: (2, 5, 20 * k + 1),
                  lambda k: V(0) + V(1) + V(2) + V(-1, 1, k) + strand(1, 2 * k, lambda i: -1 - 2 * i),
                  (0, 0, 0, 0)),
        "20k-11": (lambda k: (2, 5, 20 * k - 11),
                   lambda k: V(2) + V(3) + V(4) + V(1, 1, k - 1) + strand(0, 2 * k - 2, lambda i: -1 - 2 * i),
                   (1, 1, 1, 1)),
        "20k-1": (lambda k: (2, 5, 20 * k - 1),
                  lambda k: V(4) + V(1) + V(2) + V(1, 1, k - 1) + strand(0, 2 * k - 1, lambda i: -1 - 2 * i),
                  (2, 0, 0, 1)),
        "20k-13": (lambda k: (2, 5, 20 * k - 13),
                   lambda k: V(0) + V(1) + V(2) + V(-1, 1, k - 1) + strand(0, 2 * k - 2, lambda i: -1 - 2 * i),
                   (0, 0, 0, 0)),
        "20k-3": (lambda k: (2, 5, 20 * k - 3),
                  lambda k: V(2) + V(-1) + V(0) + V(-1, 1, k - 1) + strand(0, 2 * k - 1, lambda i: -1 - 2 * i),
                  (1, -1, -1, 0)),
        "20k+3": (lambda k: (2, 5, 20 * k + 3),
                  lambda k: V(2) + V(3) + V(4) + V(1, 1, k) + strand(0, 2 * k - 1, lambda i: -1 - 2 * i),
                  (1, 1, 1, 1)),
        "20k+13": (lambda k: (2, 5, 20 * k + 13),
                   lambda k: V(4) + V(1) + V(2) + V(1, 1, k) + strand(0, 2 * k, lambda i: -1 - 2 * i),
                   (2, 0, 0, 1)),
    }


def _rows_2_7():
    return {
        "28k-1": (lambda k: (2, 7, 28 * k - 1),
                  lambda k: V(4) + V(1) + V(2) + V(3, 1, k) + V(1, 1, k - 1)
                  + strand(0, 2 * k - 1, lambda i: -1 - 2 * i) + strand(0, 2 * k - 1, lambda i: -1 - 4 * k - 4 * i),
                  (2, 0, 0, 2)),
        "28k-15": (lambda k: (2, 7, 28 * k - 15),
                   lambda k: V(4) + V(5) + V(6) + V(3, 1, k - 1) + V(1, 1, k - 1)
                   + strand(0, 2 * k - 2, lambda i: -1 - 2 * i) + strand(0, 2 * k - 2, lambda i: 1 - 4 * k - 4 * i),
                   (2, 2, 2, 2)),
        "28k+1": (lambda k: (2, 7, 28 * k + 1),
                  lambda k: V(0) + V(1) + V(2) + V(-3, 1, k) + V(-1, 1, k)
                  + strand(1, 2 * k, lambda i: -1 - 2 * i) + strand(1, 2 * k, lambda i: -1 - 4 * k - 4 * i),
                  (0, 0, 0, 0)),
        "28k+15": (lambda k: (2, 7, 28 * k + 15),
                   lambda k: V(0) + V(-3) + V(-2) + V(-3, 1, k) + V(-1, 1, k + 1)
                   + strand(1, 2 * k + 1, lambda i: -1 - 2 * i) + strand(1, 2 * k + 1, lambda i: -3 - 4 * k - 4 * i),
                   (0, -2, -2, 0)),
        "14k-3": (lambda k: (2, 7, 14 * k - 3),
                  lambda k: V(2) + V(3) + V(4) + V(1, 1, k - 1)
                  + strand(0, k - 1, lambda i: 1 - 2 * i) + strand(0, k - 1, lambda i: 1 - 2 * k - 4 * i),
                  (1, 1, 1, 1)),
        "14k+3": (lambda k: (2, 7, 14 * k + 3),
                  lambda k: V(2) + V(-1) + V(0) + V(-1, 1, k)
                  + strand(1, k, lambda i: -1 - 2 * i) + strand(1, k, lambda i: -1 - 2 * k - 4 * i),
                  (1, -1, -1, 0)),
        "14k-5": (lambda k: (2, 7, 14 * k - 5),
                  lambda k: V(4) + V(1) + V(2) + V(1, 1, max(k - 2, 0))
                  + strand(0, k - 1, lambda i: 1 - 2 * i) + strand(0, k - 1, lambda i: 1 - 2 * k - 4 * i),
                  (2, 0, 0, 1)),
        "14k+5": (lambda k: (2, 7, 14 * k + 5),
                  lambda k: V(0) + V(1) + V(2) + V(-1, 1, k + 1)
                  + strand(1, k, lambda i: -1 - 2 * i) + strand(1, k, lambda i: -1 - 2 * k - 4 * i),
                  (0, 0, 0, 0)),
    }


TABLE_2_5 = _rows_2_5()
TABLE_2_7 = _rows_2_7()
