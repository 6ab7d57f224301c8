"""Skew diagrams and corner-linked rectangle chains.

A skew shape is outer/inner with inner contained in outer.  Cells are
1-indexed (row, col) pairs, row 1 on top.  The decomposition recognized
here is the strict one: consecutive rectangles must share exactly one
corner point, with the first rectangle at the top right.
"""

from typing import NamedTuple

from .errors import IncompatiblePair, ShapeNotSymmetric
from .partition import (
    contains,
    conjugate,
    format_partition,
    is_symmetric,
    parse_partition,
    partition,
    sort_key,
)


class SkewShape(NamedTuple):
    outer: tuple
    inner: tuple


def skew(outer, inner=()):
    outer, inner = partition(outer), partition(inner)
    if not contains(inner, outer):
        raise ValueError("inner %r not contained in outer %r" % (inner, outer))
    return SkewShape(outer, inner)


def parse_skew(text):
    """Parse "OUTER/INNER"; the inner part may be omitted."""
    outer, _, inner = text.strip().partition("/")
    return skew(parse_partition(outer), parse_partition(inner))


def format_skew(s):
    return format_partition(s.outer) + "/" + format_partition(s.inner)


def _padded_inner(s):
    return s.inner + (0,) * (len(s.outer) - len(s.inner))


def cells(s):
    """All cells in row-major order."""
    pad = _padded_inner(s)
    return [
        (i, j)
        for i in range(1, len(s.outer) + 1)
        for j in range(pad[i - 1] + 1, s.outer[i - 1] + 1)
    ]


def size(s):
    return sum(s.outer) - sum(s.inner)


def conjugate_skew(s):
    return SkewShape(conjugate(s.outer), conjugate(s.inner))


def reverse_numbering(s):
    """Cells ordered right to left within each row, top row first."""
    pad = _padded_inner(s)
    return [
        (i, j)
        for i in range(1, len(s.outer) + 1)
        for j in range(s.outer[i - 1], pad[i - 1], -1)
    ]


class _Run(NamedTuple):
    top: int
    bottom: int
    lo: int  # columns occupied are lo+1 .. hi
    hi: int


def _runs(s):
    # maximal groups of consecutive rows with identical column support;
    # None when the nonempty rows are interrupted or fail corner contact
    pad = _padded_inner(s)
    rows = [
        (i, pad[i - 1], s.outer[i - 1])
        for i in range(1, len(s.outer) + 1)
        if s.outer[i - 1] > pad[i - 1]
    ]
    runs = []
    prev_i = None
    for i, lo, hi in rows:
        if prev_i is not None and i != prev_i + 1:
            return None
        prev_i = i
        if runs and runs[-1].bottom == i - 1 and (runs[-1].lo, runs[-1].hi) == (lo, hi):
            runs[-1] = runs[-1]._replace(bottom=i)
        else:
            runs.append(_Run(i, i, lo, hi))
    for a, b in zip(runs, runs[1:]):
        if b.hi != a.lo:
            return None
    return runs


def rectangle_decomposition(s):
    """Rectangle sizes of the chain, top right first; None when the
    shape is not such a chain.  The empty shape gives the empty chain."""
    runs = _runs(s)
    if runs is None:
        return None
    return [(r.bottom - r.top + 1, r.hi - r.lo) for r in runs]


def is_chain(s):
    return _runs(s) is not None


def concat(factors):
    """Stack the factors corner to corner, first factor top right.

    Each factor is a partition; empty factors are dropped.  The result
    is the unique chain skew shape whose blocks read back the factors.
    """
    factors = [partition(f) for f in factors]
    factors = [f for f in factors if f]
    outer, inner = [], []
    for i, f in enumerate(factors):
        shift = sum(g[0] for g in factors[i + 1 :])
        outer.extend(p + shift for p in f)
        inner.extend([shift] * len(f))
    return SkewShape(partition(outer), partition(inner))


def sub_skews(s, extra):
    """Partitions between inner and outer holding exactly extra more
    cells than the inner shape, in graded order."""
    if extra < 0 or sum(s.inner) + extra > sum(s.outer):
        return []
    pad = _padded_inner(s)
    found = []

    def rec(i, prefix, left):
        if i == len(s.outer):
            if left == 0:
                found.append(partition(prefix))
            return
        top = s.outer[i] if not prefix else min(s.outer[i], prefix[-1])
        for v in range(pad[i], top + 1):
            if v - pad[i] <= left:
                rec(i + 1, prefix + [v], left - (v - pad[i]))

    rec(0, [], extra)
    return sorted(found, key=sort_key)


def symmetric_chain_split(s):
    """Split a symmetric chain about the diagonal.

    Returns (center, flanks): the side of the diagonal block (0 when
    absent) and the (rows, cols) sizes of the strictly-above-diagonal
    blocks, top right first.  Below-diagonal blocks are their mirrors.
    """
    if not (is_symmetric(s.outer) and is_symmetric(s.inner)):
        raise ShapeNotSymmetric("skew %s is not symmetric" % (format_skew(s),))
    runs = _runs(s)
    if runs is None:
        raise IncompatiblePair("skew %s is not a rectangle chain" % (format_skew(s),))
    center = 0
    above, below = [], []
    for r in runs:
        if r.top == r.lo + 1 and r.bottom == r.hi:
            center = r.bottom - r.top + 1
        elif r.lo + 1 > r.bottom:
            above.append(r)
        else:
            below.append(r)
    mirrored = [_Run(r.lo + 1, r.hi, r.top - 1, r.bottom) for r in reversed(below)]
    if above != mirrored:
        # cannot happen for symmetric input; guards future misuse
        raise ShapeNotSymmetric("blocks of %s are not mirror paired" % (format_skew(s),))
    return center, [(r.bottom - r.top + 1, r.hi - r.lo) for r in above]
