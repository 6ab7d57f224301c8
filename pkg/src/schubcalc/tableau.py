"""Semistandard tableaux, insertion, sliding, and ballot fillings.

A tableau stores its skew shape plus the entries of each row.  Text
form writes one row per "/" segment with "." for missing inner cells,
so "..1/.1/2" is a filling of (3,2,1)/(2,1).
"""

from bisect import bisect_right
from typing import NamedTuple

from .errors import SkewInputNotSupported
from .partition import partition
from .skew import SkewShape, reverse_numbering, size, skew


class Tableau(NamedTuple):
    outer: tuple
    inner: tuple
    rows: tuple  # row i holds entries for columns inner_i+1 .. outer_i

    @property
    def shape(self):
        return SkewShape(self.outer, self.inner)


def tableau(shape, rows):
    """Build and validate a semistandard tableau on the given shape."""
    shape = skew(*shape)
    pad = shape.inner + (0,) * (len(shape.outer) - len(shape.inner))
    rows = tuple(tuple(int(v) for v in r) for r in rows)
    if len(rows) != len(shape.outer):
        raise ValueError("expected %d rows" % len(shape.outer))
    grid = {}
    for i, row in enumerate(rows, start=1):
        if len(row) != shape.outer[i - 1] - pad[i - 1]:
            raise ValueError("row %d has wrong length" % i)
        for j, v in zip(range(pad[i - 1] + 1, shape.outer[i - 1] + 1), row):
            if v < 1:
                raise ValueError("entries must be positive")
            grid[(i, j)] = v
    for (i, j), v in grid.items():
        if (i, j + 1) in grid and grid[(i, j + 1)] < v:
            raise ValueError("row %d not weakly increasing" % i)
        if (i + 1, j) in grid and grid[(i + 1, j)] <= v:
            raise ValueError("column %d not strictly increasing" % j)
    return Tableau(shape.outer, shape.inner, rows)


def superstandard(lam):
    """The straight tableau whose row i is filled with the letter i."""
    lam = partition(lam)
    return Tableau(lam, (), tuple((i,) * p for i, p in enumerate(lam, start=1)))


def content(t):
    """Multiplicity vector of the letters 1..max."""
    counts = {}
    for row in t.rows:
        for v in row:
            counts[v] = counts.get(v, 0) + 1
    if not counts:
        return ()
    return tuple(counts.get(v, 0) for v in range(1, max(counts) + 1))


def row_word(t):
    """Row reading word: bottom row first, each row left to right."""
    return [v for row in reversed(t.rows) for v in row]


def reverse_word(t):
    """Word in reverse-numbering order: top row first, right to left."""
    return [v for row in t.rows for v in reversed(row)]


def is_ballot(word):
    """Every prefix has at least as many copies of v as of v+1."""
    counts = {}
    for v in word:
        counts[v] = counts.get(v, 0) + 1
        if v != 1 and counts[v] > counts.get(v - 1, 0):
            return False
    return True


def _insert(rows, x):
    # Schensted row insertion on a list of lists
    for row in rows:
        k = bisect_right(row, x)
        if k == len(row):
            row.append(x)
            return
        row[k], x = x, row[k]
    rows.append([x])


def insertion_tableau(word):
    rows = []
    for x in word:
        _insert(rows, x)
    return tableau((partition(len(r) for r in rows), ()), rows)


def product(t1, t2):
    """Insert t2's row word into t1.  Straight shapes only."""
    if t1.inner or t2.inner:
        raise SkewInputNotSupported("product needs straight shapes")
    rows = [list(r) for r in t1.rows]
    for x in row_word(t2):
        _insert(rows, x)
    return tableau((partition(len(r) for r in rows), ()), rows)


def _inner_corner_rows(inner, nrows):
    return [
        i
        for i in range(1, nrows + 1)
        if inner[i - 1] > 0 and (i == nrows or inner[i] < inner[i - 1])
    ]


def rectify(t, corner_picker=max):
    """Jeu de taquin rectification.

    The result does not depend on the slide order; corner_picker only
    chooses which inner corner row to empty next (kept injectable so
    tests can exercise different orders).
    """
    nrows = len(t.outer)
    outer = list(t.outer)
    inner = list(t.inner) + [0] * (nrows - len(t.inner))
    grid = {}
    for i, row in enumerate(t.rows, start=1):
        for j, v in zip(range(inner[i - 1] + 1, outer[i - 1] + 1), row):
            grid[(i, j)] = v
    while any(inner):
        i = corner_picker(_inner_corner_rows(inner, nrows))
        r, c = i, inner[i - 1]
        while True:
            south = grid.get((r + 1, c))
            east = grid.get((r, c + 1))
            if south is None and east is None:
                break
            # ties slide the south entry up to keep columns strict
            if east is None or (south is not None and south <= east):
                grid[(r, c)] = south
                del grid[(r + 1, c)]
                r += 1
            else:
                grid[(r, c)] = east
                del grid[(r, c + 1)]
                c += 1
        outer[r - 1] -= 1
        inner[i - 1] -= 1
    shape = partition(outer)
    rows = tuple(
        tuple(grid[(i, j)] for j in range(1, shape[i - 1] + 1))
        for i in range(1, len(shape) + 1)
    )
    return tableau((shape, ()), rows)


def iter_lr_grids(s, cont):
    """Yield ballot fillings of s with the given content as cell maps.

    Cells are assigned in reverse-numbering order trying small letters
    first, so fillings appear in lexicographic order of their
    reverse-numbering words.
    """
    cont = tuple(int(c) for c in cont)
    if sum(cont) != size(s):
        raise ValueError("content weight must match the shape size")
    order = reverse_numbering(s)
    nletters = len(cont)
    counts = [0] * (nletters + 1)
    grid = {}

    def place(k):
        if k == len(order):
            yield dict(grid)
            return
        i, j = order[k]
        above = grid.get((i - 1, j), 0)
        right = grid.get((i, j + 1))
        for v in range(1, nletters + 1):
            if counts[v] >= cont[v - 1]:
                continue
            if v != 1 and counts[v] >= counts[v - 1]:
                continue
            if right is not None and v > right:
                continue
            if v <= above:
                continue
            grid[(i, j)] = v
            counts[v] += 1
            yield from place(k + 1)
            counts[v] -= 1
            del grid[(i, j)]

    return place(0)


def enumerate_lr_fillings(s, cont):
    """All ballot fillings of s with the given content, as tableaux."""
    pad = s.inner + (0,) * (len(s.outer) - len(s.inner))
    out = []
    for grid in iter_lr_grids(s, cont):
        rows = tuple(
            tuple(grid[(i, j)] for j in range(pad[i - 1] + 1, s.outer[i - 1] + 1))
            for i in range(1, len(s.outer) + 1)
        )
        out.append(tableau(s, rows))
    return out


def enumerate_ssyt(shape, max_entry):
    """All semistandard fillings of the shape with entries <= max_entry."""
    shape = skew(*shape)
    pad = shape.inner + (0,) * (len(shape.outer) - len(shape.inner))
    order = [
        (i, j)
        for i in range(1, len(shape.outer) + 1)
        for j in range(pad[i - 1] + 1, shape.outer[i - 1] + 1)
    ]
    grid = {}
    out = []

    def place(k):
        if k == len(order):
            rows = tuple(
                tuple(grid[(i, j)] for j in range(pad[i - 1] + 1, shape.outer[i - 1] + 1))
                for i in range(1, len(shape.outer) + 1)
            )
            out.append(Tableau(shape.outer, shape.inner, rows))
            return
        i, j = order[k]
        lo = max(grid.get((i, j - 1), 1), grid.get((i - 1, j), 0) + 1)
        for v in range(lo, max_entry + 1):
            grid[(i, j)] = v
            place(k + 1)
            del grid[(i, j)]

    place(0)
    return out


def format_tableau(t):
    pad = t.inner + (0,) * (len(t.outer) - len(t.inner))
    return "/".join(
        "." * pad[i - 1] + "".join(str(v) for v in row)
        for i, row in enumerate(t.rows, start=1)
    )


def parse_tableau(text):
    outer, inner, rows = [], [], []
    for part in text.strip().split("/"):
        dots = len(part) - len(part.lstrip("."))
        inner.append(dots)
        outer.append(len(part))
        rows.append([int(ch) for ch in part[dots:]])
    return tableau((partition(outer), partition(inner)), rows)
