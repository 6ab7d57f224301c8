"""Littlewood-Richardson numbers and inscription predicates.

Coefficients are computed by counting ballot fillings directly.  The
memo table is normalized under conjugation and under swapping the two
lower shapes, and can be warmed from a plain-text cache file named by
the SCHUBERT_CACHE_DIR environment variable (a directory gets a
lr-cache.txt inside it; anything else is taken as the file itself).
Reads are plain dict lookups, so sharing the table across threads is
safe; writers append whole lines only.
"""

import os
from typing import NamedTuple, Optional

from .errors import ShapeNotSymmetric
from .partition import (
    conjugate,
    contains,
    enumerate_in_rectangle,
    format_partition,
    is_symmetric,
    minus_part,
    parse_partition,
    partition,
    plus_part,
    sort_key,
)
from .skew import (
    SkewShape,
    reverse_numbering,
    size,
    sub_skews,
    symmetric_chain_split,
)


class LRKey(NamedTuple):
    outer: tuple
    inner: tuple
    content: tuple


class MultiLRKey(NamedTuple):
    target: tuple
    factors: tuple


_memo = {}  # canonical LRKey -> int
_multi_memo = {}  # canonical MultiLRKey -> int
_expand_memo = {}  # sorted factor pair -> {mu: coeff}
_loaded_path = None


def _cache_path():
    root = os.environ.get("SCHUBERT_CACHE_DIR")
    if not root:
        return None
    if os.path.isdir(root):
        return os.path.join(root, "lr-cache.txt")
    return root


def _key_to_line(key, value):
    return "%s;%s;%s %d" % (
        format_partition(key.outer),
        format_partition(key.inner),
        format_partition(key.content),
        value,
    )


def _parse_line(line):
    head, _, tail = line.strip().rpartition(" ")
    parts = head.split(";")
    if len(parts) != 3:
        raise ValueError(line)
    return LRKey(*(parse_partition(p) for p in parts)), int(tail)


def _sync_cache():
    global _loaded_path
    path = _cache_path()
    if path == _loaded_path:
        return path
    _loaded_path = path
    if path:
        try:
            with open(path) as fh:
                for line in fh:
                    if not line.strip():
                        continue
                    try:
                        key, value = _parse_line(line)
                    except (ValueError, IndexError):
                        continue  # skip malformed lines
                    _memo.setdefault(key, value)
        except OSError:
            pass
    return path


def _persist(path, key, value):
    if not path:
        return
    try:
        fd = os.open(path, os.O_WRONLY | os.O_CREAT | os.O_APPEND, 0o644)
        try:
            os.write(fd, (_key_to_line(key, value) + "\n").encode())
        finally:
            os.close(fd)
    except OSError:
        pass


def _canonical_key(outer, inner, content):
    best = None
    for i, c in ((inner, content), (content, inner)):
        for k in (LRKey(outer, i, c), LRKey(conjugate(outer), conjugate(i), conjugate(c))):
            if best is None or k < best:
                best = k
    return best


def _count_fillings(outer, inner, cont):
    # ballot fillings of outer/inner with the given content, counted by
    # assigning cells in reverse-numbering order
    order = reverse_numbering(SkewShape(outer, inner))
    nletters = len(cont)
    counts = [0] * (nletters + 1)
    val = {}

    def rec(k):
        if k == len(order):
            return 1
        i, j = order[k]
        above = val.get((i - 1, j), 0)
        right = val.get((i, j + 1))
        hi = nletters if right is None else min(nletters, right)
        total = 0
        for v in range(above + 1, hi + 1):
            if counts[v] >= cont[v - 1]:
                continue
            if v != 1 and counts[v] >= counts[v - 1]:
                continue
            val[(i, j)] = v
            counts[v] += 1
            total += rec(k + 1)
            counts[v] -= 1
            del val[(i, j)]
        return total

    return rec(0)


def lr_coefficient(outer, inner, content):
    """Multiplicity of outer in the product of inner and content."""
    outer, inner, content = partition(outer), partition(inner), partition(content)
    if not contains(inner, outer):
        return 0
    if sum(outer) != sum(inner) + sum(content):
        return 0
    if len(content) > len(outer) or (content and content[0] > outer[0]):
        return 0
    path = _sync_cache()
    key = _canonical_key(outer, inner, content)
    if key in _memo:
        return _memo[key]
    value = _count_fillings(outer, inner, content)
    _memo[key] = value
    _persist(path, key, value)
    return value


def _mu_candidates(lam, nu):
    # shapes that can support a nonzero coefficient over lam and nu
    total = sum(lam) + sum(nu)
    nrows = len(lam) + len(nu)
    cap = (lam[0] if lam else 0) + (nu[0] if nu else 0)
    lows = [
        max(lam[i] if i < len(lam) else 0, nu[i] if i < len(nu) else 0)
        for i in range(nrows)
    ]
    tail = [0] * (nrows + 1)
    for i in range(nrows - 1, -1, -1):
        tail[i] = tail[i + 1] + lows[i]
    out = []

    def rec(i, prev, rem, acc):
        if rem == 0 and tail[i] == 0:
            out.append(tuple(acc))
            return
        if i == nrows or prev == 0:
            return
        for v in range(max(lows[i], 1), min(prev, rem - tail[i + 1]) + 1):
            acc.append(v)
            rec(i + 1, v, rem - v, acc)
            acc.pop()

    rec(0, cap, total, [])
    out.sort(key=sort_key)
    return out


def schur_expand(lam, nu):
    """Expand the product of two straight shapes: {mu: coefficient}."""
    lam, nu = partition(lam), partition(nu)
    pair = tuple(sorted((lam, nu)))
    if pair in _expand_memo:
        return dict(_expand_memo[pair])
    result = {}
    for mu in _mu_candidates(lam, nu):
        c = lr_coefficient(mu, lam, nu)
        if c:
            result[mu] = c
    _expand_memo[pair] = result
    return dict(result)


def expand_product(factors):
    """Iterated expansion of a list of straight shapes."""
    acc = {(): 1}
    for f in factors:
        nxt = {}
        for mu, c in acc.items():
            for mu2, c2 in schur_expand(mu, f).items():
                nxt[mu2] = nxt.get(mu2, 0) + c * c2
        acc = dict(sorted(nxt.items(), key=lambda kv: sort_key(kv[0])))
    return acc


_by_weight_memo = {}


def partitions_by_weight(rows, cols):
    """Partitions inside rows x cols, grouped by weight."""
    try:
        return _by_weight_memo[(rows, cols)]
    except KeyError:
        pass
    groups = {}
    for lam in enumerate_in_rectangle(rows, cols):
        groups.setdefault(sum(lam), []).append(lam)
    groups = {w: tuple(v) for w, v in groups.items()}
    _by_weight_memo[(rows, cols)] = groups
    return groups


def iter_weight_split(boxes, total):
    """Tuples of partitions, one per box, with the given total weight."""
    if total < 0:
        return
    if not boxes:
        if total == 0:
            yield ()
        return
    head = partitions_by_weight(*boxes[0])
    for w, group in sorted(head.items()):
        if w > total:
            break
        for lam in group:
            for rest in iter_weight_split(boxes[1:], total - w):
                yield (lam,) + rest


def multi_lr_coefficient(target, factors):
    """Multiplicity of target in the product of all the factors."""
    target = partition(target)
    cleaned = [partition(f) for f in factors]
    factors = tuple(sorted((f for f in cleaned if f), key=sort_key, reverse=True))
    if sum(target) != sum(sum(f) for f in factors):
        return 0
    if not factors:
        return 1 if not target else 0
    if len(factors) == 1:
        return 1 if target == factors[0] else 0
    key = min(
        MultiLRKey(target, factors),
        MultiLRKey(conjugate(target), tuple(sorted((conjugate(f) for f in factors), key=sort_key, reverse=True))),
    )
    if key in _multi_memo:
        return _multi_memo[key]
    head, rest = factors[0], factors[1:]
    rows = sum(len(f) for f in rest)
    cols = sum(f[0] for f in rest)
    rem = sum(target) - sum(head)
    total = 0
    for beta in partitions_by_weight(rows, cols).get(rem, ()):
        c = lr_coefficient(target, beta, head)
        if c:
            total += c * multi_lr_coefficient(beta, rest)
    _multi_memo[key] = total
    return total


def _nw(a, b):
    return a != b and a[0] <= b[0] and a[1] <= b[1]


def count_images(nu, s):
    """Order-compatible relabelings of nu's diagram onto the skew cells.

    Counts bijections from the cells of the straight shape nu to the
    cells of s preserving the reverse-numbering order on northwest-
    comparable pairs in both directions.
    """
    nu = partition(nu)
    src = reverse_numbering(SkewShape(nu, ()))
    dst = reverse_numbering(s)
    if len(src) != len(dst):
        return 0
    chosen = []  # chosen[j] = index into dst for source cell j
    used = set()

    def ok(k, t):
        for j, tj in enumerate(chosen):
            if _nw(src[j], src[k]) and tj > t:
                return False
            if _nw(src[k], src[j]) and tj < t:
                return False
            # source order is fixed, so a later source cell must not land
            # northwest of an earlier one
            if _nw(dst[t], dst[tj]):
                return False
        return True

    def rec(k):
        if k == len(src):
            return 1
        total = 0
        for t in range(len(dst)):
            if t in used or not ok(k, t):
                continue
            chosen.append(t)
            used.add(t)
            total += rec(k + 1)
            used.discard(t)
            chosen.pop()
        return total

    return rec(0)


def inscribes_witness(nu, s):
    """A shape between s.inner and s.outer reached from s.inner by nu,
    or None."""
    nu = partition(nu)
    for mu in sub_skews(s, sum(nu)):
        if lr_coefficient(mu, s.inner, nu):
            return mu
    return None


def inscribes(nu, s):
    """Whether nu can be drawn inside the skew window s."""
    return inscribes_witness(nu, s) is not None


class SymWitness(NamedTuple):
    orientation: tuple  # ("id"|"conj" for the target, same for the center or None)
    center: Optional[tuple]
    gammas: tuple


def _oriented(strict):
    # a strict shape and its transpose, deduplicated, with labels
    out = [("id", strict)]
    flip = conjugate(strict)
    if flip != strict:
        out.append(("conj", flip))
    return out


def _inscribes_diagonal(nu, s, reduce_map):
    nu = partition(nu)
    center_side, flanks = symmetric_chain_split(s)
    boxes = [(b, a) for a, b in flanks]  # factor for an a x b flank lives in b x a
    base = reduce_map(nu)
    if center_side:
        centers = enumerate_in_rectangle(center_side, center_side, symmetric_only=True)
    else:
        centers = [()]
    for t_label, tgt in _oriented(base):
        for nu0 in centers:
            ctr = reduce_map(nu0)
            for t0_label, ctr_oriented in _oriented(ctr):
                rem = sum(tgt) - sum(ctr_oriented)
                if rem < 0:
                    continue
                head = (ctr_oriented,) if center_side else ()
                for gammas in iter_weight_split(boxes, rem):
                    if multi_lr_coefficient(tgt, head + gammas):
                        return SymWitness(
                            (t_label, t0_label if center_side else None),
                            nu0 if center_side else None,
                            gammas,
                        )
    return None


def inscribes_symmetric(nu, s):
    """Diagonal-symmetric inscription through the hook-arm reduction.

    nu and s must both be symmetric.  Returns a witness (center shape,
    flank shapes, orientations) or None.
    """
    if not is_symmetric(partition(nu)):
        raise ShapeNotSymmetric("%r is not symmetric" % (nu,))
    return _inscribes_diagonal(nu, s, plus_part)


def inscribes_antisymmetric(nu, s):
    """Like inscribes_symmetric but through the strict-arm reduction."""
    if not is_symmetric(partition(nu)):
        raise ShapeNotSymmetric("%r is not symmetric" % (nu,))
    return _inscribes_diagonal(nu, s, minus_part)
