"""Schubert-basis cohomology of rectangle Grassmannians.

Classes are finite integer combinations of basis elements indexed by
partitions inside the ambient rectangle; products expand in the basis
and drop everything that falls outside the window.  Grading is by
number of cells (complex codimension).
"""

from dataclasses import dataclass, field

from .errors import (
    AmbientMismatch,
    AmbientNotSquare,
    DegreeOutOfRange,
    LeviDoesNotFit,
    ShapeNotSymmetric,
    ShapeOutOfBox,
)
from .lr import (
    iter_weight_split,
    multi_lr_coefficient,
    partitions_by_weight,
    schur_expand,
)
from .partition import (
    complement,
    conjugate,
    enumerate_in_rectangle,
    fits,
    from_plus_part,
    is_strict,
    is_symmetric,
    partition,
    plus_part,
    rect,
    sort_key,
    staircase,
    weight,
)


def _normalize_terms(terms, sortfn):
    clean = {k: int(c) for k, c in terms.items() if c}
    return dict(sorted(clean.items(), key=sortfn))


@dataclass(frozen=True, eq=False)
class CohomClass:
    ambient: tuple
    terms: dict = field(default_factory=dict)

    def __eq__(self, other):
        return (
            isinstance(other, CohomClass)
            and self.ambient == other.ambient
            and self.terms == other.terms
        )

    def coefficient(self, lam):
        return self.terms.get(partition(lam), 0)


@dataclass(frozen=True, eq=False)
class TensorClass:
    factors: tuple  # (rows, cols) per component
    terms: dict = field(default_factory=dict)

    def __eq__(self, other):
        return (
            isinstance(other, TensorClass)
            and self.factors == other.factors
            and self.terms == other.terms
        )

    def coefficient(self, lams):
        return self.terms.get(tuple(partition(l) for l in lams), 0)


@dataclass(frozen=True, eq=False)
class IsotropicClass:
    rank: int
    flavor: str  # "lagrangian" or "orthogonal"
    terms: dict = field(default_factory=dict)

    def __eq__(self, other):
        return (
            isinstance(other, IsotropicClass)
            and (self.rank, self.flavor) == (other.rank, other.flavor)
            and self.terms == other.terms
        )

    def coefficient(self, key):
        return self.terms.get(partition(key), 0)


@dataclass(frozen=True)
class LeviShape:
    rects: tuple  # (rows, cols) blocks
    center: int = None  # side of the diagonal block, None for type-A Levis


def cohom_class(ambient, terms):
    out = {}
    for lam, c in terms.items():
        lam = partition(lam)
        if not fits(lam, *ambient):
            raise ShapeOutOfBox("%r outside %dx%d" % (lam, *ambient))
        out[lam] = out.get(lam, 0) + c
    return CohomClass(tuple(ambient), _normalize_terms(out, lambda kv: sort_key(kv[0])))


def schubert_class(ambient, lam):
    return cohom_class(ambient, {partition(lam): 1})


def unit(ambient):
    return schubert_class(ambient, ())


def tensor_class(factors, terms):
    factors = tuple(tuple(b) for b in factors)
    out = {}
    for lams, c in terms.items():
        lams = tuple(partition(l) for l in lams)
        if len(lams) != len(factors):
            raise ValueError("expected %d components" % len(factors))
        for l, box in zip(lams, factors):
            if not fits(l, *box):
                raise ShapeOutOfBox("%r outside %dx%d" % (l, *box))
        out[lams] = out.get(lams, 0) + c
    key = lambda kv: tuple(sort_key(l) for l in kv[0])
    return TensorClass(factors, _normalize_terms(out, key))


def cup(x, y):
    """Product in the ambient window; terms leaving the window vanish."""
    if x.ambient != y.ambient:
        raise AmbientMismatch("%r vs %r" % (x.ambient, y.ambient))
    out = {}
    for lam, c1 in x.terms.items():
        for nu, c2 in y.terms.items():
            for mu, c in schur_expand(lam, nu).items():
                if fits(mu, *x.ambient):
                    out[mu] = out.get(mu, 0) + c1 * c2 * c
    return cohom_class(x.ambient, out)


def cup_tensor(x, y):
    """Componentwise product of tensor classes over matching blocks."""
    if x.factors != y.factors:
        raise AmbientMismatch("%r vs %r" % (x.factors, y.factors))
    out = {}
    for lams, c1 in x.terms.items():
        for nus, c2 in y.terms.items():
            partial = [((), 1)]
            for lam, nu, box in zip(lams, nus, x.factors):
                grown = []
                for prefix, c in partial:
                    for mu, cc in schur_expand(lam, nu).items():
                        if fits(mu, *box):
                            grown.append((prefix + (mu,), c * cc))
                partial = grown
            for keys, c in partial:
                out[keys] = out.get(keys, 0) + c1 * c2 * c
    return tensor_class(x.factors, out)


def chern_t(ambient, k):
    """k-th Chern class of the tautological bundle side: a column shape."""
    if not 1 <= k <= ambient[0]:
        raise DegreeOutOfRange("k=%d outside 1..%d" % (k, ambient[0]))
    return schubert_class(ambient, (1,) * k)


def chern_q(ambient, k):
    """k-th Chern class of the quotient side: a row shape."""
    if not 1 <= k <= ambient[1]:
        raise DegreeOutOfRange("k=%d outside 1..%d" % (k, ambient[1]))
    return schubert_class(ambient, (k,))


def poincare_pair(x, y):
    """Coefficient of the full-window class in the product."""
    return cup(x, y).coefficient(rect(*x.ambient))


def check_levi_unitary(ambient, levi):
    if levi.center is not None:
        raise LeviDoesNotFit("a type-A Levi has no diagonal block")
    for a, b in levi.rects:
        if a < 1 or b < 1:
            raise LeviDoesNotFit("blocks need positive sides")
    if sum(a for a, _ in levi.rects) > ambient[0]:
        raise LeviDoesNotFit("row sides exceed the ambient")
    if sum(b for _, b in levi.rects) > ambient[1]:
        raise LeviDoesNotFit("column sides exceed the ambient")


def restrict_levi(x, levi):
    """Restriction to a product of block factors, one per Levi rectangle."""
    check_levi_unitary(x.ambient, levi)
    rects = tuple(levi.rects)
    out = {}
    for lam, c in x.terms.items():
        for alphas in iter_weight_split(rects, weight(lam)):
            m = multi_lr_coefficient(lam, alphas)
            if m:
                out[alphas] = out.get(alphas, 0) + c * m
    return tensor_class(rects, out)


def dual_class_unitary(ambient, levi):
    """Class carried by the Levi orbit: one basis term per complemented
    support shape, normalized so the orbit itself appears with weight 1."""
    check_levi_unitary(ambient, levi)
    full = [rect(a, b) for a, b in levi.rects]
    degree = sum(a * b for a, b in levi.rects)
    out = {}
    for nu in partitions_by_weight(*ambient).get(degree, ()):
        m = multi_lr_coefficient(nu, full)
        if m:
            out[complement(nu, *ambient)] = m
    return cohom_class(ambient, out)


def _require_square(ambient):
    if ambient[0] != ambient[1]:
        raise AmbientNotSquare("%dx%d" % ambient)
    return ambient[0]


def restrict_to_lagrangian(x):
    """Push a square-window class to the symmetric-form fixed locus.

    A basis shape survives when it or its transpose is strict; the
    image is keyed by the symmetric shape with those diagonal hooks.
    """
    p = _require_square(x.ambient)
    out = {}
    for lam, c in x.terms.items():
        if is_strict(lam):
            key = from_plus_part(lam) if lam else ()
        elif is_strict(conjugate(lam)):
            key = from_plus_part(conjugate(lam))
        else:
            continue
        out[key] = out.get(key, 0) + c
    return IsotropicClass(p, "lagrangian", _normalize_terms(out, lambda kv: sort_key(kv[0])))


def restrict_to_orthogonal(x):
    """Like restrict_to_lagrangian for the alternating-form locus; a
    shape survives when it or its transpose is strict and at most p-1
    wide, and the image is keyed by that strict shape."""
    p = _require_square(x.ambient)

    def qualifies(lam):
        return is_strict(lam) and (not lam or lam[0] <= p - 1)

    out = {}
    for lam, c in x.terms.items():
        if qualifies(lam):
            key = lam
        elif qualifies(conjugate(lam)):
            key = conjugate(lam)
        else:
            continue
        out[key] = out.get(key, 0) + c
    return IsotropicClass(p, "orthogonal", _normalize_terms(out, lambda kv: sort_key(kv[0])))


def dual_class_gsp(p):
    """Dual of the symplectic-type orbit in the p x p window."""
    return schubert_class((p, p), staircase(p - 1))


def dual_class_ostar(p):
    """Dual of the quaternionic-type orbit in the p x p window."""
    return schubert_class((p, p), staircase(p))


def check_levi_square(p, levi):
    if levi.center is None:
        raise LeviDoesNotFit("this Levi needs a diagonal block")
    if levi.center < 0:
        raise LeviDoesNotFit("diagonal block side must be nonnegative")
    for a, b in levi.rects:
        if a < 1 or b < 1:
            raise LeviDoesNotFit("blocks need positive sides")
    if levi.center + sum(a for a, _ in levi.rects) > p:
        raise LeviDoesNotFit("row sides exceed the ambient")
    if levi.center + sum(b for _, b in levi.rects) > p:
        raise LeviDoesNotFit("column sides exceed the ambient")


def restrict_symplectic_levi_support(nu, levi, p):
    """Index pairs (center shape, block shapes) that can appear in the
    restriction of the class of nu to a diagonal-block Levi."""
    nu = partition(nu)
    if not is_symmetric(nu):
        raise ShapeNotSymmetric("%r is not symmetric" % (nu,))
    if not fits(nu, p, p):
        raise ShapeOutOfBox("%r outside %dx%d" % (nu, p, p))
    check_levi_square(p, levi)
    rects = tuple(levi.rects)
    base = plus_part(nu)
    targets = [base]
    if conjugate(base) != base:
        targets.append(conjugate(base))
    out = []
    for nu0 in enumerate_in_rectangle(levi.center, levi.center, symmetric_only=True):
        ctr = plus_part(nu0)
        heads = [ctr]
        if conjugate(ctr) != ctr:
            heads.append(conjugate(ctr))
        rem = weight(base) - weight(ctr)
        if rem < 0:
            continue
        for alphas in iter_weight_split(rects, rem):
            if any(
                multi_lr_coefficient(t, (h,) + alphas)
                for t in targets
                for h in heads
            ):
                out.append((nu0, alphas))
    return out
