"""Schubert calculus on rectangle windows, with restriction criteria
for the unitary, symplectic, and quaternionic Shimura settings."""

from .errors import DomainError
from .partition import (
    bar_closure,
    check_reduction,
    complement,
    conjugate,
    contains,
    enumerate_in_rectangle,
    from_minus_part,
    from_plus_part,
    is_strict,
    is_symmetric,
    minus_part,
    partition,
    plus_part,
    staircase,
)
from .skew import SkewShape, concat, rectangle_decomposition, skew
from .tableau import enumerate_lr_fillings, product, rectify, superstandard, tableau
from .lr import (
    count_images,
    inscribes,
    inscribes_antisymmetric,
    inscribes_symmetric,
    lr_coefficient,
    multi_lr_coefficient,
    schur_expand,
)
from .cohomology import (
    CohomClass,
    IsotropicClass,
    LeviShape,
    TensorClass,
    cup,
    dual_class_unitary,
    poincare_pair,
    restrict_levi,
    restrict_to_lagrangian,
    restrict_to_orthogonal,
    schubert_class,
)
from .shimura import CompatiblePair, enumerate_pairs, make_pair

__version__ = "0.1.0"
