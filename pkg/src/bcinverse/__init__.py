"""Exact (b, c)-inverses and reverse-order laws over concrete rings."""

from .errors import (
    BCInverseError,
    EnumerationLimitError,
    NotIdempotentError,
    RingMismatchError,
    ShapeError,
    UnknownLawError,
    UnsupportedRingError,
)
from .rings import (
    MatrixRing,
    PrimeField,
    Rationals,
    RingElement,
    ZMod,
    element_from_json,
    ring_from_json,
    ring_from_spec,
)
from .inverses import (
    BCResult,
    Reason,
    bc_inverse,
    bc_inverse_linear,
    bc_inverse_via_group,
    bott_duffin_ef,
    group_inverse,
    image_kernel_inverse,
    inner_inverse,
    make_w,
    mary_inverse,
    pq_outer_inverse,
)
from .laws import LAWS, LawReport, check_law, get_law, pq_prop_check

__version__ = "0.1.0"
