"""Generalized inverses in concrete rings.

The authoritative decision procedure for the (b, c)-inverse is
:func:`bc_inverse_linear`: with inner inverses b⁻, c⁻ fixed, the element y is
the (b, c)-inverse of a exactly when

    y = b b⁻ y,   y = y c⁻ c,   y a b = b,   c a y = c,

and every one of these equations is linear in y.  Over a matrix ring on a
field this is an exact linear system in the dim² entries of y; over the other
finite rings the candidates are enumerated.

:func:`bc_inverse_via_group` is an independent candidate route through a
group inverse, y = w (aw)^# = (wa)^# w, for an element w with wR = bR and
Rw = Rc.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import linalg
from .errors import NotIdempotentError, UnsupportedRingError
from .linalg import Matrix
from .rings import (
    RingElement,
    as_matrix,
    check_enum_size,
    from_matrix,
    is_idempotent,
    left_ideal_equal,
    left_ideal_member,
    right_ideal_equal,
    right_ideal_member,
    same_ring,
)


class Reason(str, enum.Enum):
    B_NOT_REGULAR = "BNotRegular"
    C_NOT_REGULAR = "CNotRegular"
    LINEAR_SYSTEM_INCONSISTENT = "LinearSystemInconsistent"
    GROUP_INVERSE_MISSING = "GroupInverseMissing"
    RANK_MISMATCH = "RankMismatch"
    NO_WITNESS = "NoWitness"
    NOT_REGULAR = "NotRegular"


@dataclass(frozen=True)
class BCResult:
    value: Optional[RingElement] = None
    reason: Optional[Reason] = None
    # Only set by pq_outer_inverse: whether a y a == a also holds.
    reflexive: Optional[bool] = None

    @property
    def exists(self) -> bool:
        return self.value is not None

    @classmethod
    def missing(cls, reason: Reason) -> "BCResult":
        return cls(None, reason)

    def to_json(self) -> dict:
        out = {"exists": self.exists}
        if self.exists:
            out["value"] = self.value.to_json()["value"]
        else:
            out["reason"] = self.reason.value
        if self.reflexive is not None:
            out["reflexive"] = self.reflexive
        return out


def _require_supported(ring):
    if not (ring.linear or ring.is_finite):
        raise UnsupportedRingError(f"{ring} is neither finite nor a matrix ring over a field")


def solve_linear_conditions(ring, equations):
    """Solve ``L y R = C`` for every ``(L, R, C)`` in ``equations``.

    Returns the solutions in canonical order for enumerated rings.  For linear rings
    returns ``[]`` or ``[y]`` and raises if the solution space is not a point,
    since every caller relies on a uniqueness theorem.
    """
    if ring.linear:
        y, nullity = _solve_vectorized(ring, equations)
        if y is None:
            return []
        if nullity:
            raise ArithmeticError(f"expected a unique solution, found a {nullity}-dimensional family")
        return [y]
    check_enum_size(ring)
    mul = ring.mul
    raw = [(L.value, R.value, C.value) for L, R, C in equations]
    out = []
    for y in ring.raw_elements():
        if all(mul(mul(L, y), R) == C for L, R, C in raw):
            out.append(RingElement(ring, y))
    return out


def _solve_vectorized(ring, equations):
    """Stack ``L y R = C`` into one system in the row-major entries of y."""
    first = as_matrix(equations[0][0])
    F, n = first.field, first.nrows
    z = F.raw_zero
    rows, rhs = [], []
    for L, R, C in equations:
        Lm, Rm, Cm = as_matrix(L), as_matrix(R), as_matrix(C)
        for i in range(n):
            for j in range(n):
                # (L y R)[i][j] = sum_{k,l} L[i][k] R[l][j] y[k][l]
                row = []
                for k in range(n):
                    lik = Lm.rows[i][k]
                    for l in range(n):
                        row.append(z if lik == z else F.mul(lik, Rm.rows[l][j]))
                rows.append(tuple(row))
                rhs.append((Cm.rows[i][j],))
    A = Matrix(F, len(rows), n * n, tuple(rows))
    B = Matrix(F, len(rhs), 1, tuple(rhs))
    X = linalg.solve_right(A, B)
    nullity = n * n - linalg.rank(A)
    if X is None:
        return None, nullity
    Y = Matrix(F, n, n, tuple(tuple(X.rows[i * n + j][0] for j in range(n)) for i in range(n)))
    return from_matrix(ring, Y), nullity


def inner_inverse(a: RingElement) -> Optional[RingElement]:
    """A deterministic inner inverse of a, or None when a is not regular."""
    ring = a.ring
    if ring.linear:
        return from_matrix(ring, linalg.inner_inverse_matrix(as_matrix(a)))
    _require_supported(ring)
    check_enum_size(ring)
    mul, v = ring.mul, a.value
    for y in ring.raw_elements():
        if mul(mul(v, y), v) == v:
            return RingElement(ring, y)
    return None


inner_inverse_cached = lru_cache(maxsize=1 << 16)(inner_inverse)


def is_regular(a: RingElement) -> bool:
    return inner_inverse_cached(a) is not None


def group_inverse(a: RingElement) -> Optional[RingElement]:
    ring = a.ring
    if ring.linear:
        Y = linalg.group_inverse_matrix(as_matrix(a))
        return None if Y is None else from_matrix(ring, Y)
    _require_supported(ring)
    check_enum_size(ring)
    mul, v = ring.mul, a.value
    for y in ring.raw_elements():
        vy = mul(v, y)
        if vy == mul(y, v) and mul(vy, v) == v and mul(y, vy) == y:
            return RingElement(ring, y)
    return None


group_inverse_cached = lru_cache(maxsize=1 << 16)(group_inverse)


def _in_bRy(b: RingElement, y: RingElement) -> bool:
    ring = b.ring
    if ring.linear:
        # b is regular here, so y in bRy iff y in bR.
        return right_ideal_member(y, b)
    check_enum_size(ring)
    mul, bv, yv = ring.mul, b.value, y.value
    return any(mul(mul(bv, r), yv) == yv for r in ring.raw_elements())


def _in_yRc(y: RingElement, c: RingElement) -> bool:
    ring = c.ring
    if ring.linear:
        return left_ideal_member(y, c)
    check_enum_size(ring)
    mul, cv, yv = ring.mul, c.value, y.value
    return any(mul(mul(yv, r), cv) == yv for r in ring.raw_elements())


def verify_bc_axioms(a, b, c, y) -> bool:
    """Check the defining conditions y ∈ bRy ∩ yRc, yab = b, cay = c."""
    same_ring(a, b, c, y)
    if y * a * b != b or c * a * y != c:
        return False
    return _in_bRy(b, y) and _in_yRc(y, c)


def bc_inverse_linear(a, b, c, b_inner=None, c_inner=None) -> BCResult:
    ring = same_ring(a, b, c)
    _require_supported(ring)
    bm = inner_inverse_cached(b) if b_inner is None else b_inner
    if bm is None:
        return BCResult.missing(Reason.B_NOT_REGULAR)
    cm = inner_inverse_cached(c) if c_inner is None else c_inner
    if cm is None:
        return BCResult.missing(Reason.C_NOT_REGULAR)
    one, zero = ring.one(), ring.zero()
    equations = [
        (one - b * bm, one, zero),
        (one, one - cm * c, zero),
        (one, a * b, b),
        (c * a, one, c),
    ]
    sols = solve_linear_conditions(ring, equations)
    if not sols:
        return BCResult.missing(Reason.LINEAR_SYSTEM_INCONSISTENT)
    if len(sols) > 1:
        raise ArithmeticError(f"(b,c)-inverse system has {len(sols)} solutions")
    y = sols[0]
    if not verify_bc_axioms(a, b, c, y):
        raise ArithmeticError("linear-system solution failed the (b,c) axioms")
    return BCResult(y)


@lru_cache(maxsize=1 << 17)
def bc_inverse(a, b, c) -> Optional[RingElement]:
    """The (b, c)-inverse of a or None; memoized authoritative route."""
    return bc_inverse_linear(a, b, c).value


def make_w(b, c) -> Optional[RingElement]:
    """An element w with wR = bR and Rw = Rc, or None if there is none."""
    ring = same_ring(b, c)
    if ring.linear:
        fb = linalg.rank_factorization(as_matrix(b))
        fc = linalg.rank_factorization(as_matrix(c))
        if fb.rank != fc.rank:
            return None
        if fb.rank == 0:
            return ring.zero()
        return from_matrix(ring, fb.left @ fc.right)
    _require_supported(ring)
    check_enum_size(ring)
    # b (then c) is preferred when valid, so make_w(b, b) == b as for matrices
    for w in (b, c):
        if right_ideal_equal(w, b) and left_ideal_equal(w, c):
            return w
    for w in ring.elements():
        if right_ideal_equal(w, b) and left_ideal_equal(w, c):
            return w
    return None


make_w_cached = lru_cache(maxsize=1 << 14)(make_w)


def bc_inverse_via_group(a, b, c) -> BCResult:
    same_ring(a, b, c)
    if not is_regular(b):
        return BCResult.missing(Reason.B_NOT_REGULAR)
    if not is_regular(c):
        return BCResult.missing(Reason.C_NOT_REGULAR)
    w = make_w_cached(b, c)
    if w is None:
        return BCResult.missing(Reason.RANK_MISMATCH if a.ring.linear else Reason.NO_WITNESS)
    aw_sharp = group_inverse_cached(a * w)
    wa_sharp = group_inverse_cached(w * a)
    if aw_sharp is None or wa_sharp is None:
        return BCResult.missing(Reason.GROUP_INVERSE_MISSING)
    y = w * aw_sharp
    if not verify_bc_axioms(a, b, c, y):
        return BCResult.missing(Reason.NO_WITNESS)
    if y != wa_sharp * w or w != y * a * w or w != w * a * y:
        raise ArithmeticError("group-inverse route produced inconsistent identities")
    return BCResult(y)


def mary_inverse(a, d) -> BCResult:
    """Inverse of a along d, i.e. its (d, d)-inverse."""
    res = bc_inverse_linear(a, d, d)
    if res.exists:
        y = res.value
        ok = (y * a * d == d and d * a * y == d
              and right_ideal_member(y, d) and left_ideal_member(y, d))
        if not ok:
            raise ArithmeticError("(d,d)-inverse fails the inverse-along-d conditions")
    return res


def _require_idempotent(**elems):
    for name, e in elems.items():
        if not is_idempotent(e):
            raise NotIdempotentError(f"{name} = {e} is not idempotent")


def bott_duffin_ef(a, e, f) -> BCResult:
    """The y with y = ey = yf, yae = e, fay = f."""
    ring = same_ring(a, e, f)
    _require_supported(ring)
    _require_idempotent(e=e, f=f)
    one, zero = ring.one(), ring.zero()
    equations = [
        (one - e, one, zero),
        (one, one - f, zero),
        (one, a * e, e),
        (f * a, one, f),
    ]
    sols = solve_linear_conditions(ring, equations)
    if not sols:
        return BCResult.missing(Reason.LINEAR_SYSTEM_INCONSISTENT)
    if len(sols) > 1:
        raise ArithmeticError("Bott-Duffin system has several solutions")
    y = sols[0]
    if not (y == e * y == y * f and y * a * e == e and f * a * y == f):
        raise ArithmeticError("Bott-Duffin solution failed its defining identities")
    return BCResult(y)


def image_kernel_inverse(a, e, f) -> BCResult:
    return bott_duffin_ef(a, e, 1 - f)


def pq_outer_inverse(a, p, q) -> BCResult:
    """The (p, q)-outer inverse: yay = y, ya = p, ay = 1 - q.

    Given ya = p, the quadratic condition yay = y is the linear y = py, so the
    whole system stays linear; yay = y is re-checked on the answer.
    """
    ring = same_ring(a, p, q)
    _require_supported(ring)
    _require_idempotent(p=p, q=q)
    one, zero = ring.one(), ring.zero()
    equations = [
        (one, a, p),
        (a, one, one - q),
        (one - p, one, zero),
    ]
    sols = solve_linear_conditions(ring, equations)
    if not sols:
        return BCResult.missing(Reason.LINEAR_SYSTEM_INCONSISTENT)
    if len(sols) > 1:
        raise ArithmeticError("(p,q)-outer system has several solutions")
    y = sols[0]
    if y * a * y != y:
        raise ArithmeticError("(p,q)-outer solution is not an outer inverse")
    return BCResult(y, reflexive=(a * y * a == a))


@lru_cache(maxsize=1 << 16)
def pq_outer(a, p, q) -> Optional[RingElement]:
    return pq_outer_inverse(a, p, q).value
