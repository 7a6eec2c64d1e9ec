"""Concrete rings: Z/nZ, Q, GF(p) and square matrix rings over them.

A ring descriptor is an immutable value that knows how to normalize, combine
and (for finite rings) enumerate raw values.  :class:`RingElement` pairs a
descriptor with a canonical raw value, so equality of elements is equality
of canonical forms.

Enumeration order is fixed: residues ascending, matrices in row-major
lexicographic order of their scalar entries.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .errors import EnumerationLimitError, RingMismatchError, UnsupportedRingError
from .linalg import Matrix

DEFAULT_MAX_ENUM = 4096
HARD_MAX_ENUM = 10**8


def max_enum() -> int:
    """Per-query enumeration cap, overridable through ``BCINV_MAX_ENUM``."""
    raw = os.environ.get("BCINV_MAX_ENUM")
    if not raw:
        return DEFAULT_MAX_ENUM
    return max(1, min(int(raw), HARD_MAX_ENUM))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Ring:
    is_field = False
    is_commutative = True
    is_finite = False

    # Element-level helpers shared by every descriptor.

    def element(self, value) -> "RingElement":
        return RingElement(self, self.normalize(value))

    def zero(self) -> "RingElement":
        return RingElement(self, self.raw_zero)

    def one(self) -> "RingElement":
        return RingElement(self, self.raw_one)

    def size(self):
        return None

    def raw_elements(self):
        raise UnsupportedRingError(f"{self} is infinite and cannot be enumerated")

    def elements(self):
        for v in self.raw_elements():
            yield RingElement(self, v)

    @property
    def linear(self) -> bool:
        """True when elements can be handled by exact linear algebra over a field."""
        return self.is_field


@dataclass(frozen=True)
class ZMod(Ring):
    n: int

    is_finite = True

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"Z_n needs n >= 1, got {self.n!r}")

    @property
    def raw_zero(self):
        return 0

    @property
    def raw_one(self):
        return 1 % self.n

    def normalize(self, v):
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"Z_{self.n} residues must be integers, got {v!r}")
        return v % self.n

    def add(self, x, y):
        return (x + y) % self.n

    def sub(self, x, y):
        return (x - y) % self.n

    def mul(self, x, y):
        return (x * y) % self.n

    def neg(self, x):
        return (-x) % self.n

    def size(self):
        return self.n

    def raw_elements(self):
        return iter(range(self.n))

    def to_json(self):
        return {"kind": "zmod", "n": self.n}

    def value_to_json(self, v):
        return v

    def value_from_json(self, v):
        return self.normalize(v)

    def __str__(self):
        return f"Z_{self.n}"


@dataclass(frozen=True)
class Rationals(Ring):
    is_field = True

    raw_zero = Fraction(0)
    raw_one = Fraction(1)

    def normalize(self, v):
        if isinstance(v, float):
            raise TypeError("floating point values are not accepted; use 'p/q' strings")
        return Fraction(v)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / x

    def to_json(self):
        return {"kind": "q"}

    def value_to_json(self, v):
        return str(v)

    def value_from_json(self, v):
        return self.normalize(v)

    def __str__(self):
        return "Q"


@dataclass(frozen=True)
class PrimeField(Ring):
    p: int

    is_field = True
    is_finite = True

    def __post_init__(self):
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise ValueError(f"GF(p) needs a prime p, got {self.p!r}")

    raw_zero = 0

    @property
    def raw_one(self):
        return 1

    def normalize(self, v):
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"GF({self.p}) scalars must be integers, got {v!r}")
        return v % self.p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def neg(self, x):
        return (-x) % self.p

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def size(self):
        return self.p

    def raw_elements(self):
        return iter(range(self.p))

    def to_json(self):
        return {"kind": "fp", "p": self.p}

    def value_to_json(self, v):
        return v

    def value_from_json(self, v):
        return self.normalize(v)

    def __str__(self):
        return f"F_{self.p}"


@dataclass(frozen=True)
class MatrixRing(Ring):
    """Square matrices of size ``dim`` over a field, or over Z_n for enumeration only."""

    base: Ring
    dim: int

    def __post_init__(self):
        if not isinstance(self.base, (ZMod, Rationals, PrimeField)):
            raise ValueError(f"unsupported matrix base ring {self.base!r}")
        if not isinstance(self.dim, int) or self.dim < 1:
            raise ValueError(f"matrix dimension must be >= 1, got {self.dim!r}")

    @property
    def is_commutative(self):
        return self.dim == 1

    @property
    def is_finite(self):
        return self.base.is_finite

    @property
    def linear(self):
        return self.base.is_field

    @property
    def raw_zero(self):
        z = self.base.raw_zero
        return tuple((z,) * self.dim for _ in range(self.dim))

    @property
    def raw_one(self):
        z, o = self.base.raw_zero, self.base.raw_one
        return tuple(tuple(o if i == j else z for j in range(self.dim)) for i in range(self.dim))

    def normalize(self, v):
        if isinstance(v, int) and not isinstance(v, bool):
            s = self.base.normalize(v)
            z = self.base.raw_zero
            return tuple(tuple(s if i == j else z for j in range(self.dim)) for i in range(self.dim))
        if isinstance(v, Matrix):
            v = v.rows
        rows = tuple(tuple(self.base.normalize(x) for x in row) for row in v)
        if len(rows) != self.dim or any(len(r) != self.dim for r in rows):
            raise ValueError(f"expected a {self.dim}x{self.dim} matrix, got {v!r}")
        return rows

    def add(self, x, y):
        add = self.base.add
        return tuple(tuple(add(a, b) for a, b in zip(r, s)) for r, s in zip(x, y))

    def sub(self, x, y):
        sub = self.base.sub
        return tuple(tuple(sub(a, b) for a, b in zip(r, s)) for r, s in zip(x, y))

    def neg(self, x):
        neg = self.base.neg
        return tuple(tuple(neg(a) for a in r) for r in x)

    def mul(self, x, y):
        return linalg.raw_matmul(self.base, x, y, self.dim, self.dim)

    def size(self):
        s = self.base.size()
        return None if s is None else s ** (self.dim * self.dim)

    def raw_elements(self):
        d = self.dim
        for flat in itertools.product(list(self.base.raw_elements()), repeat=d * d):
            yield tuple(flat[i * d:(i + 1) * d] for i in range(d))

    def to_json(self):
        if isinstance(self.base, Rationals):
            return {"kind": "matq", "dim": self.dim}
        if isinstance(self.base, PrimeField):
            return {"kind": "matfp", "p": self.base.p, "dim": self.dim}
        return {"kind": "matzmod", "n": self.base.n, "dim": self.dim}

    def value_to_json(self, v):
        return [[self.base.value_to_json(x) for x in row] for row in v]

    def value_from_json(self, v):
        if not isinstance(v, list):
            raise ValueError(f"matrix value must be a list of rows, got {v!r}")
        return self.normalize([[self.base.value_from_json(x) for x in row] for row in v])

    def to_matrix(self, v) -> Matrix:
        return Matrix(self.base, self.dim, self.dim, v)

    def __str__(self):
        return f"M_{self.dim}({self.base})"


class RingElement:
    """An element of a concrete ring, stored in canonical form."""

    __slots__ = ("ring", "value", "_hash")

    def __init__(self, ring: Ring, value):
        self.ring = ring
        self.value = value
        self._hash = None

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring.element(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.ring.add(self.value, other.value))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.ring.sub(self.value, other.value))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.ring.sub(other.value, self.value))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.ring.mul(self.value, other.value))

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.ring.mul(other.value, self.value))

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.value))

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.value == other.value and (self.ring is other.ring or self.ring == other.ring)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.value))
        return self._hash

    def is_zero(self) -> bool:
        return self.value == self.ring.raw_zero

    def to_json(self):
        return {"ring": self.ring.to_json(), "value": self.ring.value_to_json(self.value)}

    def __repr__(self):
        return f"<{self.ring}: {self.ring.value_to_json(self.value)}>"

    def __str__(self):
        v = self.ring.value_to_json(self.value)
        return str(v)


# ---------------------------------------------------------------------------
# JSON descriptors

def ring_from_json(obj) -> Ring:
    if isinstance(obj, str):
        return ring_from_spec(obj)
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError(f"ring descriptor must be an object with a 'kind', got {obj!r}")
    kind = obj["kind"]
    if kind == "zmod":
        return ZMod(obj["n"])
    if kind == "q":
        return Rationals()
    if kind == "fp":
        return PrimeField(obj["p"])
    if kind == "matq":
        return MatrixRing(Rationals(), obj["dim"])
    if kind == "matfp":
        return MatrixRing(PrimeField(obj["p"]), obj["dim"])
    if kind == "matzmod":
        return MatrixRing(ZMod(obj["n"]), obj["dim"])
    raise ValueError(f"unknown ring kind {kind!r}")


def ring_from_spec(text: str) -> Ring:
    """Parse shorthand like ``zmod:6``, ``q``, ``fp:5``, ``matq:2``, ``matfp:5:3``, ``matzmod:4:2``."""
    parts = text.split(":")
    kind, args = parts[0], [int(x) for x in parts[1:]]
    try:
        if kind == "zmod":
            return ZMod(*args)
        if kind == "q" and not args:
            return Rationals()
        if kind == "fp":
            return PrimeField(*args)
        if kind == "matq":
            return MatrixRing(Rationals(), *args)
        if kind == "matfp":
            return MatrixRing(PrimeField(args[0]), args[1])
        if kind == "matzmod":
            return MatrixRing(ZMod(args[0]), args[1])
    except (TypeError, IndexError):
        pass
    raise ValueError(f"cannot parse ring shorthand {text!r}")


def element_from_json(obj, ring: Ring = None) -> RingElement:
    """Decode ``{"ring": ..., "value": ...}`` or, when ``ring`` is given, a bare value."""
    if isinstance(obj, dict) and "value" in obj:
        r = ring_from_json(obj["ring"]) if "ring" in obj else ring
        if r is None:
            raise ValueError("element JSON lacks a ring descriptor")
        if ring is not None and r != ring:
            raise RingMismatchError(f"element ring {r} does not match {ring}")
        return RingElement(r, r.value_from_json(obj["value"]))
    if ring is None:
        raise ValueError("bare element value needs a ring")
    return RingElement(ring, ring.value_from_json(obj))


# ---------------------------------------------------------------------------
# Operations

_OPS = {"add": "__add__", "sub": "__sub__", "mul": "__mul__"}


def ring_arith(op: str, x: RingElement, y: RingElement = None) -> RingElement:
    if op == "neg":
        return -x
    if op not in _OPS:
        raise ValueError(f"unknown ring operation {op!r}")
    if x.ring != y.ring:
        raise RingMismatchError(f"{x.ring} vs {y.ring}")
    return getattr(x, _OPS[op])(y)


def is_idempotent(x: RingElement) -> bool:
    return x * x == x


def same_ring(*xs: RingElement) -> Ring:
    r = xs[0].ring
    for x in xs[1:]:
        if x.ring is not r and x.ring != r:
            raise RingMismatchError(f"{r} vs {x.ring}")
    return r


def as_matrix(x: RingElement) -> Matrix:
    """View an element of a linear ring as a matrix (fields as 1x1)."""
    r = x.ring
    if isinstance(r, MatrixRing) and r.linear:
        return r.to_matrix(x.value)
    if r.is_field:
        return Matrix(r, 1, 1, ((x.value,),))
    raise UnsupportedRingError(f"{r} is not a matrix ring over a field")


def from_matrix(ring: Ring, M: Matrix) -> RingElement:
    if isinstance(ring, MatrixRing):
        return RingElement(ring, M.rows)
    return RingElement(ring, M.rows[0][0])


def enumerate_elements(ring: Ring):
    """Yield every element of a finite ring exactly once, in canonical order."""
    if not ring.is_finite:
        raise UnsupportedRingError(f"{ring} is infinite and cannot be enumerated")
    return ring.elements()


def check_enum_size(ring: Ring, limit: int = None) -> int:
    if not ring.is_finite:
        raise UnsupportedRingError(f"{ring} is infinite and cannot be enumerated")
    limit = max_enum() if limit is None else limit
    size = ring.size()
    if size > limit:
        raise EnumerationLimitError(size, limit)
    return size


@lru_cache(maxsize=1 << 14)
def _right_multiples(a: RingElement) -> frozenset:
    check_enum_size(a.ring)
    mul, v = a.ring.mul, a.value
    return frozenset(mul(v, r) for r in a.ring.raw_elements())


@lru_cache(maxsize=1 << 14)
def _left_multiples(a: RingElement) -> frozenset:
    check_enum_size(a.ring)
    mul, v = a.ring.mul, a.value
    return frozenset(mul(r, v) for r in a.ring.raw_elements())


def right_ideal_member(x: RingElement, a: RingElement) -> bool:
    """x in aR: column-space containment for linear rings, enumeration otherwise."""
    ring = same_ring(x, a)
    if ring.linear:
        return linalg.column_space_contains(as_matrix(a), as_matrix(x))
    if ring.is_finite:
        return x.value in _right_multiples(a)
    raise UnsupportedRingError(f"ideal membership is not decidable in {ring}")


def left_ideal_member(x: RingElement, a: RingElement) -> bool:
    """x in Ra: row-space containment for linear rings, enumeration otherwise."""
    ring = same_ring(x, a)
    if ring.linear:
        return linalg.row_space_contains(as_matrix(a), as_matrix(x))
    if ring.is_finite:
        return x.value in _left_multiples(a)
    raise UnsupportedRingError(f"ideal membership is not decidable in {ring}")


def right_ideal_subset(a: RingElement, b: RingElement) -> bool:
    """aR is contained in bR."""
    return right_ideal_member(a, b)


def left_ideal_subset(a: RingElement, b: RingElement) -> bool:
    """Ra is contained in Rb."""
    return left_ideal_member(a, b)


def right_ideal_equal(a: RingElement, b: RingElement) -> bool:
    return right_ideal_subset(a, b) and right_ideal_subset(b, a)


def left_ideal_equal(a: RingElement, b: RingElement) -> bool:
    return left_ideal_subset(a, b) and left_ideal_subset(b, a)


def right_annihilator(a: RingElement) -> frozenset:
    """The set a° = {x : ax = 0} of a finite ring, as raw values."""
    check_enum_size(a.ring)
    mul, v, z = a.ring.mul, a.value, a.ring.raw_zero
    return frozenset(x for x in a.ring.raw_elements() if mul(v, x) == z)


def left_annihilator(a: RingElement) -> frozenset:
    check_enum_size(a.ring)
    mul, v, z = a.ring.mul, a.value, a.ring.raw_zero
    return frozenset(x for x in a.ring.raw_elements() if mul(x, v) == z)


def idempotents(ring: Ring):
    """All idempotents of a finite ring in canonical order."""
    return [e for e in enumerate_elements(ring) if is_idempotent(e)]

