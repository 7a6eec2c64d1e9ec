"""Executable checkers for reverse-order laws of the (b, c)-inverse.

Each checker evaluates its hypotheses, its condition set and both sides of the
law independently and returns a :class:`LawReport`.  Reports are total:
missing prerequisite inverses give ``hypotheses_hold=False`` instead of an
error, so exhaustive sweeps never abort.

Notation inside checkers: ``ap`` is a^(t,c) (or a^(b,c)), ``wp`` is w^(b,s),
``x`` and ``y`` are the element and its claimed inverse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Tuple

from .errors import NotIdempotentError, UnknownLawError
from .inverses import (
    bc_inverse,
    inner_inverse_cached,
    make_w_cached,
    pq_outer,
)
from .rings import (
    RingElement,
    is_idempotent,
    left_ideal_equal,
    left_ideal_member,
    left_ideal_subset,
    right_ideal_equal,
    right_ideal_member,
    right_ideal_subset,
    same_ring,
)

IFF = "iff"
SUFFICIENT = "sufficient"


@dataclass
class LawReport:
    law: str
    kind: str
    hypotheses_hold: bool
    conditions: Dict[str, bool] = field(default_factory=dict)
    sides: Dict[str, Tuple[Optional[RingElement], Optional[RingElement]]] = field(default_factory=dict)
    # Conditions in the form printed by the source, reported beside the
    # decisive ones where the two differ (thm4/thm5 family).
    printed_conditions: Dict[str, bool] = field(default_factory=dict)

    @property
    def lhs(self):
        return next(iter(self.sides.values()))[0] if self.sides else None

    @property
    def rhs(self):
        return next(iter(self.sides.values()))[1] if self.sides else None

    @property
    def law_holds(self) -> Optional[bool]:
        if not self.hypotheses_hold:
            return None
        return all(l is not None and r is not None and l == r for l, r in self.sides.values())

    @property
    def fires(self) -> bool:
        return self.hypotheses_hold and all(self.conditions.values())

    @property
    def equivalence_ok(self) -> bool:
        if not self.hypotheses_hold:
            return True
        if self.kind == IFF:
            return self.fires == self.law_holds
        return (not self.fires) or self.law_holds

    @property
    def violation(self) -> bool:
        return not self.equivalence_ok

    @property
    def printed_agrees(self) -> bool:
        if not self.hypotheses_hold or not self.printed_conditions:
            return True
        return all(self.printed_conditions.values()) == self.fires

    def to_json(self) -> dict:
        def enc(x):
            return None if x is None else x.to_json()["value"]

        out = {
            "law": self.law,
            "kind": self.kind,
            "hypotheses_hold": self.hypotheses_hold,
            "conditions": dict(self.conditions),
            "lhs": enc(self.lhs),
            "rhs": enc(self.rhs),
            "sides": {k: [enc(l), enc(r)] for k, (l, r) in self.sides.items()},
            "law_holds": self.law_holds,
            "equivalence_ok": self.equivalence_ok,
        }
        if self.printed_conditions:
            out["printed_conditions"] = dict(self.printed_conditions)
            out["printed_agrees"] = self.printed_agrees
        return out


def _missing(law, kind):
    return LawReport(law, kind, False)


def _report(law, kind, conditions, sides, printed=None):
    return LawReport(law, kind, True, conditions, sides, printed or {})


# ---------------------------------------------------------------------------
# (aw)^(b,c) = w^(b,s) a^(t,c)

def thm1_check(a, w, b, c, s, t, *, _law="thm1", _negate=False) -> LawReport:
    same_ring(a, w, b, c, s, t)
    ap, wp = bc_inverse(a, t, c), bc_inverse(w, b, s)
    if ap is None or wp is None:
        return _missing(_law, IFF)
    aw = a * w
    c1 = b == wp * ap * aw * b
    conds = {
        "b=w'a'awb": (not c1) if _negate else c1,
        "c=caww'a'": c == c * aw * wp * ap,
    }
    return _report(_law, IFF, conds, {"(aw)^(b,c)=w'a'": (bc_inverse(aw, b, c), wp * ap)})


def thm1_negated(a, w, b, c, s, t) -> LawReport:
    """Sanity fixture: thm1 with its first condition negated."""
    return thm1_check(a, w, b, c, s, t, _law="thm1-negated", _negate=True)


def cor1_sufficient(a, w, b, c, s, t) -> LawReport:
    same_ring(a, w, b, c, s, t)
    ap, wp = bc_inverse(a, t, c), bc_inverse(w, b, s)
    if ap is None or wp is None:
        return _missing("cor1", SUFFICIENT)
    conds = {"Ra<=Rs": left_ideal_subset(a, s), "wR<=tR": right_ideal_subset(w, t)}
    return _report("cor1", SUFFICIENT, conds, {"(aw)^(b,c)=w'a'": (bc_inverse(a * w, b, c), wp * ap)})


def cor_commute(a, w, b, c, variant: str) -> LawReport:
    law = f"cor-commute-{variant}"
    same_ring(a, w, b, c)
    ap, wp = bc_inverse(a, b, c), bc_inverse(w, b, c)
    if ap is None or wp is None:
        return _missing(law, SUFFICIENT)
    sides = {"(aw)^(b,c)=w'a'": (bc_inverse(a * w, b, c), wp * ap)}
    if variant == "i":
        conds = {"wb=bw": w * b == b * w, "ac=ca": a * c == c * a}
    elif variant == "ii":
        conds = {"ab=ba": a * b == b * a, "ac=ca": a * c == c * a}
        sides["(wa)^(b,c)=a'w'"] = (bc_inverse(w * a, b, c), ap * wp)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return _report(law, SUFFICIENT, conds, sides)


def mary_rol(a, w, d) -> LawReport:
    same_ring(a, w, d)
    ap, wp = bc_inverse(a, d, d), bc_inverse(w, d, d)
    if ap is None or wp is None:
        return _missing("mary-rol", SUFFICIENT)
    conds = {"ad=da": a * d == d * a}
    sides = {
        "(aw)^|d=w'a'": (bc_inverse(a * w, d, d), wp * ap),
        "(wa)^|d=a'w'": (bc_inverse(w * a, d, d), ap * wp),
    }
    return _report("mary-rol", SUFFICIENT, conds, sides)


# ---------------------------------------------------------------------------
# (aw)^(b,c) = (a^(t,c) a w)^(b,s) a^(t,c)

def thm2_check(a, w, b, c, s, t) -> LawReport:
    same_ring(a, w, b, c, s, t)
    ap = bc_inverse(a, t, c)
    if ap is None:
        return _missing("thm2", IFF)
    z = bc_inverse(ap * a * w, b, s)
    if z is None:
        return _missing("thm2", IFF)
    aw = a * w
    conds = {"c=caw(a'aw)^(b,s)a'": c == c * aw * z * ap}
    return _report("thm2", IFF, conds, {"(aw)^(b,c)=(a'aw)^(b,s)a'": (bc_inverse(aw, b, c), z * ap)})


def thm2_cors(a, w, b, c, s, t, variant: str) -> LawReport:
    law = f"thm2-cor-{variant}"
    same_ring(a, w, b, c, s, t)
    ap = bc_inverse(a, t, c)
    z = None if ap is None else bc_inverse(ap * a * w, b, s)
    if z is None:
        return _missing(law, SUFFICIENT)
    aw_inv = bc_inverse(a * w, b, c)
    if variant == "i":
        conds = {"Ra<=Rs": left_ideal_subset(a, s)}
    elif variant == "ii":
        conds = {
            "aw in R^(b,c)": aw_inv is not None,
            "(a'aw)^(b,s)=(aw)^(b,c)a": aw_inv is not None and z == aw_inv * a,
        }
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return _report(law, SUFFICIENT, conds, {"(aw)^(b,c)=(a'aw)^(b,s)a'": (aw_inv, z * ap)})


# ---------------------------------------------------------------------------
# (aw)^(b,c) = w^(b,s) (a w w^(b,s))^(t,c)

def thm3_check(a, w, b, c, s, t) -> LawReport:
    same_ring(a, w, b, c, s, t)
    wp = bc_inverse(w, b, s)
    if wp is None:
        return _missing("thm3", IFF)
    aw = a * w
    z = bc_inverse(aw * wp, t, c)
    if z is None:
        return _missing("thm3", IFF)
    conds = {"b=w'(aww')^(t,c)awb": b == wp * z * aw * b}
    return _report("thm3", IFF, conds, {"(aw)^(b,c)=w'(aww')^(t,c)": (bc_inverse(aw, b, c), wp * z)})


def thm3_cors(a, w, b, c, s, t, variant: str) -> LawReport:
    law = f"thm3-cor-{variant}"
    same_ring(a, w, b, c, s, t)
    wp = bc_inverse(w, b, s)
    aw = a * w
    z = None if wp is None else bc_inverse(aw * wp, t, c)
    if z is None:
        return _missing(law, SUFFICIENT)
    aw_inv = bc_inverse(aw, b, c)
    if variant == "i":
        conds = {"wR<=tR": right_ideal_subset(w, t)}
    elif variant == "ii":
        conds = {
            "aw in R^(b,c)": aw_inv is not None,
            "(aww')^(t,c)=w(aw)^(b,c)": aw_inv is not None and z == w * aw_inv,
        }
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return _report(law, SUFFICIENT, conds, {"(aw)^(b,c)=w'(aww')^(t,c)": (aw_inv, wp * z)})


def bc_equal_case_cors(a, w, b, c, variant: str, *, _law=None) -> LawReport:
    """The s = c, t = b specializations of the previous two laws."""
    law = _law or f"bc-equal-{variant}"
    same_ring(a, w, b, c)
    aw = a * w
    if variant == "i":
        ap = bc_inverse(a, b, c)
        z = None if ap is None else bc_inverse(ap * a * w, b, c)
        if z is None:
            return _missing(law, SUFFICIENT)
        conds = {"ac=ca": a * c == c * a}
        sides = {"(aw)^(b,c)=(a'aw)^(b,c)a'": (bc_inverse(aw, b, c), z * ap)}
    elif variant == "ii":
        wp = bc_inverse(w, b, c)
        z = None if wp is None else bc_inverse(aw * wp, b, c)
        if z is None:
            return _missing(law, SUFFICIENT)
        conds = {"wb=bw": w * b == b * w}
        sides = {"(aw)^(b,c)=w'(aww')^(b,c)": (bc_inverse(aw, b, c), wp * z)}
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return _report(law, SUFFICIENT, conds, sides)


def mary_equal_cors(a, w, d, variant: str) -> LawReport:
    return bc_equal_case_cors(a, w, d, d, variant, _law=f"mary-equal-{variant}")


# ---------------------------------------------------------------------------
# (a^(t,c) a w)^(b,u) = w^(b,s) a^(t,c) a   and   (a w w^(b,s))^(v,c) = w w^(b,s) a^(t,c)
#
# The decisive conditions come from the linear characterization applied to
# x = a'aw with the pair (b, u): u regular, y in Ru, b = yxb and u = uxy.  The
# printed forms y(1 - uu^-) = 0 and c = cxy are reported alongside.

def _one_minus_zero_right(y, u):
    um = inner_inverse_cached(u)
    return um is not None and (y - y * u * um).is_zero()


def _one_minus_zero_left(y, v):
    vm = inner_inverse_cached(v)
    return vm is not None and (y - v * vm * y).is_zero()


def thm4_check(a, w, b, c, s, t, u) -> LawReport:
    same_ring(a, w, b, c, s, t, u)
    ap, wp = bc_inverse(a, t, c), bc_inverse(w, b, s)
    if ap is None or wp is None:
        return _missing("thm4", IFF)
    x, y = ap * a * w, wp * ap * a
    u_reg = inner_inverse_cached(u) is not None
    conds = {
        "u regular": u_reg,
        "w'a'a in Ru": left_ideal_member(y, u),
        "b=w'a'awb": b == y * x * b,
        "u=ua'aww'a'a": u == u * x * y,
    }
    printed = {
        "u regular": u_reg,
        "w'a'a(1-uu^-)=0": _one_minus_zero_right(y, u),
        "w'a'a in Ru": conds["w'a'a in Ru"],
        "b=w'a'awb": conds["b=w'a'awb"],
        "c=ca'aww'a'a": c == c * x * y,
    }
    return _report("thm4", IFF, conds, {"(a'aw)^(b,u)=w'a'a": (bc_inverse(x, b, u), y)}, printed)


def thm5_check(a, w, b, c, s, t, v) -> LawReport:
    same_ring(a, w, b, c, s, t, v)
    ap, wp = bc_inverse(a, t, c), bc_inverse(w, b, s)
    if ap is None or wp is None:
        return _missing("thm5", IFF)
    x, y = a * w * wp, w * wp * ap
    v_reg = inner_inverse_cached(v) is not None
    conds = {
        "v regular": v_reg,
        "ww'a' in vR": right_ideal_member(y, v),
        "v=ww'a'aww'v": v == y * x * v,
        "c=caww'a'": c == c * x * y,
    }
    printed = {
        "v regular": v_reg,
        "(1-vv^-)ww'a'=0": _one_minus_zero_left(y, v),
        "ww'a' in vR": conds["ww'a' in vR"],
        "b=ww'a'aww'b": b == y * x * b,
        "c=caww'a'": conds["c=caww'a'"],
    }
    return _report("thm5", IFF, conds, {"(aww')^(v,c)=ww'a'": (bc_inverse(x, v, c), y)}, printed)


def cor4_composite(a, w, b, c, s, t, u) -> LawReport:
    same_ring(a, w, b, c, s, t, u)
    ap, wp = bc_inverse(a, t, c), bc_inverse(w, b, s)
    if ap is None or wp is None:
        return _missing("cor4", SUFFICIENT)
    aw_inv = bc_inverse(a * w, b, c)
    x = ap * a * w
    z = bc_inverse(x, b, u)
    if aw_inv is None or z is None:
        return _missing("cor4", SUFFICIENT)
    conds = {
        "(aw)^(b,c)=(a'aw)^(b,u)a'": aw_inv == z * ap,
        "(a'aw)^(b,u)=w'a'a": z == wp * ap * a,
    }
    return _report("cor4", SUFFICIENT, conds, {"(aw)^(b,c)=w'a'": (aw_inv, wp * ap)})


def cor5_composite(a, w, b, c, s, t, v) -> LawReport:
    """Counterpart of cor4 on the (aww')^(v,c) side.

    The first condition uses the same pair (v, c) as the second; the variant
    with (t, c) in the first condition is reported as a printed condition.
    """
    same_ring(a, w, b, c, s, t, v)
    ap, wp = bc_inverse(a, t, c), bc_inverse(w, b, s)
    if ap is None or wp is None:
        return _missing("cor5", SUFFICIENT)
    aw_inv = bc_inverse(a * w, b, c)
    x = a * w * wp
    z = bc_inverse(x, v, c)
    if aw_inv is None or z is None:
        return _missing("cor5", SUFFICIENT)
    y = w * wp * ap
    conds = {
        "(aw)^(b,c)=w'(aww')^(v,c)": aw_inv == wp * z,
        "(aww')^(v,c)=ww'a'": z == y,
    }
    zt = bc_inverse(x, t, c)
    printed = {
        "(aw)^(b,c)=w'(aww')^(t,c)": zt is not None and aw_inv == wp * zt,
        "(aww')^(v,c)=ww'a'": conds["(aww')^(v,c)=ww'a'"],
    }
    return _report("cor5", SUFFICIENT, conds, {"(aw)^(b,c)=w'a'": (aw_inv, wp * ap)}, printed)


def thm4_commute(a, w, b, c, u) -> LawReport:
    """thm4 with s = c, t = b under the standing hypothesis wb = bw."""
    same_ring(a, w, b, c, u)
    ap, wp = bc_inverse(a, b, c), bc_inverse(w, b, c)
    if ap is None or wp is None or w * b != b * w:
        return _missing("thm4-commute", IFF)
    x, y = ap * a * w, wp * ap * a
    u_reg = inner_inverse_cached(u) is not None
    conds = {
        "u regular": u_reg,
        "w'a'a in Ru": left_ideal_member(y, u),
        "u=ua'aww'a'a": u == u * x * y,
    }
    printed = {
        "u regular": u_reg,
        "w'a'a(1-uu^-)=0": _one_minus_zero_right(y, u),
        "c=ca'a": c == c * ap * a,
    }
    return _report("thm4-commute", IFF, conds, {"(a'aw)^(b,u)=w'a'a": (bc_inverse(x, b, u), y)}, printed)


def thm5_commute(a, w, b, c, v) -> LawReport:
    """thm5 with s = c, t = b under the standing hypothesis ca = ac."""
    same_ring(a, w, b, c, v)
    ap, wp = bc_inverse(a, b, c), bc_inverse(w, b, c)
    if ap is None or wp is None or c * a != a * c:
        return _missing("thm5-commute", IFF)
    x, y = a * w * wp, w * wp * ap
    v_reg = inner_inverse_cached(v) is not None
    conds = {
        "v regular": v_reg,
        "ww'a' in vR": right_ideal_member(y, v),
        "v=ww'a'aww'v": v == y * x * v,
    }
    printed = {
        "v regular": v_reg,
        "(1-vv^-)ww'a'=0": _one_minus_zero_left(y, v),
        "b=ww'b": b == w * wp * b,
    }
    return _report("thm5-commute", IFF, conds, {"(aww')^(v,c)=ww'a'": (bc_inverse(x, v, c), y)}, printed)


# ---------------------------------------------------------------------------
# (aw)^(b,c) = w^(b,c) (a^(t,c) a w w^(b,c))^(b,c) a^(t,c)

def mixed_thm_check(a, w, b, c, t) -> LawReport:
    same_ring(a, w, b, c, t)
    ap, wp = bc_inverse(a, t, c), bc_inverse(w, b, c)
    if ap is None or wp is None:
        return _missing("mixed", IFF)
    z = bc_inverse(ap * a * w * wp, b, c)
    if z is None:
        return _missing("mixed", IFF)
    p1 = bc_inverse(ap * a * w, b, c)
    p2 = bc_inverse(a * w * wp, t, c)
    conds = {
        "a'aw in R^(b,c)": p1 is not None,
        "aww' in R^(t,c)": p2 is not None,
        "(a'aw)^(b,c)=w'z": p1 is not None and p1 == wp * z,
        "(aww')^(t,c)=za'": p2 is not None and p2 == z * ap,
    }
    return _report("mixed", IFF, conds, {"(aw)^(b,c)=w'za'": (bc_inverse(a * w, b, c), wp * z * ap)})


# ---------------------------------------------------------------------------
# (a1 a2)^(b3,c3) = a2^(b2,c2) a1^(b1,c1)

def main_thm_triple(a1, a2, b1, c1, b2, c2, b3=None, c3=None, a1p=None, a2p=None, *, _law="main") -> LawReport:
    same_ring(a1, a2, b1, c1, b2, c2)
    x1, x2 = bc_inverse(a1, b1, c1), bc_inverse(a2, b2, c2)
    if a1p is None:
        a1p = make_w_cached(b1, c1)
    if a2p is None:
        a2p = make_w_cached(b2, c2)
    if x1 is None or x2 is None or a1p is None or a2p is None:
        return _missing(_law, SUFFICIENT)
    prod = a2p * a1p
    if b3 is None:
        b3 = prod
    if c3 is None:
        c3 = prod
    same_ring(a1, b3, c3, a1p, a2p)
    g1, g2 = x1 * a1, a2 * a2p
    h1, h2 = a2 * x2, a1p * a1
    conds = {
        "a1'R=b1R": right_ideal_equal(a1p, b1),
        "Ra1'=Rc1": left_ideal_equal(a1p, c1),
        "a2'R=b2R": right_ideal_equal(a2p, b2),
        "Ra2'=Rc2": left_ideal_equal(a2p, c2),
        "a2'a1'R=b3R": right_ideal_equal(prod, b3),
        "Ra2'a1'=Rc3": left_ideal_equal(prod, c3),
        "a1^a1 commutes with a2a2'": g1 * g2 == g2 * g1,
        "a2a2^ commutes with a1'a1": h1 * h2 == h2 * h1,
    }
    sides = {"(a1a2)^(b3,c3)=a2^a1^": (bc_inverse(a1 * a2, b3, c3), x2 * x1)}
    return _report(_law, SUFFICIENT, conds, sides)


def main_mary(a1, a2, d1, d2, d3) -> LawReport:
    same_ring(a1, a2, d1, d2, d3)
    return main_thm_triple(a1, a2, d1, d1, d2, d2, d3, d3, d1, d2, _law="main-mary")


# ---------------------------------------------------------------------------
# Commutation properties of a^(b,c)

def commute_lemma(a, b, c, variant: str) -> LawReport:
    law = f"commute-{variant}"
    same_ring(a, b, c)
    y = bc_inverse(a, b, c)
    if y is None:
        return _missing(law, SUFFICIENT)
    ab, ac, cb = a * b == b * a, a * c == c * a, c * b == b * c
    if variant == "i":
        conds, target = {"ab=ba": ab, "ca=ac": ac}, a
    elif variant == "ii":
        conds, target = {"ab=ba": ab, "cb=bc": cb}, b
    elif variant == "iii":
        conds, target = {"ac=ca": ac, "cb=bc": cb}, c
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return _report(law, SUFFICIENT, conds, {"y commutes": (y * target, target * y)})


# ---------------------------------------------------------------------------
# (p, q)-outer inverses

PQ_PROPS = ("P1i", "P1ii", "P1iii", "P2i", "P2ii", "P2iii", "P3i", "P3ii", "P3iii", "Pfinal")

PQ_PARAMS = {
    "P1i": ("a", "b", "p", "q", "s"),
    "P1ii": ("a", "b", "p", "q", "s"),
    "P1iii": ("a", "b", "p", "q", "s"),
    "P2i": ("a", "b", "p", "q", "t"),
    "P2ii": ("a", "b", "s", "t", "r"),
    "P2iii": ("a", "b", "p", "q", "s", "t"),
    "P3i": ("a", "b", "p", "q", "t"),
    "P3ii": ("a", "b", "s", "t", "r"),
    "P3iii": ("a", "b", "p", "q", "s", "t"),
    "Pfinal": ("a", "w", "e", "f", "p", "q", "k", "l"),
}

_PQ_ELEMENTS = {"a", "b", "w"}


def _reflexive_outer(a, p, q):
    y = pq_outer(a, p, q)
    return y if y is not None and a * y * a == a else None


def _pq_instance(prop, a, b, p=None, q=None, s=None, t=None, r=None):
    """Return (x, first, second, claimed) or None when a prerequisite is missing."""
    if prop.startswith("P1"):
        ap, bp = pq_outer(a, p, q), pq_outer(b, s, 1 - p)
        if ap is None or bp is None:
            return None
        if prop == "P1i":
            return a * b, s, q, bp * ap
        if prop == "P1ii":
            return ap * a * b, s, 1 - p, bp * ap * a
        return a * b * bp, p, q, b * bp * ap
    if prop == "P2i":
        ap, abp = pq_outer(a, p, q), pq_outer(a * b, t, q)
        if ap is None or abp is None:
            return None
        return ap * a * b, t, 1 - p, abp * a
    if prop == "P2ii":
        bp, abp = pq_outer(b, s, t), pq_outer(a * b, s, r)
        if bp is None or abp is None:
            return None
        return a * b * bp, 1 - t, r, b * abp
    if prop == "P2iii":
        ap, bp, abp = pq_outer(a, p, q), pq_outer(b, s, t), pq_outer(a * b, s, q)
        if ap is None or bp is None or abp is None:
            return None
        return ap * a * b * bp, 1 - t, 1 - p, b * abp * a
    if prop == "P3i":
        ap = _reflexive_outer(a, p, q)
        z = None if ap is None else pq_outer(ap * a * b, t, 1 - p)
        if z is None:
            return None
        return a * b, t, q, z * ap
    if prop == "P3ii":
        bp = _reflexive_outer(b, s, t)
        z = None if bp is None else pq_outer(a * b * bp, 1 - t, r)
        if z is None:
            return None
        return a * b, s, r, bp * z
    if prop == "P3iii":
        ap, bp = _reflexive_outer(a, p, q), _reflexive_outer(b, s, t)
        z = None if ap is None or bp is None else pq_outer(ap * a * b * bp, 1 - t, 1 - p)
        if z is None:
            return None
        return a * b, s, q, bp * z * ap
    raise ValueError(f"unknown proposition {prop!r}")


def pq_prop_check(prop: str, **kw) -> LawReport:
    """Verify one (p, q)-outer reverse-order proposition on an instance.

    Idempotent parameters are validated; a non-idempotent one raises
    :class:`NotIdempotentError`.
    """
    if prop not in PQ_PARAMS:
        raise ValueError(f"unknown proposition {prop!r}")
    names = PQ_PARAMS[prop]
    missing = [n for n in names if kw.get(n) is None]
    if missing:
        raise TypeError(f"{prop} needs parameters {missing}")
    same_ring(*(kw[n] for n in names))
    for n in names:
        if n not in _PQ_ELEMENTS and not is_idempotent(kw[n]):
            raise NotIdempotentError(f"{n} = {kw[n]} is not idempotent")
    law = f"pq-{prop}"
    if prop == "Pfinal":
        return _pq_final(law, **{n: kw[n] for n in names})
    inst = _pq_instance(prop, **{n: kw[n] for n in names})
    if inst is None:
        return _missing(law, SUFFICIENT)
    x, first, second, y = inst
    sides = {
        "outer inverse": (pq_outer(x, first, second), y),
        "yxy=y": (y * x * y, y),
        "yx=first": (y * x, first),
        "xy=1-second": (x * y, 1 - second),
    }
    return _report(law, SUFFICIENT, {}, sides)


def _pq_final(law, a, w, e, f, p, q, k, l):
    ap, wp = pq_outer(a, p, q), pq_outer(w, e, f)
    if ap is None or wp is None:
        return _missing(law, IFF)
    g, h = ap * a, w * wp
    if g * h != h * g:
        return _missing(law, IFF)
    conds = {"w'pw=k": wp * p * w == k, "a(1-f)a'=1-l": a * (1 - f) * ap == 1 - l}
    return _report(law, IFF, conds, {"(aw)_(k,l)=w'a'": (pq_outer(a * w, k, l), wp * ap)})


# ---------------------------------------------------------------------------
# Registry

ALL = "all"
IDEMPOTENT = "idempotent"


@dataclass(frozen=True)
class Law:
    id: str
    params: Tuple[str, ...]
    kind: str
    check: Callable[..., LawReport]
    # Variables enumerated by sweeps, with their domain; ``tie`` expands a
    # binding of these into the full parameter set.
    free: Tuple[Tuple[str, str], ...]
    tie: Optional[Callable[[dict], dict]] = None
    optional: Tuple[str, ...] = ()
    summary: str = ""

    def evaluate(self, **kw) -> LawReport:
        return self.check(**kw)

    def expand(self, binding: dict) -> dict:
        return self.tie(dict(binding)) if self.tie else dict(binding)


def _free(*names, domain=ALL):
    return tuple((n, domain) for n in names)


def _tie_bcst(bind):
    bind["c"] = bind["s"] = bind["t"] = bind["b"]
    return bind


def _tie_main(bind):
    a1p = make_w_cached(bind["b1"], bind["c1"])
    a2p = make_w_cached(bind["b2"], bind["c2"])
    bind["a1p"], bind["a2p"] = a1p, a2p
    if a1p is not None and a2p is not None:
        bind["b3"] = bind["c3"] = a2p * a1p
    return bind


def _pq_law(prop):
    names = PQ_PARAMS[prop]
    free = tuple((n, ALL if n in _PQ_ELEMENTS else IDEMPOTENT) for n in names)
    kind = IFF if prop == "Pfinal" else SUFFICIENT
    return Law(f"pq-{prop}", names, kind, lambda **kw: pq_prop_check(prop, **kw), free,
               summary=f"(p,q)-outer proposition {prop}")


_SIX = ("a", "w", "b", "c", "s", "t")

LAWS: Dict[str, Law] = {}


def _register(law: Law):
    LAWS[law.id] = law


_register(Law("thm1", _SIX, IFF, thm1_check, _free(*_SIX),
              summary="(aw)^(b,c) = w^(b,s) a^(t,c)"))
_register(Law("thm1-negated", _SIX, IFF, thm1_negated, _free(*_SIX),
              summary="sanity fixture: thm1 with a negated condition"))
_register(Law("cor1", _SIX, SUFFICIENT, cor1_sufficient, _free(*_SIX),
              summary="Ra in Rs and wR in tR imply thm1's law"))
for _v in ("i", "ii"):
    _register(Law(f"cor-commute-{_v}", ("a", "w", "b", "c"), SUFFICIENT,
                  (lambda v: lambda **kw: cor_commute(variant=v, **kw))(_v), _free("a", "w", "b", "c"),
                  summary="commutation conditions imply (aw)^(b,c) = w^(b,c) a^(b,c)"))
_register(Law("mary-rol", ("a", "w", "d"), SUFFICIENT, mary_rol, _free("a", "w", "d"),
              summary="ad = da implies reverse order for the inverse along d"))
_register(Law("thm2", _SIX, IFF, thm2_check, _free(*_SIX),
              summary="(aw)^(b,c) = (a^(t,c) a w)^(b,s) a^(t,c)"))
_register(Law("thm3", _SIX, IFF, thm3_check, _free(*_SIX),
              summary="(aw)^(b,c) = w^(b,s) (a w w^(b,s))^(t,c)"))
for _v in ("i", "ii"):
    _register(Law(f"thm2-cor-{_v}", _SIX, SUFFICIENT,
                  (lambda v: lambda **kw: thm2_cors(variant=v, **kw))(_v), _free(*_SIX)))
    _register(Law(f"thm3-cor-{_v}", _SIX, SUFFICIENT,
                  (lambda v: lambda **kw: thm3_cors(variant=v, **kw))(_v), _free(*_SIX)))
    _register(Law(f"bc-equal-{_v}", ("a", "w", "b", "c"), SUFFICIENT,
                  (lambda v: lambda **kw: bc_equal_case_cors(variant=v, **kw))(_v), _free("a", "w", "b", "c")))
    _register(Law(f"mary-equal-{_v}", ("a", "w", "d"), SUFFICIENT,
                  (lambda v: lambda **kw: mary_equal_cors(variant=v, **kw))(_v), _free("a", "w", "d")))
_register(Law("thm4", _SIX + ("u",), IFF, thm4_check, _free("a", "w", "b", "u"), _tie_bcst,
              summary="(a^(t,c) a w)^(b,u) = w^(b,s) a^(t,c) a"))
_register(Law("thm5", _SIX + ("v",), IFF, thm5_check, _free("a", "w", "b", "v"), _tie_bcst,
              summary="(a w w^(b,s))^(v,c) = w w^(b,s) a^(t,c)"))
_register(Law("cor4", _SIX + ("u",), SUFFICIENT, cor4_composite, _free("a", "w", "b", "u"), _tie_bcst))
_register(Law("cor5", _SIX + ("v",), SUFFICIENT, cor5_composite, _free("a", "w", "b", "v"), _tie_bcst))
_register(Law("thm4-commute", ("a", "w", "b", "c", "u"), IFF, thm4_commute, _free("a", "w", "b", "c", "u")))
_register(Law("thm5-commute", ("a", "w", "b", "c", "v"), IFF, thm5_commute, _free("a", "w", "b", "c", "v")))
_register(Law("mixed", ("a", "w", "b", "c", "t"), IFF, mixed_thm_check, _free("a", "w", "b", "c", "t"),
              summary="(aw)^(b,c) = w^(b,c) (a^(t,c) a w w^(b,c))^(b,c) a^(t,c)"))
_register(Law("main", ("a1", "a2", "b1", "c1", "b2", "c2", "b3", "c3", "a1p", "a2p"), SUFFICIENT,
              main_thm_triple, _free("a1", "a2", "b1", "c1", "b2", "c2"), _tie_main,
              optional=("b3", "c3", "a1p", "a2p"),
              summary="(a1 a2)^(b3,c3) = a2^(b2,c2) a1^(b1,c1)"))
_register(Law("main-mary", ("a1", "a2", "d1", "d2", "d3"), SUFFICIENT, main_mary,
              _free("a1", "a2", "d1", "d2", "d3")))
for _v in ("i", "ii", "iii"):
    _register(Law(f"commute-{_v}", ("a", "b", "c"), SUFFICIENT,
                  (lambda v: lambda **kw: commute_lemma(variant=v, **kw))(_v), _free("a", "b", "c")))
for _p in PQ_PROPS:
    _register(_pq_law(_p))


def get_law(law_id: str) -> Law:
    try:
        return LAWS[law_id]
    except KeyError:
        raise UnknownLawError(law_id) from None


def check_law(law_id: str, **bindings) -> LawReport:
    law = get_law(law_id)
    missing = [p for p in law.params if p not in bindings and p not in law.optional]
    extra = [k for k in bindings if k not in law.params]
    if missing or extra:
        raise TypeError(f"law {law_id} expects {list(law.params)}; missing {missing}, unexpected {extra}")
    return law.evaluate(**bindings)
