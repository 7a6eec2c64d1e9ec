"""Brute-force ground truth on finite rings and counterexample search.

Nothing here calls the linear-system route: witnesses are found by trying
every element, and ideal membership is decided by trying every middle factor.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from .errors import BCInverseError, EnumerationLimitError
from .laws import ALL, get_law
from .rings import (
    Ring,
    RingElement,
    check_enum_size,
    enumerate_elements,
    idempotents,
    same_ring,
)

MAX_EVALUATIONS = 10**8


@dataclass
class OracleReport:
    query: dict
    witnesses: List[RingElement]
    enumerated_count: int

    @property
    def unique(self) -> bool:
        return len(self.witnesses) == 1

    def to_json(self) -> dict:
        return {
            "query": self.query,
            "witnesses": [w.to_json()["value"] for w in self.witnesses],
            "unique": self.unique,
            "enumerated_count": self.enumerated_count,
        }


def _query(kind, ring, **elems):
    q = {"kind": kind, "ring": ring.to_json()}
    q.update({k: v.to_json()["value"] for k, v in elems.items()})
    return q


def _check(ring, *elems):
    if elems:
        r = same_ring(*elems)
        if r != ring:
            raise BCInverseError(f"elements belong to {r}, not {ring}")
    return check_enum_size(ring)


def brute_bc_inverse(ring: Ring, a, b, c) -> OracleReport:
    """All y with y in bRy, y in yRc, yab = b and cay = c."""
    _check(ring, a, b, c)
    mul = ring.mul
    els = list(ring.raw_elements())
    av, bv, cv = a.value, b.value, c.value
    ab, ca = mul(av, bv), mul(cv, av)
    br = [mul(bv, r) for r in els]
    out = []
    for y in els:
        if mul(y, ab) != bv or mul(ca, y) != cv:
            continue
        if not any(mul(x, y) == y for x in br):
            continue
        if not any(mul(mul(y, r), cv) == y for r in els):
            continue
        out.append(RingElement(ring, y))
    return OracleReport(_query("bc", ring, a=a, b=b, c=c), out, len(els))


def brute_group_inverse(ring: Ring, a) -> OracleReport:
    _check(ring, a)
    mul, av = ring.mul, a.value
    els = list(ring.raw_elements())
    out = [RingElement(ring, y) for y in els
           if mul(mul(av, y), av) == av and mul(mul(y, av), y) == y and mul(av, y) == mul(y, av)]
    return OracleReport(_query("group", ring, a=a), out, len(els))


def brute_inner_inverses(ring: Ring, a) -> OracleReport:
    _check(ring, a)
    mul, av = ring.mul, a.value
    els = list(ring.raw_elements())
    out = [RingElement(ring, y) for y in els if mul(mul(av, y), av) == av]
    return OracleReport(_query("inner", ring, a=a), out, len(els))


def decomposition_check(ring: Ring, a, b, c) -> bool:
    """True iff R = abR (+) c° as a direct sum of additive subgroups."""
    _check(ring, a, b, c)
    mul, add, z = ring.mul, ring.add, ring.raw_zero
    els = list(ring.raw_elements())
    ab = mul(a.value, b.value)
    image = {mul(ab, r) for r in els}
    kernel = {x for x in els if mul(c.value, x) == z}
    # u + v = x has exactly one solution for every x iff the sum map is onto
    # and the two subgroups have trivial intersection.
    if image & kernel != {z}:
        return False
    return len({add(u, v) for u in image for v in kernel}) == len(els)


# ---------------------------------------------------------------------------
# Counterexample search

@dataclass(frozen=True)
class Exhaustive:
    def to_json(self):
        return "exhaustive"


@dataclass(frozen=True)
class Sample:
    count: int
    seed: int

    def to_json(self):
        return f"sample:{self.count}:{self.seed}"


Scope = Union[Exhaustive, Sample]


def parse_scope(text: str) -> Scope:
    if text == "exhaustive":
        return Exhaustive()
    parts = text.split(":")
    if len(parts) == 3 and parts[0] == "sample":
        try:
            count, seed = int(parts[1]), int(parts[2])
        except ValueError:
            pass
        else:
            if count < 0:
                raise ValueError("sample count must be non-negative")
            return Sample(count, seed)
    raise ValueError(f"scope must be 'exhaustive' or 'sample:<count>:<seed>', got {text!r}")


_STAT_KEYS = ("hypotheses", "fired", "law_held", "printed_disagreements")


@dataclass
class SearchOutcome:
    law: str
    ring: Ring
    scope: Scope
    counterexample: Optional[Dict[str, RingElement]]
    tuples_checked: int
    stats: Dict[str, int] = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.counterexample is not None

    def to_json(self) -> dict:
        cx = None
        report = None
        if self.counterexample is not None:
            cx = {k: v.to_json()["value"] for k, v in self.counterexample.items()}
            report = get_law(self.law).evaluate(**self.counterexample).to_json()
        return {
            "law": self.law,
            "ring": self.ring.to_json(),
            "scope": self.scope.to_json(),
            "counterexample": cx,
            "counterexample_report": report,
            "tuples_checked": self.tuples_checked,
            "stats": dict(self.stats),
        }


def _domains(ring, law):
    cache = {}
    out = []
    for _, dom in law.free:
        if dom not in cache:
            cache[dom] = list(enumerate_elements(ring)) if dom == ALL else idempotents(ring)
        out.append(cache[dom])
    return out


def _decode(index, radices):
    digits = []
    for r in reversed(radices):
        index, d = divmod(index, r)
        digits.append(d)
    return digits[::-1]


def _tuple_indices(scope, radices):
    """The list of index tuples for a sample scope (exhaustive scopes decode lazily)."""
    rng = random.Random(scope.seed)
    return [tuple(rng.randrange(r) for r in radices) for _ in range(scope.count)]


def _binding(law, domains, digits):
    return law.expand({name: domains[i][d] for i, ((name, _), d) in enumerate(zip(law.free, digits))})


def sampled_bindings(ring: Ring, law, scope: Scope):
    """Yield the full parameter bindings a search over ``scope`` visits, in order."""
    domains = _domains(ring, law)
    radices = [len(d) for d in domains]
    if isinstance(scope, Sample):
        digit_seq = iter(_tuple_indices(scope, radices))
    else:
        digit_seq = itertools.product(*(range(r) for r in radices))
    for digits in digit_seq:
        yield _binding(law, domains, digits)


def _scan(ring, law_id, scope, start, stop):
    """Evaluate tuples [start, stop); stop at the first violation.

    Returns (violating index or None, stats over the scanned prefix).
    """
    law = get_law(law_id)
    domains = _domains(ring, law)
    radices = [len(d) for d in domains]
    samples = _tuple_indices(scope, radices) if isinstance(scope, Sample) else None
    stats = dict.fromkeys(_STAT_KEYS, 0)
    for i in range(start, stop):
        digits = samples[i] if samples is not None else _decode(i, radices)
        rep = law.evaluate(**_binding(law, domains, digits))
        if rep.hypotheses_hold:
            stats["hypotheses"] += 1
            stats["fired"] += rep.fires
            stats["law_held"] += bool(rep.law_holds)
            stats["printed_disagreements"] += not rep.printed_agrees
        if rep.violation:
            return i, stats
    return None, stats


def search_total(ring: Ring, law_id: str, scope: Scope) -> int:
    law = get_law(law_id)
    check_enum_size(ring)
    if isinstance(scope, Sample):
        total = scope.count
    else:
        total = 1
        for d in _domains(ring, law):
            total *= len(d)
    if total > MAX_EVALUATIONS:
        raise EnumerationLimitError(total, MAX_EVALUATIONS)
    return total


def search_counterexample(ring: Ring, law: str, scope: Scope = Exhaustive(), workers: int = 1) -> SearchOutcome:
    """First violating tuple in canonical (or seeded) order, if any.

    Exhaustive scopes walk the free parameters in mixed-radix order over the
    canonical element list; sample scopes draw from ``random.Random(seed)``.
    With several workers the range is split into contiguous chunks and the
    results merged so the outcome equals the sequential one.
    """
    lawobj = get_law(law)
    total = search_total(ring, law, scope)
    if workers <= 1 or total < 2 * workers:
        hit, stats = _scan(ring, law, scope, 0, total)
    else:
        nchunks = workers * 4
        bounds = [total * k // nchunks for k in range(nchunks + 1)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_scan, ring, law, scope, lo, hi) for lo, hi in zip(bounds, bounds[1:])]
            results = [f.result() for f in futures]
        hit, stats = None, dict.fromkeys(_STAT_KEYS, 0)
        for h, st in results:
            for k in _STAT_KEYS:
                stats[k] += st[k]
            if h is not None:
                hit = h
                break
    if hit is None:
        return SearchOutcome(law, ring, scope, None, total, stats)
    domains = _domains(ring, lawobj)
    radices = [len(d) for d in domains]
    digits = _tuple_indices(scope, radices)[hit] if isinstance(scope, Sample) else _decode(hit, radices)
    bind = _binding(lawobj, domains, digits)
    cx = {k: v for k, v in bind.items() if v is not None}
    return SearchOutcome(law, ring, scope, cx, hit + 1, stats)
