import itertools
import random

import pytest
from hypothesis import given, strategies as st

from bcinverse import (
    MatrixRing,
    NotIdempotentError,
    PrimeField,
    Rationals,
    Reason,
    ZMod,
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
from bcinverse.inverses import verify_bc_axioms
from bcinverse.oracle import brute_bc_inverse, brute_inner_inverses
from bcinverse.rings import (
    enumerate_elements,
    idempotents,
    left_ideal_equal,
    right_annihilator,
    right_ideal_equal,
)

from oracles import zmod_regular

Q = Rationals()
M2Q = MatrixRing(Q, 2)
M2F2 = MatrixRing(PrimeField(2), 2)
M2Z2 = MatrixRing(ZMod(2), 2)
M3F5 = MatrixRing(PrimeField(5), 3)
Z4, Z6 = ZMod(4), ZMod(6)


def E(i, j, ring=M2Q):
    rows = [[0] * ring.dim for _ in range(ring.dim)]
    rows[i - 1][j - 1] = 1
    return ring.element(rows)


SWAP = M2Q.element([[0, 1], [1, 0]])
SMALL_RINGS = [ZMod(n) for n in range(1, 17)] + [M2F2, M2Z2]


def triples(ring):
    els = list(enumerate_elements(ring))
    return itertools.product(els, repeat=3)


# inner and group inverses

def test_inner_inverse_examples():
    assert inner_inverse(Z6.element(2)) == Z6.element(2)
    assert inner_inverse(Z4.element(2)) is None
    assert inner_inverse(Q.element("3/4")) == Q.element("4/3")


@pytest.mark.parametrize("n", range(1, 25))
def test_regularity_in_zmod_matches_gcd_rule(n):
    R = ZMod(n)
    for a in range(n):
        x = inner_inverse(R.element(a))
        assert (x is not None) == zmod_regular(a, n)
        if x is not None:
            assert R.element(a) * x * R.element(a) == R.element(a)
            # canonical choice for enumerated rings: first in order
            assert x == brute_inner_inverses(R, R.element(a)).witnesses[0]


def test_group_inverse_examples():
    assert group_inverse(Z6.element(2)) == Z6.element(2)
    assert group_inverse(Z4.element(2)) is None
    assert group_inverse(Q.element(2)) == Q.element("1/2")


# verify_bc_axioms and the linear route

def test_verify_bc_axioms_examples():
    a = Q.element(5)
    assert verify_bc_axioms(a, Q.one(), Q.one(), Q.element("1/5"))
    two, four = Z6.element(2), Z6.element(4)
    assert verify_bc_axioms(two, four, four, two)
    assert not verify_bc_axioms(two, four, four, Z6.element(5))


def test_bc_inverse_linear_examples():
    a = M2Q.element([[2, 1], [1, 1]])
    assert bc_inverse_linear(a, M2Q.one(), M2Q.one()).value == M2Q.element([[1, -1], [-1, 2]])
    assert bc_inverse_linear(SWAP, E(1, 1), E(2, 2)).value == E(1, 2)
    assert bc_inverse_linear(Z6.element(2), Z6.element(4), Z6.element(4)).value == Z6.element(2)


def test_bc_inverse_nonexistence_reasons():
    two = Z4.element(2)
    res = bc_inverse_linear(two, two, two)
    assert not res.exists and res.reason == Reason.B_NOT_REGULAR
    res = bc_inverse_linear(Z6.element(0), Z6.element(1), Z6.element(0))
    assert res.reason == Reason.LINEAR_SYSTEM_INCONSISTENT
    assert res.to_json() == {"exists": False, "reason": "LinearSystemInconsistent"}


def test_degenerate_zero_parameters():
    for ring in (Z6, M2Q):
        for a in (ring.zero(), ring.one()):
            y = bc_inverse_linear(a, ring.zero(), ring.zero()).value
            assert y == ring.zero()


def test_make_w_examples():
    b = M2Q.element([[1, 2], [2, 4]])
    w = make_w(b, b)
    assert w == b
    assert make_w(E(1, 1), E(2, 2)) == E(1, 2)
    assert make_w(M2Q.one(), E(1, 1)) is None


def test_via_group_examples():
    a = M2Q.element([[2, 1], [1, 1]])
    assert bc_inverse_via_group(a, M2Q.one(), M2Q.one()).value == bc_inverse_linear(a, M2Q.one(), M2Q.one()).value
    assert bc_inverse_via_group(SWAP, E(1, 1), E(2, 2)).value == E(1, 2)
    assert make_w(Z6.element(4), Z6.element(4)) == Z6.element(4)
    assert bc_inverse_via_group(Z6.element(2), Z6.element(4), Z6.element(4)).value == Z6.element(2)
    assert bc_inverse_via_group(M2Q.one(), M2Q.one(), E(1, 1)).reason == Reason.RANK_MISMATCH


def test_mary_examples():
    a = Q.element(3)
    assert mary_inverse(a, Q.one()).value == Q.element("1/3")
    assert mary_inverse(Z6.element(2), Z6.element(4)).value == Z6.element(2)


def test_mary_z4_unit_along_two_does_not_exist():
    # 2 is not regular in Z_4, so nothing is invertible along it.
    one, two = Z4.element(1), Z4.element(2)
    res = mary_inverse(one, two)
    assert not res.exists and res.reason == Reason.B_NOT_REGULAR
    assert brute_bc_inverse(Z4, one, two, two).witnesses == []


# uniqueness and route agreement on every small ring

@pytest.mark.parametrize("ring", SMALL_RINGS, ids=str)
def test_routes_agree_with_oracle(ring):
    for a, b, c in triples(ring):
        witnesses = brute_bc_inverse(ring, a, b, c).witnesses
        assert len(witnesses) <= 1
        lin = bc_inverse_linear(a, b, c)
        assert lin.exists == bool(witnesses)
        if lin.exists:
            assert lin.value == witnesses[0]
        grp = bc_inverse_via_group(a, b, c)
        if grp.exists:
            assert grp.value == lin.value


def test_enumerated_and_linear_routes_agree_on_m2f2():
    # M_2(Z_2) is solved by enumeration, M_2(F_2) by linear algebra.
    for (a, b, c), (a2, b2, c2) in zip(triples(M2Z2), triples(M2F2)):
        assert a.value == a2.value
        u, v = bc_inverse_linear(a, b, c).value, bc_inverse_linear(a2, b2, c2).value
        assert (u is None and v is None) or u.value == v.value


@pytest.mark.parametrize("ring", [ZMod(12), ZMod(8), M2F2], ids=str)
def test_choice_of_inner_inverses_is_irrelevant(ring):
    for a, b, c in triples(ring):
        ref = bc_inverse_linear(a, b, c)
        if ref.reason in (Reason.B_NOT_REGULAR, Reason.C_NOT_REGULAR):
            continue
        b_inners = brute_inner_inverses(ring, b).witnesses
        c_inners = brute_inner_inverses(ring, c).witnesses
        for bm, cm in itertools.islice(itertools.product(b_inners, c_inners), 12):
            assert bc_inverse_linear(a, b, c, bm, cm).value == ref.value


@pytest.mark.parametrize("ring", [ZMod(12), M2F2], ids=str)
def test_characterization_by_outer_inverse_and_ideals(ring):
    for a, b, c in triples(ring):
        y = bc_inverse_linear(a, b, c).value
        if y is None:
            continue
        assert y * a * y == y
        assert right_ideal_equal(y, b)
        assert left_ideal_equal(y, c)


@pytest.mark.parametrize("ring", [ZMod(12), M2F2], ids=str)
def test_group_route_identities(ring):
    for a, b, c in triples(ring):
        y = bc_inverse_linear(a, b, c).value
        if y is None:
            continue
        w = make_w(b, c)
        assert w is not None
        aws, was = group_inverse(a * w), group_inverse(w * a)
        assert aws is not None and was is not None
        assert y == w * aws == was * w
        assert w == y * a * w == w * a * y


@pytest.mark.parametrize("ring", [ZMod(12), M2F2, MatrixRing(PrimeField(3), 2)], ids=str)
def test_commutation_properties(ring):
    els = list(enumerate_elements(ring))
    rng = random.Random(7)
    picks = itertools.product(els, repeat=3) if len(els) ** 3 <= 5000 else (
        tuple(rng.choice(els) for _ in range(3)) for _ in range(5000))
    for a, b, c in picks:
        y = bc_inverse_linear(a, b, c).value
        if y is None:
            continue
        ab, ac, bc = a * b == b * a, a * c == c * a, b * c == c * b
        if ab and ac:
            assert y * a == a * y
        if ab and bc:
            assert y * b == b * y
        if ac and bc:
            assert y * c == c * y


@pytest.mark.parametrize("ring", [ZMod(12), ZMod(8), M2F2], ids=str)
def test_annihilator_equality_matches_left_ideal_equality_for_regulars(ring):
    regular = [x for x in enumerate_elements(ring) if inner_inverse(x) is not None]
    for w in regular:
        for c in regular:
            assert (right_annihilator(w) == right_annihilator(c)) == left_ideal_equal(w, c)


@given(st.data())
def test_m3f5_routes_agree(data):
    els = st.lists(st.lists(st.integers(0, 4), min_size=3, max_size=3), min_size=3, max_size=3)
    a, b, c = (M3F5.element(data.draw(els)) for _ in range(3))
    lin = bc_inverse_linear(a, b, c)
    grp = bc_inverse_via_group(a, b, c)
    if grp.exists:
        assert lin.exists and grp.value == lin.value
    if lin.exists:
        assert verify_bc_axioms(a, b, c, lin.value)
        assert grp.exists


@given(st.data())
def test_m2q_rank_one_parameters(data):
    ent = st.integers(-3, 3)
    u = [data.draw(ent), data.draw(ent)]
    v = [data.draw(ent), data.draw(ent)]
    b = M2Q.element([[u[0] * v[0], u[0] * v[1]], [u[1] * v[0], u[1] * v[1]]])
    a = M2Q.element([[data.draw(ent) for _ in range(2)] for _ in range(2)])
    lin = bc_inverse_linear(a, b, b)
    grp = bc_inverse_via_group(a, b, b)
    assert lin.exists == grp.exists
    if lin.exists:
        assert lin.value == grp.value


# Bott-Duffin, image-kernel and (p,q)-outer inverses

def test_bott_duffin_examples():
    a = M2Q.element([[2, 1], [1, 1]])
    one, zero = M2Q.one(), M2Q.zero()
    assert bott_duffin_ef(a, one, one).value == M2Q.element([[1, -1], [-1, 2]])
    assert bott_duffin_ef(a, zero, zero).value == zero
    assert bott_duffin_ef(one, E(1, 1), E(1, 1)).value == E(1, 1)


def test_image_kernel_examples():
    a = M2Q.element([[2, 1], [1, 1]])
    one, zero = M2Q.one(), M2Q.zero()
    assert image_kernel_inverse(a, one, zero).value == M2Q.element([[1, -1], [-1, 2]])
    assert image_kernel_inverse(one, E(1, 1), E(2, 2)).value == E(1, 1)
    assert image_kernel_inverse(a, zero, one).value == zero


def test_pq_outer_examples():
    a = M2Q.element([[2, 1], [1, 1]])
    res = pq_outer_inverse(a, M2Q.one(), M2Q.zero())
    assert res.value == M2Q.element([[1, -1], [-1, 2]]) and res.reflexive
    res = pq_outer_inverse(E(1, 1), E(1, 1), E(2, 2))
    assert res.value == E(1, 1) and res.reflexive
    res = pq_outer_inverse(Z6.element(2), Z6.element(4), Z6.element(3))
    assert res.value == Z6.element(2) and res.reflexive


def test_idempotent_parameters_are_enforced():
    with pytest.raises(NotIdempotentError):
        pq_outer_inverse(Z6.element(2), Z6.element(2), Z6.element(3))
    with pytest.raises(NotIdempotentError):
        bott_duffin_ef(Z6.element(2), Z6.element(4), Z6.element(5))


@pytest.mark.parametrize("ring", [ZMod(12), ZMod(30), M2F2], ids=str)
def test_idempotent_inverses_match_bruteforce(ring):
    els = list(enumerate_elements(ring))
    ids = idempotents(ring)
    for a in els:
        for e, f in itertools.product(ids, repeat=2):
            bd = [y for y in els if y == e * y == y * f and y * a * e == e and f * a * y == f]
            res = bott_duffin_ef(a, e, f)
            assert [res.value] == bd if res.exists else bd == []
            pq = [y for y in els if y * a * y == y and y * a == e and a * y == 1 - f]
            res = pq_outer_inverse(a, e, f)
            assert [res.value] == pq if res.exists else pq == []
            if res.exists:
                assert res.reflexive == (a * res.value * a == a)


@pytest.mark.parametrize("ring", [ZMod(12), M2F2], ids=str)
def test_bott_duffin_is_the_bc_inverse_of_its_idempotents(ring):
    ids = idempotents(ring)
    for a in enumerate_elements(ring):
        for e, f in itertools.product(ids, repeat=2):
            assert bott_duffin_ef(a, e, f).value == bc_inverse_linear(a, e, f).value
