import itertools
from fractions import Fraction

import pytest

import oracles
from twisted_zhu.exact import vsub
from twisted_zhu.voa import Heisenberg, Virasoro, order_key
from twisted_zhu.zhu import (LevelIndex, build_algebra, check_antiisomorphism, check_associativity,
                             check_associativity_vectors, check_center, check_commutators, check_identity,
                             check_odd_vanishing, check_surjection, check_two_sided_ideal, circle_exponent,
                             circle_pole, circle_product, commutator_formula_check, contraction_pole,
                             default_headroom, delta, o_basis_from, o_spanning_set, residue, star, star_product,
                             translation_relation)

F = Fraction
ONE = {(): F(1)}
A = {(1,): F(1)}

H1, H2, VIR = Heisenberg(1), Heisenberg(2), Virasoro("1/2")


def test_level_index():
    n = LevelIndex.parse("1+1/2", 2)
    assert (n.l, n.i, n.value, str(n)) == (1, 1, F(3, 2), "1+1/2")
    assert LevelIndex.parse("3/2", 2) == n
    assert LevelIndex.parse("1/2", 2).decrement() == LevelIndex(0, 0, 2)
    for bad in ["2/3+1", "1/3", "-1", "x", "1+1/0"]:
        with pytest.raises(ValueError):
            LevelIndex.parse(bad, 2)
    with pytest.raises(ValueError):
        LevelIndex(0, 0, 2).decrement()


def test_delta_examples():
    assert delta(0, 0, 1) == 1
    assert delta(0, 1, 2) == 0
    assert delta(1, 2, 2) == 1
    with pytest.raises(ValueError):
        delta(0, 3, 2)


@pytest.mark.parametrize("T", [1, 2, 3, 4])
def test_delta_table(T):
    for i in range(T):
        for r in range(T + 1):
            assert delta(i, r, T) == (1 if (i >= r or r == T) else 0)
        # fixed points always get both deltas, so the pole is 2l+2
        assert contraction_pole(0, LevelIndex(1, i, T)) == 4
        assert circle_pole(0, LevelIndex(1, i, T)) == 4


def test_circle_examples():
    for n in [LevelIndex(0, 0, 2), LevelIndex(0, 1, 2), LevelIndex(2, 1, 2)]:
        for v in H2.basis_up_to(4):
            assert circle_product(H2, ONE, {v: F(1)}, n) == {}
    n0 = LevelIndex(0, 0, 2)
    assert circle_exponent(1, 1, n0) == F(1, 2) and circle_pole(1, n0) == 1
    assert circle_product(H2, A, A, n0) == {(1, 1): F(1), (): F(-1, 8)}
    with pytest.raises(ValueError):
        circle_product(H2, {(): F(1), (1,): F(1)}, A, n0)


def _pairs(V, W):
    basis = V.basis_up_to(W)
    return [(u, v) for u, v in itertools.product(basis, repeat=2) if V.weight(u) + V.weight(v) <= W]


@pytest.mark.parametrize("V", [H1, VIR], ids=["heisenberg", "virasoro"])
@pytest.mark.parametrize("l", [0, 1, 2])
def test_untwisted_products_match_oracle(V, l):
    n = LevelIndex(l, 0, 1)
    for u, v in _pairs(V, 6):
        uv, vv = {u: F(1)}, {v: F(1)}
        assert circle_product(V, uv, vv, n) == oracles.untwisted_circle(V, u, vv, l)
        assert star_product(V, uv, vv, n) == oracles.untwisted_star(V, u, vv, l)


@pytest.mark.parametrize("V", [H1, H2, VIR], ids=["heisenberg", "twisted", "virasoro"])
def test_level_zero_products_match_oracle(V):
    n = LevelIndex(0, 0, V.T)
    for u, v in _pairs(V, 6):
        uv, vv = {u: F(1)}, {v: F(1)}
        assert circle_product(V, uv, vv, n) == oracles.twisted_level0_circle(V, u, vv)
        assert star_product(V, uv, vv, n) == oracles.twisted_level0_star(V, u, vv)


def test_star_examples():
    for n in [LevelIndex(0, 0, 2), LevelIndex(1, 1, 2), LevelIndex(2, 0, 2)]:
        for v in H2.basis_up_to(4):
            assert star_product(H2, ONE, {v: F(1)}, n) == {v: F(1)}
            assert star_product(H2, A, {v: F(1)}, n) == {}
    assert star_product(H1, A, A, LevelIndex(0, 0, 1)) == {(1, 1): F(1)}


def test_uncorrected_pole_puts_vacuum_in_relations():
    # with pole 2l + delta_i(r) + delta_i(T-r) for r = 1 the level zero
    # relation a o a contains the vacuum with no higher terms to cancel it
    n0 = LevelIndex(0, 0, 2)
    rel = residue(H2, (1,), A, circle_exponent(1, 1, n0), contraction_pole(1, n0))
    assert rel == {(): F(1, 2)}
    assert circle_product(H2, A, A, n0) != rel


def test_spanning_set_examples():
    n0 = LevelIndex(0, 0, 1)
    span = o_basis_from(o_spanning_set(H1, n0, 0))
    assert span.reduce(ONE) == ONE
    assert o_basis_from(o_spanning_set(H1, n0, 3)).reduce(ONE) == ONE
    for n in [LevelIndex(0, 0, 2), LevelIndex(0, 1, 2), LevelIndex(1, 0, 2)]:
        B = o_basis_from(o_spanning_set(H2, n, 4 + default_headroom(n)))
        assert B.reduce(A) == {}
    # depth 0 gives the translation relations and plain circle products
    W = 4
    gens = o_spanning_set(H1, n0, W, depth=0)
    expect = [translation_relation(H1, u) for u in H1.basis_up_to(W) if H1.weight(u) + 1 <= W]
    for u, v in itertools.product(H1.basis_up_to(W), repeat=2):
        if H1.weight(u) + H1.weight(v) + 1 <= W:
            expect.append(circle_product(H1, {u: F(1)}, {v: F(1)}, n0))
    assert gens == [x for x in expect if x]
    with pytest.raises(ValueError):
        o_spanning_set(H1, n0, 2, depth=-1)


@pytest.mark.parametrize("V,n", [(H1, LevelIndex(0, 0, 1)), (H2, LevelIndex(0, 1, 2)),
                                 (VIR, LevelIndex(1, 0, 1)), (H2, LevelIndex(1, 0, 2))])
def test_deep_family_lies_in_plain_span(V, n):
    plain = o_basis_from(o_spanning_set(V, n, 6, depth=0))
    for x in o_spanning_set(V, n, 6, depth=2):
        assert plain.reduce(x) == {}


def test_build_examples():
    P = build_algebra(VIR, LevelIndex(0, 0, 1), 6)
    assert P.dims_per_weight() == [1, 0, 1, 0, 1, 0, 1]
    assert P.quotient_basis == [(), (2,), (2, 2), (2, 2, 2)]
    P = build_algebra(H1, LevelIndex(0, 0, 1), 4)
    assert P.reduce({(2,): F(1)}) == {(1,): F(-1)}
    assert P.dims_per_weight() == [1, 1, 1, 1, 1]
    P = build_algebra(H2, LevelIndex(0, 0, 2), 4)
    for v in H2.eigenspace_basis(1, 4):
        assert P.reduce({v: F(1)}) == {}
    assert P.quotient_basis == [()]


def test_twisted_quotients():
    bases = {"0": [()], "1/2": [(), (1, 1)], "1": [(), (1, 1), (1, 1, 1, 1)]}
    for text, basis in bases.items():
        P = build_algebra(H2, LevelIndex.parse(text, 2), 6)
        assert P.quotient_basis == basis


def test_presentation_accessors():
    P = build_algebra(H2, LevelIndex(0, 1, 2), 4)
    assert P.identity_coords() == {0: F(1)}
    assert P.labels() == ["1", "a(-1)^2"]
    assert P.relation_cutoff == 6
    assert P.filtration_dims() == [1, 1, 2, 2, 2]
    with pytest.raises(ValueError):
        P.coordinates({(7,): F(1)})
    doc = P.to_json()
    assert doc["schema"] == "twisted-zhu/presentation/v1" and doc["level"] == "1/2"
    assert doc["products"][0] == [0, 0, [[0, "1"]]]
    rows = P.to_csv_rows()
    assert rows[0] == ["*", "1", "a(-1)^2"] and rows[1][1] == "1*[1]"
    with pytest.raises(ValueError):
        build_algebra(H2, LevelIndex(0, 0, 1), 3)


def test_representatives_reduce_to_themselves():
    P = build_algebra(H2, LevelIndex(1, 0, 2), 6)
    for b in P.quotient_basis:
        assert P.reduce({b: F(1)}) == {b: F(1)}


CONFIGS = [(H1, LevelIndex(0, 0, 1)), (H1, LevelIndex(1, 0, 1)), (H2, LevelIndex(0, 1, 2)),
           (H2, LevelIndex(1, 0, 2)), (VIR, LevelIndex(0, 0, 1))]


@pytest.mark.parametrize("V,n", CONFIGS)
def test_algebra_checks_pass(V, n):
    P = build_algebra(V, n, 5)
    for rep in [check_associativity(P), check_associativity_vectors(P), check_identity(P), check_center(P),
                check_two_sided_ideal(P), check_antiisomorphism(P), check_commutators(P)]:
        assert rep["status"] == "pass", rep
    if V.T == 2:
        assert check_odd_vanishing(P)["status"] == "pass"


def test_ideal_and_commutator_examples():
    P = build_algebra(H1, LevelIndex(0, 0, 1), 5)
    assert translation_relation(H1, ()) == {}
    assert check_two_sided_ideal(P, samples=[(1, 1)])["status"] == "pass"
    assert commutator_formula_check(P, A, A)["status"] == "pass"
    assert commutator_formula_check(P, ONE, {(2, 1): F(1)})["status"] == "pass"
    Q = build_algebra(VIR, LevelIndex(0, 0, 1), 6)
    assert commutator_formula_check(Q, VIR.omega, VIR.omega)["status"] == "pass"
    # the V^1 rule: c * o vanishes identically
    n = LevelIndex(0, 1, 2)
    for x in o_spanning_set(H2, n, 4):
        assert star(H2, A, x, n) == {}


def test_surjection_examples():
    assert check_surjection(H2, LevelIndex(0, 1, 2), 4)["status"] == "pass"
    assert check_surjection(H1, LevelIndex(1, 0, 1), 4)["status"] == "pass"
    rep = check_surjection(H2, LevelIndex(0, 0, 2), 4)
    assert rep["status"] == "skipped" and "below" in rep["reason"]


@pytest.mark.parametrize("V,n", [(H2, LevelIndex(0, 1, 2)), (H1, LevelIndex(1, 0, 1)), (VIR, LevelIndex(1, 0, 1))])
def test_monotone_stabilization(V, n):
    prev = None
    for W in range(2, 7):
        fd = build_algebra(V, n, W).filtration_dims()
        if prev is not None:
            assert all(fd[w] <= prev[w] for w in range(len(prev)))
        prev = fd
    shallow = build_algebra(V, n, 5, depth=0).filtration_dims()
    deep = build_algebra(V, n, 5, depth=2).filtration_dims()
    assert all(d <= s for d, s in zip(deep, shallow))


def test_rows_are_label_homogeneous():
    P = build_algebra(H2, LevelIndex(0, 1, 2), 5)
    for row in P.o_basis.rows.values():
        assert len({H2.label(m) for m in row}) == 1


def test_parallel_build_is_deterministic():
    a = build_algebra(H2, LevelIndex(1, 0, 2), 5, jobs=1).to_json()
    b = build_algebra(Heisenberg(2), LevelIndex(1, 0, 2), 5, jobs=4).to_json()
    assert a == b
    assert sorted(build_algebra(VIR, LevelIndex(1, 0, 1), 5).o_basis.pivots, key=order_key) == \
        build_algebra(VIR, LevelIndex(1, 0, 1), 5).o_basis.pivots


def test_residue_commutes_with_vsub():
    n = LevelIndex(1, 1, 2)
    u, v, w = (1, 1), {(2,): F(1)}, {(1,): F(3)}
    lhs = vsub(residue(H2, u, v, F(3, 2), 4), residue(H2, u, w, F(3, 2), 4))
    assert lhs == residue(H2, u, vsub(v, w), F(3, 2), 4)
    assert circle_pole(1, n) == contraction_pole(1, n) + 1
