from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import dense_rank
from twisted_zhu.exact import (SubspaceBasis, axpy, binomial_series, fmt, kernel, rat, rat_binomial, reduce_mod,
                               rref, vsub)

F = Fraction


def test_rat_parsing():
    assert rat("3/6") == F(1, 2)
    assert rat(" -4 ") == -4
    assert rat(F(2, 3)) == F(2, 3)
    assert fmt(F(-3, 4)) == "-3/4" and fmt(F(5)) == "5"
    for bad in ["1/0", "x", "1.5", ""]:
        with pytest.raises(ValueError):
            rat(bad)
    with pytest.raises(TypeError):
        rat(0.5)


def test_binomial_examples():
    assert rat_binomial(F(1, 2), 2) == F(-1, 8)
    assert rat_binomial(F(7, 3), 0) == 1
    assert rat_binomial(3, 5) == 0
    with pytest.raises(ValueError):
        rat_binomial(1, -1)


def test_binomial_series_examples():
    assert binomial_series(1, 3) == [1, 1, 0, 0]
    assert binomial_series(F(1, 2), 2) == [1, F(1, 2), F(-1, 8)]
    assert binomial_series(-2, 2) == [1, -2, 3]


rationals = st.fractions(min_value=-6, max_value=6, max_denominator=7)


@given(rationals, st.integers(min_value=1, max_value=12))
def test_binomial_recurrence(s, m):
    assert rat_binomial(s, m) == rat_binomial(s, m - 1) * (s - m + 1) / m
    assert binomial_series(s, m)[m] == rat_binomial(s, m)


def test_rref_examples():
    assert rref([]).rank == 0
    v = {0: F(1), 2: F(3)}
    assert rref([v, {k: 2 * c for k, c in v.items()}]).rank == 1
    B = rref([{1: F(1)}])
    assert reduce_mod({1: F(1), 2: F(1)}, B) == {2: F(1)}
    assert reduce_mod(v, SubspaceBasis()) == v
    assert reduce_mod(v, rref([v])) == {}


def _vec(row):
    return {j: F(c) for j, c in enumerate(row) if c}


matrices = st.lists(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=4, max_size=4),
                    min_size=0, max_size=6)


@settings(max_examples=150)
@given(matrices)
def test_rref_properties(rows):
    B = rref([_vec(r) for r in rows], track=True)
    assert B.rank == (dense_rank(rows) if rows else 0)
    # echelon shape: unit pivots that vanish in the other rows
    for p, row in B.rows.items():
        assert row[p] == 1 and max(row) == p
        for q, other in B.rows.items():
            if q != p:
                assert p not in other
    # every input reduces to zero, and reduction is idempotent
    for r in rows:
        assert reduce_mod(_vec(r), B) == {}
    probe = {0: F(1), 1: F(-2), 3: F(5)}
    once = reduce_mod(probe, B)
    assert reduce_mod(once, B) == once
    assert all(p not in once for p in B.rows)
    # the recorded operations rebuild each row from the inputs
    for p, row in B.rows.items():
        rebuilt: dict = {}
        for i, c in B.tags.get(p, {}).items():
            axpy(rebuilt, c, _vec(rows[i]))
        assert rebuilt == row


@settings(max_examples=100)
@given(matrices)
def test_kernel_is_kernel(rows):
    images = [_vec(r) for r in rows]
    ker = kernel(images)
    assert len(ker) == len(rows) - (dense_rank(rows) if rows else 0)
    for k in ker:
        tot: dict = {}
        for j, c in k.items():
            axpy(tot, c, images[j])
        assert tot == {}


def test_add_reports_relation():
    B = SubspaceBasis()
    assert B.add({0: F(1)}, {"a": F(1)}) is None
    assert B.add({1: F(2)}, {"b": F(1)}) is None
    rel = B.add({0: F(1), 1: F(1)}, {"c": F(1)})
    assert rel == {"c": F(1), "a": F(-1), "b": F(-1, 2)}
    assert {0: F(3)} in B and {2: F(1)} not in B
    assert vsub({0: F(1)}, {0: F(1)}) == {}
