import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from znhg.arith import (Factorization, divisors, exponent_vector, factorize,
                        factorize_range, from_exponents,
                        proper_nontrivial_divisors)


@pytest.mark.parametrize("n,factors", [
    (12, ((2, 2), (3, 1))),
    (1, ()),
    (30, ((2, 1), (3, 1), (5, 1))),
    (2, ((2, 1),)),
    (9973, ((9973, 1),)),
    (1024, ((2, 10),)),
])
def test_factorize_examples(n, factors):
    assert factorize(n) == Factorization(n, factors)


def test_factorize_rejects_nonpositive():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        factorize(-6)


def test_product_reconstruction_dense():
    for f in factorize_range(1, 20000):
        prod = 1
        for p, a in f.factors:
            prod *= p**a
        assert prod == f.n
        assert list(f.primes) == sorted(set(f.primes))
        assert all(a >= 1 for a in f.exponents)


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=1, max_value=10**6))
def test_product_reconstruction_sampled(n):
    f = factorize(n)
    prod = 1
    for p, a in f.factors:
        prod *= p**a
    assert prod == n


def test_factorize_range_matches_factorize():
    for f in factorize_range(1, 3000):
        assert f == factorize(f.n)


@pytest.mark.parametrize("n,expected", [
    (12, [2, 3, 4, 6]),
    (7, []),
    (30, [2, 3, 5, 6, 10, 15]),
    (1, []),
    (4, [2]),
])
def test_proper_nontrivial_divisors(n, expected):
    assert proper_nontrivial_divisors(factorize(n)) == expected


def test_divisor_count_matches_formula():
    for f in factorize_range(2, 5000):
        assert len(proper_nontrivial_divisors(f)) == f.divisor_count() - 2


@pytest.mark.parametrize("d,n,exps", [
    (6, 12, (1, 1)),
    (4, 12, (2, 0)),
    (1, 30, (0, 0, 0)),
    (30, 30, (1, 1, 1)),
])
def test_exponent_vector_examples(d, n, exps):
    assert exponent_vector(d, factorize(n)) == exps


def test_exponent_vector_rejects_nondivisor():
    with pytest.raises(ValueError):
        exponent_vector(5, factorize(12))


def test_exponent_vectors_biject_with_divisor_box():
    # every divisor maps to a unique point of prod [0, a_i] and back
    for f in factorize_range(2, 2000):
        seen = set()
        box = 1
        for a in f.exponents:
            box *= a + 1
        for d in divisors(f):
            exps = exponent_vector(d, f)
            assert all(0 <= r <= a for r, a in zip(exps, f.exponents))
            assert from_exponents(exps, f) == d
            seen.add(exps)
        assert len(seen) == box


def test_divisors_ascending():
    for n in (12, 30, 360, 5040):
        ds = divisors(factorize(n))
        assert ds == sorted(ds)
        assert ds[0] == 1 and ds[-1] == n
