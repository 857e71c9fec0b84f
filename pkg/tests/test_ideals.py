import random

import pytest

import oracle
from randgen import random_instance
from frobenius_fte import (
    Ideal,
    PolyRing,
    RingSpec,
    colon,
    ideal_combine,
    intersect,
    is_finite_colength,
    krull_dimension,
    saturate,
    standard_monomials,
)
from frobenius_fte.ideals import InfiniteQuotientError, exact_divide, maximal_ideal


@pytest.fixture
def S():
    return PolyRing.create(2, "x y")


@pytest.fixture
def S3():
    return PolyRing.create(2, "x y z")


def I(ring, *gens):
    return Ideal(ring, gens)


def test_combine_examples(S):
    x, y = S.gens()
    assert ideal_combine(I(S, x), I(S, y), "sum").gens == (x, y)
    assert ideal_combine(I(S, x), I(S, x, y), "product").gens == (x**2, x * y)
    assert ideal_combine(I(S, x, y), Ideal(S), "sum") == I(S, x, y)
    with pytest.raises(ValueError):
        ideal_combine(I(S, x), I(S, y), "quotient")


def test_zero_and_unit_conventions(S):
    assert Ideal(S).is_zero()
    assert Ideal(S, [S.zero()]).is_zero()
    assert Ideal(S, [S.one()]).is_unit()


def test_intersect_examples(S):
    x, y = S.gens()
    assert intersect(I(S, x), I(S, y)) == I(S, x * y)
    assert intersect(I(S, x), I(S, x)) == I(S, x)
    out = intersect(I(S, x**2, y), I(S, x))
    assert out == I(S, x**2, x * y)
    assert oracle.contained(out.gens, [x**2, y], 2, 2)
    assert oracle.contained(out.gens, [x], 2, 2)
    assert oracle.same_ideal(out.gens, [x**2, x * y], 2, 2)


def test_colon_examples(S):
    x, y = S.gens()
    assert colon(I(S, x * y), I(S, x)) == I(S, y)
    assert colon(I(S, x**2, x * y), I(S, x)) == I(S, x, y)
    out = colon(I(S, x**2, x * y), I(S, x, y))
    assert out == I(S, x)
    # x * (x, y) lies in the ideal and y does not survive: y * y is not in it
    assert oracle.contained([x * x, x * y], [x**2, x * y], 2, 2)
    assert not oracle.member(y * y, [x**2, x * y], 2, 2)
    with pytest.raises(ValueError):
        colon(I(S, x), Ideal(S))


def test_exact_divide(S):
    x, y = S.gens()
    assert exact_divide((x + y) * (x * y + 1), x + y) == x * y + 1
    with pytest.raises(ArithmeticError):
        exact_divide(x + 1, y)


def test_saturate_examples(S, S3):
    x, y = S.gens()
    sat, steps = saturate(I(S, x**2, x * y))
    assert sat == I(S, x) and steps == 1
    assert saturate(I(S, x)) == (I(S, x), 0)
    sat, _ = saturate(I(S, x**2, y**3))
    assert sat.is_unit()


def test_krull_dimension_examples(S, S3):
    x, y = S.gens()
    assert krull_dimension(Ideal(S)) == 2
    assert krull_dimension(I(S, x, y)) == 0
    assert krull_dimension(I(S, S.one())) == -1
    a, b, c = S3.gens()
    f = a**3 + b**3 + c**3
    # Hilbert function 3D for D >= 1 has degree 1, so dim = 2
    assert [oracle.hilbert_function([f], 2, 3, d) for d in range(1, 6)] == [3, 6, 9, 12, 15]
    assert krull_dimension(I(S3, f)) == 2


def test_finite_colength_examples(S, S3):
    x, y = S.gens()
    assert is_finite_colength(I(S, x**2, y**3))
    assert not is_finite_colength(I(S, x))
    a, b, c = S3.gens()
    f = a**3 + b**3 + c**3
    # modulo (y, x^2) the cubic becomes z^3, so this ideal has finite colength
    assert [oracle.hilbert_function([b, a**2, f], 2, 3, d) for d in range(6)] == [1, 2, 2, 1, 0, 0]
    assert is_finite_colength(I(S3, b, a**2, f))
    assert not is_finite_colength(I(S3, b, a**2))
    assert krull_dimension(I(S3, b, a**2)) == 1


def test_standard_monomials_examples(S, S3):
    x, y = S.gens()
    assert standard_monomials(I(S, x**2, y**2)) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert standard_monomials(I(S, x, y)) == [(0, 0)]
    a, b, c = S3.gens()
    gens = [b, c, a**3 + b**3 + c**3]
    assert standard_monomials(I(S3, *gens)) == [(0, 0, 0), (1, 0, 0), (2, 0, 0)]
    assert oracle.colength(gens, 2, 3) == 3
    with pytest.raises(InfiniteQuotientError):
        standard_monomials(I(S, x))


def test_quotient_colon_criterion(fermat, noncm, cross):
    """(J : x)/J has finite length iff (J : x) lies in (J : m^inf).

    Independent route: the annihilator of (J : x)/J is J : (J : x), and a
    graded module has finite length iff its annihilator has dimension <= 0.
    """
    for ring, elem, expected in [
        (noncm, "y", True), (cross, "x", False), (fermat, "y", True), (cross, "x + y", True),
    ]:
        J = ring.quotient
        c = colon(J, Ideal(ring.ambient, [ring(elem)]))
        sat, _ = saturate(J)
        assert (c <= sat) is expected
        assert (krull_dimension(colon(J, c)) <= 0) is expected


def _random_ideals(n, seed):
    rng = random.Random(seed)
    return [random_instance(rng, max_degree=3) for _ in range(n)]


def test_colon_and_intersection_properties():
    rng = random.Random(4)
    for S, gens in _random_ideals(30, 21):
        A = Ideal(S, gens)
        B = Ideal(S, [rng.choice(S.gens())])
        c = colon(A, B)
        assert A <= c
        assert ideal_combine(c, B, "product") <= A
        i = intersect(A, B)
        assert i <= A and i <= B
        s = ideal_combine(A, B, "sum")
        assert A <= s and B <= s


def test_saturation_properties():
    for S, gens in _random_ideals(25, 8):
        A = Ideal(S, gens)
        sat, _ = saturate(A)
        assert A <= sat
        assert saturate(sat)[0] == sat


def test_finite_colength_matches_dimension():
    rng = random.Random(2)
    count = 0
    for S, gens in _random_ideals(120, 13):
        A = Ideal(S, gens)
        if A.is_unit():
            continue
        count += 1
        assert is_finite_colength(A) == (krull_dimension(A) <= 0)
    assert count >= 100


def test_ring_spec_basics(fermat):
    assert fermat.dim == 2
    assert fermat.homogeneous
    assert fermat.lift(fermat.ideal("y; z")).gens[-1] == fermat("x^3+y^3+z^3")
    assert maximal_ideal(fermat.ambient) == fermat.maximal_ideal()
    with pytest.raises(ValueError):
        RingSpec(fermat.ambient, fermat.ideal("x + 1"), homogeneous=True)
