import random

import pytest

import oracle
from randgen import random_instance
from frobenius_fte import (
    FrobeniusConfig,
    Ideal,
    PolyRing,
    RingSpec,
    Status,
    bracket_power,
    frobenius_closure,
    frobenius_preimage,
    fte,
    hsl0,
    ideal_equal,
    intersect,
    relative_kernel_h0,
    saturate,
)
from frobenius_fte.algebra import ExponentOverflowError
from frobenius_fte.frobenius import bracket_target


def piece_dims(ideal, nvars, top):
    """dim of the degree-d piece of a homogeneous ideal, d = 0..top, via the oracle."""
    from math import comb

    p = ideal.ring.p
    return [comb(d + nvars - 1, nvars - 1) - oracle.hilbert_function(ideal.gens, p, nvars, d)
            for d in range(top + 1)]


# ---------------------------------------------------------------------------
# bracket powers and preimages


def test_bracket_power_examples():
    S = PolyRing.create(2, "x y")
    x, y = S.gens()
    assert bracket_power(Ideal(S, [x, y]), 1).gens == (x**2, y**2)
    T = PolyRing.create(3, "x y")
    a, b = T.gens()
    assert bracket_power(Ideal(T, [a + b]), 1).gens == (a**3 + b**3,)
    J = Ideal(T, [a * b + b**2, a**2])
    assert bracket_power(J, 0) == J


def test_bracket_power_overflow_names_exponent():
    S = PolyRing.create(2, "x")
    (x,) = S.gens()
    with pytest.raises(ExponentOverflowError, match="e=30"):
        bracket_power(Ideal(S, [x**8]), 30)


def test_preimage_examples():
    S = PolyRing.create(2, "x y")
    x, y = S.gens()
    assert frobenius_preimage(Ideal(S, [x**2, y**2]), 1) == Ideal(S, [x, y])
    X = PolyRing.create(2, "x")
    (t,) = X.gens()
    assert frobenius_preimage(Ideal(X, [t**4]), 1) == Ideal(X, [t**2])
    S3 = PolyRing.create(2, "x y z")
    a, b, c = S3.gens()
    J = Ideal(S3, [b**2, c**2, a**3 + b**3 + c**3])
    assert oracle.member(a**4, J.gens, 2, 3)
    assert frobenius_preimage(J, 1).contains(a**2)
    assert frobenius_preimage(J, 0) == J


def test_preimage_matches_linear_algebra_oracle():
    """Graded pieces of the preimage against kernels of f -> f(x^q) mod J."""
    rng = random.Random(17)
    checked = 0
    while checked < 12:
        S, gens = random_instance(rng, max_vars=3, max_degree=3, primes=(2, 3))
        J = Ideal(S, gens)
        e = rng.choice([1, 1, 2]) if S.p == 2 else 1
        q = S.p**e
        phi = frobenius_preimage(J, e)
        top = 3
        expected = [oracle.preimage_piece_dim(J.gens, q, S.p, S.nvars, d) for d in range(top + 1)]
        assert piece_dims(phi, S.nvars, top) == expected
        checked += 1


# ---------------------------------------------------------------------------
# closure, Fte, HSL of H^0


def test_closure_regular_maximal_ideal():
    R = RingSpec.create(2, "x y")
    res = frobenius_closure(R, R.ideal("x; y"))
    assert res.status is Status.CERTIFIED
    assert res.closure == R.ideal("x; y")
    assert res.stabilized_at == 0


def test_fermat_chain_against_oracle(fermat):
    res = frobenius_closure(fermat, fermat.ideal("y; z"))
    assert res.status is Status.CERTIFIED
    assert res.closure == fermat.ideal("x^2; y; z")
    assert res.stabilized_at == 1
    S = fermat.ambient
    x, y, z = S.gens()
    f = x**3 + y**3 + z**3
    # x never enters up to e = 4, x^2 enters at e = 1
    for e in range(5):
        q = 2**e
        assert not oracle.member(x**q, [y**q, z**q, f], 2, 3)
        assert oracle.member(x**(2 * q), [y**q, z**q, f], 2, 3) == (e >= 1)
    for e, phi in res.chain:
        q = 2**e
        assert piece_dims(phi, 3, 3) == [
            oracle.preimage_piece_dim([y**q, z**q, f], q, 2, 3, d) for d in range(4)]


def test_noncm_closure(noncm):
    res = frobenius_closure(noncm, noncm.ideal("y"))
    assert res.certified
    assert res.closure == noncm.ideal("x; y")
    x, y = noncm.ambient.gens()
    assert oracle.member(x**2, [y**2, x**2, x * y], 2, 2)
    for e in range(5):
        assert not oracle.member(noncm.ambient.one(), [y**(2**e), x**2, x * y], 2, 2)


@pytest.mark.parametrize("ring_name,ideal,expected", [
    ("plane", "x; y", 0),
    ("fermat", "y; z", 1),
    ("noncm", "y", 1),
])
def test_fte_examples(request, ring_name, ideal, expected):
    ring = (RingSpec.create(2, "x y") if ring_name == "plane"
            else request.getfixturevalue(ring_name))
    res = fte(ring, ring.ideal(ideal))
    assert res.certified
    assert res.fte == expected
    assert all(w <= res.fte for _, w in res.witnesses)


def test_fte_containment_oracle(fermat, noncm):
    """(I^F)^[q] <= I^[q] + A at q = 2 and not at q = 1."""
    x, y, z = fermat.ambient.gens()
    f = x**3 + y**3 + z**3
    assert oracle.contained([x**4, y**2, z**2], [y**2, z**2, f], 2, 3)
    assert not oracle.member(x**2, [y, z, f], 2, 3)
    a, b = noncm.ambient.gens()
    assert oracle.contained([a**2, b**2], [b**2, a**2, a * b], 2, 2)
    assert not oracle.member(a, [b, a**2, a * b], 2, 2)


def test_unit_ideal_short_circuit(fermat):
    res = fte(fermat, fermat.ideal("x; x + 1"))
    assert res.fte == 0 and res.certified
    assert res.closure.closure.is_unit()


def test_relative_kernel_examples(fermat):
    R = RingSpec.create(2, "x y")
    I = R.ideal("x^2; y")
    assert relative_kernel_h0(R, I, 0) == R.lift(I)
    assert relative_kernel_h0(R, I, 1) == R.ideal("x^2; y")
    x, y = R.ambient.gens()
    assert [oracle.preimage_piece_dim([x**4, y**2], 2, 2, 2, d) for d in range(4)] == [0, 1, 3, 4]
    J = fermat.ideal("y; z")
    assert relative_kernel_h0(fermat, J, 0) == fermat.lift(J)
    assert relative_kernel_h0(fermat, J, 1) == fermat.ideal("x^2; y; z")


def test_relative_kernels_ascend_to_w(fermat, noncm):
    for ring, text in [(fermat, "y; z"), (noncm, "y"), (fermat, "y")]:
        I = ring.ideal(text)
        res = frobenius_closure(ring, I)
        sat, _ = saturate(ring.lift(I))
        W = intersect(res.closure, sat)
        kernels = [relative_kernel_h0(ring, I, e) for e in range(res.stabilized_at + 2)]
        for a, b in zip(kernels, kernels[1:]):
            assert a <= b
        assert kernels[-1] == W


@pytest.mark.parametrize("ring_name,ideal,expected", [
    ("plane", "x; y", 0),
    ("fermat", "y; z", 1),
    ("noncm", "y", 1),
])
def test_hsl0_examples(request, ring_name, ideal, expected):
    ring = (RingSpec.create(2, "x y") if ring_name == "plane"
            else request.getfixturevalue(ring_name))
    assert hsl0(ring, ring.ideal(ideal)) == expected


def test_hsl0_vanishes_when_h0_does(fermat):
    # R/(y) is Cohen-Macaulay of dimension 1, so H^0 is zero even though (y)^F is larger
    res = fte(fermat, fermat.ideal("y"))
    assert res.certified
    assert hsl0(fermat, fermat.ideal("y")) == 0


def test_cap_gives_inconclusive(fermat):
    cfg = FrobeniusConfig(max_exponent=1, lookahead=2)
    res = frobenius_closure(fermat, fermat.ideal("y; z"), cfg)
    assert res.status is Status.CAPPED
    assert res.stabilized_at is None
    r = fte(fermat, fermat.ideal("y; z"), cfg)
    assert not r.certified and r.fte == 1
    with pytest.raises(RuntimeError):
        hsl0(fermat, fermat.ideal("y; z"), cfg)


def test_progress_hook(fermat):
    seen = []
    frobenius_closure(fermat, fermat.ideal("y; z"), FrobeniusConfig(progress=lambda e, phi: seen.append(e)))
    assert seen == [0, 1, 2, 3]


def test_closure_is_idempotent(fermat, noncm):
    for ring, text in [(fermat, "y; z"), (noncm, "y"), (fermat, "x; y")]:
        c = frobenius_closure(ring, ring.ideal(text)).closure
        again = frobenius_closure(ring, c)
        assert again.certified and again.closure == c


def test_bracket_power_well_defined_and_additive():
    rng = random.Random(23)
    for _ in range(15):
        S, gens = random_instance(rng, max_degree=2, max_gens=2)
        I = Ideal(S, gens)
        other = Ideal(S, I.gb().generators)
        J = Ideal(S, [rng.choice(S.gens())])
        for e in (1, 2):
            assert bracket_power(I, e) == bracket_power(other, e)
            assert bracket_power(I + J, e) == bracket_power(I, e) + bracket_power(J, e)
