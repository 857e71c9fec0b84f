import pytest

from frobenius_fte import (
    ElementSequence,
    RingSpec,
    is_filter_regular,
    is_parameter_part,
    is_regular_sequence,
    sample_filter_regular,
)
from frobenius_fte.sequences import SamplerExhaustedError, power_sequences_filter_regular


def seq(ring, text):
    return ElementSequence.parse(ring, text)


def test_elements_must_lie_in_m(plane):
    with pytest.raises(ValueError):
        seq(plane, "x + 1")
    with pytest.raises(ValueError):
        ElementSequence(plane, ())


def test_filter_regular_examples(plane, noncm, cross):
    assert is_filter_regular(seq(plane, "x; y")).ok
    assert is_filter_regular(seq(noncm, "y")).ok
    v = is_filter_regular(seq(cross, "x"))
    assert not v.ok and v.failing_index == 1
    assert v.diagnostics[0].colon == ["y"]


def test_regular_examples(plane, noncm, fermat):
    assert is_regular_sequence(seq(plane, "x; y")).ok
    v = is_regular_sequence(seq(noncm, "y"))
    assert not v.ok and v.failing_index == 1
    assert is_regular_sequence(seq(fermat, "y; z")).ok


def test_parameter_examples(plane, fermat):
    assert is_parameter_part(seq(fermat, "y; z")).ok
    assert is_parameter_part(seq(plane, "x")).ok
    v = is_parameter_part(seq(plane, "x; x"))
    assert not v.ok and v.failing_index == 2
    with pytest.raises(ValueError):
        is_parameter_part(seq(plane, "x; y; x + y"))


def test_failure_reports_first_step(plane):
    v = is_filter_regular(seq(plane, "x; x^2*y; y"))
    assert v.failing_index == 2
    assert [d.ok for d in v.diagnostics] == [True, False]


def test_inhomogeneous_input_is_flagged():
    R = RingSpec.create(3, "x y")
    v = is_filter_regular(ElementSequence.parse(R, "x + y^2"))
    assert v.ok and v.caveats


def test_sampler_examples(fermat, plane, cross):
    s = sample_filter_regular(fermat, 2, 1, 42)
    assert len(s) == 2 and s.is_homogeneous()
    assert is_filter_regular(s).ok
    s = sample_filter_regular(plane, 2, 1, 7)
    assert all(x.degree() == 1 for x in s.elements)
    assert is_regular_sequence(s).ok
    for seed in range(5):
        s = sample_filter_regular(cross, 1, 1, seed)
        assert s.elements == (cross("x + y"),)


def test_sampler_is_deterministic(fermat):
    a = sample_filter_regular(fermat, 2, 2, 123)
    b = sample_filter_regular(fermat, 2, 2, 123)
    assert a.elements == b.elements


def test_sampler_escalates_degree_when_linear_forms_fail(fermat):
    # over F_2, x + y + z cuts the cubic into the three F_2-rational lines y z (y + z),
    # so no linear form can follow it
    R = fermat
    J_lines = R.lift(R.ideal("x + y + z"))
    from frobenius_fte.sequences import filter_regular_step

    for lin in ["x", "y", "z", "x + y", "y + z", "x + z"]:
        assert not filter_regular_step(J_lines, R(lin))[0]
    assert filter_regular_step(J_lines, R("y^2 + y*z + z^2"))[0]


def test_sampler_exhaustion(cross):
    with pytest.raises(SamplerExhaustedError):
        sample_filter_regular(cross, 1, 1, 0, max_retries=0)
    with pytest.raises(ValueError):
        sample_filter_regular(cross, 2, 1, 0)


def test_sampler_requires_homogeneous_ring():
    R = RingSpec.create(2, "x y", ["x*y - x"])
    with pytest.raises(ValueError):
        sample_filter_regular(R, 1, 1, 0)


@pytest.mark.parametrize("seed", range(6))
def test_powers_of_sampled_sequences_stay_filter_regular(fermat, seed):
    s = sample_filter_regular(fermat, 2, 2, seed)
    assert power_sequences_filter_regular(s, 3) == []


def test_powers_on_non_cm_ring(noncm):
    assert power_sequences_filter_regular(seq(noncm, "y"), 3) == []


@pytest.mark.parametrize("seed", range(5))
def test_regular_implies_filter_regular(fermat, plane, seed):
    for ring, t in ((fermat, 2), (plane, 2)):
        s = sample_filter_regular(ring, t, 1, seed)
        if is_regular_sequence(s).ok:
            assert is_filter_regular(s).ok


@pytest.mark.parametrize("seed", range(5))
def test_full_length_filter_regular_is_parameter_in_cm_ring(fermat, seed):
    s = sample_filter_regular(fermat, 2, 2, seed)
    assert is_parameter_part(s).ok
