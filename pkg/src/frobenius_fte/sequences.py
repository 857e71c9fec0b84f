"""Filter regular sequences, regular sequences, parts of systems of parameters.

A sequence x_1, ..., x_t of elements of m is filter regular when every
quotient ((x_1..x_{i-1}) : x_i) / (x_1..x_{i-1}) of R has finite length.
Working in R = S/A at the origin, with J = (x_1..x_{i-1}) + A in S, that
quotient has finite length iff (J : x_i) is contained in (J : m^inf).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from .algebra import Polynomial, monomials_of_degree
from .ideals import Ideal, RingSpec, colon, krull_dimension, saturate

DEFAULT_RETRIES = 100


class SamplerExhaustedError(RuntimeError):
    """No acceptable element was found within the retry budget."""


@dataclass(frozen=True)
class ElementSequence:
    ring: RingSpec
    elements: tuple

    def __post_init__(self):
        elems = tuple(self.ring(e) for e in self.elements)
        object.__setattr__(self, "elements", elems)
        if not elems:
            raise ValueError("a sequence needs at least one element")
        for x in elems:
            if x.ring != self.ring.ambient:
                raise ValueError(f"{x} is not in {self.ring.ambient}")
            if x.constant_coefficient():
                raise ValueError(f"{x} does not lie in the maximal ideal")

    @classmethod
    def parse(cls, ring: RingSpec, text: str) -> "ElementSequence":
        from .parsing import parse_ideal

        return cls(ring, tuple(parse_ideal(text, ring.ambient)))

    def __len__(self):
        return len(self.elements)

    def prefix(self, i: int) -> Ideal:
        """(x_1, ..., x_i) as an ideal of S (not yet lifted by A)."""
        return Ideal(self.ring.ambient, self.elements[:i])

    def ideal(self) -> Ideal:
        return self.prefix(len(self.elements))

    def powers(self, exponents: Sequence[int]) -> "ElementSequence":
        if len(exponents) != len(self.elements):
            raise ValueError("need one exponent per element")
        return ElementSequence(self.ring, tuple(x**n for x, n in zip(self.elements, exponents)))

    def is_homogeneous(self) -> bool:
        return all(x.is_homogeneous() for x in self.elements)

    def strings(self) -> List[str]:
        return [str(x) for x in self.elements]

    def __str__(self):
        return "; ".join(self.strings())


@dataclass
class StepDiagnostic:
    index: int
    ok: bool
    colon: List[str]
    reference: List[str]
    saturation_steps: Optional[int] = None


@dataclass
class SequenceVerdict:
    kind_checked: str
    ok: bool
    failing_index: Optional[int] = None
    diagnostics: List[StepDiagnostic] = field(default_factory=list)
    caveats: List[str] = field(default_factory=list)

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        return {
            "kind_checked": self.kind_checked,
            "ok": self.ok,
            "failing_index": self.failing_index,
            "diagnostics": [vars(d) for d in self.diagnostics],
            "caveats": list(self.caveats),
        }


def _caveats(seq: ElementSequence) -> List[str]:
    out = []
    if not (seq.is_homogeneous() and seq.ring.homogeneous):
        out.append("inhomogeneous input: results are global, not local at the origin")
    return out


def filter_regular_step(J: Ideal, x: Polynomial, sat: Optional[Ideal] = None):
    """Check the finite-length condition for x modulo J; returns (ok, colon, saturation, steps)."""
    steps = None
    if sat is None:
        sat, steps = saturate(J)
    c = colon(J, Ideal(J.ring, [x]))
    return c <= sat, c, sat, steps


def is_filter_regular(seq: ElementSequence) -> SequenceVerdict:
    verdict = SequenceVerdict("filter_regular", True, caveats=_caveats(seq))
    for i, x in enumerate(seq.elements, start=1):
        J = seq.ring.lift(seq.prefix(i - 1))
        ok, c, sat, steps = filter_regular_step(J, x)
        verdict.diagnostics.append(
            StepDiagnostic(i, ok, [str(g) for g in c.gens], [str(g) for g in sat.gens], steps)
        )
        if not ok:
            verdict.ok = False
            verdict.failing_index = i
            break
    return verdict


def is_regular_sequence(seq: ElementSequence) -> SequenceVerdict:
    verdict = SequenceVerdict("regular", True, caveats=_caveats(seq))
    for i, x in enumerate(seq.elements, start=1):
        J = seq.ring.lift(seq.prefix(i - 1)).reduced()
        c = colon(J, Ideal(J.ring, [x]))
        ok = c == J
        verdict.diagnostics.append(
            StepDiagnostic(i, ok, [str(g) for g in c.gens], [str(g) for g in J.gens])
        )
        if not ok:
            verdict.ok = False
            verdict.failing_index = i
            break
    return verdict


def is_parameter_part(seq: ElementSequence) -> SequenceVerdict:
    d = seq.ring.dim
    t = len(seq)
    if t > d:
        raise ValueError(f"sequence length {t} exceeds dim R = {d}")
    verdict = SequenceVerdict("parameter_part", True, caveats=_caveats(seq))
    for i in range(1, t + 1):
        J = seq.ring.lift(seq.prefix(i))
        dim = krull_dimension(J)
        ok = dim == d - i
        verdict.diagnostics.append(
            StepDiagnostic(i, ok, [f"dim={dim}"], [f"expected={d - i}"])
        )
        if not ok:
            verdict.ok = False
            verdict.failing_index = i
            break
    return verdict


def power_sequences_filter_regular(seq: ElementSequence, max_n: int) -> List[tuple]:
    """Exponent tuples n (each 1..max_n) whose power sequence fails the filter-regular check."""
    import itertools

    bad = []
    for ns in itertools.product(range(1, max_n + 1), repeat=len(seq)):
        if not is_filter_regular(seq.powers(ns)).ok:
            bad.append(ns)
    return bad


def _random_form(ring: RingSpec, degree: int, rng: random.Random) -> Polynomial:
    S = ring.ambient
    terms = {m: rng.randrange(S.p) for m in monomials_of_degree(S.nvars, degree)}
    return Polynomial(S, terms)


def sample_filter_regular(
    ring: RingSpec,
    t: int,
    max_degree: int = 1,
    rng_seed: int = 0,
    max_retries: int = DEFAULT_RETRIES,
) -> ElementSequence:
    """Draw homogeneous forms one at a time until t of them form a filter regular sequence.

    Each element starts at degree 1 and moves up one degree after every
    ceil(max_retries / max_degree) rejected draws.
    """
    if not ring.homogeneous:
        raise ValueError("sampling needs a homogeneous quotient ideal")
    if t < 1 or t > ring.dim:
        raise ValueError(f"t = {t} must lie in [1, dim R = {ring.dim}]")
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    rng = random.Random(rng_seed)
    per_degree = math.ceil(max_retries / max_degree)
    elements: List[Polynomial] = []
    for i in range(t):
        J = ring.lift(Ideal(ring.ambient, elements))
        sat, _ = saturate(J)
        chosen = None
        for attempt in range(max_retries):
            degree = min(1 + attempt // per_degree, max_degree)
            x = _random_form(ring, degree, rng)
            if x.is_zero():
                continue
            ok, *_ = filter_regular_step(J, x, sat)
            if ok:
                chosen = x
                break
        if chosen is None:
            raise SamplerExhaustedError(
                f"no filter regular element {i + 1} of degree <= {max_degree} "
                f"after {max_retries} draws"
            )
        elements.append(chosen)
    return ElementSequence(ring, tuple(elements))
