"""Ideals of the ambient ring and the quotient-ring model R = S/A at the origin.

Every ideal of R is handled through its preimage in S: callers that mean
"the ideal I of R" pass ``ring.lift(I)``, i.e. the generators of I plus those
of A.  Equality and containment go through reduced Groebner bases.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .algebra import (
    GREVLEX,
    FieldSpec,
    Monomial,
    MonomialOrder,
    PolyRing,
    Polynomial,
    RingMismatchError,
    as_order,
    mono_divides,
)
from .groebner import GroebnerBasis, buchberger, eliminate_terms

DEFAULT_SATURATION_CAP = 64


class InfiniteQuotientError(ValueError):
    """The quotient S/I is not a finite-dimensional vector space."""


class Ideal:
    """A finite generating set in the ambient ring with lazily cached Groebner bases.

    The empty generator list is the zero ideal.  Comparison is by reduced
    Groebner basis, so two handles are equal iff they generate the same ideal.
    """

    __slots__ = ("ring", "gens", "_gbs")

    def __init__(self, ring: PolyRing, gens: Iterable = ()):
        self.ring = ring
        out = []
        for g in gens:
            g = ring(g)
            if g.ring != ring:
                raise RingMismatchError(f"{g.ring} vs {ring}")
            if g:
                out.append(g)
        self.gens: Tuple[Polynomial, ...] = tuple(out)
        self._gbs: Dict[MonomialOrder, GroebnerBasis] = {}

    def gb(self, order=GREVLEX) -> GroebnerBasis:
        order = as_order(order)
        # racing writers compute identical bases, so no lock is needed
        gb = self._gbs.get(order)
        if gb is None:
            gb = buchberger(self.gens, order, ring=self.ring)
            self._gbs[order] = gb
        return gb

    def reduced(self, order=GREVLEX) -> "Ideal":
        """Same ideal, generated by its reduced Groebner basis."""
        gb = self.gb(order)
        out = Ideal(self.ring, gb.generators)
        out._gbs[as_order(order)] = gb
        return out

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gb().is_unit()

    def contains(self, f) -> bool:
        return self.gb().contains(self.ring(f))

    def __contains__(self, f) -> bool:
        return self.contains(f)

    def issubset(self, other: "Ideal") -> bool:
        _check_same(self, other)
        gb = other.gb()
        return all(gb.contains(g) for g in self.gens)

    def __le__(self, other: "Ideal") -> bool:
        return self.issubset(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.gb() == other.gb()

    def __hash__(self):
        return hash(self.gb())

    def __add__(self, other: "Ideal") -> "Ideal":
        return ideal_combine(self, other, "sum")

    def __mul__(self, other: "Ideal") -> "Ideal":
        return ideal_combine(self, other, "product")

    def max_degree(self) -> int:
        return max((g.degree() for g in self.gens), default=0)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def strings(self) -> List[str]:
        return [str(g) for g in self.gens]

    def __str__(self):
        return "(" + ", ".join(self.strings()) + ")" if self.gens else "(0)"

    def __repr__(self):
        return f"Ideal{self} in {self.ring}"


def _check_same(I: Ideal, J: Ideal) -> None:
    if I.ring != J.ring:
        raise RingMismatchError(f"{I.ring} vs {J.ring}")


def maximal_ideal(ring: PolyRing) -> Ideal:
    """The ideal of all variables, the maximal ideal at the origin."""
    return Ideal(ring, ring.gens())


@dataclass
class RingSpec:
    """R = S/A for S = F_p[variables], localized at the ideal of all variables."""

    ambient: PolyRing
    quotient: Ideal
    homogeneous: bool = False
    name: str = ""
    _dim: Optional[int] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.quotient.ring != self.ambient:
            raise RingMismatchError("quotient ideal lives in another ring")
        actual = self.quotient.is_homogeneous()
        if self.homogeneous and not actual:
            raise ValueError("quotient ideal declared homogeneous but is not")

    @classmethod
    def create(
        cls, p: int, variables, quotient: Sequence = (), name: str = ""
    ) -> "RingSpec":
        ambient = PolyRing.create(p, variables)
        A = Ideal(ambient, [ambient(q) for q in quotient])
        return cls(ambient, A, A.is_homogeneous(), name)

    @property
    def field(self) -> FieldSpec:
        return self.ambient.field

    @property
    def p(self) -> int:
        return self.ambient.p

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.ambient.variables

    def __call__(self, text) -> Polynomial:
        return self.ambient(text)

    def ideal(self, gens: Iterable = ()) -> Ideal:
        if isinstance(gens, str):
            from .parsing import parse_ideal

            gens = parse_ideal(gens, self.ambient)
        return Ideal(self.ambient, gens)

    def lift(self, I: Ideal) -> Ideal:
        """The preimage I~ + A of an ideal of R."""
        return ideal_combine(I, self.quotient, "sum")

    def maximal_ideal(self) -> Ideal:
        return maximal_ideal(self.ambient)

    @property
    def dim(self) -> int:
        if self._dim is None:
            self._dim = krull_dimension(self.quotient)
        return self._dim

    def __str__(self):
        base = str(self.ambient)
        if self.quotient.is_zero():
            return base
        return f"{base}/{self.quotient}"


# ---------------------------------------------------------------------------
# operations


def ideal_combine(I: Ideal, J: Ideal, op: str) -> Ideal:
    _check_same(I, J)
    if op == "sum":
        return Ideal(I.ring, I.gens + J.gens)
    if op == "product":
        return Ideal(I.ring, [f * g for f in I.gens for g in J.gens])
    raise ValueError(f"unknown ideal operation {op!r}")


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I cap J as (t*I + (1 - t)*J) cap S."""
    _check_same(I, J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring)
    if I.is_unit():
        return J.reduced()
    if J.is_unit():
        return I.reduced()
    n, p = ring.nvars, ring.p
    polys = []
    for g in I.gens:
        polys.append({m + (1,): c for m, c in g.terms.items()})
    for g in J.gens:
        h = {m + (0,): c for m, c in g.terms.items()}
        for m, c in g.terms.items():
            h[m + (1,)] = (p - c) % p
        polys.append(h)
    out = eliminate_terms(polys, n + 1, [n], p)
    return Ideal(ring, [Polynomial(ring, g, True) for g in out]).reduced()


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """f / g, raising ArithmeticError if g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    key = GREVLEX.key
    lg = max(g.terms, key=key)
    inv = g.ring.field.inv(g.terms[lg])
    ring, p = f.ring, f.ring.p
    rest = dict(f.terms)
    quotient = {}
    while rest:
        lm = max(rest, key=key)
        if not mono_divides(lg, lm):
            raise ArithmeticError("exact division failed (internal invariant breach)")
        shift = tuple(a - b for a, b in zip(lm, lg))
        c = rest[lm] * inv % p
        quotient[shift] = c
        for gm, gc in g.terms.items():
            mm = tuple(x + y for x, y in zip(gm, shift))
            v = (rest.get(mm, 0) - c * gc) % p
            if v:
                rest[mm] = v
            else:
                rest.pop(mm, None)
    return Polynomial(ring, quotient, True)


def colon(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) as the intersection over generators g of J of (I cap (g)) / g."""
    _check_same(I, J)
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    ring = I.ring
    result: Optional[Ideal] = None
    for g in J.gens:
        part = intersect(I, Ideal(ring, [g]))
        quo = Ideal(ring, [exact_divide(h, g) for h in part.gens])
        if quo.is_zero() and not part.is_zero():
            raise ArithmeticError("colon lost its generators")
        result = quo if result is None else intersect(result, quo)
    return result.reduced()


def saturate(
    I: Ideal, J: Optional[Ideal] = None, cap: int = DEFAULT_SATURATION_CAP
) -> Tuple[Ideal, int]:
    """(I : J^infinity), default J the maximal ideal, with the number of colon steps."""
    if J is None:
        J = maximal_ideal(I.ring)
    current = I.reduced()
    for step in range(cap):
        nxt = colon(current, J)
        if nxt == current:
            return current, step
        current = nxt
    raise RuntimeError(f"saturation did not stabilize within {cap} colon steps")


def _independent_dimension(lead: Sequence[Monomial], n: int) -> int:
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in lead]
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            s = frozenset(subset)
            if not any(sup <= s for sup in supports):
                return size
    return -1


def krull_dimension(I: Ideal) -> int:
    """dim S/I via maximal independent variable sets of the leading-term ideal; -1 for (1)."""
    gb = I.gb()
    if gb.is_unit():
        return -1
    return _independent_dimension(gb.leading_monomials(), I.ring.nvars)


def is_finite_colength(I: Ideal) -> bool:
    gb = I.gb()
    if gb.is_unit():
        return True
    lead = gb.leading_monomials()
    n = I.ring.nvars
    for i in range(n):
        if not any(m[i] > 0 and sum(m) == m[i] for m in lead):
            return False
    return True


def standard_monomials(I: Ideal) -> List[Monomial]:
    """Monomials outside the leading-term ideal, ascending in grevlex."""
    if not is_finite_colength(I):
        raise InfiniteQuotientError(f"S/I is infinite dimensional for I = {I}")
    gb = I.gb()
    if gb.is_unit():
        return []
    lead = gb.leading_monomials()
    n = I.ring.nvars
    bounds = []
    for i in range(n):
        bounds.append(min(m[i] for m in lead if m[i] > 0 and sum(m) == m[i]))
    out = [
        m
        for m in itertools.product(*(range(b) for b in bounds))
        if not any(mono_divides(l, m) for l in lead)
    ]
    out.sort(key=GREVLEX.key)
    return out


def power_of_maximal(ring: PolyRing, k: int) -> Ideal:
    """m^k generated by all monomials of degree k."""
    from .algebra import monomials_of_degree

    if k == 0:
        return Ideal(ring, [ring.one()])
    return Ideal(ring, [ring.monomial(m) for m in monomials_of_degree(ring.nvars, k)])
