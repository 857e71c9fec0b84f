"""Bracket powers, Frobenius preimages, Frobenius closure, test exponents, HSL of H^0.

Notation used throughout: R = S/A, I an ideal of R given by generators in S,
q = p^e, ``J_e = I^[q] + A`` (valid because A^[q] is contained in A) and
``Phi_e = {f in S : f^q in J_e}``.  The chain Phi_0 <= Phi_1 <= ... ascends
and its union is the preimage of the Frobenius closure I^F.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

from .algebra import (
    EXPONENT_LIMIT,
    ExponentOverflowError,
    Polynomial,
    frobenius_substitute,
    monomials_of_degree,
)
from .groebner import eliminate_terms
from .ideals import Ideal, RingSpec, intersect, saturate


class Status(str, enum.Enum):
    CERTIFIED = "Certified"
    CAPPED = "CappedInconclusive"

    def __str__(self):
        return self.value


class InconclusiveError(RuntimeError):
    """A closure computation hit its exponent cap and cannot certify a value."""


class ChainError(AssertionError):
    """A structural invariant of the Frobenius chain was violated."""


@dataclass
class FrobeniusConfig:
    max_exponent: int = 8
    lookahead: int = 2
    #: random elements outside the candidate closure tested at ``probe_exponent``
    probes: int = 3
    #: None means one step past the end of the observed plateau
    probe_exponent: Optional[int] = None
    seed: int = 0
    progress: Optional[Callable[[int, Ideal], None]] = field(default=None, repr=False)

    def __post_init__(self):
        if self.max_exponent < 1:
            raise ValueError("max_exponent must be at least 1")
        if self.lookahead < 1:
            raise ValueError("lookahead must be at least 1")


@dataclass
class ClosureResult:
    closure: Ideal
    chain: List[Tuple[int, Ideal]]
    stabilized_at: Optional[int]
    status: Status
    fte_candidate: Optional[int] = None
    notes: List[str] = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return self.status is Status.CERTIFIED


@dataclass
class FteResult:
    """``fte`` is exact when certified and a lower bound otherwise."""

    fte: int
    closure: ClosureResult
    witnesses: List[Tuple[Polynomial, int]] = field(default_factory=list)

    @property
    def status(self) -> Status:
        return self.closure.status

    @property
    def certified(self) -> bool:
        return self.closure.certified


# ---------------------------------------------------------------------------
# ideal-level Frobenius


def _q(ring, e: int) -> int:
    if e < 0:
        raise ValueError("Frobenius exponent must be non-negative")
    q = ring.p**e
    if q >= EXPONENT_LIMIT:
        raise ExponentOverflowError(f"p^e = {ring.p}^{e} exceeds the 2^32 cap")
    return q


def bracket_power(I: Ideal, e: int) -> Ideal:
    """I^[p^e], generated by the p^e-th powers of the given generators."""
    q = _q(I.ring, e)
    try:
        return Ideal(I.ring, [frobenius_substitute(g, q) for g in I.gens])
    except ExponentOverflowError as exc:
        raise ExponentOverflowError(f"bracket power at e={e}: {exc}") from None


def bracket_target(ring: RingSpec, I: Ideal, e: int) -> Ideal:
    """J_e = I^[p^e] + A."""
    return Ideal(ring.ambient, bracket_power(I, e).gens + ring.quotient.gens)


def frobenius_preimage(J: Ideal, e: int) -> Ideal:
    """{f in S : f^(p^e) in J}, by eliminating x from J(x) + (x_i^q - y_i).

    Each monomial x^a of J's generators is first rewritten as
    y^(a div q) x^(a mod q), which is harmless modulo the graph relations and
    keeps generators of the form g(x^q) at their original degree.
    """
    ring = J.ring
    q = _q(ring, e)
    if e == 0 or J.is_zero():
        return J.reduced()
    n, p = ring.nvars, ring.p
    polys = []
    for g in J.gens:
        h = {}
        for m, c in g.terms.items():
            mm = tuple(a % q for a in m) + tuple(a // q for a in m)
            h[mm] = (h.get(mm, 0) + c) % p
        polys.append({m: c for m, c in h.items() if c})
    for i in range(n):
        hi = [0] * (2 * n)
        hi[i] = q
        yi = [0] * (2 * n)
        yi[n + i] = 1
        polys.append({tuple(hi): 1, tuple(yi): p - 1})
    out = eliminate_terms(polys, 2 * n, list(range(n)), p)
    return Ideal(ring, [Polynomial(ring, g, True) for g in out]).reduced()


def relative_kernel_h0(ring: RingSpec, I: Ideal, e: int) -> Ideal:
    """Preimage in S of ker(F^e_R : H^0_m(R/I) -> H^0_m(R/I^[p^e]))."""
    sat, _ = saturate(ring.lift(I))
    return intersect(frobenius_preimage(bracket_target(ring, I, e), e), sat)


# ---------------------------------------------------------------------------
# closure and test exponent


def _contained_after(ring: RingSpec, K: Ideal, I: Ideal, e: int) -> bool:
    """K^[p^e] <= I^[p^e] + A."""
    target = bracket_target(ring, I, e).gb()
    return all(target.contains(g) for g in bracket_power(K, e).gens)


def _first_containment(ring: RingSpec, K: Ideal, I: Ideal, upto: int) -> int:
    """Least e <= upto with K^[q] <= J_e, checking that containment persists."""
    found = None
    for e in range(upto + 1):
        ok = _contained_after(ring, K, I, e)
        if found is not None and not ok:
            raise ChainError(f"bracket containment held at e={found} but fails at e={e}")
        if ok and found is None:
            found = e
    if found is None:
        raise ChainError(f"containment never held up to e={upto}")
    return found


def _unit_result(ring: RingSpec) -> ClosureResult:
    unit = Ideal(ring.ambient, [ring.ambient.one()])
    return ClosureResult(unit, [(0, unit)], 0, Status.CERTIFIED, 0)


def _probe(ring: RingSpec, I: Ideal, closure: Ideal, E: int, cfg: FrobeniusConfig) -> Optional[Polynomial]:
    """Return a random element outside ``closure`` whose p^E-th power lies in J_E, if any."""
    if cfg.probes <= 0:
        return None
    rng = random.Random(cfg.seed)
    S = ring.ambient
    gb = closure.gb()
    top = max(closure.max_degree(), 1)
    monos = [m for d in range(top + 1) for m in monomials_of_degree(S.nvars, d)]
    target = None
    for _ in range(cfg.probes):
        f = Polynomial(S, {m: rng.randrange(S.p) for m in monos})
        f = gb.reduce(f)
        if f.is_zero():
            continue
        if target is None:
            target = bracket_target(ring, I, E).gb()
        if target.contains(frobenius_substitute(f, S.p**E)):
            return f
    return None


def frobenius_closure(
    ring: RingSpec, I: Ideal, cfg: Optional[FrobeniusConfig] = None
) -> ClosureResult:
    """Preimage of I^F via the ascending chain Phi_e, certified by a test-exponent cross-check."""
    cfg = cfg or FrobeniusConfig()
    if ring.lift(I).is_unit():
        return _unit_result(ring)
    chain: List[Tuple[int, Ideal]] = []
    start = None
    for e in range(cfg.max_exponent + 1):
        phi = frobenius_preimage(bracket_target(ring, I, e), e)
        if chain:
            prev = chain[-1][1]
            if not prev <= phi:
                raise ChainError(f"Phi_{e - 1} is not contained in Phi_{e}")
            if prev != phi:
                start = e
        else:
            start = 0
        chain.append((e, phi))
        if cfg.progress is not None:
            cfg.progress(e, phi)
        if e - start >= cfg.lookahead:
            break
    else:
        # cap reached without a plateau of the requested length
        return ClosureResult(chain[-1][1], chain, None, Status.CAPPED, None,
                             [f"no plateau of length {cfg.lookahead} up to e={cfg.max_exponent}"])

    closure = chain[start][1]
    result = ClosureResult(closure, chain, start, Status.CAPPED)
    fte = _first_containment(ring, closure, I, start)
    result.fte_candidate = fte
    # I^F <= Phi_e  iff  (I^F)^[q] <= J_e, so both indices must agree
    if chain[fte][1] != closure:
        result.notes.append(f"cross-check failed: Phi_{fte} differs from the closure")
        return result
    E = cfg.probe_exponent
    if E is None:
        E = min(cfg.max_exponent, start + cfg.lookahead + 1)
    bad = _probe(ring, I, closure, E, cfg)
    if bad is not None:
        result.notes.append(f"probe {bad} enters the closure at e={E}")
        return result
    result.status = Status.CERTIFIED
    return result


def fte(ring: RingSpec, I: Ideal, cfg: Optional[FrobeniusConfig] = None) -> FteResult:
    """Frobenius test exponent of I in R."""
    res = frobenius_closure(ring, I, cfg)
    if res.fte_candidate is not None:
        value = res.fte_candidate
    else:
        last = res.chain[-1][1]
        value = min(e for e, phi in res.chain if phi == last)
    witnesses = []
    for g in res.closure.gens:
        entry = next((e for e, phi in res.chain if phi.contains(g)), None)
        if entry is not None:
            witnesses.append((g, entry))
    if res.certified and any(w > value for _, w in witnesses):
        raise ChainError("a witness exponent exceeds the test exponent")
    return FteResult(value, res, witnesses)


def hsl0_from_closure(ring: RingSpec, I: Ideal, res: ClosureResult) -> int:
    """HSL of H^0_m(R/I) relative to R, reusing a computed closure."""
    if not res.certified:
        raise InconclusiveError("closure is not certified; HSL of H^0 is unknown")
    sat, _ = saturate(ring.lift(I))
    W = intersect(res.closure, sat)
    return _first_containment(ring, W, I, res.stabilized_at)


def hsl0(ring: RingSpec, I: Ideal, cfg: Optional[FrobeniusConfig] = None) -> int:
    """min{e : (I^F cap (I : m^inf))^[p^e] <= I^[p^e] + A}."""
    return hsl0_from_closure(ring, I, frobenius_closure(ring, I, cfg))
