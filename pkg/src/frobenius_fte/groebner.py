"""Buchberger's algorithm with Gebauer-Moeller pair pruning, normal forms, elimination.

The engine works on raw term maps (``dict`` from exponent tuple to residue)
so that auxiliary rings (an extra intersection variable, the Frobenius graph
variables) never need :class:`PolyRing` objects.  The public functions at
the bottom wrap it for :class:`Polynomial` inputs.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from .algebra import (
    GREVLEX,
    Monomial,
    MonomialOrder,
    PolyRing,
    Polynomial,
    RingMismatchError,
    Terms,
    as_order,
    check_exponents,
    mono_coprime,
    mono_divides,
    mono_lcm,
)

KeyFn = Callable[[Monomial], Tuple[int, ...]]

DEFAULT_MAX_STEPS = 5_000_000
DEFAULT_MAX_BASIS = 5_000


class GroebnerLimitError(RuntimeError):
    """A configured reduction-step or basis-size safety valve was exceeded."""


@dataclass
class Limits:
    max_steps: int = DEFAULT_MAX_STEPS
    max_basis: int = DEFAULT_MAX_BASIS
    steps: int = field(default=0, compare=False)

    def tick(self, n: int = 1) -> None:
        self.steps += n
        if self.steps > self.max_steps:
            raise GroebnerLimitError(f"more than {self.max_steps} reduction steps")


# ---------------------------------------------------------------------------
# raw engine


def _monic(f: Terms, lm: Monomial, p: int) -> Terms:
    c = f[lm]
    if c == 1:
        return f
    inv = pow(c, p - 2, p)
    return {m: a * inv % p for m, a in f.items()}


def reduce_terms(
    f: Terms,
    basis: Sequence[Tuple[Monomial, Terms]],
    p: int,
    key: KeyFn,
    limits: Optional[Limits] = None,
) -> Terms:
    """Full multivariate division of ``f`` by monic ``basis``; returns the remainder."""
    f = dict(f)
    if not f or not basis:
        return f
    heap = [(tuple(-k for k in key(m)), m) for m in f]
    heapq.heapify(heap)
    rem: Terms = {}
    steps = 0
    while heap:
        _, m = heapq.heappop(heap)
        c = f.get(m)
        if c is None:
            continue
        for lm, g in basis:
            if all(a <= b for a, b in zip(lm, m)):
                shift = tuple(b - a for a, b in zip(lm, m))
                for gm, gc in g.items():
                    mm = tuple(x + y for x, y in zip(gm, shift))
                    old = f.get(mm)
                    if old is None:
                        f[mm] = (-c * gc) % p
                        heapq.heappush(heap, (tuple(-k for k in key(mm)), mm))
                    else:
                        v = (old - c * gc) % p
                        if v:
                            f[mm] = v
                        else:
                            del f[mm]
                steps += 1
                break
        else:
            rem[m] = c
            del f[m]
    if limits is not None:
        limits.tick(steps)
    return rem


def _spoly(f: Terms, lf: Monomial, g: Terms, lg: Monomial, p: int) -> Terms:
    lcm = mono_lcm(lf, lg)
    sf = tuple(a - b for a, b in zip(lcm, lf))
    sg = tuple(a - b for a, b in zip(lcm, lg))
    out: Terms = {}
    for m, c in f.items():
        out[tuple(x + y for x, y in zip(m, sf))] = c
    for m, c in g.items():
        mm = tuple(x + y for x, y in zip(m, sg))
        v = (out.get(mm, 0) - c) % p
        if v:
            out[mm] = v
        else:
            out.pop(mm, None)
    return out


def groebner_terms(
    polys: Iterable[Terms],
    p: int,
    key: KeyFn,
    limits: Optional[Limits] = None,
) -> List[Terms]:
    """Reduced Groebner basis of raw term maps, sorted by ascending leading monomial."""
    limits = limits or Limits()
    inputs = []
    for f in polys:
        f = {m: c % p for m, c in f.items() if c % p}
        if not f:
            continue
        lm = max(f, key=key)
        if not any(lm):
            return [{lm: 1}]
        inputs.append((key(lm), sorted(f.items()), f, lm))
    if not inputs:
        return []
    inputs.sort(key=lambda t: (t[0], t[1]))

    polys_: List[Tuple[Monomial, Terms]] = []  # every polynomial ever added
    G: List[int] = []  # indices of the current (minimal) basis
    pairs: dict = {}  # (i, j) -> lcm
    heap: list = []

    def update(h: int) -> None:
        nonlocal G
        lh = polys_[h][0]
        C = list(G)
        D: List[int] = []
        lcms = {g: mono_lcm(lh, polys_[g][0]) for g in C}
        while C:
            g = C.pop()
            lg = lcms[g]
            if mono_coprime(lh, polys_[g][0]) or (
                not any(mono_divides(lcms[g2], lg) for g2 in C)
                and not any(mono_divides(lcms[g2], lg) for g2 in D)
            ):
                D.append(g)
        E = [g for g in D if not mono_coprime(lh, polys_[g][0])]
        for (g1, g2), l12 in list(pairs.items()):
            if (
                mono_divides(lh, l12)
                and mono_lcm(polys_[g1][0], lh) != l12
                and mono_lcm(polys_[g2][0], lh) != l12
            ):
                del pairs[(g1, g2)]
        for g in E:
            l = lcms[g]
            pairs[(g, h)] = l
            heapq.heappush(heap, (sum(l), key(l), g, h))
        G = [g for g in G if not mono_divides(lh, polys_[g][0])] + [h]
        if len(G) > limits.max_basis:
            raise GroebnerLimitError(f"basis grew beyond {limits.max_basis} elements")

    def basis_view():
        return [polys_[g] for g in G]

    for _, _, f, lm in inputs:
        h = reduce_terms(f, basis_view(), p, key, limits)
        if not h:
            continue
        lm = max(h, key=key)
        if not any(lm):
            return [{lm: 1}]
        polys_.append((lm, _monic(h, lm, p)))
        update(len(polys_) - 1)

    while pairs:
        _, _, i, j = heapq.heappop(heap)
        if pairs.pop((i, j), None) is None:
            continue
        (li, fi), (lj, fj) = polys_[i], polys_[j]
        s = _spoly(fi, li, fj, lj, p)
        h = reduce_terms(s, basis_view(), p, key, limits)
        if not h:
            continue
        lm = max(h, key=key)
        if not any(lm):
            return [{lm: 1}]
        polys_.append((lm, _monic(h, lm, p)))
        update(len(polys_) - 1)

    # interreduce the minimal basis
    current = basis_view()
    reduced = []
    for idx, (lm, g) in enumerate(current):
        others = current[:idx] + current[idx + 1 :]
        r = reduce_terms(g, others, p, key, limits)
        reduced.append((key(lm), _monic(r, lm, p)))
    reduced.sort(key=lambda t: t[0])
    return [g for _, g in reduced]


def eliminate_terms(
    polys: Iterable[Terms],
    nvars: int,
    front: Sequence[int],
    p: int,
    limits: Optional[Limits] = None,
) -> List[Terms]:
    """Generators of (polys) intersected with F_p[variables not in ``front``].

    Returned term maps are over the remaining variables only, in their
    original relative order.
    """
    front = sorted(set(front))
    back = [i for i in range(nvars) if i not in front]
    perm = front + back
    k = len(front)
    order = MonomialOrder.block(k)
    permuted = [{tuple(m[i] for i in perm): c for m, c in f.items()} for f in polys]
    gb = groebner_terms(permuted, p, order.key, limits)
    out = []
    for g in gb:
        if all(not any(m[:k]) for m in g):
            out.append({m[k:]: c for m, c in g.items()})
    return out


# ---------------------------------------------------------------------------
# polynomial-level API


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced, monic, interreduced basis sorted by ascending leading monomial."""

    ring: PolyRing
    generators: Tuple[Polynomial, ...]
    order: MonomialOrder = GREVLEX

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def leading_monomials(self) -> List[Monomial]:
        key = self.order.key
        return [max(g.terms, key=key) for g in self.generators]

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].degree() == 0

    def _basis(self):
        key = self.order.key
        return [(max(g.terms, key=key), g.terms) for g in self.generators]

    def reduce(self, f: Polynomial, limits: Optional[Limits] = None) -> Polynomial:
        if f.ring != self.ring:
            raise RingMismatchError(f"{f.ring} vs {self.ring}")
        r = reduce_terms(f.terms, self._basis(), self.ring.p, self.order.key, limits)
        return Polynomial(self.ring, r, True)

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.order == other.order
            and set(self.generators) == set(other.generators)
        )

    def __hash__(self):
        return hash((self.ring, self.order, frozenset(self.generators)))


def _common_ring(gens: Sequence[Polynomial], ring: Optional[PolyRing]) -> PolyRing:
    rings = {g.ring for g in gens}
    if ring is not None:
        rings.add(ring)
    if len(rings) > 1:
        raise RingMismatchError("generators live in different rings")
    if not rings:
        raise ValueError("cannot infer the ring of an empty generator list")
    return rings.pop()


def buchberger(
    gens: Sequence[Polynomial],
    order=GREVLEX,
    ring: Optional[PolyRing] = None,
    max_steps: int = DEFAULT_MAX_STEPS,
    max_basis: int = DEFAULT_MAX_BASIS,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    ring = _common_ring(gens, ring)
    order = as_order(order)
    limits = Limits(max_steps, max_basis)
    gb = groebner_terms([g.terms for g in gens], ring.p, order.key, limits)
    for g in gb:
        check_exponents(g)
    return GroebnerBasis(ring, tuple(Polynomial(ring, g, True) for g in gb), order)


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    return gb.reduce(f)


def ideal_membership(f: Polynomial, gens: Sequence[Polynomial], order=GREVLEX) -> bool:
    return buchberger(gens, order, ring=f.ring).contains(f)


def eliminate(
    gens: Sequence[Polynomial],
    front_vars: Iterable,
    ring: Optional[PolyRing] = None,
) -> List[Polynomial]:
    """Generators of I intersected with the subring omitting ``front_vars``.

    ``front_vars`` may hold variable names or indices.  The result is expressed
    in the original ring and is a Groebner basis for the block order.
    """
    ring = _common_ring(gens, ring)
    idx = []
    for v in front_vars:
        if isinstance(v, str):
            if v not in ring.variables:
                raise ValueError(f"unknown variable {v!r}")
            v = ring.variables.index(v)
        if not 0 <= v < ring.nvars:
            raise ValueError(f"variable index {v} out of range")
        idx.append(v)
    if not idx:
        return list(buchberger(gens, GREVLEX, ring=ring).generators)
    back = [i for i in range(ring.nvars) if i not in set(idx)]
    out = []
    for g in eliminate_terms([g.terms for g in gens], ring.nvars, idx, ring.p):
        terms = {}
        for m, c in g.items():
            full = [0] * ring.nvars
            for pos, e in zip(back, m):
                full[pos] = e
            terms[tuple(full)] = c
        out.append(Polynomial(ring, terms, True))
    return out


def ideal_equal(
    gens_i: Sequence[Polynomial], gens_j: Sequence[Polynomial], order=GREVLEX, ring=None
) -> bool:
    ring = _common_ring(list(gens_i) + list(gens_j), ring)
    return buchberger(gens_i, order, ring=ring) == buchberger(gens_j, order, ring=ring)
