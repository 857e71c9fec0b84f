"""Exact arithmetic over prime fields: coefficients, monomials, polynomials, term orders.

Monomials are plain tuples of non-negative exponents, one entry per ring
variable.  Polynomials are sparse maps ``{monomial: coefficient}`` with
coefficients kept in ``[0, p)`` and zero coefficients never stored, so two
polynomials are equal exactly when their term maps are equal.  Storage is
order agnostic; a :class:`MonomialOrder` is only consulted when terms are
iterated, printed, or reduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, Sequence, Tuple

Monomial = Tuple[int, ...]
Terms = Dict[Monomial, int]

#: exponents must stay strictly below this bound (64-bit storage, 32-bit cap
#: on anything produced by Frobenius substitution)
EXPONENT_LIMIT = 2**32
PRIME_LIMIT = 2**31


class ExponentOverflowError(ArithmeticError):
    """An exponent would leave the supported range."""


class RingMismatchError(ValueError):
    """Operands live in different polynomial rings."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24 (far above PRIME_LIMIT)."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The prime field F_p."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise TypeError(f"characteristic must be an int, got {self.p!r}")
        if not 2 <= self.p < PRIME_LIMIT:
            raise ValueError(f"characteristic {self.p} outside [2, 2^31)")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def reduce(self, a: int) -> int:
        return a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in F_p")
        return pow(a, self.p - 2, self.p)

    def is_power(self, q: int) -> int:
        """Return e with q == p**e, or -1 if q is not a power of p."""
        if q < 1:
            return -1
        e = 0
        while q % self.p == 0:
            q //= self.p
            e += 1
        return e if q == 1 else -1


# ---------------------------------------------------------------------------
# monomials


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff a | b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b | a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


def monomials_of_degree(nvars: int, degree: int) -> Iterator[Monomial]:
    """All exponent vectors of the given total degree, lex-descending."""
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# orders


def _grevlex_key(m: Monomial) -> Tuple[int, ...]:
    return (sum(m),) + tuple(-e for e in reversed(m))


def _lex_key(m: Monomial) -> Tuple[int, ...]:
    return m


_KEYS = {"grevlex": _grevlex_key, "lex": _lex_key}


@dataclass(frozen=True)
class MonomialOrder:
    """A multiplicative total order on monomials.

    ``kind`` is ``"lex"``, ``"grevlex"`` or ``"block"``.  A block order
    compares the first ``split`` exponents with ``inner[0]`` and breaks ties
    on the remaining ones with ``inner[1]``; any monomial involving a
    front-block variable is larger than every monomial in the back block only.

    ``key(m)`` returns a flat tuple of ints that sorts like the order, which
    is what the Groebner engine uses internally.
    """

    kind: str = "grevlex"
    split: int = 0
    inner: Tuple[str, str] = ("grevlex", "grevlex")

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block":
            if self.split < 0:
                raise ValueError("block split must be non-negative")
            for k in self.inner:
                if k not in _KEYS:
                    raise ValueError(f"unknown inner order {k!r}")

    @classmethod
    def block(cls, split: int, front: str = "grevlex", back: str = "grevlex") -> "MonomialOrder":
        return cls("block", split, (front, back))

    @property
    def key(self) -> Callable[[Monomial], Tuple[int, ...]]:
        if self.kind != "block":
            return _KEYS[self.kind]
        k = self.split
        front, back = _KEYS[self.inner[0]], _KEYS[self.inner[1]]
        return lambda m: front(m[:k]) + back(m[k:])

    def compare(self, a: Monomial, b: Monomial) -> int:
        """-1, 0 or 1 as a <, ==, > b."""
        if len(a) != len(b):
            raise ValueError("monomials have different lengths")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __str__(self) -> str:
        if self.kind == "block":
            return f"block({self.split};{self.inner[0]},{self.inner[1]})"
        return self.kind


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def as_order(order) -> MonomialOrder:
    if isinstance(order, MonomialOrder):
        return order
    return MonomialOrder(order)


# ---------------------------------------------------------------------------
# raw term-map arithmetic (shared with the Groebner engine)


def terms_add(f: Terms, g: Terms, p: int, sign: int = 1) -> Terms:
    out = dict(f)
    for m, c in g.items():
        v = (out.get(m, 0) + sign * c) % p
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def terms_mul(f: Terms, g: Terms, p: int) -> Terms:
    if len(f) > len(g):
        f, g = g, f
    out: Terms = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = tuple(x + y for x, y in zip(m1, m2))
            v = (out.get(m, 0) + c1 * c2) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def terms_scale(f: Terms, c: int, mono: Monomial, p: int) -> Terms:
    c %= p
    if not c:
        return {}
    return {tuple(x + y for x, y in zip(m, mono)): a * c % p for m, a in f.items()}


def terms_max_exponent(f: Terms) -> int:
    return max((max(m, default=0) for m in f), default=0)


def check_exponents(f: Terms) -> None:
    if terms_max_exponent(f) >= EXPONENT_LIMIT:
        raise ExponentOverflowError(f"exponent exceeds 2^32 cap")


# ---------------------------------------------------------------------------
# rings and polynomials


@dataclass(frozen=True)
class PolyRing:
    """The ambient polynomial ring F_p[x_1, ..., x_n]."""

    field: FieldSpec
    variables: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be unique")

    @classmethod
    def create(cls, p: int, variables: Iterable[str] | str) -> "PolyRing":
        if isinstance(variables, str):
            variables = variables.replace(",", " ").split()
        return cls(FieldSpec(p), tuple(variables))

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __call__(self, text) -> "Polynomial":
        if isinstance(text, Polynomial):
            return text
        if isinstance(text, int):
            return self.constant(text)
        from .parsing import parse_polynomial

        return parse_polynomial(text, self)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: int) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: c})

    def monomial(self, exps: Sequence[int], c: int = 1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        return Polynomial(self, {exps: c})

    def gens(self) -> Tuple["Polynomial", ...]:
        n = self.nvars
        return tuple(
            self.monomial(tuple(int(i == j) for j in range(n))) for i in range(n)
        )

    def var(self, name: str) -> "Polynomial":
        return self.gens()[self.variables.index(name)]

    def __str__(self) -> str:
        return f"F_{self.p}[{', '.join(self.variables)}]"


class Polynomial:
    """An element of a :class:`PolyRing` in canonical sparse form."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Terms, _clean: bool = False):
        self.ring = ring
        if not _clean:
            p = ring.p
            clean: Terms = {}
            n = ring.nvars
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != n:
                    raise ValueError("exponent vector has wrong length")
                if any(e < 0 for e in m):
                    raise ValueError("negative exponent")
                c %= p
                if c:
                    clean[m] = c
            check_exponents(clean)
            terms = clean
        self.terms = terms
        self._hash = None

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def constant_coefficient(self) -> int:
        return self.terms.get((0,) * self.ring.nvars, 0)

    def sorted_terms(self, order=GREVLEX) -> list:
        key = as_order(order).key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_monomial(self, order=GREVLEX) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=as_order(order).key)

    def leading_coefficient(self, order=GREVLEX) -> int:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order=GREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        inv = self.ring.field.inv(self.leading_coefficient(order))
        return self * inv

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, terms_add(self.terms, other.terms, self.ring.p), True)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {m: p - c for m, c in self.terms.items()}, True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, terms_add(self.terms, other.terms, self.ring.p, -1), True)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.degree() + other.degree() >= EXPONENT_LIMIT:
            raise ExponentOverflowError("product degree exceeds 2^32 cap")
        return Polynomial(self.ring, terms_mul(self.terms, other.terms, self.ring.p), True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result, base = self.ring.one(), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def frobenius(self, q: int) -> "Polynomial":
        return frobenius_substitute(self, q)

    # -- comparison / display ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def to_string(self, order=GREVLEX) -> str:
        if not self.terms:
            return "0"
        names = self.ring.variables
        parts = []
        for m, c in self.sorted_terms(order):
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.to_string()!r} in {self.ring})"


def poly_arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    """Apply ``op`` in {"add", "sub", "mul"} to two polynomials of one ring."""
    if f.ring != g.ring:
        raise RingMismatchError(f"{f.ring} vs {g.ring}")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def frobenius_substitute(f: Polynomial, q: int) -> Polynomial:
    """Return f**q computed as f(x_1^q, ..., x_n^q).

    Over F_p this is exact whenever q is a power of p, since coefficients
    are fixed by Frobenius and p-th powers are additive.
    """
    if f.ring.field.is_power(q) < 0:
        raise ValueError(f"{q} is not a power of {f.ring.p}")
    if q == 1:
        return f
    if f.terms and terms_max_exponent(f.terms) * q >= EXPONENT_LIMIT:
        raise ExponentOverflowError(
            f"x^{terms_max_exponent(f.terms)} raised to q={q} exceeds 2^32 cap"
        )
    return Polynomial(
        f.ring, {tuple(e * q for e in m): c for m, c in f.terms.items()}, True
    )


def monomial_compare(order: MonomialOrder, a: Monomial, b: Monomial) -> int:
    return as_order(order).compare(tuple(a), tuple(b))
