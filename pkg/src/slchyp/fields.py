"""Exact coefficient fields: the rationals and finite fields F_{p^n}.

A FieldContext is an immutable description of the ambient field.  Finite
fields of extension degree n > 1 are represented as F_p[t]/(M) for a monic
irreducible modulus M; elements are coefficient vectors of length n with
entries in [0, p).  Rational elements wrap fractions.Fraction, which keeps
them reduced with a positive denominator.

Nothing here mutates after construction, so contexts and elements can be
shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Tuple, Union


class NeedsAlgebraicExtension(Exception):
    """A required root is unavailable in the current field.

    Over the rationals no algebraic extension is ever constructed; the
    offending univariate polynomial travels with the exception so callers
    can report which root was missing.
    """

    def __init__(self, message: str, polynomial: object = None) -> None:
        super().__init__(message)
        self.polynomial = polynomial


class CoefficientError(ValueError):
    """A literal coefficient does not define an element of the field."""


_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3e24, far beyond desk scale)."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
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


# ---------------------------------------------------------------------------
# dense F_p[t] helpers on int tuples (low degree first), used for modulus
# arithmetic inside extension fields and for irreducibility testing


def _ptrim(v: list) -> list:
    while v and v[-1] == 0:
        v.pop()
    return v


def _padd(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _ptrim(out)


def _psub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _ptrim(out)


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _ptrim(out)


def _pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        c = a[-1] * inv_lead % p
        q[k] = c
        for i, cb in enumerate(b):
            a[i + k] = (a[i + k] - c * cb) % p
        _ptrim(a)
    return _ptrim(q), a


def _pmod(a, b, p):
    return _pdivmod(a, b, p)[1]


def _pgcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _ppowmod(base, e: int, mod, p):
    result = [1]
    base = _pmod(base, mod, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), mod, p)
        base = _pmod(_pmul(base, base, p), mod, p)
        e >>= 1
    return result


def _prime_factors(n: int) -> list:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def poly_is_irreducible(coeffs: Tuple[int, ...], p: int) -> bool:
    """Rabin irreducibility test for a monic polynomial over F_p."""
    d = len(coeffs) - 1
    if d < 1:
        return False
    mod = list(coeffs)
    t = [0, 1]
    # t^(p^d) == t (mod M)
    h = t
    for _ in range(d):
        h = _ppowmod(h, p, mod, p)
    if _ptrim(_psub(h, t, p)):
        return False
    for r in _prime_factors(d):
        h = t
        for _ in range(d // r):
            h = _ppowmod(h, p, mod, p)
        if len(_pgcd(_psub(h, t, p), mod, p)) != 1:
            return False
    return True


def canonical_irreducible(p: int, d: int) -> Tuple[int, ...]:
    """First monic irreducible of degree d over F_p in the canonical scan order.

    Candidates t^d + c_{d-1} t^{d-1} + ... + c_0 are enumerated with
    (c_0, ..., c_{d-1}) running through base-p counter order, so the choice
    is reproducible across runs and machines.
    """
    if d == 1:
        return (0, 1)
    k = 0
    while True:
        digits = []
        kk = k
        for _ in range(d):
            digits.append(kk % p)
            kk //= p
        if kk:
            raise RuntimeError("no irreducible found")  # unreachable
        cand = tuple(digits) + (1,)
        if poly_is_irreducible(cand, p):
            return cand
        k += 1


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldContext:
    """Ambient field: Q (characteristic 0) or F_{p^n}."""

    characteristic: int
    extension_degree: int = 1
    modulus: Optional[Tuple[int, ...]] = None  # monic, length n+1, over F_p

    def __post_init__(self):
        p, n = self.characteristic, self.extension_degree
        if p == 0:
            if n != 1 or self.modulus is not None:
                raise ValueError("rational context has degree 1 and no modulus")
            return
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if n < 1:
            raise ValueError("extension degree must be >= 1")
        if n == 1:
            if self.modulus is not None:
                raise ValueError("degree-1 context uses the identity convention")
        else:
            m = self.modulus
            if m is None or len(m) != n + 1 or m[-1] != 1:
                raise ValueError("modulus must be monic of degree n")
            if any(not (0 <= c < p) for c in m):
                raise ValueError("modulus coefficients must lie in [0, p)")

    @property
    def kind(self) -> str:
        return "rationals" if self.characteristic == 0 else "finite"

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def order(self) -> Optional[int]:
        """Field size, or None for the rationals."""
        if self.is_rational:
            return None
        return self.characteristic ** self.extension_degree

    # -- element constructors -------------------------------------------

    def zero(self) -> "FieldElement":
        return self.from_int(0)

    def one(self) -> "FieldElement":
        return self.from_int(1)

    def from_int(self, k: int) -> "FieldElement":
        if self.is_rational:
            return FieldElement(self, Fraction(k))
        p, n = self.characteristic, self.extension_degree
        vec = (k % p,) + (0,) * (n - 1)
        return FieldElement(self, vec)

    def from_fraction(self, num: int, den: int) -> "FieldElement":
        if den == 0:
            raise CoefficientError("zero denominator")
        if self.is_rational:
            return FieldElement(self, Fraction(num, den))
        p = self.characteristic
        if den % p == 0:
            raise CoefficientError(
                f"denominator {den} is divisible by the characteristic {p}"
            )
        return self.from_int(num) / self.from_int(den)

    def from_vector(self, vec) -> "FieldElement":
        if self.is_rational:
            raise ValueError("vector elements exist only in finite contexts")
        p, n = self.characteristic, self.extension_degree
        vec = tuple(c % p for c in vec)
        if len(vec) > n:
            if any(vec[n:]):
                raise ValueError("vector longer than extension degree")
            vec = vec[:n]
        vec = vec + (0,) * (n - len(vec))
        return FieldElement(self, vec)

    def generator(self) -> "FieldElement":
        """The residue of t in F_p[t]/(M); only for extension degree > 1."""
        if self.is_rational or self.extension_degree == 1:
            raise ValueError("no generator in a prime or rational context")
        return self.from_vector((0, 1))

    def elements(self) -> Iterator["FieldElement"]:
        """All field elements in canonical (lexicographic vector) order."""
        if self.is_rational:
            raise ValueError("cannot enumerate the rationals")
        p, n = self.characteristic, self.extension_degree

        def rec(prefix):
            if len(prefix) == n:
                yield FieldElement(self, tuple(prefix))
                return
            for c in range(p):
                yield from rec(prefix + [c])

        yield from rec([])


Payload = Union[Fraction, Tuple[int, ...]]


@dataclass(frozen=True)
class FieldElement:
    """A value of a FieldContext; rationals carry a Fraction, finite fields
    a coefficient vector over F_p."""

    context: FieldContext
    payload: Payload

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        if self.context.is_rational:
            return self.payload == 0
        return not any(self.payload)

    def is_one(self) -> bool:
        if self.context.is_rational:
            return self.payload == 1
        return self.payload[0] == 1 and not any(self.payload[1:])

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: "FieldElement") -> None:
        if self.context != other.context:
            raise ValueError("field context mismatch")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        ctx = self.context
        if ctx.is_rational:
            return FieldElement(ctx, self.payload + other.payload)
        p = ctx.characteristic
        vec = tuple((a + b) % p for a, b in zip(self.payload, other.payload))
        return FieldElement(ctx, vec)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        ctx = self.context
        if ctx.is_rational:
            return FieldElement(ctx, self.payload - other.payload)
        p = ctx.characteristic
        vec = tuple((a - b) % p for a, b in zip(self.payload, other.payload))
        return FieldElement(ctx, vec)

    def __neg__(self) -> "FieldElement":
        ctx = self.context
        if ctx.is_rational:
            return FieldElement(ctx, -self.payload)
        p = ctx.characteristic
        return FieldElement(ctx, tuple((-a) % p for a in self.payload))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        ctx = self.context
        if ctx.is_rational:
            return FieldElement(ctx, self.payload * other.payload)
        p, n = ctx.characteristic, ctx.extension_degree
        if n == 1:
            return FieldElement(ctx, (self.payload[0] * other.payload[0] % p,))
        prod = _pmul(list(self.payload), list(other.payload), p)
        rem = _pmod(prod, list(ctx.modulus), p)
        rem = rem + [0] * (n - len(rem))
        return FieldElement(ctx, tuple(rem))

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        ctx = self.context
        if ctx.is_rational:
            return FieldElement(ctx, 1 / self.payload)
        p, n = ctx.characteristic, ctx.extension_degree
        if n == 1:
            return FieldElement(ctx, (pow(self.payload[0], p - 2, p),))
        # extended Euclid in F_p[t] against the modulus
        r0, r1 = list(ctx.modulus), _ptrim(list(self.payload))
        s0, s1 = [], [1]
        while r1:
            q, r = _pdivmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
        inv_lead = pow(r0[-1], p - 2, p)
        s0 = [c * inv_lead % p for c in s0]
        s0 = s0 + [0] * (n - len(s0))
        return FieldElement(ctx, tuple(s0[:n]))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inverse() ** (-e)
        result = self.context.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def pth_root(self) -> "FieldElement":
        """Unique p-th root in a finite field (inverse Frobenius)."""
        ctx = self.context
        if ctx.is_rational:
            raise ValueError("pth_root needs positive characteristic")
        q = ctx.order()
        return self ** (q // ctx.characteristic)

    # -- ordering / display ----------------------------------------------

    def sort_key(self):
        """Canonical total order: coefficient-vector lexicographic order for
        finite fields; (|x|, nonnegative-first) for rationals."""
        if self.context.is_rational:
            return (abs(self.payload), 0 if self.payload >= 0 else 1)
        return self.payload

    def __str__(self) -> str:
        ctx = self.context
        if ctx.is_rational:
            return str(self.payload)
        if ctx.extension_degree == 1:
            return str(self.payload[0])
        parts = []
        for i, c in enumerate(self.payload):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                parts.append(f"{head}u" if i == 1 else f"{head}u^{i}")
        return "+".join(parts) if parts else "0"

    def to_json(self):
        if self.context.is_rational:
            fr: Fraction = self.payload
            return str(fr)
        return list(self.payload)


RATIONALS = FieldContext(0)


def prime_field(p: int) -> FieldContext:
    return FieldContext(p)


def extension_field(p: int, degree: int) -> FieldContext:
    if degree == 1:
        return FieldContext(p)
    return FieldContext(p, degree, canonical_irreducible(p, degree))


@dataclass(frozen=True)
class FieldEmbedding:
    """Field homomorphism F_{p^n} -> F_{p^m} (n | m) fixing the prime field,
    determined by the image of the source generator."""

    source: FieldContext
    target: FieldContext
    generator_image: Optional[FieldElement]  # None when source has degree 1

    def __call__(self, elt: FieldElement) -> FieldElement:
        if elt.context != self.source:
            raise ValueError("element does not belong to the embedding source")
        if self.source == self.target:
            return elt
        if self.source.is_rational:
            return elt
        if self.source.extension_degree == 1:
            return self.target.from_int(elt.payload[0])
        out = self.target.zero()
        g = self.generator_image
        power = self.target.one()
        for c in elt.payload:
            out = out + self.target.from_int(c) * power
            power = power * g
        return out

    def compose(self, outer: "FieldEmbedding") -> "FieldEmbedding":
        """outer o self (self first, then outer)."""
        if self.target != outer.source:
            raise ValueError("embeddings do not compose")
        if self.source.is_rational or self.source.extension_degree == 1:
            return FieldEmbedding(self.source, outer.target, None)
        return FieldEmbedding(
            self.source, outer.target, outer(self.generator_image)
        )


def identity_embedding(ctx: FieldContext) -> FieldEmbedding:
    gen = None
    if not ctx.is_rational and ctx.extension_degree > 1:
        gen = ctx.generator()
    return FieldEmbedding(ctx, ctx, gen)
