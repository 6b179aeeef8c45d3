"""Exact finite-field arithmetic.

Builds F_{q^k} with a canonical modulus, supports quotient-ring extensions of
an already constructed field (towers), solves quadratic equations in every
characteristic without enumeration, and factors polynomials completely via
squarefree decomposition, distinct-degree splitting and seeded
Cantor-Zassenhaus equal-degree splitting.
"""
from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    DegreeOutOfRange,
    FieldTooLarge,
    MixedContexts,
    NotPrime,
    ZeroPolynomial,
)
from .integers import is_prime, prime_factors

ENUMERATION_BOUND = 10 ** 6

# Fixed seed for equal-degree splitting: identical inputs always factor
# through the identical random stream.
_SPLIT_SEED = 0x5E1F1E1D


class FieldContext:
    """An explicit finite field.

    Three construction shapes share one arithmetic core:

    * ``FieldContext(q)`` is the prime field F_q,
    * ``make_field(q, k)`` extends F_q by the canonical degree-k modulus,
    * ``base.extension(g)`` is the quotient ``base[x]/(g)`` for a monic
      irreducible g over an existing context (used for towers such as
      F_{q^f}[x]/(cubic) without re-embedding into a prime-field model).

    Elements are coefficient vectors over the base: plain residues for
    prime-base contexts, FqElement scalars for towers.
    """

    def __init__(self, q, modulus=None, base=None, _checked=False):
        if not _checked:
            if not is_prime(q):
                raise NotPrime(f"{q} is not prime")
            if base is not None and base.q != q:
                raise MixedContexts("extension must keep the characteristic")
        self.q = q
        self.base = base
        self.modulus = None if modulus is None else tuple(modulus)
        if self.modulus is None:
            self.degree = 1
        else:
            self.degree = len(self.modulus) - 1
        self.k = self.degree * (1 if base is None else base.k)
        self.cardinality = q ** self.k
        self._key = (
            q,
            self.k,
            None if self.modulus is None else _scalar_key_tuple(self),
            None if base is None else base._key,
        )
        self._hash = hash(self._key)
        self._nonresidue = None
        self._trace_one = None
        self._lex_scalars = None

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FieldContext):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.base is None and self.modulus is None:
            return f"F_{self.q}"
        return f"F_{self.q}^{self.k}"

    # -- scalar layer (entries of coefficient vectors) ----------------------

    def _szero(self):
        return 0 if self.base is None else self.base.zero()

    def _sone(self):
        return 1 if self.base is None else self.base.one()

    def _sadd(self, a, b):
        if self.base is None:
            return (a + b) % self.q
        return FqElement(self.base, self.base._eadd(a.coeffs, b.coeffs))

    def _ssub(self, a, b):
        if self.base is None:
            return (a - b) % self.q
        return FqElement(self.base, self.base._esub(a.coeffs, b.coeffs))

    def _smul(self, a, b):
        if self.base is None:
            return (a * b) % self.q
        if a is b:
            return FqElement(self.base, self.base._esqr(a.coeffs))
        return FqElement(self.base, self.base._emul(a.coeffs, b.coeffs))

    def _sneg(self, a):
        if self.base is None:
            return (-a) % self.q
        return FqElement(self.base, self.base._eneg(a.coeffs))

    def _sinv(self, a):
        return pow(a, self.q - 2, self.q) if self.base is None else a.inverse()

    def _sis_zero(self, a):
        return a == 0 if self.base is None else a.is_zero()

    def _sembed(self, n):
        return n % self.q if self.base is None else self.base.embed(n)

    def _scardinality(self):
        return self.q if self.base is None else self.base.cardinality

    def _sfrom_index(self, i):
        return i if self.base is None else self.base.from_index(i)

    # -- element layer -------------------------------------------------------

    def zero(self) -> "FqElement":
        return FqElement(self, (self._szero(),) * self.degree)

    def one(self) -> "FqElement":
        return self.embed(1)

    def embed(self, n: int) -> "FqElement":
        """Image of a rational integer."""
        pad = (self._szero(),) * (self.degree - 1)
        return FqElement(self, (self._sembed(n),) + pad)

    def element(self, scalars: Sequence) -> "FqElement":
        """Element from a coefficient vector (low degree first, may be short)."""
        if len(scalars) > self.degree:
            raise ValueError("coefficient vector longer than the field degree")
        if self.base is None:
            vec = [s % self.q for s in scalars]
        else:
            vec = []
            for s in scalars:
                if not isinstance(s, FqElement) or s.field != self.base:
                    raise MixedContexts("scalars must lie in the base field")
                vec.append(s)
        vec += [self._szero()] * (self.degree - len(vec))
        return FqElement(self, tuple(vec))

    def gen(self) -> "FqElement":
        """Residue class of x in base[x]/(modulus)."""
        if self.modulus is None:
            raise ValueError("the prime field has no generator over itself")
        vec = [self._szero()] * self.degree
        vec[1] = self._sone()
        return FqElement(self, tuple(vec))

    def from_index(self, i: int) -> "FqElement":
        """Element number i in [0, cardinality): base-|scalars| digits."""
        sc = self._scardinality()
        vec = []
        for _ in range(self.degree):
            vec.append(self._sfrom_index(i % sc))
            i //= sc
        return FqElement(self, tuple(vec))

    def elements(self) -> Iterator["FqElement"]:
        """All field elements; errors above the enumeration bound."""
        if self.cardinality > ENUMERATION_BOUND:
            raise FieldTooLarge(
                f"cardinality {self.cardinality} exceeds {ENUMERATION_BOUND}"
            )
        scalars = (
            range(self.q) if self.base is None else list(self.base.elements())
        )
        for vec in itertools.product(scalars, repeat=self.degree):
            yield FqElement(self, vec)

    def _lex_element_iter(self) -> Iterator["FqElement"]:
        # Deterministic search order for non-residues / trace-one elements,
        # usable even above the enumeration bound (consumed lazily).
        if self.base is None:
            scalars = range(self.q)
        else:
            if self._lex_scalars is None:
                self._lex_scalars = list(
                    itertools.islice(
                        self.base._lex_element_iter(), self.base.cardinality
                    )
                )
            scalars = self._lex_scalars
        for vec in itertools.product(scalars, repeat=self.degree):
            yield FqElement(self, vec)

    def extension(self, g: "FqPoly") -> "FieldContext":
        """Quotient field self[x]/(g) for monic irreducible g of degree >= 2."""
        if g.field != self:
            raise MixedContexts("modulus must be a polynomial over this field")
        if g.degree < 2:
            raise DegreeOutOfRange("extension degree must be at least 2")
        g = g.monic()
        if not is_irreducible(g):
            raise ValueError("extension modulus must be irreducible")
        return FieldContext(self.q, g.coeffs, self, _checked=True)

    # -- coefficient-vector arithmetic ---------------------------------------

    def _eadd(self, u, v):
        return tuple(self._sadd(a, b) for a, b in zip(u, v))

    def _esub(self, u, v):
        return tuple(self._ssub(a, b) for a, b in zip(u, v))

    def _eneg(self, u):
        return tuple(self._sneg(a) for a in u)

    def _emul(self, u, v):
        n = self.degree
        if n == 1:
            return (self._smul(u[0], v[0]),)
        if u is v:
            return self._esqr(u)
        prod = [self._szero()] * (2 * n - 1)
        for i, a in enumerate(u):
            if self._sis_zero(a):
                continue
            for j, b in enumerate(v):
                prod[i + j] = self._sadd(prod[i + j], self._smul(a, b))
        return self._ereduce(prod)

    def _esqr(self, u):
        # cross terms carry a factor 2, so they vanish in characteristic 2
        n = self.degree
        if n == 1:
            return (self._smul(u[0], u[0]),)
        prod = [self._szero()] * (2 * n - 1)
        for i, a in enumerate(u):
            if self._sis_zero(a):
                continue
            prod[2 * i] = self._sadd(prod[2 * i], self._smul(a, a))
            if self.q != 2:
                for j in range(i + 1, n):
                    b = u[j]
                    if not self._sis_zero(b):
                        t = self._smul(a, b)
                        prod[i + j] = self._sadd(prod[i + j], self._sadd(t, t))
        return self._ereduce(prod)

    def _ereduce(self, prod):
        # reduce in place by the monic modulus
        n = self.degree
        mod = self.modulus
        for i in range(len(prod) - 1, n - 1, -1):
            c = prod[i]
            if not self._sis_zero(c):
                for j in range(n):
                    prod[i - n + j] = self._ssub(
                        prod[i - n + j], self._smul(c, mod[j])
                    )
        return tuple(prod[:n])

    def _einv(self, u):
        if all(self._sis_zero(a) for a in u):
            raise ZeroDivisionError("inverting 0")
        if self.degree == 1:
            return (self._sinv(u[0]),)
        # extended Euclid for u against the modulus, over base scalars
        r0 = list(self.modulus)
        r1 = _ptrim(self, list(u))
        t0: list = []
        t1 = [self._sone()]
        while r1:
            quo, rem = _pdivmod_scalars(self, r0, r1)
            r0, r1 = r1, rem
            t0, t1 = t1, _psub_scalars(self, t0, _pmul_scalars(self, quo, t1))
        c = self._sinv(r0[0])
        out = [self._smul(c, a) for a in t0]
        out += [self._szero()] * (self.degree - len(out))
        return tuple(out[: self.degree])


def _scalar_key_tuple(ctx: FieldContext):
    if ctx.base is None:
        return ctx.modulus
    return tuple(s.lex_key() for s in ctx.modulus)


# scalar-coefficient polynomial helpers used by _einv -------------------------

def _ptrim(ctx, p):
    while p and ctx._sis_zero(p[-1]):
        p.pop()
    return p


def _psub_scalars(ctx, a, b):
    n = max(len(a), len(b))
    a = a + [ctx._szero()] * (n - len(a))
    b = b + [ctx._szero()] * (n - len(b))
    return _ptrim(ctx, [ctx._ssub(x, y) for x, y in zip(a, b)])


def _pmul_scalars(ctx, a, b):
    if not a or not b:
        return []
    out = [ctx._szero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if ctx._sis_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = ctx._sadd(out[i + j], ctx._smul(x, y))
    return _ptrim(ctx, out)


def _pdivmod_scalars(ctx, a, b):
    a = list(a)
    db = len(b) - 1
    inv_lead = ctx._sinv(b[-1])
    quo = [ctx._szero()] * max(len(a) - db, 0)
    while len(a) - 1 >= db:
        c = ctx._smul(a[-1], inv_lead)
        s = len(a) - 1 - db
        if not ctx._sis_zero(c):
            quo[s] = c
            for i in range(db + 1):
                a[s + i] = ctx._ssub(a[s + i], ctx._smul(c, b[i]))
        a.pop()
        _ptrim(ctx, a)
    return _ptrim(ctx, quo), _ptrim(ctx, a)


@dataclass(frozen=True, slots=True)
class FqElement:
    """An element of a FieldContext: a fully reduced coefficient vector."""

    field: FieldContext
    coeffs: tuple

    def _peer(self, other) -> "FqElement":
        if not isinstance(other, FqElement):
            raise TypeError(f"cannot combine FqElement with {type(other).__name__}")
        if other.field != self.field:
            raise MixedContexts("operands live in different fields")
        return other

    def __add__(self, other):
        other = self._peer(other)
        return FqElement(self.field, self.field._eadd(self.coeffs, other.coeffs))

    def __sub__(self, other):
        other = self._peer(other)
        return FqElement(self.field, self.field._esub(self.coeffs, other.coeffs))

    def __neg__(self):
        return FqElement(self.field, self.field._eneg(self.coeffs))

    def __mul__(self, other):
        if other is self:
            return FqElement(self.field, self.field._esqr(self.coeffs))
        other = self._peer(other)
        return FqElement(self.field, self.field._emul(self.coeffs, other.coeffs))

    def __truediv__(self, other):
        return self * self._peer(other).inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FqElement":
        return FqElement(self.field, self.field._einv(self.coeffs))

    def is_zero(self) -> bool:
        return all(self.field._sis_zero(a) for a in self.coeffs)

    def lex_key(self) -> tuple:
        """Flattened integer tuple; a total order on elements of one field."""
        if self.field.base is None:
            return self.coeffs
        return tuple(s.lex_key() for s in self.coeffs)

    def __repr__(self):
        return f"Fq({self.lex_key()} in {self.field!r})"


@dataclass(frozen=True)
class FqPoly:
    """Polynomial over a FieldContext, coefficients low degree first.

    The empty coefficient vector is the zero polynomial; otherwise the top
    coefficient is nonzero.
    """

    field: FieldContext
    coeffs: tuple[FqElement, ...]

    def __post_init__(self):
        coeffs = self.coeffs
        for c in coeffs:
            if c.field != self.field:
                raise MixedContexts("coefficient outside the polynomial's field")
        while coeffs and coeffs[-1].is_zero():
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_ints(cls, field: FieldContext, ints: Sequence[int]) -> "FqPoly":
        return cls(field, tuple(field.embed(c) for c in ints))

    @classmethod
    def x(cls, field: FieldContext) -> "FqPoly":
        return cls(field, (field.zero(), field.one()))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> FqElement:
        if self.is_zero():
            raise ZeroPolynomial("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "FqPoly":
        if self.is_zero():
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        lead = self.leading
        if lead == self.field.one():
            return self
        inv = lead.inverse()
        return FqPoly(self.field, tuple(c * inv for c in self.coeffs))

    def __add__(self, other: "FqPoly") -> "FqPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return FqPoly(self.field, tuple(out))

    def __sub__(self, other: "FqPoly") -> "FqPoly":
        return self + (-other)

    def __neg__(self) -> "FqPoly":
        return FqPoly(self.field, tuple(-c for c in self.coeffs))

    def __mul__(self, other: "FqPoly") -> "FqPoly":
        if self.is_zero() or other.is_zero():
            return FqPoly(self.field, ())
        zero = self.field.zero()
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return FqPoly(self.field, tuple(out))

    def scale(self, c: FqElement) -> "FqPoly":
        return FqPoly(self.field, tuple(a * c for a in self.coeffs))

    def __divmod__(self, other: "FqPoly") -> tuple["FqPoly", "FqPoly"]:
        if other.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
        field = self.field
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = other.leading.inverse()
        quo = [field.zero()] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db:
            c = rem[-1] * inv_lead
            s = len(rem) - 1 - db
            if not c.is_zero():
                quo[s] = c
                for i in range(db + 1):
                    rem[s + i] = rem[s + i] - c * other.coeffs[i]
            rem.pop()
            while rem and rem[-1].is_zero():
                rem.pop()
        return FqPoly(field, tuple(quo)), FqPoly(field, tuple(rem))

    def __floordiv__(self, other: "FqPoly") -> "FqPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "FqPoly") -> "FqPoly":
        return divmod(self, other)[1]

    def derivative(self) -> "FqPoly":
        field = self.field
        return FqPoly(
            field,
            tuple(
                field.embed(i) * c for i, c in enumerate(self.coeffs) if i >= 1
            ),
        )

    def evaluate(self, x: FqElement) -> FqElement:
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def pow_mod(self, e: int, mod: "FqPoly") -> "FqPoly":
        result = FqPoly.from_ints(self.field, (1,)) % mod
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    def lex_key(self) -> tuple:
        return (self.degree, tuple(c.lex_key() for c in self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "FqPoly(0)"
        return f"FqPoly(deg {self.degree} over {self.field!r})"


def poly_gcd(a: FqPoly, b: FqPoly) -> FqPoly:
    """Monic greatest common divisor."""
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()


@functools.lru_cache(maxsize=None)
def make_field(q: int, k: int) -> FieldContext:
    """F_{q^k} with the canonical modulus.

    The modulus is the first monic irreducible degree-k polynomial in the
    base-q encoding order of the lower coefficient vector (so x^4 + x + 1
    for F_{2^4}), fixed once and for all to keep factor orderings stable.
    """
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    if k < 1:
        raise DegreeOutOfRange(f"extension degree {k} < 1")
    if q ** k > ENUMERATION_BOUND:
        raise DegreeOutOfRange(
            f"cardinality {q}^{k} exceeds the enumeration bound {ENUMERATION_BOUND}"
        )
    prime = FieldContext(q, _checked=True)
    if k == 1:
        return prime
    for idx in range(q ** k):
        low = []
        i = idx
        for _ in range(k):
            low.append(i % q)
            i //= q
        candidate = FqPoly.from_ints(prime, low + [1])
        if is_irreducible(candidate):
            return FieldContext(
                q, tuple(c.coeffs[0] for c in candidate.coeffs), None, _checked=True
            )
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


def is_irreducible(f: FqPoly) -> bool:
    """Irreducibility over the coefficient field, by the x^(Q^d) criterion:
    f of degree n is irreducible iff x^(Q^n) = x mod f and
    gcd(x^(Q^(n/r)) - x, f) = 1 for every prime r | n."""
    if f.is_zero():
        raise ZeroPolynomial("irreducibility of the zero polynomial is undefined")
    n = f.degree
    if n == 0:
        return False
    if n == 1:
        return True
    f = f.monic()
    Q = f.field.cardinality
    x = FqPoly.x(f.field)
    if x.pow_mod(Q ** n, f) != x % f:
        return False
    for r in prime_factors(n):
        h = x.pow_mod(Q ** (n // r), f) - x
        if poly_gcd(h, f).degree != 0:
            return False
    return True


# -- quadratic equations -------------------------------------------------------


def count_quadratic_roots(
    beta: FqElement, gamma: FqElement
) -> tuple[int, tuple[FqElement, ...]]:
    """Solutions y of y^2 + beta*y + gamma = 0 in the common field.

    Odd characteristic uses the quadratic character of beta^2 - 4*gamma and
    Tonelli-Shanks for the square root.  Characteristic 2: beta = 0 has the
    single root gamma^(2^(k-1)) (squaring is bijective); beta != 0 has two
    roots exactly when the absolute trace of gamma/beta^2 vanishes, found via
    a trace-one element without any enumeration of the field.
    """
    if beta.field != gamma.field:
        raise MixedContexts("beta and gamma live in different fields")
    field = beta.field
    if field.q == 2:
        return _quadratic_char2(field, beta, gamma)
    return _quadratic_odd(field, beta, gamma)


def _quadratic_odd(field, beta, gamma):
    disc = beta * beta - field.embed(4) * gamma
    inv2 = field.embed(2).inverse()
    if disc.is_zero():
        return 1, (-beta * inv2,)
    if quadratic_character(disc) != 1:
        return 0, ()
    s = sqrt_element(disc)
    roots = sorted(((-beta + s) * inv2, (-beta - s) * inv2), key=FqElement.lex_key)
    return 2, tuple(roots)


def _quadratic_char2(field, beta, gamma):
    n = field.k
    if beta.is_zero():
        root = gamma
        for _ in range(n - 1):
            root = root * root
        return 1, (root,)
    c = gamma * (beta * beta).inverse()
    tr = c
    frob = c
    for _ in range(n - 1):
        frob = frob * frob
        tr = tr + frob
    if not tr.is_zero():
        return 0, ()
    theta = _trace_one_element(field)
    # z with z^2 + z = c: z = sum_{j=1}^{n-1} (sum_{i<j} c^(2^i)) theta^(2^j)
    z = field.zero()
    partial = field.zero()
    cpow = c
    tpow = theta
    for _ in range(1, n):
        partial = partial + cpow
        cpow = cpow * cpow
        tpow = tpow * tpow
        z = z + partial * tpow
    y1 = beta * z
    roots = sorted((y1, y1 + beta), key=FqElement.lex_key)
    return 2, tuple(roots)


def _trace_one_element(field):
    if field._trace_one is None:
        for cand in field._lex_element_iter():
            tr = cand
            frob = cand
            for _ in range(field.k - 1):
                frob = frob * frob
                tr = tr + frob
            if tr == field.one():
                field._trace_one = cand
                break
    return field._trace_one


def quadratic_character(a: FqElement) -> int:
    """+1 for nonzero squares, -1 for non-squares, 0 for zero (odd char)."""
    if a.is_zero():
        return 0
    e = a ** ((a.field.cardinality - 1) // 2)
    return 1 if e == a.field.one() else -1


def _first_nonresidue(field):
    if field._nonresidue is None:
        for cand in field._lex_element_iter():
            if not cand.is_zero() and quadratic_character(cand) == -1:
                field._nonresidue = cand
                break
    return field._nonresidue


def sqrt_element(a: FqElement) -> FqElement:
    """A square root of a known square, by Tonelli-Shanks (odd cardinality)."""
    field = a.field
    if a.is_zero():
        return a
    Q = field.cardinality
    t = Q - 1
    e = 0
    while t % 2 == 0:
        t //= 2
        e += 1
    if e == 1:
        return a ** ((Q + 1) // 4)
    z = _first_nonresidue(field) ** t
    x = a ** ((t + 1) // 2)
    b = a ** t
    while b != field.one():
        m = 0
        probe = b
        while probe != field.one():
            probe = probe * probe
            m += 1
        g = z
        for _ in range(e - m - 1):
            g = g * g
        x = x * g
        z = g * g
        b = b * z
        e = m
    return x


# -- factorization --------------------------------------------------------------


def poly_factor(f: FqPoly) -> tuple[tuple[FqPoly, int], ...]:
    """Complete factorization into monic irreducibles with multiplicities.

    Pipeline: squarefree decomposition (with q-th root extraction in
    characteristic q), distinct-degree splitting, then Cantor-Zassenhaus
    equal-degree splitting driven by a fixed-seed random stream.  The result
    is sorted by (degree, coefficient order) and multiplying the factors back
    together with f's leading coefficient reproduces f exactly.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if f.degree == 0:
        return ()
    rng = random.Random(_SPLIT_SEED)
    collected: dict[FqPoly, int] = {}
    for part, mult in _squarefree_parts(f.monic()):
        for d, product in _distinct_degree_parts(part):
            for irreducible in _equal_degree_split(product, d, rng):
                collected[irreducible] = collected.get(irreducible, 0) + mult
    return tuple(sorted(collected.items(), key=lambda kv: kv[0].lex_key()))


def _squarefree_parts(f: FqPoly) -> list[tuple[FqPoly, int]]:
    # classical characteristic-q decomposition; f monic
    field = f.field
    out: list[tuple[FqPoly, int]] = []
    c = poly_gcd(f, f.derivative())
    w = f // c
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, c)
        z = w // y
        if z.degree > 0:
            out.append((z, i))
        w = y
        c = c // y
        i += 1
    if c.degree > 0:
        # c is a polynomial in x^q; extract its q-th root and recurse
        out.extend(
            (g, mult * field.q) for g, mult in _squarefree_parts(_qth_root(c))
        )
    return out


def _qth_root(f: FqPoly) -> FqPoly:
    field = f.field
    q = field.q
    frob_inv = field.cardinality // q  # a -> a^(q^(k-1)) inverts x -> x^q
    root = []
    for i, c in enumerate(f.coeffs):
        if i % q == 0:
            root.append(c ** frob_inv)
        elif not c.is_zero():
            raise AssertionError("polynomial expected to be a q-th power")
    return FqPoly(field, tuple(root))


def _distinct_degree_parts(f: FqPoly) -> list[tuple[int, FqPoly]]:
    # f monic squarefree; returns (d, product of all irreducible factors of
    # degree d)
    Q = f.field.cardinality
    out = []
    x = FqPoly.x(f.field)
    h = x % f
    d = 0
    while f.degree > 0:
        d += 1
        if 2 * d > f.degree:
            out.append((f.degree, f))
            break
        h = h.pow_mod(Q, f)
        g = poly_gcd(h - x, f)
        if g.degree > 0:
            out.append((d, g))
            f = f // g
            h = h % f
    return out


def _equal_degree_split(f: FqPoly, d: int, rng: random.Random) -> list[FqPoly]:
    # f monic, all irreducible factors of degree d
    if f.degree == d:
        return [f]
    field = f.field
    Q = field.cardinality
    one = FqPoly.from_ints(field, (1,))
    while True:
        r = FqPoly(
            field,
            tuple(field.from_index(rng.randrange(Q)) for _ in range(f.degree)),
        )
        if r.degree < 1:
            continue
        if field.q == 2:
            # trace map of the residue fields F_{2^(k*d)} down to F_2
            acc = r % f
            term = acc
            for _ in range(d * field.k - 1):
                term = (term * term) % f
                acc = acc + term
            g = poly_gcd(acc, f)
        else:
            g = poly_gcd(r.pow_mod((Q ** d - 1) // 2, f) - one, f)
        if 0 < g.degree < f.degree:
            return _equal_degree_split(g, d, rng) + _equal_degree_split(
                (f // g).monic(), d, rng
            )
