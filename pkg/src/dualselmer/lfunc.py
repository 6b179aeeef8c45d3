"""Local Euler factors by reduction type, the ordinary unit-root
factorization to p-adic precision, and the symbolic twist data entering the
functional-equation modifying factors."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .curve import (
    Additive,
    Good,
    NonsplitMultiplicative,
    SplitMultiplicative,
    WeierstrassCurve,
    reduction_type,
)
from .errors import NotOrdinary
from .integers import is_prime

DEFAULT_PRECISION = 20


@dataclass(frozen=True)
class PadicApprox:
    """An integer mod p^precision standing in for a p-adic number."""

    p: int
    precision: int
    value: int

    def __post_init__(self):
        if self.precision < 1:
            raise ValueError("precision must be at least 1")
        if not 0 <= self.value < self.p ** self.precision:
            raise ValueError("value must be reduced mod p^precision")

    def is_unit(self) -> bool:
        return self.value % self.p != 0


@dataclass(frozen=True)
class EulerFactor:
    """P_v(E, T) as an integer polynomial of degree <= 2 (low degree first)."""

    q: int
    coeffs: tuple[int, ...]

    def __str__(self):
        names = ("", "T", "T^2")
        parts = []
        for c, name in zip(self.coeffs, names):
            if c == 0:
                continue
            mag = abs(c)
            body = name if mag == 1 and name else f"{mag}{name}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"


def euler_factor(curve: WeierstrassCurve, q: int) -> EulerFactor:
    """1 - a_q T + q T^2 at good primes, 1 -+ T at split/nonsplit
    multiplicative primes, 1 at additive primes."""
    red = reduction_type(curve, q)
    if isinstance(red, Good):
        return EulerFactor(q=q, coeffs=(1, -red.trace, q))
    if isinstance(red, SplitMultiplicative):
        return EulerFactor(q=q, coeffs=(1, -1))
    if isinstance(red, NonsplitMultiplicative):
        return EulerFactor(q=q, coeffs=(1, 1))
    assert isinstance(red, Additive)
    return EulerFactor(q=q, coeffs=(1,))


def unit_root(a_p: int, p: int, precision: int = DEFAULT_PRECISION) -> PadicApprox:
    """The unit root b of x^2 - a_p x + p with b = a_p mod p.

    Newton iteration from x0 = a_p mod p, doubling the working precision
    each step; the derivative 2x - a_p stays a unit because p does not
    divide a_p.
    """
    if not is_prime(p):
        raise NotOrdinary(f"{p} is not prime")
    if a_p % p == 0:
        raise NotOrdinary(f"p = {p} divides a_p = {a_p}")
    if precision < 1:
        raise ValueError("precision must be at least 1")
    prec = 1
    x = a_p % p
    while prec < precision:
        prec = min(2 * prec, precision)
        mod = p ** prec
        deriv_inv = pow((2 * x - a_p) % mod, -1, mod)
        x = (x - (x * x - a_p * x + p) * deriv_inv) % mod
    return PadicApprox(p=p, precision=precision, value=x % p ** precision)


@dataclass(frozen=True)
class TwistProfile:
    """Homology twist data of the local factor module, by prime class.

    P1 entries are cyclotomic twist exponents; P2 entries are Tate-module
    symbols (the module is unramified there, so no exponent collapses it).
    """

    prime_class: str
    entries: tuple[tuple[int, int | str], ...]


_TWIST_TABLE = {
    "P1": ((0, -1), (1, +1)),
    "P2": ((0, "T_p(E)*"), (1, "T_p(E)")),
}


def twist_profile(prime_class: str) -> TwistProfile:
    """Fixed lookup of the degree-0/1 homology twists for P1/P2 primes."""
    try:
        entries = _TWIST_TABLE[prime_class]
    except KeyError:
        raise ValueError(f"prime class must be P1 or P2, not {prime_class!r}")
    return TwistProfile(prime_class=prime_class, entries=entries)


class DeterminantExponents(NamedTuple):
    negative: int
    positive: int
    nontrivial: bool


def determinant_exponent(n1_cyc: int, n2_cyc: int) -> DeterminantExponents:
    """Central-character exponents -+(n1 + 2 n2) of the determinant of the
    local-factor module; the class is nonzero exactly when they differ
    (the cyclotomic character has infinite order)."""
    if n1_cyc < 0 or n2_cyc < 0:
        raise ValueError("counts must be nonnegative")
    weight = n1_cyc + 2 * n2_cyc
    return DeterminantExponents(
        negative=-weight, positive=weight, nontrivial=weight > 0
    )
