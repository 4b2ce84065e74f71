"""Recurrence derivation and expansion for rational generating functions.

Given f = A(x,t) / B(x,t)^h with B's constant term 1, the coefficient
polynomials of f obey

    P_0 = A_0,    P_k = [k <= m] A_k - sum_{j=1..min(n,k)} B_j P_{k-j}

after the denominator power has been folded in (B^h is again a polynomial
in t with constant term 1).  This module derives that recursion as data,
runs it, and computes the companion identities used for cross-checking:
the inverse sequence Q of 1/B, the numerator convolution that rebuilds P
from Q, and the residual that must vanish identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import BadConstantTerm, NegativeOrder, PowerNotOne
from .poly import RESERVED_VARIABLE, Monomial, Polynomial, add_product_into
from .series import SeriesPrefix

_ZERO = Polynomial.zero()


def _as_trimmed(seq: Sequence[Polynomial], what: str) -> tuple[Polynomial, ...]:
    coeffs = list(seq)
    if not coeffs:
        raise ValueError(f"{what} must have at least one coefficient")
    for p in coeffs:
        if p.mentions(RESERVED_VARIABLE):
            raise ValueError(
                f"{what} coefficients must not mention the series variable"
            )
    while len(coeffs) > 1 and coeffs[-1].is_zero():
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class RationalGF:
    """A(x,..,t) / B(x,..,t)^power in normal form.

    numerator:   A_0..A_m as coefficients of t^j (trailing zeros trimmed;
                 the all-zero numerator [0] is allowed and generates the
                 zero family)
    denominator: B_0..B_n with B_0 = 1 (trailing zeros trimmed)
    power:       h >= 1
    """

    numerator: tuple[Polynomial, ...]
    denominator: tuple[Polynomial, ...]
    power: int = 1

    def __post_init__(self) -> None:
        num = _as_trimmed(self.numerator, "numerator")
        den = _as_trimmed(self.denominator, "denominator")
        if not den[0].is_one():
            raise BadConstantTerm("denominator constant term must be 1")
        if not isinstance(self.power, int) or self.power < 1:
            raise ValueError(f"power must be a positive integer, got {self.power}")
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @property
    def m(self) -> int:
        return len(self.numerator) - 1

    @property
    def n(self) -> int:
        return len(self.denominator) - 1

    def reduced_denominator(self) -> tuple[Polynomial, ...]:
        """The plain denominator after folding in the power."""
        if self.power == 1:
            return self.denominator
        return raise_denominator(self.denominator, self.power)

    def reduced(self) -> RationalGF:
        """The equivalent generating function with power 1."""
        if self.power == 1:
            return self
        return RationalGF(self.numerator, self.reduced_denominator(), 1)


@dataclass(frozen=True)
class Recurrence:
    """The derived recursion as data.

    feedback[j-1] multiplies P_{k-j} on the right-hand side (that is, it
    already carries the minus sign of the denominator coefficient); forcing
    holds A_0..A_m, active only while k <= m.
    """

    order: int
    feedback: tuple[Polynomial, ...]
    forcing: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        if len(self.feedback) != self.order:
            raise ValueError("feedback must have exactly `order` entries")

    @property
    def forcing_cutoff(self) -> int:
        return len(self.forcing) - 1

    def homogeneous_from(self) -> int:
        """Smallest k from which P_k = sum_j feedback_j P_{k-j} holds."""
        return max(self.forcing_cutoff + 1, self.order)

    def expand(self, N: int) -> SeriesPrefix:
        """Run the stored recursion; reproduces the source expansion."""
        if N < 0:
            raise NegativeOrder(f"order must be nonnegative, got {N}")
        m = self.forcing_cutoff
        out: list[Polynomial] = [self.forcing[0]]
        for k in range(1, N + 1):
            acc: dict[Monomial, int] = {}
            if k <= m:
                acc.update(self.forcing[k].items())
            for j in range(1, min(self.order, k) + 1):
                add_product_into(acc, self.feedback[j - 1], out[k - j])
            out.append(Polynomial(acc))
        return SeriesPrefix(out)


def raise_denominator(B: Sequence[Polynomial], h: int) -> tuple[Polynomial, ...]:
    """t-coefficient sequence D_0..D_{h*n} of B^h, with D_0 = 1."""
    if not B or not B[0].is_one():
        raise BadConstantTerm("denominator constant term must be 1")
    if h < 1:
        raise ValueError(f"power must be a positive integer, got {h}")
    result: list[Polynomial] = list(B)
    while len(result) > 1 and result[-1].is_zero():
        result.pop()
    B = tuple(result)
    for _ in range(h - 1):
        out_len = len(result) + len(B) - 1
        acc: list[dict[Monomial, int]] = [{} for _ in range(out_len)]
        for i, p in enumerate(result):
            if p.is_zero():
                continue
            for j, q in enumerate(B):
                add_product_into(acc[i + j], p, q)
        result = [Polynomial(a) for a in acc]
    return tuple(result)


def expand_family(gf: RationalGF, N: int) -> SeriesPrefix:
    """P_0..P_N of the family generated by gf, by the derived recursion."""
    if N < 0:
        raise NegativeOrder(f"order must be nonnegative, got {N}")
    D = gf.reduced_denominator()
    n = len(D) - 1
    A = gf.numerator
    m = gf.m
    out: list[Polynomial] = [A[0]]
    for k in range(1, N + 1):
        acc: dict[Monomial, int] = {}
        if k <= m:
            acc.update(A[k].items())
        for j in range(1, min(n, k) + 1):
            add_product_into(acc, D[j], out[k - j], sign=-1)
        out.append(Polynomial(acc))
    return SeriesPrefix(out)


def expand_inverse(B: Sequence[Polynomial], N: int) -> SeriesPrefix:
    """Q_0..Q_N of 1/B: Q_0 = 1, Q_k = -sum B_j Q_{k-j}."""
    if not B or not B[0].is_one():
        raise BadConstantTerm("denominator constant term must be 1")
    if N < 0:
        raise NegativeOrder(f"order must be nonnegative, got {N}")
    n = len(B) - 1
    out: list[Polynomial] = [Polynomial.one()]
    for k in range(1, N + 1):
        acc: dict[Monomial, int] = {}
        for j in range(1, min(n, k) + 1):
            add_product_into(acc, B[j], out[k - j], sign=-1)
        out.append(Polynomial(acc))
    return SeriesPrefix(out)


def convolve_numerator(A: Sequence[Polynomial], Q: SeriesPrefix) -> SeriesPrefix:
    """Rebuild P from the inverse sequence: P_k = sum_{j<=min(m,k)} A_j Q_{k-j}."""
    m = len(A) - 1
    out: list[Polynomial] = []
    for k in range(Q.order + 1):
        acc: dict[Monomial, int] = {}
        for j in range(min(m, k) + 1):
            add_product_into(acc, A[j], Q[k - j])
        out.append(Polynomial(acc))
    return SeriesPrefix(out)


def identity_residual(gf: RationalGF, N: int) -> SeriesPrefix:
    """Left-minus-right of the double-sum identity; every entry must be 0.

    Returns the residual series rather than a boolean so a failure shows
    exactly which order and which polynomial disagree.
    """
    if gf.power != 1:
        raise PowerNotOne(
            "identity requires power 1; reduce the denominator first"
        )
    if N < 0:
        raise NegativeOrder(f"order must be nonnegative, got {N}")
    A = gf.numerator
    B = gf.denominator
    m, n = gf.m, gf.n
    P = expand_family(gf, N)
    Q = expand_inverse(B, N)
    out: list[Polynomial] = []
    for k in range(N + 1):
        lhs = (A[k] if k <= m else _ZERO) - P[k]
        acc: dict[Monomial, int] = {}
        for j in range(1, min(n, k) + 1):
            for l in range(min(m, k - j) + 1):
                prod: dict[Monomial, int] = {}
                add_product_into(prod, B[j], A[l])
                add_product_into(acc, Polynomial(prod), Q[k - j - l])
        out.append(lhs - Polynomial(acc))
    return SeriesPrefix(out)


def derive_recurrence(gf: RationalGF) -> Recurrence:
    """The recursion descriptor for gf, after denominator-power reduction."""
    D = gf.reduced_denominator()
    order = len(D) - 1
    feedback = tuple(-D[j] for j in range(1, order + 1))
    return Recurrence(order=order, feedback=feedback, forcing=gf.numerator)


def render_recurrence(rec: Recurrence, symbol: str = "P") -> str:
    """Table-style one-liner, e.g. ``P_k = x*P_{k-1} + P_{k-2} (k >= 2); P_0 = 0; P_1 = 1``."""
    from .parser import format_poly

    start = rec.homogeneous_from()
    pieces: list[tuple[str, str]] = []
    for j, coeff in enumerate(rec.feedback, start=1):
        if coeff.is_zero():
            continue
        ref = f"{symbol}_{{k-{j}}}"
        terms = list(coeff.items())
        if len(terms) == 1:
            mono, c = terms[0]
            sign = "-" if c < 0 else "+"
            body = format_poly(Polynomial({mono: abs(c)}))
            pieces.append((sign, ref if body == "1" else f"{body}*{ref}"))
        else:
            pieces.append(("+", f"({format_poly(coeff)})*{ref}"))
    if not pieces:
        rhs = "0"
    else:
        first_sign, first_body = pieces[0]
        rhs = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            rhs += f" {sign} {body}"
    line = f"{symbol}_k = {rhs} (k >= {start})"
    initial = rec.expand(start - 1)  # start >= 1 since forcing is nonempty
    for k in range(start):
        line += f"; {symbol}_{k} = {format_poly(initial[k])}"
    return line
