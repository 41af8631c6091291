"""The characteristic-3 idempotent construction.

Each base-3 digit position u of C(m+2g, g) contributes one factor: the digit
pair ((m+2g)_u, g_u) selects an algebra element supported on b(3^u) and
b(2*3^u) via a fixed six-entry table, and the idempotent for (m, g) is the
product of these factors.  Digit pairs with g_u > (m+2g)_u (exactly the case
C(m+2g, g) = 0 mod 3) map to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .algebra import AlgebraContext, AlgebraElement
from .errors import UnsupportedCharacteristicError
from .padic import big_b, digits, factor_digits, truncate_below, lucas_binom

__all__ = [
    "Factor",
    "IdempotentSpec",
    "factor_element",
    "build",
    "build_prefix",
    "factor_sequence_text",
    "psi",
    "square_closed_form",
    "psi_recursion_check",
]


@dataclass(frozen=True)
class Factor:
    """A digit pair (a, b) = ((m+2g)_u, g_u) of the governing binomial."""

    a: int
    b: int

    @property
    def admissible(self) -> bool:
        return 0 <= self.b <= self.a <= 2

    @property
    def z(self) -> int:
        """Class index: factors with equal a-2b mod 3 form a complementary pair."""
        return (self.a - 2 * self.b) % 3

    @property
    def in_j(self) -> bool:
        """True for the J-side of the class pair (the side with b > 0)."""
        return self.b > 0


@dataclass(frozen=True)
class IdempotentSpec:
    """View of the factor sequence of a candidate idempotent."""

    m: int
    g: int

    @property
    def factors(self) -> list[Factor]:
        return [Factor(a, b) for a, b in factor_digits(self.m, self.g, 3)]

    @property
    def valid(self) -> bool:
        """True iff every factor is admissible, i.e. C(m+2g, g) != 0 mod 3."""
        return big_b(self.m, self.g, 3) != 0


def _require_char3(ctx: AlgebraContext) -> None:
    if ctx.p != 3:
        raise UnsupportedCharacteristicError(
            f"construction is specific to characteristic 3, got p={ctx.p}"
        )


def factor_element(ctx: AlgebraContext, u: int, kind: Factor) -> AlgebraElement:
    """The algebra element assigned to factor u, truncated to the context."""
    _require_char3(ctx)
    one = ctx.one()
    b3 = ctx.basis(3**u)
    b6 = ctx.basis(2 * 3**u)
    table = {
        (0, 0): lambda: one + b3 - b6,
        (2, 1): lambda: b6 - b3,
        (1, 0): lambda: one - b6,
        (2, 2): lambda: b6,
        (2, 0): lambda: one - b3 + b6,
        (1, 1): lambda: b3 - b6,
    }
    entry = table.get((kind.a, kind.b))
    return entry() if entry else ctx.zero()


def _factor_at(pairs: list[tuple[int, int]], u: int) -> Factor:
    return Factor(*pairs[u]) if u < len(pairs) else Factor(0, 0)


def build(ctx: AlgebraContext, g: int) -> AlgebraElement:
    """The idempotent for (ctx.m, g), or zero when it degenerates.

    Zero is returned (not raised) when C(m+2g, g) = 0 mod 3 or g > lambda2,
    matching the convention that such elements vanish.
    """
    _require_char3(ctx)
    m = ctx.m
    if big_b(m, g, 3) == 0:
        return ctx.zero()
    pairs = factor_digits(m, g, 3)
    out = ctx.one()
    u = 0
    # Factors beyond the digit length are (0,0)-type and contribute
    # 1 + b(3^u) - b(2*3^u); they only reduce to 1 once 3^u > lambda2.
    while u < len(pairs) or 3**u <= ctx.lambda2:
        out = out * factor_element(ctx, u, _factor_at(pairs, u))
        u += 1
    return out


def build_prefix(
    ctx: AlgebraContext, g: int, t: int, inclusive: bool = True
) -> AlgebraElement:
    """Product of the factors at digit positions u <= t (or u < t).

    The exclusive prefix at t = 0 is the empty product, i.e. the identity.
    """
    _require_char3(ctx)
    pairs = factor_digits(ctx.m, g, 3)
    stop = t + 1 if inclusive else t
    out = ctx.one()
    for u in range(stop):
        out = out * factor_element(ctx, u, _factor_at(pairs, u))
    return out


def factor_sequence_text(ctx: AlgebraContext, g: int) -> str:
    """The non-trivial factors after truncation, e.g. '(b(1) - b(2))(-b(9))'."""
    _require_char3(ctx)
    pairs = factor_digits(ctx.m, g, 3)
    one = ctx.one()
    parts = []
    u = 0
    while u < len(pairs) or 3**u <= ctx.lambda2:
        elem = factor_element(ctx, u, _factor_at(pairs, u))
        if elem != one:
            parts.append(f"({elem})")
        u += 1
    return "".join(parts) if parts else "1"


def psi(ctx: AlgebraContext, u: int) -> AlgebraElement:
    """The correction element sum_{k=1}^{p^u - 1} C(m_{<u}, p^u - k) b(k).

    Defined at any prime; zero for u = 0 and whenever the low digits of m
    vanish.
    """
    p = ctx.p
    m_low = truncate_below(ctx.m, p, u)
    top = p**u
    coeffs = [0] * ctx.dim
    for k in range(1, min(top - 1, ctx.lambda2) + 1):
        coeffs[k] = lucas_binom(m_low, top - k, p)
    return AlgebraElement(ctx, tuple(coeffs))


def square_closed_form(ctx: AlgebraContext, u: int, which: str) -> AlgebraElement:
    """Closed form for b(3^u)^2 ('b3sq'), b(2*3^u)^2 ('b2sq'), or the mixed
    product b(3^u)b(2*3^u) ('b3b2')."""
    _require_char3(ctx)
    if ctx.lambda2 < 2 * 3**u:
        raise ValueError(
            f"closed forms assume lambda2 >= 2*3^u; got lambda2={ctx.lambda2}, u={u}"
        )
    m_u = digits(ctx.m, 3)[u]
    ps = psi(ctx, u)
    one = ctx.one()
    b3 = ctx.basis(3**u)
    b6 = ctx.basis(2 * 3**u)
    if which == "b3sq":
        return b3 * (comb(m_u + 2, 1) * one + ps) + b6
    if which == "b2sq":
        return b6 * (comb(m_u + 1, 2) * one + comb(m_u + 1, 1) * ps)
    if which == "b3b2":
        return b6 * (2 * comb(m_u, 1) * one - ps)
    raise ValueError(f"unknown closed form {which!r}")


def psi_recursion_check(ctx: AlgebraContext, t: int) -> bool:
    """Check the one-step recursion expressing psi at t through psi at t-1."""
    _require_char3(ctx)
    if t < 1:
        raise ValueError("recursion needs t >= 1")
    m_prev = digits(ctx.m, 3)[t - 1]
    one = ctx.one()
    b3 = ctx.basis(3 ** (t - 1))
    b6 = ctx.basis(2 * 3 ** (t - 1))
    rhs = psi(ctx, t - 1) * (
        comb(m_prev, 2) * one + comb(m_prev, 1) * b3 + b6
    ) + comb(m_prev, 2) * b3 + comb(m_prev, 1) * b6
    return psi(ctx, t) == rhs
