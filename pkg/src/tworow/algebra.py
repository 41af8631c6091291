"""The commutative endomorphism algebra of a two-row permutation module.

For a two-row partition (lambda1, lambda2) the algebra has canonical basis
b(0), ..., b(lambda2) over Z/p, with b(0) the identity and

    b(i)b(j) = sum_{h=max(i,j)}^{i+j} C(h,i) C(h,j) C(m+i+j, i+j-h) b(h),

where m = lambda1 - lambda2 and b(a) = 0 for a > lambda2.  Only m enters the
structure constants; lambda2 sets the truncation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .errors import ContextMismatchError
from .padic import _require_prime, lucas_binom

__all__ = [
    "AlgebraContext",
    "AlgebraElement",
    "basis_elem",
    "structure_constant",
    "mul",
]

# Contexts whose dense structure tensor would exceed this many cells fall back
# to the row-based multiply (memory gate, not a correctness switch).
_TENSOR_CELL_LIMIT = 2**21


def _pascal_mod(n: int, p: int) -> np.ndarray:
    """(n+1) x (n+1) table of C(a, b) mod p, zeros above the diagonal."""
    table = np.zeros((n + 1, n + 1), dtype=np.int64)
    table[:, 0] = 1
    for a in range(1, n + 1):
        table[a, 1 : a + 1] = (table[a - 1, 1 : a + 1] + table[a - 1, 0:a]) % p
    return table


@dataclass(frozen=True)
class AlgebraContext:
    """A two-row partition together with the prime of the ground field."""

    lambda1: int
    lambda2: int
    p: int

    def __post_init__(self):
        if not (self.lambda1 >= self.lambda2 >= 0):
            raise ValueError(
                f"({self.lambda1},{self.lambda2}) is not a two-row partition"
            )
        _require_prime(self.p)

    @property
    def m(self) -> int:
        return self.lambda1 - self.lambda2

    @property
    def r(self) -> int:
        return self.lambda1 + self.lambda2

    @property
    def dim(self) -> int:
        return self.lambda2 + 1

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, (0,) * self.dim)

    def one(self) -> "AlgebraElement":
        return self.basis(0)

    def basis(self, i: int) -> "AlgebraElement":
        """b(i), or the zero element when i > lambda2 (truncation rule)."""
        if i < 0:
            raise ValueError(f"basis index {i} is negative")
        coeffs = [0] * self.dim
        if i <= self.lambda2:
            coeffs[i] = 1
        return AlgebraElement(self, tuple(coeffs))

    def from_coeffs(self, coeffs) -> "AlgebraElement":
        """Element with the given coefficients (length lambda2+1), reduced mod p."""
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) != self.dim:
            raise ValueError(
                f"expected {self.dim} coefficients, got {len(coeffs)}"
            )
        return AlgebraElement(self, coeffs)

    @cached_property
    def _tensor(self) -> np.ndarray | None:
        """Structure tensor T[i, j, h] mod p, or None when too large to hold."""
        d = self.dim
        if d**3 > _TENSOR_CELL_LIMIT:
            return None
        p = self.p
        pascal = _pascal_mod(self.lambda2, p)
        # C(m+s, k) for s = i+j and k = i+j-h; m can be huge, so go via Lucas.
        mixed = np.array(
            [
                [lucas_binom(self.m + s, k, p) for k in range(d)]
                for s in range(2 * self.lambda2 + 1)
            ],
            dtype=np.int64,
        )
        I, J, H = np.indices((d, d, d))
        S = I + J
        K = S - H
        valid = (H >= np.maximum(I, J)) & (K >= 0)
        K = np.where(valid, K, 0)
        T = pascal[H, I] * pascal[H, J] % p * mixed[S, K] % p
        T[~valid] = 0
        return T


@lru_cache(maxsize=262144)
def _basis_row(p: int, m: int, i: int, j: int) -> tuple[int, ...]:
    """Coefficients of b(i)b(j) for h = max(i,j), ..., i+j, untruncated."""
    return tuple(
        lucas_binom(h, i, p) * lucas_binom(h, j, p) * lucas_binom(m + i + j, i + j - h, p) % p
        for h in range(max(i, j), i + j + 1)
    )


def structure_constant(ctx: AlgebraContext, i: int, j: int, h: int) -> int:
    """The coefficient of b(h) in b(i)b(j), as a residue in [0, p-1]."""
    if not (max(i, j) <= h <= i + j):
        raise ValueError(
            f"h={h} outside the support range [{max(i, j)}, {i + j}] of b({i})b({j})"
        )
    p = ctx.p
    return (
        lucas_binom(h, i, p)
        * lucas_binom(h, j, p)
        * lucas_binom(ctx.m + i + j, i + j - h, p)
        % p
    )


@dataclass(frozen=True)
class AlgebraElement:
    """A linear combination of the canonical basis, as a dense residue vector."""

    context: AlgebraContext
    coeffs: tuple[int, ...]

    def _same_context(self, other: "AlgebraElement") -> AlgebraContext:
        if self.context != other.context:
            raise ContextMismatchError(
                f"cannot combine elements of {self.context} and {other.context}"
            )
        return self.context

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        ctx = self._same_context(other)
        return AlgebraElement(
            ctx, tuple((a + b) % ctx.p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        ctx = self._same_context(other)
        return AlgebraElement(
            ctx, tuple((a - b) % ctx.p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "AlgebraElement":
        return self.scale(-1)

    def scale(self, c: int) -> "AlgebraElement":
        p = self.context.p
        return AlgebraElement(self.context, tuple(c * a % p for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> list[int]:
        """Indices with non-zero coefficient, ascending."""
        return [i for i, c in enumerate(self.coeffs) if c]

    def support_min(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def support_max(self) -> int | None:
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return None

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def to_json(self) -> dict:
        ctx = self.context
        return {
            "lambda": [ctx.lambda1, ctx.lambda2],
            "p": ctx.p,
            "coeffs": list(self.coeffs),
        }

    @staticmethod
    def from_json(data: dict) -> "AlgebraElement":
        l1, l2 = data["lambda"]
        ctx = AlgebraContext(l1, l2, data["p"])
        return ctx.from_coeffs(data["coeffs"])

    def __str__(self) -> str:
        """Signed-coefficient polynomial in the b(i), e.g. '1 + b(1) - b(2)'."""
        p = self.context.p
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            signed = c if c <= p // 2 else c - p
            mag, neg = abs(signed), signed < 0
            term = "1" if i == 0 else f"b({i})"
            if mag != 1:
                term = f"{mag}*{term}"
            if not parts:
                parts.append(f"-{term}" if neg else term)
            else:
                parts.append(f"- {term}" if neg else f"+ {term}")
        return " ".join(parts) if parts else "0"


def basis_elem(ctx: AlgebraContext, i: int) -> AlgebraElement:
    """b(i) in the given context; zero when i exceeds lambda2."""
    return ctx.basis(i)


def mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Product in the algebra, truncating basis indices above lambda2."""
    ctx = x._same_context(y)
    p, lam2 = ctx.p, ctx.lambda2
    tensor = ctx._tensor
    if tensor is not None:
        # Contract over the sparser operand's support.
        if len(y.support()) < len(x.support()):
            x, y = y, x
        yv = np.asarray(y.coeffs, dtype=np.int64)
        acc = np.zeros(ctx.dim, dtype=np.int64)
        for i in x.support():
            acc += x.coeffs[i] * (yv @ tensor[i])
        return AlgebraElement(ctx, tuple(int(c) for c in acc % p))

    acc = [0] * ctx.dim
    m = ctx.m
    for i in x.support():
        ci = x.coeffs[i]
        for j in y.support():
            c = ci * y.coeffs[j] % p
            lo = max(i, j)
            row = _basis_row(p, m, i, j)
            for off in range(min(len(row), lam2 - lo + 1)):
                acc[lo + off] = (acc[lo + off] + c * row[off]) % p
    return AlgebraElement(ctx, tuple(acc))
