"""Linear codes over GF(q), additive pair codes over GF(q) x GF(q), and their duals."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb

import numpy as np

from ..gf import ExtensionContext, FieldError, FieldSpec, field_from_json
from .enumeration import CodeEnumerator
from .linalg import as_matrix, in_row_space, kernel, row_basis


@dataclass(frozen=True)
class WeightDistribution:
    """Counts A_0..A_n of codewords by weight.

    ``kind`` is ``"hamming"`` for linear codes and ``"symplectic"`` for pair
    codes; ``q`` is the field order (the alphabet of a symplectic code has
    ``q**2`` symbols).
    """

    counts: tuple[int, ...]
    q: int
    kind: str = "hamming"

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def support(self) -> list[int]:
        return [w for w, a in enumerate(self.counts) if a]

    @property
    def min_weight(self) -> int | None:
        nz = [w for w in self.support if w > 0]
        return nz[0] if nz else None

    def __getitem__(self, w: int) -> int:
        return self.counts[w]

    def to_json(self) -> dict:
        return {"kind": self.kind, "q": self.q, "counts": list(self.counts)}


class LinearCode:
    """Row space of a generator matrix over ``field``, kept in canonical RREF."""

    def __init__(self, field: FieldSpec, gen, n: int | None = None):
        gen = as_matrix(gen, n)
        if n is not None and gen.shape[1] != n:
            raise ValueError("generator width does not match n")
        if gen.size and (gen.min() < 0 or gen.max() >= field.q):
            raise FieldError("generator entries outside the field")
        self.field = field
        self.gen = row_basis(gen, field)
        self.gen.setflags(write=False)

    @property
    def n(self) -> int:
        return self.gen.shape[1]

    @property
    def k(self) -> int:
        return self.gen.shape[0]

    @classmethod
    def full(cls, field: FieldSpec, n: int) -> LinearCode:
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> LinearCode:
        return cls(field, np.zeros((0, n), dtype=np.int64), n)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.gen.shape == other.gen.shape
            and np.array_equal(self.gen, other.gen)
        )

    def __hash__(self):
        return hash((self.field, self.gen.shape, self.gen.tobytes()))

    def __repr__(self) -> str:
        d = self.__dict__.get("_min_distance")
        return f"[{self.n},{self.k}{',' + str(d) if d else ''}]_{self.field.q}"

    def contains(self, vectors) -> np.ndarray:
        return in_row_space(self.gen, vectors, self.field)

    def __le__(self, other: LinearCode) -> bool:
        """Subcode test."""
        return self.field == other.field and self.n == other.n and bool(np.all(other.contains(self.gen)))

    @cached_property
    def parity_check(self) -> np.ndarray:
        return kernel(self.gen, self.field, self.n)

    @cached_property
    def enumerator(self) -> CodeEnumerator:
        return CodeEnumerator(self.field, self.gen)

    def weight_distribution(self, budget: int | None = None, workers: int | None = None) -> WeightDistribution:
        return weight_distribution_exhaustive(self, budget=budget, workers=workers)

    def min_distance(self, budget: int | None = None) -> int | None:
        """Minimum nonzero weight (None for the zero code)."""
        d = self.weight_distribution(budget).min_weight
        self.__dict__["_min_distance"] = d
        return d

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "n": self.n, "k": self.k, "generator": self.gen.tolist()}

    @classmethod
    def from_json(cls, obj: dict) -> LinearCode:
        return cls(field_from_json(obj["field"]), np.array(obj["generator"], dtype=np.int64).reshape(-1, obj["n"]), obj["n"])


class PairCode:
    """GF(q)-linear subspace of GF(q)^n x GF(q)^n; generator rows are (v | w)."""

    def __init__(self, field: FieldSpec, gen, n: int | None = None):
        gen = as_matrix(gen, None if n is None else 2 * n)
        if gen.shape[1] % 2:
            raise ValueError("pair code generator needs an even number of columns")
        if gen.size and (gen.min() < 0 or gen.max() >= field.q):
            raise FieldError("generator entries outside the field")
        self.field = field
        self.gen = row_basis(gen, field)
        self.gen.setflags(write=False)

    @property
    def n(self) -> int:
        return self.gen.shape[1] // 2

    @property
    def r(self) -> int:
        return self.gen.shape[0]

    @property
    def v(self) -> np.ndarray:
        return self.gen[:, : self.n]

    @property
    def w(self) -> np.ndarray:
        return self.gen[:, self.n :]

    @classmethod
    def from_blocks(cls, field: FieldSpec, v, w) -> PairCode:
        v, w = as_matrix(v), as_matrix(w)
        return cls(field, np.hstack([v, w]))

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> PairCode:
        return cls(field, np.zeros((0, 2 * n), dtype=np.int64), n)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PairCode)
            and self.field == other.field
            and self.gen.shape == other.gen.shape
            and np.array_equal(self.gen, other.gen)
        )

    def __hash__(self):
        return hash((self.field, self.gen.shape, self.gen.tobytes()))

    def __repr__(self) -> str:
        return f"PairCode(n={self.n}, r={self.r}, {self.field})"

    def contains(self, vectors) -> np.ndarray:
        return in_row_space(self.gen, vectors, self.field)

    def __le__(self, other: PairCode) -> bool:
        return self.field == other.field and self.n == other.n and bool(np.all(other.contains(self.gen)))

    def is_self_orthogonal(self) -> bool:
        return not np.any(symplectic_gram(self, self))

    @cached_property
    def enumerator(self) -> CodeEnumerator:
        return CodeEnumerator(self.field, self.gen, paired=True)

    def weight_distribution(self, budget: int | None = None, workers: int | None = None) -> WeightDistribution:
        return weight_distribution_exhaustive(self, budget=budget, workers=workers)

    def min_distance(self, budget: int | None = None) -> int | None:
        return self.weight_distribution(budget).min_weight

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "n": self.n, "r": self.r, "generator": self.gen.tolist()}

    @classmethod
    def from_json(cls, obj: dict) -> PairCode:
        n = obj["n"]
        return cls(field_from_json(obj["field"]), np.array(obj["generator"], dtype=np.int64).reshape(-1, 2 * n), n)


# --- inner products -------------------------------------------------------------


def symplectic_product(field: FieldSpec, a, b):
    """(v, w) * (v', w') = v.w' - v'.w for pair vectors stored as (v | w)."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    n = a.shape[-1] // 2
    return field.sub(field.dot(a[..., :n], b[..., n:]), field.dot(b[..., :n], a[..., n:]))


def symplectic_gram(A: PairCode, B: PairCode) -> np.ndarray:
    f = A.field
    return symplectic_product(f, A.gen[:, None, :], B.gen[None, :, :])


def hermitian_product(ctx: ExtensionContext, a, b):
    """Sum of a_i * b_i^q over GF(q^2)."""
    return ctx.ext.dot(a, ctx.frobenius(b))


# --- duals ----------------------------------------------------------------------


def dual_euclidean(C: LinearCode) -> LinearCode:
    return LinearCode(C.field, kernel(C.gen, C.field, C.n), C.n)


def dual_hermitian(C: LinearCode, ctx: ExtensionContext) -> LinearCode:
    if C.field != ctx.ext:
        raise FieldError("Hermitian dual needs a code over the extension field")
    return LinearCode(C.field, kernel(ctx.frobenius(C.gen), C.field, C.n), C.n)


def dual_symplectic(C: PairCode) -> PairCode:
    f = C.field
    # (v', w') is orthogonal to (v, w) iff (-w | v) . (v' | w') = 0
    M = np.hstack([f.neg(C.w), C.v])
    return PairCode(f, kernel(M, f, 2 * C.n), C.n)


# --- weight distributions ----------------------------------------------------------


def weight_distribution_exhaustive(C: LinearCode | PairCode, budget: int | None = None,
                                   workers: int | None = None,
                                   lead_digits: int | None = None) -> WeightDistribution:
    """Exact distribution by walking all codewords (BudgetExceeded when too large)."""
    counts = C.enumerator.histogram(budget=budget, workers=workers, lead_digits=lead_digits)
    kind = "symplectic" if isinstance(C, PairCode) else "hamming"
    return WeightDistribution(tuple(counts), C.field.q, kind)


def krawtchouk(n: int, alphabet: int, j: int, i: int) -> int:
    return sum(
        (-1) ** s * (alphabet - 1) ** (j - s) * comb(i, s) * comb(n - i, j - s) for s in range(j + 1)
    )


def macwilliams_transform(W: WeightDistribution) -> WeightDistribution:
    """Distribution of the dual code (Euclidean for hamming, symplectic for pair codes).

    Exact integer arithmetic; raises ValueError if an output is negative or
    fractional, which means ``W`` was not the distribution of a linear code.
    """
    n = W.n
    size = W.total
    alphabet = W.q**2 if W.kind == "symplectic" else W.q
    out = []
    for j in range(n + 1):
        s = sum(a * krawtchouk(n, alphabet, j, i) for i, a in enumerate(W.counts) if a)
        b, rem = divmod(s, size)
        if rem or b < 0:
            raise ValueError(f"inconsistent distribution: dual count at weight {j} is {s}/{size}")
        out.append(b)
    return WeightDistribution(tuple(out), W.q, W.kind)


# --- code operations -----------------------------------------------------------------


def expand_to_paircode(C: LinearCode, ctx: ExtensionContext) -> PairCode:
    """Write each codeword as v + gamma w and collect the GF(q)-linear code {(v, w)}."""
    if C.field != ctx.ext:
        raise FieldError("expansion needs a code over the extension field")
    if C.k == 0:
        return PairCode.zero(ctx.base, C.n)
    rows = np.vstack([C.gen, ctx.ext.mul(ctx.gamma, C.gen)])
    v, w = ctx.split(rows)
    return PairCode.from_blocks(ctx.base, v, w)


def shorten_classical(C: LinearCode, positions) -> LinearCode:
    """Words vanishing on ``positions``, with those coordinates deleted."""
    positions = sorted(set(int(i) for i in positions))
    keep = [i for i in range(C.n) if i not in set(positions)]
    if not positions:
        return C
    if C.k == 0:
        return LinearCode.zero(C.field, len(keep))
    # messages m with m G restricted to positions = 0
    msgs = kernel(C.gen[:, positions].T, C.field, C.k)
    sub = C.field.matmul(msgs, C.gen) if msgs.shape[0] else np.zeros((0, C.n), dtype=np.int64)
    return LinearCode(C.field, sub[:, keep], len(keep))


def puncture_classical(C: LinearCode, positions) -> LinearCode:
    keep = [i for i in range(C.n) if i not in set(int(i) for i in positions)]
    return LinearCode(C.field, C.gen[:, keep], len(keep))


def extend_scalars(C: LinearCode, ctx: ExtensionContext) -> LinearCode:
    """C tensored with GF(q^2): the same generator read over the extension."""
    if C.field != ctx.base:
        raise FieldError("code is not over the base field")
    return LinearCode(ctx.ext, ctx.embed(C.gen), C.n)


def subfield_subcode(H: np.ndarray, ctx: ExtensionContext, n: int) -> LinearCode:
    """{x in GF(q)^n : H x = 0} for a check matrix H over GF(q^2)."""
    H = as_matrix(H, n)
    A, B = ctx.split(H)
    return LinearCode(ctx.base, kernel(np.vstack([A, B]), ctx.base, n), n)


def is_mds(C: LinearCode, budget: int | None = None) -> bool:
    return C.min_distance(budget) == C.n - C.k + 1
