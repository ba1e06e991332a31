"""Finite fields GF(p^m) with index-encoded elements and the pair GF(q) < GF(q^2).

An element is an integer in ``[0, q)``: the coefficient vector of its
polynomial representative packed in base ``p`` (coefficient of ``x^i`` is the
``i``-th base-``p`` digit).  All array operations accept numpy integer arrays
and broadcast.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property, lru_cache
from math import gcd

import numpy as np
from sympy import factorint, isprime

from .conway import bundled_table, conway_polynomial

MAX_ORDER = 2**16
_TABLE_LIMIT = 1024  # full q x q add/mul tables below this order


class FieldError(ValueError):
    """Unsupported field parameters or illegal field operation."""


class FieldSpec:
    """The field GF(p^m) built from a fixed monic modulus with primitive root ``alpha``."""

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(int(c) for c in modulus)
        if len(self.modulus) != m + 1 or self.modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree m")
        q = self.q
        self.digits = np.array(
            [[(i // p**j) % p for j in range(m)] for i in range(q)], dtype=np.int64
        ).reshape(q, m)
        self.weights = p ** np.arange(m, dtype=np.int64)
        # x (or the root of x - a for m = 1) generates the multiplicative group
        alpha = p if m > 1 else (-self.modulus[0]) % p
        exp = np.zeros(2 * (q - 1) if q > 1 else 1, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        x = 1
        for k in range(q - 1):
            exp[k] = x
            log[x] = k
            x = self._mul_slow(x, alpha)
        if q > 2 and (x != 1 or len(set(exp[: q - 1].tolist())) != q - 1):
            raise FieldError(f"modulus {self.modulus} is not primitive over GF({p})")
        exp[q - 1 :] = exp[: q - 1]
        self.alpha = alpha
        self.exp = exp
        self.log = log

    def _mul_slow(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        if m == 1:
            return a * b % p
        da = [(a // p**j) % p for j in range(m)]
        db = [(b // p**j) % p for j in range(m)]
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
        for i in range(2 * m - 2, m - 1, -1):
            c = prod[i]
            if c:
                for j in range(m + 1):
                    prod[i - m + j] = (prod[i - m + j] - c * self.modulus[j]) % p
        return sum(c * p**j for j, c in enumerate(prod[:m]))

    # --- identity -------------------------------------------------------
    def __eq__(self, other) -> bool:
        return isinstance(other, FieldSpec) and (self.p, self.m, self.modulus) == (
            other.p,
            other.m,
            other.modulus,
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    # --- tables ---------------------------------------------------------
    @cached_property
    def neg_table(self) -> np.ndarray:
        return ((-self.digits) % self.p) @ self.weights

    @cached_property
    def add_table(self) -> np.ndarray | None:
        if self.q > _TABLE_LIMIT:
            return None
        d = self.digits
        s = (d[:, None, :] + d[None, :, :]) % self.p
        return s @ self.weights

    @cached_property
    def mul_table(self) -> np.ndarray | None:
        if self.q > _TABLE_LIMIT:
            return None
        a = np.arange(self.q)
        return self._mul_log(a[:, None], a[None, :])

    @cached_property
    def inv_table(self) -> np.ndarray:
        inv = np.zeros(self.q, dtype=np.int64)
        nz = np.arange(1, self.q)
        inv[1:] = self.exp[(-self.log[nz]) % (self.q - 1)]
        return inv

    # --- arithmetic on index arrays -----------------------------------------
    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        t = self.add_table
        if t is not None:
            return t[a, b]
        return ((self.digits[a] + self.digits[b]) % self.p) @ self.weights

    def neg(self, a):
        return self.neg_table[np.asarray(a, dtype=np.int64)]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def _mul_log(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        r = self.exp[self.log[a] + self.log[b]]
        return np.where((a == 0) | (b == 0), 0, r)

    def mul(self, a, b):
        t = self.mul_table
        if t is not None:
            return t[np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)]
        return self._mul_log(a, b)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero")
        return self.inv_table[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        if e < 0 and np.any(a == 0):
            raise ZeroDivisionError("negative power of zero")
        r = self.exp[(self.log[a] * e) % (self.q - 1)]
        return np.where(a == 0, 0, r)

    def power_of_alpha(self, k):
        """alpha**k for integer (array) ``k``."""
        return self.exp[np.asarray(k, dtype=np.int64) % (self.q - 1)]

    def dot(self, a, b):
        """Sum over the last axis of the elementwise product."""
        prod = self.mul(a, b)
        return self.sum(prod, axis=-1)

    def sum(self, a, axis=-1):
        a = np.asarray(a, dtype=np.int64)
        if self.m == 1:
            return a.sum(axis=axis) % self.p
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        d = self.digits[a].sum(axis=axis - 1 if axis < 0 else axis) % self.p
        return d @ self.weights

    def matmul(self, A, B):
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        return self.sum(self.mul(A[:, :, None], B[None, :, :]), axis=1)

    def element(self, index: int) -> FieldElement:
        return FieldElement(self, int(index))

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, i) for i in range(self.q)]

    def order_of(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        n = self.q - 1
        k = int(self.log[a])
        return n // gcd(n, k)


@dataclass(frozen=True)
class FieldElement:
    """A single field element bound to its field."""

    field: FieldSpec = dc_field(repr=False)
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.field.q:
            raise FieldError(f"index {self.index} outside {self.field}")

    def _check(self, other) -> FieldElement:
        if isinstance(other, int):
            other = FieldElement(self.field, other % self.field.p if self.field.m == 1 else other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise FieldError("operands belong to different fields")
        return other

    def _wrap(self, v) -> FieldElement:
        return FieldElement(self.field, int(v))

    def __add__(self, other):
        other = self._check(other)
        return self._wrap(self.field.add(self.index, other.index))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return self._wrap(self.field.sub(self.index, other.index))

    def __neg__(self):
        return self._wrap(self.field.neg(self.index))

    def __mul__(self, other):
        other = self._check(other)
        return self._wrap(self.field.mul(self.index, other.index))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        return self._wrap(self.field.div(self.index, other.index))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.index, e))

    def inverse(self) -> FieldElement:
        return self._wrap(self.field.inv(self.index))

    def __int__(self) -> int:
        return self.index

    def __bool__(self) -> bool:
        return self.index != 0


def arith(a: FieldElement, b: FieldElement | None, kind: str) -> FieldElement:
    """Dispatch ``kind`` in {add, sub, mul, div, neg, inv, pow}; ``b`` is an int for pow."""
    if kind == "neg":
        return -a
    if kind == "inv":
        return a.inverse()
    if kind == "pow":
        return a ** int(b)
    ops = {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}
    if kind not in ops:
        raise ValueError(f"unknown operation {kind!r}")
    return ops[kind](b)


@lru_cache(maxsize=None)
def field_create(p: int, m: int = 1, search: bool = False) -> FieldSpec:
    """GF(p^m) from the bundled Conway table (or the search if ``search``)."""
    if not isprime(p):
        raise FieldError(f"{p} is not prime")
    if m < 1:
        raise FieldError("extension degree must be >= 1")
    if p**m > MAX_ORDER:
        raise FieldError(f"GF({p}^{m}) exceeds the supported order {MAX_ORDER}")
    table = bundled_table()
    if (p, m) in table:
        modulus = table[(p, m)]
    elif search:
        modulus = conway_polynomial(p, m)
    else:
        raise FieldError(f"no bundled Conway polynomial for ({p}, {m})")
    return FieldSpec(p, m, modulus)


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` as ``p**m``; raises FieldError if it is not a prime power."""
    f = factorint(q) if q > 1 else {}
    if len(f) != 1:
        raise FieldError(f"{q} is not a prime power")
    ((p, m),) = f.items()
    return int(p), int(m)


def GF(q: int) -> FieldSpec:
    return field_create(*prime_power(q))


def field_from_json(obj: dict) -> FieldSpec:
    f = field_create(int(obj["p"]), int(obj["m"]))
    if "modulus" in obj and tuple(obj["modulus"]) != f.modulus:
        return FieldSpec(int(obj["p"]), int(obj["m"]), tuple(obj["modulus"]))
    return f


class ExtensionContext:
    """GF(q) embedded in GF(q^2) with the expansion basis {1, gamma}."""

    def __init__(self, base: FieldSpec, ext: FieldSpec):
        if ext.p != base.p or ext.m != 2 * base.m:
            raise FieldError(f"{ext} is not a quadratic extension of {base}")
        self.base = base
        self.ext = ext
        q = base.q
        embed = np.zeros(q, dtype=np.int64)
        nz = np.arange(1, q)
        embed[nz] = ext.power_of_alpha(base.log[nz] * (q + 1))
        self.embed_map = embed
        restrict = np.full(ext.q, -1, dtype=np.int64)
        restrict[embed] = np.arange(q)
        self.restrict_map = restrict
        # the embedding must be a ring homomorphism
        a = np.arange(q)
        if not (
            np.array_equal(embed[base.add(a[:, None], a[None, :])], ext.add(embed[:, None], embed[None, :]))
            and np.array_equal(embed[base.mul(a[:, None], a[None, :])], ext.mul(embed[:, None], embed[None, :]))
        ):
            raise FieldError("moduli are not subfield-compatible")
        self.gamma = int(ext.alpha)
        g0 = int(ext.add(self.gamma, ext.pow(self.gamma, q)))
        self.gamma0 = int(restrict[g0])
        # x = embed(v) + gamma * embed(w)
        combos = ext.add(embed[:, None], ext.mul(self.gamma, embed[None, :]))
        split_v = np.zeros(ext.q, dtype=np.int64)
        split_w = np.zeros(ext.q, dtype=np.int64)
        vv, ww = np.meshgrid(np.arange(q), np.arange(q), indexing="ij")
        split_v[combos.ravel()] = vv.ravel()
        split_w[combos.ravel()] = ww.ravel()
        self.split_v = split_v
        self.split_w = split_w

    @property
    def q(self) -> int:
        return self.base.q

    def embed(self, a):
        return self.embed_map[np.asarray(a, dtype=np.int64)]

    def restrict(self, x):
        """Base-field index of embedded elements; raises if some lie outside GF(q)."""
        r = self.restrict_map[np.asarray(x, dtype=np.int64)]
        if np.any(r < 0):
            raise FieldError("element not in the base field")
        return r

    def in_base(self, x) -> np.ndarray:
        return self.restrict_map[np.asarray(x, dtype=np.int64)] >= 0

    def frobenius(self, x):
        return self.ext.pow(x, self.q)

    def trace(self, x):
        x = np.asarray(x, dtype=np.int64)
        return self.restrict(self.ext.add(x, self.frobenius(x)))

    def norm(self, x):
        return self.restrict(self.ext.pow(x, self.q + 1))

    def split(self, x):
        """(v, w) over GF(q) with x = v + gamma * w."""
        x = np.asarray(x, dtype=np.int64)
        return self.split_v[x], self.split_w[x]

    def join(self, v, w):
        return self.ext.add(self.embed(v), self.ext.mul(self.gamma, self.embed(w)))


@lru_cache(maxsize=None)
def make_extension(p: int, m: int = 1) -> ExtensionContext:
    if p ** (2 * m) > MAX_ORDER:
        raise FieldError(f"GF({p}^{2 * m}) exceeds the supported order")
    return ExtensionContext(field_create(p, m), field_create(p, 2 * m))


def extension_for(q: int) -> ExtensionContext:
    return make_extension(*prime_power(q))
