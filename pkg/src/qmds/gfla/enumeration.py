"""Exhaustive codeword enumeration.

Messages are visited in modular base-q Gray order: between consecutive
messages exactly one digit ``j`` moves from field index ``t`` to ``t + 1``
(mod q), so the codeword changes by the precomputed row difference
``delta[j, t]``.  The message space is split into chunks by fixing the
leading digits; chunks are independent and their histograms are summed.

Pair codes (length ``n`` over GF(q) x GF(q)) are handled as length ``2n``
vectors whose weight counts positions ``i`` with ``(v_i, w_i) != (0, 0)``.
"""

from __future__ import annotations

import os

import numba
import numpy as np
from numba import njit, prange

from ..gf import FieldSpec

DEFAULT_BUDGET = 2**31

_MODE_PRIME, _MODE_XOR, _MODE_TABLE = 0, 1, 2


class BudgetExceeded(RuntimeError):
    """The requested enumeration is larger than the configured budget."""


def default_budget() -> int:
    return int(float(os.environ.get("QMDS_BUDGET", DEFAULT_BUDGET)))


def set_workers(workers: int | None) -> None:
    if workers is None:
        env = os.environ.get("QMDS_WORKERS")
        workers = int(env) if env else None
    if workers:
        numba.set_num_threads(min(int(workers), numba.config.NUMBA_NUM_THREADS))


@njit(inline="always")
def _apply(cw, d, mode, p, add):
    if mode == 0:
        for i in range(cw.shape[0]):
            s = cw[i] + d[i]
            cw[i] = s - p if s >= p else s
    elif mode == 1:
        for i in range(cw.shape[0]):
            cw[i] = cw[i] ^ d[i]
    else:
        for i in range(cw.shape[0]):
            cw[i] = add[cw[i], d[i]]


@njit(inline="always")
def _weight(cw, n, paired):
    w = 0
    if paired:
        for i in range(n):
            w += (cw[i] | cw[n + i]) != 0
    else:
        for i in range(n):
            w += cw[i] != 0
    return w


@njit(parallel=True, cache=True)
def _gray_histograms(starts, delta, add, mode, p, q, k_low, n, paired):
    nchunks = starts.shape[0]
    out = np.zeros((nchunks, n + 1), dtype=np.int64)
    total = 1
    for _ in range(k_low):
        total *= q
    for c in prange(nchunks):
        cw = starts[c].copy()
        g = np.zeros(max(k_low, 1), dtype=np.int64)
        out[c, _weight(cw, n, paired)] += 1
        for step in range(1, total):
            s = step
            j = 0
            while s % q == 0:
                s //= q
                j += 1
            _apply(cw, delta[j, g[j]], mode, p, add)
            g[j] += 1
            if g[j] == q:
                g[j] = 0
            out[c, _weight(cw, n, paired)] += 1
    return out


@njit(cache=True)
def _first_of_weight(delta, add, mode, p, q, k, n, paired, target, limit):
    """Index of the first message (lexicographic, digit 0 most significant) of weight ``target``."""
    cw = np.zeros(delta.shape[2], dtype=delta.dtype)
    digits = np.zeros(k, dtype=np.int64)
    for idx in range(1, limit):
        j = k - 1
        while digits[j] == q - 1:
            _apply(cw, delta[j, q - 1], mode, p, add)
            digits[j] = 0
            j -= 1
        _apply(cw, delta[j, digits[j]], mode, p, add)
        digits[j] += 1
        if _weight(cw, n, paired) == target:
            return idx
    return -1


class CodeEnumerator:
    """Precomputed tables for walking all GF(q)-combinations of generator rows.

    ``gen`` holds rows over ``field``; with ``paired`` each row is ``(v | w)``
    of length ``2n``.
    """

    def __init__(self, field: FieldSpec, gen: np.ndarray, paired: bool = False):
        gen = np.asarray(gen, dtype=np.int64)
        self.field = field
        self.gen = gen
        self.k = gen.shape[0]
        self.paired = paired
        self.length = gen.shape[1]
        self.n = self.length // 2 if paired else self.length
        q = field.q
        dtype = np.int16 if q < 2**15 else np.int32
        if field.m == 1:
            self.mode = _MODE_PRIME
        elif field.p == 2:
            self.mode = _MODE_XOR
        else:
            self.mode = _MODE_TABLE
        table = field.add_table if self.mode == _MODE_TABLE else None
        if self.mode == _MODE_TABLE and table is None:
            raise ValueError(f"enumeration over {field} needs an addition table")
        self.add = (table if table is not None else np.zeros((1, 1), dtype=np.int64)).astype(dtype)
        t = np.arange(q)
        # multiples[j, t] = t * gen[j]
        self.multiples = field.mul(t[None, :, None], gen[:, None, :]) if self.k else np.zeros(
            (0, q, self.length), dtype=np.int64
        )
        nxt = np.roll(self.multiples, -1, axis=1)
        self.delta = field.sub(nxt, self.multiples).astype(dtype)
        self.dtype = dtype

    @property
    def size(self) -> int:
        return self.field.q**self.k

    def combine(self, messages: np.ndarray) -> np.ndarray:
        """Codewords for message rows; a short row fills only the leading generators."""
        messages = np.asarray(messages, dtype=np.int64)
        if messages.ndim == 1:
            messages = messages.reshape(1, -1)
        out = np.zeros((messages.shape[0], self.length), dtype=np.int64)
        for j in range(messages.shape[1]):
            out = self.field.add(out, self.multiples[j][messages[:, j]])
        return out

    def weights(self, words: np.ndarray) -> np.ndarray:
        words = np.asarray(words)
        if self.paired:
            return np.count_nonzero((words[:, : self.n] != 0) | (words[:, self.n :] != 0), axis=1)
        return np.count_nonzero(words, axis=1)

    def histogram(self, budget: int | None = None, lead_digits: int | None = None,
                  workers: int | None = None) -> list[int]:
        """Exact weight histogram of all ``q**k`` codewords."""
        budget = default_budget() if budget is None else budget
        if self.size > budget:
            raise BudgetExceeded(f"{self.size} codewords exceed the budget of {budget}")
        set_workers(workers)
        q, k = self.field.q, self.k
        if lead_digits is None:
            lead_digits = 0
            threads = numba.get_num_threads()
            while lead_digits < k - 1 and q**lead_digits < 4 * threads and q ** (k - lead_digits) > 4096:
                lead_digits += 1
        lead_digits = min(lead_digits, k)
        if lead_digits:
            grids = np.meshgrid(*[np.arange(q)] * lead_digits, indexing="ij")
            starts = self.combine(np.stack([g.ravel() for g in grids], axis=1))
        else:
            starts = np.zeros((1, self.length), dtype=np.int64)
        k_low = k - lead_digits
        delta = self.delta[lead_digits:]
        if k_low == 0:
            delta = np.zeros((1, q, self.length), dtype=self.dtype)
        counts = _gray_histograms(
            starts.astype(self.dtype), np.ascontiguousarray(delta), self.add, self.mode,
            self.field.p, q, k_low, self.n, self.paired,
        )
        return [int(c) for c in counts.sum(axis=0)]

    def first_of_weight(self, target: int, budget: int | None = None) -> np.ndarray | None:
        """Lexicographically first message's codeword with the given weight (None if absent)."""
        if target == 0 or self.k == 0:
            return None
        budget = default_budget() if budget is None else budget
        limit = min(self.size, budget)
        idx = _first_of_weight(self.delta, self.add, self.mode, self.field.p, self.field.q,
                               self.k, self.n, self.paired, target, limit)
        if idx < 0:
            if self.size > budget:
                raise BudgetExceeded(f"no weight-{target} word among the first {budget} messages")
            return None
        digits = np.array([(idx // self.field.q ** (self.k - 1 - j)) % self.field.q for j in range(self.k)])
        return self.combine(digits[None, :])[0]

    def sample_weights(self, samples: int, seed: int = 0, batch: int = 1 << 16) -> set[int]:
        rng = np.random.default_rng(seed)
        seen: set[int] = set()
        left = samples
        while left > 0:
            b = min(batch, left)
            msgs = rng.integers(0, self.field.q, size=(b, self.k))
            seen.update(np.unique(self.weights(self.combine(msgs))).tolist())
            left -= b
        return seen
