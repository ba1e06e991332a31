"""Puncture codes P(C) and shortening of stabilizer codes along their words.

A weight-r word x of P(C) turns the stabilizer C into a self-orthogonal code
of length r: scale the second block of every generator by x and keep only
the support of x.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .gf import ExtensionContext, FieldError
from .gfla import (
    BudgetExceeded,
    LinearCode,
    PairCode,
    WeightDistribution,
    dual_euclidean,
    kernel,
    macwilliams_transform,
    subfield_subcode,
)
from .gfla.enumeration import default_budget
from .mdsgen import power_row
from .qecc import QuantumCode, qecc_min_distance, QeccParams


class ShorteningError(ValueError):
    pass


def vec_bilinear_form(field, a, b) -> np.ndarray:
    """(v_i w'_i - v'_i w_i)_i for pair vectors a = (v | w), b = (v' | w')."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape[-1] != b.shape[-1] or a.shape[-1] % 2:
        raise ValueError("pair vectors must have equal even length")
    n = a.shape[-1] // 2
    return field.sub(field.mul(a[..., :n], b[..., n:]), field.mul(b[..., :n], a[..., n:]))


def _dual_of_span(field, vectors, n) -> LinearCode:
    return LinearCode(field, kernel(np.asarray(vectors, dtype=np.int64).reshape(-1, n), field, n), n)


def puncture_code_definition(C: PairCode) -> LinearCode:
    """Dual of the span of {c, c'} over generator pairs (bilinearity makes pairs enough)."""
    f, n = C.field, C.n
    G = C.gen
    if C.r < 2:
        return LinearCode.full(f, n)
    i, j = np.triu_indices(C.r, k=1)
    return _dual_of_span(f, vec_bilinear_form(f, G[i], G[j]), n)


def puncture_code_css(C1: LinearCode, C2: LinearCode) -> LinearCode:
    """Dual of the span of coordinatewise products c * d, c in C1^perp, d in C2^perp."""
    f, n = C1.field, C1.n
    A = dual_euclidean(C1).gen
    B = dual_euclidean(C2).gen
    if A.shape[0] == 0 or B.shape[0] == 0:
        return LinearCode.full(f, n)
    return _dual_of_span(f, f.mul(A[:, None, :], B[None, :, :]), n)


def _conj_products(C: LinearCode, ctx: ExtensionContext) -> np.ndarray:
    """Rows g_j * g_l^q for all generator pairs."""
    G = C.gen
    return ctx.ext.mul(G[:, None, :], ctx.frobenius(G)[None, :, :]).reshape(-1, C.n)


def puncture_code_hermitian(C: LinearCode, ctx: ExtensionContext) -> LinearCode:
    """Base-field dual of the GF(q)-span of the traces tr(c_i d_i^q)."""
    if C.field != ctx.ext:
        raise FieldError("expected a code over the extension field")
    if C.k == 0:
        return LinearCode.full(ctx.base, C.n)
    H = _conj_products(C, ctx)
    # the GF(q)-span of the products is spanned by lambda * h, lambda in {1, gamma}
    traces = np.vstack([ctx.trace(H), ctx.trace(ctx.ext.mul(ctx.gamma, H))])
    return _dual_of_span(ctx.base, traces, C.n)


def puncture_code_hermitian_subfield(C: LinearCode, ctx: ExtensionContext) -> LinearCode:
    """Same code via the subfield subcode of the dual of the product span."""
    if C.k == 0:
        return LinearCode.full(ctx.base, C.n)
    return subfield_subcode(_conj_products(C, ctx), ctx, C.n)


def puncture_code_rs_hermitian_closed(ctx: ExtensionContext, mu: int) -> LinearCode:
    """<G_{i + q j} : 0 <= i, j <= mu>^perp restricted to GF(q)."""
    q = ctx.q
    if not 0 <= mu <= q - 2:
        raise ValueError(f"mu={mu} outside 0..{q - 2}")
    rows = [power_row(ctx.ext, i + q * j) for i in range(mu + 1) for j in range(mu + 1)]
    return subfield_subcode(np.vstack(rows), ctx, q * q)


def puncture_code_rs_css_closed(field, mu: int) -> LinearCode:
    """<G_{i + j} : 0 <= i, j <= mu>^perp, i.e. the dual of C^(q, 2 mu)."""
    rows = [power_row(field, t) for t in range(2 * mu + 1)]
    return _dual_of_span(field, rows, field.q)


# --- weight supports -------------------------------------------------------------


@dataclass(frozen=True)
class SupportResult:
    """Nonzero weights found in a code.

    ``exact`` is False when only random samples were drawn; ``distribution``
    is present for exact results.
    """

    weights: tuple[int, ...]
    exact: bool
    method: str
    distribution: WeightDistribution | None = None

    @property
    def min_weight(self) -> int | None:
        return self.weights[0] if self.weights else None

    def to_json(self) -> dict:
        out = {"weights": list(self.weights), "exact": self.exact, "method": self.method}
        if self.distribution is not None:
            out["distribution"] = list(self.distribution.counts)
        return out


def code_distribution(P: LinearCode, budget: int | None = None, method: str = "auto") -> tuple[WeightDistribution, str]:
    """Exact distribution, walking P or its dual (then MacWilliams), whichever is allowed and smaller."""
    budget = default_budget() if budget is None else budget
    q = P.field.q
    direct = q**P.k <= budget
    via_dual = q ** (P.n - P.k) <= budget
    if method == "exhaustive" or (method == "auto" and direct and (not via_dual or P.k <= P.n - P.k)):
        return P.weight_distribution(budget), "exhaustive"
    if method in ("auto", "macwilliams") and via_dual:
        return macwilliams_transform(dual_euclidean(P).weight_distribution(budget)), "macwilliams"
    raise BudgetExceeded(f"neither q^{P.k} nor q^{P.n - P.k} fits the budget of {budget}")


def weight_support(P: LinearCode, budget: int | None = None, samples: int = 200_000,
                   seed: int = 0) -> SupportResult:
    try:
        dist, method = code_distribution(P, budget)
        return SupportResult(tuple(w for w in dist.support if w), True, method, dist)
    except BudgetExceeded:
        seen = P.enumerator.sample_weights(samples, seed=seed)
        return SupportResult(tuple(sorted(w for w in seen if w)), False, "sampled")


@dataclass(frozen=True)
class PunctureReport:
    source: str
    pcode: LinearCode = dc_field(repr=False)
    support: SupportResult
    method: str

    def to_json(self) -> dict:
        return {
            "source": self.source,
            "method": self.method,
            "pcode": {"n": self.pcode.n, "k": self.pcode.k, "d": self.support.min_weight,
                      "d_exact": self.support.exact, "generator": self.pcode.gen.tolist()},
            "weight_support": self.support.to_json(),
        }


def puncture_report(Q: QuantumCode, budget: int | None = None, samples: int = 200_000) -> PunctureReport:
    P = puncture_code_definition(Q.stabilizer)
    return PunctureReport(str(Q), P, weight_support(P, budget, samples), "definition")


# --- shortening ----------------------------------------------------------------------


def enumerate_witnesses(P: LinearCode, r: int, budget: int | None = None) -> np.ndarray:
    """First codeword of weight r in message-lexicographic order."""
    if r <= 0:
        raise ShorteningError("weight 0 is not a shortening witness")
    x = P.enumerator.first_of_weight(r, budget)
    if x is None:
        raise ShorteningError(f"P(C) has no word of weight {r}")
    return x


@dataclass(frozen=True)
class ShortenedResult:
    support: tuple[int, ...]
    witness: np.ndarray = dc_field(repr=False)
    code: QuantumCode
    k_bound: int

    @property
    def k_prime(self) -> int:
        return self.code.k

    @property
    def d_prime(self) -> int:
        return self.code.d

    def to_json(self) -> dict:
        return {
            "support": list(self.support),
            "witness": self.witness.tolist(),
            "k_prime": self.k_prime,
            "d_prime": self.d_prime,
            "k_bound": self.k_bound,
            "code": self.code.to_json(),
        }


def shorten_qecc(Q: QuantumCode | PairCode, x, budget: int | None = None, method: str = "auto",
                 check_membership: bool = True) -> ShortenedResult:
    """Shorten along a word x of P(C); the result has length wgt(x).

    The distance bound d' >= d is certified when the new code's distance
    enumeration fits the budget; otherwise d is carried as the designed bound.
    """
    if isinstance(Q, PairCode):
        from .qecc import from_symplectic

        Q = from_symplectic(Q, budget=budget, method=method)
    C = Q.stabilizer
    f, n = C.field, C.n
    x = np.asarray(x, dtype=np.int64).reshape(n)
    S = np.flatnonzero(x)
    if S.size == 0:
        raise ShorteningError("weight 0 is not a shortening witness")
    if check_membership and C.r >= 2:
        i, j = np.triu_indices(C.r, k=1)
        forms = vec_bilinear_form(f, C.gen[i], C.gen[j])
        if np.any(f.dot(forms, x[None, :])):
            raise ShorteningError("x is not in the puncture code")
    v = C.v[:, S]
    w = f.mul(C.w[:, S], x[S][None, :])
    D = PairCode(f, np.hstack([v, w]), S.size)
    if not D.is_self_orthogonal():  # pragma: no cover - would contradict the theory
        raise AssertionError("shortened stabilizer is not self-orthogonal")
    r = S.size
    cert = qecc_min_distance(D, budget=budget, method=method, designed=Q.d)
    params = QeccParams(r, r - D.r, cert.d, f.q, cert.pure)
    code = QuantumCode(params, D, f"shortened {Q} to length {r}", cert)
    return ShortenedResult(tuple(int(s) for s in S), x, code, Q.k - (n - r))


def shorten_to_length(Q: QuantumCode, r: int, budget: int | None = None,
                      P: LinearCode | None = None, method: str = "auto") -> ShortenedResult:
    P = puncture_code_definition(Q.stabilizer) if P is None else P
    x = enumerate_witnesses(P, r, budget)
    return shorten_qecc(Q, x, budget=budget, method=method, check_membership=False)
