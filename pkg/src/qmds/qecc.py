"""Stabilizer codes from self-orthogonal classical codes, and their distances."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field, replace

import numpy as np

from .gf import ExtensionContext, FieldSpec
from .gfla import (
    BudgetExceeded,
    LinearCode,
    PairCode,
    WeightDistribution,
    dual_euclidean,
    dual_symplectic,
    expand_to_paircode,
    hermitian_product,
    macwilliams_transform,
)
from .gfla.enumeration import default_budget
from .mdsgen import code_C, code_Cs, lemma1_range


class ConstructionError(ValueError):
    """The input codes do not satisfy the construction's orthogonality condition."""


@dataclass(frozen=True)
class QeccParams:
    n: int
    k: int
    d: int
    q: int
    pure: bool | None = None

    def __post_init__(self):
        if not 0 <= self.k <= self.n or self.d < 1:
            raise ValueError(f"invalid parameters {self}")

    def __str__(self) -> str:
        return f"[[{self.n},{self.k},{self.d}]]_{self.q}"

    @property
    def triple(self) -> tuple[int, int, int]:
        return self.n, self.k, self.d

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "d": self.d, "q": self.q, "pure": self.pure}


@dataclass(frozen=True)
class DistanceCertificate:
    """How the distance was obtained.

    ``verified`` is False when enumeration was out of budget; ``d`` is then the
    designed lower bound supplied by the construction.
    """

    d: int
    pure: bool | None
    verified: bool
    method: str

    def to_json(self) -> dict:
        return {"d": self.d, "pure": self.pure, "verified": self.verified, "method": self.method}


@dataclass(frozen=True)
class QuantumCode:
    params: QeccParams
    stabilizer: PairCode = dc_field(repr=False)
    provenance: str = ""
    certificate: DistanceCertificate | None = None

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def k(self) -> int:
        return self.params.k

    @property
    def d(self) -> int:
        return self.params.d

    @property
    def q(self) -> int:
        return self.params.q

    @property
    def verified(self) -> bool:
        return bool(self.certificate and self.certificate.verified)

    def __str__(self) -> str:
        return str(self.params)

    def to_json(self) -> dict:
        return {
            "params": self.params.to_json(),
            "stabilizer": self.stabilizer.to_json(),
            "provenance": self.provenance,
            "certificate": self.certificate.to_json() if self.certificate else None,
        }

    @classmethod
    def from_json(cls, obj: dict) -> QuantumCode:
        p = obj["params"]
        cert = obj.get("certificate")
        return cls(
            QeccParams(p["n"], p["k"], p["d"], p["q"], p.get("pure")),
            PairCode.from_json(obj["stabilizer"]),
            obj.get("provenance", ""),
            DistanceCertificate(**cert) if cert else None,
        )


def singleton_defect(params: QeccParams) -> int:
    """n + 2 - k - 2d; zero for quantum MDS codes, which must then be pure."""
    defect = params.n + 2 - params.k - 2 * params.d
    if defect < 0:
        raise ValueError(f"{params} violates the quantum Singleton bound")
    if defect == 0 and params.pure is False:
        raise ValueError(f"{params} meets the Singleton bound but is impure")
    return defect


def is_quantum_mds(params: QeccParams) -> bool:
    return singleton_defect(params) == 0


# --- distance ------------------------------------------------------------------------


def _first_excess(star: WeightDistribution, sub: WeightDistribution) -> tuple[int, bool]:
    """Smallest w >= 1 with more words of weight w in the dual than in the code."""
    for w in range(1, star.n + 1):
        if star[w] > sub[w]:
            pure = all(star[u] == 0 for u in range(1, w))
            return w, pure
    raise ValueError("dual code has no words outside the code")


def qecc_min_distance(C: PairCode, budget: int | None = None, method: str = "auto",
                      designed: int | None = None, workers: int | None = None) -> DistanceCertificate:
    """min{wgt(x) : x in C* minus C} for a self-orthogonal pair code C.

    ``method`` is ``"exhaustive"`` (walk C* and C), ``"macwilliams"`` (walk C,
    transform to C*) or ``"auto"`` (the latter).  Out of budget, the designed
    distance is returned with ``verified=False``.
    """
    budget = default_budget() if budget is None else budget
    n, r = C.n, C.r
    if method not in ("auto", "exhaustive", "macwilliams"):
        raise ValueError(f"unknown method {method!r}")
    if r == 0:
        return DistanceCertificate(1, True, True, "trivial")
    try:
        if r == n:
            # C = C*: report the smallest nonzero stabilizer weight
            d = C.weight_distribution(budget, workers).min_weight
            return DistanceCertificate(d, True, True, "self-dual")
        if method == "exhaustive":
            star = dual_symplectic(C).weight_distribution(budget, workers)
            sub = C.weight_distribution(budget, workers)
        else:
            sub = C.weight_distribution(budget, workers)
            star = macwilliams_transform(sub)
        d, pure = _first_excess(star, sub)
        return DistanceCertificate(d, pure, True, "exhaustive" if method == "exhaustive" else "macwilliams")
    except BudgetExceeded:
        return DistanceCertificate(designed if designed is not None else 1, None, False, "designed")


def _hamming_distribution(C: LinearCode, budget: int) -> WeightDistribution:
    if C.k <= C.n - C.k:
        return C.weight_distribution(budget)
    return macwilliams_transform(dual_euclidean(C).weight_distribution(budget))


def css_distance(C1: LinearCode, C2: LinearCode, budget: int | None = None,
                 designed: int | None = None) -> DistanceCertificate:
    """min wgt over (C1 minus C2^perp) and (C2 minus C1^perp), via Hamming distributions."""
    budget = default_budget() if budget is None else budget
    n = C1.n
    if C1.k + C2.k - n == 0:
        # C* = C; the stabilizer weight is min over C1^perp and C2^perp
        stab = [dual_euclidean(C1), dual_euclidean(C2)]
        try:
            ds = [_hamming_distribution(c, budget).min_weight for c in stab]
        except BudgetExceeded:
            return DistanceCertificate(designed or 1, None, False, "designed")
        ds = [x for x in ds if x is not None]
        return DistanceCertificate(min(ds) if ds else 1, True, True, "css-self-dual")
    try:
        best = None
        pure = True
        for a, b in ((C1, dual_euclidean(C2)), (C2, dual_euclidean(C1))):
            if a.k == b.k:
                continue
            A = _hamming_distribution(a, budget)
            B = _hamming_distribution(b, budget)
            w = next(w for w in range(1, n + 1) if A[w] > B[w])
            if any(A[u] for u in range(1, w)):
                pure = False
            best = w if best is None else min(best, w)
        return DistanceCertificate(best, pure, True, "css-macwilliams")
    except BudgetExceeded:
        return DistanceCertificate(designed or 1, None, False, "designed")


# --- constructions -------------------------------------------------------------------


def _finish(C: PairCode, cert: DistanceCertificate, provenance: str) -> QuantumCode:
    params = QeccParams(C.n, C.n - C.r, cert.d, C.field.q, cert.pure)
    return QuantumCode(params, C, provenance, cert)


def from_symplectic(C: PairCode, budget: int | None = None, method: str = "auto",
                    designed: int | None = None, provenance: str = "symplectic") -> QuantumCode:
    """QECC(n, n - r, d, q) from a symplectic self-orthogonal pair code of dimension r."""
    if not C.is_self_orthogonal():
        raise ConstructionError("pair code is not symplectic self-orthogonal")
    cert = qecc_min_distance(C, budget=budget, method=method, designed=designed)
    return _finish(C, cert, provenance)


def is_hermitian_self_orthogonal(C: LinearCode, ctx: ExtensionContext) -> bool:
    G = C.gen
    return not np.any(hermitian_product(ctx, G[:, None, :], G[None, :, :]))


def from_hermitian(C: LinearCode, ctx: ExtensionContext, budget: int | None = None,
                   method: str = "auto", designed: int | None = None,
                   provenance: str = "hermitian") -> QuantumCode:
    """QECC(n, n - 2k, d, q) from a Hermitian self-orthogonal [n, k]_{q^2} code."""
    if C.field != ctx.ext:
        raise ConstructionError("code must be over GF(q^2)")
    if not is_hermitian_self_orthogonal(C, ctx):
        raise ConstructionError("code is not Hermitian self-orthogonal")
    D = expand_to_paircode(C, ctx)
    Q = from_symplectic(D, budget=budget, method=method, designed=designed, provenance=provenance)
    assert Q.k == C.n - 2 * C.k
    return Q


def css_stabilizer(C1: LinearCode, C2: LinearCode) -> PairCode:
    f = C1.field
    h1 = dual_euclidean(C1).gen
    h2 = dual_euclidean(C2).gen
    n = C1.n
    v = np.vstack([h1, np.zeros((h2.shape[0], n), dtype=np.int64)])
    w = np.vstack([np.zeros((h1.shape[0], n), dtype=np.int64), h2])
    return PairCode(f, np.hstack([v, w]), n)


def from_css(C1: LinearCode, C2: LinearCode, budget: int | None = None,
             designed: int | None = None, provenance: str = "css") -> QuantumCode:
    """QECC(n, k1 + k2 - n, d, q) from C2^perp contained in C1."""
    if C1.field != C2.field or C1.n != C2.n:
        raise ConstructionError("CSS inputs must share field and length")
    if not dual_euclidean(C2) <= C1:
        raise ConstructionError("C2^perp is not contained in C1")
    S = css_stabilizer(C1, C2)
    cert = css_distance(C1, C2, budget=budget, designed=designed)
    Q = _finish(S, cert, provenance)
    assert Q.k == C1.k + C2.k - C1.n
    return Q


def from_weakly_selfdual(C: LinearCode, budget: int | None = None, designed: int | None = None,
                         provenance: str = "weakly-self-dual") -> QuantumCode:
    """QECC(n, n - 2k, d, q) from C contained in C^perp (both CSS inputs are C^perp)."""
    D = dual_euclidean(C)
    if not C <= D:
        raise ConstructionError("code is not weakly self-dual")
    return from_css(D, D, budget=budget, designed=designed, provenance=provenance)


def family_theorem3(field: FieldSpec, mu: int, budget: int | None = None) -> tuple[QuantumCode, QuantumCode]:
    """CSS codes [[q, q-2mu-2, mu+2]]_q and [[q-1, q-2mu-1, mu+1]]_q."""
    q = field.q
    if not lemma1_range(q, mu):
        raise ValueError(f"mu={mu} outside 0 <= mu < (q-1)/2 for q={q}")
    full = from_weakly_selfdual(code_C(field, mu), budget, designed=mu + 2,
                                provenance=f"css C^({q},{mu})")
    short = from_weakly_selfdual(code_Cs(field, mu), budget, designed=mu + 1,
                                 provenance=f"css C_s^({q},{mu})")
    assert full.params.triple[:2] == (q, q - 2 * mu - 2)
    assert short.params.triple[:2] == (q - 1, q - 2 * mu - 1)
    return full, short


def family_theorem4(ext: ExtensionContext, mu: int, budget: int | None = None,
                    method: str = "auto") -> tuple[QuantumCode, QuantumCode]:
    """Hermitian codes [[q^2, q^2-2mu-2, mu+2]]_q and [[q^2-1, q^2-2mu-1, mu+1]]_q."""
    q = ext.q
    if not 0 <= mu < q - 1:
        raise ValueError(f"mu={mu} outside 0 <= mu < q-1 for q={q}")
    full = from_hermitian(code_C(ext.ext, mu), ext, budget, method, designed=mu + 2,
                          provenance=f"hermitian C^({q * q},{mu})")
    short = from_hermitian(code_Cs(ext.ext, mu), ext, budget, method, designed=mu + 1,
                           provenance=f"hermitian C_s^({q * q},{mu})")
    return full, short


def trivial_code(field: FieldSpec, n: int) -> QuantumCode:
    """[[n, n, 1]]_q with an empty stabilizer."""
    return from_symplectic(PairCode.zero(field, n), provenance="trivial")


def with_designed(Q: QuantumCode, d: int) -> QuantumCode:
    return replace(Q, params=replace(Q.params, d=d))
