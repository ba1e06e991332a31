"""QECC(n, n-2d+2, d, q) for 3 <= n <= q by shortening the length-q CSS codes."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from sympy import factorint

from .gf import GF
from .puncture import puncture_code_rs_css_closed, shorten_to_length
from .qecc import QuantumCode, family_theorem3, singleton_defect, trivial_code

BRUTE_FORCE_LIMIT = 10**7


def prime_powers(lo: int, hi: int) -> list[int]:
    return [q for q in range(max(lo, 2), hi + 1) if len(factorint(q)) == 1]


@dataclass
class SweepEntry:
    q: int
    n: int
    d: int
    code: QuantumCode = dc_field(repr=False)
    brute_force: bool
    source: str

    @property
    def defect(self) -> int:
        return singleton_defect(self.code.params)

    @property
    def ok(self) -> bool:
        p = self.code.params
        return p.triple == (self.n, self.n - 2 * self.d + 2, self.d) and self.defect == 0 and self.code.verified

    def to_json(self) -> dict:
        c = self.code
        return {
            "q": self.q, "n": self.n, "d": self.d, "code": str(c),
            "k": c.k, "d_found": c.d, "defect": self.defect,
            "verified": c.verified, "method": c.certificate.method if c.certificate else None,
            "brute_force": self.brute_force, "source": self.source, "ok": self.ok,
        }


def mds_code(q: int, n: int, d: int, budget: int | None = None,
             brute_force_limit: int = BRUTE_FORCE_LIMIT) -> SweepEntry:
    """Build and certify one QECC(n, n-2d+2, d, q) with 3 <= n <= q, 1 <= d <= n/2 + 1."""
    if not (3 <= n <= q and 1 <= d and 2 * d <= n + 2):
        raise ValueError(f"no construction for n={n}, d={d}, q={q}")
    field = GF(q)
    k = n - 2 * d + 2
    brute = q ** (n + k) <= brute_force_limit
    method = "exhaustive" if brute else "auto"
    if d == 1:
        return SweepEntry(q, n, d, trivial_code(field, n), True, "trivial")
    mu = d - 2
    Q, _ = family_theorem3(field, mu, budget)
    P = puncture_code_rs_css_closed(field, mu)
    res = shorten_to_length(Q, n, budget=budget, P=P, method=method)
    return SweepEntry(q, n, d, res.code, brute, f"C^({q},{mu}) shortened along a weight-{n} word")


def sweep_mds(q_max: int = 9, budget: int | None = None, q_min: int = 3,
              brute_force_limit: int = BRUTE_FORCE_LIMIT) -> list[SweepEntry]:
    out = []
    for q in prime_powers(q_min, q_max):
        for n in range(3, q + 1):
            for d in range(1, n // 2 + 2):
                out.append(mds_code(q, n, d, budget, brute_force_limit))
    return out
