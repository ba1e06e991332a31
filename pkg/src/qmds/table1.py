"""Rebuild the length-q^2 shortening table and diff it against the shipped fixture."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from importlib import resources

from .gf import extension_for
from .puncture import SupportResult, puncture_code_definition, puncture_code_rs_hermitian_closed, weight_support
from .qecc import QuantumCode, family_theorem4

MATCH, MISMATCH, UNVERIFIED = "MATCH", "MISMATCH", "UNVERIFIED"


def parse_weights(text: str) -> list[int]:
    """'6,8-25' -> [6, 8, 9, ..., 25]."""
    out: list[int] = []
    for part in text.replace("–", "-").split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return sorted(set(out))


def format_weights(weights) -> str:
    """Inverse of :func:`parse_weights` (runs of three or more collapse to a range)."""
    ws = sorted(weights)
    parts, i = [], 0
    while i < len(ws):
        j = i
        while j + 1 < len(ws) and ws[j + 1] == ws[j] + 1:
            j += 1
        if j - i >= 2:
            parts.append(f"{ws[i]}-{ws[j]}")
        else:
            parts.extend(str(w) for w in ws[i : j + 1])
        i = j + 1
    return ",".join(parts)


@lru_cache(maxsize=1)
def load_fixture() -> dict:
    return json.loads(resources.files("qmds.data").joinpath("table1.json").read_text())


def fixture_rows(q_list=None) -> list[dict]:
    rows = load_fixture()["rows"]
    return [r for r in rows if q_list is None or r["q"] in q_list]


@dataclass
class RowReport:
    q: int
    mu: int
    expected: dict
    code: QuantumCode = dc_field(repr=False)
    pcode_nk: tuple[int, int]
    support: SupportResult
    qecc_status: str
    pcode_status: str
    weights_status: str
    distribution_status: str | None = None
    notes: list[str] = dc_field(default_factory=list)

    @property
    def statuses(self) -> list[str]:
        s = [self.qecc_status, self.pcode_status, self.weights_status]
        return s + ([self.distribution_status] if self.distribution_status else [])

    @property
    def status(self) -> str:
        if MISMATCH in self.statuses:
            return MISMATCH
        if UNVERIFIED in self.statuses:
            return UNVERIFIED
        return MATCH

    def to_json(self) -> dict:
        P_d = self.support.min_weight if self.support.exact else None
        return {
            "q": self.q,
            "mu": self.mu,
            "qecc": list(self.code.params.triple),
            "qecc_verified": self.code.verified,
            "qecc_status": self.qecc_status,
            "pcode": [*self.pcode_nk, P_d],
            "pcode_status": self.pcode_status,
            "weights": format_weights(self.support.weights),
            "weights_exact": self.support.exact,
            "weights_method": self.support.method,
            "weights_status": self.weights_status,
            "distribution_status": self.distribution_status,
            "expected": {k: self.expected[k] for k in ("qecc", "pcode", "weights")},
            "status": self.status,
            "notes": self.notes,
        }


def _qecc_status(Q: QuantumCode, exp: list[int]) -> str:
    if list(Q.params.triple) != exp:
        return MISMATCH
    return MATCH if Q.verified else UNVERIFIED


def check_row(row: dict, budget: int | None = None, samples: int = 200_000) -> RowReport:
    q, mu = row["q"], row["mu"]
    ctx = extension_for(q)
    Q, _ = family_theorem4(ctx, mu, budget=budget)
    P = puncture_code_definition(Q.stabilizer)
    notes: list[str] = []
    if P != puncture_code_rs_hermitian_closed(ctx, mu):
        notes.append("definition and closed form of P(C) disagree")
    sup = weight_support(P, budget=budget, samples=samples)
    expected_w = set(parse_weights(row["weights"]))
    allowed = expected_w | set(row.get("uncertain", []))
    en, ek, ed = row["pcode"]

    if (P.n, P.k) != (en, ek):
        pstat = MISMATCH
    elif sup.exact:
        pstat = MATCH if sup.min_weight == ed else MISMATCH
    else:
        pstat = MISMATCH if sup.weights and sup.weights[0] < ed else UNVERIFIED

    found = set(sup.weights)
    if sup.exact:
        wstat = MATCH if found == expected_w or (expected_w <= found <= allowed) else MISMATCH
        extra = sorted(found & (allowed - expected_w))
        if extra:
            notes.append(f"weights {extra} present (left open by the table)")
    else:
        wstat = UNVERIFIED if found <= allowed else MISMATCH
        notes.append(f"sampled {samples} codewords; support not exhaustive")
        if not found <= allowed:
            notes.append(f"sampled weights outside the table: {sorted(found - allowed)}")

    dstat = None
    if "distribution" in row:
        if sup.distribution is not None:
            exp = dict((w, c) for w, c in row["distribution"])
            got = {w: c for w, c in enumerate(sup.distribution.counts) if c}
            dstat = MATCH if got == exp else MISMATCH
        else:
            dstat = UNVERIFIED
    if not Q.verified:
        notes.append("quantum distance is the designed value (enumeration over budget)")
    return RowReport(q, mu, row, Q, (P.n, P.k), sup, _qecc_status(Q, row["qecc"]), pstat, wstat, dstat, notes)


def reproduce_table1(q_list=(2, 3, 4, 5, 7), budget: int | None = None,
                     samples: int = 200_000) -> list[RowReport]:
    return [check_row(row, budget, samples) for row in fixture_rows(q_list)]
