"""The generator matrices G^(q, mu) and the self-orthogonality checks.

Row ``i`` of G^(q, mu) is (alpha^(i*0), ..., alpha^(i*(q-2)), [i == 0]).  Its
row space is an MDS code [q, mu+1, q-mu]_q (the dual of an extended RS code).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import ExtensionContext, FieldSpec
from .gfla import LinearCode, shorten_classical


def power_row(field: FieldSpec, t: int) -> np.ndarray:
    """G_t: (alpha^(t*l))_{l=0..q-2} followed by 1 if t == 0 else 0."""
    q = field.q
    row = np.empty(q, dtype=np.int64)
    row[: q - 1] = field.power_of_alpha(t * np.arange(q - 1))
    row[q - 1] = 1 if t == 0 else 0
    return row


@dataclass(frozen=True)
class GeneratorSpec:
    field: FieldSpec
    mu: int
    rows: np.ndarray

    @property
    def code(self) -> LinearCode:
        return LinearCode(self.field, self.rows)


def gen_matrix(field: FieldSpec, mu: int) -> GeneratorSpec:
    """The (mu+1) x q matrix G^(q, mu); mu may range over 0..q-2."""
    if not 0 <= mu <= field.q - 2:
        raise ValueError(f"mu={mu} outside 0..{field.q - 2} for {field}")
    rows = np.vstack([power_row(field, i) for i in range(mu + 1)])
    rows.setflags(write=False)
    return GeneratorSpec(field, mu, rows)


def code_C(field: FieldSpec, mu: int) -> LinearCode:
    return gen_matrix(field, mu).code


def code_Cs(field: FieldSpec, mu: int) -> LinearCode:
    """C^(q, mu) shortened at the last coordinate: [q-1, mu, q-mu]_q."""
    return shorten_classical(code_C(field, mu), [field.q - 1])


def check_lemma1(field: FieldSpec, mu: int) -> bool:
    """G G^T == 0 over GF(q), i.e. C^(q, mu) is weakly self-dual."""
    G = gen_matrix(field, mu).rows
    return not np.any(field.matmul(G, G.T))


def check_lemma2(ext: ExtensionContext, mu: int) -> bool:
    """sum_l G_i[l] G_j[l]^q == 0 for all row pairs of G^(q^2, mu)."""
    G = gen_matrix(ext.ext, mu).rows
    return not np.any(ext.ext.matmul(G, ext.frobenius(G).T))


def lemma1_range(q: int, mu: int) -> bool:
    return 0 <= mu and 2 * mu < q - 1


def lemma2_range(q: int, mu: int) -> bool:
    return 0 <= mu <= q - 2
