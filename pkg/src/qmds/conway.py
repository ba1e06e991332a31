"""Conway polynomials over GF(p) by exhaustive search.

Polynomials are coefficient lists, lowest degree first.  The search is only
used to regenerate the bundled table and as an opt-in fallback in
:func:`qmds.gf.field_create`.
"""

from __future__ import annotations

import itertools
import json
from functools import lru_cache
from importlib import resources

from sympy import factorint, isprime


def _polymulmod(a, b, f, p):
    m = len(f) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    # f is monic
    for i in range(len(prod) - 1, m - 1, -1):
        c = prod[i]
        if c:
            for j in range(m + 1):
                prod[i - m + j] = (prod[i - m + j] - c * f[j]) % p
    res = prod[:m]
    return res + [0] * (m - len(res))


def _polypowmod(base, e, f, p):
    m = len(f) - 1
    result = [1] + [0] * (m - 1)
    while e:
        if e & 1:
            result = _polymulmod(result, base, f, p)
        base = _polymulmod(base, base, f, p)
        e >>= 1
    return result


def _is_one(a):
    return a[0] == 1 and not any(a[1:])


def _eval_at(g, y, f, p):
    """Evaluate the polynomial g at the residue y modulo f (Horner)."""
    m = len(f) - 1
    acc = [0] * m
    for c in reversed(g):
        acc = _polymulmod(acc, y, f, p)
        acc[0] = (acc[0] + c) % p
    return acc


def is_primitive(f, p):
    m = len(f) - 1
    if f[0] % p == 0:
        return False
    order = p**m - 1
    x = [0, 1] + [0] * (m - 2) if m > 1 else [(-f[0]) % p]
    if not _is_one(_polypowmod(x, order, f, p)):
        return False
    return all(not _is_one(_polypowmod(x, order // r, f, p)) for r in _prime_factors(order))


@lru_cache(maxsize=None)
def _prime_factors(n: int) -> tuple[int, ...]:
    return tuple(factorint(n))


@lru_cache(maxsize=None)
def conway_polynomial(p: int, m: int) -> tuple[int, ...]:
    """Return the Conway polynomial of degree ``m`` over GF(``p``)."""
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError("degree must be >= 1")
    subs = [(d, conway_polynomial(p, d)) for d in range(1, m) if m % d == 0]
    order = p**m - 1
    for a in itertools.product(range(p), repeat=m):
        # a = (a_{m-1}, ..., a_0); coefficient of x^i is (-1)^(m-i) a_i
        f = [0] * (m + 1)
        f[m] = 1
        for pos, ai in enumerate(a):
            i = m - 1 - pos
            f[i] = ai if (m - i) % 2 == 0 else (-ai) % p
        if not is_primitive(f, p):
            continue
        x = [0, 1] + [0] * (m - 2) if m > 1 else [(-f[0]) % p]
        ok = True
        for d, g in subs:
            y = _polypowmod(x, order // (p**d - 1), f, p)
            if any(_eval_at(list(g), y, f, p)):
                ok = False
                break
        if ok:
            return tuple(f)
    raise RuntimeError(f"no Conway polynomial found for ({p}, {m})")  # pragma: no cover


@lru_cache(maxsize=1)
def bundled_table() -> dict[tuple[int, int], tuple[int, ...]]:
    text = resources.files("qmds.data").joinpath("conway.json").read_text()
    raw = json.loads(text)
    return {(e["p"], e["m"]): tuple(e["modulus"]) for e in raw["polynomials"]}


def generate_table(limit: int = 2**16) -> list[dict]:
    from sympy import primerange

    out = []
    for p in primerange(2, limit + 1):
        m = 1
        while p**m <= limit:
            out.append({"p": p, "m": m, "modulus": list(conway_polynomial(p, m))})
            m += 1
    return out


if __name__ == "__main__":  # regenerate src/qmds/data/conway.json
    import sys

    limit = int(sys.argv[1]) if len(sys.argv) > 1 else 2**16
    print(json.dumps({"limit": limit, "polynomials": generate_table(limit)}, separators=(",", ":")))
