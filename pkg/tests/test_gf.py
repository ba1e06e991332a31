import numpy as np
import pytest

from qmds.conway import bundled_table, conway_polynomial, is_primitive
from qmds.gf import FieldError, GF, arith, field_create, make_extension, prime_power

from conftest import oracle_for
from oracles import smallest_primitive_root

SMALL_FIELDS = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 2), (11, 1), (13, 1)]

# Published Conway polynomials (low degree first)
KNOWN_CONWAY = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (11, 2): (2, 7, 1),
}


@pytest.mark.parametrize("pm", sorted(KNOWN_CONWAY))
def test_bundled_conway_matches_published(pm):
    assert bundled_table()[pm] == KNOWN_CONWAY[pm]


@pytest.mark.parametrize("pm", [(2, 6), (3, 4), (5, 3), (7, 2)])
def test_search_reproduces_bundle(pm):
    conway_polynomial.cache_clear()
    assert conway_polynomial(*pm) == bundled_table()[pm]


def test_gf2():
    F = field_create(2, 1)
    assert F.q == 2 and F.alpha == 1


def test_gf4_modulus_is_unique_irreducible_quadratic():
    F = field_create(2, 2)
    assert F.modulus == (1, 1, 1)
    # exhaustive: x^2 + a x + b is irreducible over GF(2) iff it has no root
    irreducible = [(b, a, 1) for a in range(2) for b in range(2) if all((x * x + a * x + b) % 2 for x in range(2))]
    assert irreducible == [(1, 1, 1)]
    a = F.alpha
    assert F.mul(a, a) == F.add(a, 1)


def test_gf7_alpha_is_smallest_primitive_root():
    F = field_create(7, 1)
    assert smallest_primitive_root(7) == 3
    assert F.alpha == 3


def test_unsupported_fields():
    with pytest.raises(FieldError):
        field_create(4, 1)
    with pytest.raises(FieldError):
        field_create(2, 17)
    with pytest.raises(FieldError):
        prime_power(12)


@pytest.mark.parametrize("pm", SMALL_FIELDS)
def test_tables_agree_with_polynomial_arithmetic(pm):
    F = field_create(*pm)
    O = oracle_for(F)
    for a in range(F.q):
        for b in range(F.q):
            assert F.add(a, b) == O.add(a, b)
            assert F.mul(a, b) == O.mul(a, b)


@pytest.mark.parametrize("pm", SMALL_FIELDS + [(7, 4), (2, 10), (3, 6)])
def test_field_axioms_on_random_triples(pm, rng):
    F = field_create(*pm)
    a, b, c = rng.integers(0, F.q, size=(3, 100))
    assert np.array_equal(F.add(F.add(a, b), c), F.add(a, F.add(b, c)))
    assert np.array_equal(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)))
    assert np.array_equal(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)))
    assert np.array_equal(F.add(a, F.neg(a)), np.zeros(100))
    nz = a[a != 0]
    assert np.all(F.mul(nz, F.inv(nz)) == 1)


@pytest.mark.parametrize("pm", SMALL_FIELDS + [(2, 16), (3, 10)])
def test_alpha_is_primitive(pm):
    F = field_create(*pm)
    powers = F.power_of_alpha(np.arange(F.q - 1))
    assert sorted(powers.tolist()) == list(range(1, F.q))
    nz = np.arange(1, F.q)
    assert np.array_equal(F.exp[F.log[nz]], nz)
    assert is_primitive(list(F.modulus), F.p)


def test_element_wrapper():
    F = GF(4)
    a = F.element(F.alpha)
    assert a * a == a + 1
    assert arith(a, a, "mul") == a + F.element(1)
    x = F.element(3)
    assert x + (-x) == F.element(0)
    seven = GF(7)
    assert arith(seven.element(3), 6, "pow") == seven.element(1)
    with pytest.raises(ZeroDivisionError):
        arith(a, F.element(0), "div")
    with pytest.raises(ZeroDivisionError):
        F.element(0).inverse()
    with pytest.raises(FieldError):
        a + GF(2).element(1)


def test_frobenius_and_trace_small():
    ctx = make_extension(2, 1)
    E = ctx.ext
    a = E.alpha
    assert ctx.frobenius(0) == 0
    assert ctx.frobenius(a) == E.add(a, 1)
    assert ctx.trace(0) == 0
    assert ctx.trace(a) == 1
    assert ctx.gamma == a and ctx.gamma0 == 1
    assert ctx.embed(1) == 1


def test_trace_gf9_fibres():
    ctx = make_extension(3, 1)
    t = ctx.trace(np.arange(9))
    assert sorted(np.bincount(t, minlength=3).tolist()) == [3, 3, 3]
    image = ctx.embed(np.arange(3))
    assert len(set(image.tolist())) == 3
    assert np.array_equal(ctx.frobenius(image), image)


@pytest.mark.parametrize("pm", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1)])
def test_extension_invariants(pm):
    ctx = make_extension(*pm)
    B, E, q = ctx.base, ctx.ext, ctx.q
    a = np.arange(q)
    emb = ctx.embed(a)
    assert np.array_equal(ctx.embed(B.add(a[:, None], a[None, :])), E.add(emb[:, None], emb[None, :]))
    assert np.array_equal(ctx.embed(B.mul(a[:, None], a[None, :])), E.mul(emb[:, None], emb[None, :]))
    x = np.arange(E.q)
    fixed = np.flatnonzero(ctx.frobenius(x) == x)
    assert sorted(fixed.tolist()) == sorted(emb.tolist())
    assert np.array_equal(ctx.frobenius(ctx.frobenius(x)), x)
    ctx.trace(x)  # raises unless every trace lands in the base field
    g = ctx.gamma
    assert not ctx.in_base(g)
    lhs = E.sub(E.add(E.pow(g, q), g), ctx.embed(ctx.gamma0))
    assert lhs == 0
    v, w = ctx.split(x)
    assert np.array_equal(ctx.join(v, w), x)
