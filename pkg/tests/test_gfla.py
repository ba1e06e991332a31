import itertools

import numpy as np
import pytest

from qmds.gf import GF, make_extension
from qmds.gfla import (
    BudgetExceeded,
    LinearCode,
    PairCode,
    WeightDistribution,
    dual_euclidean,
    dual_hermitian,
    dual_symplectic,
    expand_to_paircode,
    in_row_space,
    is_mds,
    kernel,
    krawtchouk,
    macwilliams_transform,
    puncture_classical,
    rank,
    rref,
    shorten_classical,
    subfield_subcode,
    symplectic_product,
    weight_distribution_exhaustive,
)
from qmds.mdsgen import code_C, code_Cs, gen_matrix

from conftest import oracle_for
from oracles import hamming_distribution, span, symplectic, symplectic_weight


def random_matrix(rng, q, k, n):
    return rng.integers(0, q, size=(k, n))


# --- rref / kernel -------------------------------------------------------------------


def test_rref_identity_and_zero():
    F = GF(5)
    R, r, piv = rref(np.eye(4, dtype=int), F)
    assert r == 4 and piv == [0, 1, 2, 3]
    assert np.array_equal(R, np.eye(4))
    R, r, piv = rref(np.zeros((3, 4), dtype=int), F)
    assert r == 0 and piv == [] and not R.any()


def test_rref_g31_rank_two():
    F = GF(3)
    G = gen_matrix(F, 1).rows
    assert G.tolist() == [[1, 1, 1], [1, F.alpha, 0]]
    assert rank(G, F) == 2
    assert len(span(oracle_for(F), G, 3)) == 9


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_rref_is_reduced_and_row_equivalent(q, rng):
    F = GF(q)
    O = oracle_for(F)
    for _ in range(5):
        M = random_matrix(rng, q, 3, 5)
        R, r, piv = rref(M, F)
        assert r == rank(M, F)
        for i, c in enumerate(piv):
            assert R[i, c] == 1
            assert np.count_nonzero(R[:, c]) == 1
        assert not R[r:].any()
        assert span(O, R[:r], 5) == span(O, M, 5)


def test_kernel_examples():
    F = GF(7)
    assert kernel(np.eye(3, dtype=int), F).shape[0] == 0
    K = kernel(np.ones((1, 7), dtype=int), F)
    assert K.shape == (6, 7)
    assert not F.matmul(K, np.ones((7, 1), dtype=int)).any()


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
def test_kernel_dimension_and_orthogonality(q, rng):
    F = GF(q)
    for _ in range(5):
        M = random_matrix(rng, q, 3, 6)
        K = kernel(M, F)
        assert K.shape[0] == 6 - rank(M, F)
        assert not F.matmul(M, K.T).any()


def test_in_row_space():
    F = GF(3)
    B = np.array([[1, 0, 2], [0, 1, 1]])
    assert in_row_space(B, [[1, 1, 0], [2, 2, 0]], F).tolist() == [True, True]
    assert in_row_space(B, [[0, 0, 1]], F).tolist() == [False]


# --- codes and duals -----------------------------------------------------------------


def test_dual_of_full_space_is_zero():
    F = GF(4)
    assert dual_euclidean(LinearCode.full(F, 5)).k == 0
    assert dual_euclidean(LinearCode.zero(F, 5)) == LinearCode.full(F, 5)


def test_dual_of_repetition_code_gf3():
    F = GF(3)
    O = oracle_for(F)
    C = code_C(F, 0)
    D = dual_euclidean(C)
    assert (D.n, D.k) == (3, 2)
    words = span(O, D.gen, 3)
    expected = {w for w in itertools.product(range(3), repeat=3) if O.dot(w, (1, 1, 1)) == 0}
    assert words == expected
    assert D.min_distance() == 2


def test_hermitian_dual_examples():
    ctx = make_extension(2, 1)
    assert dual_hermitian(LinearCode.zero(ctx.ext, 3), ctx) == LinearCode.full(ctx.ext, 3)
    C = code_C(ctx.ext, 0)
    H = dual_hermitian(C, ctx)
    assert (H.n, H.k) == (4, 3)
    assert C <= H


@pytest.mark.parametrize("q", [2, 3, 4])
def test_hermitian_dual_against_oracle(q, rng):
    ctx = make_extension(*{2: (2, 1), 3: (3, 1), 4: (2, 2)}[q])
    E = ctx.ext
    O = oracle_for(E)
    n = 3
    G = random_matrix(rng, E.q, 1, n)
    C = LinearCode(E, G)
    H = dual_hermitian(C, ctx)
    assert H.k == n - C.k
    # x is Hermitian-orthogonal to g iff sum g_i x_i^q = 0
    expected = {
        x for x in itertools.product(range(E.q), repeat=n)
        if O.dot(G[0], [O.pow(t, q) for t in x]) == 0
    }
    assert span(O, H.gen, n) == expected


def test_symplectic_dual_of_zero_is_everything():
    F = GF(3)
    D = dual_symplectic(PairCode.zero(F, 4))
    assert D.r == 8


@pytest.mark.parametrize("q", [2, 3, 5])
def test_dual_dimension_identities(q, rng):
    F = GF(q)
    for k in range(0, 5):
        G = random_matrix(rng, q, k, 5)
        C = LinearCode(F, G, 5)
        D = dual_euclidean(C)
        assert C.k + D.k == 5
        assert dual_euclidean(D) == C
        P = PairCode(F, random_matrix(rng, q, k, 8), 4)
        S = dual_symplectic(P)
        assert P.r + S.r == 8
        assert dual_symplectic(S) == P
        assert not symplectic_product(F, P.gen[:, None, :], S.gen[None, :, :]).any()
    ctx = make_extension(2, 1)
    for k in range(0, 4):
        C = LinearCode(ctx.ext, random_matrix(rng, 4, k, 4), 4)
        H = dual_hermitian(C, ctx)
        assert C.k + H.k == 4
        assert dual_hermitian(H, ctx) == C


def test_symplectic_dual_against_oracle():
    F = GF(3)
    O = oracle_for(F)
    P = PairCode(F, [[1, 2, 0, 1], [0, 1, 1, 0]], 2)
    S = dual_symplectic(P)
    expected = {w for w in itertools.product(range(3), repeat=4) if all(symplectic(O, w, r) == 0 for r in P.gen)}
    assert span(O, S.gen, 4) == expected


# --- weight distributions ------------------------------------------------------------


def test_even_weight_42():
    F = GF(2)
    C = LinearCode(F, [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]])
    W = weight_distribution_exhaustive(C)
    assert W.counts == (1, 0, 6, 0, 1)
    assert W.support == [0, 2, 4]


def test_zero_code_distribution():
    W = weight_distribution_exhaustive(LinearCode.zero(GF(3), 4))
    assert W.counts == (1, 0, 0, 0, 0)


def test_pcode_935_weights():
    # [9,5,4]_3 puncture code of the [[9,5,3]]_3 Hermitian code
    from qmds.puncture import puncture_code_rs_hermitian_closed

    P = puncture_code_rs_hermitian_closed(make_extension(3, 1), 1)
    assert (P.n, P.k) == (9, 5)
    W = weight_distribution_exhaustive(P)
    assert W.support == [0, 4, 5, 6, 7, 8, 9]
    assert W.counts == tuple(hamming_distribution(span(oracle_for(P.field), P.gen, 9), 9))


def test_min_distance_examples():
    F = GF(3)
    assert code_C(F, 0).min_distance() == 3
    assert LinearCode.zero(F, 3).min_distance() is None
    from qmds.puncture import puncture_code_rs_hermitian_closed

    P = puncture_code_rs_hermitian_closed(make_extension(3, 1), 0)
    assert (P.n, P.k, P.min_distance()) == (9, 8, 2)


def test_symplectic_distribution_against_oracle(rng):
    F = GF(3)
    O = oracle_for(F)
    P = PairCode(F, random_matrix(rng, 3, 3, 8), 4)
    words = span(O, P.gen, 8)
    A = [0] * 5
    for w in words:
        A[symplectic_weight(w)] += 1
    W = P.weight_distribution()
    assert W.kind == "symplectic"
    assert list(W.counts) == A


def test_budget_exceeded():
    C = LinearCode.full(GF(7), 12)
    with pytest.raises(BudgetExceeded):
        C.weight_distribution(budget=1000)


def test_krawtchouk_orthogonality():
    n, a = 5, 3
    K = np.array([[krawtchouk(n, a, j, i) for i in range(n + 1)] for j in range(n + 1)])
    assert np.array_equal(K @ K, (a**n) * np.eye(n + 1, dtype=np.int64))


def test_macwilliams_full_space_gives_zero_code():
    F = GF(3)
    W = weight_distribution_exhaustive(LinearCode.full(F, 4))
    assert macwilliams_transform(W).counts == (1, 0, 0, 0, 0)


def test_macwilliams_rejects_non_distribution():
    with pytest.raises(ValueError):
        macwilliams_transform(WeightDistribution((1, 2, 0), 2, "hamming"))


@pytest.mark.parametrize("q,n,k", [(3, 6, 3), (2, 8, 4)])
def test_macwilliams_involution_random(q, n, k, rng):
    F = GF(q)
    O = oracle_for(F)
    for _ in range(10):
        C = LinearCode(F, random_matrix(rng, q, k, n), n)
        D = dual_euclidean(C)
        WC = hamming_distribution(span(O, C.gen, n), n)
        WD = hamming_distribution(span(O, D.gen, n), n)
        assert list(weight_distribution_exhaustive(C).counts) == WC
        assert list(macwilliams_transform(weight_distribution_exhaustive(C)).counts) == WD
        assert macwilliams_transform(macwilliams_transform(weight_distribution_exhaustive(C))).counts == tuple(WC)


def test_symplectic_macwilliams_against_dual(rng):
    F = GF(2)
    for _ in range(5):
        P = PairCode(F, random_matrix(rng, 2, 3, 10), 5)
        assert macwilliams_transform(P.weight_distribution()) == dual_symplectic(P).weight_distribution()


# --- expansion, shortening, subfield subcodes ----------------------------------------


def test_expand_zero_and_base_valued():
    ctx = make_extension(3, 1)
    assert expand_to_paircode(LinearCode.zero(ctx.ext, 3), ctx).r == 0
    c = ctx.embed(np.array([1, 2, 0]))
    D = expand_to_paircode(LinearCode(ctx.ext, [c]), ctx)
    assert D.contains([[1, 2, 0, 0, 0, 0]]).tolist() == [True]


@pytest.mark.parametrize("pm,mu", [((2, 1), 0), ((3, 1), 1), ((2, 2), 2), ((5, 1), 3)])
def test_expand_hermitian_code_is_symplectic_self_orthogonal(pm, mu):
    ctx = make_extension(*pm)
    C = code_C(ctx.ext, mu)
    D = expand_to_paircode(C, ctx)
    assert D.r == 2 * C.k
    assert D.is_self_orthogonal()


def test_shorten_examples():
    F = GF(5)
    C = code_C(F, 2)
    assert shorten_classical(C, []) == C
    assert shorten_classical(C, [4]) == code_Cs(F, 2)
    assert (code_Cs(F, 2).n, code_Cs(F, 2).k, code_Cs(F, 2).min_distance()) == (4, 2, 3)
    assert shorten_classical(code_C(GF(3), 0), [0]).k == 0


def test_puncture_classical():
    F = GF(3)
    C = code_C(F, 1)
    P = puncture_classical(C, [2])
    assert (P.n, P.k) == (2, 2)


def test_subfield_subcode_of_extended_scalars():
    ctx = make_extension(2, 1)
    F = ctx.base
    C = LinearCode(F, [[1, 1, 0, 0], [0, 0, 1, 1]])
    H = ctx.embed(dual_euclidean(C).gen)
    assert subfield_subcode(H, ctx, 4) == C


def test_is_mds():
    assert is_mds(code_C(GF(7), 3))
    assert not is_mds(LinearCode(GF(2), [[1, 1, 0, 0], [0, 0, 1, 1]]))


def test_json_roundtrip():
    C = code_C(GF(9), 2)
    assert LinearCode.from_json(C.to_json()) == C
    P = expand_to_paircode(code_C(make_extension(2, 1).ext, 0), make_extension(2, 1))
    assert PairCode.from_json(P.to_json()) == P
