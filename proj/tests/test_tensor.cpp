#include <catch2/catch_amalgamated.hpp>

#include "qyb/rmatrix.hpp"

using namespace qyb;

namespace {
Scalar q(int k) { return Scalar::q_pow(k); }
}

TEST_CASE("embed") {
    SECTION("embed(identity4, 1, 3) = identity8 for N = 2") {
        CHECK(embed(TensorOp::identity(2, 2), 1, 3) == TensorOp::identity(2, 3));
    }
    SECTION("braid check for the permutation") {
        TensorOp P = TensorOp::permutation(2);
        TensorOp p1 = embed(P, 1, 3), p2 = embed(P, 2, 3);
        CHECK(p1 * p2 * p1 == p2 * p1 * p2);
    }
    SECTION("nonzero count of embed is N times the two-site count") {
        TensorOp r = build_rhat(RFamily::glq(2));
        CHECK(embed(r, 2, 3).nnz() == static_cast<size_t>(2) * r.nnz());
        CHECK(embed(r, 1, 4).nnz() == static_cast<size_t>(4) * r.nnz());
    }
    SECTION("site out of range / dimension mismatch") {
        CHECK_THROWS(embed(TensorOp::identity(2, 2), 3, 3));
        CHECK_THROWS(embed(TensorOp::identity(2, 1), 1, 3));
    }
    SECTION("locality: [embed(A,a), embed(B,b)] = 0 for |a-b| > 1") {
        TensorOp r = build_rhat(RFamily::glq(2));
        TensorOp a = embed(r, 1, 4), b = embed(r, 3, 4);
        CHECK(a * b == b * a);
    }
    SECTION("embed_pair at adjacent sites matches embed") {
        TensorOp r = build_rhat(RFamily::glq(2));
        CHECK(embed_pair(r, 2, 3, 4) == embed(r, 2, 4));
    }
}

TEST_CASE("permutation") {
    CHECK(TensorOp::permutation(1) == TensorOp::identity(1, 2));
    SECTION("N=2 swaps (1,2) <-> (2,1)") {
        TensorOp P = TensorOp::permutation(2);
        CHECK(P.at(1, 2) == ScalarFrac(1));
        CHECK(P.at(2, 1) == ScalarFrac(1));
        CHECK(P.at(0, 0) == ScalarFrac(1));
        CHECK(P.at(3, 3) == ScalarFrac(1));
        CHECK(P.nnz() == 4);
    }
    SECTION("P^2 = 1") {
        for (int N : {2, 3}) {
            TensorOp P = TensorOp::permutation(N);
            CHECK(P * P == TensorOp::identity(N, 2));
        }
    }
}

TEST_CASE("mat_ops") {
    TensorOp r = build_rhat(RFamily::glq(2));
    SECTION("RHat RHat^-1 = 1") {
        CHECK(r * r.inverse() == TensorOp::identity(2, 2));
        CHECK(r.inverse() * r == TensorOp::identity(2, 2));
    }
    SECTION("Hecke relation RHat^2 - lambda RHat - 1 = 0") {
        TensorOp res = r * r - r.scaled(ScalarFrac(lambda_q())) - TensorOp::identity(2, 2);
        CHECK(res.is_zero());
    }
    SECTION("RHat^3 = alpha_3 RHat + alpha_2, against a dense 4x4 power oracle") {
        // dense cube by explicit loops
        Index d = 4;
        std::vector<std::vector<ScalarFrac>> m(d, std::vector<ScalarFrac>(d, ScalarFrac(0)));
        for (Index i = 0; i < d; ++i)
            for (Index j = 0; j < d; ++j)
                for (Index k = 0; k < d; ++k)
                    for (Index l = 0; l < d; ++l) m[i][j] += r.at(i, k) * r.at(k, l) * r.at(l, j);
        TensorOp cube = r.pow(3);
        for (Index i = 0; i < d; ++i)
            for (Index j = 0; j < d; ++j) CHECK(cube.at(i, j) == m[i][j]);
        ScalarFrac alpha3(q(2) - Scalar(1) + q(-2)), alpha2{lambda_q()};
        CHECK(cube == r.scaled(alpha3) + TensorOp::identity(2, 2).scaled(alpha2));
    }
    SECTION("singular matrix has no inverse") {
        TensorOp s(2, 1);
        s.set(0, 0, ScalarFrac(1));
        CHECK_THROWS(s.inverse());
    }
    SECTION("exact inverse identity for a full fraction matrix") {
        TensorOp s(2, 1);
        s.set(0, 0, ScalarFrac(q(1) + Scalar(1), q(1) - Scalar(1)));
        s.set(0, 1, ScalarFrac(1));
        s.set(1, 0, ScalarFrac(q(2)));
        s.set(1, 1, ScalarFrac(lambda_q()));
        CHECK(s * s.inverse() == TensorOp::identity(2, 1));
    }
}

TEST_CASE("partial transpose") {
    TensorOp P = TensorOp::permutation(2);
    SECTION("involution") {
        CHECK(P.partial_transpose(1).partial_transpose(1) == P);
        CHECK(P.partial_transpose(2).partial_transpose(2) == P);
    }
    SECTION("(R^{t1 t2}) = R21 for GLq(N)") {
        for (int N : {2, 3}) {
            TensorOp rhat = build_rhat(RFamily::glq(N));
            TensorOp perm = TensorOp::permutation(N);
            TensorOp R = perm * rhat;
            TensorOp R21 = perm * R * perm;
            CHECK(R.partial_transpose(1).partial_transpose(2) == R21);
        }
    }
    SECTION("Psi^{t1} R^{t1} = 1 for GLq(2)") {
        TensorOp rhat = build_rhat(RFamily::glq(2));
        TensorOp P2 = TensorOp::permutation(2);
        TensorOp R = P2 * rhat;
        TensorOp psi = P2 * skew_inverse(rhat);  // Psi = P PsiHat
        CHECK(psi.partial_transpose(1) * R.partial_transpose(1) == TensorOp::identity(2, 2));
    }
}

TEST_CASE("weighted partial trace") {
    RData r = build(RFamily::glq(2));
    SECTION("Tr_D(2)(RHat) = identity on site 1") {
        TensorOp t = weighted_right_trace(r.rhat, r.D);
        CHECK(t == TensorOp::identity(2, 1));
    }
    SECTION("Tr_D(2)(RHat^-1) = q^-4 identity") {
        CHECK(weighted_right_trace(r.rhat_inv, r.D) == TensorOp::identity(2, 1).scaled(ScalarFrac(q(-4))));
    }
    SECTION("full unweighted trace of identity on V2^3 = 8") {
        TensorOp one = TensorOp::identity(2, 3);
        TensorOp t = one.weighted_partial_trace({1, 2, 3});
        CHECK(t.at(0, 0) == ScalarFrac(8));
    }
    SECTION("multiplicative over disjoint site sets") {
        TensorOp a = embed(r.rhat, 1, 4);
        SiteWeights D = r.D;
        TensorOp t1 = a.weighted_partial_trace({3, 4}, &D);
        TensorOp t2 = a.weighted_partial_trace({3}, &D).weighted_partial_trace({3}, &D);
        CHECK(t1 == t2);
    }
    SECTION("linearity") {
        TensorOp a = embed(r.rhat, 1, 3), b = embed(r.rhat_inv, 2, 3);
        SiteWeights D = r.D;
        CHECK((a + b).weighted_partial_trace({2}, &D) ==
              a.weighted_partial_trace({2}, &D) + b.weighted_partial_trace({2}, &D));
    }
}

TEST_CASE("rank and kernel") {
    RData r = build(RFamily::glq(2));
    auto proj = spectral_projectors(r);
    SECTION("rank(P+) = 3 (classical symmetrizer rank, constant in q)") {
        CHECK(rank_and_kernel(proj[0]).rank == 3);
    }
    SECTION("rank(A12) = 1 for GLq(2)") {
        auto rk = rank_and_kernel(proj[1]);
        CHECK(rk.rank == 1);
        CHECK(rk.kernel.size() == 3);
        // kernel vectors are annihilated exactly
        for (const auto& vec : rk.kernel) {
            auto out = proj[1].apply(vec);
            for (const auto& c : out) CHECK(c.is_zero());
        }
    }
    SECTION("rank(zero) = 0") {
        auto rk = rank_and_kernel(TensorOp::zero(2, 2));
        CHECK(rk.rank == 0);
        CHECK(rk.kernel.size() == 4);
    }
    SECTION("rank(identity) = dim") {
        CHECK(rank_and_kernel(TensorOp::identity(3, 2)).rank == 9);
        CHECK(rank_and_kernel(TensorOp::identity(3, 2)).kernel.empty());
    }
}

TEST_CASE("json-ready entry ordering") {
    TensorOp t(2, 1);
    t.set(1, 0, ScalarFrac(q(1)));
    t.set(0, 1, ScalarFrac(1));
    std::vector<std::pair<Index, Index>> order;
    for (const auto& [rc, v] : t.entries()) order.push_back(rc);
    CHECK(order == std::vector<std::pair<Index, Index>>{{0, 1}, {1, 0}});
}
