#pragma once

#include <future>
#include <thread>

#include "chains.hpp"
#include "knots.hpp"
#include "matalg.hpp"
#include "report.hpp"

namespace qyb {

// The full verification battery.  Every tolerance is exact equality in the
// polynomial ring; "small" runs everything at the stated desk sizes, "full"
// widens the point grids and the random-word sample.
enum class SuiteScale { Small, Full };

namespace acceptance {

inline std::vector<RFamily> ybe_families() {
    return {
        RFamily::glq(2), RFamily::glq(3), RFamily::glq(4),
        RFamily::glq_multi(3, {{1, 2, Rat(3, 5)}, {Rat(1, 2), 1, 7}, {Rat(5, 3), Rat(1, 7), 1}}),
        RFamily::glq_super(2, 1), RFamily::glq_super(1, 2),
        RFamily::soq(3), RFamily::soq(4), RFamily::spq(4),
        RFamily::ospq(1, 2, +1), RFamily::ospq(2, 2, +1),
    };
}

// 1. Exact braid-form Yang-Baxter residual for every family.
inline CheckReport criterion_ybe(SuiteScale) {
    CheckReport rep;
    for (const auto& fam : ybe_families()) {
        TensorOp res = ybe_residual(build_rhat(fam));
        rep.add(fam.name(), res.is_zero());
    }
    return rep;
}

// 2. Characteristic equations, Hecke and cubic with the stated nu.
inline CheckReport criterion_characteristic(SuiteScale) {
    CheckReport rep;
    for (const auto& fam : ybe_families()) {
        RData r = build(fam);
        bool ok = check_characteristic(r).all_pass();
        if (is_bmw_kind(fam.kind)) {
            auto [c, h] = fam.nu_monomial();
            ok = ok && r.nu == Scalar::monomial(c, Exp{h, 0, 0});
        }
        rep.add(fam.name(), ok);
    }
    return rep;
}

// 3. Skew-inverse solver vs closed forms; (skew) for every family.
inline CheckReport criterion_skew(SuiteScale) {
    CheckReport rep;
    for (int N : {2, 3, 4})
        rep.add("GLq(" + std::to_string(N) + ") solver = (skewdym1)",
                skew_inverse(build_rhat(RFamily::glq(N))) == psi_hat_closed_glq(N));
    rep.add("GLqSuper(2,1) solver = (skglnm)",
            skew_inverse(build_rhat(RFamily::glq_super(2, 1))) == psi_hat_closed_glq_super(2, 1));
    for (const auto& fam : ybe_families()) {
        RData r = build(fam);
        TensorOp lhs = (embed(r.rhat, 1, 3) * embed(r.psi_hat, 2, 3)).weighted_partial_trace({2});
        rep.add(fam.name() + " Tr_2(R12 Psi23) = P13", lhs == TensorOp::permutation(r.N()));
    }
    return rep;
}

// 4. Quantum-trace constants and det_q(D).
inline CheckReport criterion_trace_constants(SuiteScale) {
    CheckReport rep;
    for (int N : {2, 3, 4}) {
        RData r = build(RFamily::glq(N));
        rep.add("GLq(" + std::to_string(N) + ") Tr(D) = q^-N [N]",
                r.trD == ScalarFrac(Scalar::q_pow(-N) * q_number(N)));
        rep.add("GLq(" + std::to_string(N) + ") det_q(D) = q^{-N^2}",
                qdeterminant_diagonal(r, r.D.diag) == ScalarFrac(Scalar::q_pow(-N * N)));
    }
    {
        RData r = build(RFamily::glq_super(2, 1));
        rep.add("GLqSuper(2,1) Tr(D) = q^{M-N}[N-M]", r.trD == ScalarFrac(Scalar::q_pow(-1)));
    }
    for (auto fam : {RFamily::soq(3), RFamily::soq(4), RFamily::spq(4)}) {
        RData r = build(fam);
        rep.add(fam.name() + " Tr(D) = nu mu", r.trD == ScalarFrac(r.nu) * r.mu);
    }
    return rep;
}

// 5. Projector ranks.
inline CheckReport criterion_projector_ranks(SuiteScale scale) {
    CheckReport rep;
    std::vector<int> glq_sizes = scale == SuiteScale::Small ? std::vector<int>{2, 3} : std::vector<int>{2, 3, 4};
    for (int N : glq_sizes) {
        auto proj = spectral_projectors(build(RFamily::glq(N)));
        rep.add("GLq(" + std::to_string(N) + ") ranks",
                rank_and_kernel(proj[0]).rank == N * (N + 1) / 2 && rank_and_kernel(proj[1]).rank == N * (N - 1) / 2);
    }
    for (int N : {3, 4}) {
        auto proj = spectral_projectors(build(RFamily::soq(N)));
        rep.add("SOq(" + std::to_string(N) + ") ranks (" + std::to_string(N * (N + 1) / 2 - 1) + "," +
                    std::to_string(N * (N - 1) / 2) + ",1)",
                rank_and_kernel(proj[0]).rank == N * (N + 1) / 2 - 1 &&
                    rank_and_kernel(proj[1]).rank == N * (N - 1) / 2 && rank_and_kernel(proj[2]).rank == 1);
    }
    {
        auto proj = spectral_projectors(build(RFamily::spq(4)));
        rep.add("Spq(4) ranks (10,5,1)", rank_and_kernel(proj[0]).rank == 10 &&
                                             rank_and_kernel(proj[1]).rank == 5 && rank_and_kernel(proj[2]).rank == 1);
    }
    return rep;
}

// 6. Height of the GLq(N) family and det_q(R^{+-}).
inline CheckReport criterion_height(SuiteScale scale) {
    CheckReport rep;
    std::vector<int> sizes = scale == SuiteScale::Small ? std::vector<int>{2, 3} : std::vector<int>{2, 3, 4};
    for (int N : sizes) {
        RData r = build(RFamily::glq(N));
        TowerRep t = make_tower(r, N + 1);
        auto A = symmetrizers(t, SymKind::Antisym, N + 1);
        rep.add("GLq(" + std::to_string(N) + ") A_{1->N+1} = 0", A[N].is_zero());
        rep.add("GLq(" + std::to_string(N) + ") rank A_{1->N} = 1",
                rank_and_kernel(top_antisymmetrizer(r, N)).rank == 1);
    }
    for (int N : {2, 3}) {
        RData r = build(RFamily::glq(N));
        rep.add("GLq(" + std::to_string(N) + ") det_q(R^+) = q",
                qdeterminant_rpm(r, true) == TensorOp::identity(N, 1).scaled(ScalarFrac(Scalar::q_pow(1))));
        rep.add("GLq(" + std::to_string(N) + ") det_q(R^-) = q^-1",
                qdeterminant_rpm(r, false) == TensorOp::identity(N, 1).scaled(ScalarFrac(Scalar::q_pow(-1))));
    }
    return rep;
}

// 7. Baxterization: regularity, unitarity, spectral YBE, cross-unitarity.
inline CheckReport criterion_baxterization(SuiteScale scale) {
    CheckReport rep;
    std::vector<std::pair<Rat, Rat>> pts{{2, 3}, {3, 5}, {5, 7}};
    if (scale == SuiteScale::Full) pts.push_back({Rat(7, 2), Rat(11, 3)});
    auto run_trig = [&](const std::string& name, const BaxterR& b, bool symbolic_unitarity) {
        rep.add(name + " regularity", check_regularity(b).pass);
        if (symbolic_unitarity) rep.add(name + " unitarity symbolic", check_unitarity_symbolic(b).pass);
        else {
            bool ok = true;
            for (Rat x0 : {Rat(2), Rat(3), Rat(5, 2)}) ok = ok && check_unitarity_at(b, x0).pass;
            rep.add(name + " unitarity at 3 rational points", ok);
        }
        rep.add(name + " spectral YBE", check_spectral_ybe(b, pts).all_pass());
        rep.add(name + " cross-unitarity", check_cross_unitarity(b, {Rat(2), Rat(3)}).report.all_pass());
    };
    run_trig("GLq(2)", baxterize_hecke(build(RFamily::glq(2))), true);
    run_trig("GLq(3)", baxterize_hecke(build(RFamily::glq(3))), false);
    run_trig("GLqSuper(2,1)", baxterize_hecke(build(RFamily::glq_super(2, 1))), false);
    RData so3 = build(RFamily::soq(3));
    run_trig("SOq(3)+", baxterize_bmw(so3, true), true);
    run_trig("SOq(3)-", baxterize_bmw(so3, false), true);
    run_trig("Spq(4)+", baxterize_bmw(build(RFamily::spq(4)), true), false);
    // rational limits: additive YBE at rational points and regularity
    std::vector<std::pair<Rat, Rat>> rpts{{1, 2}, {Rat(1, 2), Rat(1, 3)}, {2, 5}};
    auto run_rat = [&](const std::string& name, const BaxterR& b) {
        rep.add(name + " regularity", check_regularity(b).pass);
        rep.add(name + " additive YBE", check_spectral_ybe(b, rpts).all_pass());
    };
    run_rat("Yang N=2", rational_limit(RFamily::glq(2), RationalForm::Yang));
    run_rat("rational SO(3)", rational_limit(RFamily::soq(3), RationalForm::SOSp));
    run_rat("rational Sp(4)", rational_limit(RFamily::spq(4), RationalForm::SOSp));
    run_rat("rational super(2,1)", rational_limit(RFamily::glq_super(2, 1), RationalForm::Super));
    return rep;
}

// 8. Tower consistency: JM commutativity, symmetrizer idempotency and
// annihilation, closed-form agreement.
inline CheckReport criterion_towers(SuiteScale) {
    CheckReport rep;
    for (auto fam : {RFamily::glq(2), RFamily::glq(3)}) {
        RData r = build(fam);
        TowerRep t = make_tower(r, 4);
        bool jm_ok = true;
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) jm_ok = jm_ok && t.jm(i) * t.jm(j) == t.jm(j) * t.jm(i);
        rep.add(fam.name() + " JM commutativity (n=4)", jm_ok);
        auto S = symmetrizers(t, SymKind::Sym, 4), A = symmetrizers(t, SymKind::Antisym, 4);
        bool sym_ok = true, closed_ok = true;
        for (int k = 2; k <= 4; ++k) {
            sym_ok = sym_ok && S[k - 1] * S[k - 1] == S[k - 1] && A[k - 1] * A[k - 1] == A[k - 1];
            sym_ok = sym_ok && t.s(k - 1) * S[k - 1] == S[k - 1].scaled(ScalarFrac(Scalar::q_pow(1)));
            sym_ok = sym_ok && t.s(k - 1) * A[k - 1] == A[k - 1].scaled(ScalarFrac(-Scalar::q_pow(-1)));
            closed_ok = closed_ok && S[k - 1] == symmetrizer_jm_form(t, SymKind::Sym, k) &&
                        A[k - 1] == symmetrizer_jm_form(t, SymKind::Antisym, k);
        }
        rep.add(fam.name() + " symmetrizer idempotency/eigen (n<=4)", sym_ok);
        rep.add(fam.name() + " JM closed forms (n<=4)", closed_ok);
    }
    {
        RData r = build(RFamily::soq(3));
        TowerRep t = make_tower(r, 3);
        bool jm_ok = true;
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j) jm_ok = jm_ok && t.jm(i) * t.jm(j) == t.jm(j) * t.jm(i);
        rep.add("SOq(3) BMW JM commutativity (n=3)", jm_ok);
        auto S = symmetrizers(t, SymKind::Sym, 3), A = symmetrizers(t, SymKind::Antisym, 3);
        bool ok = true;
        for (int k = 2; k <= 3; ++k) {
            ok = ok && S[k - 1] * S[k - 1] == S[k - 1] && A[k - 1] * A[k - 1] == A[k - 1];
            ok = ok && (t.k(k - 1) * S[k - 1]).is_zero() && (t.k(k - 1) * A[k - 1]).is_zero();
            ok = ok && S[k - 1] == symmetrizer_jm_form(t, SymKind::Sym, k) &&
                 A[k - 1] == symmetrizer_jm_form(t, SymKind::Antisym, k);
        }
        rep.add("SOq(3) BMW symmetrizers + annihilation + closed forms (n<=3)", ok);
    }
    return rep;
}

// 9. Branch graphs and idempotent completeness.
inline CheckReport criterion_graphs(SuiteScale scale) {
    CheckReport rep;
    {
        BranchGraph g = branch_graph(false, 4);
        auto paths = enumerate_paths(g, 4);
        std::map<std::string, int> mult;
        for (const auto& p : paths) mult[partition_str(p.shape)]++;
        rep.add("H4 path multiset [4]:1 [3,1]:3 [2,2]:2 [2,1,1]:3 [1^4]:1",
                mult["[4]"] == 1 && mult["[3,1]"] == 3 && mult["[2,2]"] == 2 && mult["[2,1,1]"] == 3 &&
                    mult["[1,1,1,1]"] == 1);
    }
    {
        BranchGraph g = branch_graph(true, 5);
        auto paths = enumerate_paths(g, 5);
        std::map<std::string, long> mult;
        for (const auto& p : paths) mult[partition_str(p.shape)]++;
        long ss = 0;
        for (const auto& [s, c] : mult) ss += c * c;
        rep.add("BMW5 sum of squared path counts = 945", ss == 945);
    }
    for (int d : {2, 3}) {
        TowerRep t = make_tower(build(RFamily::glq(d)), 4);
        rep.add("H4 completeness + orthogonality on GLq(" + std::to_string(d) + ")",
                completeness_check(t, 4).all_pass());
    }
    return rep;
}

// 10. q-dimensions against traces and classical limits.
inline CheckReport criterion_qdims(SuiteScale) {
    CheckReport rep;
    for (int d : {2, 3}) {
        RData r = build(RFamily::glq(d));
        bool ok = true;
        for (int n = 1; n <= 4 && ok; ++n) {
            TowerRep t = make_tower(r, n);
            BranchGraph g = branch_graph(false, n);
            for (const auto& p : enumerate_paths(g, n)) {
                TensorOp e = idempotent_from_path(t, g, p);
                ok = ok && ocneanu_trace(t, e) == qdim_hecke(p.shape, d) &&
                     qdim_hecke(p.shape, d) == qdim_hecke_best(p.shape, d);
            }
        }
        rep.add("hook formula = trace of idempotents, |shape| <= 4, d = " + std::to_string(d), ok);
    }
    {
        RData r = build(RFamily::soq(3));
        bool ok = true;
        for (int n = 1; n <= 3 && ok; ++n) {
            TowerRep t = make_tower(r, n);
            BranchGraph g = branch_graph(true, n);
            for (const auto& p : enumerate_paths(g, n)) {
                TensorOp e = idempotent_from_path(t, g, p);
                ScalarFrac expect = ScalarFrac(Scalar::q_pow(-2 * (n - partition_weight(p.shape)))) *
                                    qdim_bmw_so(p.shape, 3);
                ok = ok && ocneanu_trace(t, e) == expect;
            }
        }
        rep.add("Wenzl formula = BMW trace of idempotents, paths of length <= 3, SOq(3)", ok);
    }
    {
        bool ok = true;
        BranchGraph g = branch_graph(false, 4);
        for (int lvl = 1; lvl <= 4; ++lvl)
            for (const auto& shape : g.levels[lvl])
                for (int d : {2, 3}) {
                    // classical hook-content product dim = prod (d + content) / hook
                    Rat cdim(1);
                    for (const auto& node : hooks_contents(shape)) cdim *= Rat(d + node.content, node.hook);
                    ok = ok && qdim_hecke(shape, d).eval(1) == cdim;
                }
        ok = ok && qdim_bmw_so({1}, 3).eval(1) == Rat(3) && qdim_bmw_so({2}, 3).eval(1) == Rat(5) &&
             qdim_bmw_so({1, 1}, 3).eval(1) == Rat(3);
        rep.add("q -> 1 limits equal classical dimensions", ok);
    }
    return rep;
}

// 11. Knot invariants.
inline CheckReport criterion_knots(SuiteScale scale) {
    CheckReport rep;
    for (auto fam : {RFamily::glq(2), RFamily::glq(3), RFamily::soq(3)}) {
        RData r = build(fam);
        TowerRep t = make_tower(r, 2);
        bool ok = true;
        for (int n = 0; n <= 5; ++n) {
            BraidWord w{2, std::vector<int>(n, 1)};
            ok = ok && closure_invariant(w, t) == torus_closed_form(n, r);
        }
        rep.add(fam.name() + " torus closures n = 0..5", ok);
    }
    int trials = scale == SuiteScale::Small ? 20 : 40;
    rep.add("Markov moves on " + std::to_string(trials) + " seeded braids (GLq(2))",
            markov_property_test(build(RFamily::glq(2)), trials, 3, 6).all_pass());
    rep.add("Markov moves on seeded braids (SOq(3) BMW)",
            markov_property_test(build(RFamily::soq(3)), scale == SuiteScale::Small ? 6 : 12, 3, 4).all_pass());
    {
        BraidWord trefoil{2, {1, 1, 1}};
        bool ok = true;
        for (int d : {2, 3}) {
            TowerRep t = make_tower(build(RFamily::glq(d)), 2);
            ok = ok && normalized_invariant(trefoil, t) == HeckeWordAlgebra::normalized(trefoil, d);
        }
        rep.add("normalized trefoil matches the skein-recursion oracle (GLq(2), GLq(3))", ok);
    }
    return rep;
}

// 12. Quantum-matrix identities.
inline CheckReport criterion_matalg(SuiteScale) {
    CheckReport rep;
    for (int N : {2, 3}) {
        RData r = build(RFamily::glq(N));
        REInstance inst = fundamental_re(r, 2);
        rep.add("GLq(" + std::to_string(N) + ") reflection equation", re_residual(inst).is_zero());
        SymmetricFunctions sf = symmetric_functions(r, N);
        rep.add("GLq(" + std::to_string(N) + ") Newton relations", newton_check(sf, N).all_pass());
        rep.add("GLq(" + std::to_string(N) + ") Cayley-Hamilton", cayley_hamilton_check(r, sf).pass);
        rep.add("GLq(" + std::to_string(N) + ") CHN identities", chn_check(r, sf, N).all_pass());
    }
    return rep;
}

// 13. Chains.
inline CheckReport criterion_chains(SuiteScale) {
    CheckReport rep;
    std::vector<std::pair<Rat, Rat>> pairs{{2, 3}, {3, 5}, {Rat(5, 2), 7}};
    {
        ChainSpec c{baxterize_hecke(build(RFamily::glq(2))), 4, std::nullopt};
        rep.add("GLq(2) trig chain M=4 commutativity", commutativity_check(c, pairs).all_pass());
        TensorOp H = chain_hamiltonian(c);
        TensorOp tm = transfer_matrix(c, Rat(2));
        rep.add("GLq(2) [H, t(2)] = 0", H * tm == tm * H);
    }
    {
        ChainSpec c{rational_limit(RFamily::glq(2), RationalForm::Yang), 4, std::nullopt};
        rep.add("Yang chain M=4 commutativity",
                commutativity_check(c, {{1, 2}, {Rat(1, 2), 3}, {2, 5}}).all_pass());
    }
    {
        ChainSpec c{baxterize_bmw(build(RFamily::soq(3)), true), 2, std::nullopt};
        rep.add("SOq(3) chain M=2 commutativity", commutativity_check(c, pairs).all_pass());
    }
    {
        TowerRep t = make_tower(build(RFamily::glq(2)), 4);
        auto gens = periodic_generators(t);
        TensorOp I0 = commuting_charge(t, gens, 0), I1 = commuting_charge(t, gens, 1);
        rep.add("periodic Hecke chain M=4: [I0, I1] = 0", I0 * I1 == I1 * I0);
    }
    return rep;
}

}  // namespace acceptance

struct CriterionResult {
    int number;
    std::string title;
    CheckReport report;
    long elapsed_ms = 0;
};

inline std::vector<CriterionResult> run_acceptance(SuiteScale scale, int threads = 0) {
    using Fn = CheckReport (*)(SuiteScale);
    std::vector<std::pair<std::string, Fn>> crits = {
        {"exact YBE", acceptance::criterion_ybe},
        {"characteristic equations", acceptance::criterion_characteristic},
        {"skew inverses", acceptance::criterion_skew},
        {"quantum-trace constants", acceptance::criterion_trace_constants},
        {"projector ranks", acceptance::criterion_projector_ranks},
        {"height and q-determinants", acceptance::criterion_height},
        {"baxterization", acceptance::criterion_baxterization},
        {"tower consistency", acceptance::criterion_towers},
        {"graphs and idempotents", acceptance::criterion_graphs},
        {"q-dimensions", acceptance::criterion_qdims},
        {"knot invariants", acceptance::criterion_knots},
        {"quantum-matrix identities", acceptance::criterion_matalg},
        {"chains", acceptance::criterion_chains},
    };
    if (threads <= 0) {
        if (const char* env = std::getenv("QYB_THREADS")) threads = std::max(1, atoi(env));
        else threads = std::max(1u, std::thread::hardware_concurrency());
    }
    std::vector<CriterionResult> results(crits.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= crits.size()) return;
            Stopwatch sw;
            CriterionResult res;
            res.number = static_cast<int>(i) + 1;
            res.title = crits[i].first;
            res.report = crits[i].second(scale);
            res.elapsed_ms = sw.ms();
            results[i] = std::move(res);
        }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min<int>(threads, static_cast<int>(crits.size()));
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return results;
}

}  // namespace qyb
