#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "acceptance.hpp"
#include "serialize.hpp"

namespace qyb::cli {

struct FamilyOptions {
    std::string family = "glq";
    int n = 2;
    int m = 0;
    std::string params;

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family, "family: glq|glq-multi|glq-super|soq|spq|ospq")
            ->check(CLI::IsMember({"glq", "glq-multi", "glq-super", "soq", "spq", "ospq"}));
        cmd->add_option("--n", n, "primary size parameter N");
        cmd->add_option("--m", m, "secondary size parameter (glq-super: M, ospq: 2m)");
        cmd->add_option("--params", params, "extra parameters k=v,... (glq-multi: aIJ=rat; ospq: eps=+1|-1)");
    }

    std::map<std::string, std::string> parse_params() const {
        std::map<std::string, std::string> out;
        std::string token;
        std::istringstream is(params);
        while (std::getline(is, token, ',')) {
            auto eq = token.find('=');
            if (eq == std::string::npos) throw CLI::ValidationError("--params", "expected k=v, got '" + token + "'");
            out[token.substr(0, eq)] = token.substr(eq + 1);
        }
        return out;
    }

    RFamily to_family() const {
        auto kv = parse_params();
        if (family == "glq") return RFamily::glq(n);
        if (family == "glq-super") return RFamily::glq_super(n, m);
        if (family == "soq") return RFamily::soq(n);
        if (family == "spq") return RFamily::spq(n);
        if (family == "ospq") {
            int eps = +1;
            if (auto it = kv.find("eps"); it != kv.end()) eps = (it->second == "-1" || it->second == "-") ? -1 : +1;
            return RFamily::ospq(n, m, eps);
        }
        // glq-multi: table a_ij from params like a12=2,a13=3/5 (a_ji = 1/a_ij)
        std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n, 1));
        for (const auto& [key, val] : kv) {
            if (key.size() != 3 || key[0] != 'a') throw CLI::ValidationError("--params", "expected aIJ=value");
            int i = key[1] - '1', j = key[2] - '1';
            if (i < 0 || j < 0 || i >= n || j >= n || i == j) throw CLI::ValidationError("--params", "bad index in " + key);
            Rat v = rat_parse(val);
            a[i][j] = v;
            a[j][i] = Rat(1) / v;
        }
        return RFamily::glq_multi(n, a);
    }
};

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream is(s);
    while (std::getline(is, token, ','))
        if (!token.empty()) out.push_back(token);
    return out;
}

inline ContentString parse_contents(const std::string& s) {
    ContentString cs;
    for (const auto& tok : split_list(s)) {
        EdgeColor c;
        std::string body = tok;
        if (!body.empty() && body[0] == 'v') {
            c.nu2 = true;
            body = body.substr(1);
        }
        if (!body.empty() && body[0] == '+') body = body.substr(1);
        c.z = std::stoi(body);
        cs.push_back(c);
    }
    return cs;
}

inline BraidWord parse_braid(int strands, const std::string& s) {
    BraidWord w{strands, {}};
    std::istringstream is(s);
    int letter;
    while (is >> letter) w.letters.push_back(letter);
    return w;
}

inline void emit_json(const std::string& path, const json& j) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << j.dump(2) << "\n";
}

inline int finish(const Report& rep, const std::string& format, std::ostream& out) {
    if (format == "json") out << rep.to_json().dump(2) << "\n";
    else out << rep.text();
    return rep.all_pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------

inline int run(std::vector<std::string> args, std::ostream& out) {
    CLI::App app{"qyb: exact R-matrix, Hecke/BMW tower, knot-invariant and spin-chain toolkit"};
    app.require_subcommand(1);
    std::string format = "text", emit_path, checks;
    uint64_t seed = 20260810;
    app.add_option("--format", format, "output format: text|json|dot")->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--seed", seed, "seed for randomized suites");
    app.add_option("--emit", emit_path, "write the main object as JSON to this path");

    FamilyOptions fam;

    auto* rmat = app.add_subcommand("rmat", "build a constant R-matrix family and verify identities");
    fam.attach(rmat);
    rmat->add_option("--check", checks, "checks: ybe,char,skew,traces,bmw (default all applicable)");

    auto* baxter_cmd = app.add_subcommand("baxter", "spectral-parameter R-matrices and their identities");
    fam.attach(baxter_cmd);
    std::string branch = "plus";
    int points = 3;
    bool symbolic_x = false;
    baxter_cmd->add_option("--branch", branch, "BMW branch: plus|minus")->check(CLI::IsMember({"plus", "minus"}));
    baxter_cmd->add_option("--points", points, "number of seeded rational point pairs");
    baxter_cmd->add_flag("--symbolic-x", symbolic_x, "check unitarity symbolically in x (N <= 2 recommended)");
    baxter_cmd->add_option("--check", checks, "checks: sybe,unitarity,cross,regular (default all)");

    auto* graph_cmd = app.add_subcommand("graph", "branching graphs (Young-Ogievetsky / oscillating)");
    std::string algebra = "hecke";
    int levels = 3;
    graph_cmd->add_option("--algebra", algebra, "hecke|bmw")->check(CLI::IsMember({"hecke", "bmw"}));
    graph_cmd->add_option("--levels", levels, "number of levels");

    auto* idem = app.add_subcommand("idempotent", "primitive idempotent of a branching path");
    fam.attach(idem);
    std::string path_str;
    idem->add_option("--path", path_str, "content string, e.g. 0,+1,-1,0 (prefix v for nu^2 edges)")->required();

    auto* qdim_cmd = app.add_subcommand("qdim", "closed-form q-dimensions");
    std::string qdim_algebra = "hecke", diagram;
    int dparam = 2, so_n = 0;
    qdim_cmd->add_option("--algebra", qdim_algebra, "hecke|bmw")->check(CLI::IsMember({"hecke", "bmw"}));
    qdim_cmd->add_option("--diagram", diagram, "partition, e.g. 2,1")->required();
    qdim_cmd->add_option("--d", dparam, "Hecke: the d parameter (GLq(d))");
    qdim_cmd->add_option("--so-n", so_n, "BMW: specialize nu = q^{1-N} for SOq(N)");

    auto* inv = app.add_subcommand("invariant", "knot/link invariants of braid closures");
    fam.attach(inv);
    int strands = 2;
    std::string braid_str;
    bool normalize = false;
    inv->add_option("--strands", strands, "strand count");
    inv->add_option("--braid", braid_str, "braid word, e.g. \"1 1 1\"")->required();
    inv->add_flag("--normalize", normalize, "emit the unknot-normalized, Markov-invariant value");

    auto* matalg_cmd = app.add_subcommand("matalg", "reflection-equation matrix identities");
    fam.attach(matalg_cmd);
    matalg_cmd->add_option("--check", checks, "checks: re,newton,cayley (default all)");

    auto* chain_cmd = app.add_subcommand("chain", "periodic integrable chains");
    fam.attach(chain_cmd);
    int sites = 3;
    std::string theta = "2", emit_kind;
    std::string chain_form = "trig";
    chain_cmd->add_option("--sites", sites, "number of chain sites");
    chain_cmd->add_option("--theta", theta, "spectral point (rational)");
    chain_cmd->add_option("--branch", branch, "BMW branch for orthogonal families: plus|minus")
        ->check(CLI::IsMember({"plus", "minus"}));
    chain_cmd->add_option("--emit-kind", emit_kind, "hamiltonian|transfer: object for --emit");
    chain_cmd->add_option("--form", chain_form, "trig|yang")->check(CLI::IsMember({"trig", "yang"}));
    chain_cmd->add_option("--check", checks, "checks: commute,charges (default all)");

    auto* suite_cmd = app.add_subcommand("suite", "run the full acceptance battery");
    std::string scale = "small";
    suite_cmd->add_option("--scale", scale, "small|full")->check(CLI::IsMember({"small", "full"}));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        out << "usage error: " << e.what() << "\n";
        return 2;
    }

    auto wanted = [&](const char* name) {
        if (checks.empty()) return true;
        for (const auto& c : split_list(checks))
            if (c == name) return true;
        return false;
    };

    try {
        if (*rmat) {
            RData r = build(fam.to_family());
            Report rep;
            rep.command = "rmat " + fam.to_family().name();
            if (wanted("ybe")) {
                Stopwatch sw;
                auto item = check_ybe(r.rhat);
                rep.add("ybe", item.pass, item.detail, sw.ms());
            }
            if (wanted("char")) {
                Stopwatch sw;
                rep.absorb("char", check_characteristic(r), sw.ms());
            }
            if (wanted("skew")) {
                Stopwatch sw;
                TensorOp lhs = (embed(r.rhat, 1, 3) * embed(r.psi_hat, 2, 3)).weighted_partial_trace({2});
                rep.add("skew: Tr_2(R12 Psi23) = P13", lhs == TensorOp::permutation(r.N()), "", sw.ms());
            }
            if (wanted("traces")) {
                Stopwatch sw;
                rep.absorb("traces", verify_trace_identities(r), sw.ms());
            }
            if (r.is_bmw() && wanted("bmw")) {
                Stopwatch sw;
                rep.absorb("bmw", check_bmw_structure(r), sw.ms());
            }
            if (!emit_path.empty()) emit_json(emit_path, tensor_to_json(r.rhat));
            return finish(rep, format, out);
        }

        if (*baxter_cmd) {
            RFamily family = fam.to_family();
            RData r = build(family);
            BaxterR b = r.is_bmw() ? baxterize_bmw(r, branch == "plus") : baxterize_hecke(r);
            Report rep;
            rep.command = "baxter " + family.name() + (r.is_bmw() ? (branch == "plus" ? " +" : " -") : "");
            rep.seed = seed;
            rep.seeded = true;
            if (wanted("regular")) rep.add("regularity", check_regularity(b).pass);
            if (wanted("sybe")) {
                std::mt19937_64 rng(seed);
                std::uniform_int_distribution<int> prime(2, 23);
                std::vector<std::pair<Rat, Rat>> pts;
                for (int i = 0; i < points; ++i) pts.push_back({Rat(prime(rng)), Rat(prime(rng))});
                Stopwatch sw;
                rep.absorb("", check_spectral_ybe(b, pts), sw.ms());
            }
            if (wanted("unitarity")) {
                Stopwatch sw;
                if (symbolic_x || b.op.N() <= 2) {
                    auto item = check_unitarity_symbolic(b);
                    rep.add(item.name, item.pass, item.detail, sw.ms());
                } else {
                    bool ok = true;
                    for (Rat x0 : {Rat(2), Rat(3), Rat(5, 2)}) ok = ok && check_unitarity_at(b, x0).pass;
                    rep.add("unitarity at 3 rational points", ok, "", sw.ms());
                }
            }
            if (wanted("cross")) {
                Stopwatch sw;
                auto res = check_cross_unitarity(b, {Rat(2), Rat(3)});
                rep.absorb("", res.report, sw.ms());
            }
            if (!emit_path.empty()) emit_json(emit_path, tensor_to_json(b.op));
            return finish(rep, format, out);
        }

        if (*graph_cmd) {
            BranchGraph g = branch_graph(algebra == "bmw", levels);
            if (format == "dot") {
                out << graph_export_dot(g);
            } else if (format == "json") {
                out << graph_to_json(g).dump(2) << "\n";
            } else {
                for (size_t l = 0; l < g.levels.size(); ++l) {
                    out << "level " << l << ":";
                    for (const auto& p : g.levels[l]) out << " " << partition_str(p);
                    out << "\n";
                }
                auto paths = enumerate_paths(g, levels);
                out << paths.size() << " paths at level " << levels << "\n";
            }
            if (!emit_path.empty()) emit_json(emit_path, graph_to_json(g));
            return 0;
        }

        if (*idem) {
            RFamily family = fam.to_family();
            RData r = build(family);
            ContentString cs = parse_contents(path_str);
            BranchGraph g = branch_graph(r.is_bmw(), static_cast<int>(cs.size()));
            GraphPath path = path_from_contents(g, cs);
            TowerRep t = make_tower(r, static_cast<int>(cs.size()));
            TensorOp e = idempotent_from_path(t, g, path);
            Report rep;
            rep.command = "idempotent " + family.name() + " path " + content_str(cs);
            rep.add("shape " + partition_str(path.shape), true);
            rep.add("E^2 = E", e * e == e);
            bool eigen = true;
            for (int i = 1; i <= t.n; ++i)
                eigen = eigen && t.jm(i) * e == e.scaled(ScalarFrac(color_value(t, cs[i - 1])));
            rep.add("y_i E = a_i E", eigen);
            rep.add("trace " + ocneanu_trace(t, e).str(), true);
            if (!emit_path.empty()) emit_json(emit_path, tensor_to_json(e));
            return finish(rep, format, out);
        }

        if (*qdim_cmd) {
            Partition p;
            for (const auto& part : split_list(diagram)) p.push_back(std::stoi(part));
            ScalarFrac val;
            if (qdim_algebra == "hecke") val = qdim_hecke(p, dparam);
            else if (so_n > 0) val = qdim_bmw_so(p, so_n);
            else val = qdim_bmw(p);
            out << val.str() << "\n";
            return 0;
        }

        if (*inv) {
            RFamily family = fam.to_family();
            RData r = build(family);
            BraidWord w = parse_braid(strands, braid_str);
            TowerRep t = make_tower(r, strands);
            ScalarFrac raw = closure_invariant(w, t);
            ScalarFrac value = normalize ? normalized_invariant(w, t) : raw;
            if (format == "json") {
                json j;
                j["family"] = family.name();
                j["braid"] = w.str();
                j["strands"] = strands;
                j["exponent_sum"] = w.exponent_sum();
                j["raw_trace"] = raw.str();
                if (normalize) j["normalized"] = value.str();
                if (!r.is_bmw() && strands <= 4) {
                    json dec = json::array();
                    for (const auto& entry : idempotent_decomposition(w, t))
                        dec.push_back({{"shape", entry.shape}, {"coefficient", entry.coefficient.str()}});
                    j["decomposition"] = std::move(dec);
                }
                out << j.dump(2) << "\n";
            } else {
                out << value.str() << "\n";
            }
            return 0;
        }

        if (*matalg_cmd) {
            RFamily family = fam.to_family();
            RData r = build(family);
            Report rep;
            rep.command = "matalg " + family.name();
            SymmetricFunctions sf = symmetric_functions(r, r.N());
            if (wanted("re")) {
                Stopwatch sw;
                rep.add("reflection equation", re_residual(fundamental_re(r, 2)).is_zero(), "", sw.ms());
            }
            if (wanted("newton")) {
                Stopwatch sw;
                rep.absorb("", newton_check(sf, r.N()), sw.ms());
            }
            if (wanted("cayley")) {
                Stopwatch sw;
                auto item = cayley_hamilton_check(r, sf);
                rep.add(item.name, item.pass, item.detail, sw.ms());
                rep.absorb("", chn_check(r, sf, r.N()), sw.ms());
            }
            return finish(rep, format, out);
        }

        if (*chain_cmd) {
            RFamily family = fam.to_family();
            BaxterR b;
            if (chain_form == "yang") b = rational_limit(family, RationalForm::Yang);
            else {
                RData r = build(family);
                b = r.is_bmw() ? baxterize_bmw(r, branch == "plus") : baxterize_hecke(r);
            }
            ChainSpec c{b, sites, std::nullopt};
            Report rep;
            rep.command = "chain " + family.name() + " M=" + std::to_string(sites);
            rep.seed = seed;
            rep.seeded = true;
            Rat th = rat_parse(theta);
            if (wanted("commute")) {
                std::mt19937_64 rng(seed);
                std::uniform_int_distribution<int> prime(2, 13);
                std::vector<std::pair<Rat, Rat>> pairs;
                for (int i = 0; i < 3; ++i) pairs.push_back({Rat(prime(rng)), Rat(prime(rng))});
                Stopwatch sw;
                rep.absorb("", commutativity_check(c, pairs), sw.ms());
                TensorOp H = chain_hamiltonian(c);
                TensorOp tm = transfer_matrix(c, th);
                rep.add("[H, t(theta)] = 0", H * tm == tm * H);
            }
            if (wanted("charges") && !b.base.is_bmw() && sites >= 3) {
                Stopwatch sw;
                RData r = build(family);
                TowerRep t = make_tower(r, sites);
                rep.absorb("charges", commuting_charges_check(t, std::max(0, sites - 2) >= 1 ? 1 : 0), sw.ms());
            }
            if (!emit_path.empty()) {
                // `--emit hamiltonian|transfer` prints to stdout; otherwise
                // --emit is a path and --emit-kind picks the object.
                if (emit_path == "hamiltonian") out << tensor_to_json(chain_hamiltonian(c)).dump(2) << "\n";
                else if (emit_path == "transfer") out << tensor_to_json(transfer_matrix(c, th)).dump(2) << "\n";
                else if (emit_kind == "hamiltonian") emit_json(emit_path, tensor_to_json(chain_hamiltonian(c)));
                else emit_json(emit_path, tensor_to_json(transfer_matrix(c, th)));
            }
            return finish(rep, format, out);
        }

        if (*suite_cmd) {
            auto results = run_acceptance(scale == "small" ? SuiteScale::Small : SuiteScale::Full);
            Report rep;
            rep.command = "suite --scale " + scale;
            rep.seed = seed;
            rep.seeded = true;
            for (const auto& res : results) {
                bool pass = res.report.all_pass();
                rep.add("criterion " + std::to_string(res.number) + ": " + res.title, pass,
                        std::to_string(res.report.items.size()) + " checks", res.elapsed_ms);
                if (!pass)
                    for (const auto& item : res.report.items)
                        if (!item.pass) rep.add("  " + item.name, false, item.detail);
            }
            return finish(rep, format, out);
        }
    } catch (const std::exception& e) {
        out << "error: " << e.what() << "\n";
        return 1;
    }
    out << "usage error: no subcommand\n";
    return 2;
}

}  // namespace qyb::cli
