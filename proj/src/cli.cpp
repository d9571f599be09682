#include "tamesys/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tamesys/bounds.hpp"
#include "tamesys/extend.hpp"
#include "tamesys/io.hpp"
#include "tamesys/search.hpp"
#include "tamesys/systems.hpp"

namespace tamesys {

namespace {

using Json = nlohmann::ordered_json;

Json colset_json(const ColSet& s) {
    Json a = Json::array();
    for (std::size_t v : s) a.push_back(v);
    return a;
}

Json tuple_json(const Tuple& x) {
    Json pts = Json::array();
    for (const Point& p : x.points) {
        Json row = Json::array();
        for (Elem e : p) row.push_back(e);
        pts.push_back(row);
    }
    return pts;
}

Json matrix_json(const Mat& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(row);
    }
    return rows;
}

FieldPtr field_from_flags(std::uint32_t q, const std::string& poly) {
    // q is an order; factor it into p^e
    std::vector<std::uint32_t> modulus;
    if (!poly.empty()) {
        std::istringstream ps(poly);
        std::string item;
        while (std::getline(ps, item, ',')) {
            try {
                modulus.push_back(static_cast<std::uint32_t>(std::stoul(item)));
            } catch (const std::exception&) {
                throw ParseError("bad modulus coefficient: " + item);
            }
        }
    }
    for (std::uint32_t p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        std::uint32_t e = 0, v = q;
        while (v % p == 0) { v /= p; ++e; }
        if (v != 1) break;
        return field_make(p, e, modulus);
    }
    return field_make(q, 1, modulus);
}

struct CommonOpts {
    std::string matrix_path, set_path, tuple_path, out_path;
    std::uint32_t q = 3;
    std::string poly;
    std::size_t n = 1;
    std::uint64_t seed = 1;
    int trials = 20;
    bool json = false;
};

void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact analysis of balanced linear systems over finite fields"};
    app.require_subcommand(1);
    CommonOpts o;

    auto add_matrix = [&](CLI::App* cmd) {
        cmd->add_option("--matrix", o.matrix_path, "matrix file")->required();
    };

    auto* tame = app.add_subcommand("tame-check", "certified tameness of a coefficient matrix");
    add_matrix(tame);
    tame->add_flag("--json", o.json);

    auto* extend_cmd = app.add_subcommand("extend", "normalize a tame matrix to m x (2m+1)");
    add_matrix(extend_cmd);
    extend_cmd->add_option("--out", o.out_path, "write the normalized matrix here");
    extend_cmd->add_flag("--json", o.json);

    auto* classify = app.add_subcommand("classify", "classify a solution tuple");
    add_matrix(classify);
    classify->add_option("--tuple", o.tuple_path, "tuple file")->required();
    classify->add_flag("--json", o.json);

    auto* witness = app.add_subcommand("generic-witness", "low-dimensional generic solution");
    add_matrix(witness);
    witness->add_flag("--json", o.json);

    auto* disjoint = app.add_subcommand("disjoint-sets", "disjoint equal-rank index sets of a solution");
    add_matrix(disjoint);
    disjoint->add_option("--tuple", o.tuple_path, "tuple file")->required();
    disjoint->add_flag("--json", o.json);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "stream all solutions inside a point set");
    add_matrix(enumerate_cmd);
    enumerate_cmd->add_option("--set", o.set_path, "point set file (default: all of F_q^n)");
    enumerate_cmd->add_option("--n", o.n, "ambient dimension when --set is omitted");
    std::uint64_t limit = 1000;
    enumerate_cmd->add_option("--limit", limit, "cap on listed solutions");
    enumerate_cmd->add_flag("--json", o.json);

    auto* histogram = app.add_subcommand("histogram", "affine-rank histogram of the solutions in a set");
    add_matrix(histogram);
    histogram->add_option("--set", o.set_path, "point set file (default: all of F_q^n)");
    histogram->add_option("--n", o.n, "ambient dimension when --set is omitted");
    histogram->add_flag("--json", o.json);

    auto* capfree = app.add_subcommand("capfree", "largest set without a forbidden solution");
    add_matrix(capfree);
    capfree->add_option("--n", o.n, "ambient dimension")->required();
    std::string mode = "exact", forbid = "generic";
    capfree->add_option("--mode", mode)->check(CLI::IsMember({"exact", "greedy", "random"}));
    capfree->add_option("--forbid", forbid)->check(CLI::IsMember({"generic", "shape", "nontrivial"}));
    capfree->add_option("--seed", o.seed);
    capfree->add_option("--trials", o.trials);
    capfree->add_flag("--json", o.json);

    auto* subspace_find = app.add_subcommand("subspace-find", "affine subspace contained in a point set");
    subspace_find->add_option("--set", o.set_path, "point set file")->required();
    subspace_find->add_option("--q", o.q, "field order");
    subspace_find->add_option("--poly", o.poly, "modulus c0,c1,... for extension fields");
    std::size_t subdim = 1;
    subspace_find->add_option("--d", subdim, "subspace dimension")->required();
    subspace_find->add_flag("--json", o.json);

    auto* clp = app.add_subcommand("clp", "rank of a low-degree evaluation matrix vs the bound");
    clp->add_option("--q", o.q, "field order")->required();
    clp->add_option("--n", o.n, "variables per block")->required();
    std::uint64_t degree = 2;
    clp->add_option("--d", degree, "total degree")->required();
    clp->add_option("--poly", o.poly, "modulus c0,c1,... for extension fields");
    clp->add_option("--seed", o.seed);
    clp->add_flag("--json", o.json);

    auto* replay = app.add_subcommand("replay", "random-section rank experiment");
    add_matrix(replay);
    replay->add_option("--set", o.set_path, "point set file (default: all of F_q^n)");
    replay->add_option("--n", o.n, "ambient dimension when --set is omitted");
    std::size_t rank_r = 1;
    replay->add_option("--r", rank_r, "target affine rank")->required();
    replay->add_option("--trials", o.trials);
    replay->add_option("--seed", o.seed);
    replay->add_flag("--json", o.json);

    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form and numeric bound calculators");
    bounds_cmd->require_subcommand(1);
    double delta = 0.5, delta2 = 0.1;
    std::uint64_t bm = 1, bk = 3, bn = 1, bd = 1, br = 1, bn0 = 1;

    auto* mono = bounds_cmd->add_subcommand("mono", "bounded-degree monomial count");
    mono->add_option("--q", o.q)->required();
    mono->add_option("--n", bn)->required();
    double mono_d = 0;
    mono->add_option("--d", mono_d)->required();
    mono->add_flag("--json", o.json);

    auto* cconst = bounds_cmd->add_subcommand("c", "growth-rate constant of the monomial count");
    cconst->add_option("--q", o.q)->required();
    cconst->add_option("--delta", delta)->required();
    cconst->add_flag("--json", o.json);

    auto* slice = bounds_cmd->add_subcommand("slice", "size bound for sets without nontrivial solutions");
    slice->add_option("--q", o.q)->required();
    slice->add_option("--m", bm)->required();
    slice->add_option("--k", bk)->required();
    slice->add_option("--n", bn)->required();
    slice->add_flag("--json", o.json);

    auto* qbin = bounds_cmd->add_subcommand("qbin", "number of d-dimensional subspaces of F_q^n");
    qbin->add_option("--q", o.q)->required();
    qbin->add_option("--n", bn)->required();
    qbin->add_option("--d", bd)->required();
    qbin->add_flag("--json", o.json);

    auto* supersat = bounds_cmd->add_subcommand("supersat", "supersaturation constants");
    supersat->add_option("--q", o.q)->required();
    supersat->add_option("--r", br)->required();
    supersat->add_option("--delta", delta)->required();
    supersat->add_option("--delta2", delta2, "the smaller density exponent")->required();
    supersat->add_option("--n0", bn0)->required();
    supersat->add_flag("--json", o.json);

    auto* subspace_c = bounds_cmd->add_subcommand("subspace", "affine-subspace density constants");
    subspace_c->add_option("--q", o.q)->required();
    subspace_c->add_option("--d", bd)->required();
    subspace_c->add_flag("--json", o.json);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (*tame) {
            Mat A = read_matrix_file(o.matrix_path);
            TamenessCertificate cert = is_tame(A);
            Json j;
            j["statement"] = "tameness_characterization";
            j["q"] = A.field()->q();
            j["m"] = A.rows();
            j["k"] = A.cols();
            j["verdict"] = cert.tame ? "tame" : "not-tame";
            if (cert.tame) {
                Json w = Json::array();
                for (std::size_t i = 0; i < cert.witnesses.size(); ++i) {
                    Json e;
                    e["i"] = i;
                    e["b1"] = colset_json(cert.witnesses[i].first);
                    e["b2"] = colset_json(cert.witnesses[i].second);
                    w.push_back(e);
                }
                j["witnesses"] = w;
            } else {
                j["violating_set"] = colset_json(cert.violating);
            }
            emit(out, j);
            return 0;
        }
        if (*extend_cmd) {
            Mat A = read_matrix_file(o.matrix_path);
            NormalizeResult res = normalize_to_tame_square(A);
            if (!o.out_path.empty()) {
                std::ofstream f(o.out_path);
                if (!f) throw ParseError("cannot write " + o.out_path);
                write_matrix(f, res.matrix);
            }
            Json j;
            j["statement"] = "tame_extension";
            j["input"] = {{"m", A.rows()}, {"k", A.cols()}};
            Json steps = Json::array();
            for (const auto& s : res.steps)
                steps.push_back({{"pivot", s.pivot}, {"gadget", s.gadget}, {"rows", s.rows}, {"cols", s.cols}});
            j["steps"] = steps;
            j["result"] = {{"m", res.matrix.rows()}, {"k", res.matrix.cols()}};
            j["matrix"] = matrix_json(res.matrix);
            emit(out, j);
            return 0;
        }
        if (*classify) {
            Mat A = read_matrix_file(o.matrix_path);
            Tuple x = read_tuple_file(o.tuple_path, A.field());
            SolutionClass cls = classify_solution(A, x);
            Json j;
            j["statement"] = "solution_classification";
            j["arank"] = cls.arank;
            j["ann_dim"] = cls.ann_dim;
            j["is_solution"] = cls.is_solution;
            j["is_trivial"] = cls.is_trivial;
            j["is_shape"] = cls.is_shape;
            j["is_generic"] = cls.is_generic;
            emit(out, j);
            return 0;
        }
        if (*witness) {
            Mat A = read_matrix_file(o.matrix_path);
            Tuple z = generic_witness_lowdim(A);
            Json j;
            j["statement"] = "low_dimensional_generic_solution";
            j["n"] = z.n;
            j["k"] = z.k();
            j["points"] = tuple_json(z);
            j["arank"] = affine_rank(z);
            emit(out, j);
            return 0;
        }
        if (*disjoint) {
            Mat A = read_matrix_file(o.matrix_path);
            Tuple x = read_tuple_file(o.tuple_path, A.field());
            auto [i1, i2] = disjoint_rank_sets(A, x);
            Json j;
            j["statement"] = "disjoint_equal_rank_index_sets";
            j["r"] = affine_rank(x);
            j["I1"] = colset_json(i1);
            j["I2"] = colset_json(i2);
            emit(out, j);
            return 0;
        }
        if (*enumerate_cmd || *histogram || *replay) {
            Mat A = read_matrix_file(o.matrix_path);
            PointSet S = o.set_path.empty() ? PointSet::full(A.field(), o.n)
                                            : read_pointset_file(o.set_path, A.field());
            if (*enumerate_cmd) {
                Json sols = Json::array();
                std::uint64_t count = 0;
                enumerate_solutions(A, S, [&](const Tuple& x) {
                    if (count < limit) sols.push_back(tuple_json(x));
                    ++count;
                    return true;
                });
                Json j;
                j["statement"] = "solution_enumeration";
                j["count"] = count;
                j["truncated"] = count > limit;
                j["solutions"] = sols;
                emit(out, j);
                return 0;
            }
            if (*histogram) {
                RankHistogram h = arank_histogram(A, S);
                Json counts;
                for (const auto& [rank, cnt] : h.counts) counts[std::to_string(rank)] = cnt;
                Json j;
                j["statement"] = "affine_rank_histogram";
                j["total"] = h.total;
                j["histogram"] = counts;
                emit(out, j);
                return 0;
            }
            ReplayReport rep = proof_replay(A, S, rank_r, o.trials, o.seed);
            Json j;
            j["statement"] = "random_section_rank_replay";
            j["n"] = rep.n;
            j["r"] = rep.r;
            j["t"] = rep.t;
            j["set_size"] = rep.set_size;
            j["kernel_dim"] = rep.kernel_dim;
            j["section_size"] = rep.section_size;
            j["I"] = colset_json(rep.I);
            j["J"] = colset_json(rep.J);
            j["solutions"] = rep.solutions;
            j["rank_r_solutions"] = rep.rank_r;
            j["grouped"] = rep.grouped;
            j["sectioned"] = rep.sectioned;
            j["pair_count"] = rep.pair_count;
            j["rank_bound"] = rep.bound;
            j["expected_support"] = rep.expected_support;
            j["mean_support"] = rep.mean_support;
            j["sigma"] = rep.sigma;
            j["ok_claim_rank"] = rep.ok_claim_rank;
            j["ok_support"] = rep.ok_support;
            j["ok_blur"] = rep.ok_blur;
            Json trials_json = Json::array();
            for (const auto& t : rep.trials)
                trials_json.push_back({{"rank", t.rank_full},
                                       {"rank_section", t.rank_section},
                                       {"support", t.support},
                                       {"max_line", t.max_line}});
            j["trials"] = trials_json;
            emit(out, j);
            return rep.ok_claim_rank && rep.ok_support && rep.ok_blur ? 0 : 1;
        }
        if (*capfree) {
            Mat A = read_matrix_file(o.matrix_path);
            SearchMode sm = mode == "exact" ? SearchMode::Exact
                          : mode == "greedy" ? SearchMode::Greedy : SearchMode::Random;
            Forbid fb = forbid == "generic" ? Forbid::Generic
                      : forbid == "shape" ? Forbid::Shape : Forbid::Nontrivial;
            FreeSetResult res = max_solution_free_set(A, o.n, sm, fb, o.seed, o.trials);
            Json j;
            j["statement"] = "extremal_solution_free_set";
            j["mode"] = mode;
            j["forbid"] = forbid;
            j["size"] = res.set.size();
            Json pts = Json::array();
            for (Code c : res.set.codes()) pts.push_back(c);
            j["points"] = pts;
            j["certificate"] = res.exhaustive ? "exhaustive" : "heuristic";
            emit(out, j);
            return 0;
        }
        if (*subspace_find) {
            FieldPtr f = field_from_flags(o.q, o.poly);
            PointSet S = read_pointset_file(o.set_path, f);
            auto found = find_affine_subspace(S, subdim);
            Json j;
            j["statement"] = "affine_subspace_search";
            j["d"] = subdim;
            j["found"] = found.has_value();
            if (found) {
                j["base"] = found->base;
                Json dirs = Json::array();
                for (Code c : found->directions) dirs.push_back(c);
                j["directions"] = dirs;
            }
            emit(out, j);
            return 0;
        }
        if (*clp) {
            FieldPtr f = field_from_flags(o.q, o.poly);
            ClpReport rep = clp_rank_check(f, o.n, degree, nullptr, o.seed);
            Json j;
            j["statement"] = "low_degree_matrix_rank_bound";
            j["q"] = o.q;
            j["n"] = o.n;
            j["d"] = degree;
            j["monomials"] = rep.monomials;
            j["rank"] = rep.rank;
            j["bound"] = rep.bound;
            j["ok"] = rep.ok;
            emit(out, j);
            return rep.ok ? 0 : 1;
        }
        if (*mono) {
            BigUint v = monomial_count_real(o.q, bn, mono_d);
            if (o.json) {
                Json j;
                j["statement"] = "monomial_count";
                j["q"] = o.q;
                j["n"] = bn;
                j["d"] = mono_d;
                j["value"] = v.to_string();
                emit(out, j);
            } else {
                out << v.to_string() << "\n";
            }
            return 0;
        }
        if (*cconst) {
            GrowthConstant c = c_constant(o.q, delta);
            if (o.json) {
                Json j;
                j["statement"] = "growth_rate_constant";
                j["q"] = o.q;
                j["delta"] = delta;
                j["value"] = c.value;
                j["t_star"] = c.t_star;
                emit(out, j);
            } else {
                out << c.value << " at t=" << c.t_star << "\n";
            }
            return 0;
        }
        if (*slice) {
            SliceRankBound b = slice_rank_bound(o.q, bm, bk, bn);
            if (o.json) {
                Json j;
                j["statement"] = "slice_rank_bound";
                j["q"] = o.q;
                j["m"] = bm;
                j["k"] = bk;
                j["n"] = bn;
                j["bound"] = b.bound.to_string();
                j["space"] = BigUint::pow(o.q, bn).to_string();
                j["nontrivial"] = b.nontrivial;
                j["c"] = b.c;
                emit(out, j);
            } else {
                out << b.bound.to_string() << (b.nontrivial ? " (nontrivial)" : " (trivial)") << "\n";
            }
            return 0;
        }
        if (*qbin) {
            BigUint v = gaussian_binomial(o.q, bn, bd);
            if (o.json) {
                Json j;
                j["statement"] = "gaussian_binomial";
                j["q"] = o.q;
                j["n"] = bn;
                j["d"] = bd;
                j["value"] = v.to_string();
                emit(out, j);
            } else {
                out << v.to_string() << "\n";
            }
            return 0;
        }
        if (*supersat) {
            SupersatParams p = supersat_params(o.q, br, delta, delta2, bn0);
            Json j;
            j["statement"] = "supersaturation_constants";
            j["q"] = p.q;
            j["r"] = p.r;
            j["delta"] = p.delta;
            j["delta_prime"] = p.delta_prime;
            j["n0"] = p.n0;
            j["n1"] = p.n1;
            j["epsilon"] = p.epsilon;
            j["C"] = p.C;
            j["log_q_C"] = p.log_q_C;
            if (o.json) {
                emit(out, j);
            } else {
                out << "n1=" << p.n1 << " epsilon=" << p.epsilon << " C=" << p.C
                    << " log_q(C)=" << p.log_q_C << "\n";
            }
            return 0;
        }
        if (*subspace_c) {
            auto rows = subspace_constants(o.q, bd);
            if (o.json) {
                Json j;
                j["statement"] = "subspace_density_constants";
                j["q"] = o.q;
                Json rs = Json::array();
                for (const auto& r2 : rows)
                    rs.push_back({{"d", r2.d}, {"n", r2.n}, {"C", r2.C}, {"delta", r2.delta}});
                j["rows"] = rs;
                emit(out, j);
            } else {
                for (const auto& r2 : rows)
                    out << "d=" << r2.d << " n=" << r2.n << " C=" << r2.C << " delta=" << r2.delta
                        << "\n";
            }
            return 0;
        }
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "invariant violated: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand handled\n";
    return 2;
}

}  // namespace tamesys
