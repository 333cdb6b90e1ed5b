// pieri-rank: exact constructions and border-rank lower bounds for the
// GL-invariant tensors attached to Pieri maps.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "pierirank/bounds.hpp"
#include "pierirank/bwb.hpp"
#include "pierirank/cache.hpp"
#include "pierirank/euler.hpp"
#include "pierirank/flatten.hpp"
#include "pierirank/weyl.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace pierirank;

namespace {

json json_int(const Int& v) {
    if (fits_int64(v)) return to_int64(v);
    return v.get_str();
}

json json_partition(const Partition& p) { return json(p.parts()); }
json json_weight(const Weight& w) { return json(w); }

json json_rank(const RankCertificate& c) {
    json j;
    j["rank"] = c.rank;
    j["mode"] = c.mode_string();
    if (!c.primes.empty()) {
        j["primes"] = json::array();
        for (uint64_t p : c.primes) j["primes"].push_back(std::to_string(p));
        j["prime_ranks"] = c.prime_ranks;
    }
    if (c.small_prime_warning) j["small_prime_warning"] = true;
    return j;
}

json json_probe(const ProbeResult& p) {
    json j;
    j["trials"] = p.trials;
    j["seed"] = p.seed;
    j["coefficient_bound"] = p.coefficient_bound;
    j["ranks"] = p.ranks;
    j["max_rank"] = p.max_rank;
    j["constant"] = p.constant;
    j["rank_mode"] = p.rank_mode;
    return j;
}

json json_cformula(const CFormula& c) {
    json j;
    j["applicable"] = c.applicable;
    if (!c.applicable) {
        j["notes"] = c.notes;
        return j;
    }
    j["family"] = c.family;
    if (c.c) {
        j["alpha_prime"] = c.alpha_prime;
        j["alpha"] = c.alpha;
        j["c"] = json_int(*c.c);
    }
    if (c.c1) {
        j["lambda_prime"] = c.lambda_prime;
        j["lambda_second"] = c.lambda_second;
        j["mu_prime"] = c.mu_prime;
        j["mu_second"] = c.mu_second;
        j["c1"] = json_int(*c.c1);
        j["c1_alt"] = json_int(*c.c1_alt);
        j["c2"] = json_int(*c.c2);
        j["c2_alt"] = json_int(*c.c2_alt);
        j["routes_agree"] = c.routes_agree;
    }
    if (c.r_predicted) j["r_predicted"] = json_int(*c.r_predicted);
    if (!c.notes.empty()) j["notes"] = c.notes;
    return j;
}

json json_bound(const BoundReport& r) {
    json j;
    j["lambda"] = json_partition(r.lambda);
    j["mu"] = json_partition(r.mu);
    j["u"] = r.u.to_string();
    j["n"] = r.n;
    j["dim_u"] = json_int(r.dim_u);
    j["k"] = json_int(r.k);
    j["l"] = json_int(r.l);
    j["constraint"] = {{"verdict", r.constraint.verdict == FamilyVerdict::certified_not_minimal
                                       ? "certified_not_minimal"
                                       : "outside_known_families"},
                       {"family", r.constraint.family},
                       {"detail", r.constraint.detail}};
    j["c_formula"] = json_cformula(r.c_formula);
    if (r.probe) j["oracle"] = json_probe(*r.probe);
    j["flattening_rank"] = json_int(r.flattening_rank);
    j["flattening_measured"] = r.flattening_measured;
    if (r.r_oracle) j["r_oracle"] = json_int(*r.r_oracle);
    if (r.r_theorem) j["r_theorem"] = json_int(*r.r_theorem);
    j["r_disagreement"] = r.r_disagreement;
    j["r_used"] = json_int(r.r_used);
    j["lower_bound"] = json_int(r.lower_bound);
    j["exceeds_trivial"] = r.exceeds_trivial;
    return j;
}

void emit(const json& j, const std::string&) { std::cout << j.dump(2) << "\n"; }

struct CommonOpts {
    std::string format = "text";
    std::string cache_dir;
    bool no_cache = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--cache", opts.cache_dir, "Tensor cache directory");
    cmd->add_flag("--no-cache", opts.no_cache, "Disable the tensor cache");
}

int run(int argc, char** argv) {
    CLI::App app{"Exact Pieri-map tensors, Young flattenings, and border-rank bounds"};
    app.require_subcommand(1);

    std::string lambda_s, mu_s, u_s = "v", alpha_s, type_s = "C", kind_s, complex_file, out_dir;
    int n = 0, rank_opt = 4, max_degree = 3, node = 0, trials = 5;
    int64_t d_twist = 0;
    uint64_t seed = 42;
    bool exact = false;

    auto* dim_cmd = app.add_subcommand("dim", "Dimension of a Schur module");
    dim_cmd->add_option("--lambda", lambda_s, "Partition, comma separated")->required();
    dim_cmd->add_option("--n", n, "Dimension of V")->required();
    CommonOpts dim_opts;
    add_common(dim_cmd, dim_opts);
    dim_cmd->callback([&]() {
        Partition lambda = parse_partition(lambda_s);
        Int dim = schur_dim(lambda, n);
        if (dim_opts.format == "json") {
            json j{{"lambda", json_partition(lambda)}, {"n", n}, {"dim", json_int(dim)}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << dim.get_str() << "\n";
        }
    });

    auto* hooks_cmd = app.add_subcommand("hooks", "Hook lengths of a Young diagram");
    hooks_cmd->add_option("--lambda", lambda_s)->required();
    CommonOpts hooks_opts;
    add_common(hooks_cmd, hooks_opts);
    hooks_cmd->callback([&]() {
        Partition lambda = parse_partition(lambda_s);
        auto rows = hook_lengths(lambda);
        if (hooks_opts.format == "json") {
            json j{{"lambda", json_partition(lambda)}, {"hooks", rows}};
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& row : rows) {
                for (size_t i = 0; i < row.size(); ++i) std::cout << (i ? " " : "") << row[i];
                std::cout << "\n";
            }
        }
    });

    auto* pieri_cmd = app.add_subcommand("pieri", "Build a Pieri tensor and export its matrices");
    pieri_cmd->add_option("--lambda", lambda_s)->required();
    pieri_cmd->add_option("--mu", mu_s)->required();
    pieri_cmd->add_option("--u", u_s, "v | sym2 | wedge2 | symd:D | wedged:D");
    pieri_cmd->add_option("--n", n)->required();
    pieri_cmd->add_option("--out", out_dir, "Output directory")->required();
    CommonOpts pieri_opts;
    add_common(pieri_cmd, pieri_opts);
    pieri_cmd->callback([&]() {
        Partition lambda = parse_partition(lambda_s), mu = parse_partition(mu_s);
        UKind u = UKind::parse(u_s);
        CacheConfig cache = default_cache(pieri_opts.cache_dir);
        PieriTensor t =
            build_pieri_tensor(lambda, mu, u, n, pieri_opts.no_cache ? nullptr : &cache);
        fs::create_directories(out_dir);
        auto slice_name = [](int a) {
            std::ostringstream name;
            name << "slice_" << std::setw(2) << std::setfill('0') << a << ".mtx";
            return name.str();
        };
        t.f1.save((fs::path(out_dir) / "f1.mtx").string());
        t.f2.save((fs::path(out_dir) / "f2.mtx").string());
        for (int a = 0; a < t.dim_u; ++a)
            t.phi_slices[static_cast<size_t>(a)].save((fs::path(out_dir) / slice_name(a)).string());
        json manifest;
        manifest["lambda"] = json_partition(lambda);
        manifest["mu"] = json_partition(mu);
        manifest["u"] = u.to_string();
        manifest["n"] = n;
        manifest["dims"] = {{"k", t.k}, {"l", t.l}, {"dim_u", t.dim_u}};
        manifest["basis_version"] = kBasisVersion;
        manifest["content_hash"] =
            std::to_string(t.f1.content_hash() ^ (t.f2.content_hash() << 1));
        manifest["files"] = json::array();
        manifest["files"].push_back("f1.mtx");
        manifest["files"].push_back("f2.mtx");
        for (int a = 0; a < t.dim_u; ++a) manifest["files"].push_back(slice_name(a));
        std::ofstream(fs::path(out_dir) / "manifest.json") << manifest.dump(2) << "\n";
        emit(manifest, pieri_opts.format);
    });

    auto* flat_cmd = app.add_subcommand("flatten-rank", "Young flattening rank report");
    flat_cmd->add_option("--lambda", lambda_s)->required();
    flat_cmd->add_option("--mu", mu_s)->required();
    flat_cmd->add_option("--u", u_s);
    flat_cmd->add_option("--n", n)->required();
    flat_cmd->add_flag("--exact", exact, "Certified rank over the rationals");
    flat_cmd->add_option("--seed", seed, "Seed for the random prime");
    CommonOpts flat_opts;
    add_common(flat_cmd, flat_opts);
    flat_cmd->callback([&]() {
        Partition lambda = parse_partition(lambda_s), mu = parse_partition(mu_s);
        UKind u = UKind::parse(u_s);
        CacheConfig cache = default_cache(flat_opts.cache_dir);
        FlatteningReport rep =
            flattening_report(lambda, mu, u, n, exact ? RankMode::exact : RankMode::modp, seed,
                              flat_opts.no_cache ? nullptr : &cache);
        json j;
        j["lambda"] = json_partition(rep.lambda);
        j["mu"] = json_partition(rep.mu);
        j["u"] = rep.u.to_string();
        j["n"] = rep.n;
        j["k"] = rep.k;
        j["l"] = rep.l;
        j["matrix_size"] = json_int(rep.matrix_size);
        j["nnz"] = rep.nnz;
        j["weight_blocks"] = rep.weight_blocks;
        j["rank"] = json_rank(rep.rank);
        j["seed"] = seed;
        j["is_isomorphism"] = rep.is_isomorphism;
        j["strip"] = rep.strip.to_string();
        j["theorem_applies"] = rep.theorem_applies;
        j["matches_prediction"] = rep.matches_prediction;
        emit(j, flat_opts.format);
        if (!rep.matches_prediction) throw CLI::RuntimeError(1);
    });

    auto* gen_cmd = app.add_subcommand("generic-rank", "Sampled rank of phi(u)");
    gen_cmd->add_option("--lambda", lambda_s)->required();
    gen_cmd->add_option("--mu", mu_s)->required();
    gen_cmd->add_option("--u", u_s);
    gen_cmd->add_option("--n", n)->required();
    gen_cmd->add_option("--trials", trials);
    gen_cmd->add_option("--seed", seed);
    CommonOpts gen_opts;
    add_common(gen_cmd, gen_opts);
    gen_cmd->callback([&]() {
        Partition lambda = parse_partition(lambda_s), mu = parse_partition(mu_s);
        UKind u = UKind::parse(u_s);
        CacheConfig cache = default_cache(gen_opts.cache_dir);
        PieriTensor t = build_pieri_tensor(lambda, mu, u, n, gen_opts.no_cache ? nullptr : &cache);
        ProbeResult p = generic_rank_probe(t, trials, seed);
        json j = json_probe(p);
        j["lambda"] = json_partition(lambda);
        j["mu"] = json_partition(mu);
        j["u"] = u.to_string();
        j["n"] = n;
        j["k"] = t.k;
        j["l"] = t.l;
        emit(j, gen_opts.format);
    });

    std::string r_source = "both";
    auto* bound_cmd = app.add_subcommand("bound", "Border-rank lower bound report");
    bound_cmd->add_option("--lambda", lambda_s)->required();
    bound_cmd->add_option("--mu", mu_s)->required();
    bound_cmd->add_option("--u", u_s);
    bound_cmd->add_option("--n", n)->required();
    bound_cmd->add_option("--r-source", r_source)
        ->check(CLI::IsMember({"theorem_c", "oracle", "both"}));
    bound_cmd->add_option("--trials", trials);
    bound_cmd->add_option("--seed", seed);
    CommonOpts bound_opts;
    add_common(bound_cmd, bound_opts);
    bound_cmd->callback([&]() {
        Partition lambda = parse_partition(lambda_s), mu = parse_partition(mu_s);
        UKind u = UKind::parse(u_s);
        RankSource src = r_source == "theorem_c" ? RankSource::theorem_c
                         : r_source == "oracle"  ? RankSource::oracle
                                                 : RankSource::both;
        CacheConfig cache = default_cache(bound_opts.cache_dir);
        BoundReport rep = border_rank_bound(lambda, mu, u, n, src, trials, seed,
                                            bound_opts.no_cache ? nullptr : &cache);
        json j = json_bound(rep);
        j["seed"] = seed;
        emit(j, bound_opts.format);
    });

    auto* table_cmd = app.add_subcommand("table1", "Reproduce the six published example rows");
    table_cmd->add_option("--trials", trials);
    table_cmd->add_option("--seed", seed);
    CommonOpts table_opts;
    add_common(table_cmd, table_opts);
    table_cmd->callback([&]() {
        CacheConfig cache = default_cache(table_opts.cache_dir);
        auto rows = table1(trials, seed, table_opts.no_cache ? nullptr : &cache);
        bool all_match = true;
        json jrows = json::array();
        for (const auto& r : rows) {
            all_match = all_match && r.dims_match && r.bound_matches;
            json j;
            j["row"] = r.index;
            j["u"] = r.u.to_string();
            j["lambda"] = json_partition(r.lambda);
            j["mu"] = json_partition(r.mu);
            j["n"] = r.n;
            j["paper"] = {{"dim_u", json_int(r.paper_dim_u)},
                          {"k", json_int(r.paper_k)},
                          {"l", json_int(r.paper_l)},
                          {"bound", json_int(r.paper_bound)}};
            j["computed"] = {{"dim_u", json_int(r.dim_u)},
                             {"k", json_int(r.k)},
                             {"l", json_int(r.l)},
                             {"bound", json_int(r.bound)},
                             {"r_oracle", json_int(r.r_oracle)},
                             {"r_theorem", json_int(r.r_theorem)}};
            j["dims_match"] = r.dims_match;
            j["bound_matches"] = r.bound_matches;
            j["r_consistent"] = r.r_consistent;
            if (!r.note.empty()) j["note"] = r.note;
            jrows.push_back(j);
        }
        if (table_opts.format == "csv") {
            std::cout << "row,u,lambda,mu,n,paper_bound,computed_bound,dims_match,bound_matches\n";
            for (const auto& r : rows) {
                std::cout << r.index << "," << r.u.to_string() << ","
                          << r.lambda.to_string() << "," << r.mu.to_string() << "," << r.n << ","
                          << r.paper_bound.get_str() << "," << r.bound.get_str() << ","
                          << (r.dims_match ? 1 : 0) << "," << (r.bound_matches ? 1 : 0) << "\n";
            }
        } else if (table_opts.format == "json") {
            json j{{"rows", jrows}, {"all_match", all_match}, {"seed", seed}};
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& r : rows) {
                std::cout << "row " << r.index << ": U=" << r.u.to_string()
                          << " lambda=" << r.lambda.to_string() << " mu=" << r.mu.to_string()
                          << " dims=(" << r.dim_u.get_str() << "," << r.k.get_str() << ","
                          << r.l.get_str() << ") r=" << r.r_oracle.get_str()
                          << " bound=" << r.bound.get_str() << " paper=" << r.paper_bound.get_str()
                          << (r.dims_match && r.bound_matches ? "  [match]" : "  [MISMATCH]");
                if (!r.note.empty()) std::cout << "  note: " << r.note;
                std::cout << "\n";
            }
        }
        if (!all_match) throw CLI::RuntimeError(1);
    });

    auto* kostant_cmd = app.add_subcommand("kostant", "Kostant homology weight table");
    kostant_cmd->add_option("--type", type_s, "A | C | D | E6");
    kostant_cmd->add_option("--rank", rank_opt)->required();
    kostant_cmd->add_option("--alpha", alpha_s, "Dominant weight, comma separated")->required();
    kostant_cmd->add_option("--max-degree", max_degree);
    kostant_cmd->add_option("--node", node, "Excluded simple node (default: last)");
    CommonOpts kostant_opts;
    add_common(kostant_cmd, kostant_opts);
    kostant_cmd->callback([&]() {
        RootDatum datum = RootDatum::make(parse_cartan_type(type_s), rank_opt);
        Weight alpha = parse_weight(alpha_s);
        int levi = node > 0 ? node : datum.num_generators();
        SyzygyTable table = kostant_weights(datum, levi, alpha, max_degree);
        if (kostant_opts.format == "json") {
            json jentries = json::array();
            for (const auto& e : table.entries) {
                json j;
                j["degree"] = e.degree;
                j["w"] = e.w.to_string(datum);
                j["action"] = json_weight(e.action);
                j["dual_weight"] = json_weight(e.dual_weight);
                j["shape"] = json_partition(e.shape);
                j["det_twist"] = e.det_twist;
                jentries.push_back(j);
            }
            json j{{"type", cartan_type_name(datum.type)},
                   {"rank", datum.rank},
                   {"alpha", json_weight(alpha)},
                   {"node", levi},
                   {"entries", jentries}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << std::left << std::setw(4) << "p" << std::setw(14) << "w" << std::setw(24)
                      << "-(w^-1.alpha)^opp"
                      << "shape\n";
            for (const auto& e : table.entries) {
                std::cout << std::left << std::setw(4) << e.degree << std::setw(14)
                          << e.w.to_string(datum) << std::setw(24)
                          << weight_to_string(e.dual_weight) << e.shape.to_string() << "\n";
            }
        }
    });

    auto* bwb_cmd = app.add_subcommand("bwb", "Cohomology on the hyperplane Grassmannian");
    bwb_cmd->add_option("--lambda", lambda_s, "Weakly decreasing weight of length n-1")
        ->required();
    bwb_cmd->add_option("--d", d_twist, "Twist")->required();
    bwb_cmd->add_option("--n", n)->required();
    CommonOpts bwb_opts;
    add_common(bwb_cmd, bwb_opts);
    bwb_cmd->callback([&]() {
        BwbResult r = bwb(parse_weight(lambda_s), d_twist, n);
        json j;
        if (r.vanishing) {
            j["vanishing"] = true;
        } else {
            j["degree"] = r.degree;
            j["weight"] = json_weight(r.weight);
        }
        emit(j, bwb_opts.format);
    });

    int64_t threshold = -1;
    auto* euler_cmd = app.add_subcommand("euler", "Euler polynomial of a lifted weight complex");
    euler_cmd->add_option("--complex", complex_file, "JSON complex file")->required();
    euler_cmd->add_option("--n", n, "Lifted dimension")->required();
    euler_cmd->add_option("--threshold", threshold,
                          "Validity threshold l (default: max first row)");
    CommonOpts euler_opts;
    add_common(euler_cmd, euler_opts);
    euler_cmd->callback([&]() {
        std::ifstream is(complex_file);
        if (!is) throw std::runtime_error("cannot read " + complex_file);
        std::stringstream buf;
        buf << is.rdbuf();
        WeightComplex g = WeightComplex::from_json_text(buf.str());
        RatPoly chi = euler_poly(g, n);
        int64_t l = threshold;
        if (l < 0) {
            l = 0;
            for (const auto& t : g.terms)
                for (const auto& w : t.weights) l = std::max(l, w.part(1));
        }
        json j;
        j["n"] = n;
        j["threshold"] = l;
        j["polynomial"] = chi.to_string();
        json coeffs = json::array();
        for (const auto& c : chi.coeffs()) coeffs.push_back(c.get_str());
        j["coefficients_ascending"] = coeffs;
        if (chi.is_zero()) {
            j["exceptional_k"] = nullptr;
            j["guarantee"] = "zero Euler polynomial: the lift is inconclusive";
        } else {
            json roots = json::array();
            for (const Int& r : exceptional_k(chi, l)) roots.push_back(json_int(r));
            j["exceptional_k"] = roots;
            j["guarantee"] = "non-vanishing holds for every integer k > " + std::to_string(l) +
                             " outside exceptional_k";
        }
        emit(j, euler_opts.format);
    });

    auto* fam_cmd = app.add_subcommand("families", "Published partition families");
    fam_cmd->add_option("--kind", kind_s,
                        "sym2-row2 | sym2-1a | sym2-1b | wedge2-col | wedge2-2a | wedge2-2b | "
                        "wedge2-2c | e6-beta")
        ->required();
    fam_cmd->add_option("--alpha", alpha_s, "Parameter weight")->required();
    fam_cmd->add_option("--n", n, "Dimension (ignored for e6-beta)");
    CommonOpts fam_opts;
    add_common(fam_cmd, fam_opts);
    fam_cmd->callback([&]() {
        FamilyRecord rec = family_generator(parse_family_kind(kind_s), parse_weight(alpha_s), n);
        json j;
        j["kind"] = family_kind_name(rec.kind);
        j["n"] = rec.n;
        if (rec.alpha_prime) j["alpha_prime"] = json_partition(*rec.alpha_prime);
        j["lambda"] = json_partition(rec.lambda);
        j["mu"] = json_partition(rec.mu);
        if (rec.nu) j["nu"] = json_partition(*rec.nu);
        if (!rec.betas.empty()) {
            json betas = json::array();
            for (const auto& b : rec.betas) betas.push_back(json_partition(b));
            j["betas"] = betas;
        }
        emit(j, fam_opts.format);
    });

    auto* basis_cmd = app.add_subcommand("schur-basis", "Semistandard basis and generators");
    basis_cmd->add_option("--lambda", lambda_s)->required();
    basis_cmd->add_option("--n", n)->required();
    basis_cmd->add_option("--out", out_dir, "Export generator matrices (MatrixMarket)");
    CommonOpts basis_opts;
    add_common(basis_cmd, basis_opts);
    basis_cmd->callback([&]() {
        Partition lambda = parse_partition(lambda_s);
        auto m = SchurModule::get(lambda, n);
        if (!out_dir.empty()) {
            fs::create_directories(out_dir);
            for (int g = 1; g < n; ++g) {
                m->weighted().e[static_cast<size_t>(g - 1)].save(
                    (fs::path(out_dir) / ("e" + std::to_string(g) + ".mtx")).string());
                m->weighted().f[static_cast<size_t>(g - 1)].save(
                    (fs::path(out_dir) / ("f" + std::to_string(g) + ".mtx")).string());
            }
        }
        if (basis_opts.format == "json") {
            json basis = json::array();
            for (const auto& t : m->basis()) basis.push_back(t.to_string());
            json j{{"lambda", json_partition(lambda)}, {"n", n},
                   {"dim", m->dim()},          {"basis", basis},
                   {"basis_version", kBasisVersion}, {"hwv_index", m->hwv_index()}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "dim " << m->dim() << "\n";
            for (int i = 0; i < m->dim(); ++i)
                std::cout << i << ": " << m->basis()[static_cast<size_t>(i)].to_string() << "\n";
        }
    });

    bool do_clear = false, do_verify = false;
    auto* cache_cmd = app.add_subcommand("cache", "Inspect or clear the tensor cache");
    cache_cmd->add_flag("--clear", do_clear, "Remove the cache directory");
    cache_cmd->add_flag("--verify", do_verify, "Checksum all cached files");
    CommonOpts cache_opts;
    add_common(cache_cmd, cache_opts);
    cache_cmd->callback([&]() {
        CacheConfig cfg = default_cache(cache_opts.cache_dir);
        if (do_clear) {
            cache_clear(cfg);
            std::cout << "cleared " << cfg.dir << "\n";
            return;
        }
        CacheStats stats = cache_verify(cfg);
        json j{{"dir", cfg.dir},
               {"entries", stats.entries},
               {"files", stats.files},
               {"bytes", stats.bytes},
               {"corrupt", stats.corrupt}};
        emit(j, cache_opts.format);
        if (do_verify && stats.corrupt > 0) throw CLI::RuntimeError(1);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::RuntimeError& e) {
        return e.get_exit_code();  // verification mismatch: exit 1
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage errors exit 2
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::RuntimeError& e) {
        return e.get_exit_code();
    } catch (const std::exception& ex) {
        std::cerr << "pieri-rank: " << ex.what() << "\n";
        return 1;
    }
}
