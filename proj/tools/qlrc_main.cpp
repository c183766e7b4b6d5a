#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "qlrc/json_io.hpp"
#include "qlrc/svg.hpp"

using namespace qlrc;

namespace {

struct GlobalOpts {
    uint64_t budget = 1ull << 24;
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    uint64_t seed = 0;

    Budget make_budget() const {
        Budget b;
        b.cap = budget;
        b.threads = std::max(1, threads);
        return b;
    }
};

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParameterError("cannot open output file: " + path);
    out << content;
}

void write_json(const std::string& path, const Json& j) { write_output(path, j.dump(2) + "\n"); }

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open input file: " + path);
    Json j;
    in >> j;
    return j;
}

std::vector<uint32_t> parse_hex_list(const std::string& s) {
    std::vector<uint32_t> out;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ','))
        if (!tok.empty()) out.push_back(static_cast<uint32_t>(std::stoul(tok, nullptr, 16)));
    return out;
}

int degree_of_size(uint64_t q2) {
    int e = 0;
    while ((1ull << e) < q2 && e <= 16) ++e;
    if ((1ull << e) != q2) throw ParameterError("--q2 must be a power of two up to 2^16");
    return e;
}

std::vector<BigRat> sample_grid(int samples) {
    if (samples < 2) throw ParameterError("--samples must be at least 2");
    std::vector<BigRat> grid;
    for (int i = 0; i < samples; ++i) grid.emplace_back(BigInt(i), BigInt(2 * (samples - 1)));
    return grid;
}

// ---- construct ----------------------------------------------------------

Json bigint_json_pub(const BigInt& v) {
    if (v <= BigInt(9007199254740992ll)) return static_cast<int64_t>(v);
    return v.str();
}

struct ConstructOpts {
    std::string family;  // hz | grs
    uint64_t q2 = 0;
    std::string modulus;
    std::string set = "subgroup";
    int m1 = 0, m2 = 0;
    std::string points;
    std::string v = "ones";
    int k = 0;
    std::string out;
};

int run_construct(const ConstructOpts& o, const GlobalOpts& g) {
    int e = degree_of_size(o.q2);
    const Field& f = o.modulus.empty()
                         ? Field::gf(e)
                         : Field::gf(e, static_cast<uint32_t>(std::stoul(o.modulus, nullptr, 16)));

    EvaluationSet s;
    if (o.set == "subgroup") {
        if (o.m1 < 1 || o.m1 > e) throw ParameterError("--m1 must be in [1, degree]");
        std::vector<uint32_t> basis;
        for (int i = 0; i < o.m1; ++i) basis.push_back(1u << i);
        s = additive_subgroup(f, basis);
    } else if (o.set == "subfield-star") {
        s = subfield_star(f, o.m2);
    } else if (o.set == "custom") {
        s = custom_set(f, parse_hex_list(o.points));
    } else {
        throw ParameterError("--set must be subgroup, subfield-star, or custom");
    }

    int dim = o.family == "grs" ? o.k : o.k + 1;  // HZ solving targets GRS_{k+1}
    MultiplierVector v;
    Json solver_meta;
    if (o.v == "ones") {
        v = MultiplierVector::ones(s.n());
    } else if (o.v == "solve") {
        SolverResult sol = solve_hermitian_multipliers(s, dim, g.seed);
        v = sol.v;
        solver_meta["seed"] = sol.seed;
        solver_meta["exhaustive"] = sol.exhaustive;
        solver_meta["trials"] = sol.trials;
    } else {
        v.values = parse_hex_list(o.v);
    }

    LinearCode code = o.family == "hz" ? hz_generator(s, v, o.k) : grs_generator(s, v, o.k);
    Json j = code_json(code);
    if (!solver_meta.is_null()) j["solver"] = solver_meta;
    write_json(o.out, j);
    return 0;
}

// ---- certify ------------------------------------------------------------

int run_certify(const std::string& input, const std::string& recheck_path,
                const std::string& out, const GlobalOpts& g) {
    if (!recheck_path.empty()) {
        RecheckResult res = recheck_certificate(load_json(recheck_path), g.make_budget());
        if (res.ok) {
            std::cout << "recheck: OK\n";
            return 0;
        }
        for (const auto& p : res.problems) std::cerr << "recheck: " << p << "\n";
        return 1;
    }
    LinearCode code = code_from_json(load_json(input));
    OptimalClrcCertificate cert = certify_optimal_clrc(code, g.make_budget());
    write_json(out, optimal_clrc_json(cert));
    if (!cert.certified()) {
        for (const auto& fl : cert.failures) std::cerr << "certify: " << fl << "\n";
        return 1;
    }
    return 0;
}

// ---- qlrc / repro -------------------------------------------------------

int run_family(int family, int m, int m12, int k, const std::string& out, const GlobalOpts& g) {
    FamilyInstance inst = family_qlrc(family, m, m12, k, g.seed, g.make_budget());
    Json j = family_json(inst);
    write_json(out, j);
    bool sane = inst.bounds.singleton.holds && inst.bounds.cm.holds &&
                (!inst.bounds.griesmer.applicable || inst.bounds.griesmer.holds) &&
                (!inst.bounds.plotkin.applicable || inst.bounds.plotkin.holds) &&
                (!inst.bounds.pure_singleton.applicable || inst.bounds.pure_singleton.holds) &&
                inst.dual_design.verified && inst.one_design.verified;
    if (!sane) {
        std::cerr << "qlrc: a checked claim failed\n";
        return 1;
    }
    return 0;
}

int run_curve(uint64_t q, int r, int t, int samples, const std::string& csv,
              const std::string& svg, const std::string& title) {
    auto series = asymptotic_curves(q, r, t, sample_grid(samples));
    if (!csv.empty()) write_output(csv, curves_csv(series));
    if (!svg.empty()) write_output(svg, curves_svg(series, title));
    if (csv.empty() && svg.empty()) std::cout << curves_csv(series);
    return 0;
}

int run_figure(uint64_t q, int r, int samples, const std::string& csv, const std::string& svg,
               const std::string& title) {
    // The comparison figures overlay the Griesmer line for t = 1, 2, 3 with
    // the other three bounds.
    auto grid = sample_grid(samples);
    std::vector<CurveSeries> series;
    for (int t = 1; t <= 3; ++t) {
        auto s4 = asymptotic_curves(q, r, t, grid);
        CurveSeries gs = s4[0];
        gs.which = "griesmer_t" + std::to_string(t);
        series.push_back(std::move(gs));
        if (t == 1) {
            series.push_back(s4[1]);
            series.push_back(s4[2]);
            series.push_back(s4[3]);
        }
    }
    std::ostringstream os;
    os << "delta";
    for (const auto& s : series) os << ',' << s.which;
    os << '\n';
    for (size_t i = 0; i < grid.size(); ++i) {
        os << decimal(grid[i], 12);
        for (const auto& s : series) os << ',' << decimal(s.samples[i].second, 12);
        os << '\n';
    }
    if (!csv.empty()) write_output(csv, os.str());
    if (!svg.empty()) write_output(svg, curves_svg(series, title));
    if (csv.empty() && svg.empty()) std::cout << os.str();
    return 0;
}

int run_repro_design(int which, const std::string& out, const GlobalOpts& g) {
    Budget budget = g.make_budget();
    Json j;
    j["schema"] = "qlrc-cert/1";
    j["kind"] = "repro";
    if (which == 5) {
        const Field& f = Field::gf(3);
        std::vector<uint32_t> basis = {1, 2, 4};
        LinearCode hz = hz_generator(additive_subgroup(f, basis),
                                     MultiplierVector::ones(8), 4);
        j["code"] = code_json(hz);
        j["nmds"] = hz.is_nmds(budget);
        WeightDistribution wd = hz.weight_distribution(budget);
        Json wj = Json::array();
        for (const auto& c : wd.counts) wj.push_back(bigint_json_pub(c));
        j["weight_distribution"] = wj;
        BlockSystem blocks = blocks_from_min_weight(hz.dual(), budget);
        DesignCertificate cert = verify_t_design(blocks, 3);
        j["design"] = design_json(cert, &blocks);
        write_json(out, j);
        return cert.verified && hz.is_nmds(budget) ? 0 : 1;
    }
    // which == 7: the 2-design from the subfield-star code
    const Field& f = Field::gf(4);
    LinearCode hz = hz_generator(subfield_star(f, 4), MultiplierVector::ones(15), 3);
    j["code"] = code_json(hz);
    j["nmds"] = hz.is_nmds(budget);
    BlockSystem blocks = blocks_from_min_weight(hz.dual(), budget);
    DesignCertificate cert = verify_t_design(blocks, 2);
    j["design"] = design_json(cert, &blocks);
    write_json(out, j);
    return cert.verified && hz.is_nmds(budget) ? 0 : 1;
}

int run_repro_clrc(int which, int m12, int k, const std::string& out, const GlobalOpts& g) {
    Budget budget = g.make_budget();
    const Field& f = Field::gf(m12);  // ambient GF(2^m) at the smallest m = m1 resp. m2
    EvaluationSet s;
    if (which == 10) {
        std::vector<uint32_t> basis;
        for (int i = 0; i < m12; ++i) basis.push_back(1u << i);
        s = additive_subgroup(f, basis);
    } else {
        s = subfield_star(f, m12);
    }
    LinearCode hz = hz_generator(s, MultiplierVector::ones(s.n()), k);
    OptimalClrcCertificate primal = certify_optimal_clrc(hz, budget);
    OptimalClrcCertificate dual = certify_optimal_clrc(hz.dual(), budget);
    Json j;
    j["schema"] = "qlrc-cert/1";
    j["kind"] = "repro";
    j["primal"] = optimal_clrc_json(primal);
    j["dual"] = optimal_clrc_json(dual);
    write_json(out, j);
    return primal.certified() && dual.certified() ? 0 : 1;
}

// ---- table --------------------------------------------------------------

struct StaticRow {
    const char* params;
    const char* locality;
    const char* condition;
    const char* source;
};

int run_table(const std::string& out, const GlobalOpts& g) {
    // Rows 1-7 are external reference families, displayed as static data; the
    // final three rows are regenerated live with certificates.
    static const StaticRow external_rows[] = {
        {"[[7^(2^(m-1)) * 2^(2^(m-1)-1), k, delta]]_2", "2^(m+1)-1",
         "k >= 2^(2^(m-1)-1), delta >= 3, m >= 2", "external (hypergraph product)"},
        {"[[n, 2k-n, n-k+1]]_q", "k", "an [n,k]_{q^2} Hermitian dual-containing MDS code exists",
         "external (Hermitian MDS)"},
        {"[[q-1, (2l-q)(1-2/r)+eps, delta]]_q", "r | (q-1), r >= 3",
         "-2 <= eps <= 2, l <= q, delta >= Delta_1, prime r", "external (Tamo-Barg folding)"},
        {"[[u(r+1), kappa, delta]]_q", "r <= q-1, r > 2 delta + u - 4",
         "kappa, delta fixed by cases", "external (parity-check / cyclic)"},
        {"[[n, 2k-n, delta]]_q", "(r+1) | n", "n <= q, n/2 < k <= nr/(r+1), delta >= Delta_2",
         "external (good polynomials)"},
        {"[[q^2, q^2-6, 3]]_q", "q(q-1)-1", "q >= 7", "external (trace codes)"},
        {"[[q(q-1)/h, q(q-1)/h - 6, 3]]_q", "q(q-h-1)/h - 1", "q >= 7", "external (trace codes)"},
    };

    std::ostringstream os;
    os << "no. | parameters | locality | condition | source\n";
    os << "----+------------+----------+-----------+-------\n";
    int rowno = 1;
    for (const auto& r : external_rows) {
        os << rowno++ << " | " << r.params << " | " << r.locality << " | " << r.condition
           << " | " << r.source << "\n";
    }

    Json rows = Json::array();
    struct LiveSpec {
        int family, m, m12, k;
        const char* shape;
        const char* locality;
        const char* condition;
    };
    static const LiveSpec live[] = {
        {1, 3, 6, 4, "[[2^m1, 2^m1-2k, >=k]]_{2^m}", "2^m1-k-1",
         "even k, 4<=k<=floor((2^m1+2^m-1)/(2^m+1))-1, m+3<=m1<=2m"},
        {2, 4, 4, 4, "[[2^m1, 2^m1-2k, >=k]]_{2^m}", "2^m1-k-1",
         "even k, 4<=k<=2^(m1-1)-1, 4<=m1<=m"},
        {3, 4, 4, 4, "[[2^m2-1, 2^m2-2k-1, >=k]]_{2^m}", "2^m2-k-2",
         "4<=k<=2^(m2-1)-1, 4<=m2<=m, m2|m"},
    };
    for (const auto& spec : live) {
        FamilyInstance inst = family_qlrc(spec.family, spec.m, spec.m12, spec.k, g.seed,
                                          g.make_budget());
        os << rowno++ << " | " << spec.shape << " | " << spec.locality << " | "
           << spec.condition << " | certified live: [[" << inst.params.n << ","
           << inst.params.kappa << ",>=" << inst.params.delta_lower << "]]_"
           << inst.params.q << " r=" << inst.params.r << "\n";
        rows.push_back(family_json(inst));
    }
    std::cout << os.str();
    if (!out.empty()) {
        Json j;
        j["schema"] = "qlrc-cert/1";
        j["kind"] = "table";
        j["live_rows"] = rows;
        write_json(out, j);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qlrc: construction and certification of locally recoverable codes "
                 "and their quantum counterparts"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env = std::getenv("QLRC_BUDGET")) g.budget = std::strtoull(env, nullptr, 10);
    app.add_option("--budget", g.budget, "enumeration cap (codeword evaluations)");
    app.add_option("--threads", g.threads, "worker threads for enumeration");
    app.add_option("--seed", g.seed, "seed for randomized searches");

    ConstructOpts c;
    auto* construct = app.add_subcommand("construct", "build an HZ or GRS code");
    construct->add_option("family", c.family, "hz or grs")->required();
    construct->add_option("--q2", c.q2, "field size (power of two)")->required();
    construct->add_option("--modulus", c.modulus, "modulus polynomial, hex");
    construct->add_option("--set", c.set, "subgroup | subfield-star | custom");
    construct->add_option("--m1", c.m1, "subgroup rank");
    construct->add_option("--m2", c.m2, "subfield degree");
    construct->add_option("--points", c.points, "comma-separated hex points (custom set)");
    construct->add_option("--v", c.v, "ones | solve | comma-separated hex multipliers");
    construct->add_option("--k", c.k, "HZ k / GRS dimension")->required();
    construct->add_option("--out", c.out, "output JSON path");

    std::string certify_input, recheck_path, certify_out;
    auto* certify = app.add_subcommand("certify", "certify a code or recheck a certificate");
    certify->add_option("input", certify_input, "code JSON path");
    certify->add_option("--recheck", recheck_path, "certificate JSON to re-validate");
    certify->add_option("--out", certify_out, "output JSON path");

    int q_family = 0, q_m = 0, q_m1 = 0, q_m2 = 0, q_k = 0;
    std::string q_out;
    auto* qlrc_cmd = app.add_subcommand("qlrc", "run a qLRC family pipeline");
    qlrc_cmd->add_option("--family", q_family, "1, 2, or 3")->required();
    qlrc_cmd->add_option("--m", q_m, "base degree m")->required();
    qlrc_cmd->add_option("--m1", q_m1, "subgroup rank (families 1-2)");
    qlrc_cmd->add_option("--m2", q_m2, "subfield degree (family 3)");
    qlrc_cmd->add_option("--k", q_k, "HZ dimension k")->required();
    qlrc_cmd->add_option("--out", q_out, "output JSON path");

    uint64_t cv_q = 2;
    int cv_r = 2, cv_t = 1, cv_samples = 101;
    std::string cv_csv, cv_svg;
    auto* curve = app.add_subcommand("curve", "sample the asymptotic bound curves");
    curve->add_option("--q", cv_q, "alphabet size");
    curve->add_option("--r", cv_r, "locality");
    curve->add_option("--t", cv_t, "Griesmer truncation parameter");
    curve->add_option("--samples", cv_samples, "sample count over [0, 0.5]");
    curve->add_option("--csv", cv_csv, "CSV output path");
    curve->add_option("--svg", cv_svg, "SVG output path");

    uint64_t xo_q = 2;
    int xo_r = 2, xo_t = 1;
    std::string xo_out;
    auto* crossover = app.add_subcommand("crossover", "bound crossover thresholds");
    crossover->add_option("--q", xo_q, "alphabet size");
    crossover->add_option("--r", xo_r, "locality");
    crossover->add_option("--t", xo_t, "Griesmer truncation parameter");
    crossover->add_option("--out", xo_out, "output JSON path");

    std::string rp_target, rp_out, rp_csv, rp_svg;
    int rp_m = 0, rp_m1 = 0, rp_m2 = 0, rp_k = 0, rp_samples = 101;
    auto* repro = app.add_subcommand("repro", "reproduce a named construction or figure");
    repro->add_option("target", rp_target,
                      "thm5|thm7|thm10|thm11|thm12|thm13|thm14|fig1|fig2|fig3")
        ->required();
    repro->add_option("--m", rp_m, "base degree override");
    repro->add_option("--m1", rp_m1, "subgroup rank override");
    repro->add_option("--m2", rp_m2, "subfield degree override");
    repro->add_option("--k", rp_k, "dimension override");
    repro->add_option("--samples", rp_samples, "figure sample count");
    repro->add_option("--out", rp_out, "output JSON path");
    repro->add_option("--csv", rp_csv, "CSV output path (figures)");
    repro->add_option("--svg", rp_svg, "SVG output path (figures)");

    std::string tb_out;
    auto* table = app.add_subcommand("table", "known qLRC families, last three regenerated live");
    table->add_option("--out", tb_out, "output JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (construct->parsed()) return run_construct(c, g);
        if (certify->parsed()) {
            if (certify_input.empty() && recheck_path.empty())
                throw ParameterError("certify needs a code file or --recheck");
            return run_certify(certify_input, recheck_path, certify_out, g);
        }
        if (qlrc_cmd->parsed())
            return run_family(q_family, q_m, q_family == 3 ? q_m2 : q_m1, q_k, q_out, g);
        if (curve->parsed()) {
            std::string title = "asymptotic qLRC bounds, q=" + std::to_string(cv_q) +
                                ", r=" + std::to_string(cv_r) + ", t=" + std::to_string(cv_t);
            return run_curve(cv_q, cv_r, cv_t, cv_samples, cv_csv, cv_svg, title);
        }
        if (crossover->parsed()) {
            CrossoverReport rep = crossover_report(xo_q, xo_r, xo_t);
            write_json(xo_out, crossover_json(xo_q, xo_r, xo_t, rep));
            return 0;
        }
        if (repro->parsed()) {
            if (rp_target == "thm5") return run_repro_design(5, rp_out, g);
            if (rp_target == "thm7") return run_repro_design(7, rp_out, g);
            if (rp_target == "thm10")
                return run_repro_clrc(10, rp_m1 ? rp_m1 : 3, rp_k ? rp_k : 4, rp_out, g);
            if (rp_target == "thm11")
                return run_repro_clrc(11, rp_m2 ? rp_m2 : 4, rp_k ? rp_k : 3, rp_out, g);
            if (rp_target == "thm12")
                return run_family(1, rp_m ? rp_m : 3, rp_m1 ? rp_m1 : 6, rp_k ? rp_k : 4,
                                  rp_out, g);
            if (rp_target == "thm13")
                return run_family(2, rp_m ? rp_m : 4, rp_m1 ? rp_m1 : 4, rp_k ? rp_k : 4,
                                  rp_out, g);
            if (rp_target == "thm14")
                return run_family(3, rp_m ? rp_m : 4, rp_m2 ? rp_m2 : 4, rp_k ? rp_k : 4,
                                  rp_out, g);
            if (rp_target == "fig1")
                return run_figure(2, 2, rp_samples, rp_csv, rp_svg, "qubit codes, locality 2");
            if (rp_target == "fig2")
                return run_figure(2, 6, rp_samples, rp_csv, rp_svg, "qubit codes, locality 6");
            if (rp_target == "fig3")
                return run_figure(3, 2, rp_samples, rp_csv, rp_svg, "qutrit codes, locality 2");
            throw ParameterError("unknown repro target: " + rp_target);
        }
        if (table->parsed()) return run_table(tb_out, g);
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionObstruction& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonTowerField& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
