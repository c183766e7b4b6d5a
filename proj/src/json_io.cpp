#include "qlrc/json_io.hpp"

#include <sstream>

#include "qlrc/sha256.hpp"
#include "qlrc/subset_sum.hpp"

namespace qlrc {

namespace {

constexpr const char* kSchema = "qlrc-cert/1";

std::string hex(uint32_t v) {
    std::ostringstream os;
    os << "0x" << std::hex << v;
    return os.str();
}

uint32_t from_hex(const std::string& s) {
    return static_cast<uint32_t>(std::stoul(s, nullptr, 16));
}

Json hex_array(const std::vector<uint32_t>& vs) {
    Json a = Json::array();
    for (uint32_t v : vs) a.push_back(hex(v));
    return a;
}

std::vector<uint32_t> hex_array_parse(const Json& a) {
    std::vector<uint32_t> out;
    for (const auto& v : a) out.push_back(from_hex(v.get<std::string>()));
    return out;
}

std::string row_string(const uint32_t* p, int n) {
    std::string s;
    for (int j = 0; j < n; ++j) {
        if (j) s += ' ';
        s += hex(p[j]);
    }
    return s;
}

std::vector<uint32_t> row_parse(const std::string& s) {
    std::vector<uint32_t> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(from_hex(tok));
    return out;
}

Json bigint_json(const BigInt& v) {
    if (v >= std::numeric_limits<int64_t>::min() && v <= BigInt(9007199254740992ll))
        return static_cast<int64_t>(v);
    return v.str();
}

Json bigrat_json(const BigRat& v) {
    Json j;
    j["exact"] = boost::multiprecision::numerator(v).str() + "/" +
                 boost::multiprecision::denominator(v).str();
    j["decimal"] = decimal(v, 12);
    return j;
}

std::string set_kind_name(Provenance::SetKind k) {
    switch (k) {
        case Provenance::SetKind::additive_subgroup: return "additive-subgroup";
        case Provenance::SetKind::subfield_star: return "subfield-star";
        case Provenance::SetKind::custom: return "custom";
    }
    return "custom";
}

Provenance::SetKind set_kind_parse(const std::string& s) {
    if (s == "additive-subgroup") return Provenance::SetKind::additive_subgroup;
    if (s == "subfield-star") return Provenance::SetKind::subfield_star;
    return Provenance::SetKind::custom;
}

}  // namespace

Json field_json(const Field& f) {
    Json j;
    j["characteristic"] = 2;
    j["degree"] = f.degree();
    j["modulus"] = hex(f.modulus());
    return j;
}

const Field& field_from_json(const Json& j) {
    if (j.at("characteristic").get<int>() != 2)
        throw ParameterError("only characteristic 2 is supported");
    return Field::gf(j.at("degree").get<int>(), from_hex(j.at("modulus").get<std::string>()));
}

Json code_json(const LinearCode& c) {
    Json j;
    j["schema"] = kSchema;
    j["kind"] = "code";
    j["field"] = field_json(c.field());
    j["n"] = c.n();
    j["k"] = c.k();
    Json rows = Json::array();
    for (int i = 0; i < c.k(); ++i) rows.push_back(row_string(c.generator().row(i), c.n()));
    j["generator"] = rows;
    if (c.provenance) {
        const Provenance& p = *c.provenance;
        Json pj;
        pj["family"] = p.family == Provenance::Family::hz ? "hz" : "grs";
        pj["k"] = p.k;
        pj["points"] = hex_array(p.points);
        pj["multipliers"] = hex_array(p.mult);
        pj["set_kind"] = set_kind_name(p.kind);
        if (p.kind == Provenance::SetKind::additive_subgroup) pj["m1"] = p.m1;
        if (p.kind == Provenance::SetKind::subfield_star) pj["m2"] = p.m2;
        pj["dual_side"] = p.dual_side;
        pj["conjugated"] = p.conjugated;
        j["provenance"] = pj;
    }
    return j;
}

LinearCode code_from_json(const Json& j) {
    const Field& f = field_from_json(j.at("field"));
    int n = j.at("n").get<int>(), k = j.at("k").get<int>();
    std::vector<uint32_t> entries;
    for (const auto& row : j.at("generator")) {
        auto r = row_parse(row.get<std::string>());
        if (static_cast<int>(r.size()) != n) throw ParameterError("generator row length mismatch");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    LinearCode c(f, Matrix(f, k, n, std::move(entries)));
    if (c.k() != k) throw ParameterError("stored generator has the wrong rank");
    if (j.contains("provenance")) {
        const Json& pj = j.at("provenance");
        Provenance p;
        p.family = pj.at("family").get<std::string>() == "hz" ? Provenance::Family::hz
                                                              : Provenance::Family::grs;
        p.k = pj.at("k").get<int>();
        p.points = hex_array_parse(pj.at("points"));
        p.mult = hex_array_parse(pj.at("multipliers"));
        p.kind = set_kind_parse(pj.at("set_kind").get<std::string>());
        if (pj.contains("m1")) p.m1 = pj.at("m1").get<int>();
        if (pj.contains("m2")) p.m2 = pj.at("m2").get<int>();
        p.dual_side = pj.at("dual_side").get<bool>();
        p.conjugated = pj.at("conjugated").get<bool>();
        c.provenance = p;
    }
    return c;
}

std::string blocks_canonical(const BlockSystem& b) {
    std::string s;
    for (size_t i = 0; i < b.blocks.size(); ++i) {
        if (i) s += ';';
        for (size_t j = 0; j < b.blocks[i].size(); ++j) {
            if (j) s += ',';
            s += std::to_string(b.blocks[i][j]);
        }
    }
    return s;
}

std::string blocks_sha256(const BlockSystem& b) { return Sha256::of(blocks_canonical(b)); }

Json design_json(const DesignCertificate& cert, const BlockSystem* blocks) {
    Json j;
    j["schema"] = kSchema;
    j["kind"] = "design-cert";
    j["t"] = cert.t;
    j["n"] = cert.n;
    j["w"] = cert.w;
    j["lambda"] = bigint_json(cert.lambda);
    j["b"] = bigint_json(cert.b);
    j["verified"] = cert.verified;
    j["multiplicity_check"] = cert.multiplicity_check;
    if (blocks) {
        j["blocks_sha256"] = blocks_sha256(*blocks);
        if (blocks->blocks.size() <= 4096) {
            Json ba = Json::array();
            for (const auto& blk : blocks->blocks) ba.push_back(blk);
            j["blocks"] = ba;
        }
    }
    return j;
}

Json locality_json(const LocalityCertificate& cert) {
    Json j;
    if (cert.r)
        j["locality"] = *cert.r;
    else
        j["locality"] = nullptr;
    j["lower_bound"] = cert.lower_bound;
    j["exact"] = cert.exact;
    Json ws = Json::array();
    for (const auto& w : cert.witnesses) {
        Json wj;
        wj["coordinate"] = w.coordinate;
        wj["support"] = w.support;
        wj["word"] = row_string(w.word.data(), static_cast<int>(w.word.size()));
        ws.push_back(wj);
    }
    j["witnesses"] = ws;
    return j;
}

namespace {

Json bound_json(const BoundValue& b) {
    Json j;
    if (b.vacuous) {
        j["rhs"] = "vacuous";
        return j;
    }
    j["rhs"] = bigint_json(b.rhs);
    j["met"] = b.met;
    j["holds"] = b.holds;
    j["slack"] = bigint_json(b.slack);
    return j;
}

Json qbound_json(const QBoundValue& b) {
    Json j;
    j["applicable"] = b.applicable;
    if (b.applicable) {
        j["rhs"] = bigint_json(b.rhs);
        j["met"] = b.met;
        j["holds"] = b.holds;
    }
    return j;
}

}  // namespace

Json clrc_bounds_json(const ClrcBoundReport& rep) {
    Json j;
    Json b;
    b["griesmer"] = bound_json(rep.griesmer);
    b["cm"] = bound_json(rep.cm);
    b["singleton"] = bound_json(rep.singleton);
    Json pj = bound_json(rep.plotkin);
    if (!rep.plotkin.vacuous)
        pj["rhs_exact"] = boost::multiprecision::numerator(rep.plotkin_exact).str() + "/" +
                          boost::multiprecision::denominator(rep.plotkin_exact).str();
    b["plotkin"] = pj;
    j["bounds"] = b;
    j["relaxed_cm"] = rep.cm_relaxed;
    return j;
}

Json optimal_clrc_json(const OptimalClrcCertificate& cert) {
    Json j;
    j["schema"] = kSchema;
    j["kind"] = "clrc-cert";
    j["n"] = cert.n;
    j["k"] = cert.k;
    j["d"] = cert.d;
    j["q"] = cert.q;
    j["nmds"] = cert.nmds;
    if (cert.locality.r)
        j["locality"] = *cert.locality.r;
    else
        j["locality"] = nullptr;
    Json bj = clrc_bounds_json(cert.bounds);
    j["bounds"] = bj["bounds"];
    j["relaxed_cm"] = bj["relaxed_cm"];
    j["one_design"] = design_json(cert.one_design);
    j["locality_detail"] = locality_json(cert.locality);
    j["certified"] = cert.certified();
    j["failures"] = cert.failures;
    return j;
}

Json qlrc_bounds_json(const QBoundReport& rep) {
    Json j;
    j["griesmer"] = qbound_json(rep.griesmer);
    Json cm = qbound_json(rep.cm);
    cm["relaxed"] = rep.cm_relaxed;
    j["cm"] = cm;
    j["singleton"] = qbound_json(rep.singleton);
    Json pj = qbound_json(rep.plotkin);
    if (rep.plotkin.applicable)
        pj["rhs_exact"] = boost::multiprecision::numerator(rep.plotkin_exact).str() + "/" +
                          boost::multiprecision::denominator(rep.plotkin_exact).str();
    j["plotkin"] = pj;
    j["pure_singleton"] = qbound_json(rep.pure_singleton);
    return j;
}

Json family_json(const FamilyInstance& inst) {
    Json j;
    j["schema"] = kSchema;
    j["kind"] = "qlrc-cert";
    j["family"] = inst.family;
    j["m"] = inst.m;
    if (inst.family == 3)
        j["m2"] = inst.m2;
    else
        j["m1"] = inst.m1;
    j["k"] = inst.k;
    Json params;
    params["n"] = inst.params.n;
    params["kappa"] = inst.params.kappa;
    params["delta_lower"] = inst.params.delta_lower;
    params["q"] = inst.params.q;
    params["r"] = inst.params.r;
    j["params"] = params;
    j["purity"] = inst.params.purity.status == Purity::pure ? "pure" : "unknown";
    if (inst.params.purity.status == Purity::pure) {
        j["delta"] = inst.params.purity.delta;
        j["purity_fast_path"] = inst.params.purity.fast_path;
    }
    j["bounds"] = qlrc_bounds_json(inst.bounds);
    j["optimal"] = {{"singleton", inst.singleton_optimal},
                    {"pure_singleton", inst.pure_singleton_optimal}};

    Json src = code_json(inst.classical);
    Json solver;
    solver["seed"] = inst.solver.seed;
    solver["exhaustive"] = inst.solver.exhaustive;
    solver["trials"] = inst.solver.trials;
    solver["norms"] = hex_array(inst.solver.norms);
    src["solver"] = solver;
    j["classical_source"] = src;

    Json designs = Json::array();
    designs.push_back(design_json(inst.dual_design));
    designs.push_back(design_json(inst.one_design));
    j["design_certs"] = designs;
    j["locality"] = locality_json(inst.locality);
    return j;
}

Json crossover_json(uint64_t q, int r, int t, const CrossoverReport& rep) {
    Json j;
    j["schema"] = kSchema;
    j["kind"] = "crossover";
    j["q"] = q;
    j["r"] = r;
    j["t"] = t;
    j["griesmer_vs_singleton"] = bigrat_json(rep.griesmer_vs_singleton);
    j["plotkin_always_tighter"] = rep.plotkin_always_tighter;
    if (rep.griesmer_vs_plotkin)
        j["griesmer_vs_plotkin"] = bigrat_json(*rep.griesmer_vs_plotkin);
    j["cm_always_tighter"] = rep.cm_always_tighter;
    if (rep.cm_vs_griesmer) j["cm_vs_griesmer"] = bigrat_json(*rep.cm_vs_griesmer);
    return j;
}

namespace {

void recheck_code(const Json& j, RecheckResult& res) {
    LinearCode c = code_from_json(j);
    // RREF is unique per row space: re-reducing the stored rows must
    // reproduce them (the constructor already reduced; compare to raw rows).
    Json rows = j.at("generator");
    for (int i = 0; i < c.k(); ++i) {
        auto raw = row_parse(rows[i].get<std::string>());
        for (int col = 0; col < c.n(); ++col)
            if (raw[col] != c.generator().at(i, col)) {
                res.fail("stored generator is not in reduced row echelon form");
                return;
            }
    }
    if (c.provenance) {
        const Provenance& p = *c.provenance;
        EvaluationSet s;
        s.field = &c.field();
        s.points = p.points;
        s.kind = p.kind;
        s.m1 = p.m1;
        s.m2 = p.m2;
        MultiplierVector v{p.mult};
        LinearCode rebuilt = p.family == Provenance::Family::hz ? hz_generator(s, v, p.k)
                                                                : grs_generator(s, v, p.k);
        if (p.conjugated) rebuilt = LinearCode(c.field(), rebuilt.generator().frobenius_map());
        if (p.dual_side) rebuilt = rebuilt.dual();
        if (!(rebuilt.generator() == c.generator()))
            res.fail("provenance does not reproduce the stored generator");
    }
}

void recheck_design(const Json& j, RecheckResult& res) {
    int t = j.at("t").get<int>(), n = j.at("n").get<int>(), w = j.at("w").get<int>();
    BigInt lambda(j.at("lambda").is_string() ? BigInt(j.at("lambda").get<std::string>())
                                             : BigInt(j.at("lambda").get<int64_t>()));
    BigInt b(j.at("b").is_string() ? BigInt(j.at("b").get<std::string>())
                                   : BigInt(j.at("b").get<int64_t>()));
    if (j.at("verified").get<bool>() && b * binom(w, t) != lambda * binom(n, t))
        res.fail("design counting identity b*C(w,t) = lambda*C(n,t) fails");
    if (j.contains("blocks")) {
        BlockSystem bs;
        bs.n_points = n;
        bs.w = w;
        for (const auto& blk : j.at("blocks")) bs.blocks.push_back(blk.get<std::vector<int>>());
        if (BigInt(static_cast<int64_t>(bs.blocks.size())) != b)
            res.fail("embedded block count differs from b");
        if (j.contains("blocks_sha256") &&
            blocks_sha256(bs) != j.at("blocks_sha256").get<std::string>())
            res.fail("block hash mismatch");
        if (j.at("verified").get<bool>() && binom(n, t) <= BigInt(1'000'000)) {
            DesignCertificate again = verify_t_design(bs, t);
            if (!again.verified || again.lambda != lambda)
                res.fail("coverage recount disagrees with the certificate");
        }
    }
}

void expect_bound(const Json& bj, const BigInt& rhs, const char* name, RecheckResult& res) {
    if (bj.contains("rhs") && bj.at("rhs").is_string() && bj.at("rhs") == "vacuous") return;
    if (!bj.contains("rhs")) return;
    BigInt stored = bj.at("rhs").is_string() ? BigInt(bj.at("rhs").get<std::string>())
                                             : BigInt(bj.at("rhs").get<int64_t>());
    if (stored != rhs) res.fail(std::string(name) + " right-hand side disagrees on recompute");
}

void recheck_clrc(const Json& j, const Budget& budget, RecheckResult& res) {
    int n = j.at("n").get<int>(), k = j.at("k").get<int>(), d = j.at("d").get<int>();
    uint64_t q = j.at("q").get<uint64_t>();
    if (j.at("locality").is_null()) {
        res.fail("certificate with undefined locality cannot assert bounds");
        return;
    }
    int r = j.at("locality").get<int>();
    ClrcBoundReport rep = clrc_bounds(n, k, d, q, r);
    const Json& b = j.at("bounds");
    if (!rep.griesmer.vacuous) expect_bound(b.at("griesmer"), rep.griesmer.rhs, "griesmer", res);
    expect_bound(b.at("cm"), rep.cm.rhs, "cm", res);
    expect_bound(b.at("singleton"), rep.singleton.rhs, "singleton", res);
    if (!rep.plotkin.vacuous) expect_bound(b.at("plotkin"), rep.plotkin.rhs, "plotkin", res);
    if (j.contains("one_design")) recheck_design(j.at("one_design"), res);
    (void)budget;
}

void recheck_qlrc(const Json& j, const Budget& budget, RecheckResult& res) {
    const Json& p = j.at("params");
    int n = p.at("n").get<int>(), kappa = p.at("kappa").get<int>();
    int delta_lower = p.at("delta_lower").get<int>();
    uint64_t q = p.at("q").get<uint64_t>();
    int r = p.at("r").get<int>();
    bool pure = j.at("purity").get<std::string>() == "pure";
    int delta = pure ? j.at("delta").get<int>() : delta_lower;

    QBoundReport rep = qlrc_bounds(n, kappa, delta, q, r, pure);
    const Json& b = j.at("bounds");
    auto check_q = [&](const char* name, const QBoundValue& v) {
        const Json& bj = b.at(name);
        if (bj.at("applicable").get<bool>() != v.applicable)
            res.fail(std::string(name) + " applicability flag differs");
        else if (v.applicable)
            expect_bound(bj, v.rhs, name, res);
    };
    check_q("griesmer", rep.griesmer);
    check_q("cm", rep.cm);
    check_q("singleton", rep.singleton);
    check_q("plotkin", rep.plotkin);
    check_q("pure_singleton", rep.pure_singleton);

    if (j.contains("classical_source")) {
        LinearCode c = code_from_json(j.at("classical_source"));
        recheck_code(j.at("classical_source"), res);
        if (2 * c.k() - c.n() != kappa) res.fail("kappa differs from 2k - n of the source code");
        if (c.n() != n) res.fail("length differs from the source code");
        if (!c.field().has_tower() || (1ull << c.field().base_degree()) != q)
            res.fail("alphabet does not match the source field tower");
        if (!c.contains_code(c.hermitian_dual()))
            res.fail("source code is not Hermitian dual-containing");
        if (c.provenance) {
            LocalityCertificate loc = locality_exact(c, budget);
            if (!loc.r || *loc.r != r) res.fail("locality recompute disagrees");
            if (c.min_distance(budget) != delta_lower)
                res.fail("delta_lower recompute disagrees");
        }
    }
    if (j.contains("design_certs"))
        for (const auto& dj : j.at("design_certs")) recheck_design(dj, res);
}

}  // namespace

RecheckResult recheck_certificate(const Json& j, const Budget& budget) {
    RecheckResult res;
    if (!j.contains("schema") || j.at("schema").get<std::string>() != kSchema) {
        res.fail("missing or unknown schema tag");
        return res;
    }
    std::string kind = j.value("kind", "");
    try {
        if (kind == "code")
            recheck_code(j, res);
        else if (kind == "design-cert")
            recheck_design(j, res);
        else if (kind == "clrc-cert")
            recheck_clrc(j, budget, res);
        else if (kind == "qlrc-cert")
            recheck_qlrc(j, budget, res);
        else if (kind == "crossover") {
            // nothing beyond schema: values are re-derivable from q, r, t
            CrossoverReport rep = crossover_report(j.at("q").get<uint64_t>(),
                                                   j.at("r").get<int>(), j.at("t").get<int>());
            Json again = crossover_json(j.at("q").get<uint64_t>(), j.at("r").get<int>(),
                                        j.at("t").get<int>(), rep);
            if (again != j) res.fail("crossover values disagree on recompute");
        } else
            res.fail("unknown certificate kind: " + kind);
    } catch (const std::exception& e) {
        res.fail(std::string("recheck raised: ") + e.what());
    }
    return res;
}

}  // namespace qlrc
