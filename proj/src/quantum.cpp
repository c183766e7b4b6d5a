#include "qlrc/quantum.hpp"

#include <algorithm>
#include <random>

#include "qlrc/subset_sum.hpp"

namespace qlrc {

PurityResult purity_probe(const LinearCode& c, const Budget& budget) {
    PurityResult res;
    LinearCode h = c.hermitian_dual();
    int d = c.min_distance(budget);
    int dh = h.min_distance(budget);
    if (d < dh) {
        // A weight-d codeword cannot lie in a subcode of larger minimum weight.
        res.status = Purity::pure;
        res.delta = d;
        res.fast_path = true;
        return res;
    }
    // Membership in C^{perp_H} by syndrome: w in C^{perp_H} iff G_C sigma(w)^T = 0.
    const Field& f = c.field();
    auto classes = min_weight_classes(c, budget);
    for (const auto& mw : classes) {
        std::vector<uint32_t> conj(mw.word.size());
        for (size_t i = 0; i < mw.word.size(); ++i) conj[i] = f.frobenius(mw.word[i]);
        Matrix col(f, 1, c.n(), conj);
        if (!c.generator().mul(col.transpose()).is_zero()) {
            res.status = Purity::pure;
            res.delta = d;
            return res;
        }
    }
    res.status = Purity::unknown;
    res.delta = d;
    return res;
}

QlrcParams hermitian_construct(const LinearCode& c, const Budget& budget) {
    const Field& f = c.field();
    if (!f.has_tower()) throw NonTowerField("Hermitian construction needs GF(q^2)");
    LinearCode h = c.hermitian_dual();
    if (!c.contains_code(h))
        throw NotDualContaining("C^{perp_H} is not contained in C");
    if (2 * c.k() - c.n() < 1)
        throw ParameterError("construction needs kappa = 2k - n >= 1");
    if (h.k() > 0 && h.min_distance(budget) < 2)
        throw DualDistanceTooSmall("d(C^{perp_H}) must be at least 2");

    LocalityCertificate loc = locality_exact(c, budget);
    if (!loc.r) throw LocalityUndefined("classical code has no defined locality");

    QlrcParams params;
    params.n = c.n();
    params.kappa = 2 * c.k() - c.n();
    params.delta_lower = c.min_distance(budget);
    params.q = 1ull << f.base_degree();
    params.r = *loc.r;
    params.purity = purity_probe(c, budget);
    return params;
}

QBoundReport qlrc_bounds(int n, int kappa, int delta, uint64_t q, int r, bool pure) {
    if (r < 1) throw ParameterError("locality must be at least 1");
    QBoundReport rep;
    BigInt two_delta = 2 * BigInt(delta);
    uint64_t q2 = q * q;

    // Griesmer-like: n + kappa >= 2 * max over 1 <= l <= ceil(kappa/r)-1.
    if (r >= kappa) {
        rep.griesmer.applicable = false;
    } else {
        BigInt best = 0;
        for (int64_t l = 1; l <= ceil_div(kappa, r) - 1; ++l) {
            BigInt s = l * (r + 1);
            uint64_t qi = 1;
            bool sat = false;
            for (int64_t i = 0; i <= kappa - l * r - 1; ++i) {
                s += sat ? 1 : static_cast<int64_t>((delta + qi - 1) / qi);
                if (!sat) {
                    if (qi > static_cast<uint64_t>(delta) / q2) sat = true;
                    else qi *= q2;
                }
            }
            best = std::max(best, s);
        }
        rep.griesmer.rhs = 2 * best;
        rep.griesmer.holds = BigInt(n + kappa) >= rep.griesmer.rhs;
        rep.griesmer.met = BigInt(n + kappa) == rep.griesmer.rhs;
    }

    // CM-like: kappa <= min over l of l*r + kopt((n+kappa)/2 - l(r+1), delta)
    // over GF(q^2), with the same sound k_opt relaxation as the classical side.
    {
        int half = (n + kappa) / 2;
        BigInt best;
        bool first = true;
        for (int64_t l = 0; l <= (half - 1) / (r + 1); ++l) {
            int rem = half - static_cast<int>(l) * (r + 1);
            BigInt val = l * r + kopt_upper(rem, delta, q2);
            if (first || val < best) best = val, first = false;
        }
        rep.cm.rhs = best;
        rep.cm.holds = BigInt(kappa) <= best;
        rep.cm.met = BigInt(kappa) == best;
    }

    // Singleton-like: 2*delta <= n - kappa - 2*ceil(kappa/r) + 4.
    {
        rep.singleton.rhs = n - kappa - 2 * ceil_div(kappa, r) + 4;
        rep.singleton.holds = two_delta <= rep.singleton.rhs;
        rep.singleton.met = two_delta == rep.singleton.rhs;
    }

    // Plotkin-like: 2*delta <= min over l of
    // q^{2(kappa-lr)-2} (q^2-1) (n+kappa-2l(r+1)) / (q^{2(kappa-lr)}-1).
    if (r >= kappa) {
        rep.plotkin.applicable = false;
    } else {
        BigRat best;
        bool first = true;
        for (int64_t l = 1; l <= ceil_div(kappa, r) - 1; ++l) {
            unsigned e = static_cast<unsigned>(kappa - l * r);
            BigInt q2e = ipow(BigInt(q2), e);
            BigRat val(q2e / q2 * (q2 - 1) * (n + kappa - 2 * l * (r + 1)), q2e - 1);
            if (first || val < best) best = val, first = false;
        }
        rep.plotkin_exact = best;
        rep.plotkin.rhs = boost::multiprecision::numerator(best) /
                          boost::multiprecision::denominator(best);
        rep.plotkin.holds = BigRat(two_delta) <= best;
        rep.plotkin.met = two_delta == rep.plotkin.rhs;
    }

    // Pure Singleton-like: 2*delta <= n - kappa - 2*ceil((n+kappa)/(2r)) + 4.
    {
        rep.pure_singleton.applicable = pure;
        rep.pure_singleton.rhs = n - kappa - 2 * ceil_div(n + kappa, 2 * r) + 4;
        rep.pure_singleton.holds = !pure || two_delta <= rep.pure_singleton.rhs;
        rep.pure_singleton.met = pure && two_delta == rep.pure_singleton.rhs;
    }
    return rep;
}

BigRat curve_griesmer(uint64_t q, int t, const BigRat& delta) {
    BigInt q2t = ipow(BigInt(q), static_cast<unsigned>(2 * t));
    BigInt q2t2 = ipow(BigInt(q), static_cast<unsigned>(2 * t - 2));
    return 1 - BigRat(2 * (q2t - 1), q2t - q2t2) * delta;
}

BigRat curve_cm(uint64_t q, int r, const BigRat& delta) {
    BigInt q2(q * q);
    return BigRat(r, r + 2) - BigRat(2 * r, r + 2) * BigRat(q2, q2 - 1) * delta;
}

BigRat curve_singleton(int r, const BigRat& delta) {
    return BigRat(r, r + 2) - BigRat(2 * r, r + 2) * delta;
}

BigRat curve_plotkin(uint64_t q, int r, const BigRat& delta) {
    BigInt q2r = ipow(BigInt(q), static_cast<unsigned>(2 * r));
    BigInt q2r2 = ipow(BigInt(q), static_cast<unsigned>(2 * r - 2));
    return BigRat(r, r + 2) - BigRat(2 * r, r + 2) * BigRat(q2r - 1, q2r - q2r2) * delta;
}

std::vector<CurveSeries> asymptotic_curves(uint64_t q, int r, int t,
                                           const std::vector<BigRat>& grid) {
    if (r < 1 || t < 1) throw ParameterError("curves need r >= 1 and t >= 1");
    for (const auto& d : grid)
        if (d < 0 || d > BigRat(1, 2)) throw ParameterError("grid must lie in [0, 1/2]");
    auto clip = [](BigRat v) { return v < 0 ? BigRat(0) : v; };
    std::vector<CurveSeries> out(4);
    out[0].which = "griesmer";
    out[1].which = "cm";
    out[2].which = "singleton";
    out[3].which = "plotkin";
    for (const auto& d : grid) {
        out[0].samples.emplace_back(d, clip(curve_griesmer(q, t, d)));
        out[1].samples.emplace_back(d, clip(curve_cm(q, r, d)));
        out[2].samples.emplace_back(d, clip(curve_singleton(r, d)));
        out[3].samples.emplace_back(d, clip(curve_plotkin(q, r, d)));
    }
    return out;
}

CrossoverReport crossover_report(uint64_t q, int r, int t) {
    CrossoverReport rep;
    BigInt q2t = ipow(BigInt(q), static_cast<unsigned>(2 * t));
    BigInt q2t2 = ipow(BigInt(q), static_cast<unsigned>(2 * t - 2));
    BigInt q2r = ipow(BigInt(q), static_cast<unsigned>(2 * r));
    BigInt q2r2 = ipow(BigInt(q), static_cast<unsigned>(2 * r - 2));
    BigRat g(q2t - 1, q2t - q2t2);        // Griesmer slope / 2
    BigRat h(q2r - 1, q2r - q2r2);        // Plotkin slope factor
    BigRat rr(r, 1), r2(r + 2, 1);

    // Intersection of 1 - 2g*D with r/(r+2) - (2r/(r+2))*D.
    rep.griesmer_vs_singleton = BigRat(1) / (r2 * g - rr);

    // Plotkin line: slope factor h. Dominates everywhere iff g <= (r/(r+2)) h.
    BigRat denom_p = r2 * g - rr * h;
    if (denom_p <= 0) {
        rep.plotkin_always_tighter = true;
    } else {
        rep.griesmer_vs_plotkin = BigRat(1) / denom_p;
    }

    // CM line: slope factor q^2/(q^2-1).
    BigRat hc(BigInt(q * q), BigInt(q * q) - 1);
    BigRat denom_c = r2 * g - rr * hc;
    if (denom_c <= 0) {
        rep.cm_always_tighter = true;
    } else {
        rep.cm_vs_griesmer = BigRat(1) / denom_c;
        // The crossing sits at or beyond the point where the CM rate bound
        // reaches zero, so CM still dominates wherever it is informative.
        BigRat cm_zero = BigRat(1, 2) * (BigRat(1) / hc);
        rep.cm_always_tighter = *rep.cm_vs_griesmer >= cm_zero;
    }
    return rep;
}

namespace {

EvaluationSet family_eval_set(int family, const Field& f, int m, int m12) {
    if (family == 1) {
        // Additive subgroup of GF(2^{2m}) spanned by the first m1 polynomial
        // basis vectors: bit patterns 1, x, ..., x^{m1-1}.
        std::vector<uint32_t> basis;
        for (int i = 0; i < m12; ++i) basis.push_back(1u << i);
        return additive_subgroup(f, basis);
    }
    if (family == 2) {
        // Additive subgroup of the embedded GF(2^m): greedy smallest
        // GF(2)-independent image elements give a canonical basis.
        SubfieldEmbedding emb = subfield_image(f);
        std::vector<uint32_t> basis, reduced;
        for (uint32_t x : emb.image) {
            uint32_t y = x;
            for (uint32_t b : reduced) y = std::min(y, y ^ b);
            if (y) {
                reduced.push_back(y);
                basis.push_back(x);
            }
            if (static_cast<int>(basis.size()) == m12) break;
        }
        if (static_cast<int>(basis.size()) != m12)
            throw ParameterError("embedded subfield has fewer than m1 independent elements");
        EvaluationSet s = additive_subgroup(f, basis);
        return s;
    }
    return subfield_star(f, m12);
}

void validate_family_params(int family, int m, int m12, int k) {
    switch (family) {
        case 1: {
            if (!(m + 3 <= m12 && m12 <= 2 * m))
                throw ParameterError("family 1 needs m+3 <= m1 <= 2m");
            int64_t kmax = ((1ll << m12) + (1ll << m) - 1) / ((1ll << m) + 1) - 1;
            if (k % 2 != 0 || k < 4 || k > kmax)
                throw ParameterError("family 1 needs even k with 4 <= k <= floor((2^m1+2^m-1)/(2^m+1))-1");
            break;
        }
        case 2: {
            if (!(4 <= m12 && m12 <= m)) throw ParameterError("family 2 needs 4 <= m1 <= m");
            if (k % 2 != 0 || k < 4 || k > (1 << (m12 - 1)) - 1)
                throw ParameterError("family 2 needs even k with 4 <= k <= 2^{m1-1}-1");
            break;
        }
        case 3: {
            if (!(4 <= m12 && m12 <= m && m % m12 == 0))
                throw ParameterError("family 3 needs 4 <= m2 <= m with m2 | m");
            if (k < 4 || k > (1 << (m12 - 1)) - 1)
                throw ParameterError("family 3 needs 4 <= k <= 2^{m2-1}-1");
            break;
        }
        default:
            throw ParameterError("family must be 1, 2, or 3");
    }
}

}  // namespace

FamilyInstance family_qlrc(int family, int m, int m12, int k, uint64_t seed,
                           const Budget& budget) {
    validate_family_params(family, m, m12, k);
    if (2 * m > 16) throw ParameterError("tower field degree 2m exceeds 16");
    const Field& f = Field::gf(2 * m);

    EvaluationSet s = family_eval_set(family, f, m, m12);
    SolverResult sol = solve_hermitian_multipliers(s, k + 1, seed);

    LinearCode hz = hz_generator(s, sol.v, k);
    FamilyInstance inst(hz, hz.hermitian_dual());
    inst.family = family;
    inst.m = m;
    inst.m1 = family == 3 ? 0 : m12;
    inst.m2 = family == 3 ? m12 : 0;
    inst.k = k;
    inst.solver = sol;

    // The nesting chain that makes C dual-containing.
    LinearCode grs = grs_generator(s, sol.v, k + 1);
    if (!grs.is_hermitian_self_orthogonal()) throw Error("GRS lost self-orthogonality");
    if (!row_space_contains(grs.generator(), inst.hz.generator()))
        throw Error("HZ is not nested in GRS");

    inst.params = hermitian_construct(inst.classical, budget);
    inst.locality = locality_exact(inst.classical, budget);

    // Designs of the dual's minimum-weight supports back the locality claim.
    BlockSystem blocks = blocks_from_min_weight(inst.classical.dual(), budget);
    inst.dual_design = verify_t_design(blocks, family == 3 ? 2 : 3);
    inst.one_design = verify_t_design(blocks, 1);

    bool pure = inst.params.purity.status == Purity::pure;
    int delta = pure ? inst.params.purity.delta : inst.params.delta_lower;
    inst.bounds = qlrc_bounds(inst.params.n, inst.params.kappa, delta, inst.params.q,
                              inst.params.r, pure);
    inst.singleton_optimal = inst.bounds.singleton.met;
    inst.pure_singleton_optimal = inst.bounds.pure_singleton.met;

    // Expected parameter strings from the construction.
    int nexp = family == 3 ? (1 << m12) - 1 : (1 << m12);
    int kexp = family == 3 ? (1 << m12) - 2 * k - 1 : (1 << m12) - 2 * k;
    int rexp = family == 3 ? (1 << m12) - k - 2 : (1 << m12) - k - 1;
    if (inst.params.n != nexp || inst.params.kappa != kexp || inst.params.r != rexp ||
        inst.params.delta_lower < k)
        throw Error("constructed qLRC parameters disagree with the family statement");
    return inst;
}

ChainCheck theorem1_chain_check(const LinearCode& c, int delta_lower, int r,
                                const Budget& budget) {
    const Field& f = c.field();
    ChainCheck out;
    LinearCode h = c.hermitian_dual();
    if (!c.contains_code(h)) throw NotDualContaining("chain check needs a dual-containing code");
    int n = c.n(), kappa = 2 * c.k() - c.n();

    // Basis of C^{perp_H} in RREF, extended by rows of C with the pivot
    // columns eliminated; the extension spans a complement C' of C^{perp_H}
    // inside C that vanishes on the pivot columns after reduction.
    Matrix base = h.generator();
    std::vector<int> pivots;
    {
        Matrix tmp = base;
        tmp.rref(&pivots);
    }
    Matrix ext(f, 0, n);
    Matrix acc = base;
    for (int i = 0; i < c.k(); ++i) {
        Matrix row(f, 1, n, std::vector<uint32_t>(c.generator().row(i),
                                                  c.generator().row(i) + n));
        Matrix trial = acc.stack(row);
        if (trial.rank() > acc.rank()) {
            acc = trial;
            ext = ext.rows() == 0 ? row : ext.stack(row);
        }
    }
    // Eliminate the C^{perp_H} pivot coordinates from the extension rows.
    for (int i = 0; i < ext.rows(); ++i)
        for (size_t p = 0; p < pivots.size(); ++p) {
            uint32_t v = ext.at(i, pivots[p]);
            if (v) row_axpy(f, v, base.row(static_cast<int>(p)), ext.row(i), n);
        }

    out.structure_ok = ext.rows() == kappa;
    for (int i = 0; i < ext.rows() && out.structure_ok; ++i)
        for (int p : pivots)
            if (ext.at(i, p) != 0) out.structure_ok = false;
    // C' complements C^{perp_H} inside C.
    if (out.structure_ok) {
        out.structure_ok = row_space_contains(c.generator(), ext) &&
                           base.stack(ext).rank() == c.k();
    }

    Matrix punctured = ext.drop_columns(pivots);
    LinearCode cpp(f, punctured);
    out.length = cpp.n();
    out.dim = cpp.k();
    out.structure_ok = out.structure_ok && cpp.n() == (n + kappa) / 2 && cpp.k() == kappa;

    BigInt sz = ipow(BigInt(f.size()), static_cast<unsigned>(kappa));
    if (sz <= BigInt(budget.cap)) {
        out.distance_ok = cpp.min_distance(budget) >= delta_lower;
        BigInt dual_sz = ipow(BigInt(f.size()), static_cast<unsigned>(cpp.n() - cpp.k()));
        if (dual_sz <= BigInt(budget.cap)) {
            LocalityCertificate loc = locality_exact(cpp, budget);
            out.locality_ok = loc.r && *loc.r <= r;
        }
    } else {
        // Sample random nonzero words of C''; each must clear delta and embed
        // into C off C^{perp_H}.
        std::mt19937_64 rng(0);
        bool ok = true;
        const uint64_t samples = 2000;
        for (uint64_t i = 0; i < samples && ok; ++i) {
            std::vector<uint32_t> w(cpp.n(), 0);
            bool nonzero = false;
            for (int row = 0; row < cpp.k(); ++row) {
                uint32_t coef = static_cast<uint32_t>(rng() % f.size());
                if (coef) nonzero = true;
                row_axpy(f, coef, cpp.generator().row(row), w.data(), cpp.n());
            }
            if (!nonzero) continue;
            int wt = 0;
            for (uint32_t v : w) wt += v != 0;
            ok = wt >= delta_lower;
            ++out.sampled_words;
        }
        out.distance_ok = ok;
    }
    return out;
}

}  // namespace qlrc
