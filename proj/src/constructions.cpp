#include "qlrc/constructions.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "qlrc/subset_sum.hpp"

namespace qlrc {

EvaluationSet additive_subgroup(const Field& f, const std::vector<uint32_t>& basis) {
    int t = static_cast<int>(basis.size());
    EvaluationSet s;
    s.field = &f;
    s.kind = Provenance::SetKind::additive_subgroup;
    s.m1 = t;
    s.points.reserve(1u << t);
    for (uint32_t mask = 0; mask < (1u << t); ++mask) {
        uint32_t x = 0;
        for (int i = 0; i < t; ++i)
            if ((mask >> i) & 1u) x ^= basis[i];
        s.points.push_back(x);
    }
    std::set<uint32_t> distinct(s.points.begin(), s.points.end());
    if (distinct.size() != s.points.size())
        throw ParameterError("basis is GF(2)-dependent");
    for (uint32_t b : basis)
        if (b >= f.size()) throw ParameterError("basis element outside the field");
    return s;
}

EvaluationSet subfield_star(const Field& f, int m2) {
    // GF(2^{m2}) embeds exactly when m2 divides the ambient degree; the
    // family-3 pipeline additionally requires m2 | m so that the star sits
    // inside the embedded GF(2^m).
    if (m2 < 1 || f.degree() % m2 != 0)
        throw ParameterError("m2 must divide the field degree");
    EvaluationSet s;
    s.field = &f;
    s.kind = Provenance::SetKind::subfield_star;
    s.m2 = m2;
    uint64_t sub_order = (1ull << m2) - 1;
    uint32_t h = f.exp(f.order() / sub_order);  // generator of the embedded subfield star
    uint32_t x = 1;
    for (uint64_t i = 0; i < sub_order; ++i) {
        s.points.push_back(x);
        x = f.mul(x, h);
    }
    if (x != 1) throw Error("subfield star did not close");
    return s;
}

EvaluationSet custom_set(const Field& f, std::vector<uint32_t> points) {
    std::set<uint32_t> distinct(points.begin(), points.end());
    if (distinct.size() != points.size()) throw ParameterError("points must be distinct");
    for (uint32_t p : points)
        if (p >= f.size()) throw ParameterError("point outside the field");
    EvaluationSet s;
    s.field = &f;
    s.points = std::move(points);
    s.kind = Provenance::SetKind::custom;
    return s;
}

namespace {

void check_multipliers(const EvaluationSet& s, const MultiplierVector& v) {
    if (v.values.size() != s.points.size())
        throw ParameterError("multiplier vector length does not match the point set");
    for (uint32_t x : v.values) {
        if (x == 0) throw ParameterError("multipliers must be nonzero");
        if (x >= s.field->size()) throw ParameterError("multiplier outside the field");
    }
}

Matrix monomial_rows(const EvaluationSet& s, const MultiplierVector& v,
                     const std::vector<int>& degrees) {
    const Field& f = *s.field;
    int n = s.n();
    Matrix g(f, static_cast<int>(degrees.size()), n);
    for (int j = 0; j < n; ++j) {
        for (size_t r = 0; r < degrees.size(); ++r)
            g.at(static_cast<int>(r), j) =
                f.mul(v.values[j], f.pow(s.points[j], static_cast<uint64_t>(degrees[r])));
    }
    return g;
}

Provenance make_provenance(const EvaluationSet& s, const MultiplierVector& v, int k,
                           Provenance::Family fam) {
    Provenance p;
    p.family = fam;
    p.points = s.points;
    p.mult = v.values;
    p.k = k;
    p.kind = s.kind;
    p.m1 = s.m1;
    p.m2 = s.m2;
    return p;
}

}  // namespace

LinearCode hz_generator(const EvaluationSet& s, const MultiplierVector& v, int k) {
    const Field& f = *s.field;
    int n = s.n();
    check_multipliers(s, v);
    if (!(2 <= k && k <= n - 1) || static_cast<uint32_t>(n) > f.size())
        throw ParameterError("HZ needs 2 <= k <= n-1 and n <= q");
    std::vector<int> degrees;
    for (int d = 0; d <= k - 2; ++d) degrees.push_back(d);
    degrees.push_back(k);
    LinearCode c(f, monomial_rows(s, v, degrees));
    if (c.k() != k) throw Error("HZ generator rank dropped below k");
    c.provenance = make_provenance(s, v, k, Provenance::Family::hz);
    return c;
}

LinearCode grs_generator(const EvaluationSet& s, const MultiplierVector& v, int dim) {
    const Field& f = *s.field;
    int n = s.n();
    check_multipliers(s, v);
    if (!(1 <= dim && dim <= n) || static_cast<uint32_t>(n) > f.size())
        throw ParameterError("GRS needs 1 <= dim <= n and n <= q");
    std::vector<int> degrees(dim);
    for (int d = 0; d < dim; ++d) degrees[d] = d;
    LinearCode c(f, monomial_rows(s, v, degrees));
    if (c.k() != dim) throw Error("GRS generator rank dropped below dim");
    c.provenance = make_provenance(s, v, dim, Provenance::Family::grs);
    return c;
}

SolverResult solve_hermitian_multipliers(const EvaluationSet& s, int dim, uint64_t seed,
                                         uint64_t max_trials) {
    const Field& f = *s.field;
    if (!f.has_tower()) throw NonTowerField("multiplier solver needs a tower field GF(q^2)");
    int n = s.n();
    if (2 * dim > n)
        throw DimensionObstruction("a Hermitian self-orthogonal code needs 2*dim <= n");
    if (dim < 1) throw ParameterError("dim must be positive");
    int m = f.base_degree();
    uint64_t q = 1ull << m;

    // Moment conditions: sum_i z_i a_i^{s+qt} = 0 for 0 <= s,t < dim, with
    // z_i = v_i^{q+1} in GF(q). Split each GF(q^2) equation into two GF(q)
    // equations along the basis {1, beta}.
    uint32_t beta = 0;
    for (uint32_t x = 2; x < f.size(); ++x)
        if (f.frobenius(x) != x) {
            beta = x;
            break;
        }
    if (beta == 0) throw Error("no basis element outside the subfield");
    uint32_t denom_inv = f.inv(f.add(beta, f.frobenius(beta)));

    Matrix sys(f, 2 * dim * dim, n);
    int row = 0;
    for (int sdeg = 0; sdeg < dim; ++sdeg)
        for (int tdeg = 0; tdeg < dim; ++tdeg) {
            for (int i = 0; i < n; ++i) {
                uint32_t c = f.pow(s.points[i], static_cast<uint64_t>(sdeg) + q * tdeg);
                uint32_t c1 = f.mul(f.add(c, f.frobenius(c)), denom_inv);
                uint32_t c0 = f.add(c, f.mul(c1, beta));
                sys.at(row, i) = c0;
                sys.at(row + 1, i) = c1;
            }
            row += 2;
        }

    // RREF keeps all coefficients inside the embedded subfield, so the kernel
    // basis is a GF(q)-space expressed in tower-field coordinates.
    Matrix kernel = sys.nullspace();
    int nullity = kernel.rows();
    if (nullity == 0) throw NotFound("the moment system has only the zero solution");

    SubfieldEmbedding emb = subfield_image(f);
    std::vector<uint32_t> z(n, 0);
    auto combine = [&](const std::vector<uint32_t>& coef) {
        std::fill(z.begin(), z.end(), 0);
        for (int b = 0; b < nullity; ++b)
            if (coef[b]) row_axpy(f, coef[b], kernel.row(b), z.data(), n);
        return std::all_of(z.begin(), z.end(), [](uint32_t x) { return x != 0; });
    };

    SolverResult res;
    res.seed = seed;
    bool found = false;
    if (static_cast<uint64_t>(nullity) * m <= 20) {
        // Exhaustive scan in lexicographic order over subfield coefficient
        // vectors; the first all-nonzero combination is the canonical one.
        res.exhaustive = true;
        std::vector<uint32_t> coef(nullity, 0);
        uint64_t total = 1ull << (static_cast<uint64_t>(nullity) * m);
        for (uint64_t ctr = 1; ctr < total && !found; ++ctr) {
            uint64_t t = ctr;
            for (int b = nullity - 1; b >= 0; --b) {
                coef[b] = emb.embed(static_cast<uint32_t>(t & (q - 1)));
                t >>= m;
            }
            found = combine(coef);
        }
    } else {
        std::mt19937_64 rng(seed);
        std::vector<uint32_t> coef(nullity);
        for (uint64_t trial = 0; trial < max_trials && !found; ++trial) {
            for (int b = 0; b < nullity; ++b)
                coef[b] = emb.embed(static_cast<uint32_t>(rng() & (q - 1)));
            ++res.trials;
            found = combine(coef);
        }
    }
    if (!found)
        throw NotFound("no all-nonzero solution found within the search budget");

    res.norms = z;
    res.v.values.resize(n);
    for (int i = 0; i < n; ++i) res.v.values[i] = f.norm_preimage_min(z[i]);

    // No unverified output escapes.
    if (!grs_generator(s, res.v, dim).is_hermitian_self_orthogonal())
        throw Error("solver produced multipliers that fail verification");
    return res;
}

}  // namespace qlrc
