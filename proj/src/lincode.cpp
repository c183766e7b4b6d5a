#include "qlrc/lincode.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <mutex>

#include "qlrc/subset_sum.hpp"

namespace qlrc {

BigInt WeightDistribution::total() const {
    BigInt t = 0;
    for (const auto& c : counts) t += c;
    return t;
}

int WeightDistribution::min_weight() const {
    for (int i = 1; i < static_cast<int>(counts.size()); ++i)
        if (counts[i] > 0) return i;
    throw ParameterError("zero code has no minimum weight");
}

struct LinearCode::DistanceCache {
    std::mutex mx;
    std::optional<int> d;
};

LinearCode::LinearCode(const Field& f, Matrix generator)
    : f_(&f), gen_(std::move(generator)), cache_(std::make_shared<DistanceCache>()) {
    n_ = gen_.cols();
    int input_rows = gen_.rows();
    k_ = gen_.rref();
    if (k_ != input_rows)
        throw ParameterError("generator rows are linearly dependent");
}

LinearCode LinearCode::zero_code(const Field& f, int n) { return LinearCode(f, Matrix(f, 0, n)); }

LinearCode LinearCode::full_space(const Field& f, int n) {
    return LinearCode(f, Matrix::identity(f, n));
}

LinearCode LinearCode::repetition(const Field& f, int n) {
    Matrix g(f, 1, n);
    for (int j = 0; j < n; ++j) g.at(0, j) = 1;
    return LinearCode(f, std::move(g));
}

LinearCode LinearCode::dual() const {
    // Standard-form complement from the RREF pivots, then re-reduced so the
    // result is the canonical RREF of the dual space.
    Matrix red = gen_;
    std::vector<int> pivots;
    red.rref(&pivots);
    std::vector<char> is_pivot(n_, 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<int> free_cols;
    for (int j = 0; j < n_; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    Matrix h(*f_, n_ - k_, n_);
    for (size_t r = 0; r < free_cols.size(); ++r) {
        h.at(static_cast<int>(r), free_cols[r]) = 1;
        for (int i = 0; i < k_; ++i)
            h.at(static_cast<int>(r), pivots[i]) = red.at(i, free_cols[r]);
    }
    LinearCode d(*f_, std::move(h));
    if (provenance) {
        d.provenance = provenance;
        d.provenance->dual_side = !provenance->dual_side;
    }
    return d;
}

LinearCode LinearCode::hermitian_dual() const {
    if (!f_->has_tower()) throw NonTowerField("Hermitian dual needs a tower field");
    // C^{perp_H} = sigma(C^perp) with sigma the coordinatewise Frobenius.
    LinearCode d = dual();
    LinearCode out(*f_, d.generator().frobenius_map());
    if (provenance) {
        out.provenance = provenance;
        out.provenance->dual_side = !provenance->dual_side;
        out.provenance->conjugated = !provenance->conjugated;
    }
    return out;
}

bool LinearCode::contains_code(const LinearCode& sub) const {
    return row_space_contains(gen_, sub.generator());
}

bool LinearCode::contains_word(const std::vector<uint32_t>& w) const {
    if (static_cast<int>(w.size()) != n_) throw ParameterError("word length mismatch");
    Matrix row(*f_, 1, n_, w);
    return row_space_contains(gen_, row);
}

bool LinearCode::is_hermitian_self_orthogonal() const {
    if (!f_->has_tower()) throw NonTowerField("Hermitian check needs a tower field");
    if (k_ == 0) return true;
    return gen_.mul(gen_.frobenius_map().transpose()).is_zero();
}

void enumerate_projective(const Matrix& gen,
                          const std::function<void(const uint32_t*, int)>& visit) {
    const Field& f = gen.field();
    const int k = gen.rows(), n = gen.cols();
    const uint32_t q = f.size();
    std::vector<uint32_t> cw(n), digits;

    auto weight_of = [&]() {
        int w = 0;
        for (int j = 0; j < n; ++j) w += cw[j] != 0;
        return w;
    };

    for (int lead = 0; lead < k; ++lead) {
        std::fill(cw.begin(), cw.end(), 0);
        row_axpy(f, 1, gen.row(lead), cw.data(), n);
        const int z = k - 1 - lead;  // free digit count
        digits.assign(z, 0);
        visit(cw.data(), weight_of());
        // Odometer over the suffix digits; each digit change is one scaled
        // row addition (delta = old xor new is again a field element).
        while (true) {
            int p = 0;
            while (p < z && digits[p] == q - 1) {
                row_axpy(f, q - 1, gen.row(lead + 1 + p), cw.data(), n);
                digits[p] = 0;
                ++p;
            }
            if (p == z) break;
            uint32_t delta = digits[p] ^ (digits[p] + 1);
            row_axpy(f, delta, gen.row(lead + 1 + p), cw.data(), n);
            ++digits[p];
            visit(cw.data(), weight_of());
        }
    }
}

namespace {

// Projective enumeration restricted to messages with leading 1 at `lead` and,
// when fixed_digit >= 0, the next digit pinned; used to split work.
void enumerate_stratum(const Matrix& gen, int lead, int fixed_digit,
                       std::vector<uint64_t>& hist) {
    const Field& f = gen.field();
    const int k = gen.rows(), n = gen.cols();
    const uint32_t q = f.size();
    std::vector<uint32_t> cw(n);
    row_axpy(f, 1, gen.row(lead), cw.data(), n);
    int first_free = lead + 1;
    if (fixed_digit >= 0) {
        row_axpy(f, static_cast<uint32_t>(fixed_digit), gen.row(lead + 1), cw.data(), n);
        first_free = lead + 2;
    }
    const int z = k - first_free;
    std::vector<uint32_t> digits(z, 0);
    auto bump = [&]() {
        int w = 0;
        for (int j = 0; j < n; ++j) w += cw[j] != 0;
        ++hist[w];
    };
    bump();
    while (true) {
        int p = 0;
        while (p < z && digits[p] == q - 1) {
            row_axpy(f, q - 1, gen.row(first_free + p), cw.data(), n);
            digits[p] = 0;
            ++p;
        }
        if (p == z) break;
        uint32_t delta = digits[p] ^ (digits[p] + 1);
        row_axpy(f, delta, gen.row(first_free + p), cw.data(), n);
        ++digits[p];
        bump();
    }
}

}  // namespace

WeightDistribution enumerate_weight_distribution(const Matrix& gen, const Budget& budget) {
    const Field& f = gen.field();
    const int k = gen.rows(), n = gen.cols();
    const uint32_t q = f.size();

    WeightDistribution wd;
    wd.counts.assign(n + 1, 0);
    wd.counts[0] = 1;
    if (k == 0) return wd;

    std::vector<std::pair<int, int>> jobs;  // (lead, fixed_digit or -1)
    for (int lead = 0; lead < k; ++lead) {
        if (budget.threads > 1 && lead + 1 < k)
            for (uint32_t d = 0; d < q; ++d) jobs.emplace_back(lead, static_cast<int>(d));
        else
            jobs.emplace_back(lead, -1);
    }

    std::vector<std::vector<uint64_t>> hists;
    if (budget.threads <= 1 || jobs.size() <= 1) {
        hists.emplace_back(n + 1, 0);
        for (auto [lead, fd] : jobs) enumerate_stratum(gen, lead, fd, hists.back());
    } else {
        hists.assign(jobs.size(), std::vector<uint64_t>(n + 1, 0));
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            for (size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
                enumerate_stratum(gen, jobs[i].first, jobs[i].second, hists[i]);
        };
        std::vector<std::future<void>> pool;
        for (int t = 0; t < budget.threads; ++t)
            pool.push_back(std::async(std::launch::async, worker));
        for (auto& fut : pool) fut.get();
    }

    for (const auto& h : hists)
        for (int w = 1; w <= n; ++w) wd.counts[w] += h[w];
    for (int w = 1; w <= n; ++w) wd.counts[w] *= (q - 1);
    return wd;
}

namespace {

// q^k as a BigInt without overflow concerns.
BigInt code_size(uint64_t q, int k) { return ipow(BigInt(q), static_cast<unsigned>(k)); }

bool enumerable(uint64_t q, int k, uint64_t cap) {
    BigInt sz = code_size(q, k);
    return sz <= BigInt(cap);
}

// Distance of either side of an HZ construction, via Lemma-style parameters:
// the construction is NMDS iff its evaluation points have a zero-sum k-subset,
// else MDS.
std::optional<int> provenance_distance(const LinearCode& c) {
    if (!c.provenance || c.provenance->family != Provenance::Family::hz) return std::nullopt;
    const Provenance& p = *c.provenance;
    int n = static_cast<int>(p.points.size());
    bool nmds = subset_sum_zero_exists(p.points, p.k, c.field());
    if (!p.dual_side) return nmds ? n - p.k : n - p.k + 1;
    return nmds ? p.k : p.k + 1;
}

}  // namespace

WeightDistribution LinearCode::weight_distribution(const Budget& budget) const {
    uint64_t q = f_->size();
    if (enumerable(q, k_, budget.cap)) return enumerate_weight_distribution(gen_, budget);
    if (enumerable(q, n_ - k_, budget.cap)) {
        WeightDistribution dw = enumerate_weight_distribution(dual().generator(), budget);
        return macwilliams_transform(dw, n_, n_ - k_, q);
    }
    throw BudgetExceeded("weight distribution: neither side enumerable within cap");
}

int LinearCode::min_distance(const Budget& budget) const {
    if (k_ == 0) throw ParameterError("zero code has no minimum distance");
    {
        std::lock_guard<std::mutex> lock(cache_->mx);
        if (cache_->d) return *cache_->d;
    }
    int d;
    uint64_t q = f_->size();
    if (enumerable(q, k_, budget.cap) || enumerable(q, n_ - k_, budget.cap))
        d = weight_distribution(budget).min_weight();
    else if (auto pd = provenance_distance(*this))
        d = *pd;
    else
        throw BudgetExceeded("minimum distance: neither side enumerable within cap");
    std::lock_guard<std::mutex> lock(cache_->mx);
    cache_->d = d;
    return d;
}

bool LinearCode::is_nmds(const Budget& budget) const {
    if (k_ == 0 || k_ == n_) return false;
    return min_distance(budget) == n_ - k_ && dual().min_distance(budget) == k_;
}

WeightDistribution macwilliams_transform(const WeightDistribution& w, int n, int k, uint64_t q) {
    // A^perp_j = q^{-k} sum_i A_i K_j(i),
    // K_j(i) = sum_s (-1)^s (q-1)^{j-s} C(i,s) C(n-i, j-s).
    WeightDistribution out;
    out.counts.assign(n + 1, 0);
    BigInt qk = code_size(q, k);
    for (int j = 0; j <= n; ++j) {
        BigInt acc = 0;
        for (int i = 0; i <= n; ++i) {
            if (w.counts[i] == 0) continue;
            BigInt kr = 0;
            for (int s = 0; s <= j; ++s) {
                BigInt term = ipow(BigInt(q - 1), static_cast<unsigned>(j - s)) *
                              binom(i, s) * binom(n - i, j - s);
                kr += (s % 2 == 0) ? term : -term;
            }
            acc += w.counts[i] * kr;
        }
        if (acc % qk != 0) throw ParameterError("MacWilliams transform produced a non-integer");
        BigInt v = acc / qk;
        if (v < 0) throw ParameterError("MacWilliams transform produced a negative count");
        out.counts[j] = v;
    }
    return out;
}

std::pair<WeightDistribution, WeightDistribution> nmds_weight_distribution(
    int n, int k, uint64_t q, const BigInt& A_min) {
    WeightDistribution wc, wd;
    wc.counts.assign(n + 1, 0);
    wd.counts.assign(n + 1, 0);
    wc.counts[0] = 1;
    wd.counts[0] = 1;
    if (A_min <= 0) throw ParameterError("NMDS minimum-weight count must be positive");
    wc.counts[n - k] = A_min;
    wd.counts[k] = A_min;  // A_{n-k} = A^perp_k
    for (int s = 1; s <= k; ++s) {
        BigInt acc = 0;
        for (int i = 0; i <= s - 1; ++i) {
            BigInt term = binom(n - k + s, i) *
                          (ipow(BigInt(q), static_cast<unsigned>(s - i)) - 1);
            acc += (i % 2 == 0) ? term : -term;
        }
        BigInt v = binom(n, k - s) * acc +
                   (s % 2 == 0 ? binom(k, s) * A_min : -binom(k, s) * A_min);
        if (v < 0) throw ParameterError("inconsistent NMDS parameters: negative count");
        wc.counts[n - k + s] = v;
    }
    for (int s = 1; s <= n - k; ++s) {
        BigInt acc = 0;
        for (int i = 0; i <= s - 1; ++i) {
            BigInt term = binom(k + s, i) *
                          (ipow(BigInt(q), static_cast<unsigned>(s - i)) - 1);
            acc += (i % 2 == 0) ? term : -term;
        }
        BigInt v = binom(n, k + s) * acc +
                   (s % 2 == 0 ? binom(n - k, s) * A_min : -binom(n - k, s) * A_min);
        if (v < 0) throw ParameterError("inconsistent NMDS parameters: negative count");
        wd.counts[k + s] = v;
    }
    return {wc, wd};
}

namespace {

std::vector<uint32_t> conj_if(const Field& f, std::vector<uint32_t> w, bool conj) {
    if (conj)
        for (auto& v : w) v = f.frobenius(v);
    return w;
}

void scale_leading_one(const Field& f, std::vector<uint32_t>& w) {
    for (uint32_t v : w)
        if (v != 0) {
            uint32_t s = f.inv(v);
            if (s != 1)
                for (auto& x : w) x = f.mul(s, x);
            return;
        }
}

// Columns (v_i a_i^j) for i in idx, rows j = 0..k-2 and k: the evaluation
// submatrix whose kernel carries the weight-k dual codewords.
Matrix hz_submatrix(const Field& f, const Provenance& p, const std::vector<int>& idx) {
    int k = p.k;
    Matrix m(f, k, static_cast<int>(idx.size()));
    for (size_t c = 0; c < idx.size(); ++c) {
        uint32_t a = p.points[idx[c]], v = p.mult[idx[c]], pw = v;
        for (int r = 0; r < k - 1; ++r) {
            m.at(r, static_cast<int>(c)) = pw;
            pw = f.mul(pw, a);
        }
        m.at(k - 1, static_cast<int>(c)) = f.mul(pw, a);  // degree k, skipping k-1
    }
    return m;
}

}  // namespace

std::vector<MinWeightWord> min_weight_dual_codewords(const LinearCode& hz) {
    if (!hz.provenance || hz.provenance->family != Provenance::Family::hz ||
        hz.provenance->dual_side)
        throw ProvenanceMissing("min_weight_dual_codewords needs a primal-side HZ code");
    const Provenance& p = *hz.provenance;
    const Field& f = hz.field();
    int n = static_cast<int>(p.points.size()), k = p.k;

    std::vector<MinWeightWord> out;
    std::vector<int> idx(k);
    // All k-subsets with zero point sum; each yields one codeword class.
    enumerate_zero_sum_subsets(p.points, k, f, [&](const std::vector<int>& subset) {
        Matrix sub = hz_submatrix(f, p, subset);
        Matrix ker = sub.nullspace();
        if (ker.rows() != 1)
            throw Error("HZ dual kernel is not one-dimensional on a zero-sum support");
        MinWeightWord w;
        w.support = subset;
        w.word.assign(n, 0);
        for (int c = 0; c < k; ++c) {
            if (ker.at(0, c) == 0) throw Error("zero entry inside a minimum-weight support");
            w.word[subset[c]] = ker.at(0, c);
        }
        scale_leading_one(f, w.word);
        w.word = conj_if(f, std::move(w.word), p.conjugated);
        out.push_back(std::move(w));
    });

    // Every representative must actually be orthogonal to the HZ rows.
    for (const auto& w : out) {
        Matrix row(f, 1, n, w.word);
        if (!hz.generator().mul(row.transpose()).is_zero())
            throw Error("derived dual codeword fails the parity check");
    }
    return out;
}

namespace {

// Min-weight classes of an HZ code itself (weight n-k): complements of the
// zero-sum k-subsets, one codeword vanishing on each such subset.
std::vector<MinWeightWord> hz_primal_min_weight(const LinearCode& c) {
    const Provenance& p = *c.provenance;
    const Field& f = c.field();
    int n = static_cast<int>(p.points.size()), k = p.k;

    // Work on the raw evaluation matrix of the construction; c's generator is
    // its (possibly conjugated) RREF, which has the same row space.
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    Matrix full = hz_submatrix(f, p, all);

    std::vector<MinWeightWord> out;
    enumerate_zero_sum_subsets(p.points, k, f, [&](const std::vector<int>& subset) {
        // Message m with m*G zero on the subset columns: kernel of G|_T^T.
        Matrix cols = full.select_columns(subset);
        Matrix ker = cols.transpose().nullspace();
        if (ker.rows() != 1)
            throw Error("HZ min-weight kernel is not one-dimensional on a zero-sum support");
        std::vector<uint32_t> msg(ker.row(0), ker.row(0) + k);
        MinWeightWord w;
        w.word.assign(n, 0);
        for (int r = 0; r < k; ++r) row_axpy(f, msg[r], full.row(r), w.word.data(), n);
        for (int j = 0; j < n; ++j)
            if (w.word[j] != 0) w.support.push_back(j);
        if (static_cast<int>(w.support.size()) != n - k)
            throw Error("HZ min-weight codeword has unexpected extra zeros");
        scale_leading_one(f, w.word);
        w.word = conj_if(f, std::move(w.word), p.conjugated);
        out.push_back(std::move(w));
    });
    return out;
}

std::vector<MinWeightWord> enumerate_min_weight(const LinearCode& c, const Budget& budget) {
    BigInt sz = code_size(c.field().size(), c.k());
    if (sz > BigInt(budget.cap))
        throw BudgetExceeded("min-weight enumeration exceeds cap and no provenance applies");
    int n = c.n();
    int best = n + 1;
    std::vector<MinWeightWord> out;
    enumerate_projective(c.generator(), [&](const uint32_t* cw, int w) {
        if (w == 0 || w > best) return;
        if (w < best) {
            best = w;
            out.clear();
        }
        MinWeightWord m;
        m.word.assign(cw, cw + n);
        for (int j = 0; j < n; ++j)
            if (cw[j]) m.support.push_back(j);
        scale_leading_one(c.field(), m.word);
        out.push_back(std::move(m));
    });
    return out;
}

}  // namespace

std::vector<MinWeightWord> min_weight_classes(const LinearCode& c, const Budget& budget) {
    if (c.k() == 0) throw ParameterError("zero code has no minimum-weight codewords");
    if (c.provenance && c.provenance->family == Provenance::Family::hz) {
        const Provenance& p = *c.provenance;
        bool nmds = subset_sum_zero_exists(p.points, p.k, c.field());
        if (nmds) {
            if (p.dual_side) {
                // c is HZ^perp (possibly conjugated); delegate through a
                // primal-side view with matching conjugation.
                LinearCode primal = c.dual();
                return min_weight_dual_codewords(primal);
            }
            return hz_primal_min_weight(c);
        }
        // MDS case: no combinatorial shortcut; fall through to enumeration.
    }
    return enumerate_min_weight(c, budget);
}

}  // namespace qlrc
