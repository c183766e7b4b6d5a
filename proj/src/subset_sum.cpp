#include "qlrc/subset_sum.hpp"

#include <algorithm>
#include <set>

namespace qlrc {

namespace {

constexpr uint64_t kSubsetBudget = 100'000'000;  // C(|F|, ell) cap

void check_subset_budget(size_t n, int ell) {
    if (ell < 0 || ell > static_cast<int>(n)) return;
    if (binom(static_cast<int64_t>(n), ell) > BigInt(kSubsetBudget))
        throw BudgetExceeded("subset enumeration exceeds the 1e8 combination budget");
}

// Revolving-door (Gray) order on t-subsets of {0..n-1}: consecutive subsets
// differ by removing one element and inserting another. G(n,t) is G(n-1,t)
// followed by G(n-1,t-1) reversed with n-1 adjoined.
struct RevolvingDoor {
    std::vector<char> in;
    std::function<void(int)> add, remove;
    std::function<void()> visit;

    void run(int n, int t) {
        if (t < 0 || t > n) return;
        rec(n, t, true);
    }

    void rec(int n, int t, bool forward) {
        if (t == 0) {
            visit();
            return;
        }
        if (forward) {
            if (t < n) rec(n - 1, t, true);
            add(n - 1);
            rec(n - 1, t - 1, false);
            remove(n - 1);
        } else {
            add(n - 1);
            rec(n - 1, t - 1, true);
            remove(n - 1);
            if (t < n) rec(n - 1, t, false);
        }
    }
};

void check_distinct(const std::vector<uint32_t>& elems) {
    std::set<uint32_t> s(elems.begin(), elems.end());
    if (s.size() != elems.size()) throw ParameterError("evaluation elements must be distinct");
}

}  // namespace

BigInt count_bruteforce(const SubsetSumQuery& q) {
    if (q.ell < 0 || q.ell > static_cast<int>(q.elements.size())) return 0;
    check_distinct(q.elements);
    check_subset_budget(q.elements.size(), q.ell);
    uint64_t hits = 0;
    uint32_t sum = 0;
    RevolvingDoor rd;
    rd.add = [&](int i) { sum ^= q.elements[i]; };
    rd.remove = [&](int i) { sum ^= q.elements[i]; };
    rd.visit = [&]() { hits += (sum == q.b); };
    rd.run(static_cast<int>(q.elements.size()), q.ell);
    return hits;
}

void enumerate_zero_sum_subsets(const std::vector<uint32_t>& points, int ell, const Field&,
                                const std::function<void(const std::vector<int>&)>& visit) {
    if (ell < 0 || ell > static_cast<int>(points.size())) return;
    check_subset_budget(points.size(), ell);
    uint32_t sum = 0;
    std::vector<char> in(points.size(), 0);
    std::vector<int> subset;
    RevolvingDoor rd;
    rd.add = [&](int i) { sum ^= points[i]; in[i] = 1; };
    rd.remove = [&](int i) { sum ^= points[i]; in[i] = 0; };
    rd.visit = [&]() {
        if (sum != 0) return;
        subset.clear();
        for (size_t i = 0; i < in.size(); ++i)
            if (in[i]) subset.push_back(static_cast<int>(i));
        visit(subset);
    };
    rd.run(static_cast<int>(points.size()), ell);
}

EvalSetKind classify_eval_set(const std::vector<uint32_t>& points, const Field& f) {
    check_distinct(points);
    size_t n = points.size();

    // Additive subgroup: contains 0 and equals its own GF(2)-span.
    bool has_zero = std::find(points.begin(), points.end(), 0u) != points.end();
    if (has_zero && (n & (n - 1)) == 0) {
        std::vector<uint32_t> basis;  // xor-reduced
        for (uint32_t x : points) {
            uint32_t y = x;
            for (uint32_t b : basis) y = std::min(y, y ^ b);
            if (y) basis.push_back(y);
        }
        if ((1ull << basis.size()) == n) return EvalSetKind::additive_subgroup;
    }

    // Full multiplicative group of an embedded subfield: the 2^j - 1 roots of
    // x^{2^j} = x other than zero, with j dividing the ambient degree.
    if (!has_zero) {
        uint64_t sz = n + 1;
        if ((sz & (sz - 1)) == 0) {
            int j = 0;
            while ((1ull << j) < sz) ++j;
            if (f.degree() % j == 0) {
                bool all_fixed = true;
                for (uint32_t x : points)
                    if (f.pow(x, 1ull << j) != x) {
                        all_fixed = false;
                        break;
                    }
                if (all_fixed) return EvalSetKind::subfield_star;
            }
        }
    }
    return EvalSetKind::custom;
}

bool subset_sum_zero_exists(const std::vector<uint32_t>& points, int k, const Field& f) {
    if (k == 0) return true;
    if (k < 0 || k > static_cast<int>(points.size())) return false;
    switch (classify_eval_set(points, f)) {
        case EvalSetKind::additive_subgroup:
            return count_additive_subgroup_size(k, true, points.size()) > 0;
        case EvalSetKind::subfield_star:
            return count_multiplicative(k, true, points.size() + 1) > 0;
        case EvalSetKind::custom: {
            check_subset_budget(points.size(), k);
            bool found = false;
            uint32_t sum = 0;
            RevolvingDoor rd;
            rd.add = [&](int i) { sum ^= points[i]; };
            rd.remove = [&](int i) { sum ^= points[i]; };
            rd.visit = [&]() { found = found || sum == 0; };
            rd.run(static_cast<int>(points.size()), k);  // no early abort; budget-capped anyway
            return found;
        }
    }
    return false;
}

BigInt count_additive_subgroup_size(int ell, bool b_zero, uint64_t n) {
    if (ell < 0 || static_cast<uint64_t>(ell) > n) return 0;
    if (ell % 2 != 0) {
        BigRat r(binom(static_cast<int64_t>(n), ell), BigInt(n));
        return to_integer(r);
    }
    int64_t v = b_zero ? static_cast<int64_t>(n) - 1 : -1;
    int sign = ((ell + ell / 2) % 2 == 0) ? 1 : -1;
    BigRat r(binom(static_cast<int64_t>(n), ell) +
                 sign * v * binom(static_cast<int64_t>(n) / 2, ell / 2),
             BigInt(n));
    return to_integer(r);
}

BigInt count_additive_subgroup(int ell, uint32_t b, const std::vector<uint32_t>& subgroup,
                               const Field& f) {
    if (classify_eval_set(subgroup, f) != EvalSetKind::additive_subgroup)
        throw ParameterError("point set is not an additive subgroup");
    if (std::find(subgroup.begin(), subgroup.end(), b) == subgroup.end())
        throw ParameterError("target b lies outside the subgroup");
    return count_additive_subgroup_size(ell, b == 0, subgroup.size());
}

BigInt count_multiplicative(int ell, bool b_zero, uint64_t q) {
    if (ell < 0 || static_cast<uint64_t>(ell) > q - 1) return 0;
    int64_t v = b_zero ? static_cast<int64_t>(q) - 1 : -1;
    int sign = ((ell + ell / 2) % 2 == 0) ? 1 : -1;
    BigRat r(binom(static_cast<int64_t>(q) - 1, ell) +
                 sign * v * binom(static_cast<int64_t>(q) / 2 - 1, ell / 2),
             BigInt(q));
    return to_integer(r);
}

BigRat count_multiplicative_printed(int ell, bool b_zero, uint64_t q) {
    if (ell < 0 || static_cast<uint64_t>(ell) > q - 1) return 0;
    int64_t v = b_zero ? static_cast<int64_t>(q) - 1 : -1;
    int sign = ((ell + ell / 2) % 2 == 0) ? 1 : -1;
    return BigRat(binom(static_cast<int64_t>(q) - 1, ell) +
                      sign * v * binom(static_cast<int64_t>(q) / 2, ell / 2),
                  BigInt(q));
}

BigInt inclusion_exclusion3(int k, uint32_t x1, uint32_t x2, uint32_t x3,
                            const std::vector<uint32_t>& subgroup, const Field& f) {
    if (x1 == x2 || x1 == x3 || x2 == x3)
        throw ParameterError("anchors must be pairwise distinct");
    if (classify_eval_set(subgroup, f) != EvalSetKind::additive_subgroup)
        throw ParameterError("point set is not an additive subgroup");
    if (k < 3) throw ParameterError("inclusion_exclusion3 needs k >= 3");
    uint64_t n = subgroup.size();
    BigInt acc = 0;
    for (int i = 0; i <= k - 3; ++i)
        for (int j = 0; j <= k - 3 - i; ++j)
            for (int z = 0; z <= k - 3 - i - j; ++z) {
                uint32_t target = 0;
                if ((z + 1) % 2 == 1) target ^= x1;
                if ((j + 1) % 2 == 1) target ^= x2;
                if ((i + 1) % 2 == 1) target ^= x3;
                BigInt cnt = count_additive_subgroup_size(k - 3 - i - j - z, target == 0, n);
                acc += ((i + j + z) % 2 == 0) ? cnt : -cnt;
            }
    if (acc < 0) throw ParameterError("inclusion-exclusion produced a negative count");
    return acc;
}

ParityCase parity_case(int k, int i, int j, int z) {
    if (k % 2 != 0) throw ParameterError("parity_case is defined for even k");
    ParityCase pc{};
    pc.e = (i % 2 == 0) + (j % 2 == 0) + (z % 2 == 0);
    pc.ijz_sum_odd = (i + j + z) % 2 != 0;
    pc.remainder_odd = (k - 3 - i - j - z) % 2 != 0;
    bool c1 = z % 2 == 0, c2 = j % 2 == 0, c3 = i % 2 == 0;  // nonzero coefficients
    if (c1 && c2 && c3)
        pc.target = TargetKind::x1_x2_x3;
    else if (c1 && c2)
        pc.target = TargetKind::x1_x2;
    else if (c1 && c3)
        pc.target = TargetKind::x1_x3;
    else if (c2 && c3)
        pc.target = TargetKind::x2_x3;
    else if (c1)
        pc.target = TargetKind::x1;
    else if (c2)
        pc.target = TargetKind::x2;
    else if (c3)
        pc.target = TargetKind::x3;
    else
        pc.target = TargetKind::zero;
    pc.target_nonzero = (pc.e == 2);  // pairwise sums of distinct anchors
    return pc;
}

BigRat delta1_term(int k, int i, int j, int z, uint64_t n) {
    ParityCase pc = parity_case(k, i, j, z);
    int ell = k - 3 - i - j - z;
    if (ell < 0) throw ParameterError("delta1_term index out of range");
    BigInt lead = binom(static_cast<int64_t>(n), ell);
    if (pc.e == 1 || pc.e == 3)  // ell odd: count does not depend on the target
        return BigRat(lead, BigInt(n));
    int sign_corr = ((ell + ell / 2) % 2 == 0) ? 1 : -1;
    int64_t v = (pc.e == 0) ? static_cast<int64_t>(n) - 1 : -1;
    BigInt num = lead + sign_corr * v * binom(static_cast<int64_t>(n) / 2, ell / 2);
    return BigRat(-num, BigInt(n));  // sign (-1)^{i+j+z} = -1 in these cases
}

BigRat delta2_term(int k, int i, int j, uint64_t q) {
    int ell = k - 2 - i - j;
    if (ell < 0) throw ParameterError("delta2_term index out of range");
    bool b_zero = (i % 2 == 1) && (j % 2 == 1);
    int64_t v = b_zero ? static_cast<int64_t>(q) - 1 : -1;
    int sign_corr = ((ell + ell / 2) % 2 == 0) ? 1 : -1;
    BigInt num = binom(static_cast<int64_t>(q) - 1, ell) +
                 sign_corr * v * binom(static_cast<int64_t>(q) / 2 - 1, ell / 2);
    if ((i + j) % 2 != 0) num = -num;
    return BigRat(num, BigInt(q));
}

BigInt lambda1_perp(int m, int m1, int k) {
    if (!(3 <= m1 && m1 <= m)) throw ParameterError("lambda1_perp needs 3 <= m1 <= m");
    uint64_t n = 1ull << m1;
    if (k % 2 != 0 || k < 4 || static_cast<uint64_t>(k) > n - 4)
        throw ParameterError("lambda1_perp needs even k with 4 <= k <= 2^{m1}-4");
    BigRat acc = 0;
    for (int i = 0; i <= k - 3; ++i)
        for (int j = 0; j <= k - 3 - i; ++j)
            for (int z = 0; z <= k - 3 - i - j; ++z) acc += delta1_term(k, i, j, z, n);
    BigInt lambda = to_integer(acc);
    if (lambda < 0) throw ParameterError("lambda1_perp came out negative");
    return lambda;
}

BigInt lambda2_perp(int m, int m2, int k) {
    if (!(1 <= m2 && m2 <= m && m % m2 == 0))
        throw ParameterError("lambda2_perp needs m2 | m");
    uint64_t q = 1ull << m2;
    if (k < 3 || static_cast<uint64_t>(k) > q - 4)
        throw ParameterError("lambda2_perp needs 3 <= k <= 2^{m2}-4");
    BigRat acc = 0;
    for (int i = 0; i <= k - 2; ++i)
        for (int j = 0; j <= k - 2 - i; ++j) acc += delta2_term(k, i, j, q);
    BigInt lambda = to_integer(acc);
    if (lambda < 0) throw ParameterError("lambda2_perp came out negative");
    return lambda;
}

}  // namespace qlrc
