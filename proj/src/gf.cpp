#include "qlrc/gf.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace qlrc {

namespace {

// Carry-less multiply of GF(2) polynomials.
uint64_t clmul(uint64_t a, uint64_t b) {
    uint64_t r = 0;
    while (b) {
        if (b & 1u) r ^= a;
        a <<= 1u;
        b >>= 1u;
    }
    return r;
}

int poly_deg(uint64_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1u;
    }
    return d;
}

// Remainder of a mod b over GF(2).
uint64_t poly_mod(uint64_t a, uint64_t b) {
    int db = poly_deg(b);
    for (int da = poly_deg(a); da >= db; da = poly_deg(a))
        a ^= b << (da - db);
    return a;
}

bool poly_irreducible(uint32_t p, int e) {
    if (poly_deg(p) != e) return false;
    if (e == 1) return true;
    // No factor of degree <= e/2.
    for (uint64_t d = 2; d < (1ull << (e / 2 + 1)); ++d)
        if (poly_mod(p, d) == 0) return false;
    return true;
}

}  // namespace

uint32_t Field::default_modulus(int degree) {
    // One fixed irreducible per degree, so runs are reproducible across
    // machines. The even degrees are the tower fields the constructions use.
    static const uint32_t table[17] = {
        0,      0x3,   0x7,    0xB,    0x13,  0x25,   0x43,   0x89,  0x11D,
        0x211,  0x409, 0x805,  0x1009, 0x201B, 0x4443, 0x8003, 0x1100B};
    if (degree < 1 || degree > 16) throw ParameterError("field degree must be in [1,16]");
    return table[degree];
}

Field::Field(int e, uint32_t modulus) : e_(e), mod_(modulus) {
    if (e < 1 || e > 16) throw ParameterError("field degree must be in [1,16]");
    if (!poly_irreducible(modulus, e))
        throw ParameterError("modulus polynomial is not irreducible of the stated degree");
    size_ = 1u << e;
    order_ = size_ - 1;
    base_degree_ = (e % 2 == 0) ? e / 2 : 0;

    // Table-free product used only while bootstrapping the log tables.
    auto raw_mul = [&](uint32_t a, uint32_t b) {
        return static_cast<uint32_t>(poly_mod(clmul(a, b), mod_));
    };
    auto elt_order = [&](uint32_t a) {
        uint32_t x = a, n = 1;
        while (x != 1) {
            x = raw_mul(x, a);
            ++n;
        }
        return n;
    };

    gen_ = 0;
    for (uint32_t c = 2; c < size_; ++c) {
        if (elt_order(c) == order_) {
            gen_ = c;
            break;
        }
    }
    if (order_ == 1) gen_ = 1;  // GF(2)
    if (gen_ == 0) throw Error("no generator found");  // cannot happen for a field

    exp_.assign(order_, 0);
    log_.assign(size_, 0);
    uint32_t x = 1;
    for (uint32_t i = 0; i < order_; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = raw_mul(x, gen_);
    }
    if (x != 1) throw Error("generator power table did not close");
}

const Field& Field::gf(int degree) { return gf(degree, default_modulus(degree)); }

const Field& Field::gf(int degree, uint32_t modulus) {
    static std::mutex mx;
    static std::map<std::pair<int, uint32_t>, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mx);
    auto key = std::make_pair(degree, modulus);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<Field>(new Field(degree, modulus))).first;
    return *it->second;
}

uint32_t Field::pow(uint32_t a, uint64_t n) const {
    if (a == 0) return n == 0 ? 1 : 0;
    return exp_[(static_cast<uint64_t>(log_[a]) * (n % order_)) % order_];
}

uint32_t Field::norm_preimage_min(uint32_t z) const {
    require_tower();
    if (z == 0) throw DivisionByZero("norm preimage of zero");
    if (!in_subfield(z)) throw ParameterError("norm preimage target not in subfield");
    uint64_t q = 1u << base_degree_;
    uint32_t u = log_[z];
    // z = g^{j(q+1)}; the preimages are g^{j + i(q-1)}, i = 0..q.
    if (u % (q + 1) != 0) throw Error("subfield element log not divisible by q+1");
    uint64_t j = u / (q + 1);
    uint32_t best = 0;
    for (uint64_t i = 0; i <= q; ++i) {
        uint32_t cand = exp_[(j + i * (q - 1)) % order_];
        if (best == 0 || cand < best) best = cand;
    }
    if (norm(best) != z) throw Error("norm preimage verification failed");
    return best;
}

std::vector<uint32_t> Field::frobenius_fixed_points() const {
    require_tower();
    std::vector<uint32_t> out;
    for (uint32_t x = 0; x < size_; ++x)
        if (x == 0 || frobenius(x) == x) out.push_back(x);
    return out;
}

SubfieldEmbedding subfield_image(const Field& tower) {
    if (!tower.has_tower()) throw NonTowerField("subfield_image needs a tower field");
    int m = tower.base_degree();
    if (m > 8) throw ParameterError("subfield_image supports m <= 8");
    const Field& base = Field::gf(m);

    SubfieldEmbedding emb;
    emb.tower = &tower;
    emb.base = &base;
    emb.image = tower.frobenius_fixed_points();
    if (emb.image.size() != (1u << m)) throw Error("fixed field has wrong size");

    // Root of the base modulus inside the image; evaluating the modulus needs
    // only tower additions and powers since its coefficients are 0/1.
    uint32_t root = 0;
    uint32_t pm = base.modulus();
    for (uint32_t y : emb.image) {
        uint32_t acc = 0;
        for (int i = 0; i <= m; ++i)
            if ((pm >> i) & 1u) acc ^= tower.pow(y, static_cast<uint64_t>(i));
        if (acc == 0 && (y != 0 || m == 1)) {
            root = y;
            break;
        }
    }
    if (m > 1 && root == 0) throw Error("base modulus has no root in the fixed field");

    emb.to_tower.assign(1u << m, 0);
    emb.from_tower.assign(tower.size(), -1);
    std::vector<uint32_t> root_pow(m);
    for (int i = 0; i < m; ++i) root_pow[i] = tower.pow(root, static_cast<uint64_t>(i));
    for (uint32_t b = 0; b < (1u << m); ++b) {
        uint32_t t = 0;
        for (int i = 0; i < m; ++i)
            if ((b >> i) & 1u) t ^= root_pow[i];
        emb.to_tower[b] = t;
        if (emb.from_tower[t] != -1) throw Error("subfield embedding is not injective");
        emb.from_tower[t] = static_cast<int32_t>(b);
    }
    return emb;
}

}  // namespace qlrc
