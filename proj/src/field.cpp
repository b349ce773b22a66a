#include "qcblock/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qcblock {
namespace {

// --- polynomial arithmetic over the prime field, used only while a Field is
// --- being constructed (the instance's own tables do not exist yet).

using FpPoly = std::vector<u32>;  // little-endian coefficients mod p

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int fp_deg(const FpPoly& a) { return int(a.size()) - 1; }

u32 fp_pow_mod(u32 a, u64 e, u32 p) {
    u64 r = 1, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return u32(r);
}

u32 fp_inv(u32 a, u32 p) { return fp_pow_mod(a, p - 2, p); }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u32 p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + u64(a[i]) * b[j]) % p;
    }
    fp_trim(r);
    return r;
}

FpPoly fp_mod(FpPoly a, const FpPoly& m, u32 p) {
    fp_trim(a);
    const int dm = fp_deg(m);
    const u32 lead_inv = fp_inv(m.back(), p);
    while (fp_deg(a) >= dm) {
        const u32 c = u32(u64(a.back()) * lead_inv % p);
        const size_t off = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            u64 v = a[off + i] + u64(p) - u64(c) * m[i] % p;
            a[off + i] = u32(v % p);
        }
        fp_trim(a);
    }
    return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, u32 p) {
    return fp_mod(fp_mul(a, b, p), m, p);
}

FpPoly fp_powmod(FpPoly a, u64 e, const FpPoly& m, u32 p) {
    FpPoly r{1};
    a = fp_mod(std::move(a), m, p);
    while (e) {
        if (e & 1) r = fp_mulmod(r, a, m, p);
        a = fp_mulmod(a, a, m, p);
        e >>= 1;
    }
    return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u32 p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

u32 fp_eval(const FpPoly& f, u32 x, u32 p) {
    u64 acc = 0;
    for (size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
    return u32(acc);
}

// Irreducibility over F_p: a root scan settles degree <= 3; in general an
// irreducible factor of degree i <= d/2 shows up in gcd(f, X^{p^i} - X).
bool fp_irreducible(const FpPoly& f, u32 p) {
    const int d = fp_deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    if (d <= 3) {
        for (u32 x = 0; x < p; ++x)
            if (fp_eval(f, x, p) == 0) return false;
        return true;
    }
    FpPoly r{0, 1};  // X
    for (int i = 1; i <= d / 2; ++i) {
        r = fp_powmod(r, p, f, p);
        FpPoly t = r;
        // t - X
        if (t.size() < 2) t.resize(2, 0);
        t[1] = (t[1] + p - 1) % p;
        fp_trim(t);
        FpPoly g = fp_gcd(f, t, p);
        if (fp_deg(g) > 0) return false;
    }
    return true;
}

bool is_prime(u32 n) {
    if (n < 2) return false;
    for (u32 i = 2; u64(i) * i <= n; ++i)
        if (n % i == 0) return false;
    return true;
}

u32 smallest_primitive_root(u32 p) {
    if (p == 2) return 1;
    std::vector<u32> fac;
    u32 n = p - 1;
    for (u32 f = 2; u64(f) * f <= n; ++f)
        if (n % f == 0) {
            fac.push_back(f);
            while (n % f == 0) n /= f;
        }
    if (n > 1) fac.push_back(n);
    for (u32 g = 2; g < p; ++g) {
        bool ok = true;
        for (u32 f : fac)
            if (fp_pow_mod(g, (p - 1) / f, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root");
}

// Conway polynomials for the towers exercised here; everything else falls
// back to the deterministic smallest-encoding irreducible.
std::optional<FpPoly> conway_modulus(u32 p, u32 d) {
    if (p == 2 && d == 2) return FpPoly{1, 1, 1};
    if (p == 2 && d == 3) return FpPoly{1, 1, 0, 1};
    if (p == 2 && d == 6) return FpPoly{1, 1, 0, 1, 1, 0, 1};
    if (p == 5 && d == 2) return FpPoly{2, 4, 1};
    return std::nullopt;
}

FpPoly default_modulus(u32 p, u32 d) {
    if (d == 1) {
        u32 g = smallest_primitive_root(p);
        return FpPoly{(p - g) % p, 1};  // X - g
    }
    if (auto cw = conway_modulus(p, d)) return *cw;
    // Smallest-encoding monic irreducible of degree d: the encoding orders
    // the non-leading coefficients as sum(c_i p^i).
    u64 qd = 1;
    for (u32 i = 0; i < d; ++i) qd *= p;
    for (u64 enc = 0; enc < qd; ++enc) {
        FpPoly f(d + 1, 0);
        u64 e = enc;
        for (u32 i = 0; i < d; ++i) {
            f[i] = u32(e % p);
            e /= p;
        }
        f[d] = 1;
        if (fp_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible modulus found");
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> fac;
    for (u64 f = 2; f * f <= n; ++f)
        if (n % f == 0) {
            fac.push_back(f);
            while (n % f == 0) n /= f;
        }
    if (n > 1) fac.push_back(n);
    return fac;
}

}  // namespace

Field::Field(u32 p, u32 d, std::vector<u32> modulus)
    : p_(p), d_(d), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw std::invalid_argument("field characteristic must be prime");
    if (d_ == 0) throw std::invalid_argument("field degree must be positive");
    u64 q = 1;
    for (u32 i = 0; i < d_; ++i) {
        q *= p_;
        if (q > (1u << 24)) throw std::invalid_argument("field too large for dense tables");
    }
    q_ = u32(q);
    if (modulus_.size() != d_ + 1) throw std::invalid_argument("modulus must have degree d");
    for (u32& c : modulus_) c %= p_;
    if (modulus_.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (!fp_irreducible(modulus_, p_)) throw std::invalid_argument("modulus is reducible");
    build_tables();
}

u32 Field::mul_slow(u32 a, u32 b) const {
    FpPoly fa = coeffs(a), fb = coeffs(b);
    fp_trim(fa);
    fp_trim(fb);
    if (fa.empty() || fb.empty()) return 0;
    FpPoly r = fp_mulmod(fa, fb, modulus_, p_);
    u32 enc = 0;
    for (size_t i = r.size(); i-- > 0;) enc = enc * p_ + r[i];
    return enc;
}

void Field::build_tables() {
    order_prime_factors_ = prime_factors(q_ - 1);
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    // Candidate generators: the class of X first (primitive for the Conway
    // defaults), then every encoding in ascending order.
    auto try_generator = [&](u32 g) -> bool {
        if (g == 0) return false;
        u32 x = 1;
        for (u32 i = 0; i + 1 < q_; ++i) {
            if (x == 1 && i > 0) return false;  // order < q-1
            exp_[i] = x;
            x = mul_slow(x, g);
        }
        return x == 1;  // g^{q-1} = 1
    };
    u32 first = d_ > 1 ? p_ : (p_ - modulus_[0]) % p_;
    bool ok = try_generator(first);
    for (u32 g = 1; !ok && g < q_; ++g) {
        if (g == first) continue;
        ok = try_generator(g);
    }
    if (!ok) throw std::logic_error("no multiplicative generator found");
    gen_ = exp_.size() > 1 ? exp_[1] : 1;
    for (u32 i = 0; i + 1 < q_; ++i) log_[exp_[i]] = i;
}

u32 Field::add(u32 a, u32 b) const {
    if (p_ == 2) return a ^ b;
    u32 r = 0, mult = 1;
    while (a || b) {
        u32 da = a % p_, db = b % p_;
        r += (da + db) % p_ * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

u32 Field::neg(u32 a) const {
    if (p_ == 2) return a;
    u32 r = 0, mult = 1;
    while (a) {
        u32 da = a % p_;
        r += (p_ - da) % p_ * mult;
        mult *= p_;
        a /= p_;
    }
    return r;
}

u32 Field::sub(u32 a, u32 b) const { return add(a, neg(b)); }

u32 Field::inv(u32 a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

u32 Field::pow(u32 a, i64 e) const {
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        throw std::domain_error("zero to a negative power");
    }
    i64 n = i64(q_) - 1;
    i64 r = e % n;
    if (r < 0) r += n;
    return exp_[(u64(log_[a]) * u64(r)) % u64(n)];
}

u64 Field::element_order(u32 a) const {
    if (a == 0) throw std::domain_error("order of zero");
    u64 o = q_ - 1;
    for (u64 f : order_prime_factors_)
        while (o % f == 0 && pow(a, i64(o / f)) == 1) o /= f;
    return o;
}

u32 Field::coeff(u32 enc, u32 i) const {
    for (u32 k = 0; k < i; ++k) enc /= p_;
    return enc % p_;
}

u32 Field::encode(const std::vector<u32>& coeffs) const {
    if (coeffs.size() > d_) throw std::invalid_argument("too many coefficients");
    u32 enc = 0;
    for (size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= p_) throw std::invalid_argument("coefficient out of range");
        enc = enc * p_ + coeffs[i];
    }
    return enc;
}

std::vector<u32> Field::coeffs(u32 enc) const {
    std::vector<u32> c(d_, 0);
    for (u32 i = 0; i < d_; ++i) {
        c[i] = enc % p_;
        enc /= p_;
    }
    return c;
}

std::string Field::spec_line() const {
    std::ostringstream os;
    os << "GF " << p_ << ' ' << d_;
    for (u32 c : modulus_) os << ' ' << c;
    return os.str();
}

namespace {
std::mutex field_registry_mutex;
std::map<std::tuple<u32, u32, std::vector<u32>>, std::unique_ptr<Field>>& field_registry() {
    static std::map<std::tuple<u32, u32, std::vector<u32>>, std::unique_ptr<Field>> reg;
    return reg;
}
}  // namespace

const Field& Field::get(u32 p, u32 d) {
    FpPoly m = default_modulus(p, d);
    return with_modulus(p, std::vector<u32>(m.begin(), m.end()));
}

const Field& Field::with_modulus(u32 p, const std::vector<u32>& modulus) {
    if (modulus.size() < 2) throw std::invalid_argument("modulus must have positive degree");
    if (p < 2) throw std::invalid_argument("field characteristic must be prime");
    std::vector<u32> m = modulus;
    for (u32& c : m) c %= p;
    const u32 d = u32(m.size() - 1);
    std::lock_guard<std::mutex> lock(field_registry_mutex);
    auto key = std::make_tuple(p, d, m);
    auto& reg = field_registry();
    auto it = reg.find(key);
    if (it == reg.end())
        it = reg.emplace(std::move(key), std::unique_ptr<Field>(new Field(p, d, std::move(m)))).first;
    return *it->second;
}

// --- Embedding ---------------------------------------------------------

namespace {

// RREF of [M | I] over F_p; returns rows and records the pivot column of each
// pivot row (columns limited to the M part, width mcols).
void rref_augmented(std::vector<std::vector<u32>>& rows, u32 mcols, u32 p,
                    std::vector<int>& pivot_of_row) {
    const size_t ncols = rows.empty() ? 0 : rows[0].size();
    pivot_of_row.assign(rows.size(), -1);
    size_t r = 0;
    for (u32 c = 0; c < mcols && r < rows.size(); ++c) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const u32 piv_inv = fp_inv(rows[r][c], p);
        for (size_t j = 0; j < ncols; ++j) rows[r][j] = u32(u64(rows[r][j]) * piv_inv % p);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const u32 f = rows[i][c];
            for (size_t j = 0; j < ncols; ++j)
                rows[i][j] = u32((rows[i][j] + u64(p - f) * rows[r][j]) % p);
        }
        pivot_of_row[r] = int(c);
        ++r;
    }
}

std::vector<u32> field_digits(const Field& F, u32 enc) {
    std::vector<u32> d(F.d());
    for (u32 i = 0; i < F.d(); ++i) d[i] = F.coeff(enc, i);
    return d;
}

// Solve M x = y through the stored RREF of [M | I]: z = R y must be zero on
// non-pivot rows, and pivot rows read off x.
std::optional<std::vector<u32>> solve_from_rref(const std::vector<std::vector<u32>>& rref,
                                                const std::vector<int>& pivot_of_row,
                                                u32 mcols, u32 p,
                                                const std::vector<u32>& y) {
    std::vector<u32> x(mcols, 0);
    for (size_t r = 0; r < rref.size(); ++r) {
        u64 z = 0;
        for (size_t j = 0; j < y.size(); ++j)
            z += u64(rref[r][mcols + j]) * y[j] % p;
        u32 zr = u32(z % p);
        if (pivot_of_row[r] >= 0)
            x[size_t(pivot_of_row[r])] = zr;
        else if (zr != 0)
            return std::nullopt;
    }
    return x;
}

}  // namespace

Embedding::Embedding(const Field& src, const Field& dst) : src_(&src), dst_(&dst) {
    if (src.p() != dst.p()) throw std::invalid_argument("embedding requires equal characteristic");
    if (dst.d() % src.d() != 0) throw std::invalid_argument("source degree must divide target degree");
    t_ = dst.d() / src.d();

    // Canonical generator image: smallest-encoding root of the source modulus.
    root_ = 0;
    bool found = false;
    for (u32 cand = 0; cand < dst.q(); ++cand) {
        u32 acc = 0;
        for (size_t i = src.modulus().size(); i-- > 0;)
            acc = dst.add(dst.mul(acc, cand), src.modulus()[i]);
        if (acc == 0) {
            root_ = cand;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("source modulus has no root in target");

    root_pow_.assign(src.d(), 1);
    for (u32 i = 1; i < src.d(); ++i) root_pow_[i] = dst.mul(root_pow_[i - 1], root_);

    const u32 p = src.p();
    {
        std::vector<std::vector<u32>> rows(dst.d(), std::vector<u32>(src.d() + dst.d(), 0));
        for (u32 i = 0; i < src.d(); ++i) {
            auto dig = field_digits(dst, root_pow_[i]);
            for (u32 r = 0; r < dst.d(); ++r) rows[r][i] = dig[r];
        }
        for (u32 r = 0; r < dst.d(); ++r) rows[r][src.d() + r] = 1;
        rref_augmented(rows, src.d(), p, pre_pivot_of_row_);
        pre_rref_ = std::move(rows);
    }
    {
        const u32 g = dst.x_class();
        std::vector<std::vector<u32>> rows(dst.d(), std::vector<u32>(dst.d() + dst.d(), 0));
        u32 gpow = 1;
        for (u32 u = 0; u < t_; ++u) {
            for (u32 i = 0; i < src.d(); ++i) {
                auto dig = field_digits(dst, dst.mul(root_pow_[i], gpow));
                for (u32 r = 0; r < dst.d(); ++r) rows[r][u * src.d() + i] = dig[r];
            }
            gpow = dst.mul(gpow, g);
        }
        for (u32 r = 0; r < dst.d(); ++r) rows[r][dst.d() + r] = 1;
        rref_augmented(rows, dst.d(), p, crd_pivot_of_row_);
        for (int pv : crd_pivot_of_row_)
            if (pv < 0) throw std::logic_error("relative basis is not independent");
        crd_rref_ = std::move(rows);
    }
}

u32 Embedding::map(u32 x) const {
    u32 acc = 0;
    for (u32 i = 0; i < src_->d(); ++i) {
        u32 c = src_->coeff(x, i);
        if (c) acc = dst_->add(acc, dst_->mul(c, root_pow_[i]));
    }
    return acc;
}

std::optional<u32> Embedding::preimage(u32 x) const {
    auto sol = solve_from_rref(pre_rref_, pre_pivot_of_row_, src_->d(), src_->p(),
                               field_digits(*dst_, x));
    if (!sol) return std::nullopt;
    return src_->encode(*sol);
}

std::vector<u32> Embedding::coords(u32 y) const {
    auto sol = solve_from_rref(crd_rref_, crd_pivot_of_row_, dst_->d(), src_->p(),
                               field_digits(*dst_, y));
    if (!sol) throw std::logic_error("coords solve failed");
    std::vector<u32> out(t_, 0);
    for (u32 u = 0; u < t_; ++u) {
        std::vector<u32> digits(sol->begin() + u * src_->d(), sol->begin() + (u + 1) * src_->d());
        out[u] = src_->encode(digits);
    }
    return out;
}

u32 Embedding::from_coords(const std::vector<u32>& c) const {
    if (c.size() != t_) throw std::invalid_argument("coordinate count mismatch");
    const u32 g = dst_->x_class();
    u32 acc = 0, gpow = 1;
    for (u32 u = 0; u < t_; ++u) {
        acc = dst_->add(acc, dst_->mul(map(c[u]), gpow));
        gpow = dst_->mul(gpow, g);
    }
    return acc;
}

namespace {
std::mutex emb_registry_mutex;
std::map<std::pair<const Field*, const Field*>, std::unique_ptr<Embedding>>& emb_registry() {
    static std::map<std::pair<const Field*, const Field*>, std::unique_ptr<Embedding>> reg;
    return reg;
}
}  // namespace

const Embedding& Embedding::get(const Field& src, const Field& dst) {
    std::lock_guard<std::mutex> lock(emb_registry_mutex);
    auto key = std::make_pair(&src, &dst);
    auto& reg = emb_registry();
    auto it = reg.find(key);
    if (it == reg.end())
        it = reg.emplace(key, std::unique_ptr<Embedding>(new Embedding(src, dst))).first;
    return *it->second;
}

}  // namespace qcblock
