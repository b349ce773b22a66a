#include "qcblock/poly.hpp"

#include <stdexcept>

namespace qcblock {

Poly::Poly(const Field& F, std::vector<u32> coeffs) : F_(&F), c_(std::move(coeffs)) {
    for (u32 c : c_)
        if (c >= F.q()) throw std::invalid_argument("coefficient out of field range");
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::x(const Field& F) { return Poly(F, {0, 1}); }

Poly Poly::constant(const Field& F, u32 c) { return Poly(F, {c}); }

u32 Poly::lead() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(*F_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F_->add(coeff(u32(i)), o.coeff(u32(i)));
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r(*F_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F_->sub(coeff(u32(i)), o.coeff(u32(i)));
    r.trim();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(*F_);
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = F_->add(r.c_[i + j], F_->mul(c_[i], o.c_[j]));
    }
    r.trim();
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly q(*F_), r = *this;
    const int dd = divisor.degree();
    const u32 lead_inv = F_->inv(divisor.lead());
    if (r.degree() >= dd) q.c_.assign(size_t(r.degree() - dd) + 1, 0);
    while (r.degree() >= dd) {
        const u32 f = F_->mul(r.lead(), lead_inv);
        const size_t off = size_t(r.degree() - dd);
        q.c_[off] = f;
        for (size_t i = 0; i < divisor.c_.size(); ++i)
            r.c_[off + i] = F_->sub(r.c_[off + i], F_->mul(f, divisor.c_[i]));
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    const u32 li = F_->inv(lead());
    Poly r = *this;
    for (u32& c : r.c_) c = F_->mul(c, li);
    return r;
}

Poly Poly::shift(u32 k) const {
    if (is_zero()) return *this;
    Poly r(*F_);
    r.c_.assign(c_.size() + k, 0);
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    return r;
}

Poly Poly::powmod(u64 e, const Poly& modulus) const {
    Poly base = mod(modulus);
    Poly r = Poly::constant(*F_, 1).mod(modulus);
    while (e) {
        if (e & 1) r = (r * base).mod(modulus);
        base = (base * base).mod(modulus);
        e >>= 1;
    }
    return r;
}

u32 Poly::eval(u32 x) const {
    u32 acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = F_->add(F_->mul(acc, x), c_[i]);
    return acc;
}

std::vector<u32> Poly::roots() const {
    std::vector<u32> r;
    for (u32 x = 0; x < F_->q(); ++x)
        if (eval(x) == 0) r.push_back(x);
    return r;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

bool Poly::is_irreducible() const {
    const int d = degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    const Poly& f = *this;
    Poly frob = Poly::x(*F_).mod(f);
    for (int i = 1; i <= d / 2; ++i) {
        frob = frob.powmod(F_->q(), f);
        Poly g = gcd(f, frob - Poly::x(*F_));
        if (g.degree() > 0) return false;
    }
    return true;
}

Poly minimal_polynomial(u32 a, const Embedding& emb) {
    const Field& K = emb.dst();
    const u64 Q = emb.src().q();
    Poly prod = Poly::constant(K, 1);
    u32 b = a;
    u32 guard = 0;
    do {
        prod = prod * Poly(K, {K.neg(b), 1});
        b = K.pow(b, i64(Q));
        if (++guard > K.d()) throw std::logic_error("frobenius orbit did not close");
    } while (b != a);
    std::vector<u32> pulled(prod.coeffs().size());
    for (size_t i = 0; i < pulled.size(); ++i) {
        auto pre = emb.preimage(prod.coeff(u32(i)));
        if (!pre) throw std::logic_error("minimal polynomial coefficient outside subfield");
        pulled[i] = *pre;
    }
    return Poly(emb.src(), std::move(pulled));
}

}  // namespace qcblock
