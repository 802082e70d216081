#include "agfilt/gf.hpp"

#include <algorithm>
#include <stdexcept>

#include "agfilt/errors.hpp"

namespace agfilt {

namespace {

constexpr std::uint64_t kMaxFieldSize = 1u << 16;

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint32_t mod_p(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on integers
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::swap(t -= quot * new_t, new_t);
        std::swap(r -= quot * new_r, new_r);
    }
    // r == gcd == 1 since p is prime and a != 0
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

using Poly = std::vector<std::uint32_t>;  // coefficient of x^i at position i

int poly_deg(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

std::uint32_t poly_eval(const Poly& a, std::uint32_t x, std::uint32_t p) {
    std::uint64_t acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = (acc * x + *it) % p;
    return static_cast<std::uint32_t>(acc);
}

// remainder of a by monic b, in place on a copy
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
    const int db = poly_deg(b);
    for (int i = poly_deg(a); i >= db; --i) {
        std::uint64_t c = a[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) {
            auto& slot = a[static_cast<std::size_t>(i - db + j)];
            slot = static_cast<std::uint32_t>(
                (slot + static_cast<std::uint64_t>(p) * p - c * b[static_cast<std::size_t>(j)] % p) % p);
        }
    }
    a.resize(static_cast<std::size_t>(std::max(db, 0)));
    return a;
}

// Exhaustive check suited to the small p, k in scope: no roots, and no monic
// factor of degree 2..k/2 divides the polynomial.
bool poly_irreducible(const Poly& poly, std::uint32_t p, std::uint32_t k) {
    for (std::uint32_t x = 0; x < p; ++x)
        if (poly_eval(poly, x, p) == 0) return false;
    for (std::uint32_t d = 2; d <= k / 2; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly div(d + 1, 0);
            std::uint64_t v = idx;
            for (std::uint32_t i = 0; i < d; ++i) {
                div[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            div[d] = 1;
            if (poly_deg(poly_rem(poly, div, p)) < 0) return false;
        }
    }
    return true;
}

Poly default_modulus(std::uint32_t p, std::uint32_t k, std::uint64_t q) {
    // least irreducible monic polynomial in canonical (index) order
    for (std::uint64_t idx = 0; idx < q; ++idx) {
        Poly cand(k + 1, 0);
        std::uint64_t v = idx;
        for (std::uint32_t i = 0; i < k; ++i) {
            cand[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        cand[k] = 1;
        if (poly_irreducible(cand, p, k)) return cand;
    }
    throw ReducibleModulus("no irreducible polynomial found");  // unreachable
}

void require_same_spec(const FieldElement& a, const FieldElement& b) {
    if (!a.spec() || !b.spec()) throw SpecMismatch("detached field element");
    if (a.spec() != b.spec() && !(*a.spec() == *b.spec()))
        throw SpecMismatch("elements of different fields");
}

}  // namespace

FieldElement::FieldElement(FieldSpecPtr spec, std::vector<std::uint32_t> rep)
    : spec_(std::move(spec)), rep_(std::move(rep)) {}

bool FieldElement::is_zero() const {
    return std::all_of(rep_.begin(), rep_.end(), [](std::uint32_t c) { return c == 0; });
}

bool FieldElement::is_one() const {
    if (rep_.empty() || rep_[0] != 1) return false;
    return std::all_of(rep_.begin() + 1, rep_.end(), [](std::uint32_t c) { return c == 0; });
}

std::uint64_t FieldElement::index() const {
    std::uint64_t acc = 0;
    const std::uint64_t p = spec_ ? spec_->p() : 0;
    for (auto it = rep_.rbegin(); it != rep_.rend(); ++it) acc = acc * p + *it;
    return acc;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_spec(a, b);
    const auto p = a.spec_->p();
    std::vector<std::uint32_t> out(a.rep_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (a.rep_[i] + b.rep_[i]) % p;
    return FieldElement(a.spec_, std::move(out));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_spec(a, b);
    const auto p = a.spec_->p();
    std::vector<std::uint32_t> out(a.rep_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (a.rep_[i] + p - b.rep_[i]) % p;
    return FieldElement(a.spec_, std::move(out));
}

FieldElement FieldElement::operator-() const {
    if (!spec_) throw SpecMismatch("detached field element");
    const auto p = spec_->p();
    std::vector<std::uint32_t> out(rep_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (p - rep_[i]) % p;
    return FieldElement(spec_, std::move(out));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_spec(a, b);
    const auto p = a.spec_->p();
    const std::size_t k = a.rep_.size();
    if (k == 1)
        return FieldElement(a.spec_, {static_cast<std::uint32_t>(
                                         static_cast<std::uint64_t>(a.rep_[0]) * b.rep_[0] % p)});
    std::vector<std::uint64_t> conv(2 * k - 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (a.rep_[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j)
            conv[i + j] = (conv[i + j] + static_cast<std::uint64_t>(a.rep_[i]) * b.rep_[j]) % p;
    }
    // reduce by the monic modulus
    const auto& mod = a.spec_->modulus();
    for (std::size_t i = conv.size(); i-- > k;) {
        const std::uint64_t c = conv[i];
        if (c == 0) continue;
        conv[i] = 0;
        for (std::size_t j = 0; j < k; ++j)
            conv[i - k + j] = (conv[i - k + j] + static_cast<std::uint64_t>(p) * p - c * mod[j] % p) % p;
    }
    std::vector<std::uint32_t> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(conv[i]);
    return FieldElement(a.spec_, std::move(out));
}

FieldElement FieldElement::inv() const {
    if (!spec_) throw SpecMismatch("detached field element");
    if (is_zero()) throw DivisionByZero("inverse of zero");
    const auto p = spec_->p();
    if (spec_->degree() == 1) return FieldElement(spec_, {inv_mod_p(rep_[0], p)});

    // extended Euclid in GF(p)[x] against the modulus
    Poly r0(spec_->modulus());
    Poly r1(rep_.begin(), rep_.end());
    Poly s0{0}, s1{1};
    auto scale = [&](const Poly& a, std::uint32_t c) {
        Poly out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            out[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[i]) * c % p);
        return out;
    };
    auto sub_shifted = [&](Poly a, const Poly& b, std::uint32_t c, int shift) {
        if (a.size() < b.size() + static_cast<std::size_t>(shift))
            a.resize(b.size() + static_cast<std::size_t>(shift), 0);
        for (std::size_t i = 0; i < b.size(); ++i) {
            auto& slot = a[i + static_cast<std::size_t>(shift)];
            slot = static_cast<std::uint32_t>(
                (slot + static_cast<std::uint64_t>(p) * p - static_cast<std::uint64_t>(c) * b[i] % p) % p);
        }
        return a;
    };
    while (poly_deg(r1) > 0) {
        const int d0 = poly_deg(r0), d1 = poly_deg(r1);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(s0, s1);
            continue;
        }
        const std::uint32_t lead1 = r1[static_cast<std::size_t>(d1)];
        const std::uint32_t c = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(r0[static_cast<std::size_t>(d0)]) * inv_mod_p(lead1, p) % p);
        r0 = sub_shifted(std::move(r0), r1, c, d0 - d1);
        s0 = sub_shifted(std::move(s0), s1, c, d0 - d1);
        if (poly_deg(r0) < poly_deg(r1)) {
            std::swap(r0, r1);
            std::swap(s0, s1);
        }
    }
    // r1 is a nonzero constant: gcd(rep, modulus) up to scaling
    const std::uint32_t c = inv_mod_p(r1[0], p);
    Poly s = scale(s1, c);
    s = poly_rem(std::move(s), spec_->modulus(), p);
    s.resize(spec_->degree(), 0);
    return FieldElement(spec_, std::move(s));
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    if (!spec_) throw SpecMismatch("detached field element");
    FieldElement acc = spec_->one();
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (!a.spec_ || !b.spec_) return a.spec_ == b.spec_ && a.rep_ == b.rep_;
    if (a.spec_ != b.spec_ && !(*a.spec_ == *b.spec_)) return false;
    return a.rep_ == b.rep_;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    return a.index() <=> b.index();
}

FieldElement FieldSpec::zero() const {
    return FieldElement(shared_from_this(), std::vector<std::uint32_t>(k_, 0));
}

FieldElement FieldSpec::one() const { return from_int(1); }

FieldElement FieldSpec::gen() const {
    if (k_ < 2) throw std::invalid_argument("gen() requires an extension field");
    std::vector<std::uint32_t> rep(k_, 0);
    rep[1] = 1;
    return FieldElement(shared_from_this(), std::move(rep));
}

FieldElement FieldSpec::from_int(std::int64_t v) const {
    std::vector<std::uint32_t> rep(k_, 0);
    rep[0] = mod_p(v, p_);
    return FieldElement(shared_from_this(), std::move(rep));
}

FieldElement FieldSpec::from_coeffs(const std::vector<std::int64_t>& coeffs) const {
    if (coeffs.size() > k_) throw std::invalid_argument("coefficient vector longer than degree");
    std::vector<std::uint32_t> rep(k_, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) rep[i] = mod_p(coeffs[i], p_);
    return FieldElement(shared_from_this(), std::move(rep));
}

FieldElement FieldSpec::from_index(std::uint64_t idx) const {
    if (idx >= q_) throw std::invalid_argument("element index out of range");
    std::vector<std::uint32_t> rep(k_, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
        rep[i] = static_cast<std::uint32_t>(idx % p_);
        idx /= p_;
    }
    return FieldElement(shared_from_this(), std::move(rep));
}

std::vector<FieldElement> FieldSpec::enumerate() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (std::uint64_t i = 0; i < q_; ++i) out.push_back(from_index(i));
    return out;
}

bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
}

FieldSpecPtr field_new(std::uint32_t p, std::uint32_t k,
                       std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) throw CompositeModulus("p = " + std::to_string(p) + " is not prime");
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxFieldSize)
            throw std::invalid_argument("field size p^k exceeds the supported bound 2^16");
    }

    Poly mod;
    if (k == 1) {
        mod.clear();  // modulus is ignored for prime fields
    } else if (modulus.has_value()) {
        mod = *modulus;
        if (mod.size() != k + 1)
            throw ReducibleModulus("modulus must have degree k = " + std::to_string(k));
        for (auto& c : mod) c %= p;
        if (mod[k] != 1) throw ReducibleModulus("modulus must be monic");
        if (!poly_irreducible(mod, p, k)) throw ReducibleModulus("modulus factors over GF(p)");
    } else {
        mod = default_modulus(p, k, q);
    }
    return FieldSpecPtr(new FieldSpec(p, k, std::move(mod), q));
}

}  // namespace agfilt
