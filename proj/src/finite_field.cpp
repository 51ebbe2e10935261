#include "prmhull/finite_field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace prmhull {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    // p is prime, so a^(p-2) works and p is small.
    std::uint64_t r = 1, b = a % p;
    for (std::uint32_t k = p - 2; k; k >>= 1) {
        if (k & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

// Remainder of f modulo g over GF(p); g nonzero.
Poly poly_rem(Poly f, const Poly& g, std::uint32_t p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    const std::uint32_t lead_inv = inverse_mod(g.back(), p);
    while (f.size() > dg) {
        const std::size_t shift = f.size() - 1 - dg;
        const std::uint64_t factor = static_cast<std::uint64_t>(f.back()) * lead_inv % p;
        for (std::size_t i = 0; i <= dg; ++i) {
            const std::uint64_t sub = factor * g[i] % p;
            f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
        }
        trim(f);
    }
    return f;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
    Poly f = monic;
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < dd; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            Poly g(dd + 1, 0);
            std::uint64_t t = v;
            for (std::size_t i = 0; i < dd; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            g[dd] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

FieldContext::FieldContext(std::uint32_t p, std::uint32_t e) : p_(p), e_(e) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (e < 1) throw std::invalid_argument("field extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > 65536) throw std::invalid_argument("field size p^e exceeds 65536");
    }
    q_ = static_cast<std::uint32_t>(q);

    // Smallest monic irreducible: scan low coefficients as the base-p integer
    // sum c_i p^i, which orders them lexicographically from the top.
    std::uint64_t low_count = q_;
    for (std::uint64_t v = 0; v < low_count; ++v) {
        Poly f(e + 1, 0);
        std::uint64_t t = v;
        for (std::uint32_t i = 0; i < e; ++i) {
            f[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        f[e] = 1;
        if (is_irreducible_mod_p(f, p)) {
            modulus_ = std::move(f);
            break;
        }
    }
    if (modulus_.empty()) throw std::logic_error("no irreducible polynomial found");
    build_tables();
    build_simd_tables();
}

Field FieldContext::make(std::uint32_t p, std::uint32_t e) {
    return Field(new FieldContext(p, e));
}

Field field_of_order(std::uint32_t q) {
    if (q < 2) throw std::invalid_argument("field order must be >= 2");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t e = 0;
    for (std::uint32_t t = q; t > 1; t /= p, ++e)
        if (t % p != 0) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    static std::mutex mu;
    static std::map<std::uint32_t, Field> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[q];
    if (!slot) slot = FieldContext::make(p, e);
    return slot;
}

Symbol FieldContext::digit_add(Symbol a, Symbol b) const {
    if (p_ == 2) return static_cast<Symbol>(a ^ b);
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        const std::uint32_t da = a % p_, db = b % p_;
        out += ((da + db) % p_) * scale;
        a = static_cast<Symbol>(a / p_);
        b = static_cast<Symbol>(b / p_);
        scale *= p_;
    }
    return static_cast<Symbol>(out);
}

Symbol FieldContext::poly_mul(Symbol a, Symbol b) const {
    Poly fa(e_, 0), fb(e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
        fa[i] = a % p_;
        a = static_cast<Symbol>(a / p_);
        fb[i] = b % p_;
        b = static_cast<Symbol>(b / p_);
    }
    Poly prod(2 * e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i)
        for (std::uint32_t j = 0; j < e_; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(fa[i]) * fb[j]) % p_);
    Poly r = poly_rem(prod, modulus_, p_);
    std::uint32_t out = 0, scale = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
        out += r[i] * scale;
        scale *= p_;
    }
    return static_cast<Symbol>(out);
}

void FieldContext::build_tables() {
    neg_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
        std::uint32_t out = 0, scale = 1, t = a;
        for (std::uint32_t i = 0; i < e_; ++i) {
            out += ((p_ - t % p_) % p_) * scale;
            t /= p_;
            scale *= p_;
        }
        neg_[a] = static_cast<Symbol>(out);
    }
    if (q_ <= 256) {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b)
                add_table_[a * q_ + b] = digit_add(static_cast<Symbol>(a), static_cast<Symbol>(b));
    }

    const std::uint32_t order = q_ - 1;
    const auto factors = prime_factors(order);
    auto slow_pow = [this](Symbol g, std::uint32_t k) {
        Symbol r = 1;
        while (k) {
            if (k & 1) r = poly_mul(r, g);
            g = poly_mul(g, g);
            k >>= 1;
        }
        return r;
    };
    generator_ = 1;
    for (std::uint32_t g = 1; g < q_; ++g) {
        bool primitive = true;
        for (auto r : factors) {
            if (slow_pow(static_cast<Symbol>(g), order / r) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            generator_ = static_cast<Symbol>(g);
            break;
        }
    }

    log_.assign(q_, 0);
    exp_.assign(2 * static_cast<std::size_t>(order), 0);
    Symbol x = 1;
    for (std::uint32_t k = 0; k < order; ++k) {
        exp_[k] = x;
        exp_[k + order] = x;
        log_[x] = k;
        x = poly_mul(x, generator_);
    }
    if (x != 1) throw std::logic_error("generator search failed");
}

void FieldContext::build_simd_tables() {
    // Shuffle-table kernels cover characteristic 2 up to GF(256) and every
    // field with q <= 16 whose elements have at most two base-p digits.
    const bool char2 = p_ == 2 && q_ <= 256;
    const bool small = q_ <= 16 && e_ <= 2;
    if (!char2 && !small) return;
    simd_.p = static_cast<std::uint8_t>(p_);
    if (p_ == 2)
        simd_.add = SimdTables::AddMode::xor_bits;
    else if (e_ == 1)
        simd_.add = SimdTables::AddMode::mod_prime;
    else
        simd_.add = SimdTables::AddMode::two_digit;

    simd_.mul_lo.assign(q_, {});
    simd_.mul_hi.assign(q_, {});
    for (std::uint32_t c = 0; c < q_; ++c) {
        for (std::uint32_t s = 0; s < 16; ++s) {
            if (s < q_) simd_.mul_lo[c][s] = static_cast<std::uint8_t>(mul(static_cast<Symbol>(c), static_cast<Symbol>(s)));
            const std::uint32_t hi = s << 4;
            if (char2 && hi < q_) simd_.mul_hi[c][s] = static_cast<std::uint8_t>(mul(static_cast<Symbol>(c), static_cast<Symbol>(hi)));
        }
    }
    if (simd_.add == SimdTables::AddMode::two_digit) {
        for (std::uint32_t s = 0; s < q_; ++s) {
            simd_.digit_lo[s] = static_cast<std::uint8_t>(s % p_);
            simd_.digit_hi[s] = static_cast<std::uint8_t>(s / p_);
        }
    }
}

Symbol FieldContext::add(Symbol a, Symbol b) const {
    if (p_ == 2) return static_cast<Symbol>(a ^ b);
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
    if (e_ == 1) {
        const std::uint32_t s = static_cast<std::uint32_t>(a) + b;
        return static_cast<Symbol>(s >= p_ ? s - p_ : s);
    }
    return digit_add(a, b);
}

Symbol FieldContext::inv(Symbol a) const {
    if (a == 0) throw std::domain_error("division by zero in " + name());
    const std::uint32_t order = q_ - 1;
    return exp_[(order - log_[a]) % order];
}

Symbol FieldContext::pow(Symbol a, std::uint64_t k) const {
    if (k == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t order = q_ - 1;
    return exp_[static_cast<std::size_t>((log_[a] * (k % order)) % order)];
}

Symbol FieldContext::frobenius(Symbol a, std::uint32_t base_q) const {
    if (static_cast<std::uint64_t>(base_q) * base_q != q_)
        throw std::invalid_argument(name() + " is not GF(" + std::to_string(base_q) + "^2)");
    return pow(a, base_q);
}

std::string FieldContext::name() const { return "GF(" + std::to_string(q_) + ")"; }

FieldElement::FieldElement(Field field, Symbol value) : field_(std::move(field)), value_(value) {
    if (!field_) throw std::invalid_argument("field element without a field");
    if (value_ >= field_->size()) throw std::out_of_range("encoding out of range for " + field_->name());
}

const FieldContext& FieldElement::same_field(const FieldElement& o) const {
    if (field_ != o.field_ &&
        (field_->characteristic() != o.field_->characteristic() || field_->degree() != o.field_->degree()))
        throw std::invalid_argument("field mismatch: " + field_->name() + " vs " + o.field_->name());
    return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const { return {field_, same_field(o).add(value_, o.value_)}; }
FieldElement FieldElement::operator-(const FieldElement& o) const { return {field_, same_field(o).sub(value_, o.value_)}; }
FieldElement FieldElement::operator*(const FieldElement& o) const { return {field_, same_field(o).mul(value_, o.value_)}; }
FieldElement FieldElement::operator/(const FieldElement& o) const { return {field_, same_field(o).div(value_, o.value_)}; }
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t k) const { return {field_, field_->pow(value_, k)}; }
FieldElement FieldElement::frobenius(std::uint32_t base_q) const { return {field_, field_->frobenius(value_, base_q)}; }

bool FieldElement::operator==(const FieldElement& o) const {
    same_field(o);
    return value_ == o.value_;
}

}  // namespace prmhull
