#include "prmhull/quotient_poly.hpp"

#include <cctype>
#include <charconv>
#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace prmhull {

std::uint64_t Monomial::degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), std::uint64_t{0});
}

std::string Monomial::to_string(std::size_t first_index) const {
    std::string out;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(i + first_index);
        if (exponents[i] > 1) out += '^' + std::to_string(exponents[i]);
    }
    return out.empty() ? "1" : out;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) return a.nvars() < b.nvars();
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = a.nvars(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

SparsePolynomial::SparsePolynomial(Field field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {
    if (!field_) throw std::invalid_argument("polynomial without a field");
}

SparsePolynomial SparsePolynomial::from_monomial(Field field, const Monomial& m, Symbol coef) {
    SparsePolynomial f(std::move(field), m.nvars());
    f.add_term(m, coef);
    return f;
}

void SparsePolynomial::add_term(const Monomial& m, Symbol coef) {
    if (m.nvars() != nvars_) throw std::invalid_argument("monomial has wrong number of variables");
    if (coef >= field_->size()) throw std::out_of_range("coefficient out of range for " + field_->name());
    if (coef == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, coef);
    if (inserted) return;
    it->second = field_->add(it->second, coef);
    if (it->second == 0) terms_.erase(it);
}

bool SparsePolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const auto d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

std::uint64_t SparsePolynomial::degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

void SparsePolynomial::check_compatible(const SparsePolynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomials in different rings");
    if (field_->characteristic() != o.field_->characteristic() || field_->degree() != o.field_->degree())
        throw std::invalid_argument("polynomials over different fields");
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
    check_compatible(o);
    SparsePolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const { return *this + (-o); }

SparsePolynomial SparsePolynomial::operator-() const {
    SparsePolynomial r(field_, nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, field_->neg(c));
    return r;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
    check_compatible(o);
    SparsePolynomial r(field_, nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (std::size_t i = 0; i < nvars_; ++i) m.exponents[i] += mb[i];
            r.add_term(m, field_->mul(ca, cb));
        }
    }
    return r;
}

SparsePolynomial SparsePolynomial::scaled(Symbol c) const {
    SparsePolynomial r(field_, nvars_);
    if (c == 0) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace(m, field_->mul(a, c));
    return r;
}

SparsePolynomial SparsePolynomial::power_of_char(std::uint32_t r) const {
    std::uint32_t t = r;
    while (t % field_->characteristic() == 0) t /= field_->characteristic();
    if (r == 0 || t != 1) throw std::invalid_argument(std::to_string(r) + " is not a power of the characteristic");
    SparsePolynomial out(field_, nvars_);
    for (const auto& [m, c] : terms_) {
        Monomial e = m;
        for (auto& a : e.exponents) a *= r;
        out.add_term(e, field_->pow(c, r));
    }
    return out;
}

std::string SparsePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        const bool constant = m.degree() == 0;
        if (c != 1 || constant) {
            out += std::to_string(c);
            if (!constant) out += '*';
        }
        if (!constant) out += m.to_string();
    }
    return out;
}

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
    s = strip(s);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

void parse_term(std::string_view term, bool negative, SparsePolynomial& f) {
    term = strip(term);
    if (term.empty()) throw std::invalid_argument("empty term in polynomial");
    if (term == "0") return;
    const Field& field = f.field();
    Monomial m(std::vector<std::uint32_t>(f.nvars(), 0));
    Symbol coef = 1;
    while (!term.empty()) {
        const auto star = term.find('*');
        const std::string_view factor = strip(term.substr(0, star));
        term = star == std::string_view::npos ? std::string_view{} : term.substr(star + 1);
        if (factor.empty()) throw std::invalid_argument("empty factor in polynomial");
        if (factor.front() == 'x') {
            const auto caret = factor.find('^');
            const auto var = parse_uint(factor.substr(1, caret == std::string_view::npos ? factor.npos : caret - 1), "variable");
            if (var >= f.nvars()) throw std::invalid_argument("variable x" + std::to_string(var) + " out of range");
            const auto exp = caret == std::string_view::npos ? 1 : parse_uint(factor.substr(caret + 1), "exponent");
            m.exponents[var] += static_cast<std::uint32_t>(exp);
        } else {
            const auto c = parse_uint(factor, "coefficient");
            if (c >= field->size()) throw std::out_of_range("coefficient " + std::to_string(c) + " out of range for " + field->name());
            coef = field->mul(coef, static_cast<Symbol>(c));
        }
    }
    f.add_term(m, negative ? field->neg(coef) : coef);
}

}  // namespace

SparsePolynomial parse_polynomial(std::string_view text, const Field& field, std::size_t nvars) {
    SparsePolynomial f(field, nvars);
    auto skip_ws = [&](std::size_t i) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        return i;
    };
    std::size_t i = skip_ws(0);
    if (i == text.size()) throw std::invalid_argument("empty polynomial");
    bool first = true;
    while ((i = skip_ws(i)) < text.size()) {
        bool negative = false;
        if (!first) {
            if (text[i] != '+' && text[i] != '-') throw std::invalid_argument("expected '+' in polynomial '" + std::string(text) + "'");
            negative = text[i] == '-';
            i = skip_ws(i + 1);
        }
        if (i < text.size() && text[i] == '-') {
            negative = !negative;
            ++i;
        }
        const std::size_t j = std::min(text.find_first_of("+-", i), text.size());
        parse_term(text.substr(i, j - i), negative, f);
        i = j;
        first = false;
    }
    return f;
}

std::uint64_t overline(std::uint64_t z, std::uint64_t Q) {
    if (Q < 2) throw std::invalid_argument("overline needs Q >= 2");
    if (z == 0) return 0;
    return (z - 1) % (Q - 1) + 1;
}

SparsePolynomial reduce_mod_IP2(const SparsePolynomial& f) {
    if (f.nvars() != 3) throw std::invalid_argument("reduce_mod_IP2 needs 3 variables");
    const std::uint64_t Q = f.field()->size();
    const Field& F = f.field();
    SparsePolynomial out(F, 3);
    auto mono = [](std::uint64_t a0, std::uint64_t a1, std::uint64_t a2) {
        return Monomial{static_cast<std::uint32_t>(a0), static_cast<std::uint32_t>(a1), static_cast<std::uint32_t>(a2)};
    };
    for (const auto& [m, c] : f.terms()) {
        const auto b1 = overline(m[1], Q), b2 = overline(m[2], Q);
        if (m[0] == 0) {
            out.add_term(mono(0, b1, b2), c);
        } else if (m[1] == 0) {
            out.add_term(mono(1, 0, b2), c);
        } else {
            const Symbol nc = F->neg(c);
            out.add_term(mono(0, b1, b2), c);
            out.add_term(mono(1, 0, b2), c);
            out.add_term(mono(0, 0, b2), nc);
            out.add_term(mono(1, 1, 0), c);
            out.add_term(mono(1, 0, 0), nc);
            out.add_term(mono(0, 1, 0), nc);
            out.add_term(mono(0, 0, 0), c);
        }
    }
    return out;
}

SparsePolynomial reduce_mod_IP2(const SparsePolynomial& f, std::uint32_t Q) {
    if (f.field()->size() != Q)
        throw std::invalid_argument("reduce_mod_IP2: polynomial is over " + f.field()->name() + ", not GF(" + std::to_string(Q) + ")");
    return reduce_mod_IP2(f);
}

std::vector<Symbol> evaluate(const Monomial& m, const PointSet& pts) {
    if (m.nvars() != pts.arity()) throw std::invalid_argument("evaluate: arity mismatch");
    const FieldContext& F = *pts.field();
    std::vector<Symbol> out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto p = pts.point(i);
        Symbol v = 1;
        for (std::size_t j = 0; j < p.size() && v != 0; ++j)
            if (m[j] != 0) v = F.mul(v, F.pow(p[j], m[j]));
        out[i] = v;
    }
    return out;
}

std::vector<Symbol> evaluate(const SparsePolynomial& f, const PointSet& pts) {
    if (f.nvars() != pts.arity()) throw std::invalid_argument("evaluate: arity mismatch");
    const FieldContext& F = *pts.field();
    if (F.characteristic() != f.field()->characteristic() || F.degree() != f.field()->degree())
        throw std::invalid_argument("evaluate: polynomial and points over different fields");
    std::vector<Symbol> out(pts.size(), 0);
    for (const auto& [m, c] : f.terms()) {
        const auto v = evaluate(m, pts);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(out[i], F.mul(c, v[i]));
    }
    return out;
}

std::vector<Monomial> HomogeneousBasis::all() const {
    std::vector<Monomial> out = A1;
    out.insert(out.end(), A2.begin(), A2.end());
    out.insert(out.end(), A3.begin(), A3.end());
    return out;
}

HomogeneousBasis basis_Ad(std::uint32_t Q, std::uint32_t d) {
    if (Q < 2) throw std::invalid_argument("basis_Ad: Q must be >= 2");
    if (d < 1 || d > 2 * (Q - 1))
        throw std::invalid_argument("basis_Ad: degree " + std::to_string(d) + " outside [1, " + std::to_string(2 * (Q - 1)) + "]");
    HomogeneousBasis b;
    for (std::uint32_t a0 = d; a0 >= 1; --a0) {
        const std::uint32_t rest = d - a0;
        for (std::uint32_t a1 = std::min(rest, Q - 1) + 1; a1-- > 0;) {
            const std::uint32_t a2 = rest - a1;
            if (a2 <= Q - 1) b.A1.push_back({a0, a1, a2});
        }
    }
    for (std::uint32_t a1 = d; a1 >= 1; --a1)
        if (d - a1 <= Q - 1) b.A2.push_back({0, a1, d - a1});
    b.A3.push_back({0, 0, d});
    return b;
}

std::vector<Monomial> standard_basis_P2(std::uint32_t Q) {
    std::vector<Monomial> out;
    for (std::uint32_t a1 = 0; a1 < Q; ++a1)
        for (std::uint32_t a2 = 0; a2 < Q; ++a2) out.push_back({0, a1, a2});
    for (std::uint32_t a2 = 0; a2 < Q; ++a2) out.push_back({1, 0, a2});
    out.push_back({1, 1, 0});
    return out;
}

std::vector<Monomial> homogeneous_monomials(std::size_t nvars, std::uint32_t d) {
    std::vector<Monomial> out;
    if (nvars == 0) return out;
    std::vector<std::uint32_t> e(nvars, 0);
    // Recursive fill: e[i] takes every value that leaves room for the rest.
    auto fill = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
        if (i + 1 == nvars) {
            e[i] = left;
            out.emplace_back(e);
            return;
        }
        for (std::uint32_t a = left + 1; a-- > 0;) {
            e[i] = a;
            self(self, i + 1, left - a);
        }
    };
    fill(fill, 0, d);
    return out;
}

std::vector<SparsePolynomial> vanishing_ideal_generators(const Field& field, unsigned m) {
    const std::size_t n = m + 1;
    const std::uint32_t q = field->size();
    const Symbol minus_one = field->neg(1);
    auto var = [&](std::size_t i, std::uint32_t power) {
        std::vector<std::uint32_t> e(n, 0);
        e[i] = power;
        return SparsePolynomial::from_monomial(field, Monomial(e));
    };
    const SparsePolynomial one = SparsePolynomial::from_monomial(field, Monomial(std::vector<std::uint32_t>(n, 0)));
    auto minus_one_term = [&](std::size_t i) {
        auto f = var(i, 1);
        f.add_term(Monomial(std::vector<std::uint32_t>(n, 0)), minus_one);
        return f;
    };

    std::vector<SparsePolynomial> gens;
    gens.push_back(var(0, 2) - var(0, 1));
    for (std::size_t i = 1; i < n; ++i) gens.push_back(var(i, q) - var(i, 1));
    SparsePolynomial prefix = one;  // (x0 - 1)...(x_{j-1} - 1)
    for (std::size_t j = 1; j < n; ++j) {
        prefix = prefix * minus_one_term(j - 1);
        if (j + 1 < n) gens.push_back(prefix * (var(j, 2) - var(j, 1)));
    }
    gens.push_back(prefix * minus_one_term(n - 1));
    return gens;
}

}  // namespace prmhull
