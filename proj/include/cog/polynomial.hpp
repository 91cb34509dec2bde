#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cog/cyclo.hpp"
#include "cog/errors.hpp"

// Sparse multivariate polynomials over CycloRational with named
// indeterminates.  Terms are kept in a canonical sorted order (map keyed by
// monomial), so equality and serialization are deterministic.

namespace cog {

// name -> exponent, exponents always > 0
using Monomial = std::map<std::string, std::uint32_t>;

inline std::uint64_t monomial_degree(const Monomial& m) {
    std::uint64_t d = 0;
    for (const auto& [_, e] : m) d += e;
    return d;
}

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (const auto& [n, e] : b) r[n] += e;
    return r;
}

class Polynomial {
public:
    explicit Polynomial(std::uint32_t p) : p_(p) {}
    Polynomial(std::uint32_t p, const CycloRational& c) : p_(p) {
        require(c.p() == p, errc::alphabet_mismatch, "coefficient order mismatch");
        if (!c.is_zero()) terms_.emplace(Monomial{}, c);
    }
    Polynomial(std::uint32_t p, const Rational& r) : Polynomial(p, CycloRational(p, r)) {}
    Polynomial(std::uint32_t p, long n) : Polynomial(p, Rational(n)) {}

    static Polynomial variable(std::uint32_t p, const std::string& name, std::uint32_t exp = 1) {
        Polynomial f(p);
        if (exp == 0) return Polynomial(p, 1L);
        f.terms_.emplace(Monomial{{name, exp}}, CycloRational(p, 1));
        return f;
    }

    std::uint32_t p() const { return p_; }
    const std::map<Monomial, CycloRational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    CycloRational constant_value() const {
        require(is_constant(), errc::invalid_argument, "polynomial is not constant");
        return terms_.empty() ? CycloRational(p_) : terms_.begin()->second;
    }
    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& [m, _] : terms_) d = std::max(d, monomial_degree(m));
        return d;
    }
    std::uint32_t degree_in(const std::string& name) const {
        std::uint32_t d = 0;
        for (const auto& [m, _] : terms_) {
            auto it = m.find(name);
            if (it != m.end()) d = std::max(d, it->second);
        }
        return d;
    }
    CycloRational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? CycloRational(p_) : it->second;
    }

    void add_term(const Monomial& m, const CycloRational& c) {
        require(c.p() == p_, errc::alphabet_mismatch, "coefficient order mismatch");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        match(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        match(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Polynomial& operator*=(const CycloRational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [_, c] : terms_) c *= s;
        return *this;
    }
    Polynomial& operator*=(const Rational& r) { return *this *= CycloRational(p_, r); }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const CycloRational& s) { return a *= s; }
    friend Polynomial operator*(const CycloRational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(Polynomial a, const Rational& r) { return a *= r; }
    friend Polynomial operator*(const Rational& r, Polynomial a) { return a *= r; }
    Polynomial operator-() const {
        Polynomial z = *this;
        for (auto& [_, c] : z.terms_) c = -c;
        return z;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        return multiply_truncated(a, b, std::nullopt);
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    // product keeping only terms with total degree <= dmax (if given)
    static Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b,
                                         std::optional<std::uint64_t> dmax) {
        a.match(b);
        Polynomial z(a.p_);
        for (const auto& [ma, ca] : a.terms_) {
            std::uint64_t da = monomial_degree(ma);
            if (dmax && da > *dmax) continue;
            for (const auto& [mb, cb] : b.terms_) {
                if (dmax && da + monomial_degree(mb) > *dmax) continue;
                z.add_term(monomial_mul(ma, mb), ca * cb);
            }
        }
        return z;
    }

    Polynomial truncated(std::uint64_t dmax) const {
        Polynomial z(p_);
        for (const auto& [m, c] : terms_)
            if (monomial_degree(m) <= dmax) z.terms_.emplace(m, c);
        return z;
    }

    Polynomial pow(std::uint32_t e, std::optional<std::uint64_t> dmax = std::nullopt) const {
        Polynomial acc(p_, 1L);
        for (std::uint32_t i = 0; i < e; ++i) acc = multiply_truncated(acc, *this, dmax);
        return acc;
    }

    // Substitute whole polynomials for the named variables; unnamed variables
    // stay as themselves.
    Polynomial substituted(const std::map<std::string, Polynomial>& sub) const {
        Polynomial z(p_);
        for (const auto& [m, c] : terms_) {
            Polynomial term(p_, c);
            for (const auto& [name, exp] : m) {
                auto it = sub.find(name);
                Polynomial base = it != sub.end() ? it->second : variable(p_, name);
                term *= base.pow(exp);
            }
            z += term;
        }
        return z;
    }

    Polynomial renamed(const std::function<std::string(const std::string&)>& f) const {
        Polynomial z(p_);
        for (const auto& [m, c] : terms_) {
            Monomial nm;
            for (const auto& [name, exp] : m) {
                auto [it, fresh] = nm.try_emplace(f(name), exp);
                if (!fresh) it->second += exp;
            }
            z.add_term(nm, c);
        }
        return z;
    }

    // Evaluate with every variable set to 1 (sum of coefficients).
    CycloRational at_all_ones() const {
        CycloRational s(p_);
        for (const auto& [_, c] : terms_) s += c;
        return s;
    }

    bool operator==(const Polynomial& o) const { return p_ == o.p_ && terms_ == o.terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += " + ";
            std::string cs = c.str();
            bool simple = c.is_rational();
            std::string vars;
            for (const auto& [name, exp] : m) {
                if (!vars.empty()) vars += "*";
                vars += name;
                if (exp > 1) vars += "^" + std::to_string(exp);
            }
            if (vars.empty()) {
                s += simple ? cs : "(" + cs + ")";
            } else if (simple && c.rational_value() == 1) {
                s += vars;
            } else if (simple && c.rational_value() == -1) {
                s += "-" + vars;
            } else {
                s += (simple ? cs : "(" + cs + ")") + "*" + vars;
            }
        }
        return s;
    }

private:
    void match(const Polynomial& o) const {
        require(p_ == o.p_, errc::alphabet_mismatch, "polynomial base order mismatch");
    }

    std::uint32_t p_;
    std::map<Monomial, CycloRational> terms_;
};

// f == alpha * g for a positive rational alpha; returns alpha if so.
inline std::optional<Rational> poly_scale_equal(const Polynomial& f, const Polynomial& g) {
    if (f.p() != g.p()) return std::nullopt;
    if (f.is_zero() && g.is_zero()) return Rational(1);
    if (f.is_zero() || g.is_zero()) return std::nullopt;
    const auto& [mf, cf] = *f.terms().begin();
    const auto& [mg, cg] = *g.terms().begin();
    if (mf != mg) return std::nullopt;
    // candidate from the first nonzero basis slot of cg
    Rational alpha;
    bool found = false;
    for (std::size_t i = 0; i < (std::size_t)(f.p() - 1); ++i) {
        if (cg.coeff(i) != 0) {
            alpha = cf.coeff(i) / cg.coeff(i);
            found = true;
            break;
        }
    }
    if (!found || alpha <= 0) return std::nullopt;
    Polynomial scaled = g;
    scaled *= alpha;
    if (scaled == f) return alpha;
    return std::nullopt;
}

} // namespace cog
