#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cog/errors.hpp"
#include "cog/prime_field.hpp"
#include "cog/rational.hpp"

// Exact arithmetic in the cyclotomic field Q(w), w = primitive p-th root of
// unity, on the basis {1, w, ..., w^(p-2)} with the reduction
// 1 + w + ... + w^(p-1) = 0.  For p = 2 this degenerates to Q with w = -1.

namespace cog {

class CycloRational {
public:
    explicit CycloRational(std::uint32_t p) : p_(check(p)), c_(p - 1) {}
    CycloRational(std::uint32_t p, const Rational& r) : p_(check(p)), c_(p - 1) { c_[0] = r; }
    CycloRational(std::uint32_t p, long n) : CycloRational(p, Rational(n)) {}

    // w^k reduced to the basis.
    static CycloRational omega_pow(std::uint32_t p, std::int64_t k) {
        CycloRational z(p);
        std::int64_t r = k % (std::int64_t)p;
        if (r < 0) r += p;
        if (r < (std::int64_t)p - 1) {
            z.c_[(std::size_t)r] = 1;
        } else { // w^(p-1) = -(1 + w + ... + w^(p-2))
            for (auto& q : z.c_) q = -1;
        }
        return z;
    }

    std::uint32_t p() const { return p_; }

    bool is_zero() const {
        for (const auto& q : c_)
            if (q != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    const Rational& rational_value() const {
        require(is_rational(), errc::invalid_argument, "cyclotomic value is not rational");
        return c_[0];
    }
    const Rational& coeff(std::size_t i) const { return c_.at(i); }

    CycloRational& operator+=(const CycloRational& o) {
        match(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    CycloRational& operator-=(const CycloRational& o) {
        match(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    CycloRational& operator*=(const Rational& r) {
        for (auto& q : c_) q *= r;
        return *this;
    }
    CycloRational operator-() const {
        CycloRational z(*this);
        for (auto& q : z.c_) q = -q;
        return z;
    }

    friend CycloRational operator+(CycloRational a, const CycloRational& b) { return a += b; }
    friend CycloRational operator-(CycloRational a, const CycloRational& b) { return a -= b; }
    friend CycloRational operator*(CycloRational a, const Rational& r) { return a *= r; }
    friend CycloRational operator*(const Rational& r, CycloRational a) { return a *= r; }

    friend CycloRational operator*(const CycloRational& a, const CycloRational& b) {
        a.match(b);
        std::uint32_t p = a.p_;
        std::size_t n = p - 1;
        // convolution up to w^(2p-4), then reduce exponents >= p-1
        std::vector<Rational> raw(2 * n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b.c_[j] == 0) continue;
                raw[i + j] += a.c_[i] * b.c_[j];
            }
        }
        CycloRational z(p);
        for (std::size_t k = 0; k < raw.size(); ++k) {
            if (raw[k] == 0) continue;
            std::size_t e = k;
            if (e >= p) e -= p; // w^p = 1
            if (e == n) {       // w^(p-1) = -(1 + ... + w^(p-2))
                for (auto& q : z.c_) q -= raw[k];
            } else {
                z.c_[e] += raw[k];
            }
        }
        return z;
    }
    CycloRational& operator*=(const CycloRational& o) { return *this = *this * o; }

    // complex conjugate: w -> w^(p-1)
    CycloRational conj() const {
        CycloRational z(p_, c_[0]);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            z += omega_pow(p_, (std::int64_t)p_ - (std::int64_t)i) * c_[i];
        }
        return z;
    }

    bool operator==(const CycloRational& o) const { return p_ == o.p_ && c_ == o.c_; }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            Rational q = c_[i];
            bool neg = q < 0;
            if (s.empty()) {
                if (neg) s += "-";
            } else {
                s += neg ? " - " : " + ";
            }
            Rational aq = abs(q);
            std::string mag = rational_to_string(aq);
            if (i == 0) {
                s += mag;
            } else {
                if (aq != 1) s += mag + "*";
                s += i == 1 ? "w" : "w^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

private:
    static std::uint32_t check(std::uint32_t p) {
        require(is_prime(p), errc::invalid_argument, "cyclotomic order must be prime");
        return p;
    }
    void match(const CycloRational& o) const {
        require(p_ == o.p_, errc::alphabet_mismatch, "cyclotomic order mismatch");
    }

    std::uint32_t p_;
    std::vector<Rational> c_;
};

// w^<u,v> for vectors over Z_p.
inline CycloRational omega_inner(const Alphabet& a, const Vec& u, const Vec& v) {
    return CycloRational::omega_pow(a.p, inner(a.field(), u, v));
}

} // namespace cog
