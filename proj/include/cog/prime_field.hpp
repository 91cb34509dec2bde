#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cog/errors.hpp"

// Prime fields Z_p and their finite vector alphabets (Z_p)^m.
// Vectors are coordinate lists; enumeration order is lexicographic with
// coordinate 0 varying fastest (index = sum coords[i] * p^i).

namespace cog {

using residue = std::uint32_t;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct PrimeField {
    std::uint32_t p;

    explicit PrimeField(std::uint32_t p_) : p(p_) {
        require(is_prime(p_), errc::invalid_argument, "field order " + std::to_string(p_) + " is not prime");
    }

    residue add(residue a, residue b) const { return (a + b) % p; }
    residue sub(residue a, residue b) const { return (a + p - b % p) % p; }
    residue neg(residue a) const { return a % p == 0 ? 0 : p - a % p; }
    residue mul(residue a, residue b) const {
        return static_cast<residue>((std::uint64_t)a * b % p);
    }
    residue inv(residue a) const {
        a %= p;
        require(a != 0, errc::invalid_argument, "inverse of zero");
        return pow(a, p - 2);
    }
    residue pow(residue a, std::uint64_t e) const {
        std::uint64_t base = a % p, acc = 1;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<residue>(acc);
    }
    bool operator==(const PrimeField&) const = default;
};

struct Alphabet {
    std::uint32_t p = 2;
    std::uint32_t dim = 1; // may be 0 (trivial alphabet with a single element)

    Alphabet() = default;
    Alphabet(std::uint32_t p_, std::uint32_t dim_) : p(p_), dim(dim_) {
        require(is_prime(p_), errc::invalid_argument, "alphabet field order must be prime");
        require(dim_ <= 63, errc::invalid_argument, "alphabet dimension too large");
    }

    std::uint64_t size() const {
        std::uint64_t s = 1;
        for (std::uint32_t i = 0; i < dim; ++i) {
            require(s <= (std::uint64_t(1) << 57) / p, errc::cap_exceeded, "alphabet size overflows");
            s *= p;
        }
        return s;
    }
    PrimeField field() const { return PrimeField(p); }
    bool operator==(const Alphabet&) const = default;
};

using Vec = std::vector<residue>; // element of (Z_p)^dim

inline std::uint64_t vec_index(const Alphabet& a, const Vec& v) {
    require(v.size() == a.dim, errc::alphabet_mismatch, "vector dimension mismatch");
    std::uint64_t idx = 0, mult = 1;
    for (std::uint32_t i = 0; i < a.dim; ++i) {
        require(v[i] < a.p, errc::invalid_argument, "coordinate out of range");
        idx += v[i] * mult;
        mult *= a.p;
    }
    return idx;
}

inline Vec index_vec(const Alphabet& a, std::uint64_t idx) {
    Vec v(a.dim);
    for (std::uint32_t i = 0; i < a.dim; ++i) {
        v[i] = static_cast<residue>(idx % a.p);
        idx /= a.p;
    }
    require(idx == 0, errc::invalid_argument, "index out of range for alphabet");
    return v;
}

inline residue inner(const PrimeField& f, const Vec& a, const Vec& b) {
    require(a.size() == b.size(), errc::alphabet_mismatch, "inner product dimension mismatch");
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (std::uint64_t)(a[i] % f.p) * (b[i] % f.p);
    return static_cast<residue>(s % f.p);
}

inline Vec vec_neg(const PrimeField& f, Vec v) {
    for (auto& c : v) c = f.neg(c);
    return v;
}

inline Vec vec_add(const PrimeField& f, const Vec& a, const Vec& b) {
    require(a.size() == b.size(), errc::alphabet_mismatch, "vector add dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

inline bool vec_is_zero(const Vec& v) {
    for (auto c : v)
        if (c != 0) return false;
    return true;
}

// Display label: concatenated digits for p <= 10 ("10" = (1,0)),
// dot-separated otherwise. Empty vector labels as "-".
inline std::string vec_label(const Alphabet& a, const Vec& v) {
    require(v.size() == a.dim, errc::alphabet_mismatch, "label dimension mismatch");
    if (v.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (a.p > 10 && i) s += '.';
        s += std::to_string(v[i]);
    }
    return s;
}

inline Vec label_vec(const Alphabet& a, const std::string& s) {
    Vec v;
    if (s == "-" || s.empty()) {
        require(a.dim == 0, errc::parse_error, "empty label for nonempty alphabet");
        return v;
    }
    if (a.p > 10) {
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t dot = s.find('.', pos);
            std::string part = s.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
            require(!part.empty(), errc::parse_error, "bad vector label '" + s + "'");
            v.push_back(static_cast<residue>(std::stoul(part)));
            if (dot == std::string::npos) break;
            pos = dot + 1;
        }
    } else {
        for (char c : s) {
            require(c >= '0' && c <= '9', errc::parse_error, "bad vector label '" + s + "'");
            v.push_back(static_cast<residue>(c - '0'));
        }
    }
    require(v.size() == a.dim, errc::parse_error, "label '" + s + "' has wrong dimension");
    for (auto c : v) require(c < a.p, errc::parse_error, "label digit out of range in '" + s + "'");
    return v;
}

} // namespace cog
