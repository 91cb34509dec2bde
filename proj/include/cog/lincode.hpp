#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "cog/errors.hpp"
#include "cog/prime_field.hpp"

// Linear codes over Z_p with a symbol profile: coordinate k is a symbol from
// (Z_p)^(profile[k]); codewords are stored flattened to scalars.  The stored
// basis is the reduced row echelon form, so two codes are equal iff their
// representations are equal.

namespace cog {

inline constexpr std::uint64_t kDefaultEnumCap = std::uint64_t(1) << 24;

namespace detail {

// In-place RREF over Z_p; returns pivot columns. Drops zero rows.
inline std::vector<std::size_t> rref(const PrimeField& f, std::vector<std::vector<residue>>& rows) {
    std::vector<std::size_t> pivots;
    std::size_t n = rows.empty() ? 0 : rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        residue inv = f.inv(rows[r][c]);
        for (auto& x : rows[r]) x = f.mul(x, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            residue m = rows[i][c];
            for (std::size_t j = 0; j < n; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(m, rows[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return rows.empty() ? std::vector<std::size_t>{} : pivots;
}

} // namespace detail

class LinearCode {
public:
    // rows are flattened scalar words; entries reduced mod p
    static LinearCode from_generators(std::uint32_t p, std::vector<std::uint32_t> profile,
                                      std::vector<std::vector<residue>> rows) {
        PrimeField f(p);
        std::size_t n = 0;
        for (auto d : profile) n += d;
        for (auto& row : rows) {
            require(row.size() == n, errc::invalid_argument,
                    "generator length " + std::to_string(row.size()) + " != code length " +
                        std::to_string(n));
            for (auto& x : row) x %= p;
        }
        std::vector<std::size_t> piv = detail::rref(f, rows);
        LinearCode c;
        c.p_ = p;
        c.profile_ = std::move(profile);
        c.basis_ = std::move(rows);
        c.pivots_ = std::move(piv);
        return c;
    }

    static LinearCode zero_code(std::uint32_t p, std::vector<std::uint32_t> profile) {
        return from_generators(p, std::move(profile), {});
    }

    std::uint32_t p() const { return p_; }
    const std::vector<std::uint32_t>& profile() const { return profile_; }
    std::size_t n() const {
        return std::accumulate(profile_.begin(), profile_.end(), std::size_t(0));
    }
    std::size_t k() const { return basis_.size(); }
    const std::vector<std::vector<residue>>& basis() const { return basis_; }
    PrimeField field() const { return PrimeField(p_); }
    Alphabet symbol_alphabet(std::size_t i) const { return Alphabet(p_, profile_.at(i)); }

    std::uint64_t size(std::uint64_t cap = kDefaultEnumCap) const {
        std::uint64_t s = 1;
        for (std::size_t i = 0; i < k(); ++i) {
            require(s <= cap / p_, errc::cap_exceeded,
                    "codebook size exceeds cap " + std::to_string(cap));
            s *= p_;
        }
        return s;
    }

    bool contains(std::vector<residue> w) const {
        PrimeField f(p_);
        require(w.size() == n(), errc::invalid_argument, "word length mismatch");
        for (auto& x : w) x %= p_;
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            residue m = w[pivots_[r]];
            if (m == 0) continue;
            for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.sub(w[j], f.mul(m, basis_[r][j]));
        }
        for (auto x : w)
            if (x != 0) return false;
        return true;
    }

    // dual under the componentwise scalar inner product
    LinearCode dual() const {
        PrimeField f(p_);
        std::size_t nn = n(), kk = k();
        // free columns get unit entries; pivot columns get negated row entries
        std::vector<bool> is_pivot(nn, false);
        for (auto c : pivots_) is_pivot[c] = true;
        std::vector<std::vector<residue>> rows;
        for (std::size_t c = 0; c < nn; ++c) {
            if (is_pivot[c]) continue;
            std::vector<residue> v(nn, 0);
            v[c] = 1;
            for (std::size_t r = 0; r < kk; ++r) v[pivots_[r]] = f.neg(basis_[r][c]);
            rows.push_back(std::move(v));
        }
        return from_generators(p_, profile_, std::move(rows));
    }

    // Visit every codeword: message index counts up with the coefficient of
    // basis row 0 varying fastest.
    void enumerate(const std::function<void(const std::vector<residue>&)>& visit,
                   std::uint64_t cap = kDefaultEnumCap) const {
        PrimeField f(p_);
        std::uint64_t total = size(cap);
        std::vector<residue> word(n(), 0);
        std::vector<residue> msg(k(), 0);
        visit(word);
        for (std::uint64_t i = 1; i < total; ++i) {
            // increment base-p counter, updating the word incrementally
            for (std::size_t d = 0; d < msg.size(); ++d) {
                msg[d]++;
                if (msg[d] == p_) {
                    msg[d] = 0;
                    for (std::size_t j = 0; j < word.size(); ++j)
                        word[j] = f.add(word[j], basis_[d][j]); // wraps by adding p-(p-1)=1 times
                } else {
                    for (std::size_t j = 0; j < word.size(); ++j)
                        word[j] = f.add(word[j], basis_[d][j]);
                    break;
                }
            }
            visit(word);
        }
    }

    enum class WeightGranularity { scalar, symbol };

    // counts[w] = number of codewords of Hamming weight w
    std::vector<std::uint64_t> weight_distribution(
        WeightGranularity g = WeightGranularity::scalar,
        std::uint64_t cap = kDefaultEnumCap) const {
        std::size_t maxw = g == WeightGranularity::scalar ? n() : profile_.size();
        std::vector<std::uint64_t> counts(maxw + 1, 0);
        enumerate(
            [&](const std::vector<residue>& w) {
                std::size_t wt = 0;
                if (g == WeightGranularity::scalar) {
                    for (auto x : w) wt += x != 0;
                } else {
                    std::size_t off = 0;
                    for (auto d : profile_) {
                        bool nz = false;
                        for (std::size_t i = 0; i < d; ++i) nz |= w[off + i] != 0;
                        wt += nz;
                        off += d;
                    }
                }
                counts[wt]++;
            },
            cap);
        return counts;
    }

    bool operator==(const LinearCode& o) const {
        return p_ == o.p_ && profile_ == o.profile_ && basis_ == o.basis_;
    }

private:
    std::uint32_t p_ = 2;
    std::vector<std::uint32_t> profile_;
    std::vector<std::vector<residue>> basis_; // RREF
    std::vector<std::size_t> pivots_;
};

// same span regardless of profile split
inline bool span_equal(const LinearCode& a, const LinearCode& b) {
    return a.p() == b.p() && a.basis() == b.basis() && a.n() == b.n();
}

} // namespace cog
