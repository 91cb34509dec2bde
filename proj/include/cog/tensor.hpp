#pragma once

#include <cstdint>
#include <vector>

#include "cog/cyclo.hpp"
#include "cog/errors.hpp"
#include "cog/matrix.hpp"
#include "cog/prime_field.hpp"

// Dense tensors ("factors") over finite vector alphabets.  The flat layout
// puts axis 0 fastest, matching vec_index: flat = i0 + |A0|*(i1 + |A1|*...).

namespace cog {

inline constexpr std::uint64_t kDefaultTensorCap = std::uint64_t(1) << 20;

inline std::uint64_t axes_size(const std::vector<Alphabet>& axes,
                               std::uint64_t cap = kDefaultTensorCap) {
    std::uint64_t total = 1;
    for (const auto& a : axes) {
        std::uint64_t s = a.size();
        require(s == 0 || total <= cap / s, errc::cap_exceeded,
                "tensor size exceeds cap " + std::to_string(cap));
        total *= s;
    }
    return total;
}

template <class T>
struct FactorTensor {
    std::vector<Alphabet> axes;
    std::vector<T> table; // size = prod |axes|

    bool operator==(const FactorTensor&) const = default;
};

template <class T>
FactorTensor<T> make_tensor(std::vector<Alphabet> axes, const T& fill,
                            std::uint64_t cap = kDefaultTensorCap) {
    std::uint64_t total = axes_size(axes, cap);
    return FactorTensor<T>{std::move(axes), std::vector<T>((std::size_t)total, fill)};
}

inline std::vector<std::uint64_t> decode_multi_index(const std::vector<Alphabet>& axes,
                                                     std::uint64_t flat) {
    std::vector<std::uint64_t> idx(axes.size());
    for (std::size_t i = 0; i < axes.size(); ++i) {
        std::uint64_t s = axes[i].size();
        idx[i] = flat % s;
        flat /= s;
    }
    return idx;
}

inline std::uint64_t encode_multi_index(const std::vector<Alphabet>& axes,
                                        const std::vector<std::uint64_t>& idx) {
    require(idx.size() == axes.size(), errc::arity_mismatch, "multi-index arity mismatch");
    std::uint64_t flat = 0, mult = 1;
    for (std::size_t i = 0; i < axes.size(); ++i) {
        flat += idx[i] * mult;
        mult *= axes[i].size();
    }
    return flat;
}

// [[all axes carry the same value]]
template <class T>
FactorTensor<T> equality_tensor(const Alphabet& a, std::size_t arity, const T& zero, const T& one) {
    require(arity >= 1, errc::invalid_argument, "equality tensor needs arity >= 1");
    auto t = make_tensor(std::vector<Alphabet>(arity, a), zero);
    for (std::uint64_t v = 0; v < a.size(); ++v) {
        std::uint64_t flat = 0, mult = 1;
        for (std::size_t i = 0; i < arity; ++i) {
            flat += v * mult;
            mult *= a.size();
        }
        t.table[(std::size_t)flat] = one;
    }
    return t;
}

// [[second = -first]]
template <class T>
FactorTensor<T> sign_inverter_tensor(const Alphabet& a, const T& zero, const T& one) {
    auto t = make_tensor(std::vector<Alphabet>{a, a}, zero);
    PrimeField f = a.field();
    for (std::uint64_t v = 0; v < a.size(); ++v) {
        Vec neg = vec_neg(f, index_vec(a, v));
        t.table[(std::size_t)(v + a.size() * vec_index(a, neg))] = one;
    }
    return t;
}

enum class Flavor { forward, conjugate }; // kernel w^<u,v> vs w^-<u,v>

// |A| x |A| matrix with entry [ahat][a] = w^(+-<ahat, a>), rows/cols in
// enumeration order.  Symmetric.
inline Matrix<CycloRational> fourier_matrix(const Alphabet& a, Flavor flavor = Flavor::forward) {
    std::uint64_t n = a.size();
    Matrix<CycloRational> m((std::size_t)n, (std::size_t)n, CycloRational(a.p));
    PrimeField f = a.field();
    for (std::uint64_t r = 0; r < n; ++r) {
        Vec vr = index_vec(a, r);
        for (std::uint64_t c = 0; c < n; ++c) {
            std::int64_t e = inner(f, vr, index_vec(a, c));
            if (flavor == Flavor::conjugate) e = -e;
            m.at((std::size_t)r, (std::size_t)c) = CycloRational::omega_pow(a.p, e);
        }
    }
    return m;
}

// Apply the Fourier kernel along one axis: out[.., ahat, ..] =
// sum_a w^(+-<ahat,a>) in[.., a, ..].
template <class T>
FactorTensor<T> fourier_axis(const FactorTensor<T>& t, std::size_t axis, Flavor flavor,
                             const T& zero) {
    require(axis < t.axes.size(), errc::invalid_argument, "axis out of range");
    const Alphabet& a = t.axes[axis];
    std::uint64_t n = a.size();
    std::uint64_t lo = 1, hi = 1;
    for (std::size_t i = 0; i < axis; ++i) lo *= t.axes[i].size();
    for (std::size_t i = axis + 1; i < t.axes.size(); ++i) hi *= t.axes[i].size();

    auto kernel = fourier_matrix(a, flavor);
    FactorTensor<T> out{t.axes, std::vector<T>(t.table.size(), zero)};
    for (std::uint64_t h = 0; h < hi; ++h)
        for (std::uint64_t l = 0; l < lo; ++l)
            for (std::uint64_t r = 0; r < n; ++r) {
                T acc = zero;
                for (std::uint64_t c = 0; c < n; ++c) {
                    const T& v = t.table[(std::size_t)(l + lo * (c + n * h))];
                    if (v == zero) continue;
                    acc += v * kernel.at((std::size_t)r, (std::size_t)c);
                }
                out.table[(std::size_t)(l + lo * (r + n * h))] = acc;
            }
    return out;
}

// Multidimensional transform: the kernel applied along every axis.
template <class T>
FactorTensor<T> fourier_all_axes(FactorTensor<T> t, Flavor flavor, const T& zero) {
    for (std::size_t i = 0; i < t.axes.size(); ++i) t = fourier_axis(t, i, flavor, zero);
    return t;
}

// new axis i = old axis perm[i]
template <class T>
FactorTensor<T> permute_axes(const FactorTensor<T>& t, const std::vector<std::size_t>& perm) {
    require(perm.size() == t.axes.size(), errc::arity_mismatch, "permutation arity mismatch");
    {
        std::vector<bool> seen(perm.size(), false);
        for (auto i : perm) {
            require(i < perm.size() && !seen[i], errc::invalid_argument, "not a permutation");
            seen[i] = true;
        }
    }
    std::vector<Alphabet> axes(perm.size(), Alphabet(t.axes.empty() ? 2 : t.axes[0].p, 0));
    for (std::size_t i = 0; i < perm.size(); ++i) axes[i] = t.axes.at(perm[i]);
    FactorTensor<T> out{axes, t.table};
    for (std::uint64_t flat = 0; flat < out.table.size(); ++flat) {
        auto idx = decode_multi_index(out.axes, flat);
        std::vector<std::uint64_t> old(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) old[perm[i]] = idx[i];
        out.table[(std::size_t)flat] = t.table[(std::size_t)encode_multi_index(t.axes, old)];
    }
    return out;
}

} // namespace cog
