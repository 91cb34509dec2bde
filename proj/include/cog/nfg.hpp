#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cog/errors.hpp"
#include "cog/polynomial.hpp"
#include "cog/prime_field.hpp"
#include "cog/tensor.hpp"

// Normal factor graphs: external variables appear in exactly one factor,
// internal variables in exactly two (slot occurrences counted, so a factor
// may touch the same internal variable twice -- a self-loop edge).
// Factor values are polynomials over Q(w), so indicator factors and
// weight-generating factors share one representation.

namespace cog {

struct VarDecl {
    std::string id;
    Alphabet alphabet;
    bool operator==(const VarDecl&) const = default;
};

struct Factor {
    std::string id;
    std::vector<std::string> vars; // slot order matches tensor axes
    FactorTensor<Polynomial> tensor;
    bool operator==(const Factor&) const = default;
};

struct Realization {
    std::uint32_t p = 2;
    std::vector<VarDecl> externals;
    std::vector<VarDecl> internals;
    std::vector<Factor> factors;
};

namespace detail {

struct VarInfo {
    const VarDecl* decl = nullptr;
    bool external = false;
    std::size_t index = 0;                                 // within its decl list
    std::vector<std::pair<std::size_t, std::size_t>> slots; // (factor idx, position)
};

inline std::map<std::string, VarInfo> index_vars(const Realization& r) {
    std::map<std::string, VarInfo> vars;
    auto declare = [&](const VarDecl& d, bool ext, std::size_t i) {
        require(!d.id.empty(), errc::invalid_argument, "empty variable id");
        require(d.alphabet.p == r.p, errc::alphabet_mismatch,
                "variable '" + d.id + "' has foreign field order");
        auto [it, fresh] = vars.try_emplace(d.id, VarInfo{&d, ext, i, {}});
        require(fresh, errc::invalid_argument, "duplicate variable id '" + d.id + "'");
    };
    for (std::size_t i = 0; i < r.externals.size(); ++i) declare(r.externals[i], true, i);
    for (std::size_t i = 0; i < r.internals.size(); ++i) declare(r.internals[i], false, i);

    std::set<std::string> factor_ids;
    for (std::size_t fi = 0; fi < r.factors.size(); ++fi) {
        const Factor& f = r.factors[fi];
        require(!f.id.empty(), errc::invalid_argument, "empty factor id");
        require(factor_ids.insert(f.id).second, errc::invalid_argument,
                "duplicate factor id '" + f.id + "'");
        require(f.vars.size() == f.tensor.axes.size(), errc::arity_mismatch,
                "factor '" + f.id + "' arity does not match its table");
        std::uint64_t want = axes_size(f.tensor.axes);
        require(f.tensor.table.size() == want, errc::arity_mismatch,
                "factor '" + f.id + "' table size mismatch");
        for (std::size_t pos = 0; pos < f.vars.size(); ++pos) {
            auto it = vars.find(f.vars[pos]);
            require(it != vars.end(), errc::invalid_argument,
                    "factor '" + f.id + "' references unknown variable '" + f.vars[pos] + "'");
            require(it->second.decl->alphabet == f.tensor.axes[pos], errc::alphabet_mismatch,
                    "factor '" + f.id + "' axis " + std::to_string(pos) +
                        " disagrees with variable '" + f.vars[pos] + "'");
            it->second.slots.emplace_back(fi, pos);
        }
        for (const auto& v : f.tensor.table)
            require(v.p() == r.p, errc::alphabet_mismatch,
                    "factor '" + f.id + "' has values over a foreign field order");
    }
    return vars;
}

} // namespace detail

class NormalFactorGraph {
public:
    // validates the degree restriction: external degree 1, internal degree 2
    static NormalFactorGraph validated(Realization r) {
        require(is_prime(r.p), errc::invalid_argument, "graph field order must be prime");
        auto vars = detail::index_vars(r);
        for (const auto& [id, info] : vars) {
            std::size_t deg = info.slots.size();
            if (info.external)
                require(deg == 1, errc::degree_violation,
                        "external variable '" + id + "' has degree " + std::to_string(deg));
            else
                require(deg == 2, errc::degree_violation,
                        "internal variable '" + id + "' has degree " + std::to_string(deg));
        }
        NormalFactorGraph g;
        g.r_ = std::move(r);
        return g;
    }

    const Realization& realization() const { return r_; }
    std::uint32_t p() const { return r_.p; }
    const std::vector<VarDecl>& externals() const { return r_.externals; }
    const std::vector<VarDecl>& internals() const { return r_.internals; }
    const std::vector<Factor>& factors() const { return r_.factors; }

private:
    Realization r_;
};

namespace detail {

inline std::string fresh_id(std::set<std::string>& used, const std::string& base) {
    std::string id = base;
    for (unsigned k = 2; !used.insert(id).second; ++k) id = base + "_" + std::to_string(k);
    return id;
}

inline FactorTensor<Polynomial> ones_tensor(std::uint32_t p, const Alphabet& a) {
    return make_tensor(std::vector<Alphabet>{a}, Polynomial(p, 1L));
}

} // namespace detail

// Replicate shared variables through equality indicator factors until the
// degree restriction holds; attach all-ones dummy factors to unconnected or
// degree-1 variables.  The partition function is preserved exactly.
inline NormalFactorGraph normalize(const Realization& r) {
    require(is_prime(r.p), errc::invalid_argument, "realization field order must be prime");
    auto vars = detail::index_vars(r);

    std::set<std::string> used;
    for (const auto& [id, _] : vars) used.insert(id);
    for (const auto& f : r.factors) used.insert(f.id);

    Realization out;
    out.p = r.p;
    out.externals = r.externals;
    out.internals = r.internals;
    out.factors = r.factors;

    Polynomial zero(r.p), one(r.p, 1L);
    for (const auto& [id, info] : vars) {
        const Alphabet& a = info.decl->alphabet;
        std::size_t deg = info.slots.size();
        if (info.external) {
            if (deg == 1) continue;
            if (deg == 0) {
                out.factors.push_back(
                    {detail::fresh_id(used, id + ".one"), {id}, detail::ones_tensor(r.p, a)});
                continue;
            }
            // replicas become internal; equality factor ties them to the original
            std::vector<std::string> eq_vars{id};
            for (std::size_t i = 0; i < deg; ++i) {
                std::string rep = detail::fresh_id(used, id + "." + std::to_string(i + 1));
                out.internals.push_back({rep, a});
                auto [fi, pos] = info.slots[i];
                out.factors[fi].vars[pos] = rep;
                eq_vars.push_back(rep);
            }
            out.factors.push_back({detail::fresh_id(used, id + ".eq"), eq_vars,
                                   equality_tensor(a, deg + 1, zero, one)});
        } else {
            if (deg == 2) continue;
            if (deg <= 1) {
                for (std::size_t i = deg; i < 2; ++i)
                    out.factors.push_back(
                        {detail::fresh_id(used, id + ".one"), {id}, detail::ones_tensor(r.p, a)});
                continue;
            }
            // degree >= 3: the variable dissolves into replicas + equality
            std::vector<std::string> eq_vars;
            for (std::size_t i = 0; i < deg; ++i) {
                std::string rep = detail::fresh_id(used, id + "." + std::to_string(i + 1));
                out.internals.push_back({rep, a});
                auto [fi, pos] = info.slots[i];
                out.factors[fi].vars[pos] = rep;
                eq_vars.push_back(rep);
            }
            out.factors.push_back({detail::fresh_id(used, id + ".eq"), eq_vars,
                                   equality_tensor(a, deg, zero, one)});
            auto it = std::find_if(out.internals.begin(), out.internals.end(),
                                   [&](const VarDecl& d) { return d.id == id; });
            out.internals.erase(it);
        }
    }
    return NormalFactorGraph::validated(std::move(out));
}

struct PartitionFunction {
    std::vector<VarDecl> externals;
    FactorTensor<Polynomial> z; // axes follow `externals`
};

enum class Engine { brute_force, elimination };

namespace detail {

struct SlotRef {
    bool external;
    std::size_t var_index;
};

// Reference evaluator: sum over all internal configurations.
inline PartitionFunction brute_force_partition(const Realization& r, std::uint64_t cap) {
    (void)index_vars(r); // validates ids, arities, alphabets
    std::vector<Alphabet> ext_axes, int_axes;
    for (const auto& d : r.externals) ext_axes.push_back(d.alphabet);
    for (const auto& d : r.internals) int_axes.push_back(d.alphabet);
    std::uint64_t ext_total = axes_size(ext_axes, cap);
    std::uint64_t int_total = axes_size(int_axes, cap);

    std::map<std::string, std::size_t> ext_pos, int_pos;
    for (std::size_t i = 0; i < r.externals.size(); ++i) ext_pos[r.externals[i].id] = i;
    for (std::size_t i = 0; i < r.internals.size(); ++i) int_pos[r.internals[i].id] = i;
    std::vector<std::vector<SlotRef>> slots(r.factors.size());
    for (std::size_t fi = 0; fi < r.factors.size(); ++fi)
        for (const auto& v : r.factors[fi].vars) {
            auto it = ext_pos.find(v);
            if (it != ext_pos.end())
                slots[fi].push_back({true, it->second});
            else
                slots[fi].push_back({false, int_pos.at(v)});
        }

    Polynomial zero(r.p);
    auto z = make_tensor(ext_axes, zero, cap);
    std::vector<std::uint64_t> ev(r.externals.size()), iv(r.internals.size());
    for (std::uint64_t e = 0; e < ext_total; ++e) {
        ev = decode_multi_index(ext_axes, e);
        Polynomial acc = zero;
        for (std::uint64_t s = 0; s < int_total; ++s) {
            iv = decode_multi_index(int_axes, s);
            Polynomial prod(r.p, 1L);
            bool dead = false;
            for (std::size_t fi = 0; fi < r.factors.size() && !dead; ++fi) {
                const Factor& f = r.factors[fi];
                std::uint64_t flat = 0, mult = 1;
                for (std::size_t pos = 0; pos < slots[fi].size(); ++pos) {
                    const SlotRef& sr = slots[fi][pos];
                    std::uint64_t val = sr.external ? ev[sr.var_index] : iv[sr.var_index];
                    flat += val * mult;
                    mult *= f.tensor.axes[pos].size();
                }
                const Polynomial& v = f.tensor.table[(std::size_t)flat];
                if (v.is_zero()) {
                    dead = true;
                    break;
                }
                prod *= v;
            }
            if (!dead) acc += prod;
        }
        z.table[(std::size_t)e] = acc;
    }
    return {r.externals, std::move(z)};
}

struct Node {
    std::vector<std::string> vars;
    FactorTensor<Polynomial> t;
};

inline Node contract_pair(const Node& a, std::size_t pa, const Node& b, std::size_t pb,
                          std::uint32_t p, std::uint64_t cap) {
    Node out;
    std::vector<Alphabet> axes;
    for (std::size_t i = 0; i < a.vars.size(); ++i)
        if (i != pa) {
            out.vars.push_back(a.vars[i]);
            axes.push_back(a.t.axes[i]);
        }
    for (std::size_t i = 0; i < b.vars.size(); ++i)
        if (i != pb) {
            out.vars.push_back(b.vars[i]);
            axes.push_back(b.t.axes[i]);
        }
    const Alphabet& av = a.t.axes[pa];
    Polynomial zero(p);
    out.t = make_tensor(axes, zero, cap);
    std::size_t na = a.vars.size(), nb = b.vars.size();
    std::vector<std::uint64_t> ia(na), ib(nb);
    for (std::uint64_t flat = 0; flat < out.t.table.size(); ++flat) {
        auto idx = decode_multi_index(out.t.axes, flat);
        std::size_t k = 0;
        for (std::size_t i = 0; i < na; ++i)
            if (i != pa) ia[i] = idx[k++];
        for (std::size_t i = 0; i < nb; ++i)
            if (i != pb) ib[i] = idx[k++];
        Polynomial acc = zero;
        for (std::uint64_t v = 0; v < av.size(); ++v) {
            ia[pa] = v;
            ib[pb] = v;
            const Polynomial& x = a.t.table[(std::size_t)encode_multi_index(a.t.axes, ia)];
            if (x.is_zero()) continue;
            const Polynomial& y = b.t.table[(std::size_t)encode_multi_index(b.t.axes, ib)];
            if (y.is_zero()) continue;
            acc += x * y;
        }
        out.t.table[(std::size_t)flat] = acc;
    }
    return out;
}

inline Node partial_trace(const Node& a, std::size_t p1, std::size_t p2, std::uint32_t p,
                          std::uint64_t cap) {
    Node out;
    std::vector<Alphabet> axes;
    for (std::size_t i = 0; i < a.vars.size(); ++i)
        if (i != p1 && i != p2) {
            out.vars.push_back(a.vars[i]);
            axes.push_back(a.t.axes[i]);
        }
    const Alphabet& av = a.t.axes[p1];
    Polynomial zero(p);
    out.t = make_tensor(axes, zero, cap);
    std::vector<std::uint64_t> ia(a.vars.size());
    for (std::uint64_t flat = 0; flat < out.t.table.size(); ++flat) {
        auto idx = decode_multi_index(out.t.axes, flat);
        std::size_t k = 0;
        for (std::size_t i = 0; i < a.vars.size(); ++i)
            if (i != p1 && i != p2) ia[i] = idx[k++];
        Polynomial acc = zero;
        for (std::uint64_t v = 0; v < av.size(); ++v) {
            ia[p1] = v;
            ia[p2] = v;
            acc += a.t.table[(std::size_t)encode_multi_index(a.t.axes, ia)];
        }
        out.t.table[(std::size_t)flat] = acc;
    }
    return out;
}

// Greedy tensor-network contraction: repeatedly eliminate the internal
// variable whose contraction yields the smallest intermediate tensor.
inline PartitionFunction eliminate_partition(const NormalFactorGraph& g, std::uint64_t cap) {
    const Realization& r = g.realization();
    std::uint32_t p = r.p;
    Polynomial zero(p);
    std::vector<Node> nodes;
    for (const auto& f : r.factors) nodes.push_back({f.vars, f.tensor});

    std::set<std::string> internal;
    std::map<std::string, Alphabet> alph;
    for (const auto& d : r.internals) {
        internal.insert(d.id);
        alph.emplace(d.id, d.alphabet);
    }

    while (!internal.empty()) {
        // locate each internal variable's two slots among current nodes
        std::string best;
        std::uint64_t best_cost = ~std::uint64_t(0);
        struct Loc {
            std::size_t n1, p1, n2, p2;
            bool same;
        };
        std::map<std::string, Loc> locs;
        for (const auto& v : internal) {
            std::vector<std::pair<std::size_t, std::size_t>> found;
            for (std::size_t ni = 0; ni < nodes.size() && found.size() < 2; ++ni)
                for (std::size_t pos = 0; pos < nodes[ni].vars.size() && found.size() < 2; ++pos)
                    if (nodes[ni].vars[pos] == v) found.emplace_back(ni, pos);
            Loc l{found[0].first, found[0].second, found[1].first, found[1].second,
                  found[0].first == found[1].first};
            locs[v] = l;
            std::uint64_t sz = alph.at(v).size();
            std::uint64_t cost;
            if (l.same)
                cost = nodes[l.n1].t.table.size() / (sz * sz);
            else
                cost = (std::uint64_t)nodes[l.n1].t.table.size() / sz * nodes[l.n2].t.table.size() /
                       sz;
            if (cost < best_cost) {
                best_cost = cost;
                best = v;
            }
        }
        Loc l = locs.at(best);
        if (l.same) {
            Node merged = partial_trace(nodes[l.n1], std::min(l.p1, l.p2), std::max(l.p1, l.p2), p,
                                        cap);
            nodes[l.n1] = std::move(merged);
        } else {
            Node merged = contract_pair(nodes[l.n1], l.p1, nodes[l.n2], l.p2, p, cap);
            std::size_t hi = std::max(l.n1, l.n2), lo = std::min(l.n1, l.n2);
            nodes.erase(nodes.begin() + hi);
            nodes.erase(nodes.begin() + lo);
            nodes.push_back(std::move(merged));
        }
        internal.erase(best);
    }

    // outer product of what remains, then axes into declaration order
    Node all;
    all.t = make_tensor({}, Polynomial(p, 1L), cap);
    for (const auto& nd : nodes) {
        Node merged;
        merged.vars = all.vars;
        merged.vars.insert(merged.vars.end(), nd.vars.begin(), nd.vars.end());
        std::vector<Alphabet> axes = all.t.axes;
        axes.insert(axes.end(), nd.t.axes.begin(), nd.t.axes.end());
        merged.t = make_tensor(axes, zero, cap);
        std::uint64_t n1 = all.t.table.size();
        for (std::uint64_t j = 0; j < nd.t.table.size(); ++j)
            for (std::uint64_t i = 0; i < n1; ++i)
                merged.t.table[(std::size_t)(i + n1 * j)] = all.t.table[(std::size_t)i] *
                                                            nd.t.table[(std::size_t)j];
        all = std::move(merged);
    }
    std::vector<std::size_t> perm(r.externals.size());
    for (std::size_t i = 0; i < r.externals.size(); ++i) {
        auto it = std::find(all.vars.begin(), all.vars.end(), r.externals[i].id);
        require(it != all.vars.end(), errc::invalid_argument, "lost external variable");
        perm[i] = (std::size_t)(it - all.vars.begin());
    }
    return {r.externals, permute_axes(all.t, perm)};
}

} // namespace detail

inline PartitionFunction partition_function(const NormalFactorGraph& g,
                                            Engine engine = Engine::elimination,
                                            std::uint64_t cap = kDefaultTensorCap) {
    if (engine == Engine::brute_force) return detail::brute_force_partition(g.realization(), cap);
    return detail::eliminate_partition(g, cap);
}

struct FragmentTensor {
    std::vector<VarDecl> axes; // externals of the fragment, first-appearance order
    FactorTensor<Polynomial> tensor;
};

// Contract a subset of factors: variables fully inside the subset are summed
// out; variables with a slot outside (or external in g) become axes.
inline FragmentTensor contract_fragment(const NormalFactorGraph& g,
                                        const std::vector<std::string>& factor_ids,
                                        std::uint64_t cap = kDefaultTensorCap) {
    const Realization& r = g.realization();
    auto vars = detail::index_vars(r);

    std::vector<std::size_t> chosen;
    std::set<std::size_t> chosen_set;
    for (const auto& id : factor_ids) {
        auto it = std::find_if(r.factors.begin(), r.factors.end(),
                               [&](const Factor& f) { return f.id == id; });
        require(it != r.factors.end(), errc::invalid_argument, "unknown factor id '" + id + "'");
        std::size_t fi = (std::size_t)(it - r.factors.begin());
        require(chosen_set.insert(fi).second, errc::invalid_argument,
                "factor id '" + id + "' repeated");
        chosen.push_back(fi);
    }

    // classify variables touched by the fragment, in first-appearance order
    Realization sub;
    sub.p = r.p;
    std::set<std::string> seen;
    for (auto fi : chosen)
        for (const auto& v : r.factors[fi].vars) {
            if (!seen.insert(v).second) continue;
            const auto& info = vars.at(v);
            bool boundary = info.external;
            for (const auto& [sfi, _] : info.slots)
                if (!chosen_set.count(sfi)) boundary = true;
            if (boundary)
                sub.externals.push_back({v, info.decl->alphabet});
            else
                sub.internals.push_back({v, info.decl->alphabet});
        }
    for (auto fi : chosen) sub.factors.push_back(r.factors[fi]);

    auto pf = detail::brute_force_partition(sub, cap);
    return {pf.externals, std::move(pf.z)};
}

// Dual graph: every factor is replaced by its multidimensional Fourier
// transform (forward kernel on every axis) and every internal edge gets a
// mid-edge sign inverter; the second slot's replica is named "<edge>.neg".
inline NormalFactorGraph dualize(const NormalFactorGraph& g) {
    const Realization& r = g.realization();
    auto vars = detail::index_vars(r);

    std::set<std::string> used;
    for (const auto& [id, _] : vars) used.insert(id);
    for (const auto& f : r.factors) used.insert(f.id);

    Realization out;
    out.p = r.p;
    out.externals = r.externals;
    out.internals = r.internals;
    Polynomial zero(r.p), one(r.p, 1L);
    out.factors.reserve(r.factors.size());
    for (const auto& f : r.factors)
        out.factors.push_back({f.id, f.vars, fourier_all_axes(f.tensor, Flavor::forward, zero)});

    for (const auto& d : r.internals) {
        const auto& info = vars.at(d.id);
        auto [fi, pos] = info.slots[1]; // second slot takes the negated replica
        std::string neg = detail::fresh_id(used, d.id + ".neg");
        out.internals.push_back({neg, d.alphabet});
        out.factors[fi].vars[pos] = neg;
        out.factors.push_back({detail::fresh_id(used, d.id + ".inv"),
                               {d.id, neg},
                               sign_inverter_tensor(d.alphabet, zero, one)});
    }
    return NormalFactorGraph::validated(std::move(out));
}

struct DualityReport {
    PartitionFunction z;        // of the primal graph
    PartitionFunction z_hat;    // multidimensional transform of z
    PartitionFunction z_dual;   // of the dualized graph
    Rational witness = 0;       // product of internal alphabet sizes
    bool pass = false;
};

// Z_dual == (prod_j |S_j|) * Zhat, exactly.
inline DualityReport verify_duality(const NormalFactorGraph& g,
                                    std::uint64_t cap = kDefaultTensorCap) {
    DualityReport rep;
    rep.z = detail::brute_force_partition(g.realization(), cap);
    rep.z_hat = {rep.z.externals, fourier_all_axes(rep.z.z, Flavor::forward, Polynomial(g.p()))};
    rep.z_dual = detail::brute_force_partition(dualize(g).realization(), cap);
    rep.witness = 1;
    for (const auto& d : g.internals()) rep.witness *= (long)d.alphabet.size();
    bool ok = rep.z_dual.z.axes == rep.z_hat.z.axes;
    if (ok)
        for (std::size_t i = 0; i < rep.z_hat.z.table.size(); ++i) {
            Polynomial scaled = rep.z_hat.z.table[i];
            scaled *= rep.witness;
            if (!(rep.z_dual.z.table[i] == scaled)) {
                ok = false;
                break;
            }
        }
    rep.pass = ok;
    return rep;
}

} // namespace cog
