#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cog/convcode.hpp"
#include "cog/errors.hpp"
#include "cog/lincode.hpp"
#include "cog/nfg.hpp"
#include "cog/polynomial.hpp"
#include "cog/wgf.hpp"

// JSON forms for the artifact's value types.  Emission is canonical: object
// keys sort, term lists follow the polynomial's canonical order, and rational
// numbers are exact decimal-free strings.

namespace cog {
namespace io {

using nlohmann::json;

// json stores in-memory integer literals signed; accept any integer >= 0
inline std::uint64_t uint_from_json(const json& j, const char* what) {
    require(j.is_number_integer() || j.is_number_unsigned(), errc::parse_error,
            std::string(what) + " must be a non-negative integer");
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    std::int64_t v = j.get<std::int64_t>();
    require(v >= 0, errc::parse_error, std::string(what) + " must be a non-negative integer");
    return (std::uint64_t)v;
}

// ---- rationals and cyclotomic coefficients --------------------------------

inline json coeff_to_json(const CycloRational& c) {
    std::uint32_t p = c.p();
    Integer den(1);
    for (std::size_t i = 0; i + 1 < p; ++i) den = lcm(den, c.coeff(i).get_den());
    std::vector<Integer> nums;
    Integer g(0);
    for (std::size_t i = 0; i + 1 < p; ++i) {
        Integer n = c.coeff(i).get_num() * (den / c.coeff(i).get_den());
        g = gcd(g, n);
        nums.push_back(n);
    }
    g = gcd(g, den);
    if (g != 0 && g != 1) {
        den /= g;
        for (auto& n : nums) n /= g;
    }
    json num = json::array();
    for (const auto& n : nums) num.push_back(n.get_str());
    return json{{"num", num}, {"den", den.get_str()}};
}

inline CycloRational coeff_from_json(std::uint32_t p, const json& j) {
    require(j.is_object() && j.contains("num") && j.contains("den"), errc::parse_error,
            "coefficient must be {num, den}");
    const json& num = j.at("num");
    require(num.is_array() && num.size() == p - 1, errc::parse_error,
            "coefficient needs " + std::to_string(p - 1) + " numerator slots");
    require(j.at("den").is_string(), errc::parse_error, "denominator must be a string");
    Rational den = rational_from_string(j.at("den").get<std::string>());
    require(den > 0 && den.get_den() == 1, errc::parse_error,
            "denominator must be a positive integer");
    CycloRational c(p);
    for (std::size_t i = 0; i + 1 < p; ++i) {
        require(num[i].is_string(), errc::parse_error, "numerators must be strings");
        Rational n = rational_from_string(num[i].get<std::string>());
        require(n.get_den() == 1, errc::parse_error, "numerators must be integers");
        c += CycloRational::omega_pow(p, (std::int64_t)i) * (n / den);
    }
    return c;
}

// ---- polynomials -----------------------------------------------------------

inline json poly_terms_to_json(const Polynomial& f) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) {
        json mon = json::object();
        for (const auto& [name, e] : m) mon[name] = e;
        terms.push_back(json{{"coeff", coeff_to_json(c)}, {"monomial", mon}});
    }
    return terms;
}

inline json poly_to_json(const Polynomial& f) {
    return json{{"p", f.p()}, {"terms", poly_terms_to_json(f)}};
}

inline Polynomial poly_from_terms_json(std::uint32_t p, const json& terms) {
    require(terms.is_array(), errc::parse_error, "terms must be an array");
    Polynomial f(p);
    for (const auto& t : terms) {
        require(t.is_object() && t.contains("coeff") && t.contains("monomial"), errc::parse_error,
                "term must be {coeff, monomial}");
        Monomial m;
        for (const auto& [name, e] : t.at("monomial").items()) {
            std::uint64_t exp = uint_from_json(e, "monomial exponent");
            require(exp > 0, errc::parse_error, "monomial exponents must be positive integers");
            m[name] = (std::uint32_t)exp;
        }
        f.add_term(m, coeff_from_json(p, t.at("coeff")));
    }
    return f;
}

inline Polynomial poly_from_json(const json& j) {
    require(j.is_object() && j.contains("p") && j.contains("terms"), errc::parse_error,
            "polynomial must be {p, terms}");
    std::uint32_t p = (std::uint32_t)uint_from_json(j.at("p"), "p");
    require(is_prime(p), errc::parse_error, "p must be prime");
    return poly_from_terms_json(p, j.at("terms"));
}

// table entry: integer | rational string | {terms: [...]} | full polynomial
inline json poly_entry_to_json(const Polynomial& f) {
    if (f.is_constant()) {
        CycloRational c = f.constant_value();
        if (c.is_rational()) {
            const Rational& q = c.rational_value();
            if (q.get_den() == 1 && q.get_num().fits_slong_p())
                return json((std::int64_t)q.get_num().get_si());
            return json(rational_to_string(q));
        }
    }
    return json{{"terms", poly_terms_to_json(f)}};
}

inline Polynomial poly_entry_from_json(std::uint32_t p, const json& j) {
    if (j.is_number_integer()) return Polynomial(p, Rational((long)j.get<std::int64_t>()));
    if (j.is_string()) return Polynomial(p, rational_from_string(j.get<std::string>()));
    require(j.is_object() && j.contains("terms"), errc::parse_error,
            "table entry must be integer, rational string, or {terms}");
    if (j.contains("p"))
        require(uint_from_json(j.at("p"), "p") == p, errc::parse_error,
                "entry base order disagrees with container");
    return poly_from_terms_json(p, j.at("terms"));
}

// ---- linear codes ----------------------------------------------------------

inline json code_to_json(const LinearCode& c) {
    json gens = json::array();
    for (const auto& row : c.basis()) {
        json word = json::array();
        std::size_t off = 0;
        for (auto d : c.profile()) {
            json sym = json::array();
            for (std::size_t i = 0; i < d; ++i) sym.push_back(row[off + i]);
            word.push_back(sym);
            off += d;
        }
        gens.push_back(word);
    }
    json prof = json::array();
    for (auto d : c.profile()) prof.push_back(d);
    return json{{"p", c.p()}, {"profile", prof}, {"generators", gens}};
}

inline LinearCode code_from_json(const json& j) {
    require(j.is_object() && j.contains("p") && j.contains("profile") && j.contains("generators"),
            errc::parse_error, "code must be {p, profile, generators}");
    std::uint32_t p = (std::uint32_t)uint_from_json(j.at("p"), "p");
    require(is_prime(p), errc::parse_error, "p must be prime");
    std::vector<std::uint32_t> profile;
    for (const auto& d : j.at("profile"))
        profile.push_back((std::uint32_t)uint_from_json(d, "profile entry"));
    std::vector<std::vector<residue>> rows;
    for (const auto& word : j.at("generators")) {
        require(word.is_array() && word.size() == profile.size(), errc::parse_error,
                "generator must list one symbol per position");
        std::vector<residue> row;
        for (std::size_t k = 0; k < profile.size(); ++k) {
            const json& sym = word[k];
            require(sym.is_array() && sym.size() == profile[k], errc::parse_error,
                    "symbol " + std::to_string(k) + " has wrong dimension");
            for (const auto& x : sym) {
                std::uint64_t v = uint_from_json(x, "coordinate");
                require(v < p, errc::parse_error, "coordinates must lie in [0, p)");
                row.push_back((residue)v);
            }
        }
        rows.push_back(std::move(row));
    }
    return LinearCode::from_generators(p, std::move(profile), std::move(rows));
}

inline json section_to_json(const TrellisSection& s) { return code_to_json(s.code); }

inline TrellisSection section_from_json(const json& j) {
    return TrellisSection::from_code(code_from_json(j));
}

// ---- encoders --------------------------------------------------------------

inline TrellisSection encoder_from_json(const json& j) {
    require(j.is_object() && j.contains("p") && j.contains("n") && j.contains("inputs"),
            errc::parse_error, "encoder must be {p, n, inputs}");
    std::uint32_t p = (std::uint32_t)uint_from_json(j.at("p"), "p");
    require(is_prime(p), errc::parse_error, "p must be prime");
    std::uint32_t n = (std::uint32_t)uint_from_json(j.at("n"), "n");
    std::vector<std::vector<Vec>> responses;
    require(j.at("inputs").is_array() && !j.at("inputs").empty(), errc::parse_error,
            "encoder needs at least one input");
    for (const auto& in : j.at("inputs")) {
        require(in.is_object() && in.contains("response"), errc::parse_error,
                "input must be {response}");
        std::vector<Vec> resp;
        for (const auto& sym : in.at("response")) {
            require(sym.is_array() && sym.size() == n, errc::parse_error,
                    "response symbols need " + std::to_string(n) + " coordinates");
            Vec v;
            for (const auto& x : sym) {
                std::uint64_t vv = uint_from_json(x, "coordinate");
                require(vv < p, errc::parse_error, "coordinates must lie in [0, p)");
                v.push_back((residue)vv);
            }
            resp.push_back(std::move(v));
        }
        responses.push_back(std::move(resp));
    }
    return section_from_generators(p, std::move(responses));
}

// ---- weight adjacency matrices ----------------------------------------------

inline json wam_to_json(const WeightAdjacencyMatrix& w) {
    json rows = json::array(), cols = json::array();
    for (const auto& v : w.row_labels) rows.push_back(vec_label(w.row_state, v));
    for (const auto& v : w.col_labels) cols.push_back(vec_label(w.col_state, v));
    json entries = json::array();
    for (std::size_t i = 0; i < w.m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < w.m.cols(); ++j) r.push_back(poly_entry_to_json(w.m.at(i, j)));
        entries.push_back(r);
    }
    return json{{"kind", wgf_kind_name(w.kind)},
                {"p", w.p},
                {"row_dim", w.row_state.dim},
                {"col_dim", w.col_state.dim},
                {"symbol_dim", w.symbol.dim},
                {"rows", rows},
                {"cols", cols},
                {"entries", entries}};
}

inline WgfKind wgf_kind_from_string(const std::string& s) {
    if (s == "exact") return WgfKind::exact;
    if (s == "complete") return WgfKind::complete;
    if (s == "hamming") return WgfKind::hamming;
    fail(errc::parse_error, "unknown wgf kind '" + s + "'");
}

inline WeightAdjacencyMatrix wam_from_json(const json& j) {
    for (const char* key : {"kind", "p", "row_dim", "col_dim", "symbol_dim", "rows", "cols",
                            "entries"})
        require(j.is_object() && j.contains(key), errc::parse_error,
                std::string("wam is missing '") + key + "'");
    std::uint32_t p = (std::uint32_t)uint_from_json(j.at("p"), "p");
    require(is_prime(p), errc::parse_error, "p must be prime");
    WeightAdjacencyMatrix w;
    require(j.at("kind").is_string(), errc::parse_error, "kind must be a string");
    w.kind = wgf_kind_from_string(j.at("kind").get<std::string>());
    w.p = p;
    w.row_state = Alphabet(p, (std::uint32_t)uint_from_json(j.at("row_dim"), "row_dim"));
    w.col_state = Alphabet(p, (std::uint32_t)uint_from_json(j.at("col_dim"), "col_dim"));
    w.symbol = Alphabet(p, (std::uint32_t)uint_from_json(j.at("symbol_dim"), "symbol_dim"));
    for (const auto& s : j.at("rows")) {
        require(s.is_string(), errc::parse_error, "state labels must be strings");
        w.row_labels.push_back(label_vec(w.row_state, s.get<std::string>()));
    }
    for (const auto& s : j.at("cols")) {
        require(s.is_string(), errc::parse_error, "state labels must be strings");
        w.col_labels.push_back(label_vec(w.col_state, s.get<std::string>()));
    }
    check_state_order(w.row_state, w.row_labels);
    check_state_order(w.col_state, w.col_labels);
    const json& entries = j.at("entries");
    require(entries.is_array() && entries.size() == w.row_labels.size(), errc::parse_error,
            "entries must have one row per state");
    w.m = Matrix<Polynomial>(w.row_labels.size(), w.col_labels.size(), Polynomial(p));
    for (std::size_t i = 0; i < w.row_labels.size(); ++i) {
        require(entries[i].is_array() && entries[i].size() == w.col_labels.size(),
                errc::parse_error, "entry row has wrong width");
        for (std::size_t jj = 0; jj < w.col_labels.size(); ++jj)
            w.m.at(i, jj) = poly_entry_from_json(p, entries[i][jj]);
    }
    return w;
}

// ---- normal factor graphs ----------------------------------------------------

inline json realization_to_json(const Realization& r) {
    auto vars_json = [](const std::vector<VarDecl>& vs) {
        json a = json::array();
        for (const auto& v : vs) a.push_back(json{{"id", v.id}, {"dim", v.alphabet.dim}});
        return a;
    };
    json factors = json::array();
    for (const auto& f : r.factors) {
        json table = json::array();
        for (const auto& v : f.tensor.table) table.push_back(poly_entry_to_json(v));
        factors.push_back(json{{"id", f.id}, {"vars", f.vars}, {"table", table}});
    }
    return json{{"p", r.p},
                {"externals", vars_json(r.externals)},
                {"internals", vars_json(r.internals)},
                {"factors", factors}};
}

inline Realization realization_from_json(const json& j) {
    for (const char* key : {"p", "externals", "internals", "factors"})
        require(j.is_object() && j.contains(key), errc::parse_error,
                std::string("graph is missing '") + key + "'");
    Realization r;
    r.p = (std::uint32_t)uint_from_json(j.at("p"), "p");
    require(is_prime(r.p), errc::parse_error, "p must be prime");
    auto vars_from = [&](const json& a, std::vector<VarDecl>& out) {
        require(a.is_array(), errc::parse_error, "variable lists must be arrays");
        for (const auto& v : a) {
            require(v.is_object() && v.contains("id") && v.contains("dim"), errc::parse_error,
                    "variable must be {id, dim}");
            require(v.at("id").is_string(), errc::parse_error, "variable id must be a string");
            out.push_back({v.at("id").get<std::string>(),
                           Alphabet(r.p, (std::uint32_t)uint_from_json(v.at("dim"), "dim"))});
        }
    };
    vars_from(j.at("externals"), r.externals);
    vars_from(j.at("internals"), r.internals);
    std::map<std::string, Alphabet> alph;
    for (const auto& v : r.externals) alph.emplace(v.id, v.alphabet);
    for (const auto& v : r.internals) alph.emplace(v.id, v.alphabet);
    for (const auto& fj : j.at("factors")) {
        for (const char* key : {"id", "vars", "table"})
            require(fj.is_object() && fj.contains(key), errc::parse_error,
                    std::string("factor is missing '") + key + "'");
        Factor f;
        require(fj.at("id").is_string(), errc::parse_error, "factor id must be a string");
        f.id = fj.at("id").get<std::string>();
        std::vector<Alphabet> axes;
        for (const auto& v : fj.at("vars")) {
            require(v.is_string(), errc::parse_error, "factor vars must be variable ids");
            std::string id = v.get<std::string>();
            auto it = alph.find(id);
            require(it != alph.end(), errc::parse_error,
                    "factor '" + f.id + "' references unknown variable '" + id + "'");
            f.vars.push_back(id);
            axes.push_back(it->second);
        }
        std::uint64_t want = axes_size(axes);
        const json& table = fj.at("table");
        require(table.is_array() && table.size() == want, errc::parse_error,
                "factor '" + f.id + "' table needs " + std::to_string(want) + " entries");
        f.tensor.axes = std::move(axes);
        for (const auto& e : table) f.tensor.table.push_back(poly_entry_from_json(r.p, e));
        r.factors.push_back(std::move(f));
    }
    return r;
}

inline json partition_to_json(const PartitionFunction& pf) {
    json ext = json::array();
    for (const auto& v : pf.externals) ext.push_back(json{{"id", v.id}, {"dim", v.alphabet.dim}});
    json table = json::array();
    for (const auto& t : pf.z.table) table.push_back(poly_entry_to_json(t));
    return json{{"externals", ext}, {"table", table}};
}

// ---- spectra -----------------------------------------------------------------

inline json spectrum_to_json(const Spectrum& s) {
    json counts = json::object();
    for (const auto& [w, c] : s.counts) counts[std::to_string(w)] = rational_to_string(c);
    return json{{"counts", counts}};
}

} // namespace io
} // namespace cog
