// cog: exact weight enumeration toolkit over finite fields.
//
// Subcommand groups mirror the library modules:
//   code  dual | wgf | weights | macwilliams
//   xform verify-identities
//   nfg   eval | dualize | verify-duality
//   wam   compute | power | macwilliams
//   conv  section | dual | terminate | spectrum | normalized
//
// Every run prints a CommandReport to stdout:
//   {command, digest, pass, payload, wall_time_ms, witnesses}
// The payload alone is written to --output, so command chains compose
// (conv section -o s.json; wam compute -i s.json -o lam.json; wam power ...).
// Exit codes: 0 ok/verified, 1 usage or input error, 2 verification failed.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cog/convcode.hpp"
#include "cog/json_io.hpp"
#include "cog/nfg.hpp"
#include "cog/transform.hpp"
#include "cog/wgf.hpp"

namespace {

using nlohmann::json;
using namespace cog;

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 14695981039346656037ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)v);
    return buf;
}

struct Options {
    std::string input = "-";
    std::string output;
    std::string expect;
    std::string format = "json";
    std::uint64_t cap = kDefaultEnumCap;
};

struct Outcome {
    json payload = json::object();
    json witnesses = json::array();
    std::optional<bool> pass; // set only by verification commands
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    require(f.good(), errc::invalid_argument, "cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

json parse_json(const std::string& raw) {
    json j = json::parse(raw, nullptr, false);
    require(!j.is_discarded(), errc::parse_error, "input is not valid JSON");
    return j;
}

void add_witness(Outcome& out, const std::string& name, const Rational& v) {
    out.witnesses.push_back(json{{"name", name}, {"value", rational_to_string(v)}});
}

json spectrum_csvable(const Spectrum& s) {
    json counts = json::object();
    for (const auto& [w, c] : s.counts) counts[std::to_string(w)] = rational_to_string(c);
    json j{{"counts", counts}};
    auto d = d_free(s);
    j["d_free"] = d ? json(*d) : json(nullptr);
    return j;
}

std::string payload_csv(const json& payload) {
    require(payload.contains("counts"), errc::invalid_argument,
            "--format csv requires a weight-count payload");
    std::ostringstream os;
    os << "weight,count\n";
    for (const auto& [k, v] : payload.at("counts").items())
        os << k << "," << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    return os.str();
}

std::string payload_pretty(const json& report) {
    std::ostringstream os;
    os << "command: " << report.at("command").get<std::string>() << "\n";
    if (!report.at("pass").is_null())
        os << "pass: " << (report.at("pass").get<bool>() ? "yes" : "no") << "\n";
    for (const auto& w : report.at("witnesses"))
        os << "witness " << w.at("name").get<std::string>() << ": "
           << w.at("value").get<std::string>() << "\n";
    os << "payload:\n" << report.at("payload").dump(2) << "\n";
    return os.str();
}

// ---- input adapters ---------------------------------------------------------

TrellisSection section_from_input(const json& j) {
    if (j.contains("inputs")) return io::encoder_from_json(j);
    return io::section_from_json(j);
}

WgfKind kind_from_flag(const std::string& s) { return io::wgf_kind_from_string(s); }

Termination mode_from_flag(const std::string& s) {
    if (s == "subcode") return Termination::subcode;
    if (s == "projection") return Termination::projection;
    if (s == "truncated") return Termination::truncated;
    if (s == "rtruncated") return Termination::reverse_truncated;
    if (s == "tailbiting") return Termination::tailbiting;
    fail(errc::invalid_argument, "unknown termination mode '" + s + "'");
}

std::vector<Vec> order_from_flag(const Alphabet& a, const std::string& csv) {
    std::vector<Vec> order;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) order.push_back(label_vec(a, tok));
    check_state_order(a, order);
    return order;
}

json poly_payload(const Polynomial& f) {
    json j = io::poly_to_json(f);
    j["text"] = f.str();
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact weight enumerators, factor graph duality, MacWilliams identities"};
    app.require_subcommand(1);

    Options opt;
    std::string kind = "hamming", mode = "tailbiting", granularity = "scalar";
    std::string state_order, row_order, col_order, engine = "elimination";
    std::size_t N = 1;
    std::uint64_t dmax = 16;
    std::uint32_t prime = 2, dim = 1;
    bool have_dmax = false;

    app.add_option("-i,--input", opt.input, "input file (default: stdin)")->capture_default_str();
    app.add_option("-o,--output", opt.output, "write payload JSON to this file");
    app.add_option("--format", opt.format, "json|csv|pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    app.add_option("--cap", opt.cap, "enumeration cap")->capture_default_str();
    app.add_option("--expect", opt.expect,
                   "JSON file the payload must equal; mismatch exits with code 2");

    std::function<Outcome(const json&)> action;
    bool wants_input = true;

    auto add_kind = [&](CLI::App* c) {
        c->add_option("--kind", kind, "exact|complete|hamming")
            ->check(CLI::IsMember({"exact", "complete", "hamming"}))
            ->capture_default_str();
    };

    // ---- code ----
    auto* code = app.add_subcommand("code", "linear block codes");
    {
        auto* dual = code->add_subcommand("dual", "orthogonal code");
        dual->callback([&] {
            action = [&](const json& in) {
                Outcome out;
                out.payload = io::code_to_json(io::code_from_json(in).dual());
                return out;
            };
        });

        auto* w = code->add_subcommand("wgf", "weight generating function");
        add_kind(w);
        w->add_option("--granularity", granularity, "scalar|symbol")
            ->check(CLI::IsMember({"scalar", "symbol"}));
        w->callback([&] {
            action = [&](const json& in) {
                auto C = io::code_from_json(in);
                auto gran = granularity == "symbol" ? LinearCode::WeightGranularity::symbol
                                                    : LinearCode::WeightGranularity::scalar;
                Outcome out;
                out.payload = poly_payload(wgf(C, kind_from_flag(kind), gran, opt.cap));
                return out;
            };
        });

        auto* wd = code->add_subcommand("weights", "Hamming weight distribution");
        wd->add_option("--granularity", granularity, "scalar|symbol")
            ->check(CLI::IsMember({"scalar", "symbol"}));
        wd->callback([&] {
            action = [&](const json& in) {
                auto C = io::code_from_json(in);
                auto gran = granularity == "symbol" ? LinearCode::WeightGranularity::symbol
                                                    : LinearCode::WeightGranularity::scalar;
                auto counts = C.weight_distribution(gran, opt.cap);
                json c = json::object();
                for (std::size_t i = 0; i < counts.size(); ++i)
                    if (counts[i]) c[std::to_string(i)] = counts[i];
                Outcome out;
                out.payload = json{{"counts", c}, {"n", C.n()}, {"k", C.k()}};
                return out;
            };
        });

        auto* mw = code->add_subcommand("macwilliams", "dual WGF via transform, checked");
        add_kind(mw);
        mw->callback([&] {
            action = [&](const json& in) {
                auto C = io::code_from_json(in);
                auto k = kind_from_flag(kind);
                auto mwr = macwilliams_wgf(wgf(C, k, LinearCode::WeightGranularity::scalar,
                                               opt.cap),
                                           k, C.profile());
                auto oracle = wgf(C.dual(), k, LinearCode::WeightGranularity::scalar, opt.cap);
                Outcome out;
                out.payload = poly_payload(mwr.result);
                add_witness(out, "scale", mwr.witness);
                out.pass = rename_dual_to_primal(mwr.result) == oracle;
                return out;
            };
        });
    }

    // ---- xform ----
    auto* xf = app.add_subcommand("xform", "Fourier kernels");
    {
        auto* vi = xf->add_subcommand("verify-identities", "check the transform identity suite");
        vi->add_option("--p", prime, "field characteristic")->capture_default_str();
        vi->add_option("--dim", dim, "alphabet dimension")->capture_default_str();
        vi->callback([&] {
            wants_input = false;
            action = [&](const json&) {
                auto rep = verify_identity_suite(Alphabet(prime, dim));
                Outcome out;
                json checks = json::array();
                for (const auto& c : rep.checks) {
                    json w = c.witness ? json(rational_to_string(*c.witness)) : json(nullptr);
                    checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"witness", w}});
                    if (c.witness) add_witness(out, c.name, *c.witness);
                }
                out.payload = json{{"p", prime}, {"dim", dim}, {"checks", checks}};
                out.pass = rep.pass;
                return out;
            };
        });
    }

    // ---- nfg ----
    auto* nfg = app.add_subcommand("nfg", "normal factor graphs");
    {
        auto* ev = nfg->add_subcommand("eval", "partition function");
        ev->add_option("--engine", engine, "brute|elimination")
            ->check(CLI::IsMember({"brute", "elimination"}));
        ev->callback([&] {
            action = [&](const json& in) {
                auto g = NormalFactorGraph::validated(io::realization_from_json(in));
                auto z = partition_function(
                    g, engine == "brute" ? Engine::brute_force : Engine::elimination, opt.cap);
                Outcome out;
                out.payload = io::partition_to_json(z);
                return out;
            };
        });

        auto* du = nfg->add_subcommand("dualize", "dual graph with sign inverters");
        du->callback([&] {
            action = [&](const json& in) {
                auto g = NormalFactorGraph::validated(io::realization_from_json(in));
                Outcome out;
                out.payload = io::realization_to_json(dualize(g).realization());
                return out;
            };
        });

        auto* vd = nfg->add_subcommand("verify-duality", "dual partition = scaled transform");
        vd->callback([&] {
            action = [&](const json& in) {
                auto g = NormalFactorGraph::validated(io::realization_from_json(in));
                auto rep = verify_duality(g, opt.cap);
                Outcome out;
                out.payload = json{{"z", io::partition_to_json(rep.z)},
                                   {"z_hat", io::partition_to_json(rep.z_hat)},
                                   {"z_dual", io::partition_to_json(rep.z_dual)}};
                add_witness(out, "internal_size_product", rep.witness);
                out.pass = rep.pass;
                return out;
            };
        });
    }

    // ---- wam ----
    auto* wm = app.add_subcommand("wam", "weight adjacency matrices");
    {
        auto* cp = wm->add_subcommand("compute", "WAM of a trellis section");
        add_kind(cp);
        cp->add_option("--state-order", state_order, "comma-separated labels for rows and cols");
        cp->add_option("--row-order", row_order, "comma-separated row labels");
        cp->add_option("--col-order", col_order, "comma-separated column labels");
        cp->callback([&] {
            action = [&](const json& in) {
                auto sec = section_from_input(in);
                std::optional<std::vector<Vec>> ro, co;
                if (!state_order.empty()) {
                    ro = order_from_flag(sec.state_in(), state_order);
                    co = order_from_flag(sec.state_out(), state_order);
                }
                if (!row_order.empty()) ro = order_from_flag(sec.state_in(), row_order);
                if (!col_order.empty()) co = order_from_flag(sec.state_out(), col_order);
                Outcome out;
                out.payload = io::wam_to_json(wam(sec, kind_from_flag(kind), ro, co, opt.cap));
                return out;
            };
        });

        auto* pw = wm->add_subcommand("power", "N-th matrix power");
        pw->add_option("--N", N, "number of sections")->required();
        pw->add_option("--dmax", dmax, "truncate entries past this degree")
            ->each([&](const std::string&) { have_dmax = true; });
        pw->callback([&] {
            action = [&](const json& in) {
                auto w = io::wam_from_json(in);
                Outcome out;
                out.payload = io::wam_to_json(
                    wam_power(w, N, have_dmax ? std::optional<std::uint64_t>(dmax) : std::nullopt));
                return out;
            };
        });

        auto* mw = wm->add_subcommand("macwilliams", "WAM of the dual section via transform");
        mw->add_option("--kind", kind, "must match the input WAM's kind")
            ->check(CLI::IsMember({"exact", "complete", "hamming"}));
        mw->callback([&] {
            action = [&](const json& in) {
                auto w = io::wam_from_json(in);
                require(mw->count("--kind") == 0 || kind_from_flag(kind) == w.kind,
                        errc::invalid_argument, "--kind disagrees with the input WAM");
                auto res = macwilliams_wam(w);
                Outcome out;
                out.payload = io::wam_to_json(res.result);
                add_witness(out, "scale", res.witness);
                return out;
            };
        });
    }

    // ---- conv ----
    auto* cv = app.add_subcommand("conv", "convolutional codes");
    {
        auto* sec = cv->add_subcommand("section", "trellis section from an encoder");
        sec->callback([&] {
            action = [&](const json& in) {
                Outcome out;
                out.payload = io::section_to_json(section_from_input(in));
                return out;
            };
        });

        auto* du = cv->add_subcommand("dual", "dual trellis section");
        du->callback([&] {
            action = [&](const json& in) {
                Outcome out;
                out.payload = io::section_to_json(dual_section(section_from_input(in)));
                return out;
            };
        });

        auto* tm = cv->add_subcommand("terminate", "terminated block code");
        tm->add_option("--N", N, "number of sections")->required();
        tm->add_option("--mode", mode, "subcode|projection|truncated|rtruncated|tailbiting")
            ->check(CLI::IsMember({"subcode", "projection", "truncated", "rtruncated",
                                   "tailbiting"}))
            ->capture_default_str();
        tm->callback([&] {
            action = [&](const json& in) {
                auto s = section_from_input(in);
                Outcome out;
                out.payload = io::code_to_json(terminate(s, N, mode_from_flag(mode)));
                return out;
            };
        });

        auto* sp = cv->add_subcommand("spectrum", "free distance spectrum");
        sp->add_option("--dmax", dmax, "largest weight reported")->required();
        sp->callback([&] {
            action = [&](const json& in) {
                Outcome out;
                out.payload =
                    spectrum_csvable(free_distance_spectrum(section_from_input(in), dmax, opt.cap));
                return out;
            };
        });

        auto* nm = cv->add_subcommand("normalized", "tail-biting trace spectrum / N");
        nm->add_option("--N", N, "number of sections")->required();
        nm->add_option("--dmax", dmax, "largest weight reported")->required();
        nm->callback([&] {
            action = [&](const json& in) {
                Outcome out;
                out.payload = spectrum_csvable(
                    normalized_tailbiting_spectrum(section_from_input(in), N, dmax, opt.cap));
                return out;
            };
        });
    }

    std::function<void(CLI::App*)> allow_global_flags = [&](CLI::App* a) {
        for (auto* s : a->get_subcommands([](CLI::App*) { return true; })) {
            s->fallthrough();
            allow_global_flags(s);
        }
    };
    allow_global_flags(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 1;
    }

    std::string command;
    for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);

    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    std::string raw;
    try {
        json in = json::object();
        if (wants_input) {
            raw = slurp(opt.input);
            in = parse_json(raw);
        }
        out = action(in);
        if (!opt.expect.empty()) {
            json want = parse_json(slurp(opt.expect));
            bool match = out.payload == want;
            out.pass = out.pass ? (*out.pass && match) : match;
        }
    } catch (const cog::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);

    json report{{"command", command},
                {"digest", hex64(fnv1a(raw, fnv1a(command)))},
                {"pass", out.pass ? json(*out.pass) : json(nullptr)},
                {"payload", out.payload},
                {"wall_time_ms", ms.count()},
                {"witnesses", out.witnesses}};

    try {
        if (!opt.output.empty()) {
            std::ofstream f(opt.output, std::ios::binary);
            require(f.good(), errc::invalid_argument,
                    "cannot open output file '" + opt.output + "'");
            f << out.payload.dump(2) << "\n";
        }
        if (opt.format == "csv")
            std::cout << payload_csv(out.payload);
        else if (opt.format == "pretty")
            std::cout << payload_pretty(report);
        else
            std::cout << report.dump(2) << "\n";
    } catch (const cog::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return out.pass && !*out.pass ? 2 : 0;
}
