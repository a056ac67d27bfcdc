// Copyright (c) 2026 The cpplab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cpplab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace cpplab::cli {

namespace {

using nlohmann::ordered_json;

QuadModulus parse_modulus(const std::string& s) {
    if (s == "x2+1") return QuadModulus::x2_plus_1;
    if (s == "x2+2x+2") return QuadModulus::x2_plus_2x_plus_2;
    if (s == "x2+x+2") return QuadModulus::x2_plus_x_plus_2;
    if (s == "auto") return QuadModulus::auto_select;
    fail(Errc::invalid_argument, "unknown modulus '" + s + "'");
}

FamilyClass parse_class(const std::string& s) {
    if (s == "c1") return FamilyClass::c1;
    if (s == "c2") return FamilyClass::c2;
    if (s == "c3") return FamilyClass::c3;
    fail(Errc::invalid_argument, "unknown class '" + s + "'");
}

// Builds the family spec and pins cfg.modulus to the spec's resolved tower
// so reports echo what actually ran.
FamilySpec spec_from_config(RunConfig& cfg) {
    require(cfg.cls.has_value(), Errc::invalid_argument, "--class is required");
    FamilySpec spec;
    switch (*cfg.cls) {
        case FamilyClass::c1:
            require(cfg.p == 3, Errc::hypothesis_violated, "class 1 requires --p 3");
            spec = make_c1(cfg.m, cfg.modulus_given ? cfg.modulus : QuadModulus::x2_plus_1);
            break;
        case FamilyClass::c2:
            require(cfg.p == 3, Errc::hypothesis_violated, "class 2 requires --p 3");
            spec = make_c2(cfg.m);
            break;
        case FamilyClass::c3:
            spec = make_c3(cfg.p, cfg.m, cfg.s);
            break;
    }
    cfg.modulus = spec.modulus;
    return spec;
}

ordered_json config_json(const RunConfig& cfg) {
    ordered_json j;
    j["command"] = cfg.command;
    if (cfg.cls) j["class"] = family_class_name(*cfg.cls);
    j["p"] = cfg.p;
    j["m"] = cfg.m;
    if (cfg.cls && *cfg.cls == FamilyClass::c3) j["s"] = cfg.s;
    j["modulus_variant"] = quad_modulus_name(cfg.modulus);
    j["format"] = cfg.format;
    j["max_q"] = cfg.max_q;
    j["workers"] = cfg.workers;
    return j;
}

ordered_json field_json(const FieldCtx& ctx) {
    ordered_json j;
    j["p"] = ctx.p;
    j["m"] = ctx.m;
    j["base_modulus"] = ctx.base_modulus;
    j["top_modulus"] = std::vector<uint32_t>{ctx.top_c0, ctx.top_c1, 1};
    return j;
}

ordered_json family_json(const VerifyReport& rep) {
    ordered_json j;
    j["class"] = family_class_name(rep.spec.cls);
    j["d"] = dec_string(rep.d);
    j["inverse_e"] = dec_string(rep.inverse.exponent);
    j["inverse_path"] =
        rep.inverse.path == InversePath::closed_form ? "closed-form" : "generic";
    if (rep.inverse.path == InversePath::closed_form) {
        j["inverse_formula"] = rep.inverse.formula;
        j["inverse_raw"] = dec_string(rep.inverse.raw);
    }
    return j;
}

ordered_json optional_bool_json(const std::optional<bool>& v) {
    if (v.has_value()) return *v;
    return nullptr;
}

std::string bool_or_blank(const std::optional<bool>& v) {
    if (!v.has_value()) return "";
    return *v ? "true" : "false";
}

// Writes to cfg.out if set, stdout stream otherwise.
void emit(const RunConfig& cfg, std::ostream& fallback, const std::string& payload) {
    if (cfg.out.empty()) {
        fallback << payload;
        return;
    }
    std::ofstream f(cfg.out);
    require(f.good(), Errc::invalid_argument, "cannot open output file " + cfg.out);
    f << payload;
}

int cmd_enumerate(RunConfig cfg, std::ostream& out) {
    FamilySpec spec = spec_from_config(cfg);
    FieldCtx ctx = make_family_ctx(spec, cfg.max_q);
    std::vector<FieldElem> vs = admissible_v(ctx, spec);
    BigInt d = forward_exponent(spec);
    InverseInfo inverse = inverse_info(spec);

    std::ostringstream os;
    if (cfg.format == "json") {
        ordered_json j;
        j["version"] = kToolVersion;
        j["config"] = config_json(cfg);
        j["field"] = field_json(ctx);
        j["family"] = {{"class", family_class_name(spec.cls)},
                       {"d", dec_string(d)},
                       {"inverse_e", dec_string(inverse.exponent)},
                       {"inverse_path",
                        inverse.path == InversePath::closed_form ? "closed-form" : "generic"}};
        ordered_json rows = ordered_json::array();
        for (const FieldElem& v : vs) rows.push_back(element_json(ctx, v));
        j["values"] = rows;
        j["count"] = vs.size();
        os << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "v,d,inverse_e\n";
        for (const FieldElem& v : vs) {
            os << '"' << to_string(ctx, v) << "\"," << dec_string(d) << ","
               << dec_string(inverse.exponent) << "\n";
        }
    } else {
        os << "family " << family_class_name(spec.cls) << " over F_" << ctx.q << "  d = "
           << dec_string(d) << "  inverse_e = " << dec_string(inverse.exponent) << "\n";
        for (const FieldElem& v : vs) os << to_string(ctx, v) << "\n";
        os << "count: " << vs.size() << "\n";
    }
    emit(cfg, out, os.str());
    return 0;
}

int cmd_verify(RunConfig cfg, std::ostream& out) {
    FamilySpec spec = spec_from_config(cfg);
    FieldCtx ctx = make_family_ctx(spec, cfg.max_q);
    VerifyOptions opts;
    opts.workers = cfg.workers;
    VerifyReport rep = verify_family(ctx, spec, opts);

    std::ostringstream os;
    if (cfg.format == "json") {
        os << report_json(ctx, rep, cfg).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        write_report_csv(os, ctx, rep);
    } else {
        write_report_text(os, ctx, rep);
    }
    emit(cfg, out, os.str());
    return rep.all_pass ? 0 : 1;
}

int cmd_inverse(RunConfig cfg, std::ostream& out) {
    std::ostringstream os;
    ordered_json j;
    j["version"] = kToolVersion;
    if (cfg.d_str.has_value()) {
        require(cfg.q_value.has_value(), Errc::invalid_argument,
                "--d needs --q to fix the exponent ring");
        BigInt d(*cfg.d_str);
        BigInt n = BigInt(*cfg.q_value) - 1;
        BigInt e = mod_inverse(d, n);  // NotInvertible -> exit 2
        j["d"] = dec_string(d);
        j["q"] = *cfg.q_value;
        j["inverse_e"] = dec_string(e);
        j["inverse_path"] = "generic";
        if (cfg.format == "text") {
            os << dec_string(e) << "\n";
        } else {
            os << j.dump(2) << "\n";
        }
    } else {
        FamilySpec spec = spec_from_config(cfg);
        InverseInfo inverse = inverse_info(spec);
        BigInt d = forward_exponent(spec);
        // Sanity: d * e = 1 in the exponent ring.
        BigInt n = family_q(spec) - 1;
        require(mod_floor(d * inverse.exponent, n) == 1, Errc::internal_invariant,
                "inverse exponent fails d*e = 1 (mod q-1)");
        j["class"] = family_class_name(spec.cls);
        j["d"] = dec_string(d);
        j["q"] = dec_string(family_q(spec));
        j["inverse_e"] = dec_string(inverse.exponent);
        j["inverse_path"] =
            inverse.path == InversePath::closed_form ? "closed-form" : "generic";
        if (inverse.path == InversePath::closed_form) {
            j["inverse_formula"] = inverse.formula;
            j["inverse_raw"] = dec_string(inverse.raw);
        }
        if (cfg.format == "text") {
            os << dec_string(inverse.exponent) << "\n";
            if (inverse.path == InversePath::closed_form) {
                os << "closed form: " << inverse.formula << " = " << dec_string(inverse.raw)
                   << "\n";
            } else {
                os << "generic mod-inverse\n";
            }
        } else {
            os << j.dump(2) << "\n";
        }
    }
    emit(cfg, out, os.str());
    return 0;
}

}  // namespace

ordered_json element_json(const FieldCtx& ctx, const FieldElem& x) {
    (void)ctx;
    return ordered_json::array({x.a0.c, x.a1.c});
}

ordered_json report_json(const FieldCtx& ctx, const VerifyReport& rep, const RunConfig& cfg) {
    ordered_json j;
    j["version"] = kToolVersion;
    j["config"] = config_json(cfg);
    j["field"] = field_json(ctx);
    j["family"] = family_json(rep);
    ordered_json rows = ordered_json::array();
    for (const VerifyRow& r : rep.rows) {
        ordered_json row;
        row["v"] = element_json(ctx, r.v);
        row["is_pp"] = r.is_pp;
        row["is_cpp"] = r.is_cpp;
        row["composition_ok"] = r.composition_ok;
        row["char_sum_ok"] = optional_bool_json(r.char_sum_ok);
        row["wan_ok"] = optional_bool_json(r.wan_ok);
        row["inverse_is_cpp"] = r.inverse_is_cpp;
        rows.push_back(std::move(row));
    }
    j["results"] = rows;
    ordered_json summary;
    summary["count"] = rep.admissible_count;
    summary["all_pass"] = rep.all_pass;
    summary["elapsed_ms"] = rep.elapsed_ms;
    summary["expected_count_ok"] = rep.expected_count_ok;
    summary["inverse_matches_generic"] = rep.inverse_matches_generic;
    summary["scan"] = {{"run", rep.cpp_scan_superset_ok.has_value()},
                       {"superset_ok", optional_bool_json(rep.cpp_scan_superset_ok)},
                       {"cpp_count", rep.cpp_scan_count}};
    j["summary"] = summary;
    return j;
}

void write_report_csv(std::ostream& os, const FieldCtx& ctx, const VerifyReport& rep) {
    os << "v,is_pp,is_cpp,composition_ok,char_sum_ok,wan_ok,inverse_is_cpp\n";
    for (const VerifyRow& r : rep.rows) {
        os << '"' << to_string(ctx, r.v) << "\"," << (r.is_pp ? "true" : "false") << ","
           << (r.is_cpp ? "true" : "false") << "," << (r.composition_ok ? "true" : "false")
           << "," << bool_or_blank(r.char_sum_ok) << "," << bool_or_blank(r.wan_ok) << ","
           << (r.inverse_is_cpp ? "true" : "false") << "\n";
    }
}

void write_report_text(std::ostream& os, const FieldCtx& ctx, const VerifyReport& rep) {
    os << "family " << family_class_name(rep.spec.cls) << "  p=" << rep.spec.p
       << " m=" << rep.spec.m;
    if (rep.spec.cls == FamilyClass::c3) os << " s=" << rep.spec.s;
    os << "  q=" << ctx.q << "\n";
    os << "d = " << dec_string(rep.d) << ", inverse_e = " << dec_string(rep.inverse.exponent)
       << " ("
       << (rep.inverse.path == InversePath::closed_form ? "closed-form " + rep.inverse.formula
                                                        : std::string("generic"))
       << ")\n";
    for (const VerifyRow& r : rep.rows) {
        os << to_string(ctx, r.v) << "  pp=" << (r.is_pp ? "y" : "n")
           << " cpp=" << (r.is_cpp ? "y" : "n") << " comp=" << (r.composition_ok ? "y" : "n");
        if (r.char_sum_ok.has_value()) os << " charsum=" << (*r.char_sum_ok ? "y" : "n");
        if (r.wan_ok.has_value()) os << " wan=" << (*r.wan_ok ? "y" : "n");
        os << " invcpp=" << (r.inverse_is_cpp ? "y" : "n") << "\n";
    }
    os << "count=" << rep.admissible_count << " all_pass=" << (rep.all_pass ? "true" : "false")
       << " elapsed_ms=" << rep.elapsed_ms << "\n";
    if (rep.cpp_scan_superset_ok.has_value()) {
        os << "scan: cpp_count=" << rep.cpp_scan_count
           << " superset_ok=" << (*rep.cpp_scan_superset_ok ? "true" : "false") << "\n";
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;

    CLI::App app{"complete permutation monomial constructions and exhaustive verification"};
    app.require_subcommand(0, 1);

    std::string cls_str, modulus_str = "x2+1";
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--class", cls_str, "family class: c1, c2 or c3");
        cmd->add_option("--p", cfg.p, "odd prime characteristic");
        cmd->add_option("--m", cfg.m, "base extension degree");
        cmd->add_option("--s", cfg.s, "class 3 parameter s");
        cmd->add_option("--modulus", modulus_str,
                        "quadratic modulus: x2+1, x2+2x+2, x2+x+2, auto")
            ->each([&](const std::string&) { cfg.modulus_given = true; });
        cmd->add_option("--format", cfg.format, "output format: json, csv or text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--max-q", cfg.max_q, "exhaustive-sweep cap on q");
        cmd->add_option("--workers", cfg.workers, "worker thread count");
        cmd->add_option("--out", cfg.out, "write the report to this file");
    };

    CLI::App* c_enum = app.add_subcommand("enumerate", "list admissible v for a family");
    add_common(c_enum);
    CLI::App* c_verify = app.add_subcommand("verify", "run the full verification sweep");
    add_common(c_verify);
    CLI::App* c_inverse = app.add_subcommand("inverse", "compositional-inverse exponent");
    add_common(c_inverse);
    std::string d_str;
    uint64_t q_value = 0;
    c_inverse->add_option("--d", d_str, "explicit forward exponent (decimal)");
    c_inverse->add_option("--q", q_value, "field size for --d");

    if (const char* env = std::getenv("CPPLAB_MAX_Q")) {
        // flag wins over the environment; parse the env first
        char* end = nullptr;
        uint64_t v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) cfg.max_q = v;
    }

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c_enum->parsed()) cfg.command = "enumerate";
        else if (c_verify->parsed()) cfg.command = "verify";
        else if (c_inverse->parsed()) cfg.command = "inverse";
        else {
            err << app.help();
            return 2;
        }
        if (!cls_str.empty()) cfg.cls = parse_class(cls_str);
        cfg.modulus = parse_modulus(modulus_str);
        if (!d_str.empty()) cfg.d_str = d_str;
        if (c_inverse->parsed() && c_inverse->count("--q") > 0) cfg.q_value = q_value;

        if (cfg.command == "enumerate") return cmd_enumerate(cfg, out);
        if (cfg.command == "verify") return cmd_verify(cfg, out);
        return cmd_inverse(cfg, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == Errc::internal_invariant ? 1 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace cpplab::cli
