#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tamari/blossoming.hpp"
#include "tamari/counting.hpp"
#include "tamari/error.hpp"
#include "tamari/render.hpp"
#include "tamari/sampler.hpp"
#include "tamari/scan.hpp"
#include "tamari/verify.hpp"

namespace tamari {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kSampleCap = 5000;

struct Options {
    std::string input;
    std::string family = "general";
    std::optional<int> n;
    std::optional<int> k;
    int size = 10;
    int count = 1;
    std::uint64_t seed = 1;
    std::string format;
    bool json = false;
    bool self_dual = false;
    std::optional<int> max_n;
    std::string out_path;
};

void write_error(std::ostream& err, std::string_view code, std::string_view message) {
    ordered_json j;
    j["error"] = code;
    j["message"] = message;
    err << j.dump() << "\n";
}

// Writes to --out when given, else to the command's stream.
void emit(const Options& o, std::ostream& out, const std::string& text, int index = -1) {
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::string path = o.out_path;
    if (index >= 0) {
        const auto dot = path.rfind('.');
        const std::string suffix = "-" + std::to_string(index);
        path = dot == std::string::npos ? path + suffix : path.substr(0, dot) + suffix + path.substr(dot);
    }
    std::ofstream file(path, index > 0 ? std::ios::app : std::ios::trunc);
    if (!file) throw Error(ErrorCode::ParseError, "cannot open output file " + path);
    file << text;
}

int require(const std::optional<int>& v, const char* flag) {
    if (!v) throw CLI::RequiredError(flag);
    return *v;
}

void cmd_count(const Options& o, std::ostream& out) {
    if (o.k) {
        const int n = require(o.n, "--n");
        const BigInt v = count_J(n, *o.k);
        if (o.json) {
            out << "{\"n\":" << n << ",\"k\":" << *o.k << ",\"count\":" << v.str() << "}\n";
        } else {
            out << v.str() << "\n";
        }
        return;
    }
    if (o.n) {
        const Family f = parse_family(o.family);
        const BigInt v = o.self_dual ? count_self_dual(f, *o.n) : count(f, *o.n);
        if (o.json) {
            out << "{\"family\":\"" << family_name(f) << "\",\"n\":" << *o.n
                << ",\"self_dual\":" << (o.self_dual ? "true" : "false") << ",\"count\":" << v.str() << "}\n";
        } else {
            out << v.str() << "\n";
        }
        return;
    }
    const int max_n = o.max_n.value_or(8);
    if (o.json) {
        out << "[";
        for (int n = 1; n <= max_n; ++n) {
            out << (n > 1 ? "," : "") << "{\"n\":" << n;
            for (Family f : kAllFamilies) {
                out << ",\"" << family_name(f)
                    << "\":" << (o.self_dual ? count_self_dual(f, n) : count(f, n)).str();
            }
            out << "}";
        }
        out << "]\n";
        return;
    }
    out << std::setw(4) << "n";
    for (Family f : kAllFamilies) out << std::setw(22) << family_name(f);
    out << "\n";
    for (int n = 1; n <= max_n; ++n) {
        out << std::setw(4) << n;
        for (Family f : kAllFamilies) out << std::setw(22) << (o.self_dual ? count_self_dual(f, n) : count(f, n)).str();
        out << "\n";
    }
}

void cmd_tally(const Options& o, std::ostream& out) {
    const int n = o.n.value_or(5);
    const Tally t = tally(n);
    if (o.json) {
        ordered_json j;
        j["n"] = n;
        j["total"] = t.total;
        for (Family f : kAllFamilies) j["family"][std::string(family_name(f))] = t.family.count(f) ? t.family.at(f) : 0;
        for (Family f : kAllFamilies) {
            j["self_dual"][std::string(family_name(f))] = t.self_dual.count(f) ? t.self_dual.at(f) : 0;
        }
        out << j.dump() << "\n";
        return;
    }
    out << std::left << std::setw(22) << "family" << std::right << std::setw(12) << "brute" << std::setw(12)
        << "formula" << std::setw(12) << "self-dual" << std::setw(12) << "formula" << "\n";
    for (Family f : kAllFamilies) {
        out << std::left << std::setw(22) << family_name(f) << std::right << std::setw(12)
            << (t.family.count(f) ? t.family.at(f) : 0) << std::setw(12) << count(f, n).str() << std::setw(12)
            << (t.self_dual.count(f) ? t.self_dual.at(f) : 0) << std::setw(12) << count_self_dual(f, n).str() << "\n";
    }
}

void cmd_enumerate(const Options& o, std::ostream& out, bool family_given) {
    const int n = require(o.n, "--n");
    const std::optional<Family> f = family_given ? std::optional(parse_family(o.family)) : std::nullopt;
    for (const auto& i : enumerate_intervals_parallel(n)) {
        if (f && !in_family(i, *f)) continue;
        if (o.json) {
            ordered_json j;
            j["n"] = n;
            j["lower"] = dyck_from_tree(i.lower());
            j["upper"] = dyck_from_tree(i.upper());
            out << j.dump() << "\n";
        } else {
            out << i.to_string() << "\n";
        }
    }
}

void cmd_map(const Options& o, std::ostream& out) {
    const BlossomingTree b = Phi(TamariInterval::parse(o.input));
    emit(o, out, (o.format == "debug" ? b.debug_string() : canonical_encode(b) + "\n"));
}

void cmd_unmap(const Options& o, std::ostream& out) {
    const TamariInterval i = Psi(canonical_decode(o.input));
    if (o.json) {
        ordered_json j;
        j["n"] = i.size();
        j["lower"] = dyck_from_tree(i.lower());
        j["upper"] = dyck_from_tree(i.upper());
        out << j.dump() << "\n";
    } else {
        out << i.to_string() << "\n";
    }
}

void cmd_classify(const Options& o, std::ostream& out) {
    const TamariInterval i = TamariInterval::parse(o.input);
    const Classification c = classify(i);
    if (o.json) {
        ordered_json j;
        j["interval"] = i.to_string();
        for (Family f : kAllFamilies) j["families"][std::string(family_name(f))] = c.family.at(f);
        j["trivial"] = c.trivial;
        j["self_dual"] = c.self_dual;
        j["canopy"] = {{"S11", c.canopy.s11}, {"S00", c.canopy.s00}, {"M10", c.canopy.m10}};
        out << j.dump() << "\n";
        return;
    }
    out << "interval " << i.to_string() << "\n";
    for (Family f : kAllFamilies) {
        out << std::left << std::setw(22) << family_name(f) << (c.family.at(f) ? 1 : 0) << "\n";
    }
    out << std::left << std::setw(22) << "trivial" << (c.trivial ? 1 : 0) << "\n";
    out << std::left << std::setw(22) << "self-dual" << (c.self_dual ? 1 : 0) << "\n";
    out << "canopy S11=" << c.canopy.s11 << " S00=" << c.canopy.s00 << " M10=" << c.canopy.m10 << "\n";
}

void cmd_sample(const Options& o, std::ostream& out) {
    if (o.size < 1 || o.size > kSampleCap) {
        throw Error(ErrorCode::UnsupportedSize,
                    "sample size must be in [1, " + std::to_string(kSampleCap) + "], got " + std::to_string(o.size));
    }
    const std::string format = o.format.empty() ? "interval" : o.format;
    if (format != "interval" && format != "blossoming" && format != "svg") {
        throw Error(ErrorCode::ParseError, "unknown sample format '" + format + "'");
    }
    RandomSource rng(o.seed);
    for (int s = 0; s < o.count; ++s) {
        const BlossomingTree b = sample_blossoming(o.size, rng);
        if (format == "svg") {
            emit(o, out, render_blossoming(b).svg, o.count > 1 ? s : -1);
        } else if (format == "blossoming") {
            emit(o, out, canonical_encode(b) + "\n", o.count > 1 ? 0 : -1);
        } else {
            emit(o, out, Psi(b).to_string() + "\n", o.count > 1 ? 0 : -1);
        }
    }
}

void cmd_render(const Options& o, std::ostream& out) {
    const TamariInterval i = TamariInterval::parse(o.input);
    const std::string format = o.format.empty() ? "blossoming" : o.format;
    Figure f;
    if (format == "meandering") {
        f = render_meandering(phi(i));
    } else if (format == "smooth") {
        f = render_smooth(i);
    } else if (format == "blossoming") {
        f = render_blossoming(Phi(i));
    } else {
        throw Error(ErrorCode::ParseError, "unknown render format '" + format + "'");
    }
    emit(o, out, f.svg);
}

void cmd_series(const Options& o, std::ostream& out) {
    const int n = o.n.value_or(5);
    if (o.format == "modern") {
        const ModernSeries s = modern_series_coefficients(n);
        if (o.json) {
            out << "{\"A\":[";
            for (std::size_t i = 0; i < s.a.size(); ++i) out << (i ? "," : "") << s.a[i].str();
            out << "],\"B\":[";
            for (std::size_t i = 0; i < s.b.size(); ++i) out << (i ? "," : "") << s.b[i].str();
            out << "],\"C\":[";
            for (std::size_t i = 0; i < s.c.size(); ++i) out << (i ? "," : "") << s.c[i].str();
            out << "]}\n";
        } else {
            out << std::setw(4) << "n" << std::setw(16) << "A_m" << std::setw(16) << "B_m" << std::setw(16) << "C_m"
                << "\n";
            for (std::size_t i = 0; i < s.a.size(); ++i) {
                out << std::setw(4) << i << std::setw(16) << s.a[i].str() << std::setw(16) << s.b[i].str()
                    << std::setw(16) << s.c[i].str() << "\n";
            }
        }
        return;
    }
    const TrivariateResult r = trivariate_coefficients(n);
    if (o.json) {
        out << "[";
        bool first = true;
        for (const auto& [key, c] : r.coefficients) {
            out << (first ? "" : ",") << "{\"n\":" << key[0] + key[1] + key[2] - 1 << ",\"i\":" << key[0]
                << ",\"j\":" << key[1] << ",\"m\":" << key[2] << ",\"count\":" << c.str() << "}";
            first = false;
        }
        out << "]\n";
        return;
    }
    out << std::setw(4) << "n" << std::setw(4) << "i" << std::setw(4) << "j" << std::setw(4) << "m" << std::setw(12)
        << "count" << "\n";
    for (int size = 1; size <= n; ++size) {
        for (const auto& [key, c] : r.coefficients) {
            if (key[0] + key[1] + key[2] - 1 != size) continue;
            out << std::setw(4) << size << std::setw(4) << key[0] << std::setw(4) << key[1] << std::setw(4) << key[2]
                << std::setw(12) << c.str() << "\n";
        }
    }
}

int cmd_verify(const Options& o, std::ostream& out) {
    const int max_n = o.max_n.value_or(6);
    if (max_n < 1 || max_n > 9) throw Error(ErrorCode::UnsupportedSize, "verify --max-n must be in [1, 9]");
    const auto results = run_verify(max_n);
    bool ok = true;
    ordered_json j = ordered_json::array();
    for (const auto& r : results) {
        ok = ok && r.passed;
        if (o.json) {
            j.push_back({{"check", r.name}, {"max_n", r.max_n}, {"passed", r.passed}, {"detail", r.detail}});
        } else {
            out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(28) << r.name << " n<=" << r.max_n << "  "
                << r.detail << "\n";
        }
    }
    if (o.json) out << j.dump() << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tamari intervals and bicolored blossoming trees"};
    app.require_subcommand(1);
    Options o;

    auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json, "JSON output"); };
    auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out_path, "write output to this file"); };

    auto* count_cmd = app.add_subcommand("count", "closed-form counts");
    count_cmd->add_option("--family", o.family, "family name");
    count_cmd->add_option("--n", o.n, "size");
    count_cmd->add_option("--k", o.k, "count intervals whose canopies agree at k+2 positions");
    count_cmd->add_option("--max-n", o.max_n, "table up to this size");
    count_cmd->add_flag("--self-dual", o.self_dual, "count self-dual intervals");
    add_json(count_cmd);

    auto* tally_cmd = app.add_subcommand("tally", "brute-force counts with oracle cross-checks");
    tally_cmd->add_option("--n", o.n, "size (<= 8)");
    add_json(tally_cmd);

    auto* enum_cmd = app.add_subcommand("enumerate", "list all intervals of a size");
    enum_cmd->add_option("--n", o.n, "size")->required();
    auto* enum_family = enum_cmd->add_option("--family", o.family, "restrict to a family");
    add_json(enum_cmd);

    auto* map_cmd = app.add_subcommand("map", "interval \"lower|upper\" to blossoming tree JSON");
    map_cmd->add_option("interval", o.input, "Dyck words lower|upper")->required();
    map_cmd->add_option("--format", o.format, "json (default) or debug");
    add_out(map_cmd);

    auto* unmap_cmd = app.add_subcommand("unmap", "blossoming tree JSON to interval");
    unmap_cmd->add_option("tree", o.input, "{\"n\":..,\"up\":[..],\"lo\":[..]}")->required();
    add_json(unmap_cmd);

    auto* classify_cmd = app.add_subcommand("classify", "family membership and canopy counts");
    classify_cmd->add_option("interval", o.input, "Dyck words lower|upper")->required();
    add_json(classify_cmd);

    auto* sample_cmd = app.add_subcommand("sample", "uniform random intervals");
    sample_cmd->add_option("--size", o.size, "size");
    sample_cmd->add_option("--count", o.count, "number of samples")->check(CLI::PositiveNumber);
    sample_cmd->add_option("--seed", o.seed, "64-bit seed");
    sample_cmd->add_option("--format", o.format, "interval | blossoming | svg");
    add_out(sample_cmd);

    auto* render_cmd = app.add_subcommand("render", "SVG drawing of an interval");
    render_cmd->add_option("interval", o.input, "Dyck words lower|upper")->required();
    render_cmd->add_option("--format", o.format, "meandering | smooth | blossoming");
    add_out(render_cmd);

    auto* series_cmd = app.add_subcommand("series", "trivariate canopy series coefficients");
    series_cmd->add_option("--n", o.n, "largest size");
    series_cmd->add_option("--format", o.format, "canopy (default) or modern");
    add_json(series_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run the oracle suite");
    verify_cmd->add_option("--max-n", o.max_n, "largest size (default 6)");
    add_json(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        write_error(err, "UsageError", e.what());
        return 2;
    }

    try {
        if (*count_cmd) cmd_count(o, out);
        if (*tally_cmd) cmd_tally(o, out);
        if (*enum_cmd) cmd_enumerate(o, out, enum_family->count() > 0);
        if (*map_cmd) cmd_map(o, out);
        if (*unmap_cmd) cmd_unmap(o, out);
        if (*classify_cmd) cmd_classify(o, out);
        if (*sample_cmd) cmd_sample(o, out);
        if (*render_cmd) cmd_render(o, out);
        if (*series_cmd) cmd_series(o, out);
        if (*verify_cmd) return cmd_verify(o, out);
    } catch (const Error& e) {
        write_error(err, error_name(e.code()), e.what());
        return 1;
    } catch (const CLI::Error& e) {
        write_error(err, "UsageError", e.what());
        return 2;
    } catch (const std::exception& e) {
        write_error(err, "InternalError", e.what());
        return 1;
    }
    return 0;
}

}  // namespace tamari
