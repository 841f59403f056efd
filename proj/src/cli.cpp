#include "charnum/cli.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "charnum/chern.hpp"
#include "charnum/cover.hpp"
#include "charnum/genera.hpp"
#include "charnum/json_io.hpp"
#include "charnum/partition.hpp"
#include "charnum/polynomial.hpp"
#include "charnum/rational.hpp"
#include "charnum/series.hpp"

namespace charnum {

namespace {

using Rows = std::vector<std::pair<std::string, std::string>>;

void render_rows(std::ostream& out, const Rows& rows) {
    std::size_t width = 0;
    for (const auto& [key, value] : rows) width = std::max(width, key.size());
    for (const auto& [key, value] : rows) {
        out << key << std::string(width - key.size() + 2, ' ') << value << "\n";
    }
}

void emit_json(std::ostream& out, const Json& j) {
    out << j.dump(2) << "\n";
}

std::string bracket_list(const std::vector<std::string>& items) {
    std::string s = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) s += ", ";
        s += items[i];
    }
    s += "]";
    return s;
}

std::string rational_list(const std::vector<Rational>& values) {
    std::vector<std::string> items;
    items.reserve(values.size());
    for (const Rational& v : values) items.push_back(v.str());
    return bracket_list(items);
}

std::string root_list(const std::vector<long long>& roots) {
    std::vector<std::string> items;
    items.reserve(roots.size());
    for (long long r : roots) items.push_back(std::to_string(r));
    return bracket_list(items);
}

std::vector<Rational> parse_rational_csv(const std::string& csv) {
    std::vector<Rational> values;
    std::stringstream stream(csv);
    std::string token;
    while (std::getline(stream, token, ',')) {
        const auto begin = token.find_first_not_of(" \t");
        if (begin == std::string::npos) {
            throw std::invalid_argument("empty entry in rational list");
        }
        const auto end = token.find_last_not_of(" \t");
        values.push_back(Rational::parse(token.substr(begin, end - begin + 1)));
    }
    return values;
}

Json load_json_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw std::invalid_argument("cannot open input file: " + path);
    }
    return Json::parse(file);
}

// Flag set shared by the cover and obstruction subcommands.
struct CoverArgs {
    std::string input_path;
    long long n = 2;
    long long d = 2;
    long long m = 1;
    long long chi_M = 0;
    long long chi_N = 0;
    std::string normal_chern_csv;
    std::string sigma_M_str;
    long long scan_bound = 1000;

    CoverInput build() const {
        if (!input_path.empty()) {
            return cover_input_from_json(load_json_file(input_path));
        }
        CoverInput input;
        input.n = static_cast<int>(n);
        input.d = d;
        input.m = m;
        input.chi_M = chi_M;
        input.chi_N = chi_N;
        if (!normal_chern_csv.empty()) {
            input.normal_chern = parse_rational_csv(normal_chern_csv);
        }
        if (!sigma_M_str.empty()) {
            input.sigma_M = Rational::parse(sigma_M_str);
        }
        input.validate();
        return input;
    }
};

void add_cover_options(CLI::App* cmd, CoverArgs& args) {
    auto* input = cmd->add_option("--input", args.input_path,
                                  "CoverInput JSON file (replaces the numeric flags)");
    auto* n = cmd->add_option("--n", args.n, "even complex dimension of M");
    auto* d = cmd->add_option("--d", args.d, "ramification degree");
    auto* m = cmd->add_option("--m", args.m, "covering degree of (M',N') over (M,N)");
    auto* chi_m = cmd->add_option("--chi-m", args.chi_M, "Euler characteristic of M");
    auto* chi_n = cmd->add_option("--chi-n", args.chi_N, "Euler characteristic of N");
    auto* nc = cmd->add_option("--normal-chern", args.normal_chern_csv,
                               "comma-separated top Chern numbers of the tower normal bundles");
    auto* sigma = cmd->add_option("--sigma-m", args.sigma_M_str,
                                  "signature of M' (default chi_M'/(n+1))");
    for (auto* opt : {n, d, m, chi_m, chi_n, nc, sigma}) {
        input->excludes(opt);
    }
    cmd->add_option("--scan-bound", args.scan_bound, "upper end of the integer root scan")
        ->check(CLI::Range(2LL, std::numeric_limits<long long>::max()));
}

Rows cover_input_rows(const CoverInput& input) {
    return {
        {"n", std::to_string(input.n)},
        {"d", std::to_string(input.d)},
        {"m", std::to_string(input.m)},
        {"chi_M", input.chi_M.str()},
        {"chi_N", input.chi_N.str()},
        {"normal_chern", rational_list(input.filled_normal_chern())},
        {"sigma_M_prime", input.sigma_M_prime().str()},
        {"chi_M_prime", input.chi_M_prime().str()},
        {"chi_N_prime", input.chi_N_prime().str()},
    };
}

void append_scan_rows(Rows& rows, const ObstructionScan& scan) {
    rows.emplace_back("obstruction_polynomial", rational_list(scan.polynomial.coefficients()));
    rows.emplace_back("identically_zero", scan.identically_zero ? "true" : "false");
    rows.emplace_back("scan_bound", std::to_string(scan.scan_bound));
    rows.emplace_back("nonvanishing_roots", root_list(scan.roots));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact characteristic numbers of complex projective spaces "
                 "and cyclic branched covers"};
    app.require_subcommand(1);
    app.failure_message([](const CLI::App*, const CLI::Error& e) {
        return std::string("error: ") + e.what() + "\n";
    });

    int exit_code = 0;

    // partitions
    long long partitions_n = 0;
    std::string partitions_format = "table";
    auto* partitions_cmd = app.add_subcommand("partitions", "All partitions of n");
    partitions_cmd->add_option("--n", partitions_n, "weight")->required()
        ->check(CLI::Range(0LL, 1'000'000LL));
    partitions_cmd->add_option("--format", partitions_format)
        ->check(CLI::IsMember({"table", "json"}));
    partitions_cmd->callback([&] {
        const auto list = partitions_of(static_cast<int>(partitions_n));
        if (partitions_format == "json") {
            out << "[";
            for (std::size_t i = 0; i < list.size(); ++i) {
                out << (i == 0 ? "\n  " : ",\n  ") << to_json(list[i]).dump();
            }
            out << "\n]\n";
        } else {
            for (const Partition& p : list) out << p.str() << "\n";
        }
    });

    // chern-cpn
    long long chern_n = 0;
    std::string chern_format = "table";
    auto* chern_cmd = app.add_subcommand("chern-cpn", "Chern-number table of CP^n");
    chern_cmd->add_option("--n", chern_n, "complex dimension")->required()
        ->check(CLI::Range(1LL, 64LL));
    chern_cmd->add_option("--format", chern_format)->check(CLI::IsMember({"table", "json"}));
    chern_cmd->callback([&] {
        const ChernData data = cpn_data(static_cast<int>(chern_n));
        if (chern_format == "json") {
            emit_json(out, to_json(data));
        } else {
            Rows rows;
            for (const auto& [I, value] : data.numbers()) {
                rows.emplace_back(I.str(), value.str());
            }
            render_rows(out, rows);
        }
    });

    // ratios
    long long ratios_n = 0;
    std::string ratios_num, ratios_den;
    std::string ratios_format = "table";
    auto* ratios_cmd = app.add_subcommand("ratios", "Ratio of two Chern numbers of CP^n");
    ratios_cmd->add_option("--n", ratios_n, "complex dimension")->required()
        ->check(CLI::Range(1LL, 64LL));
    ratios_cmd->add_option("--num", ratios_num, "numerator partition, e.g. 3,1")->required();
    ratios_cmd->add_option("--den", ratios_den, "denominator partition")->required();
    ratios_cmd->add_option("--format", ratios_format)->check(CLI::IsMember({"table", "json"}));
    ratios_cmd->callback([&] {
        const Rational ratio =
            ratio_cpn(static_cast<int>(ratios_n), Partition::parse(ratios_num),
                      Partition::parse(ratios_den));
        if (ratios_format == "json") {
            emit_json(out, to_json(ratio));
        } else {
            out << ratio.str() << "\n";
        }
    });

    // pontryagin
    long long pont_k = 0, pont_n = 0;
    std::string pont_format = "table";
    auto* pont_cmd =
        app.add_subcommand("pontryagin", "Pontrjagin class p_k as a Chern polynomial");
    pont_cmd->add_option("--k", pont_k, "Pontrjagin index")->required()
        ->check(CLI::Range(1LL, 32LL));
    pont_cmd->add_option("--n", pont_n, "ambient complex dimension")->required()
        ->check(CLI::Range(1LL, 64LL));
    pont_cmd->add_option("--format", pont_format)->check(CLI::IsMember({"table", "json"}));
    pont_cmd->callback([&] {
        const ChernPolynomial p =
            pontrjagin_class(static_cast<int>(pont_k), static_cast<int>(pont_n));
        if (pont_format == "json") {
            emit_json(out, to_json(p));
        } else {
            Rows rows;
            for (const auto& [mono, coeff] : p.terms()) {
                rows.emplace_back(mono.str(), coeff.str());
            }
            render_rows(out, rows);
        }
    });

    // l-genus
    long long lgenus_k = 0;
    std::string lgenus_format = "table";
    auto* lgenus_cmd = app.add_subcommand("l-genus", "The k-th L-polynomial");
    lgenus_cmd->add_option("--k", lgenus_k, "index")->required()->check(CLI::Range(1LL, 8LL));
    lgenus_cmd->add_option("--format", lgenus_format)->check(CLI::IsMember({"table", "json"}));
    lgenus_cmd->callback([&] {
        const LPolynomial& l = l_polynomial(static_cast<int>(lgenus_k));
        if (lgenus_format == "json") {
            emit_json(out, to_json(l));
        } else {
            Rows rows;
            for (const auto& [I, coeff] : l.terms) {
                rows.emplace_back(I.str(), coeff.str());
            }
            render_rows(out, rows);
        }
    });

    // signature
    std::string signature_input;
    long long signature_cpn = 0;
    std::string signature_format = "table";
    auto* signature_cmd =
        app.add_subcommand("signature", "Signature of a Chern-number table via the L-genus");
    auto* sig_input =
        signature_cmd->add_option("--input", signature_input, "ChernData JSON file");
    auto* sig_cpn = signature_cmd->add_option("--cpn", signature_cpn,
                                              "use the table of CP^n instead of a file")
                        ->check(CLI::Range(2LL, 16LL));
    sig_input->excludes(sig_cpn);
    signature_cmd->add_option("--format", signature_format)
        ->check(CLI::IsMember({"table", "json"}));
    signature_cmd->callback([&] {
        ChernData data = [&] {
            if (!signature_input.empty()) {
                return chern_data_from_json(load_json_file(signature_input));
            }
            if (signature_cpn == 0) {
                throw std::invalid_argument("signature: provide --input or --cpn");
            }
            return cpn_data(static_cast<int>(signature_cpn));
        }();
        const Rational sigma = signature(data);
        if (signature_format == "json") {
            emit_json(out, to_json(sigma));
        } else {
            out << sigma.str() << "\n";
        }
    });

    // sign-series
    long long series_d = 0, series_order = 0;
    std::string series_format = "table";
    auto* series_cmd =
        app.add_subcommand("sign-series", "Branched-cover signature series sign(t)");
    series_cmd->add_option("--d", series_d, "ramification degree")->required()
        ->check(CLI::Range(1LL, 1'000'000'000LL));
    series_cmd->add_option("--order", series_order, "truncation order")->required()
        ->check(CLI::Range(0LL, 512LL));
    series_cmd->add_option("--format", series_format)->check(CLI::IsMember({"table", "json"}));
    series_cmd->callback([&] {
        const TruncatedSeries s = sign_series(series_d, static_cast<int>(series_order));
        if (series_format == "json") {
            emit_json(out, to_json(s));
        } else {
            Rows rows;
            for (int degree = 0; degree <= s.order(); ++degree) {
                rows.emplace_back("t^" + std::to_string(degree),
                                  s.coefficient(degree).str());
            }
            render_rows(out, rows);
        }
    });

    // cover
    CoverArgs cover_args;
    std::string cover_format = "table";
    auto* cover_cmd =
        app.add_subcommand("cover", "Full invariant report for a cyclic branched cover");
    add_cover_options(cover_cmd, cover_args);
    cover_cmd->add_option("--format", cover_format)->check(CLI::IsMember({"table", "json"}));
    cover_cmd->callback([&] {
        const CoverInput input = cover_args.build();
        const CoverReport report = cover_report(input, cover_args.scan_bound);
        if (cover_format == "json") {
            emit_json(out, to_json(report));
        } else {
            Rows rows = cover_input_rows(input);
            rows.emplace_back("sigma_X", report.sigma_X.str());
            rows.emplace_back("chi_X", report.chi_X.str());
            if (report.defect_n2.has_value()) {
                rows.emplace_back("defect_n2", report.defect_n2->str());
            }
            if (report.defect_m_slope.has_value()) {
                rows.emplace_back("defect_m_slope", report.defect_m_slope->str());
            }
            append_scan_rows(rows, report.obstruction);
            render_rows(out, rows);
        }
        if (report.obstruction.identically_zero) exit_code = 3;
    });

    // obstruction
    CoverArgs obstruction_args;
    long long obstruction_at = 0;
    std::string obstruction_format = "table";
    auto* obstruction_cmd = app.add_subcommand(
        "obstruction", "Obstruction polynomial T(d) and its integer roots");
    add_cover_options(obstruction_cmd, obstruction_args);
    obstruction_cmd->add_option("--at", obstruction_at,
                                "additionally evaluate the obstruction at this degree")
        ->check(CLI::Range(1LL, std::numeric_limits<long long>::max()));
    obstruction_cmd->add_option("--format", obstruction_format)
        ->check(CLI::IsMember({"table", "json"}));
    obstruction_cmd->callback([&] {
        const CoverInput input = obstruction_args.build();
        const ObstructionScan scan =
            obstruction_polynomial(input, obstruction_args.scan_bound);
        if (obstruction_format == "json") {
            Json j = to_json(scan);
            if (obstruction_at >= 1) {
                j["at_d"] = obstruction_at;
                j["value_at_d"] = to_json(obstruction_value(input, obstruction_at));
            }
            emit_json(out, j);
        } else {
            Rows rows;
            append_scan_rows(rows, scan);
            if (obstruction_at >= 1) {
                rows.emplace_back("value_at_d(" + std::to_string(obstruction_at) + ")",
                                  obstruction_value(input, obstruction_at).str());
            }
            render_rows(out, rows);
        }
        if (scan.identically_zero) exit_code = 3;
    });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("charnum");
    for (const std::string& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace charnum
