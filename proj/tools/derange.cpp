// Command-line front end: counting with method selection, identity
// verification sweeps, the block sieve polynomial, density exploration and
// the bundled worked example.

#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "derange/counters.hpp"
#include "derange/enumerate.hpp"
#include "derange/fixtures.hpp"
#include "derange/lambda_poly.hpp"
#include "derange/oracle.hpp"
#include "derange/ornament.hpp"
#include "derange/series.hpp"

namespace {

using derange::BigInt;
using derange::BlockSpec;
using derange::Limits;

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

const std::vector<std::string> kMethods = {"sum", "recursion", "series", "oracle", "ornaments"};

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

std::string join(const std::vector<int>& values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

BigInt run_method(const std::string& method, const BlockSpec& spec, const Limits& limits) {
    if (method == "sum") return derange::count_sum(spec);
    if (method == "recursion") return derange::count_recursion(spec);
    if (method == "series") return derange::count_genfunc(spec);
    if (method == "oracle") return derange::count_derangements_oracle(spec, limits);
    return derange::count_satisfactory(spec, limits);  // "ornaments"
}

void emit_count_line(const std::string& format, const BlockSpec& spec, const std::string& method,
                     const BigInt& count, bool lone) {
    if (format == "json") {
        nlohmann::ordered_json line;
        line["blocks"] = spec.sizes();
        line["descending"] = spec.descending();
        line["method"] = method;
        line["count"] = count.str();
        std::cout << line.dump() << "\n";
    } else if (format == "csv") {
        std::cout << join(spec.sizes(), ' ') << ',' << join(spec.descending(), ' ') << ','
                  << method << ',' << count.str() << "\n";
    } else if (lone) {
        std::cout << count.str() << "\n";
    } else {
        std::cout << method << ' ' << count.str() << "\n";
    }
}

int run_count(const std::string& format, const BlockSpec& spec, const std::string& method,
              const Limits& limits) {
    if (format == "csv") std::cout << "blocks,descending,method,count\n";
    if (method != "all") {
        emit_count_line(format, spec, method, run_method(method, spec, limits), true);
        return kExitOk;
    }
    std::vector<BigInt> counts;
    for (const auto& m : kMethods) counts.push_back(run_method(m, spec, limits));
    for (std::size_t i = 0; i < kMethods.size(); ++i)
        emit_count_line(format, spec, kMethods[i], counts[i], false);
    for (const auto& c : counts)
        if (c != counts.front()) {
            std::cerr << "error: methods disagree\n";
            return kExitIdentityFailure;
        }
    return kExitOk;
}

BigInt factorial_product(const std::vector<int>& sizes) {
    BigInt d = 1;
    for (int a : sizes) d *= derange::factorial(a);
    return d;
}

std::vector<int> all_blocks(int k) {
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i + 1;
    return s;
}

int run_verify(int max_n, int max_k, const Limits& limits) {
    if (max_n > 9) {
        std::cerr << "verify: max-n " << max_n << " refused; identities need full S_n scans\n";
        return kExitLimit;
    }
    long long specs = 0, checks = 0;
    bool ok = true;
    std::string failure;
    const auto fail = [&](const std::vector<int>& a, const std::vector<int>& s,
                          const std::string& what, const BigInt& lhs, const BigInt& rhs) {
        if (!ok) return;
        ok = false;
        failure = "blocks=" + join(a, ',') + " descending=" + join(s, ',') + ": " + what + ": " +
                  lhs.str() + " != " + rhs.str();
    };
    for (int n = 1; n <= max_n && ok; ++n) {
        const long long specs_before = specs;
        derange::for_each_composition(n, [&](const std::vector<int>& a) {
            if (!ok || static_cast<int>(a.size()) > max_k) return;
            const int k = static_cast<int>(a.size());
            const auto full = all_blocks(k);
            const auto sieve = derange::sieve_polynomial(a);
            const BigInt descending_count = derange::count_sum(BlockSpec(a, full));
            if (!derange::is_constant(sieve))
                fail(a, full, "sieve polynomial not constant", derange::constant_term(sieve),
                     descending_count);
            else if (derange::constant_term(sieve) != descending_count)
                fail(a, full, "sieve constant vs descending count",
                     derange::constant_term(sieve), descending_count);
            ++checks;
            if (ok && n <= limits.full_scan_n) {
                const BigInt normalized = derange::normalized_weight_sum(a, limits);
                if (normalized != descending_count)
                    fail(a, full, "normalized weight sum vs descending count", normalized,
                         descending_count);
                ++checks;
            }
            derange::for_each_subset(k, [&](const std::vector<int>& s) {
                if (!ok) return;
                const BlockSpec spec(a, s);
                ++specs;
                const BigInt by_sum = derange::count_sum(spec);
                const BigInt by_recursion = derange::count_recursion(spec);
                const BigInt by_series = derange::count_genfunc(spec);
                const BigInt by_oracle = derange::count_derangements_oracle(spec, limits);
                if (by_recursion != by_sum)
                    fail(a, s, "recursion vs sum", by_recursion, by_sum);
                else if (by_series != by_sum)
                    fail(a, s, "series vs sum", by_series, by_sum);
                else if (by_oracle != by_sum)
                    fail(a, s, "oracle vs sum", by_oracle, by_sum);
                checks += 3;
                if (!ok || n > limits.full_scan_n) return;
                const BigInt divisor = factorial_product(a);
                const BigInt weighted =
                    derange::exact_div(derange::sum_acceptable_weights(spec, limits), divisor);
                if (weighted != by_sum) {
                    fail(a, s, "acceptable weight sum / prod a_i!", weighted, by_sum);
                    return;
                }
                const BigInt ornaments = derange::count_satisfactory(spec, limits);
                if (ornaments != by_sum) {
                    fail(a, s, "satisfactory ornament count", ornaments, by_sum);
                    return;
                }
                const BigInt confined = derange::count_even_small_totals(spec, limits);
                if (confined != divisor * by_sum) {
                    fail(a, s, "even-small-total count vs prod a_i! * count", confined,
                         divisor * by_sum);
                    return;
                }
                checks += 3;
            });
        });
        if (ok) std::cout << "n " << n << ": " << (specs - specs_before) << " specs ok\n";
    }
    if (!ok) {
        std::cout << "FAIL " << failure << "\n";
        return kExitIdentityFailure;
    }
    std::cout << "all identities hold: " << specs << " specs, " << checks << " checks\n";
    return kExitOk;
}

int run_lambda(const std::vector<int>& sizes) {
    const auto sieve = derange::sieve_polynomial(sizes);
    std::cout << "coefficients";
    if (sieve.degree() < 0) std::cout << " 0";
    for (const auto& c : sieve.coeffs()) std::cout << ' ' << c.str();
    std::cout << "\n";
    if (!derange::is_constant(sieve)) {
        std::cout << "not constant\n";
        return kExitIdentityFailure;
    }
    const BigInt constant = derange::constant_term(sieve);
    std::cout << "constant " << constant.str() << "\n";
    const BigInt count =
        derange::count_sum(BlockSpec(sizes, all_blocks(static_cast<int>(sizes.size()))));
    std::cout << "descending derangement count " << count.str() << "\n";
    return constant == count ? kExitOk : kExitIdentityFailure;
}

// 1/e rounded to 12 decimal places, as an integer scaled by 10^12.
const BigInt kInvE12("367879441171");
const BigInt kScale12 = []() {
    BigInt s = 1;
    for (int i = 0; i < 12; ++i) s *= 10;
    return s;
}();

BigInt ratio_scaled_12(const BigInt& num, const BigInt& den) {
    return (num * kScale12 * 2 + den) / (den * 2);  // round half up
}

std::string format_scaled_12(const BigInt& scaled) {
    const BigInt whole = scaled / kScale12;
    const BigInt remainder = scaled % kScale12;
    std::string frac = remainder.str();
    frac.insert(frac.begin(), 12 - frac.size(), '0');
    return whole.str() + "." + frac;
}

int run_density(const std::string& format, const std::vector<int>& sizes,
                const std::vector<int>& descending, int scale_max) {
    if (format == "csv")
        std::cout << "scale,blocks,count,total,ratio,abs_diff_inv_e\n";
    else if (format == "plain")
        std::cout << "scale blocks count total ratio |ratio-1/e|\n";
    for (int c = 1; c <= scale_max; ++c) {
        std::vector<int> scaled(sizes.size());
        for (std::size_t i = 0; i < sizes.size(); ++i) scaled[i] = sizes[i] * c;
        const BlockSpec spec(scaled, descending);
        const BigInt count = derange::count_sum(spec);
        const BigInt total = derange::multinomial(scaled);
        const BigInt ratio = ratio_scaled_12(count, total);
        const BigInt diff = ratio >= kInvE12 ? ratio - kInvE12 : kInvE12 - ratio;
        if (format == "json") {
            nlohmann::ordered_json line;
            line["blocks"] = scaled;
            line["descending"] = spec.descending();
            line["scale"] = c;
            line["count"] = count.str();
            line["total"] = total.str();
            line["ratio"] = format_scaled_12(ratio);
            line["abs_diff_inv_e"] = format_scaled_12(diff);
            std::cout << line.dump() << "\n";
        } else {
            const bool csv = format == "csv";
            const char sep = csv ? ',' : ' ';
            std::cout << c << sep << join(scaled, csv ? ' ' : ',') << sep << count.str() << sep
                      << total.str() << sep << format_scaled_12(ratio) << sep
                      << format_scaled_12(diff) << "\n";
        }
    }
    return kExitOk;
}

int run_fixture(const std::string& name) {
    if (name != "figure1") {
        std::cerr << "error: unknown fixture '" << name << "'\n";
        return kExitUsage;
    }
    const BlockSpec spec = derange::fixtures::spec_8_10();
    const auto p = derange::fixtures::permutation_8_10();
    std::cout << "blocks " << join(spec.sizes(), ',') << "\n";
    std::cout << "descending " << join(spec.descending(), ',') << "\n";
    std::cout << "permutation " << p << "\n";
    std::cout << "cycles";
    for (const auto& cycle : derange::cycles(p)) std::cout << " (" << join(cycle, ' ') << ")";
    std::cout << "\n";
    const auto ornament = derange::to_ornament(spec, p);
    std::cout << "ornament " << ornament << "\n";
    std::cout << "symmetry order " << derange::symmetry_order(ornament).str() << "\n";
    std::cout << "augmentation " << derange::augment(ornament) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"count derangements with prescribed ascending and descending blocks"};
    app.require_subcommand(1);

    std::string format = "plain";
    int limit_n = -1;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    app.add_option("--limit-n", limit_n, "override the enumeration and full-scan size limits");

    std::string count_blocks, count_desc, count_method = "sum";
    auto* count = app.add_subcommand("count", "count the derangements of one instance");
    count->fallthrough();
    count->add_option("--blocks", count_blocks, "comma-separated block sizes")->required();
    count->add_option("--descending", count_desc, "comma-separated descending block indices");
    count->add_option("--method", count_method)
        ->check(CLI::IsMember({"sum", "recursion", "series", "oracle", "ornaments", "all"}));

    int max_n = 6, max_k = 9;
    auto* verify = app.add_subcommand("verify", "cross-check every identity on small instances");
    verify->fallthrough();
    verify->add_option("--max-n", max_n, "largest n to sweep (at most 9)");
    verify->add_option("--max-k", max_k, "largest number of blocks to sweep");

    std::string lambda_blocks;
    auto* lambda = app.add_subcommand("lambda", "evaluate the block sieve polynomial");
    lambda->fallthrough();
    lambda->add_option("--blocks", lambda_blocks)->required();

    std::string density_blocks, density_desc;
    int scale_max = 8;
    auto* density = app.add_subcommand("density", "derangement density under scaled blocks");
    density->fallthrough();
    density->add_option("--blocks", density_blocks)->required();
    density->add_option("--descending", density_desc);
    density->add_option("--scale-max", scale_max)->check(CLI::PositiveNumber);

    std::string fixture_name;
    auto* fixture = app.add_subcommand("fixture", "print a bundled worked example");
    fixture->fallthrough();
    fixture->add_option("name", fixture_name)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        Limits limits;
        if (limit_n >= 0) limits = Limits{limit_n, limit_n};
        if (*count)
            return run_count(format, BlockSpec(parse_int_list(count_blocks),
                                               parse_int_list(count_desc)),
                             count_method, limits);
        if (*verify) return run_verify(max_n, max_k, limits);
        if (*lambda) return run_lambda(parse_int_list(lambda_blocks));
        if (*density)
            return run_density(format, parse_int_list(density_blocks),
                               parse_int_list(density_desc), scale_max);
        return run_fixture(fixture_name);
    } catch (const derange::LimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitLimit;
    } catch (const derange::ExactDivisionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIdentityFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIdentityFailure;
    }
}
