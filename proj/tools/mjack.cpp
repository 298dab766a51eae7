// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage error, 3 theorem-contradiction diagnostic, 4 resource guard.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mjack/cache.hpp"
#include "mjack/connection.hpp"
#include "mjack/fh_algebra.hpp"
#include "mjack/io.hpp"
#include "mjack/reconstruct.hpp"
#include "mjack/symfunc.hpp"
#include "mjack/verify.hpp"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kViolation = 3, kGuard = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw UsageError("cannot write " + path);
    out << text;
}

mjack::Partition partition_arg(const std::string& text, const char* flag) {
    try {
        return mjack::parse_partition(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--") + flag + ": " + e.what());
    }
}

int cmd_coeff(const std::string& l, const std::string& m, const std::string& v, const std::optional<long>& at) {
    const auto lambda = partition_arg(l, "lambda");
    const auto mu = partition_arg(m, "mu");
    const auto nu = partition_arg(v, "nu");
    if (lambda.size() != mu.size() || mu.size() != nu.size())
        throw UsageError("partitions have different sizes: " + std::to_string(lambda.size()) + ", " +
                         std::to_string(mu.size()) + ", " + std::to_string(nu.size()));
    if (lambda.size() == 0)
        throw UsageError("partitions must be non-empty");
    const mjack::IntPoly c = mjack::c_coeff(lambda, mu, nu);
    if (at) {
        std::cout << c.eval(mjack::BigInt(*at)).get_str() << "\n";
        return kOk;
    }
    std::cout << c.to_string() << "\n";
    std::cout << "coefficients:";
    if (c.is_zero())
        std::cout << " 0";
    for (const auto& x : c.coeffs())
        std::cout << " " << x.get_str();
    std::cout << "\n";
    return kOk;
}

int cmd_table(int n, const std::string& kind, const std::string& format, const std::string& output) {
    mjack::TableKind k;
    mjack::Format f;
    try {
        k = mjack::parse_table_kind(kind);
        f = mjack::parse_format(format);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (f == mjack::Format::Text)
        throw UsageError("--format must be json, csv or latex for tables");
    if (n < 1)
        throw UsageError("--n must be at least 1");
    write_output(mjack::emit_table(n, k, f), output);
    return kOk;
}

int cmd_fh(const std::string& kind, int r, std::optional<int> i, const std::string& format, const std::string& output) {
    if (r < 1)
        throw UsageError("--r must be at least 1");
    if (r > mjack::kFhGuard)
        throw mjack::GuardExceeded("--r above the guard " + std::to_string(mjack::kFhGuard));
    mjack::Format f;
    try {
        f = mjack::parse_format(format);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (i && kind != "M")
        throw UsageError("--i applies to --kind M only");
    if (i && (*i < 1 || *i > r))
        throw UsageError("--i must lie in [1, r]");
    mjack::LabeledMatrix m;
    if (kind == "U")
        m = mjack::matrix_U(r);
    else if (kind == "L")
        m = mjack::matrix_L(r);
    else if (kind == "M")
        m = i ? mjack::matrix_M_sub(r, *i) : mjack::matrix_M(r);
    else if (kind == "N")
        m = mjack::matrix_N(r);
    else if (kind == "Q")
        m = mjack::matrix_Q(r);
    else
        throw UsageError("--kind must be one of U, L, M, N, Q");
    write_output(mjack::emit_matrix(m, f), output);
    return kOk;
}

int cmd_verify(const std::string& suite, std::optional<int> n, std::optional<int> r, const std::string& report_path) {
    mjack::Suite s;
    try {
        s = mjack::parse_suite(suite);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const int size = n.value_or(r.value_or(4));
    const int rank = r.value_or(n.value_or(4));
    if (size < 1 || rank < 1)
        throw UsageError("--n and --r must be at least 1");
    const mjack::VerifyReport report = mjack::run_suite(s, size, rank);
    write_output(report.to_json(), report_path);
    for (const auto& c : report.checks)
        std::cerr << (c.passed() ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)\n";
    return report.passed() ? kOk : kVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jack connection coefficients, matchings and the graded class algebra"};
    app.require_subcommand(1);
    std::string cache_dir;
    bool no_cache = false;
    app.add_option("--cache-dir", cache_dir, "Jack cache directory (default: $MJACK_CACHE_DIR or ~/.cache/mjack)");
    app.add_flag("--no-cache", no_cache, "Do not read or write the Jack cache");

    std::string lambda, mu, nu;
    std::optional<long> at;
    auto* coeff = app.add_subcommand("coeff", "Print c^lambda_{mu,nu}(b)");
    coeff->add_option("--lambda", lambda, "Partition such as 3,1,1")->required();
    coeff->add_option("--mu", mu)->required();
    coeff->add_option("--nu", nu)->required();
    coeff->add_option("--at", at, "Evaluate at this integer b");

    int table_n = 0;
    std::string table_kind, table_format = "json", table_output;
    auto* table = app.add_subcommand("table", "Emit a whole table at one size");
    table->add_option("--n", table_n)->required();
    table->add_option("--kind", table_kind, "c, marginal, d, h, a or atilde")->required();
    table->add_option("--format", table_format, "json, csv or latex");
    table->add_option("--output,-o", table_output, "Output file (default stdout)");

    std::string fh_kind, fh_format = "text", fh_output;
    int fh_r = 0;
    std::optional<int> fh_i;
    auto* fh = app.add_subcommand("fh", "Print a transition matrix of the graded class algebra");
    fh->add_option("--kind", fh_kind, "U, L, M, N or Q")->required();
    fh->add_option("--r", fh_r)->required();
    fh->add_option("--i", fh_i, "Submatrix index for M");
    fh->add_option("--format", fh_format, "text, json, csv or latex");
    fh->add_option("--output,-o", fh_output);

    std::string suite, report_path;
    std::optional<int> verify_n, verify_r;
    auto* verify = app.add_subcommand("verify", "Run an invariant suite and print a JSON report");
    verify->add_option("--suite", suite, "integrality, multiplicativity, matchings, fh, reconstruct or all")->required();
    verify->add_option("--n", verify_n);
    verify->add_option("--r", verify_r);
    verify->add_option("--report", report_path, "Report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (!no_cache)
            mjack::JackStore::instance().set_cache_dir(cache_dir.empty() ? mjack::default_cache_dir()
                                                                         : std::filesystem::path(cache_dir));
        if (*coeff)
            return cmd_coeff(lambda, mu, nu, at);
        if (*table)
            return cmd_table(table_n, table_kind, table_format, table_output);
        if (*fh)
            return cmd_fh(fh_kind, fh_r, fh_i, fh_format, fh_output);
        if (*verify)
            return cmd_verify(suite, verify_n, verify_r, report_path);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const mjack::TheoremViolation& e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        return kViolation;
    } catch (const mjack::GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return kGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return kUsage;
}
