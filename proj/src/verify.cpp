#include "mjack/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "mjack/connection.hpp"
#include "mjack/fh_algebra.hpp"
#include "mjack/group_algebra.hpp"
#include "mjack/matchings.hpp"
#include "mjack/reconstruct.hpp"

namespace mjack {

Suite parse_suite(const std::string& s) {
    if (s == "integrality")
        return Suite::Integrality;
    if (s == "multiplicativity")
        return Suite::Multiplicativity;
    if (s == "matchings")
        return Suite::Matchings;
    if (s == "fh")
        return Suite::Fh;
    if (s == "reconstruct")
        return Suite::Reconstruct;
    if (s == "all")
        return Suite::All;
    throw std::invalid_argument("unknown suite '" + s + "'");
}

std::string suite_name(Suite s) {
    switch (s) {
    case Suite::Integrality:
        return "integrality";
    case Suite::Multiplicativity:
        return "multiplicativity";
    case Suite::Matchings:
        return "matchings";
    case Suite::Fh:
        return "fh";
    case Suite::Reconstruct:
        return "reconstruct";
    case Suite::All:
        return "all";
    }
    return "?";
}

namespace {

std::string triple(const Partition& l, const Partition& m, const Partition& v) {
    return "(" + encode(l) + " | " + encode(m) + " | " + encode(v) + ")";
}

} // namespace

CheckResult check_c_integrality(int n) {
    CheckResult res;
    res.name = "c-integrality n=" + std::to_string(n);
    const auto& parts = all_partitions(n);
    for (const auto& l : parts)
        for (const auto& m : parts)
            for (const auto& v : parts) {
                ++res.cases;
                const Certification cert = certify_c(l, m, v);
                if (!cert)
                    res.fail(triple(l, m, v) + ": " + cert.witness);
            }
    return res;
}

CheckResult check_marginal_theorem(int n) {
    CheckResult res;
    res.name = "marginal-nonnegativity-and-degree n=" + std::to_string(n);
    const auto table = marginal_table(n);
    for (const auto& l : all_partitions(n))
        for (const auto& m : all_partitions(n))
            for (int len = 1; len <= n; ++len) {
                ++res.cases;
                const IntPoly& mc = table->at(l, m, len);
                const int bound = n - len + l.length() - m.length();
                if (!mc.nonnegative())
                    res.fail("mc" + triple(l, m, Partition{len}) + " = " + mc.to_string() + " has a negative coefficient");
                else if (!mc.is_zero() && mc.degree() > bound)
                    res.fail("mc" + triple(l, m, Partition{len}) + " = " + mc.to_string() + " exceeds degree " +
                             std::to_string(bound));
            }
    return res;
}

CheckResult check_cumulants(int n) {
    CheckResult res;
    res.name = "cumulant-integrality n=" + std::to_string(n);
    const auto& parts = all_partitions(n);
    for (const auto& l : parts)
        for (const auto& m : parts)
            for (const auto& v : parts) {
                ++res.cases;
                try {
                    const Certification log_form = certify_integer_poly_b(cumulant_d_log(l, m, v));
                    if (!log_form) {
                        res.fail("d" + triple(l, m, v) + " is not in Z[b]: " + log_form.witness);
                        continue;
                    }
                    const IntPoly d = cumulant_d(l, m, v);
                    if (!(d == *log_form.poly)) {
                        res.fail("d" + triple(l, m, v) + ": set-partition form " + d.to_string() +
                                 ", log form " + log_form.poly->to_string());
                        continue;
                    }
                    const HCoeff h = h_coeff(l, m, v); // throws on inexact division
                    if (l == Partition{n} && !h.integral)
                        res.fail("h" + triple(l, m, v) + " is not integral");
                } catch (const TheoremViolation& e) {
                    res.fail(triple(l, m, v) + ": " + e.what());
                }
            }
    return res;
}

CheckResult check_row_sums(int n) {
    CheckResult res;
    res.name = "row-sums n=" + std::to_string(n);
    for (const auto& l : all_partitions(n))
        for (const auto& v : all_partitions(n)) {
            ++res.cases;
            if (!check_row_sum(l, v))
                res.fail("row sum for lambda=" + encode(l) + ", nu=" + encode(v));
        }
    return res;
}

std::vector<std::pair<std::string, std::string>> observe_coefficients(int n) {
    const auto table = coeff_table(n);
    std::size_t negative = 0, nonzero = 0;
    int max_degree = -1;
    const std::size_t d = table->dim();
    for (std::size_t l = 0; l < d; ++l)
        for (std::size_t m = 0; m < d; ++m)
            for (std::size_t v = 0; v < d; ++v) {
                const IntPoly& p = table->at(l, m, v);
                if (p.is_zero())
                    continue;
                ++nonzero;
                negative += p.nonnegative() ? 0 : 1;
                max_degree = std::max(max_degree, p.degree());
            }
    const std::string tag = " n=" + std::to_string(n);
    return {{"c-nonzero" + tag, std::to_string(nonzero)},
            {"c-with-negative-coefficient" + tag, std::to_string(negative)},
            {"c-max-degree" + tag, std::to_string(max_degree)}};
}

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

std::string VerifyReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["suite"] = suite;
    doc["n"] = n;
    doc["r"] = r;
    doc["passed"] = passed();
    nlohmann::ordered_json checks_json = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json j;
        j["name"] = c.name;
        j["status"] = c.passed() ? "pass" : "fail";
        j["cases"] = c.cases;
        j["failures"] = c.failure_count;
        j["diagnostics"] = c.failures;
        checks_json.push_back(std::move(j));
    }
    doc["checks"] = std::move(checks_json);
    nlohmann::ordered_json obs = nlohmann::ordered_json::object();
    for (const auto& [k, v] : observations)
        obs[k] = v;
    doc["observations"] = std::move(obs);
    return doc.dump(2) + "\n";
}

VerifyReport run_suite(Suite suite, int n, int r) {
    if (n < 1 || r < 1)
        throw std::invalid_argument("suite sizes must be at least 1");
    VerifyReport report;
    report.suite = suite_name(suite);
    report.n = n;
    report.r = r;
    const bool all = suite == Suite::All;
    auto add = [&report](CheckResult c) { report.checks.push_back(std::move(c)); };

    if (all || suite == Suite::Integrality)
        for (int m = 1; m <= n; ++m) {
            add(check_c_integrality(m));
            add(check_marginal_theorem(m));
            add(check_cumulants(m));
            add(check_row_sums(m));
            for (auto& o : observe_coefficients(m))
                report.observations.push_back(std::move(o));
        }
    if (all || suite == Suite::Multiplicativity)
        for (int m = 1; m <= n; ++m) {
            add(check_multiplicativity(m));
            add(check_marginal_multiplicativity(m));
        }
    if (all || suite == Suite::Matchings) {
        if (n > kMatchingGuard)
            throw GuardExceeded("matching suite at n=" + std::to_string(n) + " exceeds the guard n <= " +
                                std::to_string(kMatchingGuard));
        for (int m = 1; m <= n; ++m) {
            add(verify_b01(m));
            add(verify_comb_multiplicativity(m));
        }
    }
    if (all || suite == Suite::Fh) {
        if (r > kFhGuard)
            throw GuardExceeded("graded-algebra suite at r=" + std::to_string(r) + " exceeds the guard r <= " +
                                std::to_string(kFhGuard));
        for (int k = 1; k <= r; ++k)
            add(check_fh_matrices(k));
        // The marginal route needs coefficient tables of size up to 2k.
        for (int k = 1; k <= std::min(r, 4); ++k)
            add(check_top_coeff_paths(k));
        add(check_stabilization(r));
        const int group_n = std::min(r + 1, kGroupGuard - 1);
        for (int m = 2; m <= group_n; ++m) {
            add(check_jm_elementary(m));
            add(check_jm_monomial(m));
        }
        for (int m = 1; m <= std::min(r, 6); ++m)
            add(check_bridge(m));
    }
    if (all || suite == Suite::Reconstruct)
        for (int m = 1; m <= n; ++m)
            add(check_reconstruct(m));
    return report;
}

} // namespace mjack
