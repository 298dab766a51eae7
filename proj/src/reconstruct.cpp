#include "mjack/reconstruct.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "mjack/fh_algebra.hpp"
#include "parallel.hpp"

namespace mjack {

using nlohmann::json;

MarginalSource marginals_from_connection(int n) {
    auto table = marginal_table(n);
    return MarginalSource{n, [table](const Partition& lambda, const Partition& mu, int l) {
                              return table->at(lambda, mu, l);
                          }};
}

namespace {

IntPoly parse_poly_b(const json& j) {
    std::vector<BigInt> coeffs;
    for (const auto& c : j) {
        if (c.is_string())
            coeffs.emplace_back(c.get<std::string>());
        else if (c.is_number_integer())
            coeffs.emplace_back(c.get<long>());
        else
            throw std::runtime_error("poly_b coefficients must be integers or decimal strings");
    }
    return IntPoly(std::move(coeffs));
}

} // namespace

MarginalSource marginals_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("marginal file is not valid JSON: ") + e.what());
    }
    const int n = doc.at("n").get<int>();
    if (n < 1)
        throw std::runtime_error("marginal file: n must be at least 1");
    const std::size_t d = partition_count(n);
    auto data = std::make_shared<std::vector<IntPoly>>(d * d * static_cast<std::size_t>(n));
    std::vector<char> seen(data->size(), 0);
    auto slot = [n, d](const Partition& lambda, const Partition& mu, int l) {
        return (partition_index(lambda) * d + partition_index(mu)) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(l - 1);
    };
    for (const auto& e : doc.at("entries")) {
        const Partition lambda = parse_partition(e.at("lambda").get<std::string>());
        const Partition mu = parse_partition(e.at("mu").get<std::string>());
        const int l = e.at("l").get<int>();
        if (lambda.size() != n || mu.size() != n || l < 1 || l > n)
            throw std::runtime_error("marginal file: entry (" + encode(lambda) + ", " + encode(mu) + ", " +
                                     std::to_string(l) + ") is out of range for n=" + std::to_string(n));
        const std::size_t s = slot(lambda, mu, l);
        if (seen[s])
            throw std::runtime_error("marginal file: duplicate entry (" + encode(lambda) + ", " + encode(mu) +
                                     ", " + std::to_string(l) + ")");
        seen[s] = 1;
        (*data)[s] = parse_poly_b(e.at("poly_b"));
    }
    for (std::size_t s = 0; s < seen.size(); ++s)
        if (!seen[s])
            throw std::runtime_error("marginal file: " + std::to_string(seen.size()) +
                                     " entries expected, some are missing");
    return MarginalSource{n, [data, slot](const Partition& lambda, const Partition& mu, int l) {
                              return (*data)[slot(lambda, mu, l)];
                          }};
}

MarginalSource marginals_from_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open marginal file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return marginals_from_json(ss.str());
}

std::vector<std::pair<Partition, int>> condition_c2_pairs(int n, int r) {
    if (r < 1 || r >= n)
        throw std::invalid_argument("condition_c2_pairs: need 1 <= r < n");
    std::vector<std::pair<Partition, int>> out;
    for (const auto& pi : all_partitions(r))
        out.emplace_back(union_of(pi, ones(n - r)), n - pi.length());
    return out;
}

PartialCoeffTable base_case(int n) {
    PartialCoeffTable known(n);
    const std::size_t d = known.table.dim();
    const std::size_t ones_index = 0; // 1^n is the smallest partition
    for (std::size_t i = 0; i < d; ++i)
        known.table.at(i, i, ones_index) = IntPoly::constant(1);
    known.complete_below = 1;
    return known;
}

IntPoly rhs_value(const Partition& lambda, const Partition& mu, const Partition& nu, int l, int r,
                  const PartialCoeffTable& known, const MarginalSource& marginals) {
    if (known.complete_below < r)
        throw std::logic_error("rhs_value: coefficients of rank " + std::to_string(known.complete_below) +
                               " are needed before solving rank " + std::to_string(r));
    if (nu.rank() >= r)
        throw std::logic_error("rhs_value: nu must have rank below r");
    const auto& parts = all_partitions(lambda.size());
    const CoeffTable& c = known.table;
    IntPoly acc;
    for (const auto& theta : parts) {
        const IntPoly& ct = c.at(theta, mu, nu);
        if (!ct.is_zero())
            acc += marginals.get(lambda, theta, l) * ct;
    }
    for (const auto& kappa : parts) {
        if (kappa.rank() >= r)
            continue;
        const IntPoly& ck = c.at(lambda, mu, kappa);
        if (!ck.is_zero())
            acc -= ck * marginals.get(kappa, nu, l);
    }
    return acc;
}

LabeledMatrix assemble_rank_matrix(int n, int r, const MarginalSource& marginals) {
    const LabeledMatrix q = matrix_Q(r);
    LabeledMatrix a = q.sub([](const Partition&) { return true; },
                            [n, r](const Partition& rho) { return rho.length() <= n - r; });
    a.name = "A";
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        const Partition& pi = a.rows[i];
        const Partition nu = union_of(pi, ones(n - r));
        const int l = n - pi.length();
        for (std::size_t j = 0; j < a.cols.size(); ++j) {
            const IntPoly mc = marginals.get(oplus(a.cols[j], ones(n - r)), nu, l);
            if (mc.degree() > 0)
                throw TheoremViolation("top marginal mc^" + encode(oplus(a.cols[j], ones(n - r))) + "_{" +
                                       encode(nu) + "," + std::to_string(l) + "} is not constant: " +
                                       mc.to_string());
            a.entries(i, j) = mc.coeff(0);
        }
    }
    return a;
}

RankSolution solve_rank(int n, int r, const PartialCoeffTable& known, const MarginalSource& marginals,
                        Exec exec) {
    if (known.complete_below < r)
        throw std::logic_error("solve_rank: lower ranks are incomplete");
    const LabeledMatrix q = matrix_Q(r);
    const LabeledMatrix a = assemble_rank_matrix(n, r, marginals);
    const LabeledMatrix q_erased = q.sub([](const Partition&) { return true; },
                                         [n, r](const Partition& rho) { return rho.length() <= n - r; });
    if (!(a.entries == q_erased.entries))
        throw TheoremViolation("system matrix at n=" + std::to_string(n) + ", rank " + std::to_string(r) +
                               " differs from Q");

    const auto& parts = all_partitions(n);
    // Marginals of higher rank vanish on every equation of the stratum.
    for (const auto& pi : q.rows) {
        const Partition nu = union_of(pi, ones(n - r));
        const int l = n - pi.length();
        for (const auto& kappa : parts)
            if (kappa.rank() > r && !marginals.get(kappa, nu, l).is_zero())
                throw TheoremViolation("mc^" + encode(kappa) + "_{" + encode(nu) + "," + std::to_string(l) +
                                       "} is non-zero although rk(kappa) > " + std::to_string(r));
    }

    const IntMatrix q_inv = inverse_unimodular(q.entries);
    const std::size_t d = parts.size();
    const std::size_t k = q.rows.size();
    std::vector<std::vector<IntPoly>> solutions(d * d);
    detail::run_indexed(d * d, exec, [&](std::size_t idx) {
        const Partition& lambda = parts[idx / d];
        const Partition& mu = parts[idx % d];
        std::vector<IntPoly> y(k);
        for (std::size_t i = 0; i < k; ++i) {
            const Partition& pi = q.rows[i];
            y[i] = rhs_value(lambda, mu, union_of(pi, ones(n - r)), n - pi.length(), r, known, marginals);
        }
        std::vector<IntPoly> x(k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < k; ++i)
                if (q_inv(j, i) != 0 && !y[i].is_zero())
                    x[j] += y[i] * q_inv(j, i);
        for (std::size_t j = 0; j < k; ++j)
            if (q.cols[j].length() > n - r && !x[j].is_zero())
                throw TheoremViolation("padded unknown for rho=" + encode(q.cols[j]) + " at (" + encode(lambda) +
                                       ", " + encode(mu) + ") solves to " + x[j].to_string());
        solutions[idx] = std::move(x);
    });

    RankSolution out;
    for (std::size_t idx = 0; idx < d * d; ++idx)
        for (std::size_t j = 0; j < k; ++j) {
            const Partition& rho = q.cols[j];
            if (rho.length() > n - r)
                continue;
            out.emplace(std::make_tuple(parts[idx / d], parts[idx % d], oplus(rho, ones(n - r))),
                        std::move(solutions[idx][j]));
        }
    return out;
}

CoeffTable reconstruct_all(int n, const MarginalSource& marginals, Exec exec) {
    if (marginals.n != n)
        throw std::runtime_error("marginal source is for n=" + std::to_string(marginals.n) + ", not " +
                                 std::to_string(n));
    PartialCoeffTable known = base_case(n);
    for (int r = 1; r < n; ++r) {
        RankSolution sol = solve_rank(n, r, known, marginals, exec);
        for (auto& [key, poly] : sol) {
            const auto& [lambda, mu, kappa] = key;
            known.table.at(partition_index(lambda), partition_index(mu), partition_index(kappa)) = std::move(poly);
        }
        known.complete_below = r + 1;
    }
    return std::move(known.table);
}

CheckResult check_reconstruct(int n) {
    CheckResult res;
    res.name = "reconstruct n=" + std::to_string(n);
    ++res.cases;
    try {
        const CoeffTable rebuilt = reconstruct_all(n, marginals_from_connection(n));
        const CoeffTable& direct = *coeff_table(n);
        const std::size_t d = direct.dim();
        const auto& parts = direct.parts();
        for (std::size_t l = 0; l < d; ++l)
            for (std::size_t m = 0; m < d; ++m)
                for (std::size_t v = 0; v < d; ++v) {
                    ++res.cases;
                    if (!(rebuilt.at(l, m, v) == direct.at(l, m, v)))
                        res.fail("c^" + encode(parts[l]) + "_{" + encode(parts[m]) + "," + encode(parts[v]) +
                                 "}: rebuilt " + rebuilt.at(l, m, v).to_string() + ", direct " +
                                 direct.at(l, m, v).to_string());
                }
    } catch (const TheoremViolation& e) {
        res.fail(e.what());
    }
    return res;
}

} // namespace mjack
