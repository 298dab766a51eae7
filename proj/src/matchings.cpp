#include "mjack/matchings.hpp"

#include <exception>
#include <mutex>
#include <stdexcept>

namespace mjack {

bool Matching::valid() const {
    if (partner.size() != static_cast<std::size_t>(2 * n))
        return false;
    for (int x = 0; x < 2 * n; ++x) {
        const int y = partner[static_cast<std::size_t>(x)];
        if (y < 0 || y >= 2 * n || y == x || partner[static_cast<std::size_t>(y)] != x)
            return false;
    }
    return true;
}

bool Matching::is_bipartite() const {
    for (int x = 0; x < n; ++x)
        if (partner[static_cast<std::size_t>(x)] < n)
            return false;
    return true;
}

std::pair<Matching, Matching> canonical_deltas(const Partition& lambda) {
    const int n = lambda.size();
    if (n < 1)
        throw std::invalid_argument("canonical_deltas: n must be at least 1");
    Matching d1{n, std::vector<int>(static_cast<std::size_t>(2 * n))};
    Matching d2 = d1;
    for (int i = 0; i < n; ++i) {
        d1.partner[static_cast<std::size_t>(i)] = n + i;
        d1.partner[static_cast<std::size_t>(n + i)] = i;
    }
    int start = 0;
    for (int k : lambda.parts()) {
        for (int j = 0; j < k; ++j) {
            const int i = start + j;
            const int succ = start + (j + 1) % k;
            d2.partner[static_cast<std::size_t>(i)] = n + succ;
            d2.partner[static_cast<std::size_t>(n + succ)] = i;
        }
        start += k;
    }
    if (lambda_of(d1, d2) != lambda)
        throw TheoremViolation("canonical pair for " + lambda.to_string() + " has the wrong type");
    return {d1, d2};
}

Partition lambda_of(const Matching& a, const Matching& b) {
    if (a.n != b.n)
        throw std::invalid_argument("lambda_of: matchings on different point sets");
    const std::size_t total = static_cast<std::size_t>(2 * a.n);
    std::vector<char> seen(total, 0);
    std::vector<int> halves;
    for (std::size_t v = 0; v < total; ++v) {
        if (seen[v])
            continue;
        int size = 0;
        std::size_t x = v;
        // alternate a-edge, b-edge around the cycle
        do {
            seen[x] = 1;
            const auto y = static_cast<std::size_t>(a.partner[x]);
            seen[y] = 1;
            size += 2;
            x = static_cast<std::size_t>(b.partner[y]);
        } while (x != v);
        halves.push_back(size / 2);
    }
    return Partition(halves);
}

namespace {

void enumerate_general(Matching& m, std::vector<char>& used, const std::function<void(const Matching&)>& visit) {
    const int total = 2 * m.n;
    int x = 0;
    while (x < total && used[static_cast<std::size_t>(x)])
        ++x;
    if (x == total) {
        visit(m);
        return;
    }
    used[static_cast<std::size_t>(x)] = 1;
    for (int y = x + 1; y < total; ++y) {
        if (used[static_cast<std::size_t>(y)])
            continue;
        used[static_cast<std::size_t>(y)] = 1;
        m.partner[static_cast<std::size_t>(x)] = y;
        m.partner[static_cast<std::size_t>(y)] = x;
        enumerate_general(m, used, visit);
        used[static_cast<std::size_t>(y)] = 0;
    }
    used[static_cast<std::size_t>(x)] = 0;
}

void enumerate_bipartite(Matching& m, int i, std::vector<char>& used_hat,
                         const std::function<void(const Matching&)>& visit) {
    if (i == m.n) {
        visit(m);
        return;
    }
    for (int h = 0; h < m.n; ++h) {
        if (used_hat[static_cast<std::size_t>(h)])
            continue;
        used_hat[static_cast<std::size_t>(h)] = 1;
        m.partner[static_cast<std::size_t>(i)] = m.n + h;
        m.partner[static_cast<std::size_t>(m.n + h)] = i;
        enumerate_bipartite(m, i + 1, used_hat, visit);
        used_hat[static_cast<std::size_t>(h)] = 0;
    }
}

// Matchings whose point 0 is paired with its `first`-th admissible partner.
int first_choices(int n, bool bipartite_only) { return bipartite_only ? n : 2 * n - 1; }

void enumerate_prefix(int n, bool bipartite_only, int first, const std::function<void(const Matching&)>& visit) {
    Matching m{n, std::vector<int>(static_cast<std::size_t>(2 * n), -1)};
    if (bipartite_only) {
        std::vector<char> used_hat(static_cast<std::size_t>(n), 0);
        used_hat[static_cast<std::size_t>(first)] = 1;
        m.partner[0] = n + first;
        m.partner[static_cast<std::size_t>(n + first)] = 0;
        enumerate_bipartite(m, 1, used_hat, visit);
    } else {
        std::vector<char> used(static_cast<std::size_t>(2 * n), 0);
        const int y = first + 1;
        used[0] = used[static_cast<std::size_t>(y)] = 1;
        m.partner[0] = y;
        m.partner[static_cast<std::size_t>(y)] = 0;
        enumerate_general(m, used, visit);
    }
}

void check_guard(int n, int guard) {
    if (n < 1)
        throw std::invalid_argument("matching enumeration: n must be at least 1");
    if (n > guard)
        throw GuardExceeded("matching enumeration at n=" + std::to_string(n) + " exceeds the guard n <= " +
                            std::to_string(guard));
}

} // namespace

void for_each_matching(int n, bool bipartite_only, const std::function<void(const Matching&)>& visit) {
    if (n < 1)
        throw std::invalid_argument("for_each_matching: n must be at least 1");
    for (int f = 0; f < first_choices(n, bipartite_only); ++f)
        enumerate_prefix(n, bipartite_only, f, visit);
}

CountTable::CountTable(int n, bool bipartite_only)
    : n_(n), bipartite_(bipartite_only), dim_(partition_count(n)), counts_(dim_ * dim_ * dim_, 0) {}

BigInt CountTable::at(const Partition& lambda, const Partition& mu, const Partition& nu) const {
    if (lambda.size() != n_ || mu.size() != n_ || nu.size() != n_)
        throw std::invalid_argument("CountTable::at: partitions must have size " + std::to_string(n_));
    return BigInt(static_cast<unsigned long>(at(partition_index(lambda), partition_index(mu), partition_index(nu))));
}

CountTable count_table(int n, bool bipartite_only, Exec exec, int guard) {
    check_guard(n, guard);
    const auto& parts = all_partitions(n);
    const std::size_t d = parts.size();
    std::vector<Matching> d2;
    Matching d1;
    for (const auto& la : parts) {
        auto [a, b] = canonical_deltas(la);
        d1 = a; // identical for every λ
        d2.push_back(b);
    }
    CountTable table(n, bipartite_only);
    auto tally_prefix = [&](int first, CountTable& local) {
        enumerate_prefix(n, bipartite_only, first, [&](const Matching& m) {
            const std::size_t mu = partition_index(lambda_of(d1, m));
            for (std::size_t l = 0; l < d; ++l)
                ++local.at(l, mu, partition_index(lambda_of(m, d2[l])));
        });
    };
    const int firsts = first_choices(n, bipartite_only);
    if (exec == Exec::Serial) {
        for (int f = 0; f < firsts; ++f)
            tally_prefix(f, table);
        return table;
    }
    std::mutex merge_mutex;
    std::exception_ptr error;
#pragma omp parallel
    {
        CountTable local(n, bipartite_only);
#pragma omp for schedule(dynamic)
        for (int f = 0; f < firsts; ++f) {
            try {
                tally_prefix(f, local);
            } catch (...) {
                std::lock_guard lock(merge_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
        std::lock_guard lock(merge_mutex);
        for (std::size_t l = 0; l < d; ++l)
            for (std::size_t m = 0; m < d; ++m)
                for (std::size_t v = 0; v < d; ++v)
                    table.at(l, m, v) += local.at(l, m, v);
    }
    if (error)
        std::rethrow_exception(error);
    return table;
}

BigInt count_a(const Matching& d1, const Matching& d2, const Partition& mu, const Partition& nu,
               bool bipartite_only) {
    if (mu.size() != d1.n || nu.size() != d1.n || d2.n != d1.n)
        throw std::invalid_argument("count_a: size mismatch");
    if (!d1.is_bipartite() || !d2.is_bipartite())
        throw std::invalid_argument("count_a: reference matchings must be bipartite");
    unsigned long count = 0;
    for_each_matching(d1.n, bipartite_only, [&](const Matching& m) {
        if (lambda_of(d1, m) == mu && lambda_of(m, d2) == nu)
            ++count;
    });
    return BigInt(count);
}

BigInt count_a(const Partition& lambda, const Partition& mu, const Partition& nu, bool bipartite_only, int guard) {
    if (mu.size() != lambda.size() || nu.size() != lambda.size())
        throw std::invalid_argument("count_a: partitions have different sizes");
    check_guard(lambda.size(), guard);
    auto [d1, d2] = canonical_deltas(lambda);
    return count_a(d1, d2, mu, nu, bipartite_only);
}

CheckResult verify_b01(int n, int guard) {
    CheckResult res;
    res.name = "b=0/b=1 specializations n=" + std::to_string(n);
    const auto a = count_table(n, false, Exec::Parallel, guard);
    const auto at = count_table(n, true, Exec::Parallel, guard);
    const auto c = coeff_table(n);
    const auto mc = marginal_table(n);
    const auto& parts = all_partitions(n);
    const std::size_t d = parts.size();
    for (std::size_t l = 0; l < d; ++l)
        for (std::size_t m = 0; m < d; ++m) {
            std::vector<BigInt> ma(static_cast<std::size_t>(n) + 1, 0), mat(static_cast<std::size_t>(n) + 1, 0);
            for (std::size_t v = 0; v < d; ++v) {
                const std::string where = "lambda=" + encode(parts[l]) + " mu=" + encode(parts[m]) +
                                          " nu=" + encode(parts[v]);
                const BigInt av(static_cast<unsigned long>(a.at(l, m, v)));
                const BigInt atv(static_cast<unsigned long>(at.at(l, m, v)));
                res.cases += 2;
                if (c->at(l, m, v).eval(1) != av)
                    res.fail(where + ": c(1) != a");
                if (c->at(l, m, v).eval(0) != atv)
                    res.fail(where + ": c(0) != atilde");
                ma[static_cast<std::size_t>(parts[v].length())] += av;
                mat[static_cast<std::size_t>(parts[v].length())] += atv;
            }
            for (int len = 1; len <= n; ++len) {
                res.cases += 2;
                const std::string where = "lambda=" + encode(parts[l]) + " mu=" + encode(parts[m]) +
                                          " l=" + std::to_string(len);
                if (mc->at(l, m, len).eval(1) != ma[static_cast<std::size_t>(len)])
                    res.fail(where + ": mc(1) != sum a");
                if (mc->at(l, m, len).eval(0) != mat[static_cast<std::size_t>(len)])
                    res.fail(where + ": mc(0) != sum atilde");
            }
        }
    return res;
}

CheckResult verify_comb_multiplicativity(int n, int guard) {
    CheckResult res;
    res.name = "matching multiplicativity n=" + std::to_string(n);
    const auto& parts = all_partitions(n);
    const std::size_t d = parts.size();
    for (bool bip : {false, true}) {
        const auto t = count_table(n, bip, Exec::Parallel, guard);
        for (std::size_t l = 0; l < d; ++l)
            for (std::size_t m = 0; m < d; ++m)
                for (std::size_t v = 0; v < d; ++v)
                    for (std::size_t r = 0; r < d; ++r) {
                        BigInt lhs = 0, rhs = 0;
                        for (std::size_t k = 0; k < d; ++k) {
                            lhs += BigInt(static_cast<unsigned long>(t.at(l, m, k))) *
                                   BigInt(static_cast<unsigned long>(t.at(k, v, r)));
                            rhs += BigInt(static_cast<unsigned long>(t.at(l, k, r))) *
                                   BigInt(static_cast<unsigned long>(t.at(k, m, v)));
                        }
                        ++res.cases;
                        if (lhs != rhs)
                            res.fail(std::string(bip ? "atilde" : "a") + " lambda=" + encode(parts[l]) +
                                     " mu=" + encode(parts[m]) + " nu=" + encode(parts[v]) +
                                     " rho=" + encode(parts[r]));
                    }
    }
    return res;
}

} // namespace mjack
