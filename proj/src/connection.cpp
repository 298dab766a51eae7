#include "mjack/connection.hpp"

#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

#include "mjack/symfunc.hpp"
#include "parallel.hpp"

namespace mjack {

namespace {

void require_same_size(const Partition& a, const Partition& b, const char* what) {
    if (a.size() != b.size())
        throw std::invalid_argument(std::string(what) + ": partitions " + a.to_string() + " and " +
                                    b.to_string() + " have different sizes");
}

void require_positive(const Partition& p, const char* what) {
    if (p.size() < 1)
        throw std::invalid_argument(std::string(what) + ": size must be at least 1");
}

UniPoly lcm(const UniPoly& a, const UniPoly& b) {
    return divmod(a * b, gcd(a, b)).quotient.monic();
}

std::unique_ptr<DegreeKernel> build_kernel(int n) {
    auto k = std::make_unique<DegreeKernel>();
    k->n = n;
    k->parts = all_partitions(n);
    const std::size_t d = k->parts.size();
    auto jd = JackStore::instance().degree(n);

    std::vector<UniPoly> norms;
    UniPoly big_d = UniPoly::constant(1, Var::Alpha);
    for (std::size_t t = 0; t < d; ++t) {
        const RatFunc j = jack_norm(k->parts[t]);
        norms.push_back(j.num() * (Rational(1) / j.den().coeff(0)));
        big_d = lcm(big_d, norms.back());
    }
    k->lcm_norm = big_d;
    for (std::size_t t = 0; t < d; ++t) {
        auto [q, rem] = divmod(big_d, norms[t]);
        if (!rem.is_zero())
            throw TheoremViolation("lcm of Jack norms not divisible by j_" + k->parts[t].to_string());
        k->w.push_back(q);
        std::vector<UniPoly> row;
        for (const auto& la : k->parts) {
            const RatFunc c = jd->powersum[t].coeff(la);
            if (!c.is_polynomial())
                throw TheoremViolation("[p_" + la.to_string() + "] J_" + k->parts[t].to_string() +
                                       " is not a polynomial in alpha");
            row.push_back(c.num() * (Rational(1) / c.den().coeff(0)));
        }
        k->a.push_back(std::move(row));
    }
    const UniPoly alpha = UniPoly::x(Var::Alpha);
    for (const auto& la : k->parts)
        k->prefactor.push_back(pow(alpha, la.length()) * Rational(z_factor(la)));
    return k;
}

std::string triple_name(const Partition& l, const Partition& m, const Partition& v) {
    return "c^" + l.to_string() + "_{" + m.to_string() + "," + v.to_string() + "}";
}

// num / D, then α = b + 1 and integrality.
Certification certify_numerator(const UniPoly& num, const DegreeKernel& k) {
    auto [q, rem] = divmod(num, k.lcm_norm);
    if (!rem.is_zero()) {
        Certification out;
        out.failure = CertifyFailure::NonPolynomial;
        out.witness = "(" + num.to_string() + ")/(" + k.lcm_norm.to_string() + ")";
        return out;
    }
    return certify_integer_poly(RatFunc(q));
}

IntPoly certified_or_throw(Certification cert, const std::string& what) {
    if (!cert)
        throw TheoremViolation(what + " is not an integer polynomial in b: " + cert.witness);
    return std::move(*cert.poly);
}


} // namespace

const DegreeKernel& degree_kernel(int n) {
    if (n < 1)
        throw std::invalid_argument("degree_kernel: n must be at least 1");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<DegreeKernel>> memo;
    {
        std::lock_guard lock(mutex);
        auto it = memo.find(n);
        if (it != memo.end())
            return *it->second;
    }
    auto built = build_kernel(n);
    std::lock_guard lock(mutex);
    auto [it, inserted] = memo.try_emplace(n, std::move(built));
    return *it->second;
}

RatFunc c_normalized(const Partition& lambda, const Partition& mu, const Partition& nu) {
    require_same_size(lambda, mu, "c_normalized");
    require_same_size(lambda, nu, "c_normalized");
    require_positive(lambda, "c_normalized");
    const auto& k = degree_kernel(lambda.size());
    const std::size_t l = partition_index(lambda), m = partition_index(mu), v = partition_index(nu);
    UniPoly acc(Var::Alpha);
    for (std::size_t t = 0; t < k.parts.size(); ++t)
        acc += k.a[t][l] * k.a[t][m] * k.a[t][v] * k.w[t];
    return RatFunc(acc, k.lcm_norm);
}

Certification certify_c(const Partition& lambda, const Partition& mu, const Partition& nu) {
    require_same_size(lambda, mu, "c_coeff");
    require_same_size(lambda, nu, "c_coeff");
    require_positive(lambda, "c_coeff");
    const auto& k = degree_kernel(lambda.size());
    const std::size_t l = partition_index(lambda), m = partition_index(mu), v = partition_index(nu);
    UniPoly acc(Var::Alpha);
    for (std::size_t t = 0; t < k.parts.size(); ++t) {
        if (k.a[t][l].is_zero() || k.a[t][m].is_zero() || k.a[t][v].is_zero())
            continue;
        acc += k.a[t][l] * k.a[t][m] * k.a[t][v] * k.w[t];
    }
    return certify_numerator(acc * k.prefactor[l], k);
}

IntPoly c_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
    return certified_or_throw(certify_c(lambda, mu, nu), triple_name(lambda, mu, nu));
}

// ---------------------------------------------------------------- tables

CoeffTable::CoeffTable(int n)
    : n_(n), dim_(partition_count(n)), entries_(dim_ * dim_ * dim_) {}

const IntPoly& CoeffTable::at(const Partition& lambda, const Partition& mu, const Partition& nu) const {
    if (lambda.size() != n_ || mu.size() != n_ || nu.size() != n_)
        throw std::invalid_argument("CoeffTable::at: partitions must have size " + std::to_string(n_));
    return at(partition_index(lambda), partition_index(mu), partition_index(nu));
}

CoeffTable compute_coeff_table(int n, Exec exec) {
    if (n < 1)
        throw std::invalid_argument("coefficient table: n must be at least 1");
    const auto& k = degree_kernel(n);
    const std::size_t d = k.parts.size();
    CoeffTable table(n);
    detail::run_indexed(d, exec, [&](std::size_t l) {
        std::vector<UniPoly> lead(d, UniPoly(Var::Alpha));
        for (std::size_t t = 0; t < d; ++t)
            if (!k.a[t][l].is_zero())
                lead[t] = k.prefactor[l] * k.a[t][l] * k.w[t];
        std::vector<UniPoly> partial(d, UniPoly(Var::Alpha));
        for (std::size_t m = 0; m < d; ++m) {
            for (std::size_t t = 0; t < d; ++t)
                partial[t] = lead[t].is_zero() ? UniPoly(Var::Alpha) : lead[t] * k.a[t][m];
            for (std::size_t v = m; v < d; ++v) {
                UniPoly acc(Var::Alpha);
                for (std::size_t t = 0; t < d; ++t)
                    if (!partial[t].is_zero() && !k.a[t][v].is_zero())
                        acc += partial[t] * k.a[t][v];
                IntPoly c = certified_or_throw(certify_numerator(acc, k),
                                               triple_name(k.parts[l], k.parts[m], k.parts[v]));
                table.at(l, v, m) = c;
                table.at(l, m, v) = std::move(c);
            }
        }
    });
    return table;
}

std::shared_ptr<const CoeffTable> coeff_table(int n) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const CoeffTable>> memo;
    {
        std::lock_guard lock(mutex);
        auto it = memo.find(n);
        if (it != memo.end())
            return it->second;
    }
    auto table = std::make_shared<const CoeffTable>(compute_coeff_table(n));
    std::lock_guard lock(mutex);
    return memo.try_emplace(n, std::move(table)).first->second;
}

MarginalTable::MarginalTable(const CoeffTable& c)
    : n_(c.n()), dim_(c.dim()), entries_(dim_ * dim_ * static_cast<std::size_t>(n_)) {
    const auto& parts = c.parts();
    for (std::size_t l = 0; l < dim_; ++l)
        for (std::size_t m = 0; m < dim_; ++m)
            for (std::size_t v = 0; v < dim_; ++v)
                entries_[(l * dim_ + m) * static_cast<std::size_t>(n_) +
                         static_cast<std::size_t>(parts[v].length() - 1)] += c.at(l, m, v);
}

const IntPoly& MarginalTable::at(const Partition& lambda, const Partition& mu, int len) const {
    if (lambda.size() != n_ || mu.size() != n_)
        throw std::invalid_argument("MarginalTable::at: partitions must have size " + std::to_string(n_));
    if (len < 1 || len > n_)
        throw std::invalid_argument("MarginalTable::at: l out of range");
    return at(partition_index(lambda), partition_index(mu), len);
}

std::shared_ptr<const MarginalTable> marginal_table(int n) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const MarginalTable>> memo;
    {
        std::lock_guard lock(mutex);
        auto it = memo.find(n);
        if (it != memo.end())
            return it->second;
    }
    auto table = std::make_shared<const MarginalTable>(*coeff_table(n));
    std::lock_guard lock(mutex);
    return memo.try_emplace(n, std::move(table)).first->second;
}

IntPoly marginal(const Partition& lambda, const Partition& mu, int l) {
    require_same_size(lambda, mu, "marginal");
    require_positive(lambda, "marginal");
    if (l < 1 || l > lambda.size())
        throw std::invalid_argument("marginal: l must lie in [1, n]");
    return marginal_table(lambda.size())->at(lambda, mu, l);
}

int top_coeff_min_size(const Partition& rho, const Partition& pi) {
    return rho.size() + std::max(rho.length(), pi.length());
}

BigInt top_coeff_via_marginal(const Partition& rho, const Partition& pi) {
    return top_coeff_via_marginal(rho, pi, top_coeff_min_size(rho, pi));
}

BigInt top_coeff_via_marginal(const Partition& rho, const Partition& pi, int n) {
    require_same_size(rho, pi, "top_coeff_via_marginal");
    require_positive(rho, "top_coeff_via_marginal");
    const int r = rho.size();
    if (n < top_coeff_min_size(rho, pi))
        throw std::invalid_argument("top_coeff_via_marginal: n below r + max(l(rho), l(pi))");
    const Partition kappa = oplus(rho, ones(n - r));
    const Partition nu = union_of(pi, ones(n - r));
    const int len = n - pi.length();
    IntPoly acc;
    for (const auto& theta : all_partitions(n))
        if (theta.length() == len)
            acc += c_coeff(kappa, nu, theta);
    if (acc.degree() > 0)
        throw TheoremViolation("top coefficient mc^" + kappa.to_string() + "_{" + nu.to_string() +
                               "," + std::to_string(len) + "} = " + acc.to_string() +
                               " is not constant");
    return acc.coeff(0);
}

// ---------------------------------------------------------------- k-parameter coefficients

namespace {

void require_multi(const Partition& lambda, const std::vector<Partition>& mus, const char* what) {
    if (mus.size() < 2)
        throw std::invalid_argument(std::string(what) + ": at least two lower partitions required");
    require_positive(lambda, what);
    for (const auto& mu : mus)
        require_same_size(lambda, mu, what);
}

} // namespace

IntPoly c_multi(const Partition& lambda, const std::vector<Partition>& mus) {
    require_multi(lambda, mus, "c_multi");
    if (mus.size() == 2)
        return coeff_table(lambda.size())->at(lambda, mus[0], mus[1]);
    const auto table = coeff_table(lambda.size());
    const std::size_t k = mus.size() - 1;
    std::vector<Partition> head(mus.begin(), mus.end() - 1);
    IntPoly acc;
    for (const auto& xi : all_partitions(lambda.size())) {
        const IntPoly& tail = table->at(xi, mus[k - 1], mus[k]);
        if (tail.is_zero())
            continue;
        head.back() = xi;
        acc += c_multi(lambda, head) * tail;
    }
    return acc;
}

IntPoly c_multi_direct(const Partition& lambda, const std::vector<Partition>& mus) {
    require_multi(lambda, mus, "c_multi_direct");
    const auto& k = degree_kernel(lambda.size());
    const std::size_t l = partition_index(lambda);
    std::vector<std::size_t> idx;
    for (const auto& mu : mus)
        idx.push_back(partition_index(mu));
    UniPoly acc(Var::Alpha);
    for (std::size_t t = 0; t < k.parts.size(); ++t) {
        UniPoly term = k.a[t][l] * k.w[t];
        for (std::size_t i : idx)
            term *= k.a[t][i];
        acc += term;
    }
    std::string name = "c^" + lambda.to_string() + "_{";
    for (std::size_t i = 0; i < mus.size(); ++i)
        name += (i ? "," : "") + mus[i].to_string();
    return certified_or_throw(certify_numerator(acc * k.prefactor[l], k), name + "}");
}

// ---------------------------------------------------------------- cumulants

namespace {

// Every ordered tuple of partitions (μ^1, …, μ^s) with ∪ μ^j = μ and |μ^j| = sizes[j].
void ordered_splits_rec(std::vector<int>& remaining, const std::vector<int>& sizes, std::size_t block,
                        std::vector<Partition>& current, std::vector<std::vector<Partition>>& out) {
    if (block == sizes.size()) {
        out.push_back(current);
        return;
    }
    // choose a sub-multiset of `remaining` (multiplicities by part value) of total sizes[block]
    std::vector<int> take(remaining.size(), 0);
    auto emit = [&](auto&& self, std::size_t value, int left) -> void {
        if (left == 0) {
            std::vector<int> parts;
            for (std::size_t v = 1; v < take.size(); ++v)
                for (int c = 0; c < take[v]; ++c)
                    parts.push_back(static_cast<int>(v));
            for (std::size_t v = 1; v < take.size(); ++v)
                remaining[v] -= take[v];
            current.push_back(Partition(parts));
            ordered_splits_rec(remaining, sizes, block + 1, current, out);
            current.pop_back();
            for (std::size_t v = 1; v < take.size(); ++v)
                remaining[v] += take[v];
            return;
        }
        if (value == 0)
            return;
        const int vv = static_cast<int>(value);
        for (int c = std::min(remaining[value], left / vv); c >= 0; --c) {
            take[value] = c;
            self(self, value - 1, left - c * vv);
        }
        take[value] = 0;
    };
    emit(emit, remaining.size() - 1, sizes[block]);
}

std::vector<std::vector<Partition>> ordered_splits(const Partition& mu, const std::vector<int>& sizes) {
    std::vector<int> mult(static_cast<std::size_t>(mu.largest()) + 1, 0);
    for (int p : mu.parts())
        ++mult[static_cast<std::size_t>(p)];
    std::vector<std::vector<Partition>> out;
    std::vector<Partition> current;
    ordered_splits_rec(mult, sizes, 0, current, out);
    return out;
}

} // namespace

IntPoly cumulant_d(const Partition& lambda, const std::vector<Partition>& mus) {
    require_multi(lambda, mus, "cumulant_d");
    const int len = lambda.length();
    IntPoly total;
    for (const auto& sp : set_partitions(len)) {
        const std::size_t s = sp.block_count();
        std::vector<Partition> blocks;
        std::vector<int> sizes;
        for (const auto& b : sp.blocks) {
            std::vector<int> parts;
            for (int i : b)
                parts.push_back(lambda.parts()[static_cast<std::size_t>(i)]);
            blocks.emplace_back(parts);
            sizes.push_back(blocks.back().size());
        }
        std::vector<std::vector<std::vector<Partition>>> splits;
        bool empty = false;
        for (const auto& mu : mus) {
            splits.push_back(ordered_splits(mu, sizes));
            empty = empty || splits.back().empty();
        }
        if (empty)
            continue;
        IntPoly block_sum;
        std::vector<std::size_t> choice(mus.size(), 0);
        while (true) {
            IntPoly prod = IntPoly::constant(1);
            for (std::size_t b = 0; b < s && !prod.is_zero(); ++b) {
                std::vector<Partition> lower;
                for (std::size_t i = 0; i < mus.size(); ++i)
                    lower.push_back(splits[i][choice[i]][b]);
                prod = prod * c_multi(blocks[b], lower);
            }
            block_sum += prod;
            std::size_t i = 0;
            while (i < choice.size() && ++choice[i] == splits[i].size())
                choice[i++] = 0;
            if (i == choice.size())
                break;
        }
        BigInt weight = factorial(static_cast<int>(s) - 1);
        if (s % 2 == 0)
            weight = -weight;
        total += block_sum * weight;
    }
    return total;
}

IntPoly cumulant_d(const Partition& lambda, const Partition& mu, const Partition& nu) {
    return cumulant_d(lambda, std::vector<Partition>{mu, nu});
}

HCoeff h_coeff(const Partition& lambda, const std::vector<Partition>& mus) {
    const IntPoly d = cumulant_d(lambda, mus);
    const int n = lambda.size();
    const UniPoly den = one_plus_b_pow(lambda.length() - 1).to_unipoly();
    auto [q, rem] = divmod(d.to_unipoly(), den);
    if (!rem.is_zero())
        throw TheoremViolation("h^" + lambda.to_string() + ": cumulant " + d.to_string() +
                               " is not divisible by (1+b)^" + std::to_string(lambda.length() - 1));
    HCoeff out;
    auto scaled = certify_integer_poly_b(q);
    if (!scaled)
        throw TheoremViolation("h^" + lambda.to_string() + ": (z/n) h is not integral: " + scaled.witness);
    out.scaled = *scaled.poly;
    Rational ratio(BigInt(n), z_factor(lambda));
    ratio.canonicalize();
    out.h = q * ratio;
    out.integral = static_cast<bool>(certify_integer_poly_b(out.h));
    if (lambda == Partition{n} && !out.integral)
        throw TheoremViolation("h^" + lambda.to_string() + " is not an integer polynomial");
    return out;
}

HCoeff h_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
    return h_coeff(lambda, std::vector<Partition>{mu, nu});
}

namespace {

// All distinct sub-multisets of p with the complementary rest.
std::vector<std::pair<Partition, Partition>> sub_multisets(const Partition& p) {
    std::vector<std::pair<Partition, Partition>> out;
    const auto& parts = p.parts();
    std::vector<int> values, mult;
    for (int x : parts) {
        if (values.empty() || values.back() != x) {
            values.push_back(x);
            mult.push_back(0);
        }
        ++mult.back();
    }
    std::vector<int> take(values.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == values.size()) {
            std::vector<int> a, b;
            for (std::size_t j = 0; j < values.size(); ++j) {
                for (int c = 0; c < take[j]; ++c)
                    a.push_back(values[j]);
                for (int c = take[j]; c < mult[j]; ++c)
                    b.push_back(values[j]);
            }
            out.emplace_back(Partition(a), Partition(b));
            return;
        }
        for (int c = 0; c <= mult[i]; ++c) {
            take[i] = c;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

} // namespace

UniPoly cumulant_d_log(const Partition& lambda, const Partition& mu, const Partition& nu) {
    UniPoly total(Var::B);
    std::function<void(const Partition&, const Partition&, const Partition&, int, Rational, IntPoly)> rec =
        [&](const Partition& l, const Partition& m, const Partition& v, int s, Rational weight, IntPoly prod) {
            if (l.empty()) {
                Rational coef = Rational((s % 2 == 1) ? 1 : -1, s);
                coef.canonicalize();
                total += prod.to_unipoly() * (weight * coef * Rational(z_factor(lambda)));
                return;
            }
            for (const auto& [la, lrest] : sub_multisets(l)) {
                if (la.empty())
                    continue;
                for (const auto& [ma, mrest] : sub_multisets(m)) {
                    if (ma.size() != la.size())
                        continue;
                    for (const auto& [va, vrest] : sub_multisets(v)) {
                        if (va.size() != la.size())
                            continue;
                        Rational w = weight / Rational(z_factor(la));
                        rec(lrest, mrest, vrest, s + 1, w, prod * c_coeff(la, ma, va));
                    }
                }
            }
        };
    rec(lambda, mu, nu, 0, Rational(1), IntPoly::constant(1));
    return total;
}

// ---------------------------------------------------------------- identity checks

bool check_row_sum(const Partition& lambda, const Partition& nu) {
    require_same_size(lambda, nu, "check_row_sum");
    require_positive(lambda, "check_row_sum");
    const int n = lambda.size();
    const auto table = coeff_table(n);
    IntPoly sum;
    for (const auto& mu : all_partitions(n))
        sum += table->at(lambda, mu, nu);
    const BigInt scale = factorial(n) / z_factor(nu);
    return sum == one_plus_b_pow(n - nu.length()) * scale;
}

CheckResult check_multiplicativity(int n) {
    CheckResult res;
    res.name = "multiplicativity n=" + std::to_string(n);
    const auto table = coeff_table(n);
    const auto& parts = all_partitions(n);
    const std::size_t d = parts.size();
    for (std::size_t l = 0; l < d; ++l)
        for (std::size_t m = 0; m < d; ++m)
            for (std::size_t v = 0; v < d; ++v)
                for (std::size_t r = 0; r < d; ++r) {
                    IntPoly lhs, rhs;
                    for (std::size_t k = 0; k < d; ++k) {
                        lhs += table->at(l, m, k) * table->at(k, v, r);
                        rhs += table->at(l, k, r) * table->at(k, m, v);
                    }
                    ++res.cases;
                    if (lhs != rhs)
                        res.fail("lambda=" + encode(parts[l]) + " mu=" + encode(parts[m]) + " nu=" +
                                 encode(parts[v]) + " rho=" + encode(parts[r]) + ": " + lhs.to_string() +
                                 " != " + rhs.to_string());
                }
    return res;
}

CheckResult check_marginal_multiplicativity(int n) {
    CheckResult res;
    res.name = "marginal multiplicativity n=" + std::to_string(n);
    const auto table = coeff_table(n);
    const auto marg = marginal_table(n);
    const auto& parts = all_partitions(n);
    const std::size_t d = parts.size();
    for (std::size_t l = 0; l < d; ++l)
        for (std::size_t m = 0; m < d; ++m)
            for (std::size_t v = 0; v < d; ++v)
                for (int len = 1; len <= n; ++len) {
                    IntPoly lhs, rhs;
                    for (std::size_t k = 0; k < d; ++k) {
                        lhs += table->at(l, m, k) * marg->at(k, v, len);
                        rhs += marg->at(l, k, len) * table->at(k, m, v);
                    }
                    ++res.cases;
                    if (lhs != rhs)
                        res.fail("lambda=" + encode(parts[l]) + " mu=" + encode(parts[m]) + " nu=" +
                                 encode(parts[v]) + " l=" + std::to_string(len));
                }
    return res;
}

} // namespace mjack
