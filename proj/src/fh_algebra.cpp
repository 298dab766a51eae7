#include "mjack/fh_algebra.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

#include "mjack/connection.hpp"
#include "mjack/group_algebra.hpp"
#include "mjack/symfunc.hpp"
#include "parallel.hpp"

namespace mjack {

namespace {

// Geodesic factorizations σ·(σ⁻¹c) of the cycle c = (0 1 … k), by the reduced
// types of the two factors.
RhoTopRow compute_cycle_table(int k) {
    const std::size_t len = static_cast<std::size_t>(k) + 1;
    Perm cycle(len);
    for (std::size_t x = 0; x < len; ++x)
        cycle[x] = static_cast<int>((x + 1) % len);
    RhoTopRow out;
    Perm sigma(len);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        Partition a = reduced_type(sigma);
        Partition b = reduced_type(compose(inverse(sigma), cycle));
        if (a.size() + b.size() == k)
            out[{std::move(a), std::move(b)}] += 1;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

const RhoTopRow& cycle_table(int k) {
    static std::mutex mutex;
    static std::map<int, RhoTopRow> memo;
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(k); it != memo.end())
            return it->second;
    }
    RhoTopRow t = compute_cycle_table(k);
    std::lock_guard lock(mutex);
    return memo.try_emplace(k, std::move(t)).first->second;
}

void check_fh_guard(int r) {
    if (r > kFhGuard)
        throw GuardExceeded("top-degree structure constants at rank " + std::to_string(r) +
                            " exceed the guard r <= " + std::to_string(kFhGuard));
}

RhoTopRow compute_rho_top_row(const Partition& kappa) {
    check_fh_guard(kappa.size());
    RhoTopRow row{{{Partition{}, Partition{}}, BigInt(1)}};
    for (int k : kappa.parts()) {
        const RhoTopRow& t = cycle_table(k);
        RhoTopRow next;
        for (const auto& [lm, x] : row)
            for (const auto& [ab, y] : t)
                next[{union_of(lm.first, ab.first), union_of(lm.second, ab.second)}] += x * y;
        row = std::move(next);
    }
    return row;
}

} // namespace

const RhoTopRow& rho_top_row(const Partition& kappa) {
    static std::shared_mutex mutex;
    static std::map<Partition, RhoTopRow> memo;
    {
        std::shared_lock lock(mutex);
        if (auto it = memo.find(kappa); it != memo.end())
            return it->second;
    }
    RhoTopRow row = compute_rho_top_row(kappa);
    std::unique_lock lock(mutex);
    return memo.try_emplace(kappa, std::move(row)).first->second;
}

BigInt rho_top(const Partition& kappa, const Partition& lambda, const Partition& mu) {
    if (kappa.size() != lambda.size() + mu.size())
        throw std::invalid_argument("rho_top: rank mismatch, |" + kappa.to_string() + "| != |" +
                                    lambda.to_string() + "| + |" + mu.to_string() + "|");
    const auto& row = rho_top_row(kappa);
    auto it = row.find({lambda, mu});
    return it == row.end() ? BigInt(0) : it->second;
}

std::vector<RhoTopRow> rho_top_table(int r, Exec exec) {
    check_fh_guard(r);
    const auto& parts = all_partitions(r);
    std::vector<RhoTopRow> out(parts.size());
    detail::run_indexed(parts.size(), exec, [&](std::size_t i) { out[i] = compute_rho_top_row(parts[i]); });
    return out;
}

// ---------------------------------------------------------------- graded algebra

BigInt GradedElem::coefficient(const Partition& lambda) const {
    auto it = coeffs.find(lambda);
    return it == coeffs.end() ? BigInt(0) : it->second;
}

GradedElem& GradedElem::add(const GradedElem& o, const BigInt& scale) {
    if (o.coeffs.empty() || scale == 0)
        return *this;
    if (coeffs.empty())
        degree = o.degree;
    else if (o.degree != degree)
        throw std::invalid_argument("GradedElem::add: degrees differ");
    for (const auto& [lambda, c] : o.coeffs) {
        BigInt& slot = coeffs[lambda];
        slot += scale * c;
        if (slot == 0)
            coeffs.erase(lambda);
    }
    return *this;
}

GradedElem graded_multiply(const GradedElem& a, const GradedElem& b) {
    GradedElem out{a.degree + b.degree, {}};
    if (a.coeffs.empty() || b.coeffs.empty())
        return out;
    for (const auto& kappa : all_partitions(out.degree)) {
        BigInt total = 0;
        for (const auto& [lm, count] : rho_top_row(kappa)) {
            auto ia = a.coeffs.find(lm.first);
            if (ia == a.coeffs.end())
                continue;
            auto ib = b.coeffs.find(lm.second);
            if (ib == b.coeffs.end())
                continue;
            total += ia->second * ib->second * count;
        }
        if (total != 0)
            out.coeffs.emplace(kappa, std::move(total));
    }
    return out;
}

GradedElem f_elem(int r) {
    GradedElem out{r, {}};
    for (const auto& lambda : all_partitions(r))
        out.coeffs.emplace(lambda, BigInt(1));
    return out;
}

GradedElem ff(const Partition& lambda) {
    GradedElem out = GradedElem::unit();
    for (int part : lambda.parts())
        out = graded_multiply(out, f_elem(part));
    return out;
}

GradedElem mf(const Partition& mu) {
    const int r = mu.size();
    GradedElem out{r, {}};
    if (r == 0)
        return GradedElem::unit();
    const LabeledMatrix u = monomial_in_elementary(r);
    const std::size_t col = static_cast<std::size_t>(
        std::find(u.cols.begin(), u.cols.end(), mu) - u.cols.begin());
    for (std::size_t i = 0; i < u.rows.size(); ++i)
        if (u.entries(i, col) != 0)
            out.add(ff(u.rows[i]), u.entries(i, col));
    return out;
}

GradedElem gf(const Partition& pi) {
    return graded_multiply(GradedElem::basis(minus_one(pi)), f_elem(pi.length()));
}

BigInt top_coeff_via_fh(const Partition& rho, const Partition& pi) {
    if (rho.size() != pi.size())
        throw std::invalid_argument("top_coeff_via_fh: partitions of different sizes");
    return gf(pi).coefficient(rho);
}

// ---------------------------------------------------------------- matrices

namespace {

// Columns are the c-expansions of `elems`; rows ρ ⊢ r in increasing order.
IntMatrix c_expansion(int r, const std::vector<GradedElem>& elems) {
    const auto& rows = all_partitions(r);
    IntMatrix m(rows.size(), elems.size());
    for (std::size_t j = 0; j < elems.size(); ++j)
        for (std::size_t i = 0; i < rows.size(); ++i)
            m(i, j) = elems[j].coefficient(rows[i]);
    return m;
}

void require_rank(int r) {
    if (r < 1)
        throw std::invalid_argument("matrix rank must be at least 1");
}

} // namespace

LabeledMatrix matrix_F(int r) {
    require_rank(r);
    const auto cols = f_order(r);
    std::vector<GradedElem> elems;
    for (const auto& lambda : cols)
        elems.push_back(ff(lambda));
    return LabeledMatrix{"F", "c", "f", all_partitions(r), cols, c_expansion(r, elems)};
}

LabeledMatrix matrix_U(int r) {
    require_rank(r);
    return monomial_in_elementary(r);
}

LabeledMatrix matrix_L(int r) {
    require_rank(r);
    const auto& parts = all_partitions(r);
    std::vector<GradedElem> elems;
    for (const auto& mu : parts)
        elems.push_back(mf(mu));
    return LabeledMatrix{"L", "m", "c", parts, parts, inverse_unimodular(c_expansion(r, elems))};
}

LabeledMatrix matrix_M(int r) {
    const LabeledMatrix f = matrix_F(r);
    return LabeledMatrix{"M", "f", "c", f.cols, f.rows, inverse_unimodular(f.entries)};
}

LabeledMatrix matrix_M_sub(int r, int i) {
    if (i < 1 || i > r)
        throw std::invalid_argument("matrix_M_sub: need 1 <= i <= r");
    LabeledMatrix m = matrix_M(r).sub([i](const Partition& l) { return l.largest() <= i; },
                                      [i](const Partition& p) { return p.length() <= i; });
    m.name = "M(" + std::to_string(r) + "," + std::to_string(i) + ")";
    return m;
}

namespace {

// Column π holds the c-expansion of 𝔤_π, π increasing.
IntMatrix g_expansion(int r) {
    std::vector<GradedElem> elems;
    for (const auto& pi : all_partitions(r))
        elems.push_back(gf(pi));
    return c_expansion(r, elems);
}

} // namespace

LabeledMatrix matrix_N(int r) {
    const LabeledMatrix m = matrix_M(r);
    return LabeledMatrix{"N", "f", "g", m.rows, all_partitions(r), m.entries * g_expansion(r)};
}

LabeledMatrix matrix_Q(int r) {
    require_rank(r);
    const IntMatrix g = g_expansion(r);
    std::vector<Partition> labels(all_partitions(r).rbegin(), all_partitions(r).rend());
    const std::size_t d = labels.size();
    IntMatrix q(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            q(i, j) = g(d - 1 - j, d - 1 - i);
    return LabeledMatrix{"Q", "g", "c", labels, labels, std::move(q)};
}

// ---------------------------------------------------------------- Jucys–Murphy

bool jm_elementary_check(int n, int l) {
    if (l < 1 || l > n - 1)
        throw std::invalid_argument("jm_elementary_check: need 1 <= l <= n-1");
    const GroupAlgebraElem direct = jm_elementary(n, l);
    CentralElem expected{n, {}};
    for (const auto& lambda : all_partitions(l))
        if (lambda.size() + lambda.length() <= n)
            expected.coeffs[lambda] = 1;
    return direct == expand(expected);
}

bool jm_monomial_check(int n, const Partition& mu) {
    if (mu.size() < 1 || mu.size() > n - 1)
        throw std::invalid_argument("jm_monomial_check: need 1 <= |mu| <= n-1");
    const CentralElem direct = to_central(jm_monomial(n, mu));
    std::map<Partition, BigInt> top;
    for (const auto& [lambda, c] : direct.coeffs)
        if (lambda.size() == mu.size())
            top.emplace(lambda, c);
    std::map<Partition, BigInt> expected;
    for (const auto& [lambda, c] : mf(mu).coeffs)
        if (lambda.size() + lambda.length() <= n)
            expected.emplace(lambda, c);
    return top == expected;
}

// ---------------------------------------------------------------- checks

namespace {

bool det_is(const IntMatrix& m, int value) { return det_bareiss(m) == value; }

std::string label(const Partition& p) { return encode(p); }

} // namespace

CheckResult check_fh_matrices(int r) {
    CheckResult res;
    res.name = "fh-matrices r=" + std::to_string(r);
    const LabeledMatrix u = matrix_U(r), l = matrix_L(r), f = matrix_F(r), m = matrix_M(r);
    const LabeledMatrix n = matrix_N(r), q = matrix_Q(r);

    auto expect = [&res](bool ok, const std::string& what) {
        ++res.cases;
        if (!ok)
            res.fail(what);
    };
    expect(is_upper_unitriangular(u.entries), "U not upper unitriangular");
    expect(is_lower_unitriangular(l.entries), "L not lower unitriangular");
    expect(u.entries * l.entries == m.entries, "M != U L");
    const BigInt det_f = det_bareiss(f.entries);
    expect(det_f == 1 || det_f == -1, "det F = " + det_f.get_str());
    for (int i = 1; i <= r; ++i)
        expect(det_is(matrix_M_sub(r, i).entries, 1), "det M(" + std::to_string(r) + "," + std::to_string(i) + ") != 1");
    expect(det_is(n.entries, 1), "det N != 1");
    const BigInt det_q = det_bareiss(q.entries);
    expect(det_q == 1 || det_q == -1, "det Q = " + det_q.get_str());

    // Block formula: N_{λ,π} = M^{(r−ℓ(π))}_{λ∖ℓ(π), π−1}, zero unless ℓ(π) is a part of λ.
    std::map<int, LabeledMatrix> lower;
    for (std::size_t j = 0; j < n.cols.size(); ++j) {
        const Partition& pi = n.cols[j];
        const int len = pi.length();
        const int rest = r - len;
        if (rest > 0 && !lower.count(rest))
            lower.emplace(rest, matrix_M(rest));
        for (std::size_t i = 0; i < n.rows.size(); ++i) {
            const Partition& lambda = n.rows[i];
            BigInt expected = 0;
            if (lambda.multiplicity(len) > 0)
                expected = rest == 0 ? BigInt(1)
                                     : lower.at(rest).at(remove_part(lambda, len), minus_one(pi));
            expect(n.entries(i, j) == expected,
                   "N[" + label(lambda) + "][" + label(pi) + "] = " + n.entries(i, j).get_str() +
                       ", block formula gives " + expected.get_str());
        }
    }
    return res;
}

CheckResult check_top_coeff_paths(int r) {
    CheckResult res;
    res.name = "top-coeff-two-paths r=" + std::to_string(r);
    const auto& parts = all_partitions(r);
    for (const auto& pi : parts) {
        const GradedElem g = gf(pi);
        for (const auto& rho : parts) {
            ++res.cases;
            const BigInt a = g.coefficient(rho);
            const BigInt b = top_coeff_via_marginal(rho, pi);
            if (a != b)
                res.fail("tc[" + label(rho) + "][" + label(pi) + "]: graded " + a.get_str() +
                         ", marginal " + b.get_str());
        }
    }
    return res;
}

CheckResult check_bridge(int n) {
    CheckResult res;
    res.name = "class-algebra-bridge n=" + std::to_string(n);
    std::vector<Partition> types;
    for (int s = 0; s < n; ++s)
        for (const auto& p : all_partitions(s))
            if (p.size() + p.length() <= n)
                types.push_back(p);
    const auto table = coeff_table(n);
    auto pad = [n](const Partition& p) { return oplus(p, ones(n - p.size())); };
    for (const auto& kappa : types) {
        const auto row = rho_row(kappa, n);
        for (const auto& lambda : types)
            for (const auto& mu : types) {
                ++res.cases;
                auto it = row.find({lambda, mu});
                const BigInt count = it == row.end() ? BigInt(0) : it->second;
                const BigInt at0 = table->at(pad(kappa), pad(lambda), pad(mu)).eval(0);
                if (count != at0)
                    res.fail("rho^" + label(kappa) + "_{" + label(lambda) + "," + label(mu) + "}(" +
                             std::to_string(n) + ") = " + count.get_str() + ", c(0) = " + at0.get_str());
            }
    }
    return res;
}

CheckResult check_stabilization(int r) {
    CheckResult res;
    res.name = "fh-stabilization r<=" + std::to_string(r);
    auto span = [](const Partition& p) { return p.size() + p.length(); };
    for (int s = 0; s <= r; ++s)
        for (const auto& kappa : all_partitions(s))
            for (int a = 0; a <= s; ++a)
                for (const auto& lambda : all_partitions(a))
                    for (const auto& mu : all_partitions(s - a)) {
                        const int n0 = std::max({span(kappa), span(lambda), span(mu), 1});
                        if (n0 + 1 > kGroupGuard)
                            continue;
                        ++res.cases;
                        const BigInt top = rho_top(kappa, lambda, mu);
                        const BigInt at_n0 = rho(kappa, lambda, mu, n0);
                        const BigInt at_n1 = rho(kappa, lambda, mu, n0 + 1);
                        if (top != at_n0 || at_n0 != at_n1)
                            res.fail("rho^" + label(kappa) + "_{" + label(lambda) + "," + label(mu) +
                                     "}: top " + top.get_str() + ", n=" + std::to_string(n0) + ": " +
                                     at_n0.get_str() + ", n=" + std::to_string(n0 + 1) + ": " +
                                     at_n1.get_str());
                    }
    return res;
}

CheckResult check_jm_elementary(int n) {
    CheckResult res;
    res.name = "jucys-murphy-elementary n=" + std::to_string(n);
    for (int l = 1; l <= n - 1; ++l) {
        ++res.cases;
        if (!jm_elementary_check(n, l))
            res.fail("e_" + std::to_string(l) + " at n=" + std::to_string(n));
    }
    return res;
}

CheckResult check_jm_monomial(int n, int max_size) {
    CheckResult res;
    res.name = "jucys-murphy-monomial n=" + std::to_string(n);
    for (int s = 1; s <= std::min(max_size, n - 1); ++s)
        for (const auto& mu : all_partitions(s)) {
            ++res.cases;
            if (!jm_monomial_check(n, mu))
                res.fail("m_" + label(mu) + " at n=" + std::to_string(n));
        }
    return res;
}

} // namespace mjack
