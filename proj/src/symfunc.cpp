#include "mjack/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

#include "mjack/cache.hpp"

namespace mjack {

// ---------------------------------------------------------------- PSExpr

RatFunc PSExpr::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? RatFunc(Var::Alpha) : it->second;
}

void PSExpr::add(const Partition& p, const RatFunc& c) {
    if (p.size() != degree_)
        throw std::invalid_argument("PSExpr::add: key " + p.to_string() + " has wrong degree");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

PSExpr& PSExpr::operator+=(const PSExpr& o) {
    if (o.degree_ != degree_ || o.basis_ != basis_)
        throw std::invalid_argument("PSExpr: adding expansions of different degree or basis");
    for (const auto& [p, c] : o.terms_)
        add(p, c);
    return *this;
}

PSExpr& PSExpr::operator*=(const RatFunc& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, v] : terms_)
        v *= c;
    return *this;
}

std::string PSExpr::to_string() const {
    const char* sym = basis_ == Basis::PowerSum ? "p" : basis_ == Basis::Monomial ? "m" : "e";
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [p, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += "(" + c.to_string() + ")" + sym + p.to_string();
    }
    return s;
}

PSExpr multiply_powersum(const PSExpr& a, const PSExpr& b) {
    if (a.basis() != Basis::PowerSum || b.basis() != Basis::PowerSum)
        throw std::invalid_argument("multiply_powersum: power-sum expansions required");
    PSExpr out(a.degree() + b.degree(), Basis::PowerSum);
    for (const auto& [pa, ca] : a.terms())
        for (const auto& [pb, cb] : b.terms())
            out.add(union_of(pa, pb), ca * cb);
    return out;
}

RatFunc inner_alpha(const PSExpr& f, const PSExpr& g) {
    if (f.basis() != Basis::PowerSum || g.basis() != Basis::PowerSum)
        throw std::invalid_argument("inner_alpha: power-sum expansions required");
    if (f.degree() != g.degree())
        throw std::invalid_argument("inner_alpha: degree mismatch");
    RatFunc acc(Var::Alpha);
    const UniPoly alpha = UniPoly::x(Var::Alpha);
    for (const auto& [p, c] : f.terms()) {
        auto it = g.terms().find(p);
        if (it == g.terms().end())
            continue;
        UniPoly w = pow(alpha, p.length()) * Rational(z_factor(p));
        acc += c * it->second * RatFunc(w);
    }
    return acc;
}

// ---------------------------------------------------------------- transition matrices

namespace {

// m_μ · p_k expanded in monomials: the coefficient of m_ν counts the positions
// j of ν with ν − k·e_j a rearrangement of μ.
std::map<Partition, BigInt> monomial_times_power(const Partition& mu, int k) {
    std::set<Partition> candidates;
    candidates.insert(union_of(mu, Partition{k}));
    for (std::size_t i = 0; i < mu.parts().size(); ++i) {
        std::vector<int> v = mu.parts();
        v[i] += k;
        candidates.insert(Partition(v));
    }
    std::map<Partition, BigInt> out;
    for (const auto& nu : candidates) {
        int count = 0;
        for (std::size_t j = 0; j < nu.parts().size(); ++j) {
            if (nu.parts()[j] < k)
                continue;
            std::vector<int> v = nu.parts();
            v[j] -= k;
            if (Partition(v) == mu)
                ++count;
        }
        if (count)
            out[nu] += count;
    }
    return out;
}

struct TransitionCache {
    std::mutex mutex;
    std::map<int, IntMatrix> p_in_m;
    std::map<int, QMatrix> m_in_p;
};

TransitionCache& transitions() {
    static TransitionCache c;
    return c;
}

IntMatrix build_powersum_in_monomial(int n) {
    const auto& parts = all_partitions(n);
    IntMatrix m(parts.size(), parts.size());
    for (std::size_t r = 0; r < parts.size(); ++r) {
        std::map<Partition, BigInt> expr{{Partition{}, BigInt(1)}};
        for (int k : parts[r].parts()) {
            std::map<Partition, BigInt> next;
            for (const auto& [mu, c] : expr)
                for (const auto& [nu, d] : monomial_times_power(mu, k))
                    next[nu] += c * d;
            expr = std::move(next);
        }
        for (const auto& [mu, c] : expr)
            m(r, partition_index(mu)) = c;
    }
    return m;
}

} // namespace

const IntMatrix& powersum_in_monomial(int n) {
    auto& t = transitions();
    std::lock_guard lock(t.mutex);
    auto it = t.p_in_m.find(n);
    if (it == t.p_in_m.end())
        it = t.p_in_m.emplace(n, build_powersum_in_monomial(n)).first;
    return it->second;
}

const QMatrix& monomial_in_powersum(int n) {
    const IntMatrix& p = powersum_in_monomial(n);
    auto& t = transitions();
    std::lock_guard lock(t.mutex);
    auto it = t.m_in_p.find(n);
    if (it == t.m_in_p.end())
        it = t.m_in_p.emplace(n, inverse(to_rational(p))).first;
    return it->second;
}

PSExpr monomial_to_powersum(const Partition& mu) {
    const int n = mu.size();
    const QMatrix& minv = monomial_in_powersum(n);
    const auto& parts = all_partitions(n);
    const std::size_t row = partition_index(mu);
    PSExpr out(n, Basis::PowerSum);
    for (std::size_t j = 0; j < parts.size(); ++j)
        if (minv(row, j) != 0)
            out.add(parts[j], RatFunc(minv(row, j), Var::Alpha));
    return out;
}

namespace {

// e_k via Newton: k e_k = Σ_{i=1..k} (−1)^{i−1} e_{k−i} p_i.
PSExpr elementary_single(int k) {
    std::vector<PSExpr> e;
    e.emplace_back(0, Basis::PowerSum);
    e[0].add(Partition{}, RatFunc(1, Var::Alpha));
    for (int m = 1; m <= k; ++m) {
        PSExpr acc(m, Basis::PowerSum);
        for (int i = 1; i <= m; ++i) {
            PSExpr pi(i, Basis::PowerSum);
            pi.add(Partition{i}, RatFunc(Rational(i % 2 == 1 ? 1 : -1, m), Var::Alpha));
            acc += multiply_powersum(e[static_cast<std::size_t>(m - i)], pi);
        }
        e.push_back(std::move(acc));
    }
    return e.back();
}

} // namespace

PSExpr elementary_to_powersum(const Partition& lambda) {
    PSExpr out(0, Basis::PowerSum);
    out.add(Partition{}, RatFunc(1, Var::Alpha));
    for (int k : lambda.parts())
        out = multiply_powersum(out, elementary_single(k));
    return out;
}

std::vector<Partition> f_order(int r) {
    std::vector<Partition> out;
    for (const auto& p : all_partitions(r))
        out.push_back(conjugate(p));
    return out;
}

LabeledMatrix monomial_in_elementary(int r) {
    const auto& parts = all_partitions(r);
    const std::size_t d = parts.size();
    // E(λ, ·): e_λ in power sums; Minv(μ, ·): m_μ in power sums.
    QMatrix e(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        PSExpr ex = elementary_to_powersum(parts[i]);
        for (const auto& [p, c] : ex.terms())
            e(i, partition_index(p)) = c.num().coeff(0);
    }
    // m_μ = Σ_λ u_{λμ} e_λ  ⇒  Minv = uᵀ E  ⇒  uᵀ = Minv E⁻¹.
    const QMatrix ut = monomial_in_powersum(r) * inverse(e);
    const IntMatrix u_all = to_integer(ut.transpose()); // rows λ in all_partitions order

    LabeledMatrix out;
    out.name = "U";
    out.row_header = "f";
    out.col_header = "m";
    out.rows = f_order(r);
    out.cols = parts;
    out.entries = IntMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        const std::size_t src = partition_index(out.rows[i]);
        for (std::size_t j = 0; j < d; ++j)
            out.entries(i, j) = u_all(src, j);
    }
    return out;
}

// ---------------------------------------------------------------- Jack norms

int arm_length(const Partition& theta, int i, int j) { return theta[static_cast<std::size_t>(i)] - j - 1; }

int leg_length(const Partition& theta, int i, int j) {
    int below = 0;
    for (int k = i + 1; k < theta.length(); ++k)
        if (theta[static_cast<std::size_t>(k)] > j)
            ++below;
    return below;
}

RatFunc jack_norm(const Partition& theta) {
    UniPoly acc = UniPoly::constant(1, Var::Alpha);
    for (int i = 0; i < theta.length(); ++i)
        for (int j = 0; j < theta[static_cast<std::size_t>(i)]; ++j) {
            const int a = arm_length(theta, i, j);
            const int l = leg_length(theta, i, j);
            acc *= UniPoly({Rational(l + 1), Rational(a)}, Var::Alpha);
            acc *= UniPoly({Rational(l), Rational(a + 1)}, Var::Alpha);
        }
    return RatFunc(acc);
}

// ---------------------------------------------------------------- Jack polynomials

JackDegree compute_jack_degree(int n) {
    const auto& parts = all_partitions(n);
    const std::size_t d = parts.size();
    const QMatrix& minv = monomial_in_powersum(n);
    const UniPoly alpha = UniPoly::x(Var::Alpha);

    std::vector<RatFunc> weight; // z_λ α^{ℓ(λ)}
    for (const auto& p : parts)
        weight.emplace_back(pow(alpha, p.length()) * Rational(z_factor(p)));

    auto to_powersum = [&](const std::vector<RatFunc>& mono) {
        std::vector<RatFunc> ps(d, RatFunc(Var::Alpha));
        for (std::size_t mu = 0; mu < d; ++mu) {
            if (mono[mu].is_zero())
                continue;
            for (std::size_t la = 0; la < d; ++la)
                if (minv(mu, la) != 0)
                    ps[la] += mono[mu] * RatFunc(minv(mu, la), Var::Alpha);
        }
        return ps;
    };
    auto inner = [&](const std::vector<RatFunc>& a, const std::vector<RatFunc>& b) {
        RatFunc acc(Var::Alpha);
        for (std::size_t la = 0; la < d; ++la)
            if (!a[la].is_zero() && !b[la].is_zero())
                acc += a[la] * b[la] * weight[la];
        return acc;
    };

    JackDegree out;
    out.n = n;
    std::vector<std::vector<RatFunc>> mono_basis_ps(d);
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<RatFunc> e(d, RatFunc(Var::Alpha));
        e[i] = RatFunc(1, Var::Alpha);
        mono_basis_ps[i] = to_powersum(e);
    }

    std::vector<std::vector<RatFunc>> jack_ps;
    std::vector<RatFunc> jack_sq;
    const RatFunc nfact(Rational(factorial(n)), Var::Alpha);
    for (std::size_t t = 0; t < d; ++t) {
        std::vector<RatFunc> mono(d, RatFunc(Var::Alpha));
        mono[t] = RatFunc(1, Var::Alpha);
        for (std::size_t s = 0; s < t; ++s) {
            const RatFunc proj = inner(mono_basis_ps[t], jack_ps[s]) / jack_sq[s];
            if (proj.is_zero())
                continue;
            for (std::size_t mu = 0; mu < d; ++mu)
                if (!out.monomial[s][mu].is_zero())
                    mono[mu] -= proj * out.monomial[s][mu];
        }
        // [m_{1^n}] J_θ = n!; [1^n] is first in total order.
        if (mono[0].is_zero())
            throw TheoremViolation("Jack polynomial " + parts[t].to_string() +
                                   " has vanishing m_{1^n} coefficient");
        const RatFunc scale = nfact / mono[0];
        for (auto& c : mono)
            c *= scale;
        std::vector<RatFunc> ps = to_powersum(mono);
        jack_sq.push_back(inner(ps, ps));
        jack_ps.push_back(ps);
        out.monomial.push_back(std::move(mono));
    }
    for (std::size_t t = 0; t < d; ++t) {
        PSExpr ex(n, Basis::PowerSum);
        for (std::size_t la = 0; la < d; ++la)
            ex.add(parts[la], jack_ps[t][la]);
        out.powersum.push_back(std::move(ex));
    }
    return out;
}

JackStore::JackStore() = default;

JackStore& JackStore::instance() {
    static JackStore store;
    return store;
}

void JackStore::set_cache_dir(std::optional<std::filesystem::path> dir) {
    std::unique_lock lock(mutex_);
    cache_dir_ = std::move(dir);
}

void JackStore::clear_memory() {
    std::unique_lock lock(mutex_);
    degrees_.clear();
}

std::shared_ptr<const JackDegree> JackStore::degree(int n) {
    std::optional<std::filesystem::path> dir;
    {
        std::shared_lock lock(mutex_);
        auto it = degrees_.find(n);
        if (it != degrees_.end())
            return it->second;
        dir = cache_dir_;
    }
    // Computed outside the lock; a concurrent duplicate computation produces
    // an identical value and the first insert wins.
    std::optional<JackDegree> jd;
    if (dir)
        jd = load_jack_cache(*dir, n);
    if (!jd) {
        jd = compute_jack_degree(n);
        if (dir)
            save_jack_cache(*dir, *jd);
    }
    auto ptr = std::make_shared<const JackDegree>(std::move(*jd));
    std::unique_lock lock(mutex_);
    return degrees_.try_emplace(n, std::move(ptr)).first->second;
}

PSExpr jack(const Partition& theta) {
    auto jd = JackStore::instance().degree(theta.size());
    return jd->powersum[partition_index(theta)];
}

} // namespace mjack
