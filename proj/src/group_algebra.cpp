#include "mjack/group_algebra.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace mjack {

Perm compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("compose: permutations of different degree");
    Perm out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x)
        out[x] = a[static_cast<std::size_t>(b[x])];
    return out;
}

Perm inverse(const Perm& p) {
    Perm out(p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
        out[static_cast<std::size_t>(p[x])] = static_cast<int>(x);
    return out;
}

Partition reduced_type(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    std::vector<int> parts;
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (seen[x])
            continue;
        int len = 0;
        std::size_t y = x;
        while (!seen[y]) {
            seen[y] = 1;
            y = static_cast<std::size_t>(p[y]);
            ++len;
        }
        if (len > 1)
            parts.push_back(len - 1);
    }
    return Partition(parts);
}

Perm representative(const Partition& kappa, int n) {
    if (kappa.size() + kappa.length() > n)
        throw std::invalid_argument("representative: reduced type " + kappa.to_string() +
                                    " does not fit in S_" + std::to_string(n));
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    int start = 0;
    for (int k : kappa.parts()) {
        const int len = k + 1;
        for (int j = 0; j < len; ++j)
            p[static_cast<std::size_t>(start + j)] = start + (j + 1) % len;
        start += len;
    }
    return p;
}

// ---------------------------------------------------------------- S_n tables

namespace {

void check_group_guard(int n, int guard) {
    if (n < 1)
        throw std::invalid_argument("symmetric group degree must be at least 1");
    if (n > guard)
        throw GuardExceeded("group-algebra computation at n=" + std::to_string(n) +
                            " exceeds the guard n <= " + std::to_string(guard));
}

} // namespace

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        perms_.push_back(p);
        types_.push_back(reduced_type(p));
    } while (std::next_permutation(p.begin(), p.end()));
    const std::size_t pairs = static_cast<std::size_t>(n * (n - 1) / 2);
    transposition_table_.resize(pairs * perms_.size());
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            const std::size_t t = transposition_index(i, j);
            for (std::size_t r = 0; r < perms_.size(); ++r) {
                Perm q = perms_[r];
                std::swap(q[static_cast<std::size_t>(i)], q[static_cast<std::size_t>(j)]);
                transposition_table_[t * perms_.size() + r] = rank(q);
            }
        }
}

const SymmetricGroup& SymmetricGroup::get(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<SymmetricGroup>> memo;
    std::lock_guard lock(mutex);
    auto it = memo.find(n);
    if (it == memo.end())
        it = memo.emplace(n, std::unique_ptr<SymmetricGroup>(new SymmetricGroup(n))).first;
    return *it->second;
}

std::size_t SymmetricGroup::rank(const Perm& p) const {
    // Lehmer code; lexicographic rank.
    std::size_t r = 0;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (p[j] < p[i])
                ++smaller;
        r = r * (n - i) + smaller;
    }
    return r;
}

// ---------------------------------------------------------------- ℤS_n

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("group algebra coefficient overflow");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("group algebra coefficient overflow");
    return out;
}

} // namespace

GroupAlgebraElem GroupAlgebraElem::zero(int n) {
    return GroupAlgebraElem{n, std::vector<std::int64_t>(SymmetricGroup::get(n).order(), 0)};
}

GroupAlgebraElem GroupAlgebraElem::identity(int n) {
    auto e = zero(n);
    e.coeff[0] = 1; // the identity has lexicographic rank 0
    return e;
}

GroupAlgebraElem& GroupAlgebraElem::operator+=(const GroupAlgebraElem& o) {
    if (o.n != n)
        throw std::invalid_argument("group algebra elements of different degree");
    for (std::size_t r = 0; r < coeff.size(); ++r)
        coeff[r] = checked_add(coeff[r], o.coeff[r]);
    return *this;
}

GroupAlgebraElem operator*(const GroupAlgebraElem& a, const GroupAlgebraElem& b) {
    if (a.n != b.n)
        throw std::invalid_argument("group algebra elements of different degree");
    const auto& g = SymmetricGroup::get(a.n);
    auto out = GroupAlgebraElem::zero(a.n);
    for (std::size_t i = 0; i < a.coeff.size(); ++i) {
        if (a.coeff[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeff.size(); ++j) {
            if (b.coeff[j] == 0)
                continue;
            const std::size_t r = g.rank(compose(g.perm(i), g.perm(j)));
            out.coeff[r] = checked_add(out.coeff[r], checked_mul(a.coeff[i], b.coeff[j]));
        }
    }
    return out;
}

GroupAlgebraElem times_jucys_murphy(const GroupAlgebraElem& a, int i) {
    const auto& g = SymmetricGroup::get(a.n);
    auto out = GroupAlgebraElem::zero(a.n);
    if (i < 2)
        return out;
    if (i > a.n)
        throw std::invalid_argument("Jucys-Murphy index beyond the group degree");
    for (std::size_t r = 0; r < a.coeff.size(); ++r) {
        if (a.coeff[r] == 0)
            continue;
        for (int j = 0; j < i - 1; ++j) {
            const std::size_t s = g.times_transposition(r, j, i - 1);
            out.coeff[s] = checked_add(out.coeff[s], a.coeff[r]);
        }
    }
    return out;
}

CentralElem class_sum(const Partition& lambda, int n) {
    CentralElem c{n, {}};
    if (lambda.size() + lambda.length() <= n)
        c.coeffs[lambda] = 1;
    return c;
}

GroupAlgebraElem expand(const CentralElem& c) {
    const auto& g = SymmetricGroup::get(c.n);
    auto out = GroupAlgebraElem::zero(c.n);
    for (std::size_t r = 0; r < g.order(); ++r) {
        auto it = c.coeffs.find(g.type(r));
        if (it != c.coeffs.end()) {
            if (!it->second.fits_slong_p())
                throw std::overflow_error("central coefficient too large for the group algebra");
            out.coeff[r] = it->second.get_si();
        }
    }
    return out;
}

CentralElem to_central(const GroupAlgebraElem& e) {
    const auto& g = SymmetricGroup::get(e.n);
    std::map<Partition, std::int64_t> seen;
    for (std::size_t r = 0; r < g.order(); ++r) {
        auto [it, inserted] = seen.try_emplace(g.type(r), e.coeff[r]);
        if (!inserted && it->second != e.coeff[r])
            throw TheoremViolation("group algebra element is not central (class " + g.type(r).to_string() + ")");
    }
    CentralElem c{e.n, {}};
    for (const auto& [type, v] : seen)
        if (v != 0)
            c.coeffs[type] = BigInt(static_cast<long>(v));
    return c;
}

GroupAlgebraElem jm_elementary(int n, int l, int guard) {
    check_group_guard(n, guard);
    if (l < 0)
        throw std::invalid_argument("jm_elementary: negative degree");
    // E[k] = e_k(𝒥_2..𝒥_i) updated one variable at a time.
    std::vector<GroupAlgebraElem> e(static_cast<std::size_t>(l) + 1, GroupAlgebraElem::zero(n));
    e[0] = GroupAlgebraElem::identity(n);
    for (int i = 2; i <= n; ++i)
        for (int k = l; k >= 1; --k)
            e[static_cast<std::size_t>(k)] += times_jucys_murphy(e[static_cast<std::size_t>(k - 1)], i);
    return e[static_cast<std::size_t>(l)];
}

GroupAlgebraElem jm_monomial(int n, const Partition& mu, int guard) {
    check_group_guard(n, guard);
    // Distinct part values and multiplicities of μ; a DP state is the vector of
    // how many copies of each value have already been assigned to a variable.
    std::vector<int> values, mult;
    for (int p : mu.parts()) {
        if (values.empty() || values.back() != p) {
            values.push_back(p);
            mult.push_back(0);
        }
        ++mult.back();
    }
    std::map<std::vector<int>, GroupAlgebraElem> states;
    states.emplace(std::vector<int>(values.size(), 0), GroupAlgebraElem::identity(n));
    for (int i = 2; i <= n; ++i) {
        std::map<std::vector<int>, GroupAlgebraElem> next = states; // exponent 0 for 𝒥_i
        for (const auto& [used, elem] : states)
            for (std::size_t v = 0; v < values.size(); ++v) {
                if (used[v] == mult[v])
                    continue;
                GroupAlgebraElem term = elem;
                for (int p = 0; p < values[v]; ++p)
                    term = times_jucys_murphy(term, i);
                auto key = used;
                ++key[v];
                auto [it, inserted] = next.try_emplace(key, term);
                if (!inserted)
                    it->second += term;
            }
        states = std::move(next);
    }
    auto it = states.find(mult);
    return it == states.end() ? GroupAlgebraElem::zero(n) : it->second;
}

std::map<std::pair<Partition, Partition>, BigInt> rho_row(const Partition& kappa, int n, int guard) {
    check_group_guard(n, guard);
    std::map<std::pair<Partition, Partition>, BigInt> out;
    if (kappa.size() + kappa.length() > n)
        return out;
    const auto& g = SymmetricGroup::get(n);
    const Perm pi = representative(kappa, n);
    for (std::size_t r = 0; r < g.order(); ++r) {
        const Perm& sigma = g.perm(r);
        out[{g.type(r), reduced_type(compose(inverse(sigma), pi))}] += 1;
    }
    return out;
}

BigInt rho(const Partition& kappa, const Partition& lambda, const Partition& mu, int n, int guard) {
    check_group_guard(n, guard);
    for (const auto* p : {&kappa, &lambda, &mu})
        if (p->size() + p->length() > n)
            return 0;
    const auto& g = SymmetricGroup::get(n);
    const Perm pi = representative(kappa, n);
    long count = 0;
    for (std::size_t r = 0; r < g.order(); ++r)
        if (g.type(r) == lambda && reduced_type(compose(inverse(g.perm(r)), pi)) == mu)
            ++count;
    return count;
}

} // namespace mjack
