#include "mjack/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <stdexcept>

namespace mjack {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) {
    for (int x : parts) {
        if (x < 0)
            throw std::invalid_argument("partition parts must be non-negative");
    }
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    parts_ = std::move(parts);
    for (int x : parts_)
        size_ += x;
}

int Partition::multiplicity(int part) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::string Partition::to_string() const {
    return "[" + (empty() ? std::string() : encode(*this)) + "]";
}

Partition ones(int k) {
    return Partition(std::vector<int>(static_cast<std::size_t>(std::max(k, 0)), 1));
}

Partition conjugate(const Partition& p) {
    std::vector<int> out(static_cast<std::size_t>(p.largest()), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j)
            ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

mpz_class factorial(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class z_factor(const Partition& p) {
    mpz_class z = 1;
    const auto& v = p.parts();
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i])
            ++j;
        const int m = static_cast<int>(j - i);
        z *= factorial(m);
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(v[i]),
                      static_cast<unsigned long>(m));
        z *= pw;
        i = j;
    }
    return z;
}

Partition union_of(const Partition& a, const Partition& b) {
    std::vector<int> v = a.parts();
    v.insert(v.end(), b.parts().begin(), b.parts().end());
    return Partition(std::move(v));
}

Partition oplus(const Partition& a, const Partition& b) {
    const std::size_t len = std::max(a.parts().size(), b.parts().size());
    std::vector<int> v(len);
    for (std::size_t i = 0; i < len; ++i)
        v[i] = a[i] + b[i];
    return Partition(std::move(v));
}

Partition minus_one(const Partition& p) {
    std::vector<int> v;
    for (int x : p.parts())
        if (x > 1)
            v.push_back(x - 1);
    return Partition(std::move(v));
}

Partition remove_part(const Partition& p, int part) {
    std::vector<int> v = p.parts();
    auto it = std::find(v.begin(), v.end(), part);
    if (it == v.end())
        throw std::invalid_argument("remove_part: " + p.to_string() + " has no part " +
                                    std::to_string(part));
    v.erase(it);
    return Partition(std::move(v));
}

bool dominated_by(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size())
        return false;
    int smu = 0, sla = 0;
    const std::size_t len = std::max(mu.parts().size(), lambda.parts().size());
    for (std::size_t i = 0; i < len; ++i) {
        smu += mu[i];
        sla += lambda[i];
        if (smu > sla)
            return false;
    }
    return true;
}

bool total_leq(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size())
        throw std::invalid_argument("total_leq: size mismatch " + mu.to_string() + " vs " +
                                    lambda.to_string());
    if (mu.length() != lambda.length())
        return mu.length() > lambda.length();
    return mu.parts() <= lambda.parts();
}

bool dual_leq(const Partition& mu, const Partition& lambda) {
    return total_leq(conjugate(lambda), conjugate(mu));
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        prefix.push_back(k);
        generate(remaining - k, k, prefix, out);
        prefix.pop_back();
    }
}

struct PartitionTables {
    std::mutex mutex;
    std::map<int, std::vector<Partition>> lists;
    std::map<int, std::map<Partition, std::size_t>> index;
};

PartitionTables& tables() {
    static PartitionTables t;
    return t;
}

} // namespace

const std::vector<Partition>& all_partitions(int n) {
    if (n < 0)
        throw std::invalid_argument("all_partitions: negative size");
    auto& t = tables();
    std::lock_guard lock(t.mutex);
    auto it = t.lists.find(n);
    if (it != t.lists.end())
        return it->second;
    std::vector<Partition> out;
    std::vector<int> prefix;
    generate(n, n, prefix, out);
    std::sort(out.begin(), out.end(), TotalLess{});
    auto& idx = t.index[n];
    for (std::size_t i = 0; i < out.size(); ++i)
        idx.emplace(out[i], i);
    // std::map nodes are stable, so the returned reference outlives later inserts.
    return t.lists.emplace(n, std::move(out)).first->second;
}

std::size_t partition_index(const Partition& p) {
    all_partitions(p.size());
    auto& t = tables();
    std::lock_guard lock(t.mutex);
    return t.index.at(p.size()).at(p);
}

std::size_t partition_count(int n) { return all_partitions(n).size(); }

std::string encode(const Partition& p) {
    if (p.empty())
        return "-";
    std::string s;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(p.parts()[i]);
    }
    return s;
}

Partition parse_partition(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text == "-" || text == "[]")
        return {};
    if (text.size() >= 2 && text.front() == '[' && text.back() == ']')
        text = text.substr(1, text.size() - 2);
    if (text.empty())
        throw std::invalid_argument("empty partition string (use \"-\")");
    std::vector<int> parts;
    while (true) {
        auto comma = text.find(',');
        auto tok = trim(text.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || value <= 0)
            throw std::invalid_argument("bad partition part '" + std::string(tok) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
        throw std::invalid_argument("partition parts must be weakly decreasing");
    return Partition(std::move(parts));
}

std::vector<SetPartition> set_partitions(int n) {
    std::vector<SetPartition> out;
    if (n <= 0) {
        out.push_back({});
        return out;
    }
    // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    while (true) {
        int blocks = 1 + *std::max_element(a.begin(), a.end());
        SetPartition sp;
        sp.blocks.resize(static_cast<std::size_t>(blocks));
        for (int i = 0; i < n; ++i)
            sp.blocks[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])].push_back(i);
        out.push_back(std::move(sp));

        int i = n - 1;
        for (; i >= 1; --i) {
            int prefix_max = *std::max_element(a.begin(), a.begin() + i);
            if (a[static_cast<std::size_t>(i)] <= prefix_max) {
                ++a[static_cast<std::size_t>(i)];
                std::fill(a.begin() + i + 1, a.end(), 0);
                break;
            }
        }
        if (i < 1)
            break;
    }
    return out;
}

} // namespace mjack
