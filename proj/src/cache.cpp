#include "mjack/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"
#include <openssl/evp.h>

namespace mjack {

using nlohmann::json;

std::filesystem::path default_cache_dir() {
    if (const char* d = std::getenv(kCacheEnvVar); d && *d)
        return d;
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x)
        return std::filesystem::path(x) / "mjack";
    if (const char* h = std::getenv("HOME"); h && *h)
        return std::filesystem::path(h) / ".cache" / "mjack";
    return std::filesystem::temp_directory_path() / "mjack";
}

std::filesystem::path jack_cache_file(const std::filesystem::path& dir, int n) {
    return dir / ("jack-n" + std::to_string(n) + ".json");
}

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

namespace {

json encode_ratfunc(const RatFunc& r) {
    return json{{"num", encode_coeffs(r.num())}, {"den", encode_coeffs(r.den())}};
}

RatFunc decode_ratfunc(const json& j) {
    return RatFunc(decode_coeffs(j.at("num").get<std::vector<std::string>>(), Var::Alpha),
                   decode_coeffs(j.at("den").get<std::vector<std::string>>(), Var::Alpha));
}

std::string header_line(int n) {
    return std::string(kJackCacheFormat) + " v" + std::to_string(kJackCacheVersion) + " n=" +
           std::to_string(n);
}

} // namespace

std::string serialize_jack_degree(const JackDegree& jd) {
    const auto& parts = all_partitions(jd.n);
    json body;
    body["n"] = jd.n;
    json jacks = json::array();
    for (std::size_t t = 0; t < parts.size(); ++t) {
        json entry;
        entry["theta"] = encode(parts[t]);
        json ps = json::array();
        for (const auto& [p, c] : jd.powersum[t].terms())
            ps.push_back(json{{"p", encode(p)}, {"c", encode_ratfunc(c)}});
        entry["powersum"] = std::move(ps);
        json mono = json::array();
        for (const auto& c : jd.monomial[t])
            mono.push_back(encode_ratfunc(c));
        entry["monomial"] = std::move(mono);
        jacks.push_back(std::move(entry));
    }
    body["jacks"] = std::move(jacks);
    std::string payload = header_line(jd.n) + "\n" + body.dump() + "\n";
    return payload + "sha256 " + sha256_hex(payload) + "\n";
}

std::optional<JackDegree> deserialize_jack_degree(const std::string& text, int expected_n) {
    const auto footer_pos = text.rfind("sha256 ");
    if (footer_pos == std::string::npos || footer_pos == 0)
        return std::nullopt;
    const std::string payload = text.substr(0, footer_pos);
    std::string digest = text.substr(footer_pos + 7);
    while (!digest.empty() && (digest.back() == '\n' || digest.back() == '\r'))
        digest.pop_back();
    if (digest != sha256_hex(payload))
        return std::nullopt;

    const auto nl = payload.find('\n');
    if (nl == std::string::npos || payload.substr(0, nl) != header_line(expected_n))
        return std::nullopt;
    try {
        const json body = json::parse(payload.substr(nl + 1));
        if (body.at("n").get<int>() != expected_n)
            return std::nullopt;
        const auto& parts = all_partitions(expected_n);
        const auto& jacks = body.at("jacks");
        if (jacks.size() != parts.size())
            return std::nullopt;
        JackDegree jd;
        jd.n = expected_n;
        for (std::size_t t = 0; t < parts.size(); ++t) {
            const auto& entry = jacks[t];
            if (parse_partition(entry.at("theta").get<std::string>()) != parts[t])
                return std::nullopt;
            PSExpr ps(expected_n, Basis::PowerSum);
            for (const auto& term : entry.at("powersum"))
                ps.add(parse_partition(term.at("p").get<std::string>()),
                       decode_ratfunc(term.at("c")));
            jd.powersum.push_back(std::move(ps));
            std::vector<RatFunc> mono;
            for (const auto& c : entry.at("monomial"))
                mono.push_back(decode_ratfunc(c));
            if (mono.size() != parts.size())
                return std::nullopt;
            jd.monomial.push_back(std::move(mono));
        }
        return jd;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::optional<JackDegree> load_jack_cache(const std::filesystem::path& dir, int n) {
    std::ifstream in(jack_cache_file(dir, n), std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return deserialize_jack_degree(ss.str(), n);
}

void save_jack_cache(const std::filesystem::path& dir, const JackDegree& jd) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        return; // caching is best effort
    const auto target = jack_cache_file(dir, jd.n);
    std::random_device rd;
    const auto tmp = dir / (target.filename().string() + ".tmp" + std::to_string(rd()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            return;
        out << serialize_jack_degree(jd);
        if (!out)
            return;
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec)
        std::filesystem::remove(tmp, ec);
}

} // namespace mjack
