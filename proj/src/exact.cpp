#include "mjack/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace mjack {

const char* var_name(Var v) { return v == Var::Alpha ? "a" : "b"; }

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Rational> coeffs, Var var) : coeffs_(std::move(coeffs)), var_(var) {
    for (auto& c : coeffs_)
        c.canonicalize();
    trim();
}

UniPoly UniPoly::constant(const Rational& c, Var var) { return UniPoly({c}, var); }

UniPoly UniPoly::x(Var var) { return UniPoly({Rational(0), Rational(1)}, var); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

void UniPoly::check_var(const UniPoly& o) const {
    if (var_ != o.var_ && !is_zero() && !o.is_zero())
        throw std::invalid_argument("polynomial variable mismatch");
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

bool UniPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational UniPoly::eval(const Rational& at) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

UniPoly UniPoly::monic() const {
    if (is_zero())
        return *this;
    UniPoly out = *this;
    const Rational inv = 1 / leading();
    for (auto& c : out.coeffs_)
        c *= inv;
    return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    check_var(o);
    if (is_zero())
        var_ = o.var_;
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    check_var(o);
    if (is_zero())
        var_ = o.var_;
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    a.check_var(b);
    Var var = a.is_zero() ? b.var_ : a.var_;
    if (a.is_zero() || b.is_zero())
        return UniPoly(var);
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    UniPoly r(var);
    r.coeffs_ = std::move(out);
    r.trim();
    return r;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

std::string UniPoly::to_string() const {
    if (is_zero())
        return "0";
    std::string out;
    const std::string x = var_name(var_);
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        bool neg = c < 0;
        if (neg)
            c = -c;
        if (!out.empty())
            out += neg ? "-" : "+";
        else if (neg)
            out += "-";
        const bool unit = c == 1;
        if (!unit || i == 0)
            out += c.get_str();
        if (i >= 1)
            out += x;
        if (i >= 2)
            out += "^" + std::to_string(i);
    }
    return out;
}

PolyDivision divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    const Var var = b.var();
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    const int da = a.degree();
    if (da < db)
        return {UniPoly(var), a};
    std::vector<Rational> quo(static_cast<std::size_t>(da - db + 1));
    const Rational inv_lead = 1 / b.leading();
    for (int i = da; i >= db; --i) {
        const Rational q = rem[static_cast<std::size_t>(i)] * inv_lead;
        quo[static_cast<std::size_t>(i - db)] = q;
        if (q == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UniPoly(std::move(quo), var), UniPoly(std::move(rem), var)};
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).remainder;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

UniPoly pow(const UniPoly& p, int e) {
    UniPoly r = UniPoly::constant(1, p.var());
    for (int i = 0; i < e; ++i)
        r *= p;
    return r;
}

namespace {

// p(x + shift) by Horner; the result carries the tag `to`.
UniPoly compose_shift(const UniPoly& p, int shift, Var to) {
    const UniPoly lin({Rational(shift), Rational(1)}, to);
    UniPoly acc(to);
    for (int i = p.degree(); i >= 0; --i) {
        acc *= lin;
        acc += UniPoly::constant(p.coeffs()[static_cast<std::size_t>(i)], to);
    }
    return acc;
}

} // namespace

UniPoly shift_alpha_to_b(const UniPoly& p) {
    if (p.var() != Var::Alpha && !p.is_zero())
        throw std::invalid_argument("shift_alpha_to_b expects a polynomial in alpha");
    return compose_shift(p, 1, Var::B);
}

UniPoly shift_b_to_alpha(const UniPoly& p) {
    if (p.var() != Var::B && !p.is_zero())
        throw std::invalid_argument("shift_b_to_alpha expects a polynomial in b");
    return compose_shift(p, -1, Var::Alpha);
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(Var var) : num_(var), den_(UniPoly::constant(1, var)) {}

RatFunc::RatFunc(const Rational& c, Var var)
    : num_(UniPoly::constant(c, var)), den_(UniPoly::constant(1, var)) {}

RatFunc::RatFunc(UniPoly num) : num_(std::move(num)), den_(UniPoly::constant(1, num_.var())) {}

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw std::domain_error("rational function with zero denominator");
    canonicalize();
}

void RatFunc::canonicalize() {
    const Var var = den_.var();
    if (num_.is_zero()) {
        num_ = UniPoly(var);
        den_ = UniPoly::constant(1, var);
        return;
    }
    if (den_.degree() > 0) {
        UniPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).quotient;
            den_ = divmod(den_, g).quotient;
        }
    }
    const Rational lead = den_.leading();
    if (lead != 1) {
        const Rational inv = 1 / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    canonicalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero() || o.is_zero()) {
        *this = RatFunc(var());
        return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero())
        throw std::domain_error("division by the zero rational function");
    num_ *= o.den_;
    den_ *= o.num_;
    canonicalize();
    return *this;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string RatFunc::to_string() const {
    if (is_polynomial() && den_.is_one())
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly({c}); }

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

BigInt IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

BigInt IntPoly::eval(const BigInt& at) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

bool IntPoly::nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(out));
}

IntPoly operator*(IntPoly a, const BigInt& c) {
    for (auto& x : a.coeffs_)
        x *= c;
    a.trim();
    return a;
}

UniPoly IntPoly::to_unipoly() const {
    std::vector<Rational> q(coeffs_.begin(), coeffs_.end());
    return UniPoly(std::move(q), Var::B);
}

std::string IntPoly::to_string() const { return to_unipoly().to_string(); }

IntPoly one_plus_b_pow(int e) {
    // binomial coefficients
    std::vector<BigInt> c(static_cast<std::size_t>(e) + 1);
    for (int k = 0; k <= e; ++k)
        mpz_bin_uiui(c[static_cast<std::size_t>(k)].get_mpz_t(), static_cast<unsigned long>(e),
                     static_cast<unsigned long>(k));
    return IntPoly(std::move(c));
}

// ---------------------------------------------------------------- certification

Certification certify_integer_poly_b(const UniPoly& p) {
    Certification out;
    std::vector<BigInt> ints;
    for (int i = 0; i <= p.degree(); ++i) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c.get_den() != 1) {
            out.failure = CertifyFailure::NonIntegral;
            out.witness = "coefficient of b^" + std::to_string(i) + " is " + c.get_str();
            return out;
        }
        ints.push_back(c.get_num());
    }
    out.poly = IntPoly(std::move(ints));
    return out;
}

Certification certify_integer_poly(const RatFunc& r) {
    const UniPoly num_b = shift_alpha_to_b(r.num());
    const UniPoly den_b = shift_alpha_to_b(r.den());
    auto [q, rem] = divmod(num_b, den_b);
    if (!rem.is_zero()) {
        Certification out;
        out.failure = CertifyFailure::NonPolynomial;
        out.witness = "remainder " + rem.to_string() + " modulo " + den_b.to_string();
        return out;
    }
    return certify_integer_poly_b(q);
}

// ---------------------------------------------------------------- codec

std::vector<std::string> encode_coeffs(const UniPoly& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs())
        out.push_back(c.get_str());
    return out;
}

std::vector<std::string> encode_coeffs(const IntPoly& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs())
        out.push_back(c.get_str());
    return out;
}

UniPoly decode_coeffs(const std::vector<std::string>& coeffs, Var var) {
    std::vector<Rational> q;
    for (const auto& s : coeffs) {
        Rational r;
        if (r.set_str(s, 10) != 0)
            throw std::invalid_argument("bad rational coefficient '" + s + "'");
        r.canonicalize();
        q.push_back(r);
    }
    return UniPoly(std::move(q), var);
}

} // namespace mjack
