#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mjack {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Formal variable of a univariate polynomial. α and b are related by α = b + 1.
enum class Var { Alpha, B };

const char* var_name(Var v);

/// Dense univariate polynomial over ℚ, lowest degree first. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is non-zero.
class UniPoly {
public:
    explicit UniPoly(Var var = Var::Alpha) : var_(var) {}
    UniPoly(std::vector<Rational> coeffs, Var var);

    static UniPoly constant(const Rational& c, Var var);
    /// The variable itself.
    static UniPoly x(Var var);

    Var var() const noexcept { return var_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// −1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int i) const;
    const Rational& leading() const { return coeffs_.back(); }
    bool is_one() const;

    Rational eval(const Rational& at) const;
    UniPoly monic() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);
    UniPoly operator-() const;

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
    }

    std::string to_string() const;

private:
    void trim();
    void check_var(const UniPoly& o) const;

    std::vector<Rational> coeffs_;
    Var var_;
};

struct PolyDivision {
    UniPoly quotient;
    UniPoly remainder;
};

/// Euclidean division; throws std::domain_error on a zero divisor.
PolyDivision divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero when both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);
UniPoly pow(const UniPoly& p, int e);

/// p(b + 1) for p in α.
UniPoly shift_alpha_to_b(const UniPoly& p);
/// p(α − 1) for p in b.
UniPoly shift_b_to_alpha(const UniPoly& p);

/// Reduced ratio num/den: gcd(num, den) = 1 and den monic.
class RatFunc {
public:
    explicit RatFunc(Var var = Var::Alpha);
    RatFunc(const Rational& c, Var var);
    explicit RatFunc(UniPoly num);
    RatFunc(UniPoly num, UniPoly den);

    const UniPoly& num() const noexcept { return num_; }
    const UniPoly& den() const noexcept { return den_; }
    Var var() const noexcept { return num_.var(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    RatFunc operator-() const;

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const;

private:
    void canonicalize();

    UniPoly num_;
    UniPoly den_;
};

/// Polynomial in b with integer coefficients, lowest degree first, trimmed.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    static IntPoly constant(const BigInt& c);

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt coeff(int i) const;
    BigInt eval(const BigInt& at) const;
    bool nonnegative() const;

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const BigInt& c);
    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

    UniPoly to_unipoly() const;
    /// Human form, e.g. "b^2+3b+1".
    std::string to_string() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// (1 + b)^e
IntPoly one_plus_b_pow(int e);

enum class CertifyFailure { NonPolynomial, NonIntegral };

struct Certification {
    std::optional<IntPoly> poly;
    CertifyFailure failure = CertifyFailure::NonPolynomial;
    std::string witness;
    explicit operator bool() const noexcept { return poly.has_value(); }
};

/// Substitutes α = b + 1 in a rational function of α and checks that the
/// result is a polynomial in b with integer coefficients.
Certification certify_integer_poly(const RatFunc& r);

/// Same check for a polynomial already in b with rational coefficients.
Certification certify_integer_poly_b(const UniPoly& p);

/// Thrown when an exact identity that is a theorem fails; indicates a bug.
class TheoremViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Textual codec: coefficient list lowest-first, each "p/q" or "p".
std::vector<std::string> encode_coeffs(const UniPoly& p);
std::vector<std::string> encode_coeffs(const IntPoly& p);
UniPoly decode_coeffs(const std::vector<std::string>& coeffs, Var var);

} // namespace mjack
