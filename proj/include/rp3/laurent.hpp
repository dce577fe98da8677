#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace rp3 {

// Laurent polynomial in A with arbitrary-precision integer coefficients.
// Zero coefficients are never stored.
class Laurent {
public:
    Laurent() = default;
    Laurent(long c);  // NOLINT: constants convert implicitly
    static Laurent monomial(const mpz_class& c, int e);
    static Laurent A(int e = 1) { return monomial(1, e); }
    static Laurent delta();  // -A^2 - A^-2

    const std::map<int, mpz_class>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    mpz_class coeff(int e) const;
    int min_exp() const;
    int max_exp() const;

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }
    Laurent operator-() const;
    bool operator==(const Laurent& o) const { return t_ == o.t_; }

    Laurent pow(int k) const;  // k >= 0, or a monomial for k < 0
    Laurent mirror() const;    // A -> A^-1
    Laurent scaled(int k) const;  // A -> A^k
    // Exact division; returns false if the divisor does not divide.
    bool divide_exact(const Laurent& d, Laurent& q) const;
    // Value at A = x (x an integer, nonzero); rational for negative exponents.
    mpq_class eval(long x) const;

    std::string str(const std::string& var = "A") const;
    // Quarter-integer exponent form for A = t^(-1/4).
    std::string jones_str() const;
    static Laurent parse(const std::string& text);

private:
    void add_term(int e, const mpz_class& c);
    std::map<int, mpz_class> t_;
};

}  // namespace rp3
