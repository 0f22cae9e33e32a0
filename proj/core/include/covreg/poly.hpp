#ifndef COVREG_POLY_HPP
#define COVREG_POLY_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace covreg {

using Int = mpz_class;

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients. coeffs[k] is the coefficient of x^k; trailing zeros are
/// trimmed, so the zero polynomial has an empty coefficient vector.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long> coeffs);
    static IntPoly constant(Int c);
    static IntPoly monomial(int degree, Int c = 1);
    /// (1+x)^k, expanded.
    static IntPoly one_plus_x_pow(int k);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Int& coeff(int k) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    Int eval(const Int& x) const;

    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly scale(const Int& c) const;
    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }

    /// Rendering "c0 + c1*t + c2*t^2 + ..." with the given variable name.
    std::string str(const std::string& var = "t") const;

    void trim();

private:
    std::vector<Int> coeffs_;
};

/// p(u-1): the Taylor expansion of p at x = -1, returned in the variable u.
/// Degree is preserved; the map is a ring homomorphism.
IntPoly shift_sub(const IntPoly& p);

/// Multiplicity of x = -1 as a root of p, together with the first nonzero
/// Taylor coefficient of p at -1 (repeated exact synthetic division by x+1).
/// Throws std::invalid_argument on the zero polynomial.
std::pair<int, Int> ord_at_minus1(const IntPoly& p);

/// Exact value of the k-th derivative of p at x0.
Int derivative_at(const IntPoly& p, int k, const Int& x0);

/// Recovers the h-polynomial from a truncated Hilbert function: multiplies
/// sum hf[d] t^d by (1-t)^dim and checks that the last dim+1 product
/// coefficients vanish (they must if the series is rational with this
/// denominator and hf is long enough). Throws std::invalid_argument
/// ("series not rational with this dimension") otherwise.
IntPoly series_h_extract(const std::vector<Int>& hf, int dim);

/// Binomial coefficient C(a, b); zero when b < 0 or a < b (a >= 0 assumed).
Int binom(long a, long b);

}  // namespace covreg

#endif
