#include "covreg/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace covreg {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    p.coeffs_.push_back(std::move(c));
    p.trim();
    return p;
}

IntPoly IntPoly::monomial(int degree, Int c) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(degree + 1, Int(0));
        p.coeffs_[degree] = std::move(c);
    }
    return p;
}

IntPoly IntPoly::one_plus_x_pow(int k) {
    if (k < 0) throw std::invalid_argument("one_plus_x_pow: negative exponent");
    std::vector<Int> c(k + 1);
    for (int i = 0; i <= k; ++i) mpz_bin_uiui(c[i].get_mpz_t(), k, i);
    return IntPoly(std::move(c));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPoly::coeff(int k) const {
    static const Int zero(0);
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[k];
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;  // Horner
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::scale(const Int& k) const {
    if (k == 0) return IntPoly();
    std::vector<Int> c = coeffs_;
    for (auto& x : c) x *= k;
    return IntPoly(std::move(c));
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Int& c = coeffs_[k];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (k == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    return out.str();
}

IntPoly shift_sub(const IntPoly& p) {
    // Repeated synthetic division by (x+1): the remainders are the Taylor
    // coefficients of p at -1 in increasing order. One division step turns
    // q[0..d] into remainder q[0] followed by the quotient q[1..d].
    std::vector<Int> q = p.coeffs();
    std::vector<Int> taylor;
    taylor.reserve(q.size());
    size_t lo = 0;
    while (lo < q.size()) {
        for (size_t i = q.size() - 1; i-- > lo;) q[i] -= q[i + 1];
        taylor.push_back(q[lo]);
        ++lo;
    }
    return IntPoly(std::move(taylor));
}

std::pair<int, Int> ord_at_minus1(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("ord_at_minus1: zero polynomial");
    IntPoly t = shift_sub(p);
    int k = 0;
    while (t.coeff(k) == 0) ++k;
    return {k, t.coeff(k)};
}

Int derivative_at(const IntPoly& p, int k, const Int& x0) {
    if (k < 0) throw std::invalid_argument("derivative_at: negative order");
    if (k > p.degree()) return 0;
    Int acc = 0;
    for (int j = p.degree(); j >= k; --j) {
        Int falling = 1;  // j (j-1) ... (j-k+1)
        for (int s = 0; s < k; ++s) falling *= (j - s);
        acc = acc * x0 + falling * p.coeff(j);
    }
    return acc;
}

IntPoly series_h_extract(const std::vector<Int>& hf, int dim) {
    if (dim < 0) throw std::invalid_argument("series_h_extract: negative dimension");
    const int D = static_cast<int>(hf.size()) - 1;
    if (D < dim) throw std::invalid_argument("series_h_extract: series too short");
    std::vector<Int> prod(hf.size(), Int(0));
    for (int k = 0; k <= D; ++k) {
        Int acc = 0;
        for (int i = 0; i <= dim && i <= k; ++i) {
            Int b;
            mpz_bin_uiui(b.get_mpz_t(), dim, i);
            if (i & 1)
                acc -= b * hf[k - i];
            else
                acc += b * hf[k - i];
        }
        prod[k] = std::move(acc);
    }
    // A genuinely rational series with denominator (1-t)^dim leaves the last
    // dim+1 observable coefficients at zero once hf is long enough.
    for (int k = std::max(0, D - dim); k <= D; ++k)
        if (prod[k] != 0) throw std::invalid_argument("series not rational with this dimension");
    return IntPoly(std::move(prod));
}

Int binom(long a, long b) {
    if (b < 0 || a < b) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

}  // namespace covreg
