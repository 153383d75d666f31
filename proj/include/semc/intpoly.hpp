#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "semc/graph.hpp"

namespace semc {

// Exact integer polynomial, coefficients degree-descending.
class IntPolynomial {
public:
    IntPolynomial() = default;
    // coeffs[0] is the leading coefficient; leading zeros are stripped.
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    static IntPolynomial from_ints(const std::vector<long long>& coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    mpz_class coeff(int power) const;  // 0 outside range

    mpz_class eval(const mpz_class& x) const;
    std::string to_string() const;  // "x^12 - 36x^10 + ..." style

    bool operator==(const IntPolynomial& o) const = default;

private:
    std::vector<mpz_class> coeffs_;
};

// det(xI - A) of the adjacency matrix via the Berkowitz division-free
// algorithm; monic of degree n, exact integers throughout.
IntPolynomial char_poly(const SimpleGraph& g);

}  // namespace semc
