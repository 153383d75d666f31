#include "semc/intpoly.hpp"

#include <stdexcept>

namespace semc {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    size_t lead = 0;
    while (lead + 1 < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    if (coeffs_.empty()) coeffs_.push_back(0);
}

IntPolynomial IntPolynomial::from_ints(const std::vector<long long>& coeffs) {
    std::vector<mpz_class> c;
    c.reserve(coeffs.size());
    for (long long x : coeffs) c.emplace_back(static_cast<long>(x));
    return IntPolynomial(std::move(c));
}

mpz_class IntPolynomial::coeff(int power) const {
    int idx = degree() - power;
    if (power < 0 || idx < 0 || idx > degree()) return 0;
    return coeffs_[idx];
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (const mpz_class& c : coeffs_) acc = acc * x + c;
    return acc;
}

std::string IntPolynomial::to_string() const {
    std::string out;
    const int deg = degree();
    bool first = true;
    for (int p = deg; p >= 0; --p) {
        mpz_class c = coeff(p);
        if (c == 0 && !(deg == 0 && p == 0)) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        bool show_coeff = (a != 1) || p == 0;
        if (show_coeff) out += a.get_str();
        if (p > 0) {
            out += "x";
            if (p > 1) out += "^" + std::to_string(p);
        }
    }
    if (first) out = "0";
    return out;
}

IntPolynomial char_poly(const SimpleGraph& g) {
    const int n = g.n;
    auto adj = g.adjacency();
    // Berkowitz: fold rows in one at a time; C holds the characteristic
    // polynomial of the leading r x r block, degree-descending, length r+1.
    std::vector<mpz_class> C = {mpz_class(1)};
    for (int r = 0; r < n; ++r) {
        std::vector<mpz_class> q(static_cast<size_t>(r) + 2);
        q[0] = 1;
        q[1] = -mpz_class(adj[r][r]);
        std::vector<mpz_class> w(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i) w[i] = adj[i][r];
        for (int k = 2; k <= r + 1; ++k) {
            mpz_class dot = 0;
            for (int i = 0; i < r; ++i)
                if (adj[r][i]) dot += w[i];
            q[k] = -dot;
            if (k <= r) {
                std::vector<mpz_class> w2(static_cast<size_t>(r));
                for (int i = 0; i < r; ++i) {
                    mpz_class acc = 0;
                    for (int j = 0; j < r; ++j)
                        if (adj[i][j]) acc += w[j];
                    w2[i] = acc;
                }
                w.swap(w2);
            }
        }
        std::vector<mpz_class> next(static_cast<size_t>(r) + 2);
        for (int i = 0; i <= r + 1; ++i) {
            mpz_class acc = 0;
            for (int j = 0; j <= r && j <= i; ++j)
                if (i - j <= r + 1) acc += q[i - j] * C[j];
            next[i] = acc;
        }
        C.swap(next);
    }
    return IntPolynomial(std::move(C));
}

}  // namespace semc
