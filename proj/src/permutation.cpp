#include "semc/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace semc {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
            throw std::invalid_argument("permutation images are not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(const std::string& s, int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    while (i < s.size()) {
        if (s[i] != '(') throw std::invalid_argument("expected '(' in cycle notation: " + s);
        ++i;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (i < s.size() && s[i] == ')') { ++i; break; }
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) throw std::invalid_argument("expected digit in cycle notation: " + s);
            int v = std::stoi(s.substr(i, j - i));
            if (v < 0 || v >= n) throw std::invalid_argument("cycle entry out of range: " + s);
            cyc.push_back(v);
            i = j;
            skip_ws();
            if (i < s.size() && s[i] == ',') ++i;
        }
        for (size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
            im[from] = to;
        }
        skip_ws();
    }
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int x = 0; x < degree(); ++x) im[images_[x]] = x;
    return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch in composition");
    std::vector<int> im(images_.size());
    for (int x = 0; x < degree(); ++x) im[x] = images_[rhs(x)];
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (int x = 0; x < degree(); ++x)
        if (images_[x] != x) return false;
    return true;
}

int Permutation::order() const {
    int ord = 1;
    std::vector<char> seen(images_.size(), 0);
    for (int s = 0; s < degree(); ++s) {
        if (seen[s]) continue;
        int len = 0, x = s;
        do { seen[x] = 1; x = images_[x]; ++len; } while (x != s);
        ord = std::lcm(ord, len);
    }
    return ord;
}

std::string Permutation::to_cycles() const {
    std::string out;
    std::vector<char> seen(images_.size(), 0);
    for (int s = 0; s < degree(); ++s) {
        if (seen[s] || images_[s] == s) { seen[s] = 1; continue; }
        out += '(';
        int x = s;
        bool first = true;
        do {
            if (!first) out += ',';
            out += std::to_string(x);
            seen[x] = 1;
            x = images_[x];
            first = false;
        } while (x != s);
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

}  // namespace semc
