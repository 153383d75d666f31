#pragma once

#include <string>
#include <vector>

namespace semc {

// Bijection on {0..n-1}, stored as the image array.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    // Parses cycle notation, e.g. "(0,1)(2,8)(3,9)(4,10,7,11)". Points not
    // mentioned are fixed. Whitespace between tokens is ignored.
    static Permutation from_cycles(const std::string& s, int n);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[x]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    // (a * b)(x) = a(b(x))
    Permutation operator*(const Permutation& rhs) const;
    bool operator==(const Permutation& rhs) const = default;
    bool operator<(const Permutation& rhs) const { return images_ < rhs.images_; }

    bool is_identity() const;
    int order() const;

    // Cycle notation with fixed points omitted; identity prints as "()".
    std::string to_cycles() const;

private:
    std::vector<int> images_;
};

}  // namespace semc
