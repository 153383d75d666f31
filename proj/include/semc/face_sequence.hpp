#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace semc {

// Exact rational on 64-bit parts; large enough for every Euler computation here.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1);
    Rational operator+(const Rational& r) const;
    Rational operator-(const Rational& r) const;
    bool operator==(const Rational& r) const = default;
    bool is_integer() const { return den == 1; }
};

// Cyclic sequence of face sizes around a vertex, stored canonically:
// lexicographically least among all rotations and reflections.
class FaceSequence {
public:
    FaceSequence() = default;  // empty sentinel; real values come from the factories
    // Canonicalizes; throws std::invalid_argument for entries < 3 or length < 3.
    static FaceSequence canonicalize(const std::vector<int>& raw);
    // Accepts "3,4,4,4,4" or exponent shorthand "3^4,4^2" (expanded in order).
    static FaceSequence parse(const std::string& text);

    const std::vector<int>& entries() const { return entries_; }
    int degree() const { return static_cast<int>(entries_.size()); }
    std::string to_string() const;  // comma-separated canonical form

    bool operator==(const FaceSequence& o) const = default;
    bool operator<(const FaceSequence& o) const;

private:
    std::vector<int> entries_;
};

// Face counts f_a = v * n_a / a per distinct gon size a, where n_a is
// the multiplicity of a in the sequence.
struct FaceCounts {
    std::map<int, long long> per_gon;  // gon size -> face count
    long long total() const;
};

// Empty result means non-integral at the reported gon size.
struct NonIntegral {
    int gon;
};

// Returns the face counts, or the first gon size a with a not dividing v*n_a.
std::optional<FaceCounts> face_counts(const FaceSequence& t, long long v, NonIntegral* why = nullptr);

// chi = v - v*d/2 + sum_a f_a, exact. Empty if face_counts is non-integral.
std::optional<Rational> euler_of_type(const FaceSequence& t, long long v, NonIntegral* why = nullptr);

// All canonical face sequences with 3 <= a_i <= v achieving the given integer
// Euler characteristic with integral face counts. Degrees run from 3 upward
// until even the all-3 sequence overshoots chi. Distinct cyclic arrangements
// of one multiset are distinct results.
std::vector<FaceSequence> admissible_types(long long v, long long chi);

}  // namespace semc
