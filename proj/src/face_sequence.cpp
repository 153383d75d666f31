#include "semc/face_sequence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace semc {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
}

Rational Rational::operator+(const Rational& r) const {
    return Rational(num * r.den + r.num * den, den * r.den);
}

Rational Rational::operator-(const Rational& r) const {
    return Rational(num * r.den - r.num * den, den * r.den);
}

namespace {

std::vector<int> least_cyclic_form(std::vector<int> seq) {
    const int d = static_cast<int>(seq.size());
    std::vector<int> best = seq;
    std::vector<int> cur = seq;
    for (int pass = 0; pass < 2; ++pass) {
        for (int r = 0; r < d; ++r) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            if (cur < best) best = cur;
        }
        std::reverse(cur.begin(), cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

}  // namespace

FaceSequence FaceSequence::canonicalize(const std::vector<int>& raw) {
    if (raw.size() < 3) throw std::invalid_argument("face sequence needs at least 3 entries");
    for (int a : raw)
        if (a < 3) throw std::invalid_argument("face sequence entries must be >= 3");
    FaceSequence t;
    t.entries_ = least_cyclic_form(raw);
    return t;
}

FaceSequence FaceSequence::parse(const std::string& text) {
    std::vector<int> raw;
    size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
        if (i >= text.size()) break;
        size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) throw std::invalid_argument("bad face sequence text: " + text);
        int a = std::stoi(text.substr(i, j - i));
        int rep = 1;
        i = j;
        if (i < text.size() && text[i] == '^') {
            ++i;
            j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) throw std::invalid_argument("bad exponent in face sequence: " + text);
            rep = std::stoi(text.substr(i, j - i));
            i = j;
        }
        for (int k = 0; k < rep; ++k) raw.push_back(a);
    }
    return canonicalize(raw);
}

std::string FaceSequence::to_string() const {
    std::string out;
    for (size_t k = 0; k < entries_.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(entries_[k]);
    }
    return out;
}

bool FaceSequence::operator<(const FaceSequence& o) const {
    if (entries_.size() != o.entries_.size()) return entries_.size() < o.entries_.size();
    return entries_ < o.entries_;
}

long long FaceCounts::total() const {
    long long s = 0;
    for (auto& [gon, cnt] : per_gon) s += cnt;
    return s;
}

std::optional<FaceCounts> face_counts(const FaceSequence& t, long long v, NonIntegral* why) {
    if (v < 1) throw std::invalid_argument("vertex count must be >= 1");
    std::map<int, long long> mult;
    for (int a : t.entries()) ++mult[a];
    FaceCounts fc;
    for (auto& [a, na] : mult) {
        long long num = v * na;
        if (num % a != 0) {
            if (why) why->gon = a;
            return std::nullopt;
        }
        fc.per_gon[a] = num / a;
    }
    return fc;
}

std::optional<Rational> euler_of_type(const FaceSequence& t, long long v, NonIntegral* why) {
    auto fc = face_counts(t, v, why);
    if (!fc) return std::nullopt;
    // chi = V - E + F with E = v*d/2
    Rational chi(v, 1);
    chi = chi - Rational(v * t.degree(), 2);
    chi = chi + Rational(fc->total(), 1);
    return chi;
}

namespace {

// DFS over sequences a_1..a_d with 3 <= a_i <= amax, keeping only canonical
// (lexicographically least cyclic/reflected) representatives, exact sum
// 1/a_i == target. Works over the common denominator lcm of 3..amax via
// rational arithmetic on (num, den) pairs held as Rational.
void sweep_degree(int d, long long v, long long chi, std::vector<FaceSequence>& out) {
    // Required: sum 1/a_i = d/2 - 1 + chi/v
    Rational target = Rational(d, 2) - Rational(1, 1) + Rational(chi, v);
    if (target.num <= 0) return;  // entries are finite positive
    int amax = static_cast<int>(std::min<long long>(v, 1000));
    std::vector<int> seq(d);
    auto rec = [&](auto&& self, int idx, Rational acc) -> void {
        if (idx == d) {
            if (!(acc == target)) return;
            // keep canonical representatives only
            std::vector<int> canon = seq;
            {
                FaceSequence c = FaceSequence::canonicalize(seq);
                if (c.entries() != seq) return;
                auto fc = face_counts(c, v);
                if (!fc) return;
                out.push_back(std::move(c));
            }
            return;
        }
        int remaining = d - idx;
        for (int a = 3; a <= amax; ++a) {
            Rational next = acc + Rational(1, a);
            // bounds: remaining-1 further entries contribute between (r-1)/amax and (r-1)/3
            Rational lo = next + Rational(remaining - 1, amax);
            Rational hi = next + Rational(remaining - 1, 3);
            auto lt = [](const Rational& x, const Rational& y) {
                return static_cast<__int128>(x.num) * y.den < static_cast<__int128>(y.num) * x.den;
            };
            // hi and lo both shrink as a grows
            if (lt(hi, target)) break;     // even the largest completion falls short
            if (lt(target, lo)) continue;  // overshoots; a larger a may still fit
            seq[idx] = a;
            self(self, idx + 1, next);
        }
    };
    rec(rec, 0, Rational(0, 1));
    (void)v;
}

}  // namespace

std::vector<FaceSequence> admissible_types(long long v, long long chi) {
    std::vector<FaceSequence> out;
    for (int d = 3;; ++d) {
        // all-3 sequence gives the largest chi at this degree: v*(1 - d/6).
        // once even that undershoots chi, no larger degree can work.
        Rational best = Rational(v, 1) - Rational(v * d, 6);
        if (static_cast<__int128>(best.num) < static_cast<__int128>(chi) * best.den) break;
        sweep_degree(d, v, chi, out);
        if (d > 64) break;  // hard stop; unreachable for sane inputs
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace semc
