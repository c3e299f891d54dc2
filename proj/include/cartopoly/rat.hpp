#pragma once

// Exact rational coordinates. Everything outside the smoothing module is
// computed over Q; GMP's mpq_class keeps values reduced with a positive
// denominator, which is exactly the invariant we need.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace carto {

using Rat = mpq_class;

struct RatPt {
    Rat x;
    Rat y;

    bool operator==(const RatPt& o) const { return x == o.x && y == o.y; }
    bool operator!=(const RatPt& o) const { return !(*this == o); }
};

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// long long -> Rat (mpq_class has no long long constructor; long is 64-bit
// on every platform we target)
inline Rat rat_ll(long long v) {
    static_assert(sizeof(long) == sizeof(long long));
    return Rat(static_cast<long>(v));
}

// Parses "p", "-p" or "p/q". Returns nullopt on malformed input or a zero
// denominator.
inline std::optional<Rat> parse_rat(const std::string& s) {
    if (s.empty()) return std::nullopt;
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
            return std::nullopt;
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) return std::nullopt;
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline double rat_d(const Rat& q) { return q.get_d(); }

inline int rat_sgn(const Rat& q) { return sgn(q); }

inline const Rat& rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline const Rat& rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace carto
