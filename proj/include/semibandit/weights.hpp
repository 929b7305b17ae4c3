#pragma once

#include <limits>

namespace semibandit {

// Oracle weight with a two-tier order: the cold component counts unplayed arms
// a strategy would cover and dominates lexicographically; the value component
// is the finite index sum over warm arms. This realizes the "cold arm = +inf"
// convention without infinities leaking into sums.
struct TieredWeight {
    double cold = 0.0;
    double value = 0.0;

    TieredWeight& operator+=(const TieredWeight& o) {
        cold += o.cold;
        value += o.value;
        return *this;
    }
    friend TieredWeight operator+(TieredWeight a, const TieredWeight& b) { return a += b; }

    bool operator==(const TieredWeight&) const = default;
};

inline TieredWeight cold_weight() { return {1.0, 0.0}; }
inline TieredWeight warm_weight(double v) { return {0.0, v}; }

inline bool tier_less(const TieredWeight& a, const TieredWeight& b) {
    if (a.cold != b.cold) return a.cold < b.cold;
    return a.value < b.value;
}

inline TieredWeight scale_down(const TieredWeight& w, double divisor) {
    return {w.cold / divisor, w.value / divisor};
}

// Extended-real view: any cold coverage reads as +infinity.
inline double as_extended_real(const TieredWeight& w) {
    return w.cold > 0.0 ? std::numeric_limits<double>::infinity() : w.value;
}

} // namespace semibandit
