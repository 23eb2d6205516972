#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "fairkm/errors.hpp"

namespace fairkm {

enum class Color : std::uint8_t { red = 0, blue = 1 };

inline Color other(Color c) { return c == Color::red ? Color::blue : Color::red; }

// Red/blue point counts of a set. All balance arithmetic is exact integer
// arithmetic; never compare count ratios through floating point.
struct ColorCount {
    long long red = 0;
    long long blue = 0;

    long long total() const { return red + blue; }
    long long of(Color c) const { return c == Color::red ? red : blue; }
    long long& of(Color c) { return c == Color::red ? red : blue; }
    long long min_count() const { return red < blue ? red : blue; }
    long long max_count() const { return red > blue ? red : blue; }
    // Tie breaks to red everywhere a dominance test is needed.
    Color dominant() const { return red >= blue ? Color::red : Color::blue; }
    bool empty() const { return red == 0 && blue == 0; }

    ColorCount& operator+=(const ColorCount& o) {
        red += o.red;
        blue += o.blue;
        return *this;
    }
    ColorCount& operator-=(const ColorCount& o) {
        red -= o.red;
        blue -= o.blue;
        return *this;
    }
    friend ColorCount operator+(ColorCount a, const ColorCount& b) { return a += b; }
    friend ColorCount operator-(ColorCount a, const ColorCount& b) { return a -= b; }
    friend bool operator==(const ColorCount&, const ColorCount&) = default;
};

// Exact ratio, reduced. balance() results stay comparable without float
// thresholds at ratios like 2/3.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational reduced(long long n, long long d) {
        const long long g = std::gcd(n, d);
        return g > 0 ? Rational{n / g, d / g} : Rational{n, d};
    }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
    // Cross-multiplied exact comparison; denominators are positive.
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
};

// min(red/blue, blue/red). Empty sets count as perfectly balanced so that
// empty children and empty heavy sets pass checks uniformly.
inline Rational balance(const ColorCount& c) {
    if (c.red < 0 || c.blue < 0) throw validation_error("negative color count");
    if (c.empty()) return Rational{1, 1};
    if (c.min_count() == 0) return Rational{0, 1};
    return Rational::reduced(c.min_count(), c.max_count());
}

// Balance requirement b/r with 1 <= b <= r and gcd(r, b) = 1.
struct FairnessParams {
    long long r = 1;
    long long b = 1;
    friend bool operator==(const FairnessParams&, const FairnessParams&) = default;
};

// balance(c) >= b/r, evaluated as r*min >= b*max in integers.
inline bool is_rb_balanced(const ColorCount& c, const FairnessParams& p) {
    return p.r * c.min_count() >= p.b * c.max_count();
}

struct ParamValidation {
    FairnessParams params;
    bool swapped = false;        // inputs arrived as (b, r)
    long long gcd_divisor = 1;   // > 1 when the pair was reduced
};

// Normalizes (r, b): orders b <= r, divides out a common factor, rejects
// zeros. gcd_divisor > 1 signals a reduction the caller may want to report.
inline ParamValidation validate_params(long long r, long long b) {
    if (r < 1 || b < 1) throw validation_error("fairness parameters must be >= 1");
    ParamValidation v;
    if (b > r) {
        std::swap(r, b);
        v.swapped = true;
    }
    const long long g = std::gcd(r, b);
    if (g > 1) {
        r /= g;
        b /= g;
        v.gcd_divisor = g;
    }
    v.params = FairnessParams{r, b};
    return v;
}

// Colored pointset in R^d. Coordinates are stored flat, row-major.
struct ColoredDataset {
    int dim = 0;
    std::vector<double> coords;  // n * dim
    std::vector<Color> colors;

    std::size_t n() const { return colors.size(); }

    std::span<const double> point(std::size_t i) const {
        return {coords.data() + i * static_cast<std::size_t>(dim),
                static_cast<std::size_t>(dim)};
    }

    void push_back(std::span<const double> p, Color c) {
        if (static_cast<int>(p.size()) != dim)
            throw validation_error("point dimension mismatch");
        coords.insert(coords.end(), p.begin(), p.end());
        colors.push_back(c);
    }

    ColorCount color_count() const {
        ColorCount cc;
        for (Color c : colors) ++cc.of(c);
        return cc;
    }
};

}  // namespace fairkm
