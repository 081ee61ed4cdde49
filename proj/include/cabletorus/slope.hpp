#pragma once

// Exact slope arithmetic on the Farey tessellation.
//
// A slope is a reduced rational q/p stored as (num, den) = (q, p), together
// with the single point at infinity (1, 0). Canonical form: gcd(|q|,|p|) = 1,
// p >= 0, and (-1,0) normalizes to (1,0) since -inf and inf are the same
// vertex of the tessellation. Two slopes span an edge when |q p' - p q'| = 1.
//
// The circular order used throughout is the clockwise order of the Farey
// circle: increasing through the finite rationals, then infinity, then back
// from below (0 -> 1 -> inf -> -3 -> -2 -> -1 -> 0). operator< and compare()
// expose the underlying linear order with infinity as the maximum.
//
// Everything here is exact integer arithmetic; the default integer type is
// arbitrary precision. Heavy enumeration loops can instantiate the templates
// with a fixed-width type instead.

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace cabletorus {

using BigInt = boost::multiprecision::cpp_int;

template <class T>
concept SlopeInteger =
    !std::same_as<T, bool> && !std::floating_point<T> &&
    requires(T a, T b) {
        T{0};
        T{1};
        { a + b } -> std::convertible_to<T>;
        { a - b } -> std::convertible_to<T>;
        { a * b } -> std::convertible_to<T>;
        { a / b } -> std::convertible_to<T>;
        { a % b } -> std::convertible_to<T>;
        { -a } -> std::convertible_to<T>;
        { a < b } -> std::convertible_to<bool>;
        { a == b } -> std::convertible_to<bool>;
    };

template <SlopeInteger Int>
Int abs_int(const Int& v) {
    return v < Int(0) ? Int(-v) : v;
}

template <SlopeInteger Int>
Int gcd_int(const Int& a, const Int& b) {
    if constexpr (std::integral<Int>) {
        return std::gcd(a, b);
    } else {
        Int x = abs_int(a), y = abs_int(b);
        while (!(y == Int(0))) {
            Int r = x % y;
            x = std::move(y);
            y = std::move(r);
        }
        return x;
    }
}

// Floor division, rounding toward minus infinity.
template <SlopeInteger Int>
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (!(a % b == Int(0)) && ((a < Int(0)) != (b < Int(0)))) q = q - Int(1);
    return q;
}

// Extended Euclid: a*u + b*v = g = gcd(a,b) >= 0.
template <SlopeInteger Int>
struct ExtGcd {
    Int g, u, v;
};

template <SlopeInteger Int>
ExtGcd<Int> ext_gcd(Int a, Int b) {
    Int old_r = std::move(a), r = std::move(b);
    Int old_u{1}, u{0};
    Int old_v{0}, v{1};
    while (!(r == Int(0))) {
        Int q = old_r / r;
        Int t = old_r - q * r;
        old_r = std::move(r);
        r = std::move(t);
        t = old_u - q * u;
        old_u = std::move(u);
        u = std::move(t);
        t = old_v - q * v;
        old_v = std::move(v);
        v = std::move(t);
    }
    if (old_r < Int(0)) {
        old_r = -old_r;
        old_u = -old_u;
        old_v = -old_v;
    }
    return {std::move(old_r), std::move(old_u), std::move(old_v)};
}

template <SlopeInteger Int>
struct BasicSlope {
    Int num{0};
    Int den{1};

    BasicSlope() = default;

    BasicSlope(Int q, Int p) : num(std::move(q)), den(std::move(p)) {
        if (num == Int(0) && den == Int(0))
            throw std::domain_error("slope 0/0 is undefined");
        if (den == Int(0)) {
            num = Int(1);  // -inf and inf are the same Farey vertex
            return;
        }
        if (den < Int(0)) {
            num = -num;
            den = -den;
        }
        Int g = gcd_int(num, den);
        if (Int(1) < g) {
            num = num / g;
            den = den / g;
        }
    }

    static BasicSlope infinity() { return BasicSlope(Int(1), Int(0)); }
    static BasicSlope zero() { return BasicSlope(); }

    bool is_infinite() const { return den == Int(0); }

    friend bool operator==(const BasicSlope& a, const BasicSlope& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const BasicSlope& a, const BasicSlope& b) { return !(a == b); }
};

using Slope = BasicSlope<BigInt>;

// Canonical reduced representative; reduce(a,b) = reduce(-a,-b).
template <SlopeInteger Int>
BasicSlope<Int> reduce(Int a, Int b) {
    return BasicSlope<Int>(std::move(a), std::move(b));
}

template <SlopeInteger Int>
Int slope_det(const BasicSlope<Int>& s, const BasicSlope<Int>& t) {
    return s.num * t.den - s.den * t.num;
}

// Farey neighbors: the two slopes form an integral basis of Z^2.
template <SlopeInteger Int>
bool is_edge(const BasicSlope<Int>& s, const BasicSlope<Int>& t) {
    return abs_int(slope_det(s, t)) == Int(1);
}

// Linear order with infinity as the maximum: -1/0/1.
template <SlopeInteger Int>
int compare(const BasicSlope<Int>& s, const BasicSlope<Int>& t) {
    if (s == t) return 0;
    if (s.is_infinite()) return 1;
    if (t.is_infinite()) return -1;
    Int lhs = s.num * t.den;
    Int rhs = t.num * s.den;
    if (lhs < rhs) return -1;
    if (rhs < lhs) return 1;
    return 0;
}

template <SlopeInteger Int>
bool operator<(const BasicSlope<Int>& s, const BasicSlope<Int>& t) {
    return compare(s, t) < 0;
}

enum class Closure { open, left_closed, right_closed, closed };

// Membership of x in the clockwise arc from a to b. Clockwise means
// increasing in the linear order, wrapping past infinity.
template <SlopeInteger Int>
bool in_clockwise_interval(const BasicSlope<Int>& x, const BasicSlope<Int>& a,
                           const BasicSlope<Int>& b, Closure c = Closure::open) {
    if (a == b) throw std::domain_error("clockwise interval endpoints must be distinct");
    if (x == a) return c == Closure::left_closed || c == Closure::closed;
    if (x == b) return c == Closure::right_closed || c == Closure::closed;
    if (compare(a, b) < 0) return compare(a, x) < 0 && compare(x, b) < 0;
    return compare(a, x) < 0 || compare(x, b) < 0;
}

// The shear q/p -> (q + k p)/p fixes infinity and is an automorphism of the
// tessellation (it preserves edges and mediants).
template <SlopeInteger Int>
BasicSlope<Int> shear(const BasicSlope<Int>& s, const Int& k) {
    return BasicSlope<Int>(s.num + k * s.den, s.den);
}

// Farey addition. For neighbors the representative matters: of the candidates
// (q+q')/(p+p') and (q-q')/(p-p') exactly one lies on the clockwise arc from
// s to t, and that one is the third vertex of the triangle on that side.
template <SlopeInteger Int>
BasicSlope<Int> mediant(const BasicSlope<Int>& s, const BasicSlope<Int>& t) {
    if (s == t) throw std::domain_error("mediant requires distinct slopes");
    BasicSlope<Int> sum(s.num + t.num, s.den + t.den);
    if (!is_edge(s, t)) return sum;
    if (in_clockwise_interval(sum, s, t, Closure::open)) return sum;
    BasicSlope<Int> diff(s.num - t.num, s.den - t.den);
    if (in_clockwise_interval(diff, s, t, Closure::open)) return diff;
    throw std::logic_error("mediant: no representative on the clockwise arc");
}

// Clockwise-farthest Farey neighbor of x within the clockwise interval from x
// to bound: half-open (x, bound] when include_bound, open (x, bound) if not.
//
// Computed exactly: a det-1 map M sends x to infinity, whose neighbors are the
// integers; the farthest one inside the image interval is a floor; pull back.
template <SlopeInteger Int>
BasicSlope<Int> farthest_neighbor_within(const BasicSlope<Int>& x,
                                         const BasicSlope<Int>& bound,
                                         bool include_bound) {
    if (x == bound)
        throw std::domain_error("farthest_neighbor_within requires distinct slopes");
    ExtGcd<Int> e = ext_gcd(x.num, x.den);
    if (!(e.g == Int(1))) throw std::logic_error("farthest_neighbor_within: slope not reduced");
    // M = [s -r; -p q] with q s - p r = 1, so M (q, p) = (1, 0).
    Int s = e.u, r = -e.v;
    Int u = s * bound.num - r * bound.den;
    Int v = x.num * bound.den - x.den * bound.num;
    if (v < Int(0)) {
        u = -u;
        v = -v;
    }
    Int f = floor_div(u, v);
    if (!include_bound && u == f * v) f = f - Int(1);
    // M^{-1} = [q r; p s]
    return BasicSlope<Int>(x.num * f + r, x.den * f + s);
}

template <SlopeInteger Int>
std::string to_string(const BasicSlope<Int>& s) {
    if (s.is_infinite()) return "inf";
    std::ostringstream os;
    os << s.num;
    if (!(s.den == Int(1))) os << '/' << s.den;
    return os.str();
}

template <SlopeInteger Int>
std::ostream& operator<<(std::ostream& os, const BasicSlope<Int>& s) {
    return os << to_string(s);
}

namespace detail {

template <SlopeInteger Int>
Int parse_integer(std::string_view text, std::string_view whole) {
    bool negative = false;
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size())
        throw std::domain_error("malformed slope \"" + std::string(whole) + "\"");
    Int value{0};
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || '9' < c)
            throw std::domain_error("malformed slope \"" + std::string(whole) + "\"");
        value = value * Int(10) + Int(c - '0');
    }
    return negative ? Int(-value) : value;
}

}  // namespace detail

// Accepts "q/p", integer shorthand ("-2" means -2/1), "inf" and "-inf".
template <SlopeInteger Int = BigInt>
BasicSlope<Int> parse_slope(std::string_view text) {
    if (text == "inf" || text == "-inf" || text == "+inf") return BasicSlope<Int>::infinity();
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos)
        return BasicSlope<Int>(detail::parse_integer<Int>(text, text), Int(1));
    Int q = detail::parse_integer<Int>(text.substr(0, slash), text);
    Int p = detail::parse_integer<Int>(text.substr(slash + 1), text);
    if (p == Int(0) && !(q == Int(0)))
        return BasicSlope<Int>::infinity();
    return BasicSlope<Int>(std::move(q), std::move(p));
}

// Convex-boundary torus data: dividing-set slope and number of components.
template <SlopeInteger Int>
struct BasicTorusBoundary {
    BasicSlope<Int> dividing_slope;
    int num_dividing_curves = 2;
};

using TorusBoundary = BasicTorusBoundary<BigInt>;

template <SlopeInteger Int>
void validate(const BasicTorusBoundary<Int>& g) {
    if (g.num_dividing_curves < 2 || g.num_dividing_curves % 2 != 0)
        throw std::domain_error("number of dividing curves must be even and at least 2");
}

}  // namespace cabletorus
