#pragma once

// Framing calculus for cables: Seifert/torus framing conversion, Legendrian
// largeness, the consequences a large cable forces (failure of uniform
// thickness, a virtually overtwisted non-thickenable torus, contact-width
// bounds), and the Yasui family of examples.
//
// tb values are caller-supplied facts; nothing here computes a maximal
// Thurston-Bennequin number from a diagram.

#include "cabletorus/slope.hpp"

#include <optional>
#include <vector>

namespace cabletorus {

// A (p,q) cable with the tb of a chosen Legendrian representative.
template <SlopeInteger Int>
struct BasicCableRecord {
    Int p{};
    Int q{};
    Int tb{};

    friend bool operator==(const BasicCableRecord&, const BasicCableRecord&) = default;
};

using CableRecord = BasicCableRecord<BigInt>;

template <SlopeInteger Int>
bool is_trivial_cable(const BasicCableRecord<Int>& r) {
    return abs_int(r.p) == Int(1);
}

// Cable slope q/p, the curve class the cable traces on the torus.
template <SlopeInteger Int>
BasicSlope<Int> cable_slope(const BasicCableRecord<Int>& r) {
    return reduce(r.q, r.p);
}

template <SlopeInteger Int>
void validate(const BasicCableRecord<Int>& r) {
    if (r.p == Int(0)) throw std::domain_error("cable needs a nonzero longitude coefficient");
    if (!(gcd_int(r.p, r.q) == Int(1)))
        throw std::domain_error("cable coefficients must be coprime");
}

template <SlopeInteger Int>
struct BasicKnotProfile {
    Int tb_max{};
    std::vector<BasicCableRecord<Int>> cables;
};

using KnotProfile = BasicKnotProfile<BigInt>;

template <SlopeInteger Int>
void validate(const BasicKnotProfile<Int>& k) {
    for (const BasicCableRecord<Int>& r : k.cables) validate(r);
}

// Twist relative to the torus framing from the Seifert-framing tb.
template <SlopeInteger Int>
Int tw_from_tb(const Int& tb, const Int& p, const Int& q) {
    if (!(gcd_int(p, q) == Int(1))) throw std::domain_error("cable coefficients must be coprime");
    return tb - p * q;
}

template <SlopeInteger Int>
Int tb_from_tw(const Int& tw, const Int& p, const Int& q) {
    if (!(gcd_int(p, q) == Int(1))) throw std::domain_error("cable coefficients must be coprime");
    return tw + p * q;
}

// A cable is large when its tb beats the torus framing. Trivial cables
// (|p| = 1) are isotopic to the knot itself and carry no information.
template <SlopeInteger Int>
bool is_large(const BasicCableRecord<Int>& r) {
    validate(r);
    if (is_trivial_cable(r))
        throw std::domain_error("trivial cable (|p| = 1): largeness is vacuous");
    return r.tb > r.p * r.q;
}

// Image of the (p,q) torus knot class under the k-twist contactomorphism of
// the ambient solid torus.
template <SlopeInteger Int>
std::pair<Int, Int> contacto_image(const Int& p, const Int& q, const Int& k) {
    if (!(gcd_int(p, q) == Int(1))) throw std::domain_error("cable coefficients must be coprime");
    return {p, q - p * (k + Int(1))};
}

// Torus-framing twist from the geometric intersection with the dividing set
// (two dividing curves): tw = -|p q' - q p'| for L = q/p against gamma = q'/p'.
template <SlopeInteger Int>
Int twist_from_intersection(const BasicSlope<Int>& L, const BasicSlope<Int>& gamma) {
    Int det = L.den * gamma.num - L.num * gamma.den;
    return -abs_int(det);
}

template <SlopeInteger Int>
Int stabilize(const Int& tb, const Int& times) {
    if (times < Int(0)) throw std::domain_error("stabilization count must be nonnegative");
    return tb - times;
}

// Contact-width lower bound; the width always satisfies tb_max <= w <= tb_max + 1,
// so a claimed bound above tb_max + 1 is inconsistent data.
template <SlopeInteger Int>
struct BasicWidthEstimate {
    BasicSlope<Int> lower_bound;
    bool strict_above_tbmax = false;

    BasicWidthEstimate(const BasicSlope<Int>& bound, const Int& tb_max)
        : lower_bound(bound) {
        BasicSlope<Int> cap(tb_max + Int(1), Int(1));
        if (compare(bound, cap) > 0)
            throw std::domain_error("width lower bound exceeds tb_max + 1");
        strict_above_tbmax = compare(bound, BasicSlope<Int>(tb_max, Int(1))) > 0;
    }
};

using WidthEstimate = BasicWidthEstimate<BigInt>;

// Everything one large cable certifies about the underlying knot.
template <SlopeInteger Int>
struct BasicLlcReport {
    bool llc = false;
    std::vector<BasicCableRecord<Int>> witnesses;  // the large non-trivial cables
    std::optional<BasicWidthEstimate<Int>> width;  // best bound among witnesses
    bool virtually_overtwisted_torus = false;      // a non-thickenable VO torus exists
};

using LlcReport = BasicLlcReport<BigInt>;

// Width estimate contributed by one large witness: the bound is exactly the
// cable slope, strict over tb_max when the slope clears it.
template <SlopeInteger Int>
BasicWidthEstimate<Int> width_from_witness(const BasicCableRecord<Int>& r, const Int& tb_max) {
    return BasicWidthEstimate<Int>(cable_slope(r), tb_max);
}

template <SlopeInteger Int>
BasicLlcReport<Int> llc_report(const BasicKnotProfile<Int>& k) {
    validate(k);
    BasicLlcReport<Int> out;
    for (const BasicCableRecord<Int>& r : k.cables) {
        if (is_trivial_cable(r) || !is_large(r)) continue;
        out.witnesses.push_back(r);
        BasicWidthEstimate<Int> est = width_from_witness(r, k.tb_max);
        if (!out.width || compare(est.lower_bound, out.width->lower_bound) > 0)
            out.width = est;
    }
    out.llc = !out.witnesses.empty();
    out.virtually_overtwisted_torus = out.llc;
    return out;
}

template <SlopeInteger Int>
struct BasicUniformThicknessVerdict {
    bool refuted = false;
    std::optional<BasicCableRecord<Int>> witness;
    bool only_trivial_cables = false;  // no information either way
};

using UniformThicknessVerdict = BasicUniformThicknessVerdict<BigInt>;

// One-sided test: a non-trivial cable with tb > pq refutes uniform thickness;
// nothing here can confirm it.
template <SlopeInteger Int>
BasicUniformThicknessVerdict<Int> uniform_thickness_test(const BasicKnotProfile<Int>& k) {
    validate(k);
    BasicUniformThicknessVerdict<Int> out;
    bool saw_nontrivial = false;
    for (const BasicCableRecord<Int>& r : k.cables) {
        if (is_trivial_cable(r)) continue;
        saw_nontrivial = true;
        if (is_large(r) && !out.refuted) {
            out.refuted = true;
            out.witness = r;
        }
    }
    out.only_trivial_cables = !saw_nontrivial;
    return out;
}

// The knots K^m, m <= -5: tb_max = -1 and every (n,-1) cable with
// 2 <= n <= (3-m)/4 again has tb_max = -1, which beats the torus framing.
template <SlopeInteger Int>
BasicKnotProfile<Int> yasui_family(const Int& m) {
    if (!(m <= Int(-5)))
        throw std::domain_error("yasui family needs m <= -5");
    BasicKnotProfile<Int> out;
    out.tb_max = Int(-1);
    Int spread = Int(3) - m;
    Int limit = floor_div(spread, Int(4));
    for (Int n = Int(2); n <= limit; n = n + Int(1))
        out.cables.push_back({n, Int(-1), Int(-1)});
    return out;
}

}  // namespace cabletorus
