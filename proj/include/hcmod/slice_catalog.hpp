#pragma once

// Catalog of the five four-dimensional transverse slice singularities that
// appear at codimension-4 boundary strata, together with the quantizability
// decision table for the a2 slice under its outer symmetry.  The catalog
// entries record conclusions; they are lookup data, not derivations.

#include <string>
#include <vector>

#include "hcmod/cyclotomic.hpp"
#include "hcmod/rational.hpp"

namespace hcmod {

enum class SliceKind { a2, c2, c4_mod_z3, a2_mod_s2, chi };

[[nodiscard]] inline std::string to_string(SliceKind k) {
    switch (k) {
        case SliceKind::a2: return "a2";
        case SliceKind::c2: return "c2";
        case SliceKind::c4_mod_z3: return "c4_mod_z3";
        case SliceKind::a2_mod_s2: return "a2_mod_s2";
        case SliceKind::chi: return "chi";
    }
    throw internal_error("unhandled slice kind");
}

[[nodiscard]] inline SliceKind parse_slice_kind(const std::string& s) {
    if (s == "a2") return SliceKind::a2;
    if (s == "c2") return SliceKind::c2;
    if (s == "c4_mod_z3") return SliceKind::c4_mod_z3;
    if (s == "a2_mod_s2") return SliceKind::a2_mod_s2;
    if (s == "chi") return SliceKind::chi;
    throw invalid_input("unknown slice kind '" + s + "'");
}

struct SliceSingularity {
    SliceKind kind;
    std::string description;
};

// The fixed five-entry list, in its canonical order.
[[nodiscard]] inline const std::vector<SliceSingularity>& slice_catalog() {
    static const std::vector<SliceSingularity> entries = {
        {SliceKind::a2, "closure of the minimal nilpotent orbit in sl(3)"},
        {SliceKind::c2, "C^4/{+-1}"},
        {SliceKind::c4_mod_z3, "C^4/Z3, the cyclic quotient of order three"},
        {SliceKind::a2_mod_s2, "the a2 singularity modulo its order-two outer symmetry"},
        {SliceKind::chi, "the order-five cyclic cover singularity"},
    };
    return entries;
}

enum class InvolutionClass { inner, outer, any };

[[nodiscard]] inline std::string to_string(InvolutionClass c) {
    switch (c) {
        case InvolutionClass::inner: return "inner";
        case InvolutionClass::outer: return "outer";
        case InvolutionClass::any: return "any";
    }
    throw internal_error("unhandled involution class");
}

// Whether every irreducible equivariant local system on the slice quantizes
// regardless of the parameter.  Some slices have an unconditional answer;
// the others carry a qualified one, recorded as text.
struct UnobstructiveVerdict {
    enum class Status { yes, no, conditional, special };
    Status status;
    std::string detail;
};

[[nodiscard]] inline std::string to_string(UnobstructiveVerdict::Status s) {
    switch (s) {
        case UnobstructiveVerdict::Status::yes: return "yes";
        case UnobstructiveVerdict::Status::no: return "no";
        case UnobstructiveVerdict::Status::conditional: return "conditional";
        case UnobstructiveVerdict::Status::special: return "special";
    }
    throw internal_error("unhandled unobstructive status");
}

[[nodiscard]] inline UnobstructiveVerdict unobstructive(SliceKind kind, InvolutionClass cls) {
    using Status = UnobstructiveVerdict::Status;
    switch (kind) {
        case SliceKind::a2:
            if (cls == InvolutionClass::inner)
                return {Status::yes, "inner symmetry: every local system quantizes"};
            if (cls == InvolutionClass::outer)
                return {Status::no, "outer symmetry: one genuine local system fails to quantize"};
            return {Status::conditional, "yes for the inner symmetry, no for the outer one"};
        case SliceKind::c2:
            return {Status::yes, "every local system quantizes for either symmetry class"};
        case SliceKind::c4_mod_z3:
            return {Status::yes, "every local system quantizes for any graded anti-symmetry"};
        case SliceKind::a2_mod_s2:
            return {Status::conditional,
                    "torus-equivariant systems quantize strongly; the non-equivariant systems on "
                    "the outer component are unstated"};
        case SliceKind::chi:
            return {Status::special, "resolved by external computation"};
    }
    throw invalid_input("unknown slice kind");
}

enum class QuantizabilityLevel { not_quantizable, quantizable, strongly_quantizable };

[[nodiscard]] inline std::string to_string(QuantizabilityLevel lvl) {
    switch (lvl) {
        case QuantizabilityLevel::not_quantizable: return "not_quantizable";
        case QuantizabilityLevel::quantizable: return "quantizable";
        case QuantizabilityLevel::strongly_quantizable: return "strongly_quantizable";
    }
    throw internal_error("unhandled quantizability level");
}

struct QuantizabilityVerdict {
    QuantizabilityLevel level;
    std::string rule;

    [[nodiscard]] bool quantizable() const { return level != QuantizabilityLevel::not_quantizable; }
};

// The decision table speaks in period parameters p; the differential-operator
// twist on the slice is p + 3/2.
[[nodiscard]] inline Rational twist_of_period(const Rational& p) { return p + Rational(3, 2); }

// For an integer period p, the fourth root of unity i^(2p-1): -i at even p,
// +i at odd p.  A local system whose monodromy scalar equals it does not
// quantize at that period.
[[nodiscard]] inline UnitScalar excluded_scalar(const Rational& p) {
    if (!p.is_integer()) throw internal_error("excluded scalar queried at a non-integer period");
    return p.is_even_integer() ? UnitScalar::minus_i : UnitScalar::i;
}

// Full decision table for the a2 slice under its outer symmetry.  The scalar
// is the monodromy of the order-four generator: +-1 for equivariant systems,
// +-i for the two genuine ones.
[[nodiscard]] inline QuantizabilityVerdict a2_outer_verdict(const Rational& p, UnitScalar scalar) {
    switch (scalar) {
        case UnitScalar::one:
        case UnitScalar::minus_one:
            return {QuantizabilityLevel::strongly_quantizable,
                    "equivariant monodromy quantizes strongly at every period"};
        case UnitScalar::i:
        case UnitScalar::minus_i: {
            if (!p.is_integer())
                return {QuantizabilityLevel::not_quantizable,
                        "genuine monodromy requires an integer period"};
            if (scalar == excluded_scalar(p))
                return {QuantizabilityLevel::not_quantizable,
                        "the scalar i^(2p-1) is excluded at integer period p"};
            if (p == Rational(-1) || p == Rational(0) || p == Rational(1))
                return {QuantizabilityLevel::strongly_quantizable,
                        "admitted genuine monodromy; period inside the strong window {-1,0,1}"};
            return {QuantizabilityLevel::quantizable,
                    "admitted genuine monodromy; period outside the strong window {-1,0,1}"};
        }
        case UnitScalar::other: break;
    }
    throw invalid_input("the scalar must be one of 1, -1, i, -i");
}

} // namespace hcmod
