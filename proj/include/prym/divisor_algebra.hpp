// Divisor and curve classes on the moduli space of stable Prym curves of
// genus g, over exact rationals.
//
// The Picard group is used through its standard free basis: the Hodge class
// lambda, the three genus-0 boundary classes delta_0', delta_0'', delta_0^ram
// and, for 1 <= i <= floor(g/2), the higher boundary triple delta_i,
// delta_{g-i}, delta_{i:g-i}. Divisor classes hold a coefficient per basis
// label, curve classes hold an intersection number per basis label, and
// pair() evaluates the intersection pairing coordinatewise.
#pragma once

#include <prym/rational.hpp>

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <vector>

namespace prym {

// Canonical ordered label set for Pic of the genus-g Prym moduli space.
//
// ASCII label spellings: "lambda", "delta_0'", "delta_0''", "delta_0^ram",
// then "delta_1", "delta_{g-1}" (spelled with the number, e.g. "delta_8"),
// "delta_1:8", ... For even g the middle triple would repeat the name
// delta_{g/2}; the duplicate is emitted once, so the label list is unique.
class PrymBasis {
public:
    explicit PrymBasis(int genus);

    int genus() const { return genus_; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool has_label(const std::string& label) const;

    // The four classes supported on the partial compactification over the
    // locus of irreducible curves.
    static const std::vector<std::string>& core_labels();
    static bool is_core_label(const std::string& label);

    // Unicode rendering for human-facing output (lambda -> U+03BB etc.).
    static std::string display_label(const std::string& label);

    friend bool operator==(const PrymBasis& a, const PrymBasis& b) {
        return a.genus_ == b.genus_;
    }

private:
    int genus_;
    std::vector<std::string> labels_;
};

// A divisor class written in the PrymBasis coordinates. Absent labels mean
// coefficient zero; coefficients may be non-integral.
class DivisorClass {
public:
    explicit DivisorClass(PrymBasis basis);

    const PrymBasis& basis() const { return basis_; }
    Rat coeff(const std::string& label) const;
    void set_coeff(const std::string& label, Rat value);
    void add_coeff(const std::string& label, const Rat& value);
    bool is_zero() const;

    // True when the class is only known modulo the higher boundary classes
    // delta_i (i >= 1), i.e. it lives on the partial compactification and
    // the delta_i coefficients written here are placeholders.
    bool modulo_higher_boundary() const { return modulo_higher_boundary_; }
    void set_modulo_higher_boundary(bool v) { modulo_higher_boundary_ = v; }

    DivisorClass& operator+=(const DivisorClass& other);
    DivisorClass& operator-=(const DivisorClass& other);
    DivisorClass& operator*=(const Rat& scalar);
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rat& s, DivisorClass a) { return a *= s; }
    friend bool operator==(const DivisorClass& a, const DivisorClass& b);

    std::string to_string(bool display_names = false) const;

    // {"genus": g, "coeffs": {label: "p/q", ...}}; every basis label is
    // emitted, including zeros, in basis order.
    nlohmann::ordered_json to_json() const;
    static DivisorClass from_json(const nlohmann::json& j);

private:
    PrymBasis basis_;
    std::map<std::string, Rat> coeffs_;
    bool modulo_higher_boundary_ = false;
};

// The intersection vector of a one-parameter family of Prym curves against
// the basis classes.
class CurveClass {
public:
    explicit CurveClass(PrymBasis basis);

    const PrymBasis& basis() const { return basis_; }
    Rat pairing(const std::string& label) const;
    void set_pairing(const std::string& label, Rat value);
    bool is_zero() const;

    // True if some pairing outside the four core labels is nonzero.
    bool touches_higher_boundary() const;

    std::string to_string(bool display_names = false) const;
    nlohmann::ordered_json to_json() const;
    static CurveClass from_json(const nlohmann::json& j);

private:
    PrymBasis basis_;
    std::map<std::string, Rat> pairings_;
};

struct PairingResult {
    Rat value;
    // Set when the divisor is only known modulo higher boundary and the
    // curve meets that boundary: the computed value misses unknown terms.
    bool outside_known_support = false;
};

// Intersection number sum_label curve[label] * divisor[label]. Throws on a
// basis (genus) mismatch.
PairingResult pair_checked(const CurveClass& curve, const DivisorClass& divisor);
Rat pair(const CurveClass& curve, const DivisorClass& divisor);

// Canonical class: 13*lambda - 2(delta_0' + delta_0'') - 3*delta_0^ram
// - 3(delta_1 + delta_{g-1} + delta_{1:g-1})
// - 2*sum_{i=2..floor(g/2)} (delta_i + delta_{g-i} + delta_{i:g-i}).
// Each distinct label of a triple is assigned once.
DivisorClass canonical_class(int genus);

// Pullback along the forgetful (branched double cover) map to the moduli of
// curves: lambda -> lambda, delta_0 -> delta_0' + delta_0'' + 2*delta_0^ram,
// delta_i -> delta_i + delta_{g-i} + delta_{i:g-i}, extended linearly.
// Input keys: "lambda", "delta_0", "delta_i" with 1 <= i <= floor(g/2);
// anything else is an input error.
DivisorClass pullback_from_mg(int genus, const std::map<std::string, Rat>& mg_class);

// The genus-9 Brill-Noether divisor class on the partial compactification:
// 366*lambda - 52*delta_0' - (52+alpha)*delta_0'' - 187/2*delta_0^ram,
// alpha >= 0. The higher-boundary coefficients are unknown; the result is
// flagged modulo_higher_boundary.
DivisorClass brill_noether_class(const Rat& alpha = Rat(0));

}  // namespace prym
