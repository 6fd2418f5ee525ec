// Degree-<=2 bookkeeping ring on the universal Prym curve over the space of
// degree-8 nets, and the two pushforwards that turn Chern-character
// integrands into divisor classes on the moduli space.
//
// Fiber side: a truncated graded-commutative ring on six generators
//   l = c1(L)        degree 1   (universal line bundle)
//   p = c1(P)        degree 1   (universal 2-torsion bundle)
//   w = c1(omega_f)  degree 1   (relative dualizing sheaf)
//   V = f^* c1(V)    degree 1   (pulled-back rank-3 direct image)
//   C2V = f^* c2(V)  degree 2
//   S = [Sing(f)]    degree 2   (locus of fiber nodes)
// with every monomial of total degree > 2 identically zero. The generator
// set is closed: there is no way to introduce further symbols.
//
// Base side: rational linear combinations of seven symbols
//   lambda, a = f_*(l^2), b = f_*(l w), v = c1(V),
//   sd0p, sd0pp, sdram  (pullbacks of the three boundary classes).
//
// push(expr) applies the fixed degree-2 rule table along the curve
// fibration; pushforward_to_moduli() then sends base symbols to divisor
// classes on the genus-9 Prym moduli space, multiplying pulled-back classes
// by the degree (42) of the series map.
#pragma once

#include <prym/divisor_algebra.hpp>
#include <prym/rational.hpp>

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace prym::taut {

enum class FiberGen : int { L = 0, P = 1, W = 2, V = 3, C2V = 4, Sing = 5 };

constexpr int kFiberGenCount = 6;

constexpr int fiber_gen_degree(FiberGen g) {
    return (g == FiberGen::C2V || g == FiberGen::Sing) ? 2 : 1;
}

const char* fiber_gen_name(FiberGen g);

// Exponent vector over the six generators; total weighted degree <= 2.
using FiberMono = std::array<std::uint8_t, kFiberGenCount>;

int mono_degree(const FiberMono& m);
std::string mono_to_string(const FiberMono& m);

class FiberClass {
public:
    FiberClass() = default;

    static FiberClass zero() { return {}; }
    static FiberClass one();
    static FiberClass gen(FiberGen g);

    bool is_zero() const { return terms_.empty(); }
    // -1 for the zero element.
    int max_degree() const;
    bool is_homogeneous(int degree) const;
    Rat coeff(const FiberMono& m) const;
    const std::map<FiberMono, Rat>& terms() const { return terms_; }

    FiberClass& operator+=(const FiberClass& other);
    FiberClass& operator-=(const FiberClass& other);
    FiberClass& operator*=(const Rat& scalar);
    friend FiberClass operator+(FiberClass a, const FiberClass& b) { return a += b; }
    friend FiberClass operator-(FiberClass a, const FiberClass& b) { return a -= b; }
    friend FiberClass operator*(const Rat& s, FiberClass a) { return a *= s; }
    // Product with truncation: monomials of degree > 2 vanish.
    friend FiberClass operator*(const FiberClass& a, const FiberClass& b);
    friend bool operator==(const FiberClass& a, const FiberClass& b) {
        return a.terms_ == b.terms_;
    }

    // Deterministic ordering: higher-degree monomials first, generators in
    // the order l < p < w < V < C2V < S.
    std::string to_string() const;

private:
    void add_term(const FiberMono& m, const Rat& c);
    std::map<FiberMono, Rat> terms_;
};

enum class BaseSym : int {
    Lambda = 0,
    TautA = 1,
    TautB = 2,
    V = 3,
    SDelta0p = 4,
    SDelta0pp = 5,
    SDeltaRam = 6,
};

constexpr int kBaseSymCount = 7;

const char* base_sym_name(BaseSym s);

// Purely linear: no products of base symbols occur anywhere.
class BaseClass {
public:
    BaseClass();

    static BaseClass zero() { return {}; }
    static BaseClass sym(BaseSym s);

    Rat coeff(BaseSym s) const;
    void set_coeff(BaseSym s, Rat value);
    bool is_zero() const;

    BaseClass& operator+=(const BaseClass& other);
    BaseClass& operator-=(const BaseClass& other);
    BaseClass& operator*=(const Rat& scalar);
    friend BaseClass operator+(BaseClass a, const BaseClass& b) { return a += b; }
    friend BaseClass operator-(BaseClass a, const BaseClass& b) { return a -= b; }
    friend BaseClass operator*(const Rat& s, BaseClass a) { return a *= s; }
    friend bool operator==(const BaseClass& a, const BaseClass& b);

    std::string to_string() const;

private:
    std::array<Rat, kBaseSymCount> c_;
};

// The degree-2 pushforward rule table along the universal curve. standard()
// carries the rules
//   l^2 -> a,  l w -> b,  w^2 -> 12 lambda - (sd0p + sd0pp + 2 sdram),
//   p^2 -> -1/2 sdram,  w p -> 0,  l p -> 0,  V p -> 0,
//   w V -> 16 v,  l V -> 8 v,  V^2 -> 0,  C2V -> 0,
//   S -> sd0p + sd0pp + 2 sdram.
// Rules are replaceable one at a time for sensitivity checks.
class FiberPushforward {
public:
    static FiberPushforward standard();

    void set_rule(const FiberMono& mono, BaseClass image);
    const std::map<FiberMono, BaseClass>& rules() const { return rules_; }

    // Linear extension of the table. The input must be homogeneous of
    // degree 2 (the zero element is accepted); anything else is a contract
    // error, as is a degree-2 monomial without a rule.
    BaseClass push(const FiberClass& expr) const;

    nlohmann::ordered_json rules_json() const;

private:
    std::map<FiberMono, BaseClass> rules_;
};

// Convenience monomial builders.
FiberMono mono(FiberGen g);
FiberMono mono(FiberGen g1, FiberGen g2);

// Ranks of the two sides of the degeneracy morphism; both are 24.
int rank_source_bundle();
int rank_target_bundle();

// c1 of the rank-8 bundle R^1 f_* P: -lambda + 1/4 sdram.
BaseClass c1_r1_prym();

// c1 of the source bundle R^1 f_*(M (x) P), computed by the degree-2
// Riemann-Roch template for the rank-2 syzygy bundle M twisted by P:
//   -c1 = push[ ch_2(M(x)P) - 1/2 c1(M(x)P) w + 1/6 (w^2 + S) ]
// with c1(M) = V - l and c2(M) = C2V + l^2 - V l.
// Result: -2 lambda - b/2 + a/2 + 8 v + 1/2 sdram.
BaseClass c1_source_bundle(const FiberPushforward& rules = FiberPushforward::standard());

// c1 of the target bundle V (x) R^1 f_* P = 8 v + 3 * c1(R^1 f_* P).
BaseClass c1_target_bundle(const BaseClass& c1_r1p = c1_r1_prym());

// Class of the degeneracy locus of the morphism between the two rank-24
// bundles: c1(target) - c1(source) = -lambda - a/2 + b/2 + 1/4 sdram.
BaseClass degeneracy_locus_class(
    const FiberPushforward& rules = FiberPushforward::standard());

// Pushforward along the generically finite series map to the genus-9 Prym
// moduli space:
//   a -> -564 lambda + 83 (delta_0' + delta_0'' + 2 delta_0^ram)
//   b ->  252 lambda - 21 (delta_0' + delta_0'' + 2 delta_0^ram)
//   lambda -> degree * lambda,  sd* -> degree * delta_*.
// There is no pushforward formula for v: a nonzero v-coefficient is an
// unsupported-symbol error. The result lives on the partial
// compactification and is flagged modulo_higher_boundary.
DivisorClass pushforward_to_moduli(const BaseClass& expr, long degree = 42);

}  // namespace prym::taut
