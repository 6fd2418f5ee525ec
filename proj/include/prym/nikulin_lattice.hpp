// Integral-lattice and Mukai-vector arithmetic for polarized Nikulin
// surfaces: the rank-9 Picard lattice Z[C] + N with its half-integral
// generator e = (N_1 + ... + N_8)/2, the Mukai pairing, and the exact
// slope arithmetic that forces the destabilizing subsheaf data.
#pragma once

#include <prym/rational.hpp>

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace prym::lattice {

using LatticeVec = std::vector<Rat>;

struct IntegralLattice {
    std::vector<std::string> basis_labels;
    std::vector<std::vector<Rat>> gram;  // symmetric

    int rank() const { return static_cast<int>(basis_labels.size()); }
    Rat inner(const LatticeVec& x, const LatticeVec& y) const;

    nlohmann::ordered_json gram_json() const;
    static IntegralLattice from_gram_json(const nlohmann::json& j);

    friend bool operator==(const IntegralLattice& a, const IntegralLattice& b) {
        return a.basis_labels == b.basis_labels && a.gram == b.gram;
    }
};

// Picard lattice of a general polarized Nikulin surface of genus g, in the
// coordinates (C, N_1, ..., N_8): C^2 = 2g-2, C.N_i = 0, N_i.N_j = -2 d_ij.
// The vector e = (sum N_i)/2 is a genuine lattice element of the extension;
// vectors are carried over the rationals with an explicit integrality test.
class NikulinPicard {
public:
    explicit NikulinPicard(int genus);

    int genus() const { return genus_; }
    const IntegralLattice& lattice() const { return lattice_; }

    LatticeVec polarization() const;    // C
    LatticeVec nodal_class(int i) const;  // N_i, 1 <= i <= 8
    LatticeVec half_nodal_sum() const;  // e

    // Coordinates in the basis (C, e, N_1, ..., N_7); N_8 = 2e - N_1 - ... - N_7.
    LatticeVec to_extended_coordinates(const LatticeVec& v) const;
    // Membership in Z[C] + N (integrality in the extended coordinates).
    bool contains(const LatticeVec& v) const;

private:
    int genus_;
    IntegralLattice lattice_;
};

NikulinPicard nikulin_picard(int genus);

struct MukaiVector {
    IntegralLattice lattice;
    long rank;              // v_0
    LatticeVec c1;          // v_1
    long chi_minus_rank;    // v_2
};

// <v1, w1> - v2*w0 - v0*w2. Throws when the two vectors live on different
// lattices.
Rat mukai_pairing(const MukaiVector& v, const MukaiVector& w);

// <c1, polarization> / rank; rank must be positive.
Rat slope(const IntegralLattice& lattice, const LatticeVec& c1, long rank,
          const LatticeVec& polarization);

struct StabilityCandidate {
    int rank;  // rank of the destabilizing subsheaf, 1..3
    int a;     // coefficient of C in its first Chern class
    Rat slope;
    bool slope_admissible;       // slope >= mu(E)
    bool semistability_ok;       // r >= 3a
    std::string excluded_by;     // empty when the candidate survives
};

// Exact-arithmetic skeleton of the destabilization argument for the rank-4
// bundle E with v(E) = (4, C + e, 2) on a genus-9 Nikulin surface; every
// step is an inequality over rationals, with the sheaf-theoretic inputs
// recorded as named hypotheses rather than verified.
struct StabilityReport {
    Rat c_squared;
    Rat mukai_square;        // v(E)^2
    bool stability_excluded; // mukai_square < -2
    Rat mu_e;                // slope of E
    std::vector<StabilityCandidate> candidates;
    std::vector<std::pair<int, int>> forced;  // surviving (rank, a) pairs
    std::vector<std::string> steps;
    std::vector<std::string> hypotheses;

    nlohmann::ordered_json to_json() const;
};

// The genus-9 report (C^2 = 16). Other genera are an input error.
StabilityReport stability_obstruction_report(int genus);

// Same chain with the polarization square as a free parameter, for
// sensitivity checks.
StabilityReport destabilization_chain(const Rat& c_squared);

}  // namespace prym::lattice
