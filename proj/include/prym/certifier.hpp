// The pseudo-effectivity certifier. Encodes the moving-curve constraints on
// a putative effective divisor D' = a*lambda - b0'*delta_0' - b0''*delta_0''
// - b0ram*delta_0^ram - ... as an exact rational LP, minimizes R.D' over the
// constraint cone, and assembles the contradiction chain showing that the
// canonical class cannot be pseudo-effective (hence the moduli space is
// uniruled, modulo the recorded geometric axioms).
#pragma once

#include <prym/divisor_algebra.hpp>
#include <prym/exact_lp.hpp>

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace prym::certifier {

// Variables (a, b0p, b0pp, b0ram, b1); constraints
//   nikulin_disjoint :  Xi_9 . D' = 0        (10a - 56 b0p - 8 b0ram = 0)
//   k3_sweep         :  A . D' >= 0
//   delta0pp_sweep   :  (2g-2) b0pp - b1 >= 0
//   delta1_ruling    :  b1 >= 0
//   lambda_nef       :  a >= 0
// objective: minimize R . D' (b0pp has coefficient 0 since R.delta_0'' = 0).
// Only genus 9 is supported.
lp::ExactLP build_constraints(int genus = 9);

// Same system with the sweeping-pencil vector replaced (used for negative
// controls; only the objective depends on R).
lp::ExactLP build_constraints_with_curve(const CurveClass& sweeping_pencil, int genus = 9);

struct DerivationStep {
    std::string id;
    std::string statement;
    std::string value;
    bool ok;
};

struct Axiom {
    std::string id;
    std::string statement;
};

struct CertifierReport {
    std::vector<DerivationStep> steps;
    std::vector<Axiom> axioms;
    bool contradiction_established;
    std::string conclusion;
    lp::ExactLP lp;
    lp::LpSolution lp_solution;
    std::string lp_certificate_digest;

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

// Runs the full chain with the genuine sweeping-pencil vector.
CertifierReport certify_not_pseudoeffective();

// Runs the chain with a supplied (possibly perturbed) pencil vector.
CertifierReport certify_with_curve(const CurveClass& sweeping_pencil);

// FNV-1a 64-bit digest of a canonical JSON dump, as a hex string.
std::string json_digest(const nlohmann::ordered_json& j);

}  // namespace prym::certifier
