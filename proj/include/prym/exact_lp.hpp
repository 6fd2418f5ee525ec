// Exact rational linear programming with machine-checkable certificates.
//
// Solves  minimize c.x  subject to rows  a_i.x {=, >=, <=} b_i  over free
// variables x, entirely in rational arithmetic (two-phase primal simplex,
// Bland's least-index anti-cycling rule, free variables split into
// differences of nonnegative parts). Every outcome carries an exact
// certificate:
//   optimal    -> primal point, one dual multiplier per constraint, and
//                 strong duality c.x = sum_i y_i b_i;
//   unbounded  -> a feasible point plus a ray d with A d respecting every
//                 row relation homogeneously and c.d < 0;
//   infeasible -> Farkas multipliers y with sum_i y_i a_i = 0,
//                 sum_i y_i b_i > 0 and row-compatible signs.
// verify_* re-checks certificates from scratch with zero tolerance.
#pragma once

#include <prym/rational.hpp>

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace prym::lp {

enum class Relation { Eq, Ge, Le };

const char* relation_symbol(Relation r);

struct Constraint {
    std::string name;
    std::vector<Rat> coeffs;  // one per variable
    Relation rel;
    Rat rhs;
};

struct ExactLP {
    std::vector<std::string> vars;
    std::vector<Rat> objective;  // minimized
    std::vector<Constraint> constraints;

    int var_index(const std::string& name) const;  // -1 when absent
    void validate() const;                         // shape and name checks
    Rat objective_value(const std::vector<Rat>& x) const;
    Rat row_value(const Constraint& c, const std::vector<Rat>& x) const;

    // Line-oriented text format, one constraint per line:
    //   vars a b0p ...
    //   minimize 9 -47 ...
    //   constraint <name> <coeff...> <= | >= | = <rhs>
    // Rationals are written p or p/q; '#' starts a comment.
    std::string to_text() const;
    static ExactLP from_text(const std::string& text);

    friend bool operator==(const ExactLP& a, const ExactLP& b);
};

// Dual sign convention for "minimize": multiplier >= 0 on >= rows,
// <= 0 on <= rows, free on equalities; dual value is sum_i y_i b_i.
struct Certificate {
    Rat optimal_value;
    std::vector<Rat> primal;  // per variable
    std::vector<Rat> duals;   // per constraint
    nlohmann::ordered_json to_json(const ExactLP& lp) const;
};

struct UnboundedCertificate {
    std::vector<Rat> feasible_point;
    std::vector<Rat> ray;
    Rat ray_objective;  // c.ray, strictly negative
    nlohmann::ordered_json to_json(const ExactLP& lp) const;
};

struct InfeasibilityCertificate {
    std::vector<Rat> multipliers;  // per constraint
    Rat witness_value;             // sum_i y_i b_i, strictly positive
    nlohmann::ordered_json to_json(const ExactLP& lp) const;
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

const char* status_name(LpStatus s);

struct LpSolution {
    LpStatus status;
    std::optional<Certificate> certificate;
    std::optional<UnboundedCertificate> unbounded;
    std::optional<InfeasibilityCertificate> infeasibility;
    nlohmann::ordered_json to_json(const ExactLP& lp) const;
};

LpSolution minimize(const ExactLP& lp);

bool verify_certificate(const ExactLP& lp, const Certificate& cert,
                        std::vector<std::string>* violations = nullptr);
bool verify_unbounded(const ExactLP& lp, const UnboundedCertificate& cert,
                      std::vector<std::string>* violations = nullptr);
bool verify_infeasibility(const ExactLP& lp, const InfeasibilityCertificate& cert,
                          std::vector<std::string>* violations = nullptr);

// True when the solution's certificate (whichever kind) verifies against lp.
bool verify_solution(const ExactLP& lp, const LpSolution& sol,
                     std::vector<std::string>* violations = nullptr);

}  // namespace prym::lp
