#include <prym/exact_lp.hpp>

#include <algorithm>
#include <sstream>

namespace prym::lp {

const char* relation_symbol(Relation r) {
    switch (r) {
        case Relation::Eq: return "=";
        case Relation::Ge: return ">=";
        case Relation::Le: return "<=";
    }
    return "?";
}

const char* status_name(LpStatus s) {
    switch (s) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Unbounded: return "unbounded";
        case LpStatus::Infeasible: return "infeasible";
    }
    return "?";
}

int ExactLP::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

void ExactLP::validate() const {
    if (vars.empty()) throw std::invalid_argument("ExactLP: no variables");
    if (objective.size() != vars.size())
        throw std::invalid_argument("ExactLP: objective length != variable count");
    for (const auto& c : constraints)
        if (c.coeffs.size() != vars.size())
            throw std::invalid_argument("ExactLP: constraint '" + c.name +
                                        "' has wrong coefficient count");
}

Rat ExactLP::objective_value(const std::vector<Rat>& x) const {
    Rat v = 0;
    for (size_t j = 0; j < vars.size(); ++j) v += objective[j] * x[j];
    return v;
}

Rat ExactLP::row_value(const Constraint& c, const std::vector<Rat>& x) const {
    Rat v = 0;
    for (size_t j = 0; j < vars.size(); ++j) v += c.coeffs[j] * x[j];
    return v;
}

std::string ExactLP::to_text() const {
    std::ostringstream os;
    os << "vars";
    for (const auto& v : vars) os << " " << v;
    os << "\nminimize";
    for (const auto& c : objective) os << " " << rat_to_string(c);
    os << "\n";
    int unnamed = 0;
    for (const auto& c : constraints) {
        std::string name = c.name.empty() ? "c" + std::to_string(unnamed++) : c.name;
        os << "constraint " << name;
        for (const auto& a : c.coeffs) os << " " << rat_to_string(a);
        os << " " << relation_symbol(c.rel) << " " << rat_to_string(c.rhs) << "\n";
    }
    return os.str();
}

ExactLP ExactLP::from_text(const std::string& text) {
    ExactLP lp;
    std::istringstream in(text);
    std::string line;
    bool have_vars = false, have_objective = false;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok[0] == "vars") {
            lp.vars.assign(tok.begin() + 1, tok.end());
            have_vars = true;
        } else if (tok[0] == "minimize") {
            if (!have_vars) throw std::invalid_argument("lp text: minimize before vars");
            if (tok.size() != lp.vars.size() + 1)
                throw std::invalid_argument("lp text: wrong objective length");
            for (size_t i = 1; i < tok.size(); ++i)
                lp.objective.push_back(rat_from_string(tok[i]));
            have_objective = true;
        } else if (tok[0] == "constraint") {
            if (!have_vars) throw std::invalid_argument("lp text: constraint before vars");
            const size_t n = lp.vars.size();
            if (tok.size() != n + 4)
                throw std::invalid_argument("lp text: malformed constraint line");
            Constraint c;
            c.name = tok[1];
            for (size_t i = 0; i < n; ++i) c.coeffs.push_back(rat_from_string(tok[2 + i]));
            const std::string& rel = tok[2 + n];
            if (rel == "=")
                c.rel = Relation::Eq;
            else if (rel == ">=")
                c.rel = Relation::Ge;
            else if (rel == "<=")
                c.rel = Relation::Le;
            else
                throw std::invalid_argument("lp text: unknown relation '" + rel + "'");
            c.rhs = rat_from_string(tok[3 + n]);
            lp.constraints.push_back(std::move(c));
        } else {
            throw std::invalid_argument("lp text: unknown directive '" + tok[0] + "'");
        }
    }
    if (!have_vars || !have_objective)
        throw std::invalid_argument("lp text: missing vars or minimize line");
    lp.validate();
    return lp;
}

bool operator==(const ExactLP& a, const ExactLP& b) {
    if (a.vars != b.vars || a.objective != b.objective ||
        a.constraints.size() != b.constraints.size())
        return false;
    for (size_t i = 0; i < a.constraints.size(); ++i) {
        const auto& ca = a.constraints[i];
        const auto& cb = b.constraints[i];
        if (ca.name != cb.name || ca.coeffs != cb.coeffs || ca.rel != cb.rel ||
            ca.rhs != cb.rhs)
            return false;
    }
    return true;
}

namespace {

nlohmann::ordered_json vector_json(const ExactLP& lp, const std::vector<Rat>& x) {
    nlohmann::ordered_json j;
    for (size_t i = 0; i < lp.vars.size(); ++i) j[lp.vars[i]] = rat_to_string(x[i]);
    return j;
}

nlohmann::ordered_json duals_json(const ExactLP& lp, const std::vector<Rat>& y) {
    nlohmann::ordered_json j;
    int unnamed = 0;
    for (size_t i = 0; i < lp.constraints.size(); ++i) {
        std::string name = lp.constraints[i].name.empty()
                               ? "c" + std::to_string(unnamed++)
                               : lp.constraints[i].name;
        j[name] = rat_to_string(y[i]);
    }
    return j;
}

}  // namespace

nlohmann::ordered_json Certificate::to_json(const ExactLP& lp) const {
    nlohmann::ordered_json j;
    j["status"] = "optimal";
    j["optimal_value"] = rat_to_string(optimal_value);
    j["primal"] = vector_json(lp, primal);
    j["duals"] = duals_json(lp, duals);
    return j;
}

nlohmann::ordered_json UnboundedCertificate::to_json(const ExactLP& lp) const {
    nlohmann::ordered_json j;
    j["status"] = "unbounded";
    j["feasible_point"] = vector_json(lp, feasible_point);
    j["ray"] = vector_json(lp, ray);
    j["ray_objective"] = rat_to_string(ray_objective);
    return j;
}

nlohmann::ordered_json InfeasibilityCertificate::to_json(const ExactLP& lp) const {
    nlohmann::ordered_json j;
    j["status"] = "infeasible";
    j["multipliers"] = duals_json(lp, multipliers);
    j["witness_value"] = rat_to_string(witness_value);
    return j;
}

nlohmann::ordered_json LpSolution::to_json(const ExactLP& lp) const {
    if (certificate) return certificate->to_json(lp);
    if (unbounded) return unbounded->to_json(lp);
    if (infeasibility) return infeasibility->to_json(lp);
    return {{"status", status_name(status)}};
}

namespace {

// Two-phase tableau simplex over the rationals with Bland's rule.
//
// Standard form: columns are u_0..u_{n-1}, v_0..v_{n-1} (x = u - v), one
// slack per inequality row, then one artificial per row. Rows are the
// original constraints with <= negated to >= and then scaled so every
// right-hand side is nonnegative.
class Simplex {
public:
    explicit Simplex(const ExactLP& lp) : lp_(lp) {
        n_ = lp.vars.size();
        m_ = lp.constraints.size();

        // Normalization bookkeeping per row: s_ = -1 where <= became >=,
        // f_ = -1 where the row was scaled to make rhs nonnegative.
        s_.assign(m_, 1);
        f_.assign(m_, 1);
        num_slack_ = 0;
        for (size_t i = 0; i < m_; ++i)
            if (lp.constraints[i].rel != Relation::Eq) ++num_slack_;

        cols_ = 2 * n_ + num_slack_ + m_;
        art0_ = 2 * n_ + num_slack_;
        T_.assign(m_, std::vector<Rat>(cols_, Rat(0)));
        rhs_.assign(m_, Rat(0));

        size_t slack = 0;
        for (size_t i = 0; i < m_; ++i) {
            const Constraint& row = lp.constraints[i];
            if (row.rel == Relation::Le) s_[i] = -1;
            Rat b = Rat(s_[i]) * row.rhs;
            if (b < 0) f_[i] = -1;
            const Rat scale = Rat(s_[i] * f_[i]);
            for (size_t j = 0; j < n_; ++j) {
                T_[i][j] = scale * row.coeffs[j];
                T_[i][n_ + j] = -T_[i][j];
            }
            if (row.rel != Relation::Eq) {
                T_[i][2 * n_ + slack] = Rat(-f_[i]);
                ++slack;
            }
            T_[i][art0_ + i] = 1;
            rhs_[i] = Rat(f_[i]) * b;
        }
        basis_.resize(m_);
        for (size_t i = 0; i < m_; ++i) basis_[i] = static_cast<int>(art0_ + i);
    }

    LpSolution solve() {
        // Phase 1: drive the artificials to zero.
        std::vector<Rat> cost1(cols_, Rat(0));
        for (size_t i = 0; i < m_; ++i) cost1[art0_ + i] = 1;
        run(cost1, /*allow_artificial=*/true);

        Rat phase1 = 0;
        for (size_t i = 0; i < m_; ++i) phase1 += cost1[basis_[i]] * rhs_[i];
        if (phase1 > 0) return infeasible_solution(cost1);

        pivot_out_artificials();

        // Phase 2: the real objective on the split variables.
        std::vector<Rat> cost2(cols_, Rat(0));
        for (size_t j = 0; j < n_; ++j) {
            cost2[j] = lp_.objective[j];
            cost2[n_ + j] = -lp_.objective[j];
        }
        int unbounded_col = run(cost2, /*allow_artificial=*/false);
        if (unbounded_col >= 0) return unbounded_solution(unbounded_col);
        return optimal_solution(cost2);
    }

private:
    // Bland's-rule simplex loop. Returns -1 at optimality, or the entering
    // column index when the problem is unbounded in that direction.
    int run(const std::vector<Rat>& cost, bool allow_artificial) {
        for (;;) {
            int entering = -1;
            for (size_t j = 0; j < cols_; ++j) {
                if (!allow_artificial && j >= art0_) break;
                if (is_basic(j)) continue;
                Rat reduced = cost[j];
                for (size_t i = 0; i < m_; ++i) {
                    if (cost[basis_[i]] != 0) reduced -= cost[basis_[i]] * T_[i][j];
                }
                if (reduced < 0) {
                    entering = static_cast<int>(j);
                    break;  // least index
                }
            }
            if (entering < 0) return -1;

            int leaving = -1;
            Rat best_ratio = 0;
            for (size_t i = 0; i < m_; ++i) {
                if (T_[i][entering] <= 0) continue;
                Rat ratio = rhs_[i] / T_[i][entering];
                if (leaving < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leaving])) {
                    leaving = static_cast<int>(i);
                    best_ratio = ratio;
                }
            }
            if (leaving < 0) return entering;  // unbounded direction
            pivot(static_cast<size_t>(leaving), static_cast<size_t>(entering));
        }
    }

    bool is_basic(size_t col) const {
        for (size_t i = 0; i < m_; ++i)
            if (basis_[i] == static_cast<int>(col)) return true;
        return false;
    }

    void pivot(size_t row, size_t col) {
        const Rat p = T_[row][col];
        for (auto& v : T_[row]) v /= p;
        rhs_[row] /= p;
        for (size_t i = 0; i < m_; ++i) {
            if (i == row || T_[i][col] == 0) continue;
            const Rat factor = T_[i][col];
            for (size_t j = 0; j < cols_; ++j) T_[i][j] -= factor * T_[row][j];
            rhs_[i] -= factor * rhs_[row];
        }
        basis_[row] = static_cast<int>(col);
    }

    // After phase 1 every artificial is at level zero; replace basic
    // artificials by real columns where possible. Rows that cannot be
    // repaired are identically zero (redundant constraints) and keep their
    // artificial basic at level zero, which later pivots never disturb.
    void pivot_out_artificials() {
        for (size_t i = 0; i < m_; ++i) {
            if (basis_[i] < static_cast<int>(art0_)) continue;
            for (size_t j = 0; j < art0_; ++j) {
                if (T_[i][j] != 0) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    // y = c_B B^{-1}, read off the artificial block (initially the identity).
    std::vector<Rat> tableau_duals(const std::vector<Rat>& cost) const {
        std::vector<Rat> y(m_, Rat(0));
        for (size_t i = 0; i < m_; ++i) {
            for (size_t k = 0; k < m_; ++k) {
                if (cost[basis_[k]] != 0) y[i] += cost[basis_[k]] * T_[k][art0_ + i];
            }
        }
        return y;
    }

    std::vector<Rat> current_point() const {
        std::vector<Rat> std_values(cols_, Rat(0));
        for (size_t i = 0; i < m_; ++i) std_values[basis_[i]] = rhs_[i];
        std::vector<Rat> x(n_);
        for (size_t j = 0; j < n_; ++j) x[j] = std_values[j] - std_values[n_ + j];
        return x;
    }

    // Translate tableau multipliers back to per-original-constraint ones.
    std::vector<Rat> original_duals(const std::vector<Rat>& y_hat) const {
        std::vector<Rat> y(m_);
        for (size_t i = 0; i < m_; ++i) y[i] = Rat(s_[i] * f_[i]) * y_hat[i];
        return y;
    }

    LpSolution infeasible_solution(const std::vector<Rat>& cost1) const {
        InfeasibilityCertificate cert;
        cert.multipliers = original_duals(tableau_duals(cost1));
        cert.witness_value = 0;
        for (size_t i = 0; i < m_; ++i)
            cert.witness_value += cert.multipliers[i] * lp_.constraints[i].rhs;
        LpSolution sol;
        sol.status = LpStatus::Infeasible;
        sol.infeasibility = std::move(cert);
        return sol;
    }

    LpSolution unbounded_solution(int entering) const {
        std::vector<Rat> std_ray(cols_, Rat(0));
        std_ray[entering] = 1;
        for (size_t i = 0; i < m_; ++i) std_ray[basis_[i]] = -T_[i][entering];
        UnboundedCertificate cert;
        cert.feasible_point = current_point();
        cert.ray.resize(n_);
        for (size_t j = 0; j < n_; ++j) cert.ray[j] = std_ray[j] - std_ray[n_ + j];
        cert.ray_objective = 0;
        for (size_t j = 0; j < n_; ++j) cert.ray_objective += lp_.objective[j] * cert.ray[j];
        LpSolution sol;
        sol.status = LpStatus::Unbounded;
        sol.unbounded = std::move(cert);
        return sol;
    }

    LpSolution optimal_solution(const std::vector<Rat>& cost2) const {
        Certificate cert;
        cert.primal = current_point();
        cert.optimal_value = lp_.objective_value(cert.primal);
        cert.duals = original_duals(tableau_duals(cost2));
        LpSolution sol;
        sol.status = LpStatus::Optimal;
        sol.certificate = std::move(cert);
        return sol;
    }

    const ExactLP& lp_;
    size_t n_ = 0, m_ = 0, cols_ = 0, num_slack_ = 0, art0_ = 0;
    std::vector<int> s_, f_;
    std::vector<std::vector<Rat>> T_;
    std::vector<Rat> rhs_;
    std::vector<int> basis_;
};

void report(std::vector<std::string>* violations, const std::string& msg) {
    if (violations) violations->push_back(msg);
}

bool check_primal_feasible(const ExactLP& lp, const std::vector<Rat>& x,
                           std::vector<std::string>* violations) {
    bool ok = true;
    if (x.size() != lp.vars.size()) {
        report(violations, "primal point has wrong dimension");
        return false;
    }
    for (const auto& c : lp.constraints) {
        Rat v = lp.row_value(c, x);
        bool row_ok = (c.rel == Relation::Eq && v == c.rhs) ||
                      (c.rel == Relation::Ge && v >= c.rhs) ||
                      (c.rel == Relation::Le && v <= c.rhs);
        if (!row_ok) {
            ok = false;
            report(violations, "primal infeasible on constraint '" + c.name + "': " +
                                   rat_to_string(v) + " " + relation_symbol(c.rel) + " " +
                                   rat_to_string(c.rhs) + " fails");
        }
    }
    return ok;
}

}  // namespace

LpSolution minimize(const ExactLP& lp) {
    lp.validate();
    return Simplex(lp).solve();
}

bool verify_certificate(const ExactLP& lp, const Certificate& cert,
                        std::vector<std::string>* violations) {
    lp.validate();
    bool ok = check_primal_feasible(lp, cert.primal, violations);

    if (cert.duals.size() != lp.constraints.size()) {
        report(violations, "dual vector has wrong dimension");
        return false;
    }
    // Dual feasibility: sign conditions and A^T y = c.
    for (size_t i = 0; i < lp.constraints.size(); ++i) {
        const auto& c = lp.constraints[i];
        if (c.rel == Relation::Ge && cert.duals[i] < 0) {
            ok = false;
            report(violations, "dual for '" + c.name + "' must be >= 0");
        }
        if (c.rel == Relation::Le && cert.duals[i] > 0) {
            ok = false;
            report(violations, "dual for '" + c.name + "' must be <= 0");
        }
    }
    for (size_t j = 0; j < lp.vars.size(); ++j) {
        Rat sum = 0;
        for (size_t i = 0; i < lp.constraints.size(); ++i)
            sum += cert.duals[i] * lp.constraints[i].coeffs[j];
        if (sum != lp.objective[j]) {
            ok = false;
            report(violations, "dual combination mismatch on variable '" + lp.vars[j] +
                                   "': " + rat_to_string(sum) + " != " +
                                   rat_to_string(lp.objective[j]));
        }
    }
    // Stated value, strong duality, complementary slackness.
    if (lp.objective_value(cert.primal) != cert.optimal_value) {
        ok = false;
        report(violations, "stated optimal value does not match the primal point");
    }
    Rat dual_value = 0;
    for (size_t i = 0; i < lp.constraints.size(); ++i)
        dual_value += cert.duals[i] * lp.constraints[i].rhs;
    if (dual_value != cert.optimal_value) {
        ok = false;
        report(violations, "strong duality fails: dual value " + rat_to_string(dual_value) +
                               " != " + rat_to_string(cert.optimal_value));
    }
    for (size_t i = 0; i < lp.constraints.size(); ++i) {
        const auto& c = lp.constraints[i];
        if (c.rel == Relation::Eq) continue;
        Rat slack = lp.row_value(c, cert.primal) - c.rhs;
        if (cert.duals[i] * slack != 0) {
            ok = false;
            report(violations, "complementary slackness fails on '" + c.name + "'");
        }
    }
    return ok;
}

bool verify_unbounded(const ExactLP& lp, const UnboundedCertificate& cert,
                      std::vector<std::string>* violations) {
    lp.validate();
    bool ok = check_primal_feasible(lp, cert.feasible_point, violations);
    if (cert.ray.size() != lp.vars.size()) {
        report(violations, "ray has wrong dimension");
        return false;
    }
    for (const auto& c : lp.constraints) {
        Rat v = lp.row_value(c, cert.ray);
        bool row_ok = (c.rel == Relation::Eq && v == 0) ||
                      (c.rel == Relation::Ge && v >= 0) ||
                      (c.rel == Relation::Le && v <= 0);
        if (!row_ok) {
            ok = false;
            report(violations, "ray leaves the feasible cone on '" + c.name + "'");
        }
    }
    Rat along = lp.objective_value(cert.ray);
    if (along >= 0) {
        ok = false;
        report(violations, "ray objective " + rat_to_string(along) + " is not negative");
    }
    if (along != cert.ray_objective) {
        ok = false;
        report(violations, "stated ray objective does not match the ray");
    }
    return ok;
}

bool verify_infeasibility(const ExactLP& lp, const InfeasibilityCertificate& cert,
                          std::vector<std::string>* violations) {
    lp.validate();
    bool ok = true;
    if (cert.multipliers.size() != lp.constraints.size()) {
        report(violations, "multiplier vector has wrong dimension");
        return false;
    }
    for (size_t i = 0; i < lp.constraints.size(); ++i) {
        const auto& c = lp.constraints[i];
        if (c.rel == Relation::Ge && cert.multipliers[i] < 0) {
            ok = false;
            report(violations, "multiplier for '" + c.name + "' must be >= 0");
        }
        if (c.rel == Relation::Le && cert.multipliers[i] > 0) {
            ok = false;
            report(violations, "multiplier for '" + c.name + "' must be <= 0");
        }
    }
    for (size_t j = 0; j < lp.vars.size(); ++j) {
        Rat sum = 0;
        for (size_t i = 0; i < lp.constraints.size(); ++i)
            sum += cert.multipliers[i] * lp.constraints[i].coeffs[j];
        if (sum != 0) {
            ok = false;
            report(violations, "multiplier combination is nonzero on variable '" +
                                   lp.vars[j] + "'");
        }
    }
    Rat witness = 0;
    for (size_t i = 0; i < lp.constraints.size(); ++i)
        witness += cert.multipliers[i] * lp.constraints[i].rhs;
    if (witness <= 0) {
        ok = false;
        report(violations, "witness value " + rat_to_string(witness) + " is not positive");
    }
    if (witness != cert.witness_value) {
        ok = false;
        report(violations, "stated witness value does not match the multipliers");
    }
    return ok;
}

bool verify_solution(const ExactLP& lp, const LpSolution& sol,
                     std::vector<std::string>* violations) {
    switch (sol.status) {
        case LpStatus::Optimal:
            return sol.certificate && verify_certificate(lp, *sol.certificate, violations);
        case LpStatus::Unbounded:
            return sol.unbounded && verify_unbounded(lp, *sol.unbounded, violations);
        case LpStatus::Infeasible:
            return sol.infeasibility &&
                   verify_infeasibility(lp, *sol.infeasibility, violations);
    }
    return false;
}

}  // namespace prym::lp
