#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <prym/certifier.hpp>
#include <prym/pencil_numerics.hpp>

using namespace prym;
using namespace prym::certifier;

namespace {

std::vector<Rat> point(const Rat& a, const Rat& b0p, const Rat& b0pp, const Rat& b0ram,
                       const Rat& b1) {
    return {a, b0p, b0pp, b0ram, b1};
}

}  // namespace

TEST_CASE("constraint system at genus 9") {
    lp::ExactLP prog = build_constraints(9);
    CHECK(prog.vars == std::vector<std::string>{"a", "b0p", "b0pp", "b0ram", "b1"});
    CHECK(prog.objective == std::vector<Rat>{Rat(9), Rat(-47), Rat(0), Rat(-8), Rat(0)});
    REQUIRE(prog.constraints.size() == 5);

    const auto& eq = prog.constraints[0];
    CHECK(eq.name == "nikulin_disjoint");
    CHECK(eq.rel == lp::Relation::Eq);
    CHECK(eq.coeffs == std::vector<Rat>{Rat(10), Rat(-56), Rat(0), Rat(-8), Rat(0)});

    const auto& k3 = prog.constraints[1];
    CHECK(k3.rel == lp::Relation::Ge);
    CHECK(k3.coeffs == std::vector<Rat>{Rat(2621430), Rat(-9437040), Rat(-72),
                                        Rat(-4718592), Rat(0)});

    CHECK(prog.constraints[2].coeffs ==
          std::vector<Rat>{Rat(0), Rat(0), Rat(16), Rat(0), Rat(-1)});
    CHECK(prog.constraints[3].coeffs ==
          std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
    CHECK(prog.constraints[4].coeffs ==
          std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)});

    CHECK_THROWS_AS(build_constraints(8), std::invalid_argument);
}

TEST_CASE("the minimum of R.D' over the cone is exactly zero") {
    lp::ExactLP prog = build_constraints(9);
    lp::LpSolution sol = lp::minimize(prog);
    REQUIRE(sol.status == lp::LpStatus::Optimal);
    CHECK(sol.certificate->optimal_value == 0);
    // The feasible set is a cone: the optimum is attained at the origin.
    for (const auto& x : sol.certificate->primal) CHECK(x == 0);
    CHECK(lp::verify_certificate(prog, *sol.certificate));
}

TEST_CASE("hand feasibility checks on the constraint system") {
    lp::ExactLP prog = build_constraints(9);

    // The zero class is feasible with objective 0.
    auto zero = point(0, 0, 0, 0, 0);
    for (const auto& c : prog.constraints) {
        Rat v = prog.row_value(c, zero);
        CHECK(v == 0);
    }
    CHECK(prog.objective_value(zero) == 0);

    // The equality check at (a, b0p, b0ram) = (36, 5, 10): 360 - 280 - 80 = 0,
    // and with b0pp = b1 = 1 every inequality is strict.
    auto interior = point(36, 5, 1, 10, 1);
    CHECK(prog.row_value(prog.constraints[0], interior) == 0);
    CHECK(prog.row_value(prog.constraints[1], interior) == 288);
    CHECK(prog.row_value(prog.constraints[2], interior) == 15);
    CHECK(prog.row_value(prog.constraints[3], interior) == 1);
    CHECK(prog.row_value(prog.constraints[4], interior) == 36);
    CHECK(prog.objective_value(interior) == 9);  // = 9*b0p - a on the cone
}

TEST_CASE("reduced form: eliminating b0ram reproduces the same optimum") {
    // Substitute b0ram = (5a - 28 b0p)/4 from the disjointness equality.
    // Objective 9a - 47 b0p - 8 b0ram becomes 9 b0p - a; the k3 row becomes
    // -3276810 a + 23593104 b0p - 72 b0pp >= 0.
    lp::ExactLP reduced;
    reduced.vars = {"a", "b0p", "b0pp", "b1"};
    reduced.objective = {Rat(-1), Rat(9), Rat(0), Rat(0)};
    reduced.constraints.push_back(
        {"k3_sweep", {Rat(-3276810), Rat(23593104), Rat(-72), Rat(0)}, lp::Relation::Ge, 0});
    reduced.constraints.push_back(
        {"delta0pp_sweep", {Rat(0), Rat(0), Rat(16), Rat(-1)}, lp::Relation::Ge, 0});
    reduced.constraints.push_back(
        {"delta1_ruling", {Rat(0), Rat(0), Rat(0), Rat(1)}, lp::Relation::Ge, 0});
    reduced.constraints.push_back(
        {"lambda_nef", {Rat(1), Rat(0), Rat(0), Rat(0)}, lp::Relation::Ge, 0});

    lp::LpSolution sol = lp::minimize(reduced);
    REQUIRE(sol.status == lp::LpStatus::Optimal);
    CHECK(sol.certificate->optimal_value == 0);
    CHECK(lp::verify_solution(reduced, sol));

    // The substitution itself, checked symbolically: objective and k3 row of
    // the full system, with b0ram eliminated, match the reduced coefficients.
    lp::ExactLP full = build_constraints(9);
    const auto& eq = full.constraints[0];   // 10a - 56 b0p - 8 b0ram = 0
    Rat sub_a = eq.coeffs[0] / -eq.coeffs[3];    // b0ram = sub_a * a + sub_b * b0p
    Rat sub_b = eq.coeffs[1] / -eq.coeffs[3];
    CHECK(sub_a == Rat(5, 4));
    CHECK(sub_b == -7);
    Rat obj_a = full.objective[0] + full.objective[3] * sub_a;
    Rat obj_b = full.objective[1] + full.objective[3] * sub_b;
    CHECK(obj_a == -1);
    CHECK(obj_b == 9);
    const auto& k3 = full.constraints[1];
    CHECK(k3.coeffs[0] + k3.coeffs[3] * sub_a == -3276810);
    CHECK(k3.coeffs[1] + k3.coeffs[3] * sub_b == 23593104);
}

TEST_CASE("flipping the objective yields a verified unbounded ray") {
    lp::ExactLP prog = build_constraints(9);
    for (auto& c : prog.objective) c = -c;
    lp::LpSolution sol = lp::minimize(prog);
    REQUIRE(sol.status == lp::LpStatus::Unbounded);
    CHECK(lp::verify_unbounded(prog, *sol.unbounded));

    // Independent hand-built ray: (a, b0p, b0pp, b0ram, b1) = (0, 1, 0, -7, 0)
    // gains 9 per unit of R.D', i.e. -9 for the negated objective.
    lp::UnboundedCertificate hand;
    hand.feasible_point = point(0, 0, 0, 0, 0);
    hand.ray = point(0, 1, 0, -7, 0);
    hand.ray_objective = -9;
    CHECK(lp::verify_unbounded(prog, hand));
}

TEST_CASE("full certificate chain") {
    CertifierReport rep = certify_not_pseudoeffective();
    CHECK(rep.contradiction_established);
    REQUIRE(rep.steps.size() >= 3);
    CHECK(rep.steps[0].id == "R.K");
    CHECK(rep.steps[0].value == "-1");
    CHECK(rep.steps[0].ok);
    CHECK(rep.steps[1].value == "0");
    CHECK(rep.steps[1].ok);

    REQUIRE(rep.axioms.size() == 4);
    CHECK(rep.axioms[0].id == "dagger");
    CHECK(rep.axioms[1].id == "R_moving");
    CHECK(rep.axioms[2].id == "A_sweeping");
    CHECK(rep.axioms[3].id == "BDPP");

    CHECK(rep.lp_certificate_digest.size() == 16);
    CHECK(rep.to_text().find("not pseudo-effective") != std::string::npos);

    // Deterministic: a second run produces the identical digest.
    CHECK(certify_not_pseudoeffective().lp_certificate_digest == rep.lp_certificate_digest);
}

TEST_CASE("negative control: perturbing the pencil kills the contradiction") {
    CurveClass r = pencil::sweeping_pencil_class(pencil::twelve_nodal_octic_pencil());
    r.set_pairing("lambda", 10);
    CertifierReport rep = certify_with_curve(r);
    CHECK_FALSE(rep.contradiction_established);
    CHECK(rep.steps[0].value == "12");  // 13*10 - 2*47 - 3*8
    CHECK_FALSE(rep.steps[0].ok);
    CHECK(rep.conclusion.find("does not establish") != std::string::npos);
}

TEST_CASE("degenerate decomposition branch") {
    // With t = 0 the decomposition is K = M alone; the chain still yields a
    // contradiction because R.M >= 0 while R.K = -1. The report's
    // contradiction step covers that branch, so it must not depend on the
    // LP optimum being strictly positive.
    CertifierReport rep = certify_not_pseudoeffective();
    REQUIRE(rep.lp_solution.certificate.has_value());
    CHECK(rep.lp_solution.certificate->optimal_value == 0);
    CHECK(rep.contradiction_established);
}

TEST_CASE("report serialization") {
    CertifierReport rep = certify_not_pseudoeffective();
    auto j = rep.to_json();
    CHECK(j["schema"] == "prym9/certificate/v1");
    CHECK(j["contradiction_established"] == true);
    CHECK(j["lp_certificate"]["status"] == "optimal");
    CHECK(j["lp_certificate"]["optimal_value"] == "0");
    CHECK(j["axioms"].size() == 4);

    // The LP text embedded in the report round-trips.
    lp::ExactLP back = lp::ExactLP::from_text(j["lp"].get<std::string>());
    CHECK(back == rep.lp);
}
