#include <prym/nikulin_lattice.hpp>

#include <sstream>

namespace prym::lattice {

Rat IntegralLattice::inner(const LatticeVec& x, const LatticeVec& y) const {
    const size_t n = basis_labels.size();
    if (x.size() != n || y.size() != n)
        throw std::invalid_argument("IntegralLattice: vector length != rank");
    Rat out = 0;
    for (size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) out += x[i] * gram[i][j] * y[j];
    }
    return out;
}

nlohmann::ordered_json IntegralLattice::gram_json() const {
    nlohmann::ordered_json j;
    j["basis"] = basis_labels;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : gram) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& v : row) r.push_back(rat_to_string(v));
        rows.push_back(std::move(r));
    }
    j["gram"] = std::move(rows);
    return j;
}

IntegralLattice IntegralLattice::from_gram_json(const nlohmann::json& j) {
    IntegralLattice lat;
    lat.basis_labels = j.at("basis").get<std::vector<std::string>>();
    for (const auto& row : j.at("gram")) {
        std::vector<Rat> r;
        for (const auto& v : row) r.push_back(rat_from_string(v.get<std::string>()));
        lat.gram.push_back(std::move(r));
    }
    const size_t n = lat.basis_labels.size();
    if (lat.gram.size() != n)
        throw std::invalid_argument("IntegralLattice: gram size != basis size");
    for (size_t i = 0; i < n; ++i) {
        if (lat.gram[i].size() != n)
            throw std::invalid_argument("IntegralLattice: gram is not square");
        for (size_t k = 0; k < i; ++k)
            if (lat.gram[i][k] != lat.gram[k][i])
                throw std::invalid_argument("IntegralLattice: gram is not symmetric");
    }
    return lat;
}

NikulinPicard::NikulinPicard(int genus) : genus_(genus) {
    if (genus < 2)
        throw std::invalid_argument("NikulinPicard: genus must be >= 2");
    lattice_.basis_labels = {"C"};
    for (int i = 1; i <= 8; ++i) lattice_.basis_labels.push_back("N" + std::to_string(i));
    lattice_.gram.assign(9, std::vector<Rat>(9, Rat(0)));
    lattice_.gram[0][0] = 2 * genus - 2;
    for (int i = 1; i <= 8; ++i) lattice_.gram[i][i] = -2;
}

LatticeVec NikulinPicard::polarization() const {
    LatticeVec v(9, Rat(0));
    v[0] = 1;
    return v;
}

LatticeVec NikulinPicard::nodal_class(int i) const {
    if (i < 1 || i > 8)
        throw std::invalid_argument("NikulinPicard: nodal class index out of range");
    LatticeVec v(9, Rat(0));
    v[i] = 1;
    return v;
}

LatticeVec NikulinPicard::half_nodal_sum() const {
    LatticeVec v(9, Rat(1, 2));
    v[0] = 0;
    return v;
}

LatticeVec NikulinPicard::to_extended_coordinates(const LatticeVec& v) const {
    if (v.size() != 9)
        throw std::invalid_argument("NikulinPicard: vector length != 9");
    // v = x0 C + sum b_i N_i = x0 C + (2 b_8) e + sum_{i<=7} (b_i - b_8) N_i.
    LatticeVec out(9, Rat(0));
    out[0] = v[0];
    out[1] = 2 * v[8];
    for (int i = 1; i <= 7; ++i) out[1 + i] = v[i] - v[8];
    return out;
}

bool NikulinPicard::contains(const LatticeVec& v) const {
    for (const Rat& coord : to_extended_coordinates(v))
        if (!rat_is_integer(coord)) return false;
    return true;
}

NikulinPicard nikulin_picard(int genus) { return NikulinPicard(genus); }

Rat mukai_pairing(const MukaiVector& v, const MukaiVector& w) {
    if (!(v.lattice == w.lattice))
        throw std::invalid_argument("mukai_pairing: vectors over different lattices");
    return v.lattice.inner(v.c1, w.c1) - Rat(v.chi_minus_rank) * w.rank -
           Rat(v.rank) * w.chi_minus_rank;
}

Rat slope(const IntegralLattice& lattice, const LatticeVec& c1, long rank,
          const LatticeVec& polarization) {
    if (rank <= 0) throw std::invalid_argument("slope: rank must be positive");
    return lattice.inner(c1, polarization) / Rat(rank);
}

nlohmann::ordered_json StabilityReport::to_json() const {
    nlohmann::ordered_json j;
    j["C_squared"] = rat_to_string(c_squared);
    j["mukai_square"] = rat_to_string(mukai_square);
    j["stability_excluded"] = stability_excluded;
    j["mu_E"] = rat_to_string(mu_e);
    nlohmann::ordered_json cands = nlohmann::ordered_json::array();
    for (const auto& c : candidates) {
        nlohmann::ordered_json jc;
        jc["rank"] = c.rank;
        jc["a"] = c.a;
        jc["slope"] = rat_to_string(c.slope);
        jc["slope_admissible"] = c.slope_admissible;
        jc["semistability_ok"] = c.semistability_ok;
        if (!c.excluded_by.empty()) jc["excluded_by"] = c.excluded_by;
        cands.push_back(std::move(jc));
    }
    j["candidates"] = std::move(cands);
    nlohmann::ordered_json forced_json = nlohmann::ordered_json::array();
    for (const auto& [r, a] : forced) forced_json.push_back({{"rank", r}, {"a", a}});
    j["forced"] = std::move(forced_json);
    j["steps"] = steps;
    j["hypotheses"] = hypotheses;
    return j;
}

StabilityReport destabilization_chain(const Rat& c_squared) {
    if (c_squared <= 0)
        throw std::invalid_argument("destabilization_chain: C^2 must be positive");

    StabilityReport rep;
    rep.c_squared = c_squared;

    // v(E) = (4, C + e, 2): (C+e)^2 = C^2 + e^2 = C^2 - 4, so
    // v(E)^2 = (C^2 - 4) - 2*4*2.
    rep.mukai_square = c_squared - 4 - 16;
    rep.stability_excluded = rep.mukai_square < -2;

    // mu(E) = (C+e).C / 4 = C^2 / 4  (e.C = 0).
    rep.mu_e = c_squared / 4;

    std::ostringstream step1;
    step1 << "v(E)^2 = (C^2 - 4) - 16 = " << rat_to_string(rep.mukai_square)
          << (rep.stability_excluded ? " < -2, so E is not stable"
                                     : " >= -2, stability is not excluded");
    rep.steps.push_back(step1.str());
    rep.steps.push_back("mu(E) = (C + e).C / rk(E) = C^2/4 = " + rat_to_string(rep.mu_e));

    // Destabilizing subsheaf E_1 of rank r <= 3 with c1(E_1) = a C + N',
    // N'.C = 0. Slope condition: a C^2 / r >= mu(E). Semistability of the
    // rank-3 quotient bundle gives (r - 3a) C^2 >= 0.
    for (int r = 1; r <= 3; ++r) {
        for (int a = 0; a <= 2; ++a) {
            StabilityCandidate cand;
            cand.rank = r;
            cand.a = a;
            cand.slope = Rat(a) * c_squared / r;
            cand.slope_admissible = cand.slope >= rep.mu_e;
            cand.semistability_ok = Rat(r - 3 * a) * c_squared >= 0;
            if (!cand.slope_admissible)
                cand.excluded_by = "destabilization requires mu(E_1) >= mu(E)";
            else if (!cand.semistability_ok)
                cand.excluded_by = "excluded by mu-semistability of E_{C,L}";
            else
                rep.forced.emplace_back(r, a);
            rep.candidates.push_back(std::move(cand));
        }
    }

    std::ostringstream step3;
    step3 << "slope condition a*C^2/r >= C^2/4 forces a >= 1; "
          << "semistability condition (r - 3a)*C^2 >= 0 forces r >= 3a; "
          << "surviving pairs over the grid r in 1..3, a in 0..2:";
    for (const auto& [r, a] : rep.forced) step3 << " (r=" << r << ", a=" << a << ")";
    rep.steps.push_back(step3.str());

    rep.hypotheses = {
        "moduli dimension formula: a sheaf with v(F)^2 < -2 is not stable",
        "the quotient-side bundle E_{C,L} is mu-semistable",
        "mu-stability is taken with respect to the polarization class C, "
        "which is big and nef but not ample on a Nikulin surface",
        "the destabilizing subsheaf is locally free of rank <= 3 with "
        "torsion-free quotient",
    };
    return rep;
}

StabilityReport stability_obstruction_report(int genus) {
    if (genus != 9)
        throw std::invalid_argument(
            "stability_obstruction_report: only genus 9 is supported");
    return destabilization_chain(Rat(2 * genus - 2));
}

}  // namespace prym::lattice
