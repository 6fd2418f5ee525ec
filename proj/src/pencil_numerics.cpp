#include <prym/pencil_numerics.hpp>

namespace prym::pencil {

PencilSpec twelve_nodal_octic_pencil() {
    return PencilSpec{9, 8, BlowupSurface::plane_blowup(12 + 8 + 8)};
}

long plane_curve_genus(long d, long nodes) {
    if (d < 1) throw std::invalid_argument("plane_curve_genus: degree must be >= 1");
    long arithmetic = (d - 1) * (d - 2) / 2;
    if (nodes < 0 || nodes > arithmetic)
        throw std::invalid_argument("plane_curve_genus: node count out of range");
    return arithmetic - nodes;
}

LinearSystemDim expected_dim_linear_system(long d, const std::vector<long>& multiplicities) {
    if (d < 1)
        throw std::invalid_argument("expected_dim_linear_system: degree must be >= 1");
    long dim = d * (d + 3) / 2;
    for (long m : multiplicities) {
        if (m < 1)
            throw std::invalid_argument(
                "expected_dim_linear_system: multiplicities must be >= 1");
        dim -= m * (m + 1) / 2;
    }
    return LinearSystemDim{dim, dim < 0};
}

long brill_noether_rho(long g, long r, long d) { return g - (r + 1) * (g - d + r); }

Int castelnuovo_number(long g, long r, long d) {
    if (g < 1 || r < 0 || d < 1)
        throw std::invalid_argument("castelnuovo_number: bad parameters");
    if (brill_noether_rho(g, r, d) != 0)
        throw std::invalid_argument("castelnuovo_number: requires rho(g, r, d) = 0");
    auto factorial = [](long n) {
        Int f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
        return f;
    };
    Int num = factorial(g);
    Int den = 1;
    for (long i = 0; i <= r; ++i) {
        num *= factorial(i);
        den *= factorial(g - d + r + i);
    }
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0)
        throw std::logic_error("castelnuovo_number: non-integral quotient");
    return q;
}

long noether_c2(const BlowupSurface& surface) {
    return 12L * surface.chi_o - surface.k_squared;
}

CurveClass sweeping_pencil_class(const PencilSpec& spec) {
    const int g = spec.fiber_genus;
    if (g < 0) throw std::invalid_argument("sweeping_pencil_class: negative genus");
    if (spec.tangency_base_points < 0)
        throw std::invalid_argument("sweeping_pencil_class: negative tangency count");
    long lambda = spec.surface.chi_o + g - 1;
    long total_boundary = noether_c2(spec.surface) + 4L * (g - 1);
    long ram = spec.tangency_base_points;
    long delta0p = total_boundary - 2 * ram;
    if (delta0p < 0)
        throw std::runtime_error("sweeping_pencil_class: inconsistent pencil data "
                                 "(negative delta_0' intersection)");
    CurveClass c{PrymBasis(g)};
    c.set_pairing("lambda", lambda);
    c.set_pairing("delta_0'", delta0p);
    c.set_pairing("delta_0^ram", ram);
    return c;
}

CurveClass nikulin_pencil(int g) {
    CurveClass c{PrymBasis(g)};  // throws for g < 2
    c.set_pairing("lambda", g + 1);
    c.set_pairing("delta_0'", 6 * g + 2);
    c.set_pairing("delta_0^ram", 8);
    return c;
}

CurveClass k3_pencil(int g) {
    CurveClass c{PrymBasis(g)};
    Int two_2g = Int(1) << (2 * g);
    Int two_2g1 = Int(1) << (2 * g - 1);
    Int two_2g2 = Int(1) << (2 * g - 2);
    Int count = 6 * g + 18;
    c.set_pairing("lambda", Rat((g + 1) * (two_2g - 1)));
    c.set_pairing("delta_0'", Rat(count * (two_2g1 - 2)));
    c.set_pairing("delta_0''", Rat(count));
    c.set_pairing("delta_0^ram", Rat(count * two_2g2));
    return c;
}

Rat delta0pp_sweep_pairing(int g, const Rat& b0pp, const Rat& b1) {
    if (g < 2) throw std::invalid_argument("delta0pp_sweep_pairing: genus must be >= 2");
    return Rat(2 * g - 2) * b0pp - b1;
}

long reducible_locus_codim() {
    long ambient = expected_dim_linear_system(8, std::vector<long>(12, 2)).dim;
    long quartics = expected_dim_linear_system(4, std::vector<long>(12, 1)).dim;
    // Worst reducible family: two quartic halves moving independently.
    return ambient - 2 * quartics;
}

std::vector<CurveRow> test_curve_table() {
    return {
        {"R", sweeping_pencil_class(twelve_nodal_octic_pencil())},
        {"Xi_9", nikulin_pencil(9)},
        {"A", k3_pencil(9)},
    };
}

}  // namespace prym::pencil
