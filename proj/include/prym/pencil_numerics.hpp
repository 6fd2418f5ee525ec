// Intersection vectors of the test curves used in the genus-9 uniruledness
// argument, together with the supporting plane-geometry counts: genus of a
// nodal plane curve, expected dimensions of linear systems through fat
// points, the zero-rho linear-series count, and Noether's formula on a
// blown-up rational surface.
#pragma once

#include <prym/divisor_algebra.hpp>
#include <prym/rational.hpp>

#include <vector>

namespace prym::pencil {

// A rational surface obtained from the plane by blow-ups (possibly at
// infinitely near points); each monoidal transform drops K^2 by one.
struct BlowupSurface {
    int chi_o = 1;   // holomorphic Euler characteristic
    long k_squared;  // self-intersection of the canonical class
    int blowup_count = 0;

    static BlowupSurface plane_blowup(int n) { return {1, 9 - n, n}; }
};

// Data of a pencil of curves on a blow-up surface, fibered over P^1 after
// resolving the base locus. tangency_base_points counts base points where
// all members share a tangent direction; each contributes one member whose
// Prym structure degenerates at the node.
struct PencilSpec {
    int fiber_genus;
    int tangency_base_points;
    BlowupSurface surface;
};

// The sweeping pencil of the genus-9 construction: octics with 12 assigned
// nodes, 8 tangency base points, blown up at 12 + 8 + 8 points (nodes,
// tangency points, tangent directions), so K^2 = 9 - 28 = -19.
//
// Construction data recorded for reference, not computed here: 12 general
// plane points arise as the rank-<=1 locus of a 2x3 matrix of general
// quadratic forms, the quartics through them give a regular degree-4 cover
// of the plane, and the pencil is spanned by two octics, nodal at the 12
// points, that are tangent to each other at the 8 base points (both carry
// the same residual 2-torsion twist, which is what lifts the pencil to the
// Prym moduli space).
PencilSpec twelve_nodal_octic_pencil();

// (d-1)(d-2)/2 - nodes.
long plane_curve_genus(long d, long nodes);

struct LinearSystemDim {
    long dim;
    bool expected_empty;  // dim < 0: the system is expected to be empty
};

// Virtual dimension d(d+3)/2 - sum m_i(m_i+1)/2 of plane curves of degree d
// with assigned multiplicities at general points. Assumes general position;
// negative values are allowed and flagged.
LinearSystemDim expected_dim_linear_system(long d, const std::vector<long>& multiplicities);

long brill_noether_rho(long g, long r, long d);

// Number of linear series of type (r, d) on a general curve of genus g when
// rho(g, r, d) = 0:  g! * prod_{i=0..r} i! / (g-d+r+i)!.
// Input error when rho != 0.
Int castelnuovo_number(long g, long r, long d);

// c_2 = 12*chi(O) - K^2.
long noether_c2(const BlowupSurface& surface);

// Intersection vector of the pencil described by `spec`:
//   lambda:      chi(O) + g - 1
//   total delta: c_2 + 4(g-1)  (= delta_0' + delta_0'' + 2*delta_0^ram)
//   delta_0^ram: tangency_base_points,  delta_0'': 0,
//   delta_0':    total - 2*ram, all higher deltas 0.
// Throws if the data would force a negative delta_0'.
CurveClass sweeping_pencil_class(const PencilSpec& spec);

// Lefschetz pencil of Prym curves on a general polarized Nikulin surface:
// (g+1, 6g+2, 0, 8) on the core labels, zero elsewhere.
CurveClass nikulin_pencil(int g);

// Lefschetz pencil on a general K3 surface, lifted to the Prym moduli space
// through every nonzero 2-torsion point of the fibers:
//   lambda       (g+1)(2^{2g}-1)
//   delta_0'     (6g+18)(2^{2g-1}-2)
//   delta_0''    6g+18
//   delta_0^ram  (6g+18)*2^{2g-2}.
CurveClass k3_pencil(int g);

// Intersection of the curve sweeping the delta_0'' boundary (attach a moving
// point of a fixed genus g-1 curve to a marked point) with a divisor
// a*lambda - b0'*delta_0' - b0''*delta_0'' - ... :  (2g-2)*b0'' - b1.
Rat delta0pp_sweep_pairing(int g, const Rat& b0pp, const Rat& b1);

// Codimension of the locus of reducible members inside the 8-dimensional
// system of 12-nodal octics: 8 - 2*dim|quartics through the 12 points| = 4.
long reducible_locus_codim();

struct CurveRow {
    std::string name;
    CurveClass cls;
};

// The three genus-9 test curves (sweeping pencil R, Nikulin pencil Xi_9,
// K3 pencil A) as table rows.
std::vector<CurveRow> test_curve_table();

}  // namespace prym::pencil
