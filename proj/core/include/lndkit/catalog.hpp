#pragma once

// Reference polynomials, derivations and maps for the surface
// x*y - (f+1)*(f+4) = 0, f = x*z - y^2, and for Nagata's automorphism.
// Every builder takes the ambient VarSet so the same data can be placed in
// Q[x,y,z] or Q[x,y,z,u]; the VarSet must contain x, y and z.

#include <string_view>

#include <lndkit/automorphism.hpp>
#include <lndkit/derivation.hpp>
#include <lndkit/polynomial.hpp>

namespace lnd::catalog {

VarSet xyz();
VarSet xyzu();

MultiPoly f_poly(const VarSet &vars);         // x*z - y^2
MultiPoly surface_poly(const VarSet &vars);   // P = x*y - (f+1)*(f+4)
MultiPoly displayed_quartic(const VarSet &vars); // x*(x*z^2 - 2*y^2*z + 5*z) + y^4 - 5*y^2 + 4

// x*(2*x*z - 2*y^2 + 5) d/dy + (x + 2*y*(2*x*z - 2*y^2 + 5)) d/dz
Derivation surface_derivation(const VarSet &vars);

MultiPoly nagata_invariant(const VarSet &vars);        // x*z + y^2
Derivation nagata_base_derivation(const VarSet &vars); // x d/dy - 2*y d/dz
Derivation nagata_derivation(const VarSet &vars);      // (x*z + y^2)(x d/dy - 2*y d/dz)

// (x, y + x*(x*z+y^2), z - 2*y*(x*z+y^2) - x*(x*z+y^2)^2) as printed.
PolyMap nagata_map_displayed(const VarSet &vars);

// {f, P} for use as let-bindings when parsing.
Bindings surface_lets(const VarSet &vars);

// The wild automorphism's components exactly as printed alongside the proof,
// written in f and P.
inline constexpr std::string_view kDisplayedPhiY = "y + x*(2*f + 5)*P + x^3*P^2";
inline constexpr std::string_view kDisplayedPhiZ =
    "z + 2*P*(2*f + 5)*y + x*P^2*(2*x*y + 2*f + 5)^2 + 2*x^3*P^3*(2*f + 5) + x^5*P^4";

MultiPoly displayed_phi_y(const VarSet &vars);
MultiPoly displayed_phi_z(const VarSet &vars);

} // namespace lnd::catalog
