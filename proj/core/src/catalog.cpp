#include <lndkit/catalog.hpp>

#include <lndkit/parser.hpp>

namespace lnd::catalog {

VarSet xyz() { return VarSet{"x", "y", "z"}; }

VarSet xyzu() { return VarSet{"x", "y", "z", "u"}; }

MultiPoly f_poly(const VarSet &vars) { return parse("x*z - y^2", vars); }

MultiPoly surface_poly(const VarSet &vars)
{
    Bindings lets;
    lets.emplace("f", f_poly(vars));
    return parse("x*y - (f + 1)*(f + 4)", vars, lets);
}

MultiPoly displayed_quartic(const VarSet &vars)
{
    return parse("x*(x*z^2 - 2*y^2*z + 5*z) + y^4 - 5*y^2 + 4", vars);
}

Derivation surface_derivation(const VarSet &vars)
{
    Bindings images;
    images.emplace("y", parse("x*(2*x*z - 2*y^2 + 5)", vars));
    images.emplace("z", parse("x + 2*y*(2*x*z - 2*y^2 + 5)", vars));
    return Derivation(vars, images);
}

MultiPoly nagata_invariant(const VarSet &vars) { return parse("x*z + y^2", vars); }

Derivation nagata_base_derivation(const VarSet &vars)
{
    Bindings images;
    images.emplace("y", parse("x", vars));
    images.emplace("z", parse("-2*y", vars));
    return Derivation(vars, images);
}

Derivation nagata_derivation(const VarSet &vars)
{
    return nagata_base_derivation(vars).scaled(nagata_invariant(vars));
}

PolyMap nagata_map_displayed(const VarSet &vars)
{
    Bindings comps;
    comps.emplace("y", parse("y + x*(x*z + y^2)", vars));
    comps.emplace("z", parse("z - 2*y*(x*z + y^2) - x*(x*z + y^2)^2", vars));
    return PolyMap(vars, comps);
}

Bindings surface_lets(const VarSet &vars)
{
    Bindings lets;
    lets.emplace("f", f_poly(vars));
    lets.emplace("P", surface_poly(vars));
    return lets;
}

MultiPoly displayed_phi_y(const VarSet &vars) { return parse(kDisplayedPhiY, vars, surface_lets(vars)); }

MultiPoly displayed_phi_z(const VarSet &vars) { return parse(kDisplayedPhiZ, vars, surface_lets(vars)); }

} // namespace lnd::catalog
