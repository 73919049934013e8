#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <lndkit/polynomial.hpp>

namespace lnd {

// Polynomial endomorphism of affine space. components()[i] is the image of
// the i-th coordinate; as a ring map it sends vars[i] to that component.
class PolyMap {
public:
    static PolyMap identity(VarSet vars);
    // Missing variables map to themselves.
    PolyMap(VarSet vars, const Bindings &components);

    const VarSet &vars() const { return vars_; }
    const std::vector<MultiPoly> &components() const { return components_; }
    const MultiPoly &component(std::string_view var) const { return components_[vars_.index(var)]; }

    bool is_identity() const;
    // p o this, i.e. the pullback of p along the map.
    MultiPoly pullback(const MultiPoly &p) const;

    friend bool operator==(const PolyMap &a, const PolyMap &b) = default;

    // One "v' = ..." line per coordinate.
    std::string to_string() const;

private:
    PolyMap(VarSet vars, std::vector<MultiPoly> components);

    VarSet vars_;
    std::vector<MultiPoly> components_;

    friend PolyMap compose(const PolyMap &g, const PolyMap &h);
    friend PolyMap extend_variable(const PolyMap &m, const std::string &newvar);
};

// Point-action order: compose(g, h) applies h first, then g. Components are
// g's components with h's components substituted in.
PolyMap compose(const PolyMap &g, const PolyMap &h);

// m x id on vars + {newvar}.
PolyMap extend_variable(const PolyMap &m, const std::string &newvar);

// Automorphism with a two-sided inverse that has been checked exactly.
class PolyAuto {
public:
    const PolyMap &forward() const { return forward_; }
    const PolyMap &inverse_map() const { return inverse_; }
    const VarSet &vars() const { return forward_.vars(); }

    PolyAuto inverse() const { return PolyAuto(inverse_, forward_); }

    static PolyAuto identity(VarSet vars);

private:
    PolyAuto(PolyMap f, PolyMap i) : forward_(std::move(f)), inverse_(std::move(i)) {}

    PolyMap forward_;
    PolyMap inverse_;

    friend struct PolyAutoAccess;
};

struct NotInverse {
    std::string composition; // "g o h" or "h o g"
    std::string variable;
    MultiPoly component;     // the offending component (should equal the variable)
};

using InverseCheck = std::variant<PolyAuto, NotInverse>;

InverseCheck verify_inverse_pair(const PolyMap &g, const PolyMap &h);

class NotTriangular : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// vars[i] -> vars[i] + shifts[vars[i]], where each shift may only involve
// variables strictly earlier in the VarSet order. Throws NotTriangular.
PolyAuto make_triangular(const VarSet &vars, const Bindings &shifts);

// by^-1 o a o by.
PolyAuto conjugate(const PolyAuto &a, const PolyAuto &by);

// Composition of certified automorphisms; the inverses compose in reverse.
PolyAuto compose(const PolyAuto &g, const PolyAuto &h);

PolyAuto extend_variable(const PolyAuto &a, const std::string &newvar);

enum class TameVerdict {
    NoObstruction,     // leading components compatible with tameness
    WildnessCertified, // necessary condition for tameness fails
};

std::string_view to_string(TameVerdict v);

// Leading-component test for a C[x]-automorphism of C[x][y, z]. For the two
// fiber components of degrees d2, d3 (total degree in the fiber variables) and
// leading forms F2, F3, a tame automorphism must satisfy F_hi = c * F_lo^k with
// k = d_hi / d_lo and c a polynomial in the base variable alone.
struct TameObstructionReport {
    int d2 = 0;
    int d3 = 0;
    MultiPoly F2;
    MultiPoly F3;
    unsigned power = 0; // k; 0 if d_lo does not divide d_hi or degenerate
    // Both fiber components affine in the fiber variables; divisible is then
    // vacuously true.
    bool degenerate = false;
    bool divisible = false;
    std::optional<MultiPoly> witness; // c when divisible
    TameVerdict verdict = TameVerdict::NoObstruction;
};

class NotBaseAutomorphism : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

TameObstructionReport tame_obstruction(const PolyAuto &a, const std::string &base_var,
                                       std::span<const std::string> fiber_vars);

// Reads "v' = <expr>" lines (see parse_script); omitted coordinates are fixed.
PolyMap parse_map(std::string_view text);

} // namespace lnd
