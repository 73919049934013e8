#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <lndkit/derivation.hpp>
#include <lndkit/laurent.hpp>
#include <lndkit/polynomial.hpp>

namespace lnd::danielewski {

// The surface S = {P = 0} in Q[x,y,z] with P = x*y - (f+1)*(f+4), f = x*z - y^2,
// its invariant derivation, and the quartic exactly as it is usually printed.
struct SurfaceData {
    MultiPoly f;
    MultiPoly P;
    MultiPoly displayed;
    Derivation derivation;
};

// Builds the data and checks P == x*y - (f+1)*(f+4), d(P) == 0 and
// displayed == (f+1)*(f+4); throws std::logic_error otherwise.
SurfaceData canonical_surface();

// The printed quartic is (f+1)(f+4) = x*y - P, which the derivation does not
// annihilate.
struct DisplayDiscrepancy {
    MultiPoly displayed;
    MultiPoly x_y_minus_P;       // x*y - P
    MultiPoly derivation_image;  // d(displayed), equals x^2*(2f+5)
    bool displayed_is_x_y_minus_P;
    bool annihilated;
};
DisplayDiscrepancy display_discrepancy(const SurfaceData &s);

struct FiberLine {
    Rational root; // the line {base = a, line_var = root}
    unsigned multiplicity;
};

// Special fiber of a surface over a point of the base whose equation restricts
// to a univariate polynomial in `line_var`. Roots that are not rational stay in
// `unfactored`.
struct SplitFiber {
    std::string line_var;
    std::vector<FiberLine> lines; // ascending roots
    MultiPoly unfactored;         // nonzero constant when the fiber splits completely
    bool univariate = true;       // false if the restriction involves other variables

    bool reduced() const;
    bool fully_split() const { return univariate && unfactored.is_constant(); }
    // unfactored * prod (line_var - root)^multiplicity
    MultiPoly reconstruct() const;
};

SplitFiber split_fiber(const MultiPoly &equation, const std::string &base_var, const Rational &at,
                       const std::string &line_var);

// pr_x^-1(a) for a != 0: an affine line with coordinate f.
struct GenericLine {
    bool parametrization_verified;
};

struct FiberDecomposition {
    Rational base_value;
    std::variant<SplitFiber, GenericLine> shape;
};

FiberDecomposition fiber_over(const SurfaceData &s, const Rational &a);

// Sample grid used when checking generic fibers without explicit samples.
std::vector<Rational> default_fiber_samples();

// For each sample f0 sets y = (f0+1)(f0+4)/a, z = (f0 + y^2)/a and checks that P
// vanishes there. Throws std::invalid_argument for a == 0.
bool generic_fiber_check(const SurfaceData &s, const Rational &a, std::span<const Rational> samples);

// Two-step reduction of each derivation image: substitute base_var -> 0, then
// take the remainder modulo `modulus` (a polynomial in line_var only).
struct FixedLocusReport {
    struct Entry {
        std::string generator;
        MultiPoly image;
        MultiPoly at_base_zero;
        MultiPoly remainder;
    };
    std::vector<Entry> entries; // generators with nonzero image only

    // True iff every image reduces to zero, i.e. d(ring) lies in the ideal.
    bool contained() const;
};

FixedLocusReport fixed_locus_report(const Derivation &d, const std::string &base_var, const std::string &line_var,
                                    const MultiPoly &modulus);
// Ideal (x, 2*y^2 - 5).
FixedLocusReport fixed_locus_report(const Derivation &d);

// Transition functions g(a, b) = x^-shift * (sigma_b - sigma_a) between the
// charts of the multi-origin line, one chart per label.
struct CocycleData {
    std::vector<int> labels;
    unsigned shift;
    std::map<int, MultiPoly> sigma;
    std::map<std::pair<int, int>, LaurentPoly> g;

    const LaurentPoly &transition(int a, int b) const { return g.at({a, b}); }
};

CocycleData cocycle_from_sigma(std::vector<int> labels, std::map<int, MultiPoly> sigma, unsigned shift);

// Labels {1, -1, 2, -2} with sigma_a = a^2 + (-1)^|a| (a/3) x and shift 2. Each
// transition is cross-checked against displayed_transition.
CocycleData build_cocycle();

// x^-2 ((b^2 - a^2) + (x/3)((-1)^|b| b - (-1)^|a| a)), evaluated directly.
LaurentPoly displayed_transition(int a, int b);

// Weighted-tree labelling sigma_1 = 1 + x/3, sigma_-1 = 1 - x/3,
// sigma_2 = 4 + 2x/3, sigma_-2 = 4 - 2x/3 as drawn next to the tree.
std::map<int, MultiPoly> tree_sigma();

bool antisymmetric(const CocycleData &c);
bool satisfies_cocycle_identity(const CocycleData &c);

// Values of g_a = y/(f+4) (a = +-1) or y/(f+1) (a = +-2) on the line C_a,
// i.e. at x = 0, y = a.
std::map<int, Rational> component_values(const SurfaceData &s);

// Search for a function x^n u_a + P_a(x) in every chart that glues to a global
// function whose constants P_a(0) separate the charts.
struct ChartObstruction {
    enum class Kind { NotPolynomial, ConstantsCollide };
    unsigned n;
    Kind kind;
    int a;
    int b;
    // P_b(0) - P_{labels[0]}(0) forced by the gluing, per label (empty for
    // NotPolynomial).
    std::map<int, Rational> offsets;
    std::string detail;
};

struct NoSolution {
    std::vector<ChartObstruction> per_n; // one entry per n = 1..max_n
};

struct Solution {
    unsigned n;
    std::map<int, MultiPoly> P; // with P_{labels[0]} = 0
};

using DistinguishingResult = std::variant<NoSolution, Solution>;

DistinguishingResult distinguishing_function_search(const CocycleData &c, unsigned max_n);

} // namespace lnd::danielewski
