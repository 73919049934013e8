#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <lndkit/automorphism.hpp>
#include <lndkit/polynomial.hpp>

namespace lnd {

inline constexpr unsigned kDefaultNilpotencyBound = 64;

// Bound used when a caller does not pass one: LNDKIT_NILPOTENCY_BOUND if set to
// a positive integer, kDefaultNilpotencyBound otherwise.
unsigned default_nilpotency_bound();

// A derivation of Q[vars], stored as the images of the generators. The value
// on an arbitrary polynomial follows from the Leibniz rule.
class Derivation {
public:
    // Zero derivation.
    explicit Derivation(VarSet vars);
    // Generators missing from `images` are sent to 0.
    Derivation(VarSet vars, const Bindings &images);

    const VarSet &vars() const { return vars_; }
    const MultiPoly &image(std::string_view var) const { return images_[vars_.index(var)]; }
    const std::vector<MultiPoly> &images() const { return images_; }

    MultiPoly apply(const MultiPoly &p) const;
    bool in_kernel(const MultiPoly &p) const { return apply(p).is_zero(); }

    // m*d; a derivation whenever m is a polynomial.
    Derivation scaled(const MultiPoly &m) const;
    // Same derivation on vars + {name}, with d(name) = 0.
    Derivation extended(std::string name) const;

    friend bool operator==(const Derivation &a, const Derivation &b) = default;

    // One "dv = ..." line per generator.
    std::string to_string() const;

private:
    VarSet vars_;
    std::vector<MultiPoly> images_;
};

struct NilpotencyCertificate {
    struct Entry {
        std::string generator;
        unsigned index;               // smallest n >= 1 with d^n(g) = 0
        std::vector<MultiPoly> chain; // d(g), d^2(g), ..., d^index(g) = 0
    };
    std::vector<Entry> entries; // in VarSet order

    unsigned index_of(std::string_view generator) const;
};

struct NotNilpotentWithinBound {
    std::string generator;
    unsigned bound;
    MultiPoly last_iterate;
};

using NilpotencyResult = std::variant<NilpotencyCertificate, NotNilpotentWithinBound>;

NilpotencyResult nilpotency_certificate(const Derivation &d, unsigned bound = default_nilpotency_bound());

class MultiplierNotInKernel : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NilpotencyBoundExceeded : public std::runtime_error {
public:
    explicit NilpotencyBoundExceeded(NotNilpotentWithinBound detail);
    const NotNilpotentWithinBound &detail() const { return detail_; }

private:
    NotNilpotentWithinBound detail_;
};

// exp(m*d) on generators: g -> sum_k m^k d^k(g) / k!. Requires d(m) = 0, which
// makes (m*d)^k = m^k d^k. Throws MultiplierNotInKernel or
// NilpotencyBoundExceeded.
PolyMap exponential(const Derivation &d, const MultiPoly &multiplier, unsigned bound = default_nilpotency_bound());

// exp(m*d)(h) = sum_k m^k d^k(h) / k! for an arbitrary polynomial h. Equals the
// pullback of h along exponential(d, m) without expanding a substitution.
MultiPoly apply_exponential(const Derivation &d, const MultiPoly &multiplier, const MultiPoly &h,
                            unsigned bound = default_nilpotency_bound());

// exp(m*d) with inverse exp(-m*d), both round trips checked on every
// generator through apply_exponential.
PolyAuto exponential_automorphism(const Derivation &d, const MultiPoly &multiplier,
                                  unsigned bound = default_nilpotency_bound());

// Formal composite f_1 o f_2 o ... o f_k in point-action order whose factors
// are explicit maps or exponentials exp(m*d). Components are computed by
// pulling a polynomial back through the factors one at a time, exponential
// factors through their series, so the large intermediate substitutions of a
// fully expanded product are never formed.
class MapWord {
public:
    explicit MapWord(VarSet vars) : vars_(std::move(vars)) {}

    // this o m
    MapWord &then(PolyMap m);
    // this o exp(m*d); m must be annihilated by d.
    MapWord &then_exponential(Derivation d, MultiPoly multiplier);

    const VarSet &vars() const { return vars_; }
    std::size_t size() const { return factors_.size(); }

    MultiPoly pullback(const MultiPoly &p) const;
    PolyMap evaluate() const;

private:
    struct Exponential {
        Derivation derivation;
        MultiPoly multiplier;
    };

    VarSet vars_;
    std::vector<std::variant<PolyMap, Exponential>> factors_;
};

// {m*d(g) : d(g) != 0}; their common zeros are the fixed points of exp(m*d).
std::vector<MultiPoly> fixed_ideal_generators(const Derivation &d, const MultiPoly &multiplier);

// Reads "dv = <expr>" lines (see parse_script); omitted generators map to 0.
struct DerivationFile {
    Derivation derivation;
    Bindings lets;
};
DerivationFile parse_derivation(std::string_view text);

} // namespace lnd
