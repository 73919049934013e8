#pragma once

#include <lndkit/automorphism.hpp>

namespace lnd {

// Construction of PolyAuto values by library code that has already certified
// the inverse relation.
struct PolyAutoAccess {
    static PolyAuto make(PolyMap f, PolyMap i) { return PolyAuto(std::move(f), std::move(i)); }
};

} // namespace lnd
