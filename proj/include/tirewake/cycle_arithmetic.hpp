#pragma once

#include <cstdint>

#include "tirewake/errors.hpp"

namespace tirewake {

/// All slot and cycle arithmetic runs on signed 64-bit integers.
/// Overflow throws OverflowError instead of wrapping.
using Slots = std::int64_t;

Slots checked_add(Slots a, Slots b);
Slots checked_mul(Slots a, Slots b);

/// gcd(a, b) for a, b >= 1.
Slots gcd(Slots a, Slots b);

/// g = alpha*a + beta*b with g = gcd(a, b). Any coefficient pair satisfying
/// the identity is a valid result; callers must not rely on a canonical one.
struct BezoutTriple {
    Slots g;
    Slots alpha;
    Slots beta;
};

BezoutTriple bezout(Slots a, Slots b);

/// Minimal solution of  n + c_min*C_L = W + n_sleep_min*(W+S).
///
/// c_min is the number of whole sensor duty-cycles the arrival waits before
/// landing on a wake slot, n_sleep_min the number of whole wakeup-sleep
/// cycles elapsed by then.
struct MinCycleSolution {
    Slots c_min;
    Slots n_sleep_min;
};

/// Least non-negative solution, found by scanning k = 0 .. W+S-1 for
/// (n + k*C_L - W) = 0 (mod W+S). Requires w == 1 (the analytic regime;
/// general W is handled by the exhaustive oracle). Throws NotFiniteError
/// when no k works, InvalidPhaseError when n is outside 1..C_L.
MinCycleSolution solve_min_cycles(Slots n, Slots c_l, Slots w, Slots s);

} // namespace tirewake
