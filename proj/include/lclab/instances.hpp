#pragma once

#include "lclab/space.hpp"

namespace lclab {

// Pinned special enumerations.
//
// discrete-z: 0, 1, -1, 2, -2, ...
BigInt discrete_value(int id);
int discrete_index(const BigInt& v);

// reals: rationals; index 0 is 0, odd indices walk the positive
// Calkin-Wilf tree in heap order, even indices their negatives.
// Rationals whose tree path is too deep for a machine index are mapped
// to surrogate ids on first use (internal renaming only).
Rational reals_value(const Space& sp, int id);
int reals_index(const Space& sp, const Rational& q);

// z2: dyadic integers; special id k is the natural number k read as an
// LSB-first eventually-zero digit string.

const Space& discrete_z_space();
const Space& reals_space();
const Space& z2_space();

}  // namespace lclab
