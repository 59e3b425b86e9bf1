#pragma once

#include "loja/medial.hpp"
#include "loja/zeroset.hpp"

namespace loja::fixtures {

/// Registered fixture tags: ex3_8, ex3_9, ex4_9 (parameter M), ex5_14,
/// ex5_16, ex5_18, ex6_4, ex6_6, prop6_circle, twopoint.
std::vector<std::string> tags();
bool has_tag(const std::string& tag);

struct FunctionPair {
    PiecewiseFn f;
    PiecewiseFn g;
    Domain domain;
};

/// f(x) = x with g(x) = 1/(1-x) patched to 1 at x = 1: g is unbounded near 1,
/// and f vanishes at 0 where g does not.
FunctionPair ex3_8();

/// f identically 0 with g = 0 on (0,1] but 1 at 0: the generalized zero sets
/// of both fill [0,1] while g(0) stays away from zero.
FunctionPair ex3_9();

/// Staircase pair on [0, M]: g(x) = x - floor(x) and f(x) = g(x)^floor(x)
/// (built as an M-branch piecewise function). No exponent works uniformly in
/// M.
FunctionPair ex4_9(int m_ceiling);

struct MultifunctionFixture {
    std::vector<PiecewiseFn> branches;
    Domain domain;
    int grid_per_axis = 0;
    SampledMultifunction build() const;
};

/// sqrt(x) on (0,4), the pair {2,1} at 4, and 5-x on (4,5).
MultifunctionFixture ex5_14();

/// {(x-2)^2, 1, 2} on [-1,4) and {1,2} on [4,6].
MultifunctionFixture ex5_16();

/// {x^2, x^2+1} on (-1,1]. The grid deliberately has no sample at 0, where
/// the value set would meet H(1) = {1,2} exactly.
MultifunctionFixture ex5_18();

struct ClosedSetFixture {
    ClosedSetSample X;
    Domain domain;
};

/// Two points {0,1} on the line; base point 1/4.
ClosedSetFixture ex6_4();

/// The origin plus the parabola arc y = -(x-1)^2, x in [1/2, 1]; pitch
/// controls the arc sampling.
ClosedSetFixture ex6_6(double arc_pitch = 0.05);

/// Unit circle sample in R^2.
ClosedSetFixture prop6_circle(int points = 720);

/// Points {(-1,0), (1,0)} in the plane.
ClosedSetFixture twopoint();

}  // namespace loja::fixtures
