#pragma once

#include "vflie/error.hpp"

#include <string>
#include <utility>
#include <vector>

namespace vflie {

struct LatticePoint {
    long a = 0;
    long b = 0;
    auto operator<=>(const LatticePoint&) const = default;
    LatticePoint operator+(const LatticePoint& o) const { return {a + o.a, b + o.b}; }
    LatticePoint operator-(const LatticePoint& o) const { return {a - o.a, b - o.b}; }
};

// The pair (d, e) of the quotient surface X_{d,e}, with e' the modular
// inverse of e mod d normalized to [1, d).
struct LatticeParams {
    int d;
    int e;
    int e_prime;

    // u = (-1, e), v = (e', -1): the two distinguished Demazure roots.
    LatticePoint u() const { return {-1, e}; }
    LatticePoint v() const { return {e_prime, -1}; }
    LatticePoint base() const { return {e_prime - 1, e - 1}; }
    bool ee_prime_is_d_plus_1() const { return static_cast<long>(e) * e_prime == d + 1; }
};

LatticeParams make_params(int d, int e);

// ae + b = 0 mod d, a >= 0, b >= 0, a + b > 0.
bool in_Lambda(const LatticeParams& params, const LatticePoint& p);
// Congruence and a, b >= -1, (a,b) != (-1,-1).
bool in_Lambda_hat(const LatticeParams& params, const LatticePoint& p);
// Lambda_hat minus {(-1,e), (e',-1), (0,0)}.
bool in_lambda_small(const LatticeParams& params, const LatticePoint& p);

// f(a,b) = (ae+b) + (a+be') = (e+1)a + (e'+1)b; requires p in Lambda.
long f_value(const LatticeParams& params, const LatticePoint& p);

// (n, m) with (a,b) = n u + m v; requires p in Lambda and ee' = d + 1.
std::pair<long, long> nm_solution(const LatticeParams& params, const LatticePoint& p);

struct PathStep {
    char dir;      // 'u' or 'v'
    long mult;     // >= 1
};

struct LatticePath {
    LatticePoint start; // always (e'-1, e-1)
    std::vector<PathStep> steps;
    LatticePoint end;

    std::string to_json() const;
};

// Greedy decomposition of Prop-style lattice paths: walks from the f-minimum
// (e'-1, e-1) to p by u = (-1,e) and v = (e',-1) steps, every partial sum
// staying inside the monoid. Requires p in Lambda, ee' = d+1 and e > 1.
LatticePath decompose_path(const LatticeParams& params, const LatticePoint& p);

struct MonoidIdealReport {
    bool holds;
    std::vector<std::pair<LatticePoint, LatticePoint>> violations;
};

// Exhaustive check of (Lambda_hat + lambda) cap Lambda_hat subset lambda
// over the box [-1, box_bound]^2.
MonoidIdealReport monoid_ideal_check(const LatticeParams& params, int box_bound);

struct DemazureRoots {
    std::vector<LatticePoint> plus;  // (-1, e + kd)
    std::vector<LatticePoint> minus; // (e' + ld, -1)
};

DemazureRoots demazure_roots(const LatticeParams& params, int count);

} // namespace vflie
