#include "vflie/lattice.hpp"

#include <numeric>
#include <sstream>

namespace vflie {

namespace {

long mod_d(long x, int d) {
    long r = x % d;
    return r < 0 ? r + d : r;
}

bool congruent(const LatticeParams& params, const LatticePoint& p) {
    return mod_d(p.a * params.e + p.b, params.d) == 0;
}

} // namespace

LatticeParams make_params(int d, int e) {
    if (d <= 1) throw DomainError("make_params: d must be > 1");
    if (e < 1 || e >= d) throw DomainError("make_params: need 1 <= e < d");
    if (std::gcd(d, e) != 1) throw DomainError("make_params: gcd(d, e) must be 1");
    int e_prime = 0;
    for (int c = 1; c < d; ++c) {
        if ((static_cast<long>(c) * e) % d == 1) {
            e_prime = c;
            break;
        }
    }
    return {d, e, e_prime};
}

bool in_Lambda(const LatticeParams& params, const LatticePoint& p) {
    return p.a >= 0 && p.b >= 0 && p.a + p.b > 0 && congruent(params, p);
}

bool in_Lambda_hat(const LatticeParams& params, const LatticePoint& p) {
    if (p.a < -1 || p.b < -1) return false;
    if (p.a == -1 && p.b == -1) return false;
    return congruent(params, p);
}

bool in_lambda_small(const LatticeParams& params, const LatticePoint& p) {
    if (!in_Lambda_hat(params, p)) return false;
    if (p == LatticePoint{-1, params.e}) return false;
    if (p == LatticePoint{params.e_prime, -1}) return false;
    if (p == LatticePoint{0, 0}) return false;
    return true;
}

long f_value(const LatticeParams& params, const LatticePoint& p) {
    if (!in_Lambda(params, p)) throw DomainError("f_value: point not in Lambda");
    return (params.e + 1) * p.a + (params.e_prime + 1) * p.b;
}

std::pair<long, long> nm_solution(const LatticeParams& params, const LatticePoint& p) {
    if (!params.ee_prime_is_d_plus_1())
        throw DomainError("nm_solution: requires e*e' = d + 1");
    if (!in_Lambda(params, p)) throw DomainError("nm_solution: point not in Lambda");
    long n = (p.a + p.b * params.e_prime) / params.d;
    long m = (p.a * params.e + p.b) / params.d;
    return {n, m};
}

LatticePath decompose_path(const LatticeParams& params, const LatticePoint& p) {
    if (!params.ee_prime_is_d_plus_1())
        throw DomainError("decompose_path: requires e*e' = d + 1");
    if (params.e <= 1)
        throw DomainError("decompose_path: requires e > 1 (Veronese regime is separate)");
    if (!in_Lambda(params, p)) throw DomainError("decompose_path: point not in Lambda");

    LatticePath path;
    path.start = params.base();
    path.end = p;

    // Greedy reduction toward the f-minimum; v-direction first on ties.
    std::vector<PathStep> reversed;
    LatticePoint cur = p;
    while (cur != params.base()) {
        if (cur.a >= params.e_prime) {
            long rho = cur.a / params.e_prime;
            reversed.push_back({'v', rho});
            cur = {cur.a - rho * params.e_prime, cur.b + rho};
        } else if (cur.b >= params.e) {
            long eta = cur.b / params.e;
            reversed.push_back({'u', eta});
            cur = {cur.a + eta, cur.b - eta * params.e};
        } else {
            // a < e' and b < e happens only at the base point.
            throw DomainError("decompose_path: reduction stalled (regime violation)");
        }
        if (!in_Lambda(params, cur))
            throw DomainError("decompose_path: left the monoid");
    }
    path.steps.assign(reversed.rbegin(), reversed.rend());
    return path;
}

std::string LatticePath::to_json() const {
    std::ostringstream out;
    out << "{\"start\":[" << start.a << "," << start.b << "],\"steps\":[";
    for (size_t i = 0; i < steps.size(); ++i) {
        if (i) out << ",";
        out << "{\"dir\":\"" << steps[i].dir << "\",\"mult\":" << steps[i].mult << "}";
    }
    out << "],\"end\":[" << end.a << "," << end.b << "]}";
    return out.str();
}

MonoidIdealReport monoid_ideal_check(const LatticeParams& params, int box_bound) {
    if (box_bound < params.d) throw DomainError("monoid_ideal_check: box_bound must be >= d");
    MonoidIdealReport report{true, {}};
    std::vector<LatticePoint> hat, small;
    for (long a = -1; a <= box_bound; ++a) {
        for (long b = -1; b <= box_bound; ++b) {
            LatticePoint p{a, b};
            if (in_Lambda_hat(params, p)) {
                hat.push_back(p);
                if (in_lambda_small(params, p)) small.push_back(p);
            }
        }
    }
    for (const auto& h : hat) {
        for (const auto& s : small) {
            LatticePoint sum = h + s;
            if (in_Lambda_hat(params, sum) && !in_lambda_small(params, sum)) {
                report.holds = false;
                report.violations.emplace_back(h, s);
            }
        }
    }
    return report;
}

DemazureRoots demazure_roots(const LatticeParams& params, int count) {
    if (count < 1) throw DomainError("demazure_roots: count must be >= 1");
    DemazureRoots roots;
    for (int k = 0; k < count; ++k) {
        roots.plus.push_back({-1, params.e + static_cast<long>(k) * params.d});
        roots.minus.push_back({params.e_prime + static_cast<long>(k) * params.d, -1});
    }
    return roots;
}

} // namespace vflie
