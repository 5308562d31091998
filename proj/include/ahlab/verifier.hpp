#pragma once

#include "ahlab/artin_hasse.hpp"
#include "ahlab/bernoulli_poly.hpp"
#include "ahlab/check.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ahlab {

// Stable identifiers of every check, in report order.
const std::vector<std::string>& check_registry();
bool is_known_check(const std::string& name);

// Even-sum identity: sum_r (-1)^r a_{rp} a_{(k-r)p} equals (-1)^j when
// k = j(p-1) and 0 otherwise, for 0 <= k <= kmax < p^2 - 1.
CheckResult verify_prop_even(const AHTable& table, std::uint32_t kmax);

// The odd-k recursion sum_r (-1)^r r a_{rp} a_{(k-r)p} = B_{p-k}/k for
// 1 < k < p, plus the k = 1 boundary (-a_p = w_p) and the k = p-1
// identity (= -B_1). A violation at odd k is a refuted-instance (a
// finding about the open case); at even k it is a fail (contradicts a
// proved result).
CheckResult verify_conjecture_numeric(const AHTable& table);

// The four equivalent truncated-series forms mod X^p:
//   (A) X G'(X) G(-X)        = w_p X - gamma(X)
//   (B) X G'(X) / G(X)       = w_p X - gamma(X)
//   (C) X d/dX pound1(G(X))  = -w_p X + gamma(X)
//   (D) pound1(G(X))         = -w_p X - rho(X)
// All four must agree in outcome.
CheckResult verify_conjecture_poly_forms(const AHTable& table);

struct RunConfig {
    std::uint32_t pmin = 3;
    std::uint32_t pmax = 13;
    std::vector<std::string> checks; // empty = all registry checks
    std::uint32_t max_n = 0;         // 0 = per-check automatic depth
    std::uint32_t kmax = 200;
    // Nielsen x-range; when unset the default is [-3p^2, 3p^2] per prime.
    bool have_xrange = false;
    std::int64_t xmin = 0;
    std::int64_t xmax = 0;
    std::uint64_t seed = 0;
    std::uint32_t trials = 20;
    std::uint32_t parallel = 1;

    json echo() const;
};

// Runs the selected checks for every prime in [pmin, pmax]. Deterministic
// given identical config and seed; a single check's failure never aborts
// the sweep.
VerificationReport run_all(const RunConfig& config);

} // namespace ahlab
