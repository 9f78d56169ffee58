#ifndef FEC_SELFTEST_HPP
#define FEC_SELFTEST_HPP

#include <string>
#include <vector>

namespace fec {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Fast oracle/invariant battery (seconds): field axioms, algebraic decoding,
// path-metric duality, soft-output identities, construction validity,
// channel statistics.
std::vector<CheckResult> run_selftests();

} // namespace fec

#endif
