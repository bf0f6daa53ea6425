#ifndef FPKZ_SELFTEST_HPP
#define FPKZ_SELFTEST_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "fpkz/instance.hpp"

namespace fpkz::selftest {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// The standard instance grid: p in {5,7,11,13,17,19}, q in {2,3,5} with
// q < p, n in {2,3,4}, every weight vector with 0 < m_i < q.
std::vector<KzInstance> standard_sweep();

// Runs the full verification grid, printing one pass/fail line per
// criterion to `log`.  Returns the per-criterion results.
std::vector<CriterionResult> run_all(std::ostream& log);

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace fpkz::selftest

#endif
