#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fqs {

/// Outcome of one acceptance criterion.
struct CriterionResult {
    std::string id;
    std::string title;
    bool pass = false;
    std::vector<std::string> details;  // one line per failed (or notable) check
    double millis = 0.0;               // reported on the log stream only
};

struct ReproduceReport {
    std::vector<CriterionResult> criteria;
    bool all_pass = false;
};

/// Criterion identifiers in execution order.
const std::vector<std::string>& reproduce_criterion_ids();

/// Runs the acceptance suite and writes deterministic artifacts under
/// out_dir/run_a (and out_dir/run_b when the determinism criterion is
/// selected; that criterion byte-compares the two trees).  `only` empty
/// selects every criterion; unknown ids throw std::invalid_argument.
/// Progress lines with timings go to `log`; no file content depends on
/// timing.
ReproduceReport run_reproduce(const std::string& out_dir,
                              const std::vector<std::string>& only,
                              std::ostream& log);

}  // namespace fqs
