#pragma once

#include <string>

namespace fsind {

struct VerifyStats {
    long cocycle_files = 0;  // .cocyc instances checked
    long random_cochains = 0;
    long ty_instances = 0;
};

/// Runs the full invariant suite: every .cocyc file in `dir` (pointed and
/// twisted-double invariants, dual-path totals), a deterministic batch of
/// random 2-cochains (coboundary and Eilenberg-MacLane properties), and
/// the Tambara-Yamagami desk grid. Throws input_error on unusable corpus
/// data and integrity_error on any violated invariant.
VerifyStats verify_corpus(const std::string& dir);

/// verify_corpus plus a human-readable summary.
std::string verify_corpus_report(const std::string& dir);

} // namespace fsind
