#ifndef HP0_REPORT_HPP
#define HP0_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hp0/gale_frame.hpp"

namespace hp0 {

struct RunOptions {
  int d_max = 12;
  std::uint64_t seed = 0;
  bool paper_degrees = false;  // double the reported degree labels
  int threads = 0;
  int oracle_n_limit = 4;  // invariant-ring cross-check runs when n <= limit
  int sheaf_n_limit = 5;   // sheaf axiom checks run when n <= limit
  int sheaf_d_max = 8;
};

/// One JSON document for each CLI command; strings are serialized
/// nlohmann::ordered_json so identical inputs give identical bytes.
std::string circuits_json(const GaleFrame& frame, const RunOptions& opt);
std::string hilbert_json(const GaleFrame& frame, const RunOptions& opt);
std::string betti_json(const GaleFrame& frame, const RunOptions& opt);
std::string degeneration_json(const GaleFrame& frame, const RunOptions& opt);
std::string fiber_json(const GaleFrame& frame, const std::vector<std::string>& lambda,
                       const RunOptions& opt);
std::string flats_json(const GaleFrame& frame, const RunOptions& opt);
std::string sheaf_json(const GaleFrame& frame, const RunOptions& opt);

struct ReportResult {
  std::string json;
  bool all_ok = false;  // every verified identity held
};

/// Runs the whole verification suite on one frame.
ReportResult full_report(const GaleFrame& frame, const RunOptions& opt);

}  // namespace hp0

#endif
