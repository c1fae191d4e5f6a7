#ifndef HP0_GALE_FRAME_HPP
#define HP0_GALE_FRAME_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hp0 {

/// Input rejected at construction or parse time (bad tokens, dimension
/// mismatch, dependent rows, non-unimodular minor).
class FrameError : public std::runtime_error {
 public:
  explicit FrameError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A square minor outside {-1,0,1}; indices are 1-based for reporting.
struct MinorViolation {
  std::vector<int> rows;
  std::vector<int> cols;
  long long det = 0;
};

/// Nonzero {-1,0,1}-vector of minimal support in the kernel of the frame,
/// normalized so its lowest-index nonzero entry is +1.
struct SignedCircuit {
  std::vector<int> coeffs;   // length n
  std::vector<int> support;  // 0-based, ascending
  std::uint32_t mask = 0;    // bitmask of the support
};

/// Closed column set: no column outside it lies in the span of its columns.
struct Flat {
  std::vector<int> columns;  // 0-based, ascending
  std::uint32_t mask = 0;
  int rank = 0;
};

/// All flats ordered by inclusion of column sets. Flats are sorted by
/// (rank, size, columns); order lists every comparable pair.
struct FlatLattice {
  std::vector<Flat> flats;
  std::vector<std::pair<int, int>> order;  // (i, j) with flats[i] <= flats[j]
  int bottom = -1;                         // closure of the empty set
  int top = -1;                            // the full column set
  bool leq(int i, int j) const;
};

/// The localized problem at a flat: the ground set, its rank, the circuits
/// living inside it, and integer coefficient vectors spanning the degree-1
/// part of the local base ring (rows of the frame restricted to the flat).
/// Everything downstream consumes this shape; the whole frame is the
/// localization at the top flat.
struct LocalFrame {
  std::vector<int> columns;  // global 0-based ids, ascending
  int n_local = 0;
  int rank = 0;
  std::vector<SignedCircuit> circuits;        // local coordinates
  std::vector<std::vector<int>> base_forms;   // local coordinates, may be redundant
};

/// Integer matrix of a unimodular torus embedding: k independent rows, all
/// square minors in {-1,0,1}. Zero columns are accepted with a warning.
class GaleFrame {
 public:
  GaleFrame(int k, int n, std::vector<std::vector<long long>> rows);

  static GaleFrame parse_text(const std::string& text);
  static GaleFrame parse_json(const std::string& json_text);
  static GaleFrame from_file(const std::string& path);

  int k() const { return k_; }
  int n() const { return n_; }
  const std::vector<std::vector<long long>>& rows() const { return rows_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// New frame whose column j is this frame's column order[j] (1-based entries).
  GaleFrame permuted(const std::vector<int>& order) const;

 private:
  int k_;
  int n_;
  std::vector<std::vector<long long>> rows_;
  std::vector<std::string> warnings_;
};

/// Exhaustive minor enumeration; nullopt when totally unimodular.
std::optional<MinorViolation> tu_violation(const std::vector<std::vector<long long>>& rows);
bool check_total_unimodularity(const GaleFrame& frame);

/// Basis of the integer kernel lattice of the frame (rows primitive and
/// lattice-saturated); (n-k) x n, possibly 0 rows.
std::vector<std::vector<long long>> kernel_basis(const GaleFrame& frame);

/// All signed circuits, sorted by (support size, lexicographic support).
/// Throws FrameError if a minimal-support kernel vector has a non-unit entry.
std::vector<SignedCircuit> signed_circuits(const GaleFrame& frame);

/// The kernel basis packaged as a frame on the same ground set; its circuits
/// are the cocircuits of the input. For k = n the result has zero rows.
GaleFrame dual_frame(const GaleFrame& frame);

/// Columns lying in no circuit (coloops). Nonempty exactly when the Kirwan
/// degree-2 comparison fails: the torus image contains a coordinate line.
std::vector<int> kirwan_degree2_lines(const GaleFrame& frame);

FlatLattice flats(const GaleFrame& frame);

LocalFrame localize(const GaleFrame& frame, const Flat& flat);
LocalFrame full_problem(const GaleFrame& frame);

}  // namespace hp0

#endif
