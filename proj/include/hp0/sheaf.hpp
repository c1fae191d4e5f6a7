#ifndef HP0_SHEAF_HPP
#define HP0_SHEAF_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hp0/presentation.hpp"

namespace hp0 {

/// Which sheaf of graded modules on the flat lattice is being computed: the
/// quotient-by-derivations stalks or their broken-circuit face-ring shadows.
enum class SheafKind { Module, BrokenCircuit };

/// The lattice of flats with its down-set topology. Opens are enumerated
/// exhaustively for small lattices, otherwise only the principal opens U_F
/// and their pairwise unions are used; `full_mode` records which.
struct PosetTopology {
  FlatLattice lattice;
  std::vector<std::vector<int>> opens;  // flat index lists, each down-closed
  bool full_mode = true;
};

PosetTopology build_topology(const GaleFrame& frame);

struct StalkData {
  int flat = -1;
  int local_rank = 0;
  std::vector<long long> hilbert;
  std::vector<std::vector<Monomial>> basis_monomials;  // per degree, local variables
};

/// All stalks of one sheaf, with quotient machinery retained so restriction
/// maps and section spaces can be computed in the canonical bases.
class SheafStalks {
 public:
  SheafStalks(const GaleFrame& frame, const FlatLattice& lattice, SheafKind kind, int d_max,
              int threads = 0);

  const FlatLattice& lattice() const { return lattice_; }
  int d_max() const { return d_max_; }
  SheafKind kind() const { return kind_; }
  Presentation& stalk(int flat) { return *stalks_[flat]; }
  const LocalFrame& local(int flat) const { return stalks_[flat]->problem(); }
  StalkData stalk_data(int flat) const;

  /// Per-degree matrices of the map killing the variables outside the target
  /// flat, written in the standard-monomial bases. well_defined records that
  /// every source relation generator maps into the target relation span.
  struct Restriction {
    int target = -1;  // smaller flat
    int source = -1;  // larger flat
    bool well_defined = true;
    // mats[d][row][col]: row indexes the target basis, col the source basis
    std::vector<std::vector<std::vector<BigRat>>> mats;
  };

  const Restriction& restriction(int target, int source);

 private:
  Restriction build_restriction(int target, int source);

  const GaleFrame& frame_;
  FlatLattice lattice_;
  SheafKind kind_;
  int d_max_;
  std::vector<std::unique_ptr<Presentation>> stalks_;
  std::map<std::pair<int, int>, Restriction> restrictions_;
};

/// Graded dimensions of the compatible-tuple space over an open set.
std::vector<long long> section_dims(SheafStalks& stalks, const std::vector<int>& open,
                                    int d_max);

struct MesSheafReport {
  bool bottom_ok = false;       // stalk at the bottom flat is C in degree 0
  bool free_ok = false;         // every stalk passes the local freeness certificate
  bool flabby_ok = false;       // global sections surject onto sections of each open
  bool restrictions_ok = false; // all restriction maps well defined
  bool principal_sections_ok = false;  // sections over U_F match the stalk at F
};

struct MesReport {
  bool loops_present = false;
  std::string mode;  // "full" or "principal"
  MesSheafReport module_sheaf;
  MesSheafReport bc_sheaf;
  bool degeneration_ok = false;  // stalkwise initial span = face-ring span
  std::vector<std::pair<std::string, std::vector<long long>>> stalk_hilberts;  // module sheaf
  bool ok = false;  // every sub-check above
};

MesReport mes_check(const GaleFrame& frame, int d_max, int threads = 0);

}  // namespace hp0

#endif
