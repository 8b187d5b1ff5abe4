#ifndef ARITH_FREEGRP_HPP
#define ARITH_FREEGRP_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "arith/intpoly.hpp"  // Int / Rat

namespace arith::fg {

struct RankMismatch : std::invalid_argument {
  RankMismatch() : std::invalid_argument("words from different ranks") {}
};
struct NotConnected : std::invalid_argument {
  NotConnected() : std::invalid_argument("set is not connected in the Cayley graph") {}
};
struct NoValidShift : std::runtime_error {
  NoValidShift() : std::runtime_error("greedy tiling found no disjoint shift") {}
};
struct HypothesesViolated : std::invalid_argument {
  explicit HypothesesViolated(const std::string& w) : std::invalid_argument(w) {}
};
struct InsufficientCoverage : std::invalid_argument {
  InsufficientCoverage() : std::invalid_argument("tiling does not determine all needed cells") {}
};

/// Freely reduced word in F_k. Letters are +i for generator i (1-based) and
/// -i for its inverse. The norm is the letter count (left-invariant Cayley
/// metric, standard generators). operator< is shortlex with letter order
/// a < a^-1 < b < b^-1 < ...
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::int8_t> letters);

  // "aB" = a * b^-1; "1" or "" = identity. Reduces the input.
  static Word parse(const std::string& s);
  std::string str() const;

  int norm() const { return static_cast<int>(letters_.size()); }
  bool is_identity() const { return letters_.empty(); }
  const std::vector<std::int8_t>& letters() const { return letters_; }
  int max_generator() const;

  Word operator*(const Word& rhs) const;
  Word inverse() const;
  // Right multiplication by a single letter, reduced.
  Word append(std::int8_t letter) const;

  bool operator==(const Word& rhs) const { return letters_ == rhs.letters_; }
  bool operator<(const Word& rhs) const;

 private:
  std::vector<std::int8_t> letters_;
};

/// Finite set of words with its ambient rank; elements sorted shortlex.
struct FGSet {
  int rank = 2;
  std::vector<Word> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(const Word& w) const;
};

FGSet make_fgset(int rank, std::vector<Word> elements);

FGSet ball(int rank, int radius);
FGSet sphere(int rank, int radius);

/// All words of norm <= radius in shortlex order (= ball enumeration).
std::vector<Word> enumerate_ball(int rank, int radius);

/// Connectivity of the induced subgraph of the Cayley graph (edges: right
/// multiplication by a generator or its inverse).
bool is_connected(const FGSet& s);

struct PartialTiling {
  FGSet base;                // left-normalized so it contains the identity
  std::vector<Word> shifts;  // g_1 = 1, g_2, ...
};

/// Greedy tiling constructor: repeatedly take the minimal-norm word z
/// outside the union (shortlex tie-break) and the first w in K making the
/// shift z w^-1 disjoint from the union; stops once B_R is covered.
/// Requires K connected; rank >= 2 unless K is a single word.
PartialTiling greedy_tiling(const FGSet& k, int radius);

struct TilingReport {
  bool ok = false;
  std::string failure;  // empty when ok
  std::size_t translates = 0;
};

/// Checks pairwise disjointness, coverage of B_R, and the distance-1
/// adjacency chain; reports the first violation.
TilingReport verify_partial_tiling(const FGSet& k, const std::vector<Word>& shifts,
                                   int radius);

struct SolutionPatch {
  int rank = 2;
  int region_radius = 0;
  std::map<Word, Rat> assignment;  // defined on all of B_R
};

/// Two-level solution from a tiling: x_g = |K|-1 when g^-1 is a shift, -1
/// otherwise. Refuses |K| = 1 (only the trivial solution).
SolutionPatch tiling_to_solution_fg(const PartialTiling& tiling, int radius);

struct FreshLogEntry {
  long step = 0;
  Word equation;
  Word designated_cell;
  Rat value;
  int fresh_count = 0;
  bool forced = false;      // single fresh cell, value dictated by the sum
  bool distinct_ok = false; // value differs from every previously used value
};

struct NonPeriodicSolution {
  SolutionPatch patch;
  std::vector<FreshLogEntry> log;
  Rat max_abs;  // empirical bound over the window
};

/// Bounded-non-periodic constructor: equations processed in shortlex order;
/// in each, one designated fresh cell receives a value distinct from all
/// values used so far (1/(n+3) with a collision fallback) and the residual
/// is spread uniformly over the remaining fresh cells.
/// Requires 1 not in K, B_2 minus the identity inside K, and {1} u K
/// connected.
NonPeriodicSolution bounded_nonperiodic_solution(const FGSet& k, int radius);

/// x_g = +1 for odd |g|, -1 for even |g|, on B_R.
SolutionPatch parity_solution(int rank, int radius);

/// True iff K has equally many odd-norm and even-norm elements, which is
/// exactly when the parity patch solves A(K).
bool check_parity_balance(const FGSet& k);

struct PatchReport {
  bool ok = false;
  long equations_checked = 0;
  std::string failure;     // first violated equation, empty when ok
  bool degenerate = false; // all-zero patch
};

/// Exact verification of every equation whose cell set K*g lies inside the
/// patch region.
PatchReport verify_solution_patch(const FGSet& k, const SolutionPatch& patch);

enum class CoverStatus { SAT, UNSAT, UNKNOWN };

struct CoverResult {
  CoverStatus status = CoverStatus::UNKNOWN;
  std::vector<Word> shifts;  // witness when SAT
  long nodes = 0;
};

/// Exhaustive backtracking search for a disjoint family of left translates
/// of T covering B_R, branching on the shortlex-least uncovered element.
/// UNSAT certifies that no such family exists; UNKNOWN = budget exhausted.
CoverResult cover_search(const FGSet& t, int radius, long budget);

}  // namespace arith::fg

#endif  // ARITH_FREEGRP_HPP
