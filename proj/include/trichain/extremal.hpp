#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trichain/bid_catalog.hpp"
#include "trichain/chain_model.hpp"
#include "trichain/closed_form.hpp"

namespace trichain {

/// Canonical (reversal lex-min) valid length vectors with n triangles, sorted
/// lexicographically. Throws DomainError for n < 4.
std::vector<LengthVector> enumerate_length_vectors(int n);

enum class ChainFamily {
  linear,   // (n)
  zigzag,   // (3, 4, ..., 4, 3) for even n, (3, 4, ..., 4) for odd n
  t_minus,  // (3, n - 2, 3), n >= 6
  t_star,   // odd n >= 7: terminals 3, one internal 5, other internals 4
  generic,
};

std::string_view to_string(ChainFamily kind);
/// Accepts "linear", "zigzag", "t-minus", "t-star". Throws InputError.
ChainFamily parse_family(std::string_view name);

struct FamilyMember {
  ChainFamily kind = ChainFamily::generic;
  /// Canonical vectors, sorted; a single entry except for t_star.
  std::vector<LengthVector> vectors;
};

/// Throws DomainError naming the violated constraint (t_minus needs n >= 6,
/// t_star needs odd n >= 7; generic is not constructible).
FamilyMember special_chain(ChainFamily kind, int n);

/// Every special family containing v (after canonicalization). Families
/// overlap at small n: (3,4,3) is both Z_6 and T-_6, (3,5,3) is T-_7 and the
/// only member of T*_7. Empty for generic chains.
std::vector<ChainFamily> families_of(const LengthVector& v);

struct ExtremalResult {
  int n = 0;
  std::string index;
  double min_value = 0.0;
  double max_value = 0.0;
  /// Set for integer-valued indices and exact products.
  std::optional<std::string> exact_min;
  std::optional<std::string> exact_max;
  std::vector<LengthVector> argmin;
  std::vector<LengthVector> argmax;
  std::size_t search_space = 0;
};

inline constexpr int kCrossCheckLimit = 18;
inline constexpr double kRelativeTolerance = 1e-9;

/// True when |a - b| <= 1e-9 * max(1, |a|, |b|).
bool nearly_equal(double a, double b);

/// Evaluates the closed form on every chain with n triangles. For n <= 18 each
/// value is also compared with direct edge summation; a mismatch throws
/// InternalConsistencyError. Ties within tolerance are all reported (exact
/// ties for integer-valued indices).
ExtremalResult brute_force_extremal(int n, const IndexDescriptor& index);

/// Extremes of the multiplicative sum Zagreb index compared on exact
/// big-integer products; min/max_value carry the logarithms.
ExtremalResult brute_force_sum_zagreb_product(int n);

struct CorollaryReport {
  std::string index;
  Lambdas lambdas;  // lambda0 at n = 4; the others do not depend on n
  bool cr1_part1 = false;  // L1..L4 < 0 and -L3 > L5 > 0  => max at L_n
  bool cr1_part2 = false;  // L1..L4 > 0 and -L3 < L5 < 0  => min at L_n
  bool cr2_part1 = false;  // -L3 > L5, L1..L4 < 0, 2L4 < L1 < L2, L1+L5 > L2+L4 => min at Z_n
  bool cr2_part2 = false;  // -L3 < L5, L1..L4 > 0, 2L4 > L1 > L2, L1+L5 < L2+L4 => max at Z_n
  bool cr2_part2_modified = false;  // cr2_part2 with -L1-L3 < L5 < 0 replacing -L3 < L5
  std::vector<std::string> predictions;  // "max L_n", "min Z_n", ...
  struct Agreement {
    int n;
    bool agrees;
  };
  std::vector<Agreement> agreement;  // filled only for a requested n-range
};

CorollaryReport check_corollary_hypotheses(const IndexDescriptor& index);
/// Also compares every prediction with brute force for n in [n_from, n_to].
CorollaryReport check_corollary_hypotheses(const IndexDescriptor& index, int n_from, int n_to);

enum class ClaimStatus { pass, fail, exploratory };
std::string_view to_string(ClaimStatus status);

struct Claim {
  std::string id;
  std::optional<int> n;
  ClaimStatus status = ClaimStatus::fail;
  std::string expected;
  std::string observed;
};

struct VerificationReport {
  int n_from = 0;
  int n_to = 0;
  std::vector<Claim> claims;

  /// True iff no claim failed; exploratory entries never count.
  bool all_pass() const;
};

/// Checks every extremal claim for each n in [n_from, n_to] against brute
/// force, plus the n-independent coefficient claims. Throws DomainError for
/// n_from < 4 or n_from > n_to.
VerificationReport verify_claims(int n_from, int n_to);

}  // namespace trichain
