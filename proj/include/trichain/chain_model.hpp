#pragma once

// Triangular chains encoded by segment length vectors.
//
// A chain with n triangles is grown one triangle at a time. Triangle k >= 3 is
// glued either to the edge formed by the newest two vertices (straight step)
// or to the edge joining the new vertex with the older endpoint of the
// previous glued edge (turn step). A turn ends a segment; adjacent segments
// share two triangles, so n = sum(l_i) - 2(s - 1).

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trichain {

inline constexpr int kMinTriangles = 4;
inline constexpr int kMinDegree = 2;
inline constexpr int kMaxFamilyDegree = 5;
/// Number of unordered degree pairs (a, b) with 2 <= a <= b <= 5.
inline constexpr int kDegreePairCount = 10;

struct ValidationReport {
  bool valid = false;
  std::vector<std::string> violations;
  int triangles = 0;
  int segments = 0;
};

/// Checks terminal lengths >= 3, internal lengths >= 4 and n >= 4.
/// Throws InputError on an empty sequence or an entry below one.
ValidationReport validate_length_vector(std::span<const int> entries);

/// A valid segment length vector (l_1, ..., l_s). Ordered lexicographically.
class LengthVector {
 public:
  /// Throws ValidationError carrying every violated constraint.
  explicit LengthVector(std::vector<int> entries);

  /// Parses "3,4,3". Throws InputError for malformed text.
  static LengthVector parse(std::string_view text);

  const std::vector<int>& entries() const noexcept { return entries_; }
  int segments() const noexcept { return static_cast<int>(entries_.size()); }
  int triangles() const noexcept { return triangles_; }
  /// One-based segment length, matching the l_i convention.
  int length(int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }

  LengthVector reversed() const;
  std::string to_string() const;

  friend bool operator==(const LengthVector& a, const LengthVector& b) {
    return a.entries_ == b.entries_;
  }
  friend std::strong_ordering operator<=>(const LengthVector& a, const LengthVector& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
  int triangles_ = 0;
};

/// Lexicographic minimum of v and its reversal.
LengthVector canonicalize(const LengthVector& v);

/// Steps of the growth process at which a turn is taken.
class TurnSequence {
 public:
  /// Steps must lie in [4, triangles] with pairwise gaps of at least two.
  /// Throws EncodingError otherwise.
  TurnSequence(int triangles, std::vector<int> steps);

  int triangles() const noexcept { return triangles_; }
  const std::vector<int>& steps() const noexcept { return steps_; }

  friend bool operator==(const TurnSequence&, const TurnSequence&) = default;

 private:
  int triangles_;
  std::vector<int> steps_;
};

TurnSequence turns_from_length_vector(const LengthVector& v);
LengthVector length_vector_from_turns(const TurnSequence& t);

struct Edge {
  int u;  // u < v, zero-based
  int v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using Triangle = std::array<int, 3>;

class ChainGraph {
 public:
  int vertex_count() const noexcept { return static_cast<int>(degrees_.size()); }
  int triangle_count() const noexcept { return static_cast<int>(triangles_.size()); }
  /// Sorted by (u, v).
  std::span<const Edge> edges() const noexcept { return edges_; }
  /// In gluing order; consecutive triangles share exactly one edge.
  std::span<const Triangle> triangles() const noexcept { return triangles_; }
  std::span<const int> degrees() const noexcept { return degrees_; }
  int degree(int vertex) const { return degrees_.at(static_cast<std::size_t>(vertex)); }

  int max_degree() const noexcept;
  /// Zero-based vertex of maximum degree (first one on ties).
  int max_degree_vertex() const noexcept;
  bool in_family() const noexcept {
    return triangle_count() >= kMinTriangles && max_degree() <= kMaxFamilyDegree;
  }

 private:
  friend ChainGraph assemble_chain(int, std::span<const int>);

  std::vector<Edge> edges_;
  std::vector<Triangle> triangles_;
  std::vector<int> degrees_;
};

/// Raw growth process with no family checks. Turn steps may be any subset of
/// [3, triangles]; used to probe chains outside the family.
ChainGraph assemble_chain(int triangles, std::span<const int> turn_steps);

/// Throws NotInFamilyError if any vertex ends with degree above five.
ChainGraph build_chain_graph(const TurnSequence& t);
/// Unvalidated turn steps in [3, triangles]; same degree check.
ChainGraph build_chain_graph(int triangles, std::span<const int> turn_steps);
ChainGraph build_chain_graph(const LengthVector& v);

/// Per-vertex census (n_2, n_3, n_4, n_5).
struct VertexCensus {
  std::array<int, 4> counts{};

  int at(int degree) const;
  int total() const noexcept;
  friend bool operator==(const VertexCensus&, const VertexCensus&) = default;
};

/// Slot of the unordered pair (a, b) in a 10-entry degree-pair table.
/// Throws DomainError for degrees outside [2, 5].
int degree_pair_slot(int a, int b);
/// Inverse of degree_pair_slot, with a <= b.
std::pair<int, int> degree_pair(int slot);

/// Edge-type census x_{a,b} for 2 <= a <= b <= 5 plus the vertex census.
struct EdgeTypeVector {
  std::array<int, kDegreePairCount> counts{};
  VertexCensus vertices;

  int at(int a, int b) const { return counts[static_cast<std::size_t>(degree_pair_slot(a, b))]; }
  int total() const noexcept;
  friend bool operator==(const EdgeTypeVector&, const EdgeTypeVector&) = default;
};

EdgeTypeVector edge_type_counts_direct(const ChainGraph& g);

/// Indicators eta (l_i = 3), xi (l_i = 4), sigma (l_i = 5); index 0 is segment 1.
struct SegmentProfile {
  std::vector<int> eta;
  std::vector<int> xi;
  std::vector<int> sigma;

  int segments() const noexcept { return static_cast<int>(eta.size()); }
};

SegmentProfile segment_profile(const LengthVector& v);

/// Undirected DOT with vertices v1..v{n+2} and degree labels.
std::string to_dot(const ChainGraph& g, std::string_view graph_name = "chain");

}  // namespace trichain
