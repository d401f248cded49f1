#pragma once

// Bond-incident-degree indices: TI(G) = sum over edges uv of theta(d_u, d_v).

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "trichain/chain_model.hpp"

namespace trichain {

using BigInt = boost::multiprecision::cpp_int;
using ThetaTable = std::array<double, kDegreePairCount>;
using ExactThetaTable = std::array<std::int64_t, kDegreePairCount>;

/// A symmetric edge weight theta_{a,b} on 2 <= a <= b <= 5, stored as a table
/// indexed by degree_pair_slot.
class IndexDescriptor {
 public:
  /// Throws DomainError if any weight is not finite.
  IndexDescriptor(std::string name, const ThetaTable& table);
  /// Integer-valued index; evaluated with exact integer arithmetic.
  IndexDescriptor(std::string name, const ExactThetaTable& table);

  const std::string& name() const noexcept { return name_; }
  const ThetaTable& table() const noexcept { return table_; }
  bool integer_valued() const noexcept { return exact_.has_value(); }

  double theta(int a, int b) const;
  /// Throws DomainError unless integer_valued().
  std::int64_t theta_exact(int a, int b) const;

 private:
  std::string name_;
  ThetaTable table_{};
  std::optional<ExactThetaTable> exact_;
};

/// randic, ga1, sci, mod-m2, ln-pi1, harmonic, azi, albertson, m2, abc.
std::span<const IndexDescriptor> catalog();
std::vector<std::string> catalog_names();
/// Throws UnknownIndexError listing the catalog.
const IndexDescriptor& catalog_index(std::string_view name);

/// Reads rows "a,b weight" (or "a,b,weight"); '#' starts a comment. All ten
/// unordered pairs must appear exactly once. Throws InputError.
IndexDescriptor load_theta_table(std::istream& in, std::string name);
IndexDescriptor load_theta_file(const std::filesystem::path& path);

double theta_eval(const IndexDescriptor& index, int a, int b);

/// Sum of theta over the edges of g.
double direct_bid_index(const ChainGraph& g, const IndexDescriptor& index);
std::int64_t direct_bid_index_exact(const ChainGraph& g, const IndexDescriptor& index);

struct SumZagrebProduct {
  double ln_value = 0.0;  // sum of ln(d_u + d_v)
  BigInt exact_product;   // product of (d_u + d_v)
};

SumZagrebProduct multiplicative_sum_zagreb(const ChainGraph& g);

}  // namespace trichain
