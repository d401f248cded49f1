#pragma once

// Closed-form BID values for chains of the family, as functions of the length
// vector alone. With the coefficients
//
//   L0 = 2n t44 + 2 t23 + 2 t24 + 2 t34 - t35 - 4 t45
//   L1 = t25 - t24 + t33 - 3 t34 + t35 + 3 t44 - 2 t45
//   L2 = t35 - t34 + t44 - t45
//   L3 = 2 t34 + t35 - 7 t44 + 4 t45
//   L4 = 2 t35 - 2 t34 + 3 t44 - 4 t45 + t55
//   L5 = t44 - 2 t45 + t55
//
// every chain satisfies TI = L0 + Phi, where Phi depends only on the segment
// indicators and is a sum of per-segment contributions when s >= 3.

#include <array>
#include <cstdint>
#include <vector>

#include "trichain/bid_catalog.hpp"
#include "trichain/chain_model.hpp"

namespace trichain {

struct Lambdas {
  double lambda0 = 0.0;  // depends on n
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda3 = 0.0;
  double lambda4 = 0.0;
  double lambda5 = 0.0;

  std::array<double, 6> as_array() const {
    return {lambda0, lambda1, lambda2, lambda3, lambda4, lambda5};
  }
};

struct ExactLambdas {
  std::int64_t lambda0 = 0;
  std::int64_t lambda1 = 0;
  std::int64_t lambda2 = 0;
  std::int64_t lambda3 = 0;
  std::int64_t lambda4 = 0;
  std::int64_t lambda5 = 0;
};

/// Throws DomainError for n < 4.
Lambdas compute_lambdas(const IndexDescriptor& index, int n);
/// Integer-valued indices only.
ExactLambdas compute_lambdas_exact(const IndexDescriptor& index, int n);

double ti_closed_form(const LengthVector& v, const IndexDescriptor& index);
std::int64_t ti_closed_form_exact(const LengthVector& v, const IndexDescriptor& index);

/// Aggregated segment indicators. For s = 2 the "ends" fields cover both
/// segments and the inner sums are zero.
struct SegmentIndicators {
  int triangles = 0;
  int segments = 0;
  int eta_ends = 0;  // eta_1 + eta_s
  int xi_ends = 0;   // xi_1 + xi_s
  int xi_inner = 0;  // sum of xi_i over 2 <= i <= s - 1
  int sigma_inner = 0;
};

SegmentIndicators segment_indicators(const LengthVector& v);

/// Edge and vertex census from the segment indicators. Derived for s >= 3
/// only; throws UnsupportedCaseError for s <= 2.
EdgeTypeVector closed_edge_counts(const LengthVector& v);
/// The same formulas on bare indicators (no realizability check; s >= 3).
EdgeTypeVector closed_edge_counts(const SegmentIndicators& ind);
/// (2, s + 1, n - 2s, s - 1).
VertexCensus closed_vertex_counts(const LengthVector& v);

struct PhiValue {
  double total = 0.0;
  /// One contribution per segment; terminal segments use L1, L2, internal
  /// segments L4, L5, and every segment carries one L3.
  std::vector<double> per_segment;
};

PhiValue phi(const LengthVector& v, const IndexDescriptor& index);
std::int64_t phi_exact(const LengthVector& v, const IndexDescriptor& index);

}  // namespace trichain
