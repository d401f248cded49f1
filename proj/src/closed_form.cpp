#include "trichain/closed_form.hpp"

#include <numeric>
#include <string>

#include "trichain/errors.hpp"

namespace trichain {

namespace {

template <typename T, typename Theta>
std::array<T, 6> lambdas_from(Theta t, int n) {
  if (n < kMinTriangles) {
    throw DomainError("Lambda coefficients need n >= 4, got " + std::to_string(n));
  }
  const T t23 = t(2, 3), t24 = t(2, 4), t25 = t(2, 5), t33 = t(3, 3), t34 = t(3, 4);
  const T t35 = t(3, 5), t44 = t(4, 4), t45 = t(4, 5), t55 = t(5, 5);
  return {
      T(2 * n) * t44 + 2 * t23 + 2 * t24 + 2 * t34 - t35 - 4 * t45,
      t25 - t24 + t33 - 3 * t34 + t35 + 3 * t44 - 2 * t45,
      t35 - t34 + t44 - t45,
      2 * t34 + t35 - 7 * t44 + 4 * t45,
      2 * t35 - 2 * t34 + 3 * t44 - 4 * t45 + t55,
      t44 - 2 * t45 + t55,
  };
}

// The s = 1, s = 2 and s >= 3 cases, written out separately from phi().
template <typename T>
T closed_value(const std::array<T, 6>& l, const SegmentIndicators& ind) {
  if (ind.segments == 1) return l[0] + l[3];
  if (ind.segments == 2) {
    return l[0] + l[1] * T(ind.eta_ends) + l[2] * T(ind.xi_ends) + 2 * l[3];
  }
  return l[0] + l[1] * T(ind.eta_ends) + l[2] * T(ind.xi_ends) + T(ind.segments) * l[3] +
         l[4] * T(ind.xi_inner) + l[5] * T(ind.sigma_inner);
}

template <typename T>
std::vector<T> phi_segments(const std::array<T, 6>& l, const LengthVector& v) {
  const auto p = segment_profile(v);
  const int s = p.segments();
  std::vector<T> out;
  if (s == 1) {
    out.push_back(l[3]);
    return out;
  }
  for (int i = 0; i < s; ++i) {
    const auto u = static_cast<std::size_t>(i);
    const bool terminal = i == 0 || i == s - 1;
    if (terminal) {
      out.push_back(l[1] * T(p.eta[u]) + l[2] * T(p.xi[u]) + l[3]);
    } else {
      out.push_back(l[3] + l[4] * T(p.xi[u]) + l[5] * T(p.sigma[u]));
    }
  }
  return out;
}

auto real_theta(const IndexDescriptor& index) {
  return [&index](int a, int b) { return index.theta(a, b); };
}

auto exact_theta(const IndexDescriptor& index) {
  return [&index](int a, int b) { return index.theta_exact(a, b); };
}

}  // namespace

SegmentIndicators segment_indicators(const LengthVector& v) {
  const auto p = segment_profile(v);
  const int s = p.segments();
  SegmentIndicators ind;
  ind.triangles = v.triangles();
  ind.segments = s;
  if (s == 1) return ind;
  ind.eta_ends = p.eta.front() + p.eta.back();
  ind.xi_ends = p.xi.front() + p.xi.back();
  for (int i = 1; i < s - 1; ++i) {
    ind.xi_inner += p.xi[static_cast<std::size_t>(i)];
    ind.sigma_inner += p.sigma[static_cast<std::size_t>(i)];
  }
  return ind;
}

Lambdas compute_lambdas(const IndexDescriptor& index, int n) {
  const auto l = lambdas_from<double>(real_theta(index), n);
  return {l[0], l[1], l[2], l[3], l[4], l[5]};
}

ExactLambdas compute_lambdas_exact(const IndexDescriptor& index, int n) {
  const auto l = lambdas_from<std::int64_t>(exact_theta(index), n);
  return {l[0], l[1], l[2], l[3], l[4], l[5]};
}

double ti_closed_form(const LengthVector& v, const IndexDescriptor& index) {
  if (index.integer_valued()) return static_cast<double>(ti_closed_form_exact(v, index));
  return closed_value(lambdas_from<double>(real_theta(index), v.triangles()),
                       segment_indicators(v));
}

std::int64_t ti_closed_form_exact(const LengthVector& v, const IndexDescriptor& index) {
  return closed_value(lambdas_from<std::int64_t>(exact_theta(index), v.triangles()),
                       segment_indicators(v));
}

EdgeTypeVector closed_edge_counts(const LengthVector& v) {
  if (v.segments() < 3) {
    throw UnsupportedCaseError("closed edge counts need s >= 3 (got s=" +
                               std::to_string(v.segments()) +
                               "); use edge_type_counts_direct on the built graph");
  }
  return closed_edge_counts(segment_indicators(v));
}

EdgeTypeVector closed_edge_counts(const SegmentIndicators& ind) {
  const int s = ind.segments;
  const int n = ind.triangles;
  if (s < 3) {
    throw UnsupportedCaseError("closed edge counts need s >= 3, got s=" + std::to_string(s));
  }
  const int e = ind.eta_ends;
  const int x = ind.xi_ends;
  const int xi_all = ind.xi_ends + ind.xi_inner;

  EdgeTypeVector out;
  const auto set = [&out](int a, int b, int value) {
    out.counts[static_cast<std::size_t>(degree_pair_slot(a, b))] = value;
  };
  set(2, 2, 0);
  set(2, 3, 2);
  set(2, 4, 2 - e);
  set(2, 5, e);
  set(3, 3, e);
  set(3, 4, 2 * s + 2 - 3 * e + x - 2 * xi_all);
  set(3, 5, s - 1 + e - x + 2 * xi_all);
  set(4, 4, 2 * n - 7 * s + 3 * e + x + 3 * ind.xi_inner + ind.sigma_inner);
  set(4, 5, 4 * s - 4 - 2 * e - x - 4 * ind.xi_inner - 2 * ind.sigma_inner);
  set(5, 5, ind.xi_inner + ind.sigma_inner);
  out.vertices = VertexCensus{{2, s + 1, n - 2 * s, s - 1}};
  return out;
}

VertexCensus closed_vertex_counts(const LengthVector& v) {
  const int s = v.segments();
  const int n = v.triangles();
  return VertexCensus{{2, s + 1, n - 2 * s, s - 1}};
}

PhiValue phi(const LengthVector& v, const IndexDescriptor& index) {
  PhiValue out;
  out.per_segment = phi_segments(lambdas_from<double>(real_theta(index), v.triangles()), v);
  out.total = std::accumulate(out.per_segment.begin(), out.per_segment.end(), 0.0);
  return out;
}

std::int64_t phi_exact(const LengthVector& v, const IndexDescriptor& index) {
  const auto parts = phi_segments(lambdas_from<std::int64_t>(exact_theta(index), v.triangles()), v);
  return std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
}

}  // namespace trichain
