#include "trichain/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "trichain/errors.hpp"

namespace trichain {

namespace {

void require_triangles(int n) {
  if (n < kMinTriangles) {
    throw DomainError("family needs n >= 4 triangles, got " + std::to_string(n));
  }
}

// Gap-two subsets of [first, n], visited in increasing order of their elements.
void for_each_turn_set(int n, int first, std::vector<int>& current,
                       const std::function<void(const std::vector<int>&)>& visit) {
  visit(current);
  for (int k = first; k <= n; ++k) {
    current.push_back(k);
    for_each_turn_set(n, k + 2, current, visit);
    current.pop_back();
  }
}

template <typename Value, typename Less, typename Equal>
void collect_extremes(const std::vector<LengthVector>& vectors, const std::vector<Value>& values,
                      Less less, Equal equal, ExtremalResult& out, std::size_t& lo,
                      std::size_t& hi) {
  lo = 0;
  hi = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (less(values[i], values[lo])) lo = i;
    if (less(values[hi], values[i])) hi = i;
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (equal(values[i], values[lo])) out.argmin.push_back(vectors[i]);
    if (equal(values[i], values[hi])) out.argmax.push_back(vectors[i]);
  }
  out.search_space = vectors.size();
}

}  // namespace

std::vector<LengthVector> enumerate_length_vectors(int n) {
  require_triangles(n);
  std::set<LengthVector> canonical;
  std::vector<int> current;
  for_each_turn_set(n, 4, current, [&](const std::vector<int>& steps) {
    canonical.insert(canonicalize(length_vector_from_turns(TurnSequence(n, steps))));
  });
  return {canonical.begin(), canonical.end()};
}

std::string_view to_string(ChainFamily kind) {
  switch (kind) {
    case ChainFamily::linear: return "linear";
    case ChainFamily::zigzag: return "zigzag";
    case ChainFamily::t_minus: return "t-minus";
    case ChainFamily::t_star: return "t-star";
    case ChainFamily::generic: return "generic";
  }
  return "generic";
}

ChainFamily parse_family(std::string_view name) {
  for (auto kind : {ChainFamily::linear, ChainFamily::zigzag, ChainFamily::t_minus,
                    ChainFamily::t_star}) {
    if (to_string(kind) == name) return kind;
  }
  throw InputError("unknown chain family '" + std::string(name) +
                   "'; expected linear, zigzag, t-minus or t-star");
}

FamilyMember special_chain(ChainFamily kind, int n) {
  FamilyMember out;
  out.kind = kind;
  switch (kind) {
    case ChainFamily::linear:
      require_triangles(n);
      out.vectors.push_back(LengthVector({n}));
      break;
    case ChainFamily::zigzag: {
      require_triangles(n);
      std::vector<int> e{3};
      e.insert(e.end(), static_cast<std::size_t>(n / 2 - 2), 4);
      e.push_back(n % 2 == 0 ? 3 : 4);
      out.vectors.push_back(canonicalize(LengthVector(std::move(e))));
      break;
    }
    case ChainFamily::t_minus:
      if (n < 6) throw DomainError("T-_n needs n >= 6, got " + std::to_string(n));
      out.vectors.push_back(LengthVector({3, n - 2, 3}));
      break;
    case ChainFamily::t_star: {
      if (n < 7 || n % 2 == 0) {
        throw DomainError("T*_n needs odd n >= 7, got " + std::to_string(n));
      }
      const int internal = (n - 5) / 2;
      std::set<LengthVector> members;
      for (int five = 0; five < internal; ++five) {
        std::vector<int> e{3};
        for (int i = 0; i < internal; ++i) e.push_back(i == five ? 5 : 4);
        e.push_back(3);
        members.insert(canonicalize(LengthVector(std::move(e))));
      }
      out.vectors.assign(members.begin(), members.end());
      break;
    }
    case ChainFamily::generic:
      throw DomainError("generic chains have no canonical representative");
  }
  return out;
}

std::vector<ChainFamily> families_of(const LengthVector& v) {
  const auto c = canonicalize(v);
  const int n = c.triangles();
  std::vector<ChainFamily> out;
  const auto contains = [&](ChainFamily kind) {
    const auto members = special_chain(kind, n).vectors;
    return std::find(members.begin(), members.end(), c) != members.end();
  };
  if (contains(ChainFamily::linear)) out.push_back(ChainFamily::linear);
  if (contains(ChainFamily::zigzag)) out.push_back(ChainFamily::zigzag);
  if (n >= 6 && contains(ChainFamily::t_minus)) out.push_back(ChainFamily::t_minus);
  if (n >= 7 && n % 2 == 1 && contains(ChainFamily::t_star)) out.push_back(ChainFamily::t_star);
  return out;
}

bool nearly_equal(double a, double b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= kRelativeTolerance * scale;
}

ExtremalResult brute_force_extremal(int n, const IndexDescriptor& index) {
  const auto vectors = enumerate_length_vectors(n);
  ExtremalResult out;
  out.n = n;
  out.index = index.name();
  const bool cross_check = n <= kCrossCheckLimit;
  std::size_t lo = 0;
  std::size_t hi = 0;

  if (index.integer_valued()) {
    std::vector<std::int64_t> values;
    values.reserve(vectors.size());
    for (const auto& v : vectors) {
      const auto closed = ti_closed_form_exact(v, index);
      if (cross_check) {
        const auto direct = direct_bid_index_exact(build_chain_graph(v), index);
        if (direct != closed) {
          throw InternalConsistencyError(index.name() + " on " + v.to_string() + ": closed " +
                                         std::to_string(closed) + " != direct " +
                                         std::to_string(direct));
        }
      }
      values.push_back(closed);
    }
    collect_extremes(vectors, values, std::less<>{}, std::equal_to<>{}, out, lo, hi);
    out.min_value = static_cast<double>(values[lo]);
    out.max_value = static_cast<double>(values[hi]);
    out.exact_min = std::to_string(values[lo]);
    out.exact_max = std::to_string(values[hi]);
    return out;
  }

  std::vector<double> values;
  values.reserve(vectors.size());
  for (const auto& v : vectors) {
    const double closed = ti_closed_form(v, index);
    if (cross_check) {
      const double direct = direct_bid_index(build_chain_graph(v), index);
      if (!nearly_equal(direct, closed)) {
        throw InternalConsistencyError(index.name() + " on " + v.to_string() +
                                       ": closed form disagrees with edge sum");
      }
    }
    values.push_back(closed);
  }
  collect_extremes(vectors, values, std::less<>{}, nearly_equal, out, lo, hi);
  out.min_value = values[lo];
  out.max_value = values[hi];
  return out;
}

ExtremalResult brute_force_sum_zagreb_product(int n) {
  const auto vectors = enumerate_length_vectors(n);
  std::vector<BigInt> products;
  std::vector<double> logs;
  for (const auto& v : vectors) {
    auto p = multiplicative_sum_zagreb(build_chain_graph(v));
    products.push_back(std::move(p.exact_product));
    logs.push_back(p.ln_value);
  }
  ExtremalResult out;
  out.n = n;
  out.index = "pi1";
  std::size_t lo = 0;
  std::size_t hi = 0;
  collect_extremes(vectors, products, std::less<>{}, std::equal_to<>{}, out, lo, hi);
  out.min_value = logs[lo];
  out.max_value = logs[hi];
  out.exact_min = products[lo].str();
  out.exact_max = products[hi].str();
  return out;
}

CorollaryReport check_corollary_hypotheses(const IndexDescriptor& index) {
  CorollaryReport r;
  r.index = index.name();
  r.lambdas = compute_lambdas(index, kMinTriangles);
  const double l1 = r.lambdas.lambda1, l2 = r.lambdas.lambda2, l3 = r.lambdas.lambda3;
  const double l4 = r.lambdas.lambda4, l5 = r.lambdas.lambda5;
  const bool all_negative = l1 < 0 && l2 < 0 && l3 < 0 && l4 < 0;
  const bool all_positive = l1 > 0 && l2 > 0 && l3 > 0 && l4 > 0;

  r.cr1_part1 = all_negative && -l3 > l5 && l5 > 0;
  r.cr1_part2 = all_positive && -l3 < l5 && l5 < 0;
  r.cr2_part1 = -l3 > l5 && all_negative && 2 * l4 < l1 && l1 < l2 && l1 + l5 > l2 + l4;
  const bool cr2_tail = all_positive && 2 * l4 > l1 && l1 > l2 && l1 + l5 < l2 + l4;
  r.cr2_part2 = -l3 < l5 && cr2_tail;
  r.cr2_part2_modified = -l1 - l3 < l5 && l5 < 0 && cr2_tail;

  if (r.cr1_part1) r.predictions.emplace_back("max L_n");
  if (r.cr1_part2) r.predictions.emplace_back("min L_n");
  if (r.cr2_part1) r.predictions.emplace_back("min Z_n");
  if (r.cr2_part2 || r.cr2_part2_modified) r.predictions.emplace_back("max Z_n");
  return r;
}

CorollaryReport check_corollary_hypotheses(const IndexDescriptor& index, int n_from, int n_to) {
  require_triangles(n_from);
  if (n_to < n_from) throw DomainError("empty range [" + std::to_string(n_from) + ", " +
                                       std::to_string(n_to) + "]");
  auto r = check_corollary_hypotheses(index);
  for (int n = n_from; n <= n_to; ++n) {
    const auto result = brute_force_extremal(n, index);
    const std::vector<LengthVector> linear = special_chain(ChainFamily::linear, n).vectors;
    const std::vector<LengthVector> zigzag = special_chain(ChainFamily::zigzag, n).vectors;
    bool agrees = true;
    for (const auto& p : r.predictions) {
      const bool is_max = p.starts_with("max");
      const auto& expected = p.ends_with("L_n") ? linear : zigzag;
      agrees = agrees && (is_max ? result.argmax : result.argmin) == expected;
    }
    r.agreement.push_back({n, agrees});
  }
  return r;
}

}  // namespace trichain
