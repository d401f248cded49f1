#include "trichain/chain_model.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "trichain/errors.hpp"

namespace trichain {

namespace {

std::string join_violations(const std::vector<std::string>& violations) {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

}  // namespace

ValidationReport validate_length_vector(std::span<const int> entries) {
  if (entries.empty()) throw InputError("length vector is empty");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 1) {
      throw InputError("length vector entry " + std::to_string(i + 1) + " is " +
                       std::to_string(entries[i]) + "; entries must be positive");
    }
  }

  ValidationReport report;
  const int s = static_cast<int>(entries.size());
  report.segments = s;
  report.triangles = std::accumulate(entries.begin(), entries.end(), 0) - 2 * (s - 1);

  const auto terminal = [&](int i) {
    const int len = entries[static_cast<std::size_t>(i - 1)];
    if (len < 3) {
      report.violations.push_back("terminal segment l" + std::to_string(i) + "=" +
                                  std::to_string(len) + " is shorter than 3");
    }
  };
  terminal(1);
  if (s > 1) terminal(s);
  for (int i = 2; i <= s - 1; ++i) {
    const int len = entries[static_cast<std::size_t>(i - 1)];
    if (len == 3) {
      report.violations.push_back("internal segment l" + std::to_string(i) +
                                  "=3: nonterminal segments of length 3 are not allowed");
    } else if (len < 4) {
      report.violations.push_back("internal segment l" + std::to_string(i) + "=" +
                                  std::to_string(len) + " is shorter than 4");
    }
  }
  if (report.triangles < kMinTriangles) {
    report.violations.push_back("triangle count n=" + std::to_string(report.triangles) +
                                " is below 4");
  }
  report.valid = report.violations.empty();
  return report;
}

LengthVector::LengthVector(std::vector<int> entries) : entries_(std::move(entries)) {
  auto report = validate_length_vector(entries_);
  if (!report.valid) {
    auto message = "invalid length vector: " + join_violations(report.violations);
    throw ValidationError(message, std::move(report.violations));
  }
  triangles_ = report.triangles;
}

LengthVector LengthVector::parse(std::string_view text) {
  std::vector<int> entries;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                  : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InputError("cannot parse length vector '" + std::string(text) +
                       "': expected comma-separated positive integers");
    }
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return LengthVector(std::move(entries));
}

LengthVector LengthVector::reversed() const {
  return LengthVector(std::vector<int>(entries_.rbegin(), entries_.rend()));
}

std::string LengthVector::to_string() const {
  std::string out;
  for (int e : entries_) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

LengthVector canonicalize(const LengthVector& v) {
  auto r = v.reversed();
  return r < v ? r : v;
}

TurnSequence::TurnSequence(int triangles, std::vector<int> steps)
    : triangles_(triangles), steps_(std::move(steps)) {
  if (triangles_ < kMinTriangles) {
    throw EncodingError("turn sequence needs at least 4 triangles, got " +
                        std::to_string(triangles_));
  }
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const int k = steps_[i];
    if (k < 4 || k > triangles_) {
      throw EncodingError("turn step " + std::to_string(k) + " outside [4, " +
                          std::to_string(triangles_) + "]");
    }
    if (i > 0 && k - steps_[i - 1] < 2) {
      throw EncodingError("turn steps " + std::to_string(steps_[i - 1]) + " and " +
                          std::to_string(k) + " are closer than 2 (or not increasing)");
    }
  }
}

TurnSequence turns_from_length_vector(const LengthVector& v) {
  std::vector<int> steps;
  int prefix = 0;
  for (int j = 1; j < v.segments(); ++j) {
    prefix += v.length(j);
    steps.push_back(prefix - 2 * (j - 1) + 1);
  }
  return TurnSequence(v.triangles(), std::move(steps));
}

LengthVector length_vector_from_turns(const TurnSequence& t) {
  const auto& k = t.steps();
  if (k.empty()) return LengthVector({t.triangles()});
  std::vector<int> entries;
  entries.push_back(k.front() - 1);
  for (std::size_t j = 1; j < k.size(); ++j) entries.push_back(k[j] - k[j - 1] + 2);
  entries.push_back(t.triangles() - k.back() + 3);
  return LengthVector(std::move(entries));
}

int ChainGraph::max_degree() const noexcept {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

int ChainGraph::max_degree_vertex() const noexcept {
  return static_cast<int>(std::max_element(degrees_.begin(), degrees_.end()) -
                          degrees_.begin());
}

ChainGraph assemble_chain(int triangles, std::span<const int> turn_steps) {
  if (triangles < 2) {
    throw DomainError("a chain needs at least 2 triangles, got " + std::to_string(triangles));
  }
  std::vector<bool> is_turn(static_cast<std::size_t>(triangles) + 1, false);
  for (int k : turn_steps) {
    if (k < 3 || k > triangles) {
      throw EncodingError("turn step " + std::to_string(k) + " outside [3, " +
                          std::to_string(triangles) + "]");
    }
    is_turn[static_cast<std::size_t>(k)] = true;
  }

  ChainGraph g;
  g.degrees_.assign(static_cast<std::size_t>(triangles) + 2, 0);
  const auto connect = [&g](int a, int b) {
    g.edges_.push_back({std::min(a, b), std::max(a, b)});
    ++g.degrees_[static_cast<std::size_t>(a)];
    ++g.degrees_[static_cast<std::size_t>(b)];
  };

  connect(0, 1);
  connect(0, 2);
  connect(1, 2);
  g.triangles_.push_back({0, 1, 2});
  connect(1, 3);
  connect(2, 3);
  g.triangles_.push_back({1, 2, 3});

  // Glued edge of the latest triangle is (older, newer); apex is its third vertex.
  int older = 1;
  int newer = 2;
  int apex = 3;
  for (int k = 3; k <= triangles; ++k) {
    const int fresh = k + 1;
    const int anchor = is_turn[static_cast<std::size_t>(k)] ? older : newer;
    connect(anchor, fresh);
    connect(apex, fresh);
    g.triangles_.push_back({anchor, apex, fresh});
    older = anchor;
    newer = apex;
    apex = fresh;
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

ChainGraph build_chain_graph(const TurnSequence& t) {
  return build_chain_graph(t.triangles(), t.steps());
}

ChainGraph build_chain_graph(int triangles, std::span<const int> turn_steps) {
  auto g = assemble_chain(triangles, turn_steps);
  if (g.max_degree() > kMaxFamilyDegree) {
    const int v = g.max_degree_vertex();
    throw NotInFamilyError("vertex v" + std::to_string(v + 1) + " has degree " +
                               std::to_string(g.degree(v)) + " > 5",
                           v, g.degree(v));
  }
  return g;
}

ChainGraph build_chain_graph(const LengthVector& v) {
  return build_chain_graph(turns_from_length_vector(v));
}

int VertexCensus::at(int degree) const {
  if (degree < kMinDegree || degree > kMaxFamilyDegree) {
    throw DomainError("vertex census degree " + std::to_string(degree) + " outside [2, 5]");
  }
  return counts[static_cast<std::size_t>(degree - kMinDegree)];
}

int VertexCensus::total() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

int degree_pair_slot(int a, int b) {
  if (a > b) std::swap(a, b);
  if (a < kMinDegree || b > kMaxFamilyDegree) {
    throw DomainError("degree pair (" + std::to_string(a) + "," + std::to_string(b) +
                      ") outside [2, 5]");
  }
  // Row-major over the upper triangle: (2,2) (2,3) (2,4) (2,5) (3,3) ... (5,5).
  static constexpr std::array<int, 4> kRowStart{0, 4, 7, 9};
  return kRowStart[static_cast<std::size_t>(a - kMinDegree)] + (b - a);
}

std::pair<int, int> degree_pair(int slot) {
  static constexpr std::array<std::pair<int, int>, kDegreePairCount> kPairs{{
      {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}, {3, 5}, {4, 4}, {4, 5}, {5, 5}}};
  if (slot < 0 || slot >= kDegreePairCount) {
    throw DomainError("degree pair slot " + std::to_string(slot) + " out of range");
  }
  return kPairs[static_cast<std::size_t>(slot)];
}

int EdgeTypeVector::total() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

EdgeTypeVector edge_type_counts_direct(const ChainGraph& g) {
  EdgeTypeVector out;
  for (const auto& e : g.edges()) {
    ++out.counts[static_cast<std::size_t>(degree_pair_slot(g.degree(e.u), g.degree(e.v)))];
  }
  for (int d : g.degrees()) {
    if (d < kMinDegree || d > kMaxFamilyDegree) {
      throw DomainError("vertex degree " + std::to_string(d) + " outside [2, 5]");
    }
    ++out.vertices.counts[static_cast<std::size_t>(d - kMinDegree)];
  }
  return out;
}

SegmentProfile segment_profile(const LengthVector& v) {
  SegmentProfile p;
  for (int len : v.entries()) {
    p.eta.push_back(len == 3 ? 1 : 0);
    p.xi.push_back(len == 4 ? 1 : 0);
    p.sigma.push_back(len == 5 ? 1 : 0);
  }
  return p;
}

std::string to_dot(const ChainGraph& g, std::string_view graph_name) {
  std::ostringstream out;
  out << "graph " << graph_name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  v" << v + 1 << " [label=\"v" << v + 1 << " (" << g.degree(v)
        << ")\", degree=" << g.degree(v) << "];\n";
  }
  for (const auto& e : g.edges()) out << "  v" << e.u + 1 << " -- v" << e.v + 1 << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace trichain
