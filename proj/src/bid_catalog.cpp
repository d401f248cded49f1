#include "trichain/bid_catalog.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "trichain/errors.hpp"

namespace trichain {

namespace {

template <typename F>
ThetaTable tabulate(F&& f) {
  ThetaTable t{};
  for (int slot = 0; slot < kDegreePairCount; ++slot) {
    const auto [a, b] = degree_pair(slot);
    t[static_cast<std::size_t>(slot)] = f(static_cast<double>(a), static_cast<double>(b));
  }
  return t;
}

template <typename F>
ExactThetaTable tabulate_exact(F&& f) {
  ExactThetaTable t{};
  for (int slot = 0; slot < kDegreePairCount; ++slot) {
    const auto [a, b] = degree_pair(slot);
    t[static_cast<std::size_t>(slot)] = f(std::int64_t{a}, std::int64_t{b});
  }
  return t;
}

std::vector<IndexDescriptor> make_catalog() {
  std::vector<IndexDescriptor> c;
  c.emplace_back("randic", tabulate([](double a, double b) { return 1.0 / std::sqrt(a * b); }));
  c.emplace_back("ga1", tabulate([](double a, double b) { return 2.0 * std::sqrt(a * b) / (a + b); }));
  c.emplace_back("sci", tabulate([](double a, double b) { return 1.0 / std::sqrt(a + b); }));
  c.emplace_back("mod-m2", tabulate([](double a, double b) { return 1.0 / (a * b); }));
  c.emplace_back("ln-pi1", tabulate([](double a, double b) { return std::log(a + b); }));
  c.emplace_back("harmonic", tabulate([](double a, double b) { return 2.0 / (a + b); }));
  c.emplace_back("azi", tabulate([](double a, double b) { return std::pow(a * b / (a + b - 2.0), 3); }));
  c.emplace_back("albertson",
                 tabulate_exact([](std::int64_t a, std::int64_t b) { return a > b ? a - b : b - a; }));
  c.emplace_back("m2", tabulate_exact([](std::int64_t a, std::int64_t b) { return a * b; }));
  c.emplace_back("abc", tabulate([](double a, double b) { return std::sqrt((a + b - 2.0) / (a * b)); }));
  return c;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

IndexDescriptor::IndexDescriptor(std::string name, const ThetaTable& table)
    : name_(std::move(name)), table_(table) {
  for (int slot = 0; slot < kDegreePairCount; ++slot) {
    if (!std::isfinite(table_[static_cast<std::size_t>(slot)])) {
      const auto [a, b] = degree_pair(slot);
      throw DomainError("index '" + name_ + "': theta(" + std::to_string(a) + "," +
                        std::to_string(b) + ") is not finite");
    }
  }
}

IndexDescriptor::IndexDescriptor(std::string name, const ExactThetaTable& table)
    : name_(std::move(name)), exact_(table) {
  for (std::size_t i = 0; i < table.size(); ++i) table_[i] = static_cast<double>(table[i]);
}

double IndexDescriptor::theta(int a, int b) const {
  return table_[static_cast<std::size_t>(degree_pair_slot(a, b))];
}

std::int64_t IndexDescriptor::theta_exact(int a, int b) const {
  if (!exact_) throw DomainError("index '" + name_ + "' is not integer valued");
  return (*exact_)[static_cast<std::size_t>(degree_pair_slot(a, b))];
}

std::span<const IndexDescriptor> catalog() {
  static const std::vector<IndexDescriptor> kCatalog = make_catalog();
  return kCatalog;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& i : catalog()) names.push_back(i.name());
  return names;
}

const IndexDescriptor& catalog_index(std::string_view name) {
  for (const auto& i : catalog()) {
    if (i.name() == name) return i;
  }
  std::string known;
  for (const auto& n : catalog_names()) known += (known.empty() ? "" : ", ") + n;
  throw UnknownIndexError("unknown index '" + std::string(name) + "'; available: " + known);
}

IndexDescriptor load_theta_table(std::istream& in, std::string name) {
  ThetaTable table{};
  std::array<bool, kDegreePairCount> seen{};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::replace(line.begin(), line.end(), '\t', ' ');
    std::istringstream row(line);
    int a = 0;
    int b = 0;
    double w = 0.0;
    std::string extra;
    if (!(row >> a >> b >> w) || (row >> extra)) {
      throw InputError("theta table line " + std::to_string(line_no) +
                       ": expected 'a,b weight', got '" + line + "'");
    }
    int slot = 0;
    try {
      slot = degree_pair_slot(a, b);
    } catch (const DomainError& e) {
      throw InputError("theta table line " + std::to_string(line_no) + ": " + e.what());
    }
    if (seen[static_cast<std::size_t>(slot)]) {
      throw InputError("theta table line " + std::to_string(line_no) + ": pair (" +
                       std::to_string(std::min(a, b)) + "," + std::to_string(std::max(a, b)) +
                       ") given twice");
    }
    if (!std::isfinite(w)) {
      throw InputError("theta table line " + std::to_string(line_no) + ": weight is not finite");
    }
    seen[static_cast<std::size_t>(slot)] = true;
    table[static_cast<std::size_t>(slot)] = w;
  }
  for (int slot = 0; slot < kDegreePairCount; ++slot) {
    if (!seen[static_cast<std::size_t>(slot)]) {
      const auto [a, b] = degree_pair(slot);
      throw InputError("theta table is missing pair (" + std::to_string(a) + "," +
                       std::to_string(b) + ")");
    }
  }
  return IndexDescriptor(std::move(name), table);
}

IndexDescriptor load_theta_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open theta file '" + path.string() + "'");
  return load_theta_table(in, path.stem().string());
}

double theta_eval(const IndexDescriptor& index, int a, int b) { return index.theta(a, b); }

double direct_bid_index(const ChainGraph& g, const IndexDescriptor& index) {
  if (index.integer_valued()) return static_cast<double>(direct_bid_index_exact(g, index));
  double sum = 0.0;
  for (const auto& e : g.edges()) sum += index.theta(g.degree(e.u), g.degree(e.v));
  return sum;
}

std::int64_t direct_bid_index_exact(const ChainGraph& g, const IndexDescriptor& index) {
  std::int64_t sum = 0;
  for (const auto& e : g.edges()) sum += index.theta_exact(g.degree(e.u), g.degree(e.v));
  return sum;
}

SumZagrebProduct multiplicative_sum_zagreb(const ChainGraph& g) {
  SumZagrebProduct out;
  out.exact_product = 1;
  for (const auto& e : g.edges()) {
    const int w = g.degree(e.u) + g.degree(e.v);
    out.ln_value += std::log(static_cast<double>(w));
    out.exact_product *= w;
  }
  return out;
}

}  // namespace trichain
