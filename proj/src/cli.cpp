#include "trichain/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "trichain/bid_catalog.hpp"
#include "trichain/chain_model.hpp"
#include "trichain/closed_form.hpp"
#include "trichain/errors.hpp"
#include "trichain/extremal.hpp"

namespace trichain::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { table, json, csv };

constexpr int kRealDigits = 9;

double round_real(double x) {
  const double scale = std::pow(10.0, kRealDigits);
  const double r = std::round(x * scale) / scale;
  return r == 0.0 ? 0.0 : r;  // no "-0"
}

std::string format_real(double x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(kRealDigits) << round_real(x);
  return s.str();
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string pair_key(int slot) {
  const auto [a, b] = degree_pair(slot);
  return std::to_string(a) + "," + std::to_string(b);
}

std::vector<std::string> vector_strings(const std::vector<LengthVector>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.to_string());
  return out;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (const auto& i : items) {
    if (!out.empty()) out += sep;
    out += i;
  }
  return out;
}

std::vector<std::string> family_names(const LengthVector& v) {
  std::vector<std::string> out;
  for (auto f : families_of(v)) out.emplace_back(to_string(f));
  return out;
}

// Options shared by the index-consuming subcommands.
struct IndexChoice {
  std::string name;
  std::string theta_file;

  IndexDescriptor resolve() const {
    if (!theta_file.empty()) return load_theta_file(theta_file);
    if (name.empty()) throw InputError("one of --index or --theta-file is required");
    return catalog_index(name);
  }
};

struct Options {
  Format format = Format::table;
  std::string out_path;
  std::string vector_text;
  int n = 0;
  int n_from = 0;
  int n_to = 0;
  IndexChoice index;
};

void require_format(Format f, std::initializer_list<Format> allowed, std::string_view command) {
  for (auto a : allowed) {
    if (a == f) return;
  }
  throw InputError(std::string(command) + " does not support this --format");
}

int cmd_info(const Options& o, std::ostream& out) {
  require_format(o.format, {Format::table, Format::json}, "info");
  const auto v = LengthVector::parse(o.vector_text);
  const auto g = build_chain_graph(v);
  const auto census = edge_type_counts_direct(g);

  if (o.format == Format::json) {
    ordered_json j;
    j["vector"] = v.to_string();
    j["n"] = v.triangles();
    j["s"] = v.segments();
    j["canonical"] = canonicalize(v).to_string();
    j["in_family"] = g.in_family();
    j["max_degree"] = g.max_degree();
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edges().size();
    j["families"] = family_names(v);
    ordered_json vc;
    for (int d = kMinDegree; d <= kMaxFamilyDegree; ++d) vc[std::to_string(d)] = census.vertices.at(d);
    j["vertex_census"] = vc;
    ordered_json ec;
    for (int slot = 0; slot < kDegreePairCount; ++slot) {
      ec[pair_key(slot)] = census.counts[static_cast<std::size_t>(slot)];
    }
    j["edge_types"] = ec;
    out << j.dump(2) << '\n';
    return kExitSuccess;
  }

  const auto fams = family_names(v);
  out << "vector      " << v.to_string() << '\n'
      << "canonical   " << canonicalize(v).to_string() << '\n'
      << "n           " << v.triangles() << '\n'
      << "s           " << v.segments() << '\n'
      << "vertices    " << g.vertex_count() << '\n'
      << "edges       " << g.edges().size() << '\n'
      << "max_degree  " << g.max_degree() << '\n'
      << "in_family   " << (g.in_family() ? "true" : "false") << '\n'
      << "families    " << (fams.empty() ? "generic" : join(fams, ",")) << '\n'
      << "vertex census\n";
  for (int d = kMinDegree; d <= kMaxFamilyDegree; ++d) {
    out << "  n" << d << "  " << census.vertices.at(d) << '\n';
  }
  out << "edge types\n";
  for (int slot = 0; slot < kDegreePairCount; ++slot) {
    out << "  (" << pair_key(slot) << ")  " << census.counts[static_cast<std::size_t>(slot)]
        << '\n';
  }
  return kExitSuccess;
}

int cmd_index(const Options& o, std::ostream& out) {
  require_format(o.format, {Format::table, Format::json}, "index");
  const auto v = LengthVector::parse(o.vector_text);
  const auto idx = o.index.resolve();
  const auto g = build_chain_graph(v);

  ordered_json j;
  j["index"] = idx.name();
  j["vector"] = v.to_string();
  j["n"] = v.triangles();
  j["s"] = v.segments();
  std::string direct_text, closed_text, diff_text;
  if (idx.integer_valued()) {
    const auto direct = direct_bid_index_exact(g, idx);
    const auto closed = ti_closed_form_exact(v, idx);
    j["direct"] = direct;
    j["closed"] = closed;
    j["diff"] = closed - direct;
    direct_text = std::to_string(direct);
    closed_text = std::to_string(closed);
    diff_text = std::to_string(closed - direct);
  } else {
    const double direct = direct_bid_index(g, idx);
    const double closed = ti_closed_form(v, idx);
    j["direct"] = round_real(direct);
    j["closed"] = round_real(closed);
    j["diff"] = round_real(closed - direct);
    direct_text = format_real(direct);
    closed_text = format_real(closed);
    diff_text = format_real(closed - direct);
  }
  std::optional<std::string> product;
  if (idx.name() == "ln-pi1") {
    product = multiplicative_sum_zagreb(g).exact_product.str();
    j["exact_product"] = *product;
  }

  if (o.format == Format::json) {
    out << j.dump(2) << '\n';
    return kExitSuccess;
  }
  out << "index   " << idx.name() << '\n'
      << "vector  " << v.to_string() << '\n'
      << "direct  " << direct_text << '\n'
      << "closed  " << closed_text << '\n'
      << "diff    " << diff_text << '\n';
  if (product) out << "product " << *product << '\n';
  return kExitSuccess;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const auto vs = enumerate_length_vectors(o.n);
  switch (o.format) {
    case Format::json: {
      ordered_json j;
      j["n"] = o.n;
      j["count"] = vs.size();
      j["vectors"] = vector_strings(vs);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "n,s,vector\n";
      for (const auto& v : vs) {
        out << o.n << ',' << v.segments() << ',' << csv_quote(v.to_string()) << '\n';
      }
      break;
    case Format::table:
      for (const auto& v : vs) out << v.to_string() << '\n';
      break;
  }
  return kExitSuccess;
}

std::vector<std::string> exploratory_notes(const std::string& index) {
  if (index == "azi") return {"max: exploratory, open problem"};
  if (index == "abc") return {"min: exploratory, open problem"};
  return {};
}

int cmd_extremal(const Options& o, std::ostream& out) {
  const auto idx = o.index.resolve();
  const auto r = brute_force_extremal(o.n, idx);
  const auto value_text = [&](double v, const std::optional<std::string>& exact) {
    return exact ? *exact : format_real(v);
  };
  const auto notes = exploratory_notes(idx.name());

  switch (o.format) {
    case Format::json: {
      ordered_json j;
      j["n"] = r.n;
      j["index"] = r.index;
      j["count"] = r.search_space;
      if (r.exact_min) {
        j["min"] = std::stoll(*r.exact_min);
        j["max"] = std::stoll(*r.exact_max);
      } else {
        j["min"] = round_real(r.min_value);
        j["max"] = round_real(r.max_value);
      }
      j["argmin"] = vector_strings(r.argmin);
      j["argmax"] = vector_strings(r.argmax);
      j["notes"] = notes;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv: {
      out << "vector,s,value,is_min,is_max\n";
      const auto in = [](const std::vector<LengthVector>& set, const LengthVector& v) {
        return std::find(set.begin(), set.end(), v) != set.end() ? 1 : 0;
      };
      for (const auto& v : enumerate_length_vectors(o.n)) {
        const std::string value = idx.integer_valued()
                                      ? std::to_string(ti_closed_form_exact(v, idx))
                                      : format_real(ti_closed_form(v, idx));
        out << csv_quote(v.to_string()) << ',' << v.segments() << ',' << value << ','
            << in(r.argmin, v) << ',' << in(r.argmax, v) << '\n';
      }
      break;
    }
    case Format::table:
      out << "n      " << r.n << '\n'
          << "index  " << r.index << '\n'
          << "count  " << r.search_space << '\n'
          << "min    " << value_text(r.min_value, r.exact_min) << " at "
          << join(vector_strings(r.argmin), " | ") << '\n'
          << "max    " << value_text(r.max_value, r.exact_max) << " at "
          << join(vector_strings(r.argmax), " | ") << '\n';
      for (const auto& note : notes) out << "note   " << note << '\n';
      break;
  }
  return kExitSuccess;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto report = verify_claims(o.n_from, o.n_to);
  const bool ok = report.all_pass();
  switch (o.format) {
    case Format::json: {
      ordered_json j;
      j["from"] = report.n_from;
      j["to"] = report.n_to;
      j["overall"] = ok ? "pass" : "fail";
      ordered_json claims = ordered_json::array();
      for (const auto& c : report.claims) {
        ordered_json cj;
        cj["id"] = c.id;
        cj["n"] = c.n ? ordered_json(*c.n) : ordered_json(nullptr);
        cj["status"] = std::string(to_string(c.status));
        cj["expected"] = c.expected;
        cj["observed"] = c.observed;
        claims.push_back(std::move(cj));
      }
      j["claims"] = std::move(claims);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "id,n,status,expected,observed\n";
      for (const auto& c : report.claims) {
        out << c.id << ',' << (c.n ? std::to_string(*c.n) : "") << ',' << to_string(c.status)
            << ',' << csv_quote(c.expected) << ',' << csv_quote(c.observed) << '\n';
      }
      break;
    case Format::table: {
      std::size_t failed = 0;
      for (const auto& c : report.claims) {
        if (c.status == ClaimStatus::fail) ++failed;
        out << std::left << std::setw(12) << to_string(c.status) << std::setw(22) << c.id
            << std::setw(6) << (c.n ? "n=" + std::to_string(*c.n) : "") << "expected "
            << c.expected << "; observed " << c.observed << '\n';
      }
      out << "overall: " << (ok ? "pass" : "fail") << " (" << report.claims.size()
          << " claims, " << failed << " failed)\n";
      break;
    }
  }
  return ok ? kExitSuccess : kExitClaimsFailed;
}

int cmd_export_dot(const Options& o, std::ostream& out) {
  const auto v = LengthVector::parse(o.vector_text);
  out << to_dot(build_chain_graph(v));
  return kExitSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triangular chain graphs and bond-incident-degree indices"};
  app.require_subcommand(1);

  Options o;
  const std::map<std::string, Format> formats{
      {"table", Format::table}, {"json", Format::json}, {"csv", Format::csv}};
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format: table, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", o.out_path, "Write output to PATH instead of stdout");
  };
  const auto add_index = [&](CLI::App* sub) {
    auto* name = sub->add_option("--index", o.index.name,
                                 "Catalog index: " + join(catalog_names(), ", "));
    auto* file = sub->add_option("--theta-file", o.index.theta_file,
                                 "Custom index table: 10 rows of 'a,b weight'");
    name->excludes(file);
  };

  auto* info = app.add_subcommand("info", "Degree and edge-type census of a chain");
  info->add_option("--vector", o.vector_text, "Length vector, e.g. 3,4,3")->required();
  add_common(info);

  auto* index = app.add_subcommand("index", "Index value by edge sum and by closed form");
  index->add_option("--vector", o.vector_text, "Length vector")->required();
  add_index(index);
  add_common(index);

  auto* enumerate = app.add_subcommand("enumerate", "Canonical length vectors with n triangles");
  enumerate->add_option("--n", o.n, "Triangle count (>= 4)")->required();
  add_common(enumerate);

  auto* extremal = app.add_subcommand("extremal", "Brute-force minimum and maximum over the family");
  extremal->add_option("--n", o.n, "Triangle count (>= 4)")->required();
  add_index(extremal);
  add_common(extremal);

  auto* verify = app.add_subcommand("verify", "Check every extremal claim against brute force");
  verify->add_option("--from", o.n_from, "First triangle count")->required();
  verify->add_option("--to", o.n_to, "Last triangle count")->required();
  add_common(verify);

  auto* dot = app.add_subcommand("export-dot", "Graphviz DOT of a chain");
  dot->add_option("--vector", o.vector_text, "Length vector")->required();
  dot->add_option("--out", o.out_path, "Write output to PATH instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::unique_ptr<std::ofstream> file;
  std::ostream* sink = &out;
  if (!o.out_path.empty()) {
    file = std::make_unique<std::ofstream>(o.out_path);
    if (!*file) {
      err << "error: cannot open '" << o.out_path << "' for writing\n";
      return kExitUsage;
    }
    sink = file.get();
  }

  try {
    if (info->parsed()) return cmd_info(o, *sink);
    if (index->parsed()) return cmd_index(o, *sink);
    if (enumerate->parsed()) return cmd_enumerate(o, *sink);
    if (extremal->parsed()) return cmd_extremal(o, *sink);
    if (verify->parsed()) return cmd_verify(o, *sink);
    if (dot->parsed()) return cmd_export_dot(o, *sink);
  } catch (const InternalConsistencyError& e) {
    err << "internal consistency error: " << e.what() << '\n';
    return kExitClaimsFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace trichain::cli
