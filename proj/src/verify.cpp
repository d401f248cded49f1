#include <array>
#include <cmath>
#include <string>

#include "trichain/errors.hpp"
#include "trichain/extremal.hpp"

namespace trichain {

namespace {

std::string set_string(const std::vector<LengthVector>& vs) {
  std::string out = "{";
  for (const auto& v : vs) {
    if (out.size() > 1) out += ", ";
    out += "(" + v.to_string() + ")";
  }
  return out + "}";
}

std::vector<LengthVector> family(ChainFamily kind, int n) {
  return special_chain(kind, n).vectors;
}

class ClaimSink {
 public:
  explicit ClaimSink(std::vector<Claim>& claims) : claims_(claims) {}

  void add(std::string id, std::optional<int> n, bool pass, std::string expected,
           std::string observed) {
    claims_.push_back({std::move(id), n, pass ? ClaimStatus::pass : ClaimStatus::fail,
                       std::move(expected), std::move(observed)});
  }

  // Extremizer set only.
  void extremizers(const std::string& id, int n, const std::vector<LengthVector>& expected,
                   const std::vector<LengthVector>& observed) {
    add(id, n, expected == observed, set_string(expected), set_string(observed));
  }

  // Exact value and extremizer set.
  void bound(const std::string& id, int n, std::int64_t value,
             const std::vector<LengthVector>& expected, const std::string& observed_value,
             const std::vector<LengthVector>& observed) {
    const auto want = std::to_string(value);
    add(id, n, want == observed_value && expected == observed,
        want + " at " + set_string(expected), observed_value + " at " + set_string(observed));
  }

  void exploratory(const std::string& id, int n, const std::vector<LengthVector>& observed,
                   double value) {
    claims_.push_back({id, n, ClaimStatus::exploratory, "no claim (open problem)",
                       std::to_string(value) + " at " + set_string(observed)});
  }

 private:
  std::vector<Claim>& claims_;
};

std::string lambda_string(const std::array<double, 5>& l) {
  std::string out = "(";
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(l[i]);
  }
  return out + ")";
}

void coefficient_claims(ClaimSink& sink, int n_from, int n_to) {
  for (const char* name : {"randic", "sci", "harmonic", "ga1", "mod-m2"}) {
    const auto r = check_corollary_hypotheses(catalog_index(name));
    sink.add(std::string("hypotheses/") + name, std::nullopt, r.cr1_part1 && r.cr2_part1,
             "cr1 part 1 and cr2 part 1 hold",
             std::string("cr1.1=") + (r.cr1_part1 ? "true" : "false") +
                 " cr2.1=" + (r.cr2_part1 ? "true" : "false"));
  }
  {
    const auto r = check_corollary_hypotheses(catalog_index("ln-pi1"));
    sink.add("hypotheses/ln-pi1", std::nullopt, r.cr1_part2 && r.cr2_part2,
             "cr1 part 2 and cr2 part 2 hold",
             std::string("cr1.2=") + (r.cr1_part2 ? "true" : "false") +
                 " cr2.2=" + (r.cr2_part2 ? "true" : "false"));
  }
  {
    const auto r = check_corollary_hypotheses(catalog_index("abc"));
    sink.add("hypotheses/abc", std::nullopt, r.cr2_part2_modified,
             "-L1-L3 < L5 < 0, L1..L4 > 0, 2L4 > L1 > L2, L1+L5 < L2+L4",
             std::string("modified cr2.2=") + (r.cr2_part2_modified ? "true" : "false"));
  }
  {
    constexpr std::array<double, 5> kExpected{-4.2147, -2.5597, 3.8267, -2.2860, 2.8333};
    const auto l = compute_lambdas(catalog_index("azi"), kMinTriangles);
    const std::array<double, 5> got{l.lambda1, l.lambda2, l.lambda3, l.lambda4, l.lambda5};
    bool ok = true;
    for (std::size_t i = 0; i < got.size(); ++i) ok = ok && std::abs(got[i] - kExpected[i]) <= 5e-5;
    sink.add("lambdas/azi", std::nullopt, ok, lambda_string(kExpected) + " +/- 5e-5",
             lambda_string(got));
  }
  {
    const auto& idx = catalog_index("albertson");
    bool ok = true;
    std::string observed;
    for (int n = n_from; n <= n_to; ++n) {
      const auto l = compute_lambdas_exact(idx, n);
      const bool here = l.lambda0 == 2 && l.lambda1 == -2 && l.lambda2 == 0 && l.lambda3 == 8 &&
                        l.lambda4 == -2 && l.lambda5 == -2;
      if (!here && observed.empty()) observed = "mismatch at n=" + std::to_string(n);
      ok = ok && here;
    }
    sink.add("lambdas/albertson", std::nullopt, ok, "(2, -2, 0, 8, -2, -2)",
             ok ? "(2, -2, 0, 8, -2, -2)" : observed);
  }
  {
    const auto& idx = catalog_index("m2");
    bool ok = true;
    std::string observed;
    for (int n = n_from; n <= n_to; ++n) {
      const auto l = compute_lambdas_exact(idx, n);
      const bool here = l.lambda0 == 32 * n - 43 && l.lambda1 == -2 && l.lambda2 == -1 &&
                        l.lambda3 == 7 && l.lambda4 == -1 && l.lambda5 == 1;
      if (!here && observed.empty()) observed = "mismatch at n=" + std::to_string(n);
      ok = ok && here;
    }
    sink.add("lambdas/m2", std::nullopt, ok, "(32n-43, -2, -1, 7, -1, 1)",
             ok ? "(32n-43, -2, -1, 7, -1, 1)" : observed);
  }
}

void per_n_claims(ClaimSink& sink, int n) {
  const auto linear = family(ChainFamily::linear, n);
  const auto zigzag = family(ChainFamily::zigzag, n);

  for (const char* name : {"randic", "sci", "harmonic", "ga1", "mod-m2"}) {
    const auto r = brute_force_extremal(n, catalog_index(name));
    sink.extremizers(std::string("cor/") + name + "/max", n, linear, r.argmax);
    sink.extremizers(std::string("cor/") + name + "/min", n, zigzag, r.argmin);
  }
  {
    const auto r = brute_force_sum_zagreb_product(n);
    sink.extremizers("cor/pi1/min", n, linear, r.argmin);
    sink.extremizers("cor/pi1/max", n, zigzag, r.argmax);
  }
  {
    const auto r = brute_force_extremal(n, catalog_index("azi"));
    sink.extremizers("azi/min", n, n <= 8 ? zigzag : family(ChainFamily::t_minus, n), r.argmin);
    sink.exploratory("azi/max", n, r.argmax, r.max_value);
  }
  {
    const auto r = brute_force_extremal(n, catalog_index("albertson"));
    sink.bound("albertson/min", n, 10, linear, *r.exact_min, r.argmin);
    sink.bound("albertson/max", n, n % 2 == 0 ? 3 * n + 2 : 3 * n + 1, zigzag, *r.exact_max,
               r.argmax);
  }
  {
    const auto r = brute_force_extremal(n, catalog_index("m2"));
    sink.bound("m2/min", n, 4 * (8 * n - 9), linear, *r.exact_min, r.argmin);
    if (n == 5) {
      sink.bound("m2/max", n, 128, zigzag, *r.exact_max, r.argmax);
    } else if (n % 2 == 0) {
      sink.bound("m2/max", n, 35 * n - 45, zigzag, *r.exact_max, r.argmax);
    } else {
      sink.bound("m2/max", n, 35 * n - 46, family(ChainFamily::t_star, n), *r.exact_max,
                 r.argmax);
    }
  }
  {
    const auto r = brute_force_extremal(n, catalog_index("abc"));
    sink.extremizers("abc/max", n, zigzag, r.argmax);
    sink.exploratory("abc/min", n, r.argmin, r.min_value);
  }
  if (n >= 8) {
    // For x >= 6 the middle segment contributes only L3, so the value is n-independent.
    const double value = phi(family(ChainFamily::t_minus, n).front(), catalog_index("azi")).total;
    sink.add("azi/phi-t-minus", n, std::abs(value - 3.0507) <= 1e-3, "3.0507 +/- 1e-3",
             std::to_string(value));
  }
}

}  // namespace

std::string_view to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::exploratory: return "exploratory";
  }
  return "fail";
}

bool VerificationReport::all_pass() const {
  for (const auto& c : claims) {
    if (c.status == ClaimStatus::fail) return false;
  }
  return true;
}

VerificationReport verify_claims(int n_from, int n_to) {
  if (n_from < kMinTriangles) {
    throw DomainError("verification range must start at n >= 4, got " + std::to_string(n_from));
  }
  if (n_to < n_from) {
    throw DomainError("empty verification range [" + std::to_string(n_from) + ", " +
                      std::to_string(n_to) + "]");
  }
  VerificationReport report;
  report.n_from = n_from;
  report.n_to = n_to;
  ClaimSink sink(report.claims);
  coefficient_claims(sink, n_from, n_to);
  for (int n = n_from; n <= n_to; ++n) per_n_claims(sink, n);
  return report;
}

}  // namespace trichain
