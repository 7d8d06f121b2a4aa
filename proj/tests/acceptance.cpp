// One line per acceptance criterion; exit status 1 when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "jackpos/expr_parse.hpp"
#include "jackpos/verify.hpp"

using namespace jackpos;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

MPoly P(std::string_view s) { return parse_poly(s); }
MPoly in_beta(std::string_view s) { return alpha_to_beta(P(s)); }

std::vector<Partition> without_ones_upto(int hi) {
  std::vector<Partition> out;
  for (int k = 2; k <= hi; ++k)
    for (auto& mu : enumerate_without_ones(k)) out.push_back(std::move(mu));
  return out;
}

std::string tally(const std::vector<Report>& reports) {
  const Summary s = summarize(reports);
  return std::to_string(s.pass) + " pass, " + std::to_string(s.fail) + " fail, " + std::to_string(s.finding) +
         " finding";
}

bool all_pass(const std::vector<Report>& reports) {
  if (reports.empty()) return false;
  for (const auto& r : reports)
    if (r.verdict != Verdict::pass) return false;
  return true;
}

Outcome gram() {
  int pairs = 0, bad = 0;
  for (int n = 0; n <= 8; ++n) {
    const auto parts = enumerate_partitions(n);
    std::vector<SymFun> js;
    for (const auto& la : parts) js.push_back(jack(la).in_p);
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = 0; j < parts.size(); ++j) {
        const RatFunc expected = i == j ? RatFunc(hook_products(parts[i]).j) : RatFunc();
        ++pairs;
        if (scalar_product(js[i], js[j]) != expected) ++bad;
      }
  }
  return {bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches"};
}

Outcome table() {
  const auto reports = check_table6();
  return {all_pass(reports), std::to_string(reports.size()) + " relations: " + tally(reports)};
}

Outcome one_rectangle_displays() {
  const std::vector<std::pair<Partition, const char*>> displays{
      {{2}, "p q (alpha q + p + beta)"},
      {{3}, "p q (alpha q + p + beta)(alpha q + p + 2 beta) + alpha p q (p q + 1)"},
      {{4},
       "p q ((alpha q + p + beta)(alpha q + p + 2 beta) + alpha (p q + 1))(alpha q + p + 3 beta)"
       " + 2 alpha p q (p q + 2)(alpha q + p + beta)"},
      {{2, 2},
       "2 p q (alpha q + p + beta)(alpha q + p + 2 beta) + 2 alpha p q (p q + 1)"
       " + p q (p q + 2)(alpha q + p + beta)^2"},
  };
  int bad = 0;
  for (const auto& [mu, text] : displays)
    if (rect_positive_form(rect_recurrence(mu)) != in_beta(text)) ++bad;
  return {bad == 0, "4 displays, " + std::to_string(bad) + " mismatches"};
}

Outcome two_rectangle_displays() {
  const std::vector<std::pair<Partition, const char*>> displays{
      {{2}, "p1 q1^2 + p2 q2^2 + 2 p1 p2 q2 + p1^2 q1 + p2^2 q2 + beta (p1 q1 + p2 q2 + p1 q1^2 + p2 q2^2)"},
      {{3},
       "p1 q1 + p2 q2 + p1 q1^3 + p2 q2^3 + p1^3 q1 + p2^3 q2 + 3 p1^2 p2 q2 + 3 p1 p2^2 q2"
       " + 3 p1 p2 q2^2 + 3 p1 p2 q1 q2 + 3 p1^2 q1^2 + 3 p2^2 q2^2"
       " + beta (p1 q1 + p2 q2 + 3 p1 q1^2 + 3 p2 q2^2 + 3 p1^2 q1 + 3 p2^2 q2 + 6 p1 p2 q2"
       " + 3 p1^2 q1^2 + 3 p2^2 q2^2 + 3 p1 p2 q2^2 + 2 p1 q1^3 + 2 p2 q2^3 + 3 p1 p2 q1 q2)"
       " + beta^2 (2 p1 q1 + 2 p2 q2 + 3 p1 q1^2 + 3 p2 q2^2 + p1 q1^3 + p2 q2^3)"},
  };
  int bad = 0;
  for (const auto& [mu, text] : displays)
    if (negate_q(rect_theta_symbolic(2, mu).poly, 2, mu.weight()) != P(text)) ++bad;
  return {bad == 0, "2 displays, " + std::to_string(bad) + " mismatches"};
}

Outcome theorem1() {
  std::vector<Report> signs, findings;
  int integral = 0;
  for (const auto& mu : without_ones_upto(6)) {
    auto rs = check_theorem1(mu);
    signs.push_back(rs[0]);
    if (rs[1].witness->at("integer").get<bool>()) ++integral;
    findings.push_back(rs[1]);
  }
  return {all_pass(signs), "signs " + tally(signs) + "; integral in " + std::to_string(integral) + " of " +
                               std::to_string(findings.size())};
}

Outcome theorem2() {
  std::vector<Report> reports{check_thm2_display()};
  for (const auto& mu : without_ones_upto(5))
    for (auto& r : check_thm2(mu)) reports.push_back(std::move(r));
  return {all_pass(reports), "display and " + std::to_string(reports.size() - 1) + " checks: " + tally(reports)};
}

Outcome identities() {
  const auto reports = sweep(identity_check_ids(), {0, 7});
  const bool swept = all_pass(reports);
  // Every checker must reject a perturbed identity somewhere in a small range.
  std::map<std::string, bool> caught;
  for (const auto& id : identity_check_ids()) caught[id] = false;
  for (const auto& c : sweep_cases(identity_check_ids(), {0, 5}))
    if (!caught[c.check] && run_case(c, 1).verdict == Verdict::fail) caught[c.check] = true;
  std::string missed;
  for (const auto& [id, hit] : caught)
    if (!hit) missed += " " + id;
  return {swept && missed.empty(), tally(reports) + "; mutations " + (missed.empty() ? "all caught" : "missed:" + missed)};
}

Outcome rectangular_binomials() {
  std::vector<Report> reports;
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q)
      for (int k = 0; k <= p * q; ++k)
        for (const auto& rho : enumerate_partitions(k)) reports.push_back(check_rect_binom(p, q, rho));
  return {all_pass(reports), tally(reports)};
}

Outcome extension() {
  auto reports = check_extension_values();
  for (auto [p, q] : {std::pair{1, 1}, std::pair{3, 1}, std::pair{2, 2}})
    for (const auto& mu : without_ones_upto(5))
      if (mu.weight() > p * q) reports.push_back(check_extension_divisibility(mu, p, q));
  for (auto& r : check_independence_displays()) reports.push_back(std::move(r));
  return {all_pass(reports), tally(reports)};
}

Outcome conjecture() {
  int held = 0, total = 0;
  std::string broken;
  for (int m = 1; m <= 2; ++m)
    for (const auto& mu : without_ones_upto(4)) {
      ++total;
      if (conjecture1_holds(check_conjecture1(m, mu)))
        ++held;
      else
        broken += " m=" + std::to_string(m) + ":" + mu.to_string();
    }
  return {held == total, std::to_string(held) + " of " + std::to_string(total) + " audits hold" + broken};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 Gram self-check, weight <= 8", gram},
      {"AC2 rectangular recurrence table", table},
      {"AC3 one-rectangle displays", one_rectangle_displays},
      {"AC4 two-rectangle displays", two_rectangle_displays},
      {"AC5 sign pattern, |mu| <= 6", theorem1},
      {"AC6 rectangular binomial sum", theorem2},
      {"AC7 identity suites, |lambda| <= 7", identities},
      {"AC8 rectangular binomial closed form, 4x4", rectangular_binomials},
      {"AC9 extension beyond the rectangle", extension},
      {"AC10 positivity audit, m <= 2, |mu| <= 4", conjecture},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << name << ": " << (o.ok ? "pass" : "fail") << " (" << o.note << "; " << secs << " s)" << std::endl;
    if (!o.ok) ++failed;
  }
  return failed ? 1 : 0;
}
