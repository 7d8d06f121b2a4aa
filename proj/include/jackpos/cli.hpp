#pragma once

// Command-line front end. `run` is the whole program; tools/jackpos.cpp only forwards argv.

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jackpos/errors.hpp"
#include "jackpos/jack.hpp"
#include "jackpos/json_io.hpp"
#include "jackpos/parallel.hpp"
#include "jackpos/partition.hpp"
#include "jackpos/rect.hpp"
#include "jackpos/symfun.hpp"
#include "jackpos/theta.hpp"
#include "jackpos/verify.hpp"

namespace jackpos::cli {

struct Config {
  int max_weight = jackpos::max_weight();
  std::string output = "json";
  unsigned seed = 42;
  int jobs = 1;
  bool timing = false;
};

struct Output {
  json value;
  std::optional<std::string> text;
  bool failed = false;  // some report has verdict "fail"
};

namespace detail {

inline const char* error_name(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const DenominatorVanishes*>(&e)) return "DenominatorVanishes";
  if (dynamic_cast<const NotDivisible*>(&e)) return "NotDivisible";
  if (dynamic_cast<const WeightMismatch*>(&e)) return "WeightMismatch";
  if (dynamic_cast<const WeightLimitExceeded*>(&e)) return "WeightLimitExceeded";
  if (dynamic_cast<const InvalidMove*>(&e)) return "InvalidMove";
  if (dynamic_cast<const NotContained*>(&e)) return "NotContained";
  if (dynamic_cast<const MuHasOnes*>(&e)) return "MuHasOnes";
  if (dynamic_cast<const MuTooHeavy*>(&e)) return "MuTooHeavy";
  if (dynamic_cast<const RhoTooHeavy*>(&e)) return "RhoTooHeavy";
  if (dynamic_cast<const DegreeBoundViolated*>(&e)) return "DegreeBoundViolated";
  if (dynamic_cast<const DivisionResidue*>(&e)) return "DivisionResidue";
  if (dynamic_cast<const Error*>(&e)) return "Error";
  return "InternalError";
}

/// Errors caused by the arguments rather than by the computation.
inline bool is_usage_error(const std::exception& e) {
  return dynamic_cast<const ParseError*>(&e) || dynamic_cast<const WeightMismatch*>(&e) ||
         dynamic_cast<const WeightLimitExceeded*>(&e) || dynamic_cast<const InvalidMove*>(&e) ||
         dynamic_cast<const NotContained*>(&e) || dynamic_cast<const MuHasOnes*>(&e) ||
         dynamic_cast<const MuTooHeavy*>(&e) || dynamic_cast<const RhoTooHeavy*>(&e);
}

inline Output poly_out(const MPoly& f) { return {to_json(f), f.to_string()}; }
inline Output ratfunc_out(const RatFunc& f) { return {to_json(f), f.to_string()}; }

inline Output poly_with_audit(const MPoly& f, const MPoly& audited) {
  json a = audit_to_json(audited);
  std::string text = f.to_string() + "\nnonneg=" + (a["nonneg"].get<bool>() ? "true" : "false") +
                     " integer=" + (a["integer"].get<bool>() ? "true" : "false") +
                     " unit=" + (a["unit"].get<bool>() ? "true" : "false");
  return {json{{"poly", to_json(f)}, {"audit", std::move(a)}}, text};
}

inline Output reports_out(const std::vector<Report>& reports, bool timing) {
  json arr = json::array();
  std::string text;
  for (const auto& r : reports) {
    arr.push_back(to_json(r, timing));
    text += std::string(verdict_name(r.verdict)) + " " + r.check_id + " " + r.params.dump();
    if (r.witness && r.verdict != Verdict::pass) text += " " + r.witness->dump();
    if (timing) text += " " + std::to_string(r.runtime_ms) + "ms";
    text += "\n";
  }
  const Summary s = summarize(reports);
  text += "pass=" + std::to_string(s.pass) + " fail=" + std::to_string(s.fail) +
          " finding=" + std::to_string(s.finding);
  return {json{{"reports", std::move(arr)}, {"summary", to_json(s)}}, text, s.fail > 0};
}

inline std::vector<Partition> without_ones_between(int lo, int hi) {
  std::vector<Partition> out;
  for (int k = lo; k <= hi; ++k)
    for (auto& mu : enumerate_without_ones(k)) out.push_back(std::move(mu));
  return out;
}

}  // namespace detail

/// Parses argv, runs one command, renders to `out`; diagnostics go to `err`.
/// Returns 0 on success, 1 when a report fails or a computation breaks, 2 on usage errors.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jack polynomial power-sum coefficients and rectangular identities", "jackpos"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--max-weight", cfg.max_weight, "Largest weight of a full Jack expansion")
      ->check(CLI::Range(1, 64));
  app.add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", cfg.seed, "Seed for sampled sweeps");
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1, 256));
  app.add_flag("--timing", cfg.timing, "Include runtime_ms in reports");

  std::function<Output()> action;
  std::string lambda_s, mu_s, rho_s, move_s, which_s, basis_s = "p", mode_s = "interpolate", checks_s;
  int n = 0, r = 0, s = 0, i = 0, m = 1, p = 1, q = 1, max_n = 7, min_n = 0, mu_max = 4, max_k = -1;
  std::size_t sample = 0;
  bool no_ones = false, independent = false, general = false;
  auto P = [](const std::string& t) { return Partition::parse(t); };

  // partitions
  auto* parts = app.add_subcommand("partitions", "Partitions and their statistics");
  parts->require_subcommand(1);
  auto* plist = parts->add_subcommand("list", "All partitions of n in descending lexicographic order");
  plist->add_option("--n", n)->required()->check(CLI::Range(0, 60));
  plist->add_flag("--no-ones", no_ones, "Only partitions without parts equal to 1");
  plist->callback([&] {
    action = [&] {
      const auto all = no_ones ? enumerate_without_ones(n) : enumerate_partitions(n);
      json arr = json::array();
      std::string text;
      for (const auto& la : all) {
        arr.push_back(to_json(la));
        text += la.to_string() + "\n";
      }
      if (!text.empty()) text.pop_back();
      return Output{arr, text};
    };
  });
  auto* pinfo = parts->add_subcommand("info", "Weight, length, conjugate, z and hook products");
  pinfo->add_option("--lambda", lambda_s)->required();
  pinfo->callback([&] {
    action = [&] {
      const Partition la = P(lambda_s);
      const auto h = hook_products(la);
      json j{{"lambda", to_json(la)},
             {"weight", la.weight()},
             {"length", la.length()},
             {"conjugate", to_json(la.conjugate())},
             {"z", la.z_factor().get_str()},
             {"hooks", {{"h", to_json(h.h)}, {"h_prime", to_json(h.h_prime)}, {"j", to_json(h.j)}}},
             {"alpha_d1", to_json(alpha_d1(la))}};
      std::string text = "weight=" + std::to_string(la.weight()) + " length=" + std::to_string(la.length()) +
                         " conjugate=" + la.conjugate().to_string() + " z=" + la.z_factor().get_str() +
                         "\nh=" + h.h.to_string() + "\nh'=" + h.h_prime.to_string() +
                         "\nalpha*d1=" + alpha_d1(la).to_string();
      return Output{j, text};
    };
  });
  auto* pmoves = parts->add_subcommand("moves", "Rows where a box can be added or removed");
  pmoves->add_option("--lambda", lambda_s)->required();
  pmoves->callback([&] {
    action = [&] {
      const auto mv = box_moves(P(lambda_s));
      auto side = [](const std::vector<std::pair<int, Partition>>& v, std::string& text) {
        json a = json::array();
        for (const auto& [row, shape] : v) {
          a.push_back({{"row", row}, {"shape", to_json(shape)}});
          text += " " + std::to_string(row) + ":" + shape.to_string();
        }
        return a;
      };
      std::string ta = "add", tr = "remove";
      json j{{"add", side(mv.add, ta)}, {"remove", side(mv.remove, tr)}};
      return Output{j, ta + "\n" + tr};
    };
  });
  auto* pmod = parts->add_subcommand("modify", "Replace parts of mu (down_r, up_r, down_rs, up_rs, Down_rs, Up_rs)");
  pmod->add_option("--mu", mu_s)->required();
  pmod->add_option("--move", move_s)->required();
  pmod->add_option("--r", r)->required();
  pmod->add_option("--s", s);
  pmod->callback([&] {
    action = [&] {
      const auto kind = mu_move_from_string(move_s);
      if (!kind) throw ParseError("unknown move " + move_s);
      const auto res = mu_modify(P(mu_s), *kind, r, s);
      if (!res) return Output{json(nullptr), std::string("none")};
      return Output{to_json(*res), res->to_string()};
    };
  });
  auto* pdom = parts->add_subcommand("dominance", "Whether a <= b in dominance order");
  std::string b_s;
  pdom->add_option("--a", lambda_s)->required();
  pdom->add_option("--b", b_s)->required();
  pdom->callback([&] {
    action = [&] {
      const bool v = dominance_leq(P(lambda_s), P(b_s));
      return Output{json(v), std::string(v ? "true" : "false")};
    };
  });

  // jack
  auto* jackc = app.add_subcommand("jack", "Jack polynomials and their coefficients");
  jackc->require_subcommand(1);
  auto* jexp = jackc->add_subcommand("expand", "J_lambda in the power-sum or monomial basis");
  jexp->add_option("--lambda", lambda_s)->required();
  jexp->add_option("--basis", basis_s)->check(CLI::IsMember({"p", "m"}));
  jexp->callback([&] {
    action = [&] {
      const auto jl = jack(P(lambda_s));
      const SymFun& f = basis_s == "p" ? jl.in_p : jl.in_m;
      return Output{to_json(f), f.to_string()};
    };
  });
  auto* jth = jackc->add_subcommand("theta", "Coefficient of p_rho in J_lambda");
  jth->add_option("--lambda", lambda_s)->required();
  jth->add_option("--rho", rho_s)->required();
  jth->callback([&] { action = [&] { return detail::poly_out(theta(P(lambda_s), P(rho_s))); }; });
  auto* jbin = jackc->add_subcommand("binom", "Generalized binomial coefficient binom(lambda, mu)");
  jbin->add_option("--lambda", lambda_s)->required();
  jbin->add_option("--mu", mu_s)->required();
  jbin->callback([&] { action = [&] { return detail::ratfunc_out(binom(P(lambda_s), P(mu_s))); }; });
  auto* jpie = jackc->add_subcommand("pieri", "Coefficient c_i(lambda) of J_{lambda^(i)} in p_1 J_lambda");
  jpie->add_option("--lambda", lambda_s)->required();
  jpie->add_option("--i", i)->required();
  jpie->callback([&] { action = [&] { return detail::ratfunc_out(pieri_c(P(lambda_s), i)); }; });
  auto* jgram = jackc->add_subcommand("gram", "Scalar product <J_lambda, J_mu>");
  jgram->add_option("--lambda", lambda_s)->required();
  jgram->add_option("--mu", mu_s)->required();
  jgram->callback([&] {
    action = [&] {
      return detail::ratfunc_out(scalar_product(jack(P(lambda_s)).in_p, jack(P(mu_s)).in_p));
    };
  });

  // theta
  auto* thc = app.add_subcommand("theta", "The normalized coefficients z_mu theta^lambda_{mu,1^{n-k}}");
  thc->require_subcommand(1);
  auto* thh = thc->add_subcommand("hat", "Value at a concrete lambda");
  thh->add_option("--lambda", lambda_s)->required();
  thh->add_option("--mu", mu_s)->required();
  thh->add_flag("--general", general, "Allow parts equal to 1 in mu");
  thh->callback([&] {
    action = [&] {
      const MPoly v = general ? theta_hat_general(P(lambda_s), P(mu_s)) : theta_hat(P(lambda_s), P(mu_s));
      return detail::poly_with_audit(v, v);
    };
  });
  auto* thr = thc->add_subcommand("rect", "Polynomial in (p, q, beta) on m rectangles");
  thr->add_option("--m", m)->check(CLI::Range(1, 4));
  thr->add_option("--mu", mu_s)->required();
  thr->add_option("--mode", mode_s)->check(CLI::IsMember({"interpolate", "closed"}));
  thr->callback([&] {
    action = [&] {
      const Partition mu = P(mu_s);
      const auto rp = rect_theta_symbolic(m, mu, mode_s == "closed" ? RectMode::closed_form_m1 : RectMode::interpolate);
      return detail::poly_with_audit(rp.poly, negate_q(rp.poly, m, mu.weight()));
    };
  });
  auto* tht = thc->add_subcommand("thm2", "alpha^{2k-1} z_mu sum_rho (p)_rho (q)_rho theta^rho_mu / j_rho");
  tht->add_option("--mu", mu_s)->required();
  tht->callback([&] {
    action = [&] {
      const MPoly t = theorem2_sum(P(mu_s));
      return detail::poly_with_audit(t, alpha_to_beta(t));
    };
  });

  // rect
  auto* rc = app.add_subcommand("rect", "Rectangular recurrence with alpha and beta as separate symbols");
  rc->require_subcommand(1);
  auto* rth = rc->add_subcommand("theta", "theta on p x q from the recurrence");
  rth->add_option("--mu", mu_s)->required();
  rth->add_flag("--independent-beta", independent, "Treat beta as independent of alpha");
  rth->callback([&] {
    action = [&] {
      const auto t = rect_recurrence(P(mu_s), !independent);
      return detail::poly_out(t.value);
    };
  });
  auto* rbd = rc->add_subcommand("boundary", "theta on a rectangle with one box added or removed");
  rbd->add_option("--mu", mu_s)->required();
  rbd->add_option("--which", which_s)->required()->check(CLI::IsMember({"add_row_top", "add_row_bottom", "remove_box"}));
  rbd->callback([&] {
    action = [&] { return detail::poly_out(rect_boundary(P(mu_s), rect_boundary_from_string(which_s))); };
  });
  auto* rdv = rc->add_subcommand("divisibility", "Divisibility by alpha - beta - 1 when |mu| > pq");
  rdv->add_option("--mu", mu_s)->required();
  rdv->add_option("--p", p)->required()->check(CLI::PositiveNumber);
  rdv->add_option("--q", q)->required()->check(CLI::PositiveNumber);
  rdv->callback([&] {
    action = [&] {
      const auto d = extension_divisibility(P(mu_s), p, q);
      json j{{"divisible", d.divisible}, {"value", to_json(d.value)}};
      std::string text = "divisible=" + std::string(d.divisible ? "true" : "false") + "\n" + d.value.to_string();
      if (d.divisible) {
        j["quotient"] = to_json(d.quotient);
        text += "\n" + d.quotient.to_string();
      }
      return Output{j, text};
    };
  });

  // verify
  auto* vc = app.add_subcommand("verify", "Identity checks and audits");
  vc->require_subcommand(1);
  auto* vid = vc->add_subcommand("identities", "Binomial-sum, raising, lowering and operator identities");
  vid->add_option("--max-n", max_n)->check(CLI::Range(0, 63));
  vid->add_option("--min-n", min_n)->check(CLI::Range(0, 63));
  vid->add_option("--max-k", max_k);
  vid->add_option("--checks", checks_s, "Comma-separated subset of I1..I7,prop1");
  vid->add_option("--sample", sample, "Check a seeded sample of this many cases");
  vid->callback([&] {
    action = [&] {
      std::vector<std::string> ids;
      if (checks_s.empty()) {
        ids = identity_check_ids();
      } else {
        std::stringstream ss(checks_s);
        for (std::string t; std::getline(ss, t, ',');) ids.push_back(t);
      }
      try {
        (void)sweep_cases(ids, {0, -1});
      } catch (const Error& e) {
        throw ParseError(e.what());
      }
      return detail::reports_out(sweep(ids, {min_n, max_n, max_k, sample, cfg.seed}), cfg.timing);
    };
  });
  auto* vcj = vc->add_subcommand("conjecture1", "Positivity and integrality audit on m rectangles");
  vcj->add_option("--m", m)->check(CLI::Range(1, 4));
  vcj->add_option("--mu-max", mu_max)->check(CLI::Range(0, 12));
  vcj->callback([&] {
    action = [&] {
      const auto mus = detail::without_ones_between(2, mu_max);
      auto reports = parallel_map(mus, [&](const Partition& mu) { return check_conjecture1(m, mu); });
      return detail::reports_out(reports, cfg.timing);
    };
  });
  auto* vt6 = vc->add_subcommand("table6", "The recurrence table for |mu| <= 6");
  vt6->callback([&] { action = [&] { return detail::reports_out(check_table6(), cfg.timing); }; });
  auto* vt2 = vc->add_subcommand("thm2", "The rectangular binomial sum");
  vt2->add_option("--mu", mu_s)->required();
  vt2->callback([&] {
    action = [&] {
      const Partition mu = P(mu_s);
      auto reports = check_thm2(mu);
      if (mu == Partition{3, 2}) reports.push_back(check_thm2_display());
      return detail::reports_out(reports, cfg.timing);
    };
  });
  auto* vt1 = vc->add_subcommand("theorem1", "Signs and integrality of the recurrence values");
  vt1->add_option("--mu-max", mu_max)->check(CLI::Range(0, 12));
  vt1->callback([&] {
    action = [&] {
      std::vector<Report> reports;
      for (const auto& mu : detail::without_ones_between(2, mu_max))
        for (auto& rep : check_theorem1(mu)) reports.push_back(std::move(rep));
      return detail::reports_out(reports, cfg.timing);
    };
  });
  auto* vext = vc->add_subcommand("extension", "Values and divisibility beyond the rectangle");
  vext->add_option("--mu-max", mu_max)->check(CLI::Range(0, 12));
  vext->callback([&] {
    action = [&] {
      auto reports = check_extension_values();
      for (auto [pp, qq] : {std::pair{1, 1}, std::pair{3, 1}, std::pair{2, 2}})
        for (const auto& mu : detail::without_ones_between(2, mu_max))
          if (mu.weight() > pp * qq) reports.push_back(check_extension_divisibility(mu, pp, qq));
      for (auto& rep : check_independence_displays()) reports.push_back(std::move(rep));
      return detail::reports_out(reports, cfg.timing);
    };
  });
  auto* vind = vc->add_subcommand("independence", "The D2 identity on p x q with alpha, beta independent");
  vind->add_option("--mu-max", mu_max)->check(CLI::Range(0, 12));
  vind->callback([&] {
    action = [&] {
      std::vector<Report> reports;
      for (const auto& mu : detail::without_ones_between(2, mu_max)) reports.push_back(check_independence(mu));
      return detail::reports_out(reports, cfg.timing);
    };
  });
  auto* vrb = vc->add_subcommand("rect-binom", "Closed-form binomials on rectangles against the recursion");
  vrb->add_option("--p", p)->check(CLI::PositiveNumber);
  vrb->add_option("--q", q)->check(CLI::PositiveNumber);
  vrb->callback([&] {
    action = [&] {
      std::vector<Report> reports;
      for (int a = 1; a <= p; ++a)
        for (int b = 1; b <= q; ++b)
          for (int k = 0; k <= a * b; ++k)
            for (const auto& rho : enumerate_partitions(k)) reports.push_back(check_rect_binom(a, b, rho));
      return detail::reports_out(reports, cfg.timing);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }

  const int saved_weight = jackpos::max_weight(), saved_jobs = jobs();
  set_max_weight(cfg.max_weight);
  set_jobs(cfg.jobs);
  int code = 0;
  try {
    const Output o = action();
    if (cfg.output == "text" && o.text) {
      out << *o.text << "\n";
    } else {
      out << o.value.dump() << "\n";
    }
    code = o.failed ? 1 : 0;
  } catch (const std::exception& e) {
    err << json{{"error", detail::error_name(e)}, {"message", e.what()}}.dump() << "\n";
    code = detail::is_usage_error(e) ? 2 : 1;
  }
  set_max_weight(saved_weight);
  set_jobs(saved_jobs);
  return code;
}

}  // namespace jackpos::cli
