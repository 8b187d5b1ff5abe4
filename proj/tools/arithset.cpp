// Command-line front end: deterministic JSON reports for the set
// classification, solution, and free-group operations.

#include <CLI11.hpp>

#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "arith/exactlin.hpp"
#include "arith/freegrp.hpp"
#include "arith/json_io.hpp"
#include "arith/zarith.hpp"

namespace {

using arith::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitBudget = 4;

int g_indent = 2;

void emit(const ordered_json& j) {
  std::cout << j.dump(g_indent) << "\n";
}

int emit_error(const std::string& code, const std::string& message, int exit_code) {
  ordered_json j{{"v", "v1"}, {"error", code}, {"message", message}};
  std::cout << j.dump(g_indent) << "\n";
  return exit_code;
}

struct InputParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<long> parse_int_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(tok, &pos);
    } catch (const std::exception&) {
      throw InputParseError("bad integer: " + tok);
    }
    if (pos != tok.size()) throw InputParseError("bad integer: " + tok);
    out.push_back(v);
  }
  if (out.empty()) throw InputParseError("empty integer list");
  return out;
}

std::vector<arith::Rat> parse_rat_list(const std::string& s) {
  std::vector<arith::Rat> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.emplace_back(tok);
  return out;
}

ordered_json analyze_report(const arith::ZSet& k) {
  ordered_json j;
  j["v"] = "v1";
  j["set"] = arith::to_json(k);
  j["generates"] = k.generates;
  j["mask_polynomial"] = arith::to_json(arith::mask_polynomial(k));

  bool is_tile = false;
  if (k.generates) {
    auto b = arith::is_b_arithmetic(k);
    j["b_arithmetic"] = b.b_arithmetic;
    j["circle_root_count"] = b.circle_root_count;
    auto p = arith::is_p_arithmetic(k);
    j["p_arithmetic"] = p ? ordered_json(*p) : ordered_json(nullptr);
    auto tile = arith::decide_tile_Z(k);
    is_tile = tile.is_tile;
    j["tile"] = arith::to_json(tile);
    // Implication chain of the report invariant.
    if (tile.is_tile && !p) throw std::logic_error("tile without p-arithmetic");
    if (p && !b.b_arithmetic) throw std::logic_error("p-arithmetic without b-arithmetic");
  } else {
    j["b_arithmetic"] = nullptr;
    j["circle_root_count"] = nullptr;
    j["p_arithmetic"] = nullptr;
    j["tile"] = arith::to_json(arith::decide_tile_Z(k));
  }
  j["coven_meyerowitz"] = arith::to_json(arith::coven_meyerowitz_report(k));

  unsigned long sz = k.size();
  bool prime = sz >= 2;
  for (unsigned long d = 2; d * d <= sz; ++d)
    if (sz % d == 0) { prime = false; break; }
  j["newman"] = prime ? ordered_json(arith::newman_prime_test(k)) : ordered_json(nullptr);
  return j;
}

arith::fg::FGSet fg_set_from_options(int rank, const std::string& set_words,
                                     int ball_r, int ball_minus_identity_r,
                                     int sphere_r) {
  using namespace arith::fg;
  if (!set_words.empty()) {
    std::vector<Word> ws;
    std::stringstream ss(set_words);
    std::string tok;
    while (std::getline(ss, tok, ',')) ws.push_back(Word::parse(tok));
    return make_fgset(rank, std::move(ws));
  }
  if (ball_r >= 0) return ball(rank, ball_r);
  if (ball_minus_identity_r >= 0) {
    FGSet b = ball(rank, ball_minus_identity_r);
    std::vector<Word> ws;
    for (const Word& w : b.elements)
      if (!w.is_identity()) ws.push_back(w);
    return make_fgset(rank, std::move(ws));
  }
  if (sphere_r >= 0) return sphere(rank, sphere_r);
  throw std::invalid_argument("one of --set/--ball/--ball-minus-identity/--sphere required");
}

int run_sweep(const std::string& family, long max_bound,
              const std::string& ps, const std::string& pds) {
  ordered_json rows = ordered_json::array();
  long violations = 0;

  if (family == "k3") {
    for (long a = 1; a <= max_bound; ++a) {
      for (long b = a + 1; b <= max_bound; ++b) {
        if (std::gcd(a, b) != 1) continue;
        auto k = arith::normalize_set({0, a, b});
        bool barith = arith::is_b_arithmetic(k).b_arithmetic;
        bool tile = arith::decide_tile_Z(k).is_tile;
        bool mod3 = ((a % 3 == 1 && b % 3 == 2) || (a % 3 == 2 && b % 3 == 1));
        bool ok = (barith == tile) && (tile == mod3);
        if (!ok) ++violations;
        rows.push_back({{"set", arith::to_json(k)}, {"b_arithmetic", barith},
                        {"tile", tile}, {"mod3_pattern", mod3}, {"ok", ok}});
      }
    }
  } else if (family == "k4") {
    for (long c = 1; c <= max_bound; ++c) {
      for (long b = c + 1; b <= max_bound; ++b) {
        for (long a = b + 1; a <= max_bound; ++a) {
          long g = std::gcd(std::gcd(a, b), c);
          // Non-generating sets reduce to their primitive rescaling, which
          // preserves both decisions.
          auto k = arith::normalize_set({0, c / g, b / g, a / g});
          bool barith = arith::is_b_arithmetic(k).b_arithmetic;
          bool parith = arith::is_p_arithmetic(k).has_value();
          bool ok = (barith == parith);
          if (!ok) ++violations;
          rows.push_back({{"set", ordered_json::array({0, c, b, a})},
                          {"b_arithmetic", barith}, {"p_arithmetic", parith},
                          {"ok", ok}});
        }
      }
    }
  } else if (family == "prime-family") {
    for (long p : parse_int_list(ps.empty() ? "5,7,11,13" : ps)) {
      auto k = arith::family_parith_nontile(p);
      bool parith = arith::is_p_arithmetic(k).has_value();
      bool tile = arith::decide_tile_Z(k).is_tile;
      bool ok = parith && !tile;
      if (!ok) ++violations;
      rows.push_back({{"p", p}, {"set", arith::to_json(k)},
                      {"p_arithmetic", parith}, {"tile", tile}, {"ok", ok}});
    }
  } else if (family == "composite-family") {
    std::stringstream ss(pds.empty() ? "2:2,2:3,3:2" : pds);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      auto colon = tok.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("expected p:d pairs");
      long p = std::stol(tok.substr(0, colon));
      long d = std::stol(tok.substr(colon + 1));
      auto k = arith::family_parith_nontile_composite(p, d);
      bool parith = arith::is_p_arithmetic(k).has_value();
      bool tile = arith::decide_tile_Z(k).is_tile;
      bool ok = parith && !tile;
      if (!ok) ++violations;
      rows.push_back({{"p", p}, {"d", d}, {"set", arith::to_json(k)},
                      {"p_arithmetic", parith}, {"tile", tile}, {"ok", ok}});
    }
  } else {
    throw std::invalid_argument("unknown family: " + family);
  }

  emit({{"v", "v1"}, {"family", family}, {"rows", rows}, {"violations", violations}});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for tiles and arithmetic sets in Z and free groups"};
  app.require_subcommand(1);

  bool stable = false;
  double tol = 1e-8;
  long budget = 2'000'000;
  app.add_flag("--stable", stable, "byte-stable output (reports are deterministic)");
  app.add_option("--tol", tol, "numeric tolerance for boundedness classification");
  app.add_option("--budget", budget, "node budget for backtracking searches");
  app.add_option("--json-indent", g_indent, "JSON indentation (default 2)");

  std::string set_str, init_str, mode = "integral";
  long lo = 0, hi = 24, n_mod = 0;

  auto* analyze = app.add_subcommand("analyze", "full classification report for a set");
  analyze->add_option("set", set_str, "comma-separated integers")->required();

  auto* solve = app.add_subcommand("solve", "construct a solution of A(K)");
  solve->add_option("set", set_str)->required();
  solve->add_option("--mode", mode, "integral|bounded|from-tile");
  solve->add_option("--lo", lo);
  solve->add_option("--hi", hi);

  bool csv = false, classify = false;
  auto* recur = app.add_subcommand("recur", "extend the recurrence from initial values");
  recur->add_option("set", set_str)->required();
  recur->add_option("--init", init_str, "comma-separated initial values x_0..")->required();
  recur->add_option("--lo", lo);
  recur->add_option("--hi", hi);
  recur->add_flag("--csv", csv, "emit index,value CSV instead of JSON");
  recur->add_flag("--classify", classify, "attach a boundedness classification");

  auto* zn = app.add_subcommand("zn", "arithmetic / exact-cover questions in Z_n");
  zn->add_option("set", set_str)->required();
  zn->add_option("--n", n_mod)->required();

  auto* cm = app.add_subcommand("cm", "Coven-Meyerowitz report");
  cm->add_option("set", set_str)->required();

  std::string family, ps, pds;
  long max_bound = 20;
  auto* sweep = app.add_subcommand("sweep", "family sweeps asserting the equivalences");
  sweep->add_option("--family", family, "k3|k4|prime-family|composite-family")->required();
  sweep->add_option("--max", max_bound);
  sweep->add_option("--ps", ps, "primes for prime-family");
  sweep->add_option("--pds", pds, "p:d pairs for composite-family");

  auto* fgc = app.add_subcommand("fg", "free-group operations");
  fgc->require_subcommand(1);
  int rank = 2, radius = 3;
  std::string fg_words;
  int opt_ball = -1, opt_bmi = -1, opt_sphere = -1;
  auto add_fg_common = [&](CLI::App* sub) {
    sub->add_option("--rank", rank);
    sub->add_option("--R", radius);
    sub->add_option("--set", fg_words, "comma-separated words, e.g. 1,a,A,b,B");
    sub->add_option("--ball", opt_ball);
    sub->add_option("--ball-minus-identity", opt_bmi);
    sub->add_option("--sphere", opt_sphere);
  };
  auto* fg_tile = fgc->add_subcommand("tile", "greedy partial tiling covering B_R");
  auto* fg_solve = fgc->add_subcommand("solve", "bounded non-periodic solution patch");
  auto* fg_parity = fgc->add_subcommand("parity", "parity patch and balance check");
  auto* fg_cover = fgc->add_subcommand("cover", "exact-cover search over B_R");
  for (auto* sub : {fg_tile, fg_solve, fg_parity, fg_cover}) add_fg_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*analyze) {
      emit(analyze_report(arith::normalize_set(parse_int_list(set_str))));
      return kExitOk;
    }

    if (*solve) {
      auto k = arith::normalize_set(parse_int_list(set_str));
      if (mode == "integral") {
        auto sol = arith::integral_periodic_solution(k);
        if (!sol) return emit_error("NotPArithmetic", "no cyclotomic divisor", kExitPrecondition);
        ordered_json vec = ordered_json::array();
        for (const arith::Int& v : sol->second) vec.push_back(static_cast<long long>(v));
        emit({{"v", "v1"}, {"mode", "integral"}, {"set", arith::to_json(k)},
              {"period", sol->first}, {"vector", vec}, {"verified", true}});
      } else if (mode == "bounded") {
        auto w = arith::make_bounded_solution(k, lo, hi);
        emit({{"v", "v1"}, {"mode", "bounded"}, {"set", arith::to_json(k)},
              {"window", arith::to_json(w)},
              {"residual_ok", w.max_residual < 1e-9}});
      } else if (mode == "from-tile") {
        auto tile = arith::decide_tile_Z(k);
        if (!tile.is_tile)
          return emit_error("NotATile", "greedy automaton found a collision", kExitPrecondition);
        auto w = arith::tiling_to_solution(k, *tile.certificate, lo, hi);
        emit({{"v", "v1"}, {"mode", "from-tile"}, {"set", arith::to_json(k)},
              {"period", tile.certificate->period},
              {"offsets", tile.certificate->offsets},
              {"window", arith::to_json(w)}, {"verified", true}});
      } else {
        return emit_error("BadMode", "mode must be integral|bounded|from-tile", kExitParse);
      }
      return kExitOk;
    }

    if (*recur) {
      auto k = arith::normalize_set(parse_int_list(set_str));
      auto init = parse_rat_list(init_str);
      auto w = arith::extend_recurrence(k, init, lo, hi);
      if (csv) {
        for (long i = w.lo; i <= w.hi; ++i)
          std::cout << i << "," << w.values[i - w.lo] << "\n";
        return kExitOk;
      }
      ordered_json j{{"v", "v1"}, {"set", arith::to_json(k)},
                     {"window", arith::to_json(w)}};
      if (classify) {
        auto rep = arith::classify_boundedness(k, init, tol);
        const char* verdicts[] = {"Bounded", "Unbounded", "Inconclusive"};
        ordered_json roots = ordered_json::array();
        for (const auto& rc : rep.root_data)
          roots.push_back({{"root_re", rc.root.real()}, {"root_im", rc.root.imag()},
                           {"power", rc.power}, {"on_circle", rc.on_circle},
                           {"coefficient_abs", std::abs(rc.coefficient)}});
        j["boundedness"] = {{"verdict", verdicts[static_cast<int>(rep.verdict)]},
                            {"root_data", roots}};
      }
      emit(j);
      return kExitOk;
    }

    if (*zn) {
      auto k = arith::normalize_set(parse_int_list(set_str));
      ordered_json j{{"v", "v1"}, {"set", arith::to_json(k)}, {"n", n_mod}};
      j["arithmetic"] = arith::is_arithmetic_Zn(k, n_mod);
      try {
        auto cover = arith::tile_Zn_exact_cover(k, n_mod);
        j["exact_cover"] = cover ? ordered_json(*cover) : ordered_json(nullptr);
      } catch (const arith::BadModulus&) {
        j["exact_cover"] = nullptr;
        j["exact_cover_note"] = "elements collide mod n";
      }
      emit(j);
      return kExitOk;
    }

    if (*cm) {
      auto k = arith::normalize_set(parse_int_list(set_str));
      emit({{"v", "v1"}, {"set", arith::to_json(k)},
            {"report", arith::to_json(arith::coven_meyerowitz_report(k))}});
      return kExitOk;
    }

    if (*sweep) return run_sweep(family, max_bound, ps, pds);

    if (*fgc) {
      using namespace arith::fg;
      FGSet set = fg_set_from_options(rank, fg_words, opt_ball, opt_bmi, opt_sphere);
      if (*fg_tile) {
        auto tiling = greedy_tiling(set, radius);
        auto rep = verify_partial_tiling(tiling.base, tiling.shifts, radius);
        emit({{"v", "v1"}, {"op", "tile"}, {"rank", rank}, {"R", radius},
              {"base", arith::words_to_json(tiling.base.elements)},
              {"shifts", arith::words_to_json(tiling.shifts)},
              {"verification", arith::to_json(rep)}});
        return rep.ok ? kExitOk : kExitPrecondition;
      }
      if (*fg_solve) {
        auto sol = bounded_nonperiodic_solution(set, radius);
        auto rep = verify_solution_patch(set, sol.patch);
        bool distinct = true;
        for (const auto& e : sol.log)
          if (!e.forced && !e.distinct_ok) distinct = false;
        emit({{"v", "v1"}, {"op", "solve"}, {"rank", rank}, {"R", radius},
              {"patch", arith::to_json(sol.patch)},
              {"max_abs", arith::to_json(sol.max_abs)},
              {"steps", sol.log.size()}, {"distinctness_ok", distinct},
              {"verification", arith::to_json(rep)}});
        return rep.ok ? kExitOk : kExitPrecondition;
      }
      if (*fg_parity) {
        bool balance = check_parity_balance(set);
        auto patch = parity_solution(rank, radius);
        auto rep = verify_solution_patch(set, patch);
        emit({{"v", "v1"}, {"op", "parity"}, {"rank", rank}, {"R", radius},
              {"balance", balance}, {"verification", arith::to_json(rep)}});
        return kExitOk;
      }
      if (*fg_cover) {
        auto res = cover_search(set, radius, budget);
        const char* names[] = {"SAT", "UNSAT", "UNKNOWN"};
        emit({{"v", "v1"}, {"op", "cover"}, {"rank", rank}, {"R", radius},
              {"status", names[static_cast<int>(res.status)]},
              {"shifts", arith::words_to_json(res.shifts)},
              {"nodes", res.nodes}});
        return res.status == CoverStatus::UNKNOWN ? kExitBudget : kExitOk;
      }
    }
  } catch (const InputParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
