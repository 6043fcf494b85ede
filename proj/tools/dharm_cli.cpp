// Command-line front end: compute expansions, run the verification suites,
// export tables, and manage the on-disk cache.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dharm/cache.hpp"
#include "dharm/corpus.hpp"
#include "dharm/macdonald.hpp"
#include "dharm/mpoly.hpp"
#include "dharm/partition.hpp"
#include "dharm/plethysm.hpp"
#include "dharm/tensor.hpp"
#include "dharm/verify.hpp"
#include "json.hpp"

namespace {

using namespace dharm;

constexpr int kMaxCorpusN = 7;    // bundled tables reach n = 7
constexpr int kMaxMacdonaldN = 8; // triangularity solves stay desk-scale

void apply_cache_dir(const std::string& flag) {
  if (!flag.empty()) CacheStore::set_global_root(flag);
}

[[noreturn]] void die(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(2);
}

void require_scale(int n, int limit, const std::string& what) {
  if (n < 1 || n > limit)
    die(what + " supports 1 <= n <= " + std::to_string(limit) +
        " (asked for n = " + std::to_string(n) + ")");
}

std::string symfun_json(const SymFun<MPoly>& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [mu, c] : f.terms())
    arr.push_back({{"mu", mu.parts()}, {"coef", c.str()}});
  return nlohmann::json{{"basis", std::string(1, basis_letter(f.basis()))},
                        {"terms", arr}}
      .dump(2);
}

std::string gl_json(const GLCoefficient& g) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [la, m] : g.terms())
    arr.push_back({{"lambda", la.parts()}, {"mult", m.get_str()}});
  return nlohmann::json{{"terms", arr}}.dump(2);
}

int cmd_compute(const std::string& target, int n, int k,
                const std::string& format) {
  const bool json = format == "json";
  if (target == "nabla-en") {
    require_scale(n, kMaxMacdonaldN, "nabla-en");
    const SymFun<MPoly>& f = nabla_e(n);
    std::cout << (json ? symfun_json(f) : f.str()) << "\n";
  } else if (target == "delta-en") {
    require_scale(n, kMaxMacdonaldN, "delta-en");
    if (k < 0 || k > n) die("delta-en needs 0 <= k <= n");
    SymFun<MPoly> f = delta_e_n(k, n, /*primed=*/true);
    std::cout << (json ? symfun_json(f) : f.str()) << "\n";
  } else if (target == "macdonald") {
    require_scale(n, kMaxMacdonaldN, "macdonald");
    for (const auto& [mu, h] : macdonald_basis(n).h) {
      if (json)
        std::cout << nlohmann::json{{"mu", mu.parts()}}.dump() << "\n"
                  << symfun_json(h) << "\n";
      else
        std::cout << "H~[" << mu.str() << "] = " << h.str() << "\n";
    }
  } else if (target == "hook-gen") {
    require_scale(n, kMaxCorpusN, "hook-gen");
    SymFun<RatFun> image = pleth(alternant(n), Alphabet::parse("q - eps*u"));
    auto p = image.coeff(Partition()).to_poly();
    if (!p) die("hook generating image is not polynomial");
    if (json)
      std::cout << nlohmann::json{{"poly", p->str()}}.dump(2) << "\n";
    else
      std::cout << p->str() << "\n";
  } else if (target == "epsilon-k") {
    require_scale(n, kMaxCorpusN - 1, "epsilon-k");
    if (k < 0 || k > n - 1) die("epsilon-k needs 0 <= k <= n-1");
    CorpusTable ct = load_table("E" + std::to_string(n));
    TensorExp eps = reduced_length(*ct.tensor, k);
    std::cout << (json ? eps.to_json() : eps.str()) << "\n";
  } else if (target == "f-table") {
    require_scale(n, kMaxCorpusN - 1, "f-table");
    CorpusTable ct = load_table("E" + std::to_string(n));
    auto table = to_e_format(left_one_plus_q(*ct.tensor));
    for (const auto& [nu, d] : table) {
      if (json)
        std::cout << nlohmann::json{{"nu", nu.parts()}}.dump() << "\n"
                  << gl_json(d) << "\n";
      else
        std::cout << "d[" << nu.str() << "] = " << d.str() << "\n";
    }
  } else {
    die("unknown compute target: " + target);
  }
  return 0;
}

int cmd_verify(const std::string& suite, int max_n, int jobs, bool json) {
  std::vector<CheckResult> results = run_suite(max_n, jobs, suite);
  if (results.empty()) die("unknown suite: " + suite);
  std::cout << (json ? render_json(results) : render_text(results));
  for (const CheckResult& r : results)
    if (r.status == CheckStatus::kFail) return 1;
  return 0;
}

int cmd_export(const std::string& id, const std::string& format) {
  const bool json = format == "json";
  if (id.rfind("nabla-e", 0) == 0) {
    int n = std::atoi(id.c_str() + 7);
    require_scale(n, kMaxMacdonaldN, "nabla-e export");
    const SymFun<MPoly>& f = nabla_e(n);
    std::cout << (json ? symfun_json(f) : f.str()) << "\n";
    return 0;
  }
  CorpusTable ct = load_table(id);
  if (ct.tensor) {
    std::cout << (json ? ct.tensor->to_json() : ct.tensor->str()) << "\n";
  } else if (ct.e_table) {
    for (const auto& [nu, d] : *ct.e_table) {
      if (json)
        std::cout << nlohmann::json{{"nu", nu.parts()}}.dump() << "\n"
                  << gl_json(d) << "\n";
      else
        std::cout << "d[" << nu.str() << "] = " << d.str() << "\n";
    }
  } else if (ct.gl) {
    std::cout << (json ? gl_json(*ct.gl) : ct.gl->str()) << "\n";
  }
  return 0;
}

int cmd_cache(const std::string& action, int n) {
  CacheStore& store = CacheStore::global();
  if (!store.enabled())
    die("no cache directory (set DHARMONIC_CACHE or pass --cache-dir)");
  if (action == "clear") {
    store.clear();
    std::cout << "cleared " << store.root() << "\n";
  } else if (action == "warm") {
    require_scale(n, kMaxMacdonaldN, "cache warm");
    for (int m = 1; m <= n; ++m) {
      macdonald_basis(m);
      nabla_e(m);
      std::cout << "warmed n = " << m << "\n";
    }
  } else {
    die("unknown cache action: " + action);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic engine for Macdonald eigenoperators and "
               "diagonal harmonics characters"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string cache_dir;
  app.add_option("--cache-dir", cache_dir,
                 "cache directory (overrides DHARMONIC_CACHE)");

  int n = 0, k = 0, b = 0, max_n = 6, jobs = 1;
  std::string format = "text", suite = "all", target, table_id, action;
  bool json_flag = false;

  CLI::App* compute = app.add_subcommand(
      "compute", "compute an expansion (nabla-en, delta-en, macdonald, "
                 "hook-gen, epsilon-k, f-table)");
  compute->add_option("target", target)->required();
  compute->add_option("--n", n)->required();
  compute->add_option("--k", k);
  compute->add_option("--b", b);
  compute->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite, "check id, \"hooks\", or \"all\"");
  verify->add_option("--max-n", max_n);
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  verify->add_flag("--json", json_flag);
  verify->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* exp = app.add_subcommand("export", "print a table");
  exp->add_option("table-id", table_id)->required();
  exp->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* cache = app.add_subcommand("cache", "warm or clear the cache");
  cache->add_option("action", action)
      ->required()
      ->check(CLI::IsMember({"warm", "clear"}));
  cache->add_option("--n", n);

  CLI11_PARSE(app, argc, argv);
  apply_cache_dir(cache_dir);

  try {
    if (compute->parsed()) return cmd_compute(target, n, k, format);
    if (verify->parsed())
      return cmd_verify(suite, max_n, jobs, json_flag || format == "json");
    if (exp->parsed()) return cmd_export(table_id, format);
    if (cache->parsed()) return cmd_cache(action, n == 0 ? 6 : n);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
