// Command-line front end. Every command prints one JSON report on stdout.
// Exit codes: 0 the command ran (verdicts are in the JSON), 1 internal
// failure, 2 usage error.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "terracini/bounds.hpp"
#include "terracini/catalog.hpp"
#include "terracini/certify.hpp"
#include "terracini/latticegeom.hpp"
#include "terracini/report.hpp"
#include "terracini/tangency.hpp"
#include "terracini/terracini.hpp"
#include "terracini/witness.hpp"

using namespace terracini;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    auto v = std::stoull(text, &used, 0);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("invalid seed '" + text + "'");
  }
}

// Runs `compute` unless the cache already holds the report, then prints it.
int emit(const std::string& command, const Json& args, const SampleOptions& opt, const std::string& cache_path,
         const std::function<Json()>& compute) {
  std::optional<ResultCache> cache;
  std::string key;
  if (!cache_path.empty()) {
    cache.emplace(cache_path);
    key = ResultCache::key(command, args, opt);
    if (auto hit = cache->lookup(key)) {
      std::cout << dump(*hit);
      return 0;
    }
  }
  Json result;
  try {
    result = compute();
  } catch (const Refused& e) {
    result = {{"refused", true}, {"reason", e.what()}};
  }
  Json report = envelope(command, args, opt, result);
  if (cache) cache->store(key, report);
  std::cout << dump(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secant varieties: dimensions, tangency, identifiability bounds and witnesses"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);
  app.fallthrough();

  std::string seed_text;
  std::string cache_path;
  int trials = 3;
  app.add_option("--seed", seed_text, "sampling seed (default: $TERRACINI_SEED or a fixed constant)");
  app.add_option("--trials", trials, "sampling trials per prime")->check(CLI::Range(1, 64));
  app.add_option("--cache", cache_path, "JSON-lines result cache");

  std::string variety;
  int h = 0;
  bool with_contact = false;

  auto* certify = app.add_subcommand("certify", "identifiability certificate for sec_h");
  certify->add_option("--variety", variety, "variety spec")->required();
  certify->add_option("--h", h, "number of points")->required()->check(CLI::PositiveNumber);
  certify->add_flag("--contact", with_contact, "attach the h-contact locus");

  auto* defect = app.add_subcommand("defect", "dimension of sec_h");
  defect->add_option("--variety", variety)->required();
  defect->add_option("--h", h)->required()->check(CLI::PositiveNumber);

  auto* gauss = app.add_subcommand("gauss", "rank of the Gauss map");
  gauss->add_option("--variety", variety)->required();

  auto* contact = app.add_subcommand("contact", "local dimension of the h-tangential contact locus");
  contact->add_option("--variety", variety)->required();
  contact->add_option("--h", h)->required()->check(CLI::PositiveNumber);

  auto* fiber = app.add_subcommand("fiber", "fiber of the h-tangential projection");
  fiber->add_option("--variety", variety)->required();
  fiber->add_option("--h", h)->required()->check(CLI::PositiveNumber);

  auto* ldiff = app.add_subcommand("ldiff", "kernel of the secant-cone differential on the diagonal");
  ldiff->add_option("--variety", variety)->required();
  ldiff->add_option("--h", h)->required()->check(CLI::PositiveNumber);

  auto* cone = app.add_subcommand("cone", "cone test");
  cone->add_option("--variety", variety)->required();

  std::string family, n_text, d_text, k_text, embedding, polytope_path;
  int r = 0, a = 0;
  auto* bound = app.add_subcommand("bound", "closed-form identifiability range");
  bound->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"segre-veronese", "binary-sv", "flag", "grassmannian", "g2n", "lagrangian-spinor",
                             "moments", "powers", "toric"}));
  bound->add_option("--n", n_text, "n, or n1,n2,.. for segre-veronese");
  bound->add_option("--d", d_text, "d, or d1,d2,..");
  bound->add_option("--k", k_text, "k1,k2,.. for flags");
  bound->add_option("--r", r);
  bound->add_option("--a", a);
  bound->add_option("--embedding", embedding, "lg, lg-pluecker, spinor-pluecker, spinor-minimal");
  bound->add_option("--polytope", polytope_path, "polytope file for the toric bound");

  bool main_a = false, projection = false;
  int big_n = 0, t = 0;
  auto* witness = app.add_subcommand("witness", "exact non-identifiability witnesses");
  witness->add_flag("--mainA", main_a, "verify the rational-normal-curve counterexample");
  witness->add_flag("--projection", projection, "tangential projection of a rational normal curve");
  witness->add_option("--N", big_n, "degree of the rational normal curve");
  witness->add_option("--r", r, "secant order");
  witness->add_option("--t", t, "number of tangent lines");
  witness->add_option("--variety", variety, "base variety Y for sec_h(sec_r(Y))");
  witness->add_option("--h", h);

  auto* polytope = app.add_subcommand("polytope", "lattice data of a polytope file");
  polytope->add_option("--file", polytope_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    SampleOptions opt;
    opt.trials = trials;
    if (!seed_text.empty())
      opt.seed = parse_seed(seed_text);
    else if (const char* env = std::getenv("TERRACINI_SEED"); env && *env)
      opt.seed = parse_seed(env);

    auto resolved = [&] { return resolve_variety(variety, opt.seed); };

    if (certify->parsed()) {
      auto x = resolved();
      Json args = {{"variety", x.id}, {"h", h}, {"contact", with_contact}};
      return emit("certify", args, opt, cache_path, [&] {
        CertifyOptions co;
        co.sample = opt;
        co.with_contact = with_contact;
        return to_json(cmd_certify(x, h, co));
      });
    }
    if (defect->parsed()) {
      auto x = resolved();
      return emit("defect", {{"variety", x.id}, {"h", h}}, opt, cache_path,
                  [&] { return to_json(secant_dim(x, h, opt)); });
    }
    if (gauss->parsed()) {
      auto x = resolved();
      return emit("gauss", {{"variety", x.id}}, opt, cache_path, [&] { return to_json(gauss_rank(x, opt)); });
    }
    if (contact->parsed()) {
      auto x = resolved();
      return emit("contact", {{"variety", x.id}, {"h", h}}, opt, cache_path,
                  [&] { return to_json(contact_locus_dim(x, h, opt)); });
    }
    if (fiber->parsed()) {
      auto x = resolved();
      return emit("fiber", {{"variety", x.id}, {"h", h}}, opt, cache_path,
                  [&] { return to_json(tangential_fiber_dim(x, h, opt)); });
    }
    if (ldiff->parsed()) {
      auto x = resolved();
      return emit("ldiff", {{"variety", x.id}, {"h", h}}, opt, cache_path,
                  [&] { return to_json(ldiff_kernel_check(x, h, opt)); });
    }
    if (cone->parsed()) {
      auto x = resolved();
      return emit("cone", {{"variety", x.id}}, opt, cache_path, [&] { return to_json(cone_test(x, opt)); });
    }
    if (bound->parsed()) {
      auto need = [&](const std::string& text, const char* flag) {
        if (text.empty()) throw UsageError(family + " needs " + flag);
        return text;
      };
      Json args = {{"family", family}};
      std::function<BoundResult()> run;
      if (family == "segre-veronese") {
        auto ns = parse_int_list(need(n_text, "--n"), "n_i");
        auto ds = parse_int_list(need(d_text, "--d"), "d_i");
        args["n"] = ns;
        args["d"] = ds;
        run = [=] { return bound_segre_veronese(ns, ds); };
      } else if (family == "binary-sv") {
        auto ds = parse_int_list(need(d_text, "--d"), "d_i");
        args["d"] = ds;
        run = [=] { return bound_binary_sv(ds); };
      } else if (family == "flag") {
        auto ks = parse_int_list(need(k_text, "--k"), "k_i");
        int n = parse_int(need(n_text, "--n"), "n");
        args["k"] = ks;
        args["n"] = n;
        run = [=] { return bound_flag(ks, n); };
      } else if (family == "grassmannian") {
        int n = parse_int(need(n_text, "--n"), "n");
        args["r"] = r;
        args["n"] = n;
        run = [=] { return bound_grassmannian(r, n); };
      } else if (family == "g2n") {
        int n = parse_int(need(n_text, "--n"), "n");
        args["n"] = n;
        run = [=] { return bound_g2n(n); };
      } else if (family == "lagrangian-spinor") {
        int n = parse_int(need(n_text, "--n"), "n");
        auto e = parse_embedding(need(embedding, "--embedding"));
        args["n"] = n;
        args["embedding"] = to_string(e);
        run = [=] { return bound_lagrangian_spinor(n, e); };
      } else if (family == "moments") {
        int d = parse_int(need(d_text, "--d"), "d");
        args["d"] = d;
        run = [=] { return bound_moments(d); };
      } else if (family == "powers") {
        int d = parse_int(need(d_text, "--d"), "d");
        int n = parse_int(need(n_text, "--n"), "n");
        args["a"] = a;
        args["d"] = d;
        args["n"] = n;
        run = [=] { return bound_powers(a, d, n); };
      } else {
        auto p = read_polytope_file(need(polytope_path, "--polytope"));
        Json pts = Json::array();
        for (const auto& q : p.points) pts.push_back(q);
        args["points"] = pts;
        run = [=] { return bound_toric(p); };
      }
      // Bounds are deterministic; the envelope still records the sampling
      // options so every report has the same shape.
      return emit("bound", args, opt, cache_path, [&] { return to_json(run()); });
    }
    if (witness->parsed()) {
      if (main_a + projection > 1) throw UsageError("choose at most one of --mainA and --projection");
      if (main_a) {
        if (big_n == 0 || r == 0) throw UsageError("--mainA needs --N and --r");
        return emit("witness", {{"mode", "mainA"}, {"N", big_n}, {"r", r}}, opt, cache_path,
                    [&] { return to_json(verify_mainA(big_n, r, opt)); });
      }
      if (projection) {
        if (big_n == 0 || t == 0) throw UsageError("--projection needs --N and --t");
        return emit("witness", {{"mode", "projection"}, {"N", big_n}, {"t", t}}, opt, cache_path,
                    [&] { return to_json(rnc_tangential_projection(big_n, t, opt.seed)); });
      }
      if (variety.empty() || r == 0 || h == 0) throw UsageError("witness needs --mainA, --projection or --variety/--r/--h");
      auto y = resolved();
      return emit("witness", {{"mode", "secnoid"}, {"variety", y.id}, {"r", r}, {"h", h}}, opt, cache_path,
                  [&] { return to_json(secnoid_witnesses(y, r, h, opt.seed)); });
    }
    if (polytope->parsed()) {
      auto p = read_polytope_file(polytope_path);
      return emit("polytope", {{"file", polytope_path}}, opt, cache_path, [&] { return polytope_report(p); });
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
