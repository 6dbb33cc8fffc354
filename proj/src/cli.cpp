#include "lenshull/cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <fstream>
#include <iostream>
#include <numeric>
#include <thread>

#include "lenshull/io.hpp"

namespace lenshull {

namespace {

constexpr Int kQCap = 1'000'000;       // hard cap on q accepted by the CLI
constexpr Int kOrbitCap = 200'000;     // predict/export refuse larger orbits
constexpr Int kFacetCap = 500'000;     // predict/export refuse larger facet lists

Turn parse_turn(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  if (s.empty()) throw std::invalid_argument("empty coordinate");
  std::size_t slash = s.find('/');
  std::size_t used = 0;
  Int num = 0, den = 1;
  if (slash == std::string::npos) {
    num = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad rational: " + s);
  } else {
    num = std::stoll(s.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("bad rational: " + s);
    den = std::stoll(s.substr(slash + 1), &used);
    if (used != s.size() - slash - 1) throw std::invalid_argument("bad rational: " + s);
  }
  return Turn(num, den);
}

GroupSpec spec_from_flags(Int p, Int q, Int mu, Int nu) {
  if (q < 1 || q > kQCap)
    throw std::invalid_argument("q must lie in [1, " + std::to_string(kQCap) + "]");
  return GroupSpec::make(p, q, mu, nu);
}

void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << "\n";
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file " + out_path);
    f << text;
  }
}

// Cheap upper bound on the facet count, before anything is materialized.
Int facet_count_bound(const GroupSpec& spec) {
  const ContinuedFraction cf = continued_fraction(Fraction(spec.p, spec.q));
  const Int pairs = (cf.n - 3) + (spec.nu > 1 ? 1 : 0) + (spec.mu > 1 ? 1 : 0);
  return checked_add(checked_mul(std::max<Int>(pairs, 0), spec.order()),
                     checked_mul(2, spec.order()));
}

void guard_size(const GroupSpec& spec) {
  if (spec.order() > kOrbitCap)
    throw std::invalid_argument("orbit has " + std::to_string(spec.order()) +
                                " points; cap is " + std::to_string(kOrbitCap));
  if (facet_count_bound(spec) > kFacetCap)
    throw std::invalid_argument("predicted facet count exceeds the cap of " +
                                std::to_string(kFacetCap));
}

int cmd_predict(const GroupSpec& spec, const std::string& out_path, bool unit_sphere,
                std::ostream& out) {
  guard_size(spec);
  Triangulation tri = predict(spec);
  fill_supports(tri);
  const Orbit orbit = make_orbit(spec);
  write_output(triangulation_json(tri, orbit, unit_sphere).dump(1), out_path, out);
  return 0;
}

int cmd_verify_one(const GroupSpec& spec, const VerifyOptions& opts, const std::string& out_path,
                   std::ostream& out) {
  const VerifyReport rep = verify_spec(spec, opts);
  const Orbit orbit = make_orbit(spec);
  write_output(report_json(rep, orbit, false).dump(1), out_path, out);
  return rep.ok() ? 0 : 1;
}

int cmd_verify_grid(Int qmax, const VerifyOptions& opts, std::ostream& out) {
  if (qmax > 60)
    throw std::invalid_argument("grid verification is limited to --qmax 60 (oracle cost)");
  const std::vector<GroupSpec> specs = cyclic_grid(qmax);
  std::vector<std::string> rows(specs.size());
  std::vector<char> passed(specs.size(), 0);

  // Fan out per spec; each worker runs the oracle single-threaded, and
  // rows are printed in grid order afterwards.
  VerifyOptions per = opts;
  per.threads = 1;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < specs.size(); i = next.fetch_add(1)) {
      try {
        const VerifyReport rep = verify_spec(specs[i], per);
        rows[i] = std::to_string(specs[i].p) + "/" + std::to_string(specs[i].q) +
                  " facets=" + std::to_string(rep.tri.facets.size()) +
                  " diff=" + std::to_string(rep.diff.predicted_only.size() +
                                            rep.diff.oracle_only.size()) +
                  " certificates=" + (rep.certificates_ok() ? "pass" : "FAIL") +
                  " manifold=" + (rep.pseudo_manifold && rep.ridge_connected ? "pass" : "FAIL");
        passed[i] = rep.ok() ? 1 : 0;
      } catch (const std::exception& e) {
        rows[i] = std::to_string(specs[i].p) + "/" + std::to_string(specs[i].q) + " error: " +
                  e.what();
      }
    }
  };
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = std::min<unsigned>(workers, specs.size() == 0 ? 1 : static_cast<unsigned>(specs.size()));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  int rc = 0;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    out << rows[i] << "\n";
    if (!passed[i]) rc = 1;
  }
  return rc;
}

int cmd_group(const std::string& gens, std::ostream& out) {
  const GroupSpec spec = canonicalize(parse_generators(gens));
  out << to_json(spec).dump(1) << "\n";
  return 0;
}

int cmd_export(const GroupSpec& spec, const std::string& format, const std::string& out_path,
               bool unit_sphere, const VerifyOptions& opts, std::ostream& out) {
  guard_size(spec);
  if (format == "json") {
    VerifyOptions o = opts;
    o.with_oracle = false;
    const VerifyReport rep = verify_spec(spec, o);
    const Orbit orbit = make_orbit(spec);
    write_output(report_json(rep, orbit, unit_sphere).dump(1), out_path, out);
    return 0;
  }
  Triangulation tri = predict(spec);
  fill_supports(tri);
  const Orbit orbit = make_orbit(spec);
  if (format == "off4") {
    write_output(to_off4(tri, orbit, unit_sphere), out_path, out);
    return 0;
  }
  if (format == "csv") {
    write_output(to_csv(tri), out_path, out);
    return 0;
  }
  throw std::invalid_argument("unknown format: " + format);
}

}  // namespace

std::vector<TorusPoint> parse_generators(const std::string& text) {
  std::vector<TorusPoint> gens;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t semi = text.find(';', pos);
    const std::string part =
        text.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
    if (!part.empty()) {
      const std::size_t comma = part.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("generator needs two coordinates: " + part);
      gens.push_back({parse_turn(part.substr(0, comma)), parse_turn(part.substr(comma + 1))});
    }
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  if (gens.empty()) throw std::invalid_argument("no generators given");
  return gens;
}

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Facet structure of convex hulls of finite torus-subgroup orbits in R^4"};
  app.require_subcommand(1);

  Int p = 0, q = 1, mu = 1, nu = 1, qmax = 30;
  std::string gens, format = "json", out_path;
  bool grid = false, unit_sphere = false;
  double epsilon = tol::kOracleEps;
  int samples = tol::kLevelCurveSamples;

  auto add_spec_flags = [&](CLI::App* cmd) {
    cmd->add_option("--p", p, "numerator of the slope");
    cmd->add_option("--q", q, "denominator of the slope")->required();
    cmd->add_option("--mu", mu, "first-axis subgroup order");
    cmd->add_option("--nu", nu, "second-axis subgroup order");
  };

  CLI::App* c_predict = app.add_subcommand("predict", "predicted facet list as JSON");
  add_spec_flags(c_predict);
  c_predict->add_option("--out", out_path, "output file (default stdout)");
  c_predict->add_flag("--unit-sphere", unit_sphere, "rescale points to the unit sphere");

  CLI::App* c_verify = app.add_subcommand("verify", "predict, certify, and compare with the oracle");
  c_verify->add_option("--p", p, "numerator of the slope");
  c_verify->add_option("--q", q, "denominator of the slope");
  c_verify->add_option("--mu", mu, "first-axis subgroup order");
  c_verify->add_option("--nu", nu, "second-axis subgroup order");
  c_verify->add_flag("--grid", grid, "verify every cyclic spec with q <= qmax");
  c_verify->add_option("--qmax", qmax, "grid bound");
  c_verify->add_option("--epsilon", epsilon, "oracle coplanarity tolerance");
  c_verify->add_option("--samples", samples, "level-curve sample count");
  c_verify->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* c_group = app.add_subcommand("group", "canonicalize a generator list");
  c_group->add_option("--gens", gens, "generators, e.g. \"1/5,2/5\" or \"1/2,0;0,1/3\"")->required();

  CLI::App* c_export = app.add_subcommand("export", "write the triangulation to a file format");
  add_spec_flags(c_export);
  c_export->add_option("--format", format, "json, off4, or csv");
  c_export->add_option("--out", out_path, "output file (default stdout)");
  c_export->add_flag("--unit-sphere", unit_sphere, "rescale points to the unit sphere");
  c_export->add_option("--samples", samples, "level-curve sample count");

  std::vector<const char*> argv;
  argv.push_back("lenshull");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
      out << app.help();
      return 0;
    } catch (const CLI::ParseError& e) {
      err << e.what() << "\n";
      return 2;
    }

    VerifyOptions opts;
    opts.eps = epsilon;
    opts.samples = samples;

    if (c_predict->parsed()) return cmd_predict(spec_from_flags(p, q, mu, nu), out_path, unit_sphere, out);
    if (c_verify->parsed()) {
      if (grid) return cmd_verify_grid(qmax, opts, out);
      if (q < 2) throw std::invalid_argument("verify needs --q (or --grid)");
      return cmd_verify_one(spec_from_flags(p, q, mu, nu), opts, out_path, out);
    }
    if (c_group->parsed()) return cmd_group(gens, out);
    if (c_export->parsed())
      return cmd_export(spec_from_flags(p, q, mu, nu), format, out_path, unit_sphere, opts, out);
    err << "no subcommand\n";
    return 2;
  } catch (const DegenerateSpec& e) {
    err << "degenerate: " << e.what() << "\n";
    out << ordered_json{{"error", "degenerate"}, {"degeneracy", to_string(e.kind)}}.dump(1) << "\n";
    return 2;
  } catch (const ExcludedSlope& e) {
    err << "excluded slope: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(std::move(args), std::cout, std::cerr);
}

}  // namespace lenshull
