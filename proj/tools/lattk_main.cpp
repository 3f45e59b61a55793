#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lattk/checks.hpp"
#include "lattk/gram_io.hpp"

namespace {

using namespace lattk;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::string group_name(const IntVec& orders) {
  if (orders.empty()) return "trivial (unimodular)";
  std::string s;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) s += " + ";
    s += "Z/" + orders[i].get_str();
  }
  return s;
}

int cmd_lattice_info(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return kExitUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  GramFile f;
  try {
    f = parse_gram_file(buf.str());
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::cout << "rank: " << f.rank << "\n";
  if (!f.labels.empty()) {
    std::cout << "labels:";
    for (const auto& l : f.labels) std::cout << " " << l;
    std::cout << "\n";
  }
  if (!f.is_integral()) {
    // rational Gram: scale to an integral lattice for the signature
    const Int den = f.gram.denominator();
    RatMat scaled = f.gram;
    for (std::size_t i = 0; i < f.rank; ++i)
      for (std::size_t j = 0; j < f.rank; ++j) scaled.at(i, j) *= Rat(den);
    Lattice l(scaled.to_int());
    Signature sig = signature(l);
    Rat det = Rat(l.determinant());
    for (std::size_t i = 0; i < f.rank; ++i) det /= Rat(den);
    std::cout << "signature: (" << sig.positives << ", " << sig.negatives << ", " << sig.zeros
              << ")\n";
    std::cout << "determinant: " << rat_string(det) << "\n";
    std::cout << "note: non-integral Gram; evenness and discriminant group are defined for "
                 "integral lattices only\n";
    return kExitPass;
  }

  Lattice l(f.gram.to_int());
  Signature sig = signature(l);
  std::cout << "signature: (" << sig.positives << ", " << sig.negatives << ", " << sig.zeros
            << ")\n";
  std::cout << "determinant: " << l.determinant().get_str() << "\n";
  std::cout << "even: " << (l.is_even() ? "yes" : "no") << "\n";
  if (!l.is_nondegenerate()) {
    std::cout << "discriminant group: not defined (degenerate lattice)\n";
    return kExitPass;
  }
  FiniteQuadraticForm dg = discriminant_group(l);
  std::cout << "discriminant group: " << group_name(dg.orders) << "\n";
  for (std::size_t i = 0; i < dg.orders.size(); ++i) {
    std::cout << "  g" << i + 1 << ": order " << dg.orders[i].get_str();
    if (dg.from_even_lattice) std::cout << ", q = " << rat_string(dg.q[i]);
    std::cout << ", b(g" << i + 1 << ",g" << i + 1 << ") = " << rat_string(dg.b.at(i, i)) << "\n";
  }
  for (std::size_t i = 0; i < dg.orders.size(); ++i)
    for (std::size_t j = i + 1; j < dg.orders.size(); ++j)
      std::cout << "  b(g" << i + 1 << ",g" << j + 1 << ") = " << rat_string(dg.b.at(i, j))
                << "\n";
  return kExitPass;
}

int cmd_verify(bool all, const std::string& check, const std::string& format,
               const SweepConfig& cfg) {
  if (all == !check.empty()) {
    std::cerr << "error: pass exactly one of --all or --check NAME\n";
    return kExitUsage;
  }
  if (format != "text" && format != "json") {
    std::cerr << "error: --format must be text or json\n";
    return kExitUsage;
  }
  if (cfg.samples < 0) {
    std::cerr << "error: --samples must be nonnegative\n";
    return kExitUsage;
  }
  Report rep;
  if (all) {
    rep = run_all(cfg);
  } else {
    try {
      CheckResult r = run_check(check, cfg);
      rep.suite_version = "0.1.0";
      rep.convention = kMukaiConvention;
      rep.config = cfg;
      rep.overall_pass = r.ok();
      rep.checks.push_back(std::move(r));
      rep.sweep = nlohmann::json::object();
    } catch (const DomainError&) {
      std::cerr << "error: unknown check \"" << check << "\"; registered checks:\n";
      for (const std::string& name : check_registry()) std::cerr << "  " << name << "\n";
      return kExitUsage;
    }
  }
  if (format == "json")
    std::cout << canonical_json(report_json(rep));
  else
    std::cout << report_text(rep);
  return rep.overall_pass ? kExitPass : kExitCheckFailure;
}

int cmd_export(const std::string& name, const std::string& path) {
  GramFile f;
  try {
    f = builtin_gram_file(name);
  } catch (const DomainError&) {
    std::cerr << "error: unknown lattice \"" << name << "\"; exportable:";
    for (const std::string& n : exportable_names()) std::cerr << " " << n;
    std::cerr << "\n";
    return kExitUsage;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return kExitUsage;
  }
  out << serialize_gram_file(f);
  return out ? kExitPass : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact integral-lattice toolkit"};
  app.require_subcommand(1);

  auto* lattice = app.add_subcommand("lattice", "lattice file inspection");
  lattice->require_subcommand(1);
  auto* info = lattice->add_subcommand("info", "print rank, signature, determinant and "
                                               "discriminant form of a Gram file");
  std::string info_path;
  info->add_option("file", info_path, "Gram JSON file")->required();

  auto* verify = app.add_subcommand("verify", "run verification checks");
  bool all = false;
  std::string check_name, format = "text";
  SweepConfig cfg;
  verify->add_flag("--all", all, "run every registered check");
  verify->add_option("--check", check_name, "run a single named check");
  verify->add_option("--format", format, "text or json");
  verify->add_option("--seed", cfg.seed, "sweep RNG seed (default 0)");
  verify->add_option("--samples", cfg.samples, "sweep sample count (default 100)");

  auto* exp = app.add_subcommand("export", "write a builtin lattice as a Gram file");
  std::string exp_name, exp_path;
  exp->add_option("name", exp_name, "builtin lattice name")->required();
  exp->add_option("file", exp_path, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (info->parsed()) return cmd_lattice_info(info_path);
    if (verify->parsed()) return cmd_verify(all, check_name, format, cfg);
    if (exp->parsed()) return cmd_export(exp_name, exp_path);
  } catch (const lattk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cerr << app.help();
  return kExitUsage;
}
