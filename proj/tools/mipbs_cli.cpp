#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mipbs/bridge.hpp"
#include "mipbs/error.hpp"
#include "mipbs/graph.hpp"
#include "mipbs/mbs.hpp"
#include "mipbs/reduce.hpp"
#include "mipbs/render.hpp"
#include "mipbs/solve.hpp"
#include "mipbs/subset_sum.hpp"
#include "mipbs/sweep.hpp"

using namespace mipbs;

namespace {

constexpr int kUsage = 2;

std::string reading;  // file being parsed, for error messages

template <class F>
auto with_file(const std::string& path, F read) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError(path + ": cannot open");
  reading = path;
  auto result = read(in);
  reading.clear();
  return result;
}

template <class F>
void to_output(const std::string& path, F write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw CLI::ValidationError(path + ": cannot write");
  write(out);
}

std::string margin(const Rational& budget, const Rational& optimum) {
  return format_rational(Rational(budget - optimum));
}

int verify_mip(const SubsetSumInstance& inst) {
  const ReductionCheck c = check_mip_reduction(inst);
  std::cout << (c.holds() ? "PASS" : "FAIL") << " opt=" << format_rational(c.optimum) << " C=" << c.budget
            << ' ' << (c.subset_sum_yes ? "yes" : "no") << " margin=" << margin(Rational(c.budget), c.optimum)
            << '\n';
  return c.holds() ? 0 : 1;
}

int verify_mbs(const SubsetSumInstance& inst, const std::string& mbs_out, const std::string& shrinks_out,
               const std::string& cert_out) {
  const MbsInstance built = build_mbs_instance(inst);
  const MbsCheck c = check_mbs_instance(built);
  if (!mbs_out.empty()) to_output(mbs_out, [&](std::ostream& out) { write_mbs(out, built); });
  if (!shrinks_out.empty()) to_output(shrinks_out, [&](std::ostream& out) { write_shrinks(out, built, c.shrinks); });
  if (!cert_out.empty() && (c.route || c.barrier)) {
    to_output(cert_out, [&](std::ostream& out) {
      if (c.route) {
        write_certificate(out, *c.route);
      } else {
        write_certificate(out, *c.barrier);
      }
    });
  }
  std::ostringstream drift;
  drift.precision(4);
  drift << " drift=" << c.max_weight_drift << " route_drift=" << c.max_route_drift;
  std::cout << (c.holds() ? "PASS" : "FAIL") << " opt=" << format_rational(c.optimum)
            << " budget=" << format_rational(c.budget) << ' ' << (c.subset_sum_yes ? "yes" : "no")
            << " margin=" << margin(c.budget, c.optimum) << drift.str() << " certificate="
            << (c.route ? "route" : c.barrier ? "barrier" : "none") << (c.certificate_ok ? "" : "(rejected)")
            << '\n';
  return c.holds() ? 0 : 1;
}

int verify_cert(const std::string& mbs_path, const std::string& shrink_path, const std::string& cert_path,
                const std::string& budget_text) {
  const MbsInstance inst = with_file(mbs_path, [](std::istream& in) { return read_mbs(in); });
  const ShrinkVector s = with_file(shrink_path, [&](std::istream& in) { return read_shrinks(in, inst); });
  const Certificate cert = with_file(cert_path, [](std::istream& in) { return read_certificate(in); });
  const Rational budget = budget_text.empty() ? inst.budget : parse_rational(budget_text);
  const bool ok = cert.route ? check_route(inst, s, *cert.route, budget) : check_barrier(inst, s, *cert.barrier);
  std::cout << (ok ? "PASS " : "FAIL ") << (cert.route ? "route" : "barrier")
            << " cost=" << format_rational(s.cost()) << " budget=" << format_rational(budget) << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum Installation Path and Minimum Barrier Shrinkage workbench", "mipbs"};
  app.require_subcommand(1);
  int status = 0;

  std::string method, kind, input, output, eps_text = "1/10", budget_text, cert_path, shrink_path;
  std::string mbs_out, shrinks_out, cert_out;
  bool annotate = false, serial = false;
  int n_max = 3, a_max = 3;

  auto* solve = app.add_subcommand("solve", "Solve a Minimum Installation Path instance");
  solve->add_option("method", method, "exact | brute | fptas")->required()->check(CLI::IsMember({"exact", "brute", "fptas"}));
  solve->add_option("graph", input)->required()->check(CLI::ExistingFile);
  solve->add_option("--eps", eps_text, "FPTAS accuracy, e.g. 1/2");
  solve->callback([&] {
    const WeightedGraph g = with_file(input, [](std::istream& in) { return read_graph(in); });
    SolveResult r = method == "exact"   ? solve_exact_integer(g)
                    : method == "brute" ? solve_bruteforce(g)
                                        : fptas(g, parse_rational(eps_text));
    write_solution(std::cout, g, r);
  });

  auto* lambda = app.add_subcommand("lambda", "Smallest uniform power connecting the terminals");
  lambda->add_option("graph", input)->required()->check(CLI::ExistingFile);
  lambda->callback([&] {
    const WeightedGraph g = with_file(input, [](std::istream& in) { return read_graph(in); });
    std::cout << format_rational(compute_lambda(g)) << '\n';
  });

  auto* ss = app.add_subcommand("ss", "Subset Sum");
  auto* ss_solve = ss->add_subcommand("solve", "Decide a Subset Sum instance");
  ss->require_subcommand(1);
  ss_solve->add_option("file", input)->required()->check(CLI::ExistingFile);
  ss_solve->callback([&] {
    const SubsetSumInstance inst = with_file(input, [](std::istream& in) { return read_subset_sum(in); });
    if (auto subset = solve_subset_sum(inst)) {
      std::cout << "yes\nsubset";
      for (std::size_t i : *subset) std::cout << ' ' << i;
      std::cout << '\n';
    } else {
      std::cout << "no\n";
    }
  });

  auto* reduce = app.add_subcommand("reduce", "Generate a hard instance from Subset Sum");
  reduce->add_option("kind", kind, "mip | mbs")->required()->check(CLI::IsMember({"mip", "mbs"}));
  reduce->add_option("file", input)->required()->check(CLI::ExistingFile);
  reduce->add_option("-o,--output", output, "output file (default stdout)");
  reduce->callback([&] {
    const SubsetSumInstance inst = with_file(input, [](std::istream& in) { return read_subset_sum(in); });
    if (kind == "mip") {
      const MipReduction red = build_mip_reduction(inst);
      to_output(output, [&](std::ostream& out) { write_graph(out, red.graph); });
    } else {
      const MbsInstance mbs = build_mbs_instance(inst);
      to_output(output, [&](std::ostream& out) { write_mbs(out, mbs); });
    }
  });

  auto* verify = app.add_subcommand("verify", "Check a reduction or a certificate");
  verify->add_option("kind", kind, "mip | mbs | cert")->required()->check(CLI::IsMember({"mip", "mbs", "cert"}));
  verify->add_option("file", input, "Subset Sum file, or MBS instance for cert")->required()->check(CLI::ExistingFile);
  verify->add_option("solution", shrink_path, "shrink vector (cert only)")->check(CLI::ExistingFile);
  verify->add_option("certificate", cert_path, "route or barrier (cert only)")->check(CLI::ExistingFile);
  verify->add_option("--budget", budget_text, "budget override (cert only)");
  verify->add_option("--write-mbs", mbs_out, "mbs: save the constructed instance");
  verify->add_option("--write-shrinks", shrinks_out, "mbs: save the shrink vector behind the certificate");
  verify->add_option("--write-cert", cert_out, "mbs: save the route or barrier certificate");
  verify->callback([&] {
    if (kind == "cert") {
      if (shrink_path.empty() || cert_path.empty()) {
        throw CLI::ValidationError("verify cert needs <mbs-file> <solution-file> <cert-file>");
      }
      status = verify_cert(input, shrink_path, cert_path, budget_text);
      return;
    }
    if (!shrink_path.empty()) throw CLI::ValidationError("verify " + kind + " takes a single file");
    const SubsetSumInstance inst = with_file(input, [](std::istream& in) { return read_subset_sum(in); });
    status = kind == "mip" ? verify_mip(inst) : verify_mbs(inst, mbs_out, shrinks_out, cert_out);
  });

  auto* render = app.add_subcommand("render", "Draw an MBS instance as SVG");
  render->add_option("file", input)->required()->check(CLI::ExistingFile);
  render->add_option("-o,--output", output, "SVG file (default stdout)");
  render->add_flag("--annotate", annotate, "label penetration depths");
  render->callback([&] {
    const MbsInstance mbs = with_file(input, [](std::istream& in) { return read_mbs(in); });
    to_output(output, [&](std::ostream& out) { render_svg(out, mbs, RenderOptions{annotate}); });
  });

  auto* sweep = app.add_subcommand("sweep", "Exhaustive reduction sweep");
  sweep->add_option("kind", kind, "mip | mbs")->required()->check(CLI::IsMember({"mip", "mbs"}));
  sweep->add_option("--n-max", n_max)->check(CLI::Range(1, 8));
  sweep->add_option("--a-max", a_max)->check(CLI::Range(1, 16));
  sweep->add_flag("--serial", serial, "run without OpenMP");
  sweep->callback([&] {
    const SweepSummary s = kind == "mip" ? sweep_mip(n_max, a_max, !serial) : sweep_mbs(n_max, a_max, !serial);
    write_summary(std::cout, s);
    status = s.ok() ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << (reading.empty() ? "" : reading + ": ") << e.what() << '\n';
    return e.code() == ErrorCode::kParse || e.code() == ErrorCode::kInvalidArgument ? kUsage : 1;
  }
  return status;
}
