// Command line front end: runs verification suites and emits a report.
// Exit codes: 0 all checks pass, 1 at least one check fails, 2 bad input.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qgf/qgf.hpp"

namespace {

struct GlobalOpts {
  double tol = 1e-10;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string report_path;
};

int emit(const qgf::Report& r, const GlobalOpts& opts) {
  std::string text = opts.format == "text" ? qgf::report_to_text(r)
                                           : qgf::report_to_json(r).dump(2) + "\n";
  if (!opts.report_path.empty()) {
    std::ofstream out(opts.report_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write report to " << opts.report_path << "\n";
      return 2;
    }
    out << text;
  }
  std::cout << text;
  return r.all_pass() ? 0 : 1;
}

std::string digest_of_file(const std::string& path) {
  return qgf::fnv1a64(qgf::read_file(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-dimensional verification lab for multiplicative unitaries"};
  app.require_subcommand(1);

  GlobalOpts opts;
  if (const char* env = std::getenv("QGF_TOL")) opts.tol = std::atof(env);
  app.add_option("--tol", opts.tol, "residual tolerance")->capture_default_str();
  app.add_option("--seed", opts.seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--format", opts.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--report", opts.report_path, "also write the report to this file");

  std::string group_path, action_path, sd_path;
  std::vector<int> factors;
  int azb_n = 1;

  auto* pent = app.add_subcommand("pentagon", "pentagon equation for a group unitary");
  pent->add_option("group", group_path, "group file")->required();
  auto* fr = app.add_subcommand("frame-check", "frame axioms and derived identities");
  fr->add_option("group", group_path, "group file")->required();
  auto* st = app.add_subcommand("structure", "algebra structure summary for a group");
  st->add_option("group", group_path, "group file")->required();
  auto* cr = app.add_subcommand("crossed", "crossed product of a group action on a frame");
  cr->add_option("action", action_path, "action file")->required();
  auto* pont = app.add_subcommand("pontryagin", "Fourier transform vs the dual unitary");
  pont->add_option("factors", factors, "cyclic factors, e.g. 2 3")->required();
  auto* azb = app.add_subcommand("azb", "discrete-leg involution pair");
  azb->add_option("n", azb_n, "phase parameter, q = exp(i pi / n)")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* sd = app.add_subcommand("semidirect", "crossed product vs semidirect product");
  sd->add_option("spec", sd_path, "semidirect spec file")->required();

  // Let global options like --format appear after the subcommand too.
  for (auto* s : {pent, fr, st, cr, pont, azb, sd}) s->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    qgf::Report r;
    if (pent->parsed()) {
      r = qgf::cmd_pentagon(qgf::group_from_file(group_path), opts.tol, opts.seed);
      r.input_digest = digest_of_file(group_path);
    } else if (fr->parsed()) {
      r = qgf::cmd_frame_check(qgf::group_from_file(group_path), opts.tol, opts.seed);
      r.input_digest = digest_of_file(group_path);
    } else if (st->parsed()) {
      r = qgf::cmd_structure(qgf::group_from_file(group_path), opts.tol, opts.seed);
      r.input_digest = digest_of_file(group_path);
    } else if (cr->parsed()) {
      r = qgf::cmd_crossed(qgf::action_from_file(action_path), opts.tol, opts.seed);
      r.input_digest = digest_of_file(action_path);
    } else if (pont->parsed()) {
      r = qgf::cmd_pontryagin(factors, opts.tol, opts.seed);
      std::string params;
      for (int f : factors) params += std::to_string(f) + ",";
      r.input_digest = qgf::fnv1a64("pontryagin:" + params);
    } else if (azb->parsed()) {
      r = qgf::cmd_azb(azb_n, opts.tol, opts.seed);
      r.input_digest = qgf::fnv1a64("azb:" + std::to_string(azb_n));
    } else if (sd->parsed()) {
      r = qgf::cmd_semidirect(qgf::semidirect_from_file(sd_path), opts.tol, opts.seed);
      r.input_digest = digest_of_file(sd_path);
    }
    return emit(r, opts);
  } catch (const qgf::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
