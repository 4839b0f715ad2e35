// kronface: order matrices, pairs and faces of small Kronecker cones.
//
// Exit codes: 0 success, 1 usage, 2 acceptance mismatch, 3 internal
// consistency failure.

#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "kronface/acceptance.hpp"
#include "kronface/errors.hpp"
#include "kronface/report.hpp"
#include "kronface/serialize.hpp"

namespace {

using namespace kronface;

constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitInternal = 3;

struct Shape {
  int n1 = 0;
  int n2 = 0;
};

void add_shape(CLI::App* cmd, Shape& s) {
  cmd->add_option("n1", s.n1, "rows")->required()->check(CLI::PositiveNumber);
  cmd->add_option("n2", s.n2, "columns")->required()->check(CLI::PositiveNumber);
}

void check_cap(const Shape& s, int cap) {
  if (s.n1 * s.n2 > cap) {
    throw DomainError("n1 * n2 = " + std::to_string(s.n1 * s.n2) + " exceeds the cap " + std::to_string(cap) +
                      " (raise it with --cap)");
  }
}

// "-" or empty writes to stdout.
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order matrices, dominant pairs and faces of Kronecker cones"};
  app.require_subcommand(1);
  std::string threads = "auto";
  unsigned seed = 20240517;
  int cap = 16;
  app.add_option("--threads", threads, "OpenMP threads, or auto")->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized property checks")->capture_default_str();
  app.add_option("--cap", cap, "largest allowed n1 * n2")->capture_default_str();

  Shape shape;
  auto* enumerate = app.add_subcommand("enumerate", "list order matrices with minimized witnesses");
  add_shape(enumerate, shape);
  std::string enum_json;
  enumerate->add_option("--json", enum_json, "write JSON (to stdout when no path)")->expected(0, 1);
  enumerate->add_flag("--table", "markdown table (default)");

  auto* faces = app.add_subcommand("faces", "run the full pipeline and report faces");
  add_shape(faces, shape);
  int n_max = -1;
  int depth = -1;
  int cert_n_max = -1;
  std::string out_path;
  std::string faces_json;
  bool no_probe = false;
  faces->add_option("--nmax", n_max, "lattice-point bound N_max (default 10, or 9 above 6 cells)");
  faces->add_option("--depth", depth, "stability depth D (default 3, or 2 above 6 cells)");
  faces->add_option("--cert-nmax", cert_n_max, "certificate search bound (default N_max)");
  faces->add_option("--out", out_path, "markdown report path (stdout when absent)");
  faces->add_option("--json", faces_json, "JSON output path");
  faces->add_flag("--no-probe", no_probe, "skip spans and stability probes");

  auto* kron = app.add_subcommand("kron", "print g(d alpha, d beta, d gamma)");
  std::string alpha_s, beta_s, gamma_s;
  int scale = 1;
  kron->add_option("alpha", alpha_s, "parts, e.g. 4,3,2")->required();
  kron->add_option("beta", beta_s)->required();
  kron->add_option("gamma", gamma_s)->required();
  kron->add_option("--scale", scale, "d")->check(CLI::PositiveNumber)->capture_default_str();

  auto* check = app.add_subcommand("check", "run the acceptance checks for one grid shape");
  add_shape(check, shape);
  std::string golden = default_golden_dir();
  bool verbose = false;
  check->add_option("--golden", golden, "directory of reference tables")->capture_default_str();
  check->add_flag("--verbose", verbose, "print every check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (threads != "auto") {
      const int t = std::stoi(threads);
      if (t < 1) throw DomainError("--threads must be positive or auto");
      omp_set_num_threads(t);
    }
    const auto t0 = std::chrono::steady_clock::now();

    if (*enumerate) {
      check_cap(shape, cap);
      const auto ms = enumerate_order_matrices(shape.n1, shape.n2);
      if (enumerate->count("--json") > 0) {
        emit(enum_json, Json(ms).dump(2) + "\n");
      } else {
        std::cout << ms.size() << " order matrices\n\n" << render_matrix_table(ms);
      }
    } else if (*faces) {
      check_cap(shape, cap);
      PipelineOptions o = PipelineOptions::defaults_for(shape.n1, shape.n2);
      if (n_max > 0) o.n_max = n_max;
      if (depth > 0) o.depth = depth;
      o.cert_n_max = cert_n_max >= 0 ? cert_n_max : o.n_max;
      o.probe_faces = !no_probe;
      const PipelineResult r = run_pipeline(o);
      emit(out_path, render_report(r));
      if (!faces_json.empty()) emit(faces_json, result_to_json(r).dump(2) + "\n");
      std::cerr << summarize(r).headline() << "\n";
      if (r.refuted_triples() > 0) {
        throw InternalConsistencyError(std::to_string(r.refuted_triples()) + " face triples have g(d.) >= 2");
      }
    } else if (*kron) {
      const KroneckerQuery q{parse_partition(alpha_s), parse_partition(beta_s), parse_partition(gamma_s)};
      if (q.alpha.weight() != q.beta.weight() || q.alpha.weight() != q.gamma.weight()) {
        throw DomainError("partitions must have equal weight");
      }
      std::cout << kronecker(q.scaled(scale).alpha, q.scaled(scale).beta, q.scaled(scale).gamma) << "\n";
    } else if (*check) {
      const bool known = (shape.n1 == 2 && shape.n2 == 2) || (shape.n1 == 3 && shape.n2 == 2) ||
                         (shape.n1 == 3 && shape.n2 == 3);
      if (!known) throw DomainError("check supports (2,2), (3,2) and (3,3)");
      AcceptanceOptions ao;
      ao.golden_dir = golden;
      ao.seed = seed;
      ao.shapes = {{shape.n1, shape.n2}};
      AcceptanceRunner runner(ao);
      bool all_pass = true;
      for (const auto& r : runner.run_all()) {
        std::cout << r.summary_line() << "\n";
        if (verbose) {
          for (const auto& c : r.primary) std::cout << "  [" << (c.ok ? "ok" : "no") << "] " << c.what << ": " << c.observed << "\n";
          for (const auto& c : r.analysis) std::cout << "  (" << (c.ok ? "ok" : "no") << ") " << c.what << ": " << c.observed << "\n";
        }
        all_pass = all_pass && r.pass();
      }
      std::cerr << "elapsed " << seconds_since(t0) << " s\n";
      return all_pass ? 0 : kExitMismatch;
    }
    std::cerr << "elapsed " << seconds_since(t0) << " s\n";
  } catch (const InternalConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
