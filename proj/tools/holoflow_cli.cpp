// Copyright (c) 2026 The holoflow authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: synth | verify | simulate | expm.
// Results go to --output (default stdout); diagnostics to stderr only.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "holoflow/errors.hpp"
#include "holoflow/flow.hpp"
#include "holoflow/holonomy.hpp"
#include "holoflow/io.hpp"
#include "holoflow/linalg.hpp"

namespace hf = holoflow;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hf::Error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hf::Error("cannot open output file: " + path);
  out << text;
  if (!out) throw hf::Error("write failed: " + path);
}

hf::Frame load_frame(const hf::ProblemDocument& doc) {
  if (!doc.frame) throw hf::Error("frame: missing");
  if (doc.ambient_dim && doc.frame->rows() != *doc.ambient_dim)
    throw hf::Error("frame: row count does not match ambient_dim");
  try {
    return hf::Frame::create(*doc.frame);
  } catch (const hf::Error&) {
    throw hf::Error("frame: columns not orthonormal");
  }
}

hf::UnitaryMatrix load_unitary(const std::optional<hf::ComplexMatrix>& m,
                               const std::string& field) {
  if (!m) throw hf::Error(field + ": missing");
  try {
    return hf::UnitaryMatrix::create(*m);
  } catch (const hf::Error&) {
    throw hf::Error(field + ": not unitary");
  }
}

hf::BoundaryProblem load_problem(const hf::ProblemDocument& doc) {
  return hf::BoundaryProblem::create(load_frame(doc), load_unitary(doc.g0, "g0"));
}

hf::SynthesisParams load_params(const hf::ProblemDocument& doc,
                                std::optional<std::size_t> pivot_flag) {
  hf::SynthesisParams params{load_unitary(doc.omega, "omega"), doc.winding,
                             pivot_flag ? pivot_flag : doc.pivot};
  if (params.omega.dim() != 2) throw hf::Error("omega: must be 2x2");
  return params;
}

std::string format_csv(const hf::Trajectory& traj) {
  std::string out = "t,dist_to_start,idempotency_drift,hermiticity_drift,trace\n";
  char buf[160];
  for (std::size_t k = 0; k < traj.samples.size(); ++k) {
    const hf::ComplexMatrix& p = traj.samples[k];
    double idem = (p * p - p).frobenius_norm();
    double herm = (p - p.adjoint()).frobenius_norm();
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  traj.times[k], traj.dist_to_start[k], idem, herm,
                  p.trace().real());
    out += buf;
  }
  return out;
}

int run_synth(const std::string& input, const std::string& output,
              std::optional<std::size_t> pivot_flag) {
  hf::ProblemDocument doc = hf::parse_problem_document(read_file(input));
  hf::BoundaryProblem prob = load_problem(doc);
  hf::SynthesisParams params = load_params(doc, pivot_flag);

  hf::SynthesisResult res = hf::synthesize(prob, params);
  hf::ResultDocument out{res.h_ambient.matrix(), res.u_matrix, res.phases,
                         res.report};
  write_output(output, hf::serialize_result(out));

  const hf::MonodromyReport& rep = res.report;
  bool ok = rep.proj_residual <= 1e-8 && rep.restriction_residual <= 1e-8 &&
            rep.skew_residual <= 1e-8;
  if (!ok) return 1;
  return rep.nontrivial ? 0 : 2;
}

int run_verify(const std::string& input, const std::string& output) {
  hf::ProblemDocument doc = hf::parse_problem_document(read_file(input));
  if (!doc.h) throw hf::Error("H: missing");
  hf::BoundaryProblem prob = load_problem(doc);
  hf::MonodromyReport rep = hf::verify_monodromy(*doc.h, prob);
  write_output(output, hf::serialize_report(rep));
  return (rep.proj_residual <= 1e-8 && rep.restriction_residual <= 1e-8) ? 0 : 1;
}

int run_simulate(const std::string& input, const std::string& output,
                 std::optional<std::size_t> steps,
                 std::optional<std::size_t> stride, bool rk4, bool retraction,
                 std::optional<std::size_t> pivot_flag) {
  hf::ProblemDocument doc = hf::parse_problem_document(read_file(input));
  hf::BoundaryProblem prob = load_problem(doc);

  hf::SkewHermitianMatrix h = [&] {
    if (doc.h) return hf::SkewHermitianMatrix::create(*doc.h);
    return hf::synthesize(prob, load_params(doc, pivot_flag)).h_ambient;
  }();

  hf::FlowConfig cfg = doc.flow.value_or(hf::FlowConfig{});
  if (steps) cfg.steps = *steps;
  if (stride) cfg.stride = *stride;
  if (retraction) cfg.retraction = true;

  hf::OrthoProjector p0 = hf::OrthoProjector::from_frame(prob.frame());
  hf::Trajectory traj = rk4 ? hf::integrate_rk4(h, p0, cfg)
                            : hf::sample_exact_flow(h, p0, cfg);
  write_output(output, format_csv(traj));
  return hf::trajectory_stats(traj).closure <= 1e-6 ? 0 : 1;
}

int run_expm(const std::string& input, const std::string& output) {
  hf::ProblemDocument doc = hf::parse_problem_document(read_file(input));
  if (!doc.matrix) throw hf::Error("matrix: missing");
  const hf::ComplexMatrix& m = *doc.matrix;
  if (!m.square()) throw hf::Error("matrix: not square");

  hf::ExpmDocument out{hf::expm(m), std::nullopt, std::nullopt};
  double skew_defect = (m + m.adjoint()).frobenius_norm();
  if (skew_defect <= 1e-12 * hf::norm_scale(m)) {
    hf::UnitaryMatrix spectral =
        hf::expm_spectral(hf::spectral_from_skew(m), 1.0);
    out.disagreement = (out.expm - spectral.matrix()).frobenius_norm();
    out.expm_spectral = spectral.matrix();
  }
  write_output(output, hf::serialize_expm(out));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Berry-phase generator synthesis and Grassmannian projector flow"};
  app.require_subcommand(1);

  std::string input, output = "-";
  int pivot = 0;
  int steps = 0, stride = 0;
  bool exact = false, rk4 = false, retraction = false;

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "input document")->required();
    cmd->add_option("--output", output, "output path ('-' for stdout)");
  };

  CLI::App* synth = app.add_subcommand("synth", "synthesize a generator H");
  add_io(synth);
  synth->add_option("--pivot", pivot, "1-based pivot eigenvalue index");

  CLI::App* verify = app.add_subcommand("verify", "check the monodromy of a given H");
  add_io(verify);

  CLI::App* simulate = app.add_subcommand("simulate", "sample the projector trajectory");
  add_io(simulate);
  simulate->add_option("--steps", steps, "time steps over [0,1]");
  simulate->add_option("--stride", stride, "record every stride-th step");
  simulate->add_flag("--exact", exact, "exact conjugation flow (default)");
  simulate->add_flag("--rk4", rk4, "RK4 integration of dP/dt = [H,P]");
  simulate->add_flag("--retraction", retraction, "re-project samples onto the Grassmannian");
  simulate->add_option("--pivot", pivot, "1-based pivot eigenvalue index");

  CLI::App* expm_cmd = app.add_subcommand("expm", "evaluate both matrix-exponential routes");
  add_io(expm_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  auto opt_size = [](int v) -> std::optional<std::size_t> {
    if (v < 0) throw hf::Error("flag: must be positive");
    if (v == 0) return std::nullopt;
    return static_cast<std::size_t>(v);
  };

  try {
    if (exact && rk4) throw hf::Error("flags: --exact and --rk4 are exclusive");
    if (synth->parsed()) return run_synth(input, output, opt_size(pivot));
    if (verify->parsed()) return run_verify(input, output);
    if (simulate->parsed())
      return run_simulate(input, output, opt_size(steps), opt_size(stride),
                          rk4, retraction, opt_size(pivot));
    if (expm_cmd->parsed()) return run_expm(input, output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
