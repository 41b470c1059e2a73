#include <map>

#include "CLI11.hpp"
#include "sesq_cli/run.hpp"

int main(int argc, char** argv) {
  using sesq::cli::JobConfig;

  CLI::App app{"Decompositions of nonnegative sesquilinear forms and operator kernels"};
  app.require_subcommand(1);

  std::map<CLI::App*, JobConfig> jobs;
  for (const auto& info : sesq::cli::commands()) {
    CLI::App* sub = app.add_subcommand(std::string(info.name), std::string(info.summary));
    JobConfig& job = jobs[sub];
    job.command = info.command;
    auto* inputs = sub->add_option("inputs", job.inputs, std::string(info.usage));
    if (info.min_inputs > 0) {
      inputs->required()->expected(info.min_inputs, info.max_inputs);
    }
    sub->add_option("--tol-sym", job.tol_sym, "Hermitian symmetry tolerance");
    sub->add_option("--tol-psd", job.tol_psd, "PSD eigenvalue tolerance");
    sub->add_option("--tol-recon", job.tol_recon, "reconstruction tolerance");
    sub->add_option("--rank-tol", job.rank_tol, "relative rank threshold");
    sub->add_option("--seed", job.seed, "seed for sampling commands");
    sub->add_option("--samples", job.samples, "ensemble size for check-theorems");
    sub->add_option("--terms", job.terms, "length of the rn sequence");
    sub->add_option("-o,--output", job.output, "write the result document here");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : sesq::cli::ExitCode::validation_failed;
  }
  for (auto& [sub, job] : jobs) {
    if (sub->parsed()) {
      return sesq::cli::execute(job);
    }
  }
  return sesq::cli::ExitCode::validation_failed;
}
