#include "sesq_cli/run.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

#include "sesq_cli/io.hpp"

namespace sesq::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 1;
constexpr int kSegmentSamples = 8;

Tolerances tolerances_of(const JobConfig& c) {
  Tolerances tol;
  if (c.tol_sym) tol.sym = *c.tol_sym;
  if (c.tol_psd) tol.psd = *c.tol_psd;
  if (c.tol_recon) tol.recon = *c.tol_recon;
  if (c.rank_tol) tol.rank = *c.rank_tol;
  tol.validate();
  return tol;
}

struct Inputs {
  const JobConfig& config;
  const Tolerances& tol;

  const std::string& path(std::size_t i) const { return config.inputs.at(i); }
  Form form(std::size_t i) const { return form_from_json(read_json_file(path(i)), path(i), tol); }
  Kernel kernel(std::size_t i) const {
    return kernel_from_json(read_json_file(path(i)), path(i), tol);
  }
  Vector vector(std::size_t i) const {
    return vector_document_from_json(read_json_file(path(i)), path(i));
  }
};

json infimum_to_json(bool exists, const json& value, InfimumWitness witness) {
  json out = {{"exists", exists}, {"witness", to_string(witness)}};
  if (exists) {
    out["value"] = value;
  }
  return out;
}

json check_theorems(const Inputs& in, const Tolerances& tol) {
  Rng rng(in.config.seed.value_or(kDefaultSeed));
  std::vector<FormPair> pairs;
  if (in.config.inputs.size() == 2) {
    const Form t = in.form(0);
    const Form w = in.form(1);
    require_same_dim(t, w, "check-theorems");
    pairs.push_back({t, w, PairKind::generic});
  } else {
    if (in.config.samples < 1) {
      throw ValidationError("--samples must be positive");
    }
    for (int i = 0; i < in.config.samples; ++i) {
      pairs.push_back(random_pair(rng, 2 + i % 5));
    }
  }
  int mutual_failures = 0;
  int segment_failures = 0;
  int extreme = 0;
  for (const FormPair& p : pairs) {
    mutual_failures += !mutual_ad_check(p.t, p.w, tol);
    const SegmentCheck s = segment_extremes_check(p.t, p.w, kSegmentSamples, rng, tol);
    segment_failures += !s.consistent;
    extreme += s.t_extreme;
  }
  const int n = static_cast<int>(pairs.size());
  return {
      {"instances", n},
      {"mutual_almost_domination", {{"failures", mutual_failures}, {"passed", mutual_failures == 0}}},
      {"segment_extremes",
       {{"failures", segment_failures},
        {"passed", segment_failures == 0},
        {"samples_per_instance", kSegmentSamples},
        {"t_extreme", extreme}}},
  };
}

json dispatch(const JobConfig& c, const Tolerances& tol) {
  const Inputs in{c, tol};
  switch (c.command) {
    case Command::parallel_sum:
      return form_to_json(parallel_sum(in.form(0), in.form(1), tol));
    case Command::short_part:
      return form_to_json(short_decompose(in.form(0), in.form(1), tol).ac_part);
    case Command::decompose_lebesgue: {
      const auto r = lebesgue_decompose(in.form(0), in.form(1), tol);
      return {{"regular", form_to_json(r.regular)},
              {"singular", form_to_json(r.singular_part)},
              {"unique", r.unique}};
    }
    case Command::decompose_short: {
      const auto r = short_decompose(in.form(0), in.form(1), tol);
      return {{"ac", form_to_json(r.ac_part)},
              {"singular", form_to_json(r.singular_part)},
              {"unique", r.unique}};
    }
    case Command::infimum: {
      const auto r = infimum(in.form(0), in.form(1), tol);
      return infimum_to_json(r.exists, r.value ? form_to_json(*r.value) : json(), r.witness);
    }
    case Command::extreme_check: {
      const Form u = in.form(0);
      const Form t = in.form(1);
      json out = {{"extreme", is_extreme_in_interval(u, t, tol)}};
      if (const auto m = midpoint_witness(u, t, tol)) {
        out["midpoint"] = {{"lower", form_to_json(m->lower)}, {"upper", form_to_json(m->upper)}};
      }
      return out;
    }
    case Command::rn: {
      const Form t = in.form(0);
      const Form w = in.form(1);
      const Vector y = in.vector(2);
      const auto r = rn_representative(t, w, y, tol);
      json sequence = json::array();
      for (const Vector& yn : rn_sequence(t, w, y, c.terms, tol)) {
        sequence.push_back(vector_to_json(yn));
      }
      return {{"y", vector_to_json(r.y)},
              {"xi", vector_to_json(r.xi)},
              {"xi_ambient", vector_to_json(r.xi_ambient)},
              {"sequence", std::move(sequence)}};
    }
    case Command::kernel_lebesgue:
    case Command::kernel_short: {
      const bool lebesgue = c.command == Command::kernel_lebesgue;
      const Kernel k = in.kernel(0);
      const Kernel l = in.kernel(1);
      const auto r = lebesgue ? kernel_lebesgue(k, l, tol) : kernel_short(k, l, tol);
      return {{lebesgue ? "regular" : "ac", kernel_to_json(r.regular)},
              {"singular", kernel_to_json(r.singular)},
              {"unique", r.unique}};
    }
    case Command::kernel_infimum: {
      const auto r = kernel_infimum(in.kernel(0), in.kernel(1), tol);
      return infimum_to_json(r.exists, r.value ? kernel_to_json(*r.value) : json(), r.witness);
    }
    case Command::dilate: {
      const auto r = dilate(in.kernel(0), in.kernel(1), tol);
      return {{"dilation_space_dim", r.dilation_space_dim},
              {"map", matrix_to_json(r.map)},
              {"source_basis", matrix_to_json(r.source_basis.basis())},
              {"closed", r.closed}};
    }
    case Command::check_theorems:
      return check_theorems(in, tol);
  }
  throw std::logic_error("unhandled command");
}

}  // namespace

const std::vector<CommandInfo>& commands() {
  static const std::vector<CommandInfo> table = {
      {Command::parallel_sum, "parallel-sum", "t.json w.json", "parallel sum t:w", 2, 2},
      {Command::short_part, "short", "t.json w.json", "short of t to ker w", 2, 2},
      {Command::decompose_lebesgue, "decompose-lebesgue", "t.json w.json",
       "Lebesgue-type decomposition of t with respect to w", 2, 2},
      {Command::decompose_short, "decompose-short", "t.json w.json",
       "short-type decomposition of t with respect to w", 2, 2},
      {Command::infimum, "infimum", "t.json w.json", "infimum of t and w, if it exists", 2, 2},
      {Command::extreme_check, "extreme-check", "u.json t.json",
       "whether u is an extreme point of [0, t]", 2, 2},
      {Command::rn, "rn", "t.json w.json y.json",
       "representing vector and sequence of y", 3, 3},
      {Command::kernel_lebesgue, "kernel-lebesgue", "k.json l.json",
       "Lebesgue-type decomposition of kernel K with respect to L", 2, 2},
      {Command::kernel_short, "kernel-short", "k.json l.json",
       "short-type decomposition of kernel K with respect to L", 2, 2},
      {Command::kernel_infimum, "kernel-infimum", "k.json l.json",
       "infimum of kernels K and L, if it exists", 2, 2},
      {Command::dilate, "dilate", "k.json l.json", "dilation of K over X / ker w_L", 2, 2},
      {Command::check_theorems, "check-theorems", "[t.json w.json]",
       "mutual almost domination and segment extreme-point ensembles", 0, 2},
  };
  return table;
}

std::optional<Command> parse_command(std::string_view name) {
  for (const CommandInfo& info : commands()) {
    if (info.name == name) {
      return info.command;
    }
  }
  return std::nullopt;
}

std::string_view command_name(Command c) {
  for (const CommandInfo& info : commands()) {
    if (info.command == c) {
      return info.name;
    }
  }
  throw std::logic_error("unknown command");
}

RunResult run(const JobConfig& config) {
  RunResult out;
  try {
    const Tolerances tol = tolerances_of(config);
    const auto& info = commands()[static_cast<std::size_t>(config.command)];
    const int n = static_cast<int>(config.inputs.size());
    if (n < info.min_inputs || n > info.max_inputs || (info.min_inputs == 0 && n == 1)) {
      throw ValidationError(std::string(info.name) + ": expected inputs " + std::string(info.usage));
    }
    if (config.terms < 1) {
      throw ValidationError("--terms must be positive");
    }
    const json document = {{"command", info.name},
                           {"tolerances", tolerances_to_json(tol)},
                           {"result", dispatch(config, tol)}};
    out.document = dump_document(document);
  } catch (const PreconditionError& e) {
    out.exit_code = ExitCode::precondition_failed;
    out.error = e.what();
  } catch (const ValidationError& e) {
    out.exit_code = ExitCode::validation_failed;
    out.error = e.what();
  } catch (const std::exception& e) {
    out.exit_code = ExitCode::internal_error;
    out.error = std::string("internal error: ") + e.what();
  }
  return out;
}

int execute(const JobConfig& config) {
  RunResult r = run(config);
  if (r.exit_code != ExitCode::ok) {
    std::cerr << "sesq: " << r.error << "\n";
    return r.exit_code;
  }
  if (config.output) {
    std::ofstream file(*config.output, std::ios::binary);
    if (!file || !(file << r.document)) {
      std::cerr << "sesq: " << *config.output << ": cannot write output\n";
      return ExitCode::validation_failed;
    }
  } else {
    std::cout << r.document;
  }
  return ExitCode::ok;
}

}  // namespace sesq::cli
