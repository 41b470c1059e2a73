#include "sesq/order.hpp"

#include <stdexcept>

namespace sesq {

const char* to_string(InfimumWitness w) {
  switch (w) {
    case InfimumWitness::regular_leq_w:
      return "regular_leq_w";
    case InfimumWitness::regular_leq_t_reversed:
      return "regular_leq_t_reversed";
    case InfimumWitness::not_comparable:
      return "not_comparable";
  }
  return "unknown";
}

InfimumResult infimum(const Form& t, const Form& w, const Tolerances& tol) {
  require_same_dim(t, w, "infimum");
  const Form dwt = lebesgue_ac_part(t, w, tol);
  const Form dtw = lebesgue_ac_part(w, t, tol);

  InfimumResult out;
  const bool comparable = leq(dtw, dwt, tol) || leq(dwt, dtw, tol);
  if (!comparable) {
    return out;
  }
  const bool dwt_below_w = leq(dwt, w, tol);
  const bool dtw_below_t = leq(dtw, t, tol);
  if (dwt_below_w && dtw_below_t && !approx_equal(dwt.matrix(), dtw.matrix(), tol.recon)) {
    throw std::logic_error("infimum: both candidate infima are lower bounds but differ");
  }
  if (dwt_below_w) {
    out.value = dwt;
    out.witness = InfimumWitness::regular_leq_w;
  } else if (dtw_below_t) {
    out.value = dtw;
    out.witness = InfimumWitness::regular_leq_t_reversed;
  } else {
    throw std::logic_error("infimum: D-parts comparable but neither is a common lower bound");
  }
  out.exists = true;
  return out;
}

bool infimum_always_exists_minimal(const Form& t, int samples, Rng& rng, const Tolerances& tol) {
  if (!is_minimal(t, tol)) {
    throw PreconditionError("form not minimal");
  }
  for (int i = 0; i < samples; ++i) {
    std::uniform_int_distribution<Index> rank_dist(0, t.dim());
    const Form w = random_form(rng, t.dim(), rank_dist(rng));
    if (!infimum(t, w, tol).exists) {
      return false;
    }
  }
  return true;
}

bool is_extreme_in_interval(const Form& u, const Form& t, const Tolerances& tol) {
  require_same_dim(u, t, "is_extreme_in_interval");
  if (!leq(u, t, tol)) {
    throw PreconditionError("u not below t");
  }
  const bool disjoint = singular(u, subtract(t, u, tol), tol);
  const bool fixed_point = approx_equal(lebesgue_ac_part(t, u, tol).matrix(), u.matrix(), tol.recon);
  if (disjoint != fixed_point) {
    throw std::logic_error("is_extreme_in_interval: u ⊥ (t - u) and D_u t = u disagree");
  }
  return disjoint;
}

std::optional<MidpointWitness> midpoint_witness(const Form& u, const Form& t,
                                                const Tolerances& tol) {
  require_same_dim(u, t, "midpoint_witness");
  if (!leq(u, t, tol)) {
    throw PreconditionError("u not below t");
  }
  const Form rest = subtract(t, u, tol);
  const Form d = parallel_sum(u, rest, tol);
  if (rank(d.psd(), tol, t.norm()) == 0) {
    return std::nullopt;
  }
  return MidpointWitness{subtract(u, d, tol), u + d};
}

Form extreme_generator(const Form& w, const Subspace& p, const Tolerances& tol) {
  if (p.ambient_dim() != w.dim()) {
    throw DimensionError("extreme_generator: subspace ambient dimension mismatch");
  }
  const Matrix support = range_subspace(w.psd(), tol).projection();
  const Subspace restricted = Subspace::span_of(support * p.basis(), w.dim(), tol, 1.0);
  const Matrix root = sqrt_psd(w.psd()).matrix();
  return Form(HermitianPsd::denoised(root * restricted.projection() * root, w.norm(), tol));
}

SegmentCheck segment_extremes_check(const Form& t, const Form& w, int samples, Rng& rng,
                                    const Tolerances& tol) {
  require_same_dim(t, w, "segment_extremes_check");
  if (samples < 1) {
    throw ValidationError("segment_extremes_check: samples must be positive");
  }
  const Form top = t + w;
  SegmentCheck out;
  out.t_extreme = is_extreme_in_interval(t, top, tol);
  const Index n = t.dim();
  std::uniform_int_distribution<Index> dim_dist(0, n);
  for (int i = 0; i < samples; ++i) {
    const Subspace p = i == 0 ? Subspace::zero(n) : random_subspace(rng, n, dim_dist(rng));
    const Form v = extreme_generator(w, p, tol);
    const Form translated = t + v;
    ++out.samples;
    if (!is_extreme_in_interval(translated, top, tol)) {
      ++out.translated_failures;
    }
  }
  out.consistent = out.t_extreme == (out.translated_failures == 0);
  return out;
}

}  // namespace sesq
