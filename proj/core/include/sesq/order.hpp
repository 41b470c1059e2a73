#pragma once

// Order structure of forms: infima, minimal forms and extreme points of
// form intervals [0, t].

#include <optional>

#include "sesq/decomposition.hpp"
#include "sesq/random.hpp"

namespace sesq {

enum class InfimumWitness {
  regular_leq_w,           // D_w t <= w, the infimum is D_w t
  regular_leq_t_reversed,  // D_t w <= t, the infimum is D_t w
  not_comparable,          // D_w t and D_t w are not comparable: no infimum
};

const char* to_string(InfimumWitness w);

struct InfimumResult {
  bool exists = false;
  std::optional<Form> value;
  InfimumWitness witness = InfimumWitness::not_comparable;
};

/// The greatest lower bound t ∧ w. It exists exactly when D_t w and D_w t
/// are comparable; then it is D_w t if D_w t <= w and D_t w otherwise.
InfimumResult infimum(const Form& t, const Form& w, const Tolerances& tol = {});

/// Runs infimum(t, w) against `samples` random w; true iff every infimum
/// exists. Throws PreconditionError("form not minimal") unless t is minimal.
bool infimum_always_exists_minimal(const Form& t, int samples, Rng& rng,
                                   const Tolerances& tol = {});

/// Whether u is an extreme point of [0, t], for u <= t. Evaluates both
/// u ⊥ (t - u) and D_u t = u and throws std::logic_error if they disagree.
/// Throws PreconditionError("u not below t") unless u <= t.
bool is_extreme_in_interval(const Form& u, const Form& t, const Tolerances& tol = {});

/// u = (a + b) / 2 with a != b both in [0, t].
struct MidpointWitness {
  Form lower;  // a = u - d
  Form upper;  // b = u + d
};

/// For u in [0, t] that is not extreme, d = u : (t - u) is nonzero and
/// satisfies d <= u and d <= t - u, so u -/+ d both lie in [0, t].
/// Returns nothing when d vanishes (u is extreme).
std::optional<MidpointWitness> midpoint_witness(const Form& u, const Form& t,
                                                const Tolerances& tol = {});

/// W^1/2 P W^1/2 where P projects onto the image of p in ran W. Always an
/// extreme point of [0, w].
Form extreme_generator(const Form& w, const Subspace& p, const Tolerances& tol = {});

struct SegmentCheck {
  bool t_extreme = false;       // t ∈ ex[0, t + w]
  int samples = 0;              // translated extreme points tested
  int translated_failures = 0;  // t + v ∉ ex[0, t + w]
  bool consistent = false;      // t_extreme == (translated_failures == 0)
};

/// Samples ex[t, t + w] = t + ex[0, w] through extreme_generator (the first
/// sample is v = 0, i.e. t itself) and compares membership in ex[0, t + w]
/// with whether t itself is extreme.
SegmentCheck segment_extremes_check(const Form& t, const Form& w, int samples, Rng& rng,
                                    const Tolerances& tol = {});

}  // namespace sesq
