#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "knotalg/forms.hpp"
#include "knotalg/linalg.hpp"
#include "knotalg/seifert.hpp"

namespace knotalg::gen {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi);
IntMatrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols, long lo, long hi);

/// Product of `steps` random elementary matrices, and its inverse.
struct Unimodular {
  IntMatrix u;
  IntMatrix inv;
};
Unimodular random_unimodular(Rng& rng, Eigen::Index n, int steps = 4);

/// Uniform θ with entries in [lo, hi], resampled until θ - ηθ^T is
/// unimodular. n must be even (odd ranks admit no such θ over Z).
SeifertForm<Integer> random_nonsingular_form(Rng& rng, Eigen::Index n, int eta, long lo = -2,
                                             long hi = 2);

enum class PadKind { Nilpotent, Unipotent, Mixed };
const char* pad_name(PadKind k);

/// Near-projection module of rank 1..3, conjugated by a random unimodular.
SeifertModule<Integer> random_pad(Rng& rng, PadKind kind);

/// F ⊕ (N, e_N, θ = 0).
SeifertForm<Integer> pad_form(const SeifertForm<Integer>& f, const SeifertModule<Integer>& pad);

/// Base change: (u^{-1} e u, u* θ u).
SeifertForm<Integer> conjugate(const SeifertForm<Integer>& f, const Unimodular& u);

}  // namespace knotalg::gen
