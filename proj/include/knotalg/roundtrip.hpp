#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotalg/forms.hpp"
#include "knotalg/random.hpp"

namespace knotalg {

struct RoundtripConfig {
  std::uint64_t seed = 0;
  int count = 100;
  int max_rank = 4;
  /// Instances with index % 5 < pad_per_five are padded.
  int pad_per_five = 2;
  /// 0 alternates eta per instance.
  int eta = 0;
};

struct RoundtripCase {
  int index = 0;
  int eta = 1;
  long base_rank = 0;
  long input_rank = 0;
  std::string pad = "none";
  bool full_path = false;
  int k = 0;
  long output_rank = 0;
  bool nonsingular = false;
  bool alexander_ok = false;
  bool signature_ok = false;
  bool determinant_ok = false;
  RankCertificate rank_cert;
  int assertions = 0;
  std::string error;
  double millis = 0;

  bool ok() const {
    return error.empty() && nonsingular && alexander_ok && signature_ok && determinant_ok;
  }
};

/// Generates instance `index` of the campaign deterministically from the seed.
struct RoundtripInstance {
  SeifertForm<Integer> base;
  SeifertForm<Integer> input;
  std::string pad = "none";
};
RoundtripInstance make_roundtrip_instance(const RoundtripConfig& cfg, int index);

/// uncover(cover_form(input)) compared with the invariants of base.
RoundtripCase run_roundtrip_case(const RoundtripInstance& inst, int index);

std::vector<RoundtripCase> run_roundtrip(const RoundtripConfig& cfg);

}  // namespace knotalg
