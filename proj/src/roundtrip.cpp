#include "knotalg/roundtrip.hpp"

#include <chrono>

#include "knotalg/invariants.hpp"

namespace knotalg {

RoundtripInstance make_roundtrip_instance(const RoundtripConfig& cfg, int index) {
  gen::Rng rng(cfg.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(index) + 1);
  const int eta = cfg.eta != 0 ? cfg.eta : (index % 2 == 0 ? 1 : -1);
  const long max_even = (cfg.max_rank / 2) * 2;
  const long n = 2 * gen::uniform(rng, max_even >= 2 ? 1 : 0, max_even / 2);
  RoundtripInstance inst;
  inst.base = gen::random_nonsingular_form(rng, n, eta);
  inst.input = inst.base;
  if (index % 5 < cfg.pad_per_five) {
    const auto kind = static_cast<gen::PadKind>(gen::uniform(rng, 0, 2));
    inst.pad = gen::pad_name(kind);
    inst.input = gen::pad_form(inst.base, gen::random_pad(rng, kind));
    inst.input = gen::conjugate(inst.input, gen::random_unimodular(rng, inst.input.rank()));
  }
  return inst;
}

RoundtripCase run_roundtrip_case(const RoundtripInstance& inst, int index) {
  RoundtripCase c;
  c.index = index;
  c.eta = inst.base.eta;
  c.base_rank = inst.base.rank();
  c.input_rank = inst.input.rank();
  c.pad = inst.pad;
  const auto start = std::chrono::steady_clock::now();
  try {
    const BlanchfieldForm<Integer> b = cover_form(inst.input);
    const UncoverResult<Integer> r = uncover(b);
    const SeifertForm<Integer>& out = r.form;
    c.full_path = !r.trace.shortcut;
    c.k = r.trace.k;
    c.output_rank = out.rank();
    c.assertions = r.trace.assertions;
    c.rank_cert = rank_certificate(r, b);
    c.nonsingular = out.nonsingular();
    if (c.nonsingular) {
      c.alexander_ok = alexander(out) == alexander(inst.base);
      c.signature_ok = c.eta != 1 || signature(out) == signature(inst.base);
      c.determinant_ok = determinant_invariant(out) == determinant_invariant(inst.base);
    }
  } catch (const Error& e) {
    c.error = std::string(error_name(e.kind())) + ": " + e.what();
  }
  c.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                 .count();
  return c;
}

std::vector<RoundtripCase> run_roundtrip(const RoundtripConfig& cfg) {
  std::vector<RoundtripCase> out;
  out.reserve(cfg.count);
  for (int i = 0; i < cfg.count; ++i) out.push_back(run_roundtrip_case(make_roundtrip_instance(cfg, i), i));
  return out;
}

}  // namespace knotalg
