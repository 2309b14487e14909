#include "commands.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

#include "knotalg/blanchfield.hpp"
#include "knotalg/forms.hpp"
#include "knotalg/invariants.hpp"
#include "knotalg/random.hpp"
#include "knotalg/roundtrip.hpp"
#include "knotalg/seifert.hpp"

namespace knotalg::cli {

namespace {

using io::json;

json read_input(const Options& opt) {
  check(!opt.in.empty(), ErrorKind::ParseError, opt.command + ": --in <path> is required");
  if (opt.in == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return io::parse_text(text);
  }
  return io::read_file(opt.in);
}

int default_eta(const Options& opt) { return io::as_eta(json(opt.eta)); }

template <class R>
std::string matrix_text(const Matrix<R>& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << RingTraits<R>::str(m(i, j));
    os << "]\n";
  }
  return os.str();
}

template <class R>
std::string report_text(const InvariantReport<R>& r) {
  std::ostringstream os;
  os << "alexander: " << r.alexander.to_string() << "\n";
  os << "signature: " << (r.signature ? std::to_string(*r.signature) : std::string("n/a")) << "\n";
  os << "determinant: " << RingTraits<R>::str(r.determinant) << "\n";
  os << "rank: " << r.rank << "\n";
  return os.str();
}

template <class R>
SeifertForm<R> form_from_knot(const KnotRecord& k) {
  Matrix<R> theta(k.seifert_matrix.rows(), k.seifert_matrix.cols());
  for (Eigen::Index i = 0; i < theta.rows(); ++i)
    for (Eigen::Index j = 0; j < theta.cols(); ++j) theta(i, j) = lift<R>(k.seifert_matrix(i, j));
  return make_seifert_form<R>(theta, k.eta);
}

template <class R>
Output cmd_cover(const Options& opt) {
  const auto f = io::form_from_json<R>(read_input(opt), default_eta(opt));
  return {io::to_json<R>(cover_form(f)), "", 0};
}

template <class R>
Output cmd_seifertize(const Options& opt) {
  const auto p = io::presentation_from_json<R>(read_input(opt));
  const auto m = seifertize(p);
  const auto det_d = laurent_det<R>(clear_negative_powers<R>(p.d));
  const auto det_c = laurent_det<R>(covering_matrix<R>(m));
  json body = io::to_json<R>(m);
  body["determinants_agree"] = equal_up_to_unit(det_d, det_c);
  std::string text = "rank: " + std::to_string(m.rank()) + "\ne:\n" + matrix_text<R>(m.e);
  return {body, text, 0};
}

template <class R>
Output cmd_uncover(const Options& opt) {
  const auto b = io::blanchfield_form_from_json<R>(read_input(opt), default_eta(opt));
  const auto r = uncover(b);
  const auto cert = rank_certificate(r, b);
  json trace = {{"shortcut", r.trace.shortcut},
                {"k", r.trace.k},
                {"twist", r.trace.twist},
                {"assertions", r.trace.assertions},
                {"input_rank", b.module.rank()},
                {"output_rank", r.form.rank()},
                {"rank_certificate",
                 {{"skipped", cert.skipped},
                  {"holds", cert.holds},
                  {"expected", cert.expected},
                  {"actual", cert.actual}}}};
  if (!r.trace.shortcut) {
    trace["h"] = io::to_json<R>(r.trace.h);
    trace["h_prime"] = io::to_json<R>(r.trace.h_prime);
  }
  json body = {{"form", io::to_json<R>(r.form)}, {"trace", trace}};
  std::string text = std::string(r.trace.shortcut ? "shortcut" : "full path") +
                     ", k = " + std::to_string(r.trace.k) + ", rank " +
                     std::to_string(b.module.rank()) + " -> " + std::to_string(r.form.rank()) +
                     "\ntheta:\n" + matrix_text<R>(r.form.theta) + "e:\n" +
                     matrix_text<R>(r.form.e());
  return {body, text, 0};
}

template <class R>
Output cmd_decompose(const Options& opt) {
  const json in = read_input(opt);
  const auto m = io::module_from_json<R>(in.contains("module") ? in["module"] : in);
  const auto s = split_near_projection(m);
  json body = {{"k", s.k},
               {"pi_k", io::to_json<R>(s.pi_k)},
               {"projector", io::to_json<R>(s.projector)},
               {"plus", io::to_json<R>(s.plus)},
               {"minus", io::to_json<R>(s.minus)},
               {"plus_basis", io::to_json<R>(s.plus_split.image_basis)},
               {"minus_basis", io::to_json<R>(s.minus_split.image_basis)}};
  std::string text = "k = " + std::to_string(s.k) + ", unipotent rank " +
                     std::to_string(s.plus.rank()) + ", nilpotent rank " +
                     std::to_string(s.minus.rank()) + "\n";
  return {body, text, 0};
}

template <class R>
Output cmd_invariants(const Options& opt) {
  SeifertForm<R> f;
  std::string name;
  if (!opt.knot.empty()) {
    const KnotRecord& k = find_knot(opt.knot);
    name = k.name;
    f = form_from_knot<R>(k);
  } else {
    const json in = read_input(opt);
    f = io::form_from_json<R>(in.contains("form") ? in["form"] : in, default_eta(opt));
  }
  const auto start = std::chrono::steady_clock::now();
  const auto rep = invariant_report(f);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  json body = io::to_json<R>(rep);
  if (!name.empty()) body["knot"] = name;
  std::ostringstream os;
  if (!name.empty()) os << "knot: " << name << "\n";
  os << report_text(rep) << "elapsed_ms: " << ms << "\n";
  return {body, os.str(), 0};
}

template <class R>
Output cmd_localize(const Options& opt) {
  const auto f = io::form_from_json<R>(read_input(opt), default_eta(opt));
  const auto lf = localize_form(f);
  const bool identity = hermitian_defect_identity(f);
  ensure(identity, "localize: hermitian defect identity fails");
  json body = io::to_json<R>(lf);
  body["hermitian_defect_identity"] = identity;
  body["defect_determinant"] = io::to_json<R>(laurent_det<R>(hermitian_defect_direct(f)));
  return {body, "", 0};
}

Output cmd_roundtrip(const Options& opt) {
  check(opt.ring == "z", ErrorKind::ParseError, "roundtrip runs over z only");
  RoundtripConfig cfg;
  cfg.seed = opt.seed;
  cfg.count = opt.count;
  cfg.max_rank = opt.max_rank;
  const auto cases = run_roundtrip(cfg);
  int passed = 0, padded = 0, full = 0, cert_held = 0;
  json items = json::array();
  std::ostringstream os;
  for (const auto& c : cases) {
    passed += c.ok();
    padded += c.pad != "none";
    full += c.full_path;
    cert_held += c.full_path && c.rank_cert.holds;
    json item = {{"index", c.index},
                 {"eta", c.eta},
                 {"base_rank", c.base_rank},
                 {"input_rank", c.input_rank},
                 {"pad", c.pad},
                 {"full_path", c.full_path},
                 {"k", c.k},
                 {"output_rank", c.output_rank},
                 {"nonsingular", c.nonsingular},
                 {"alexander_ok", c.alexander_ok},
                 {"signature_ok", c.signature_ok},
                 {"determinant_ok", c.determinant_ok},
                 {"rank_certificate", c.rank_cert.skipped ? json("skipped") : json(c.rank_cert.holds)},
                 {"ok", c.ok()}};
    if (!c.error.empty()) item["error"] = c.error;
    items.push_back(item);
    os << "#" << c.index << " eta " << (c.eta > 0 ? "+1" : "-1") << " rank " << c.input_rank
       << " -> " << c.output_rank << " pad " << c.pad << (c.full_path ? " full" : " shortcut")
       << (c.ok() ? " ok" : " FAIL") << (c.error.empty() ? "" : " (" + c.error + ")") << "\n";
  }
  os << passed << "/" << cases.size() << " invariant matches; rank certificate " << cert_held
     << "/" << full << " full-path runs\n";
  json body = {{"seed", std::to_string(opt.seed)},
               {"count", opt.count},
               {"max_rank", opt.max_rank},
               {"passed", passed},
               {"padded", padded},
               {"full_path", full},
               {"rank_certificate_held", cert_held},
               {"cases", items}};
  return {body, os.str(), passed == static_cast<int>(cases.size()) ? 0 : 1};
}

Output cmd_selftest(const Options&) {
  using Z = Integer;
  struct Suite {
    const char* name;
    std::function<bool()> run;
  };
  gen::Rng rng(0x5EED);
  const std::vector<Suite> suites = {
      {"knot table",
       [] {
         for (const auto& k : knot_table()) {
           const auto f = form_from_knot<Z>(k);
           if (alexander(f).augment() != 1) return false;
         }
         const auto t = form_from_knot<Z>(find_knot("trefoil"));
         const auto e8 = form_from_knot<Z>(find_knot("figure-eight"));
         return alexander(t).to_string() == "z^2 - z + 1" && signature(t) == -2 &&
                determinant_invariant(t) == 3 && alexander(e8).to_string() == "-z^2 + 3*z - 1" &&
                signature(e8) == 0 && determinant_invariant(e8) == 5;
       }},
      {"seifertize",
       [] {
         LaurentMatrix<Z> d(1, 1);
         d(0, 0) = LaurentPoly<Z>(Z(2)) - LaurentPoly<Z>::z(1);
         const auto m = seifertize(make_presentation<Z>(d));
         return m.rank() == 1 && m.e(0, 0) == -1;
       }},
      {"near projections",
       [&rng] {
         for (int i = 0; i < 100; ++i) {
           const auto n = gen::uniform(rng, 0, 3);
           const SeifertModule<Z> mm(gen::random_matrix(rng, n, n, -2, 2));
           const bool np = is_near_projection(mm).has_value();
           if (np != laurent_det<Z>(covering_matrix<Z>(mm)).is_unit()) return false;
           if (np) split_near_projection(mm);
         }
         return true;
       }},
      {"inverse certificates",
       [&rng] {
         for (int i = 0; i < 30; ++i) {
           const auto f = gen::random_nonsingular_form(rng, 2, 1);
           const auto u = gen::random_unimodular(rng, 2);
           const SeifertModule<Z> tgt(mul<Z>(mul<Z>(u.u, f.e()), u.inv));
           const BlanchfieldMorphism<Z> g{f.module, tgt, u.u, gen::uniform(rng, 0, 2)};
           const auto inv = invert(g);
           if (!inv) return false;
           if (!morphism_equal(compose(inv->morphism, g), identity_morphism(f.module)) ||
               !morphism_equal(compose(g, inv->morphism), identity_morphism(tgt)))
             return false;
         }
         return true;
       }},
      {"duality",
       [&rng] {
         for (int i = 0; i < 30; ++i) {
           const auto f = gen::random_nonsingular_form(rng, 2 * gen::uniform(rng, 0, 2),
                                                       i % 2 ? 1 : -1);
           if (!is_symmetric(cover_form(f))) return false;
         }
         return true;
       }},
      {"roundtrip",
       [] {
         RoundtripConfig cfg;
         cfg.seed = 7;
         cfg.count = 20;
         for (const auto& c : run_roundtrip(cfg))
           if (!c.ok()) return false;
         return true;
       }},
      {"localize",
       [] { return hermitian_defect_identity(form_from_knot<Z>(find_knot("trefoil"))); }},
  };
  json results = json::object();
  std::ostringstream os;
  bool all = true;
  for (const auto& s : suites) {
    bool ok = false;
    try {
      ok = s.run();
    } catch (const Error&) {
      ok = false;
    }
    all = all && ok;
    results[s.name] = ok;
    os << (ok ? "PASS " : "FAIL ") << s.name << "\n";
  }
  return {{{"passed", all}, {"suites", results}}, os.str(), all ? 0 : 1};
}

template <class R>
Output dispatch(const Options& opt) {
  const std::string& c = opt.command;
  if (c == "cover") return cmd_cover<R>(opt);
  if (c == "seifertize") return cmd_seifertize<R>(opt);
  if (c == "uncover") return cmd_uncover<R>(opt);
  if (c == "decompose") return cmd_decompose<R>(opt);
  if (c == "invariants") return cmd_invariants<R>(opt);
  if (c == "localize") return cmd_localize<R>(opt);
  fail(ErrorKind::ParseError, "unknown command '" + c + "'");
}

}  // namespace

Output run(const Options& opt) {
  default_eta(opt);
  set_degree_cap(opt.degree_cap);
  if (opt.command == "roundtrip") return cmd_roundtrip(opt);
  if (opt.command == "selftest") return cmd_selftest(opt);
  const BaseRing ring = BaseRing::parse(opt.ring);
  switch (ring.tag) {
    case BaseRing::Tag::Integers:
      return dispatch<Integer>(opt);
    case BaseRing::Tag::Rationals:
      return dispatch<Rational>(opt);
    case BaseRing::Tag::PrimeField:
      ModP::set_modulus(ring.p);
      return dispatch<ModP>(opt);
  }
  fail(ErrorKind::ParseError, "unsupported ring");
}

}  // namespace knotalg::cli
