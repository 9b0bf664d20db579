#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ncurve/construct.hpp"
#include "ncurve/error.hpp"
#include "ncurve/io.hpp"
#include "ncurve/strata.hpp"
#include "ncurve/verify.hpp"

using namespace ncurve;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kPrecondition = 3, kInternal = 4 };

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
      return kParse;
    case ErrorCode::NonFreeProfile:
    case ErrorCode::LemmaViolation:
      return kInternal;
    default:
      return kPrecondition;
  }
}

struct Global {
  std::string field = "fp";
  std::uint64_t modulus = kDefaultModulus;
  std::uint64_t seed = 0;
  std::string emit = "text";
  std::string out;

  bool records() const { return emit == "records"; }
  Field make_field() const { return field == "q" ? Field::rationals() : Field::prime(modulus); }
};

// stdout, or the --out file
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorCode::HypothesisViolated, "cannot write " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }
  void record(const std::string& kind, const ojson& body) {
    ojson r{{"schema_version", kSchemaVersion}, {"record", kind}};
    for (auto& [k, v] : body.items()) r[k] = v;
    os() << r.dump() << '\n';
  }

 private:
  std::ofstream file_;
};

std::string fmt(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string field_label(const Field& F) {
  return F.is_prime_field() ? "F_" + std::to_string(F.modulus()) : std::string("Q");
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string relation_text(const Relation& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.entries.size(); ++i) s += (i ? ", " : "") + poly_to_string(a.entries[i]);
  return s + ")";
}

// O(e+b_1)^m1 + ...
std::string bundle_text(int base, const std::vector<int>& twists) {
  std::map<int, int> mult;
  for (int x : twists) ++mult[base + x];
  std::string s;
  for (auto [deg, m] : mult) {
    if (!s.empty()) s += " + ";
    s += "O(" + std::to_string(deg) + ")";
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s;
}

void print_plane_matrix(std::ostream& os, const std::vector<std::vector<std::string>>& pm) {
  for (std::size_t i = 0; i < pm.size(); ++i) {
    os << "  a" << i + 1 << ':';
    for (const auto& x : pm[i]) os << ' ' << std::setw(9) << x;
    os << '\n';
  }
}

// ---- analyze ----

int cmd_analyze(const Global& g, const std::string& path) {
  const CurveMap f = read_curve_file(path);
  Sink sink(g.out);
  std::ostream& os = sink.os();
  const bool bpf = is_basepoint_free(f), nondeg = is_nondegenerate(f), unram = is_unramified(f);
  ojson rec{{"file", path},
            {"n", f.n()},
            {"e", f.e()},
            {"field", field_to_json(f.field())},
            {"basepoint_free", bpf},
            {"nondegenerate", nondeg},
            {"unramified", unram}};
  if (!g.records()) {
    os << "curve: n=" << f.n() << " e=" << f.e() << " over " << field_label(f.field()) << '\n'
       << "basepoint-free: " << yes(bpf) << '\n'
       << "nondegenerate:  " << yes(nondeg) << '\n'
       << "unramified:     " << yes(unram) << '\n';
  }
  std::string why;
  if (!bpf) why = "components share a common factor";
  else if (!nondeg) why = "image lies in a hyperplane";
  if (!why.empty()) {
    rec["error"] = why;
    if (g.records()) sink.record("analysis", rec);
    throw Error(ErrorCode::DegenerateInput, why);
  }

  const KernelProfile normal = normal_profile(f);
  const SplittingType tangent = tangent_splitting(f);
  const std::vector<Relation> gens = minimal_generators(f);
  for (const auto& a : gens) dual_relation_check(f, a);
  WitnessReport lowest;
  describe_relations(relation_basis(f, normal.splitting.twists.front()), lowest);

  rec["normal_splitting"] = splitting_to_json(normal.splitting);
  rec["tangent_splitting"] = splitting_to_json(tangent);
  rec["relation_dims"] = normal.dims;
  ojson gj = ojson::array();
  for (const auto& a : gens) gj.push_back(relation_to_json(a));
  rec["minimal_generators"] = gj;
  rec["lowest_degree"] = lowest.relation_degree;
  rec["lowest_count"] = lowest.relation_count;
  rec["conic_classes"] = lowest.conic_classes;
  rec["plane_matrix"] = lowest.plane_matrix;
  rec["tangency_pairs"] = lowest.tangency_pairs;
  rec["longest_chain"] = lowest.longest_chain;
  if (g.records()) {
    sink.record("analysis", rec);
    return kOk;
  }

  const int e = f.e();
  os << "normal splitting:  " << fmt(normal.splitting.twists) << "   N_f = " << bundle_text(e, normal.splitting.twists)
     << (unram ? "" : "   (kernel of the Jacobian; f is ramified)") << '\n';
  os << "tangent splitting: " << fmt(tangent.twists) << "   f*T = " << bundle_text(e, tangent.twists) << '\n';
  os << "r(b):";
  for (std::size_t b = 0; b < normal.dims.size(); ++b) os << ' ' << b << ':' << normal.dims[b];
  os << '\n';
  os << "minimal generators:\n";
  for (const auto& a : gens) os << "  deg " << a.degree << ": " << relation_text(a) << '\n';
  os << "relations of degree " << lowest.relation_degree << ": " << lowest.relation_count << '\n';
  for (std::size_t i = 0; i < lowest.conic_classes.size(); ++i)
    os << "  a" << i + 1 << ": " << lowest.conic_classes[i] << '\n';
  if (!lowest.plane_matrix.empty()) {
    os << "plane intersections:\n";
    print_plane_matrix(os, lowest.plane_matrix);
  }
  os << "tangency pairs: " << lowest.tangency_pairs << ", longest chain " << lowest.longest_chain << '\n';
  return kOk;
}

// ---- construct ----

struct ConstructArgs {
  std::string builder;
  int n = 0, e = 0, d = 2, k = 0, j = 1, d1 = 2, d2 = 3;
  std::vector<int> b, deltas, exponents;
  std::string variant = "chained";
  bool allow_ramified = false;
};

void need(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::HypothesisViolated, what);
}

Witness build(const Global& g, const ConstructArgs& a) {
  const Field F = g.make_field();
  if (a.builder == "sacchiero") {
    need(!a.b.empty(), "sacchiero needs --b");
    return sacchiero(F, a.n, a.e, a.b, g.seed);
  }
  if (a.builder == "delta") {
    need(!a.deltas.empty(), "delta needs --deltas");
    return from_delta_sequence(F, a.n, a.e, a.deltas, g.seed);
  }
  if (a.builder == "monomial") {
    need(a.exponents.size() >= 3, "monomial needs --exponents e,...,0");
    Witness w{monomial_curve(F, a.exponents), monomial_splitting(a.exponents, a.allow_ramified), {}, {}};
    w.provenance = {{"builder", "monomial"}, {"params", {{"exponents", a.exponents}}}};
    return w;
  }
  if (a.builder == "conics") return conics_witness(F, a.n, a.e, a.k, a.j, g.seed);
  if (a.builder == "delta-ddk") return from_delta_sequence(F, a.n, a.e, delta_seq_ddk(a.n, a.e, a.d, a.k, a.j), g.seed);
  if (a.builder == "mixed") {
    const MixedVariant v = a.variant == "separated" ? MixedVariant::SeparatedBlock : MixedVariant::ChainedBlock;
    return witness_mixed(F, a.n, a.e, a.d1, a.d2, v, g.seed);
  }
  throw Error(ErrorCode::HypothesisViolated, "unknown builder " + a.builder);
}

int cmd_construct(const Global& g, const ConstructArgs& a) {
  const Witness w = build(g, a);
  const SplittingType got = normal_splitting(w.curve);
  bool rel_ok = true;
  for (const auto& r : w.relations) rel_ok = rel_ok && verify_relation(w.curve, r);
  const bool ok = got == w.declared && rel_ok;

  ojson doc = witness_to_json(w);
  doc["provenance"]["field"] = field_to_json(w.curve.field());
  const std::string summary = a.builder + ": n=" + std::to_string(w.curve.n()) + " e=" + std::to_string(w.curve.e()) +
                              " declared " + fmt(w.declared.twists) + " computed " + fmt(got.twists);
  if (!ok) {
    std::cerr << "self-verification failed: " << summary << (rel_ok ? "" : ", declared relation does not hold") << '\n';
    return kVerifyFailed;
  }
  if (g.out.empty()) {
    std::cout << doc.dump(2) << '\n';
    return kOk;
  }
  {
    std::ofstream file(g.out);
    if (!file) throw Error(ErrorCode::HypothesisViolated, "cannot write " + g.out);
    file << doc.dump(2) << '\n';
  }
  if (g.records()) {
    Sink s("");
    s.record("construct", {{"builder", a.builder},
                           {"out", g.out},
                           {"n", w.curve.n()},
                           {"e", w.curve.e()},
                           {"splitting", splitting_to_json(got)},
                           {"unramified", is_unramified(w.curve)}});
  } else {
    std::cout << summary << ", written to " << g.out << '\n';
  }
  return kOk;
}

// ---- expected ----

struct ExpectedArgs {
  int n = 0, e = 0, d = 0, k = -1;
  std::vector<int> b;
};

int cmd_expected(const Global& g, const ExpectedArgs& a) {
  SplittingType b;
  std::optional<long long> closed;
  if (!a.b.empty()) {
    need(static_cast<int>(a.b.size()) == a.n - 1, "--b needs n-1 entries");
    int sum = 0;
    for (int x : a.b) sum += x;
    need(sum == 2 * a.e - 2, "--b must sum to 2e-2");
    b = SplittingType::sorted(a.e, a.b);
  } else {
    need(a.k >= 0 && a.d > 0, "give --b or both --d and --k");
    b = b_spec_dk(a.n, a.e, a.d, a.k);
    closed = expected_codim_dk(a.n, a.e, a.d, a.k);
  }
  const long long mor = dim_mor(a.n, a.e);
  const long long codim = h1_end(b);
  ojson rec{{"n", a.n}, {"e", a.e}, {"splitting", splitting_to_json(b)}, {"dim_mor", mor},
            {"expected_codim", codim}, {"expected_dim", mor - codim}};
  if (closed) rec["closed_form_codim"] = *closed;

  const bool two_conics = !a.b.empty() ? false : (a.d == 2 && a.k == 2);
  std::optional<TwoConicDims> tc;
  if (two_conics && a.n >= 5 && a.e >= 2 * a.n - 3) tc = dims_two_conics(a.n, a.e);
  if (tc) rec["two_conics"] = {{"dim_G", tc->dim_g}, {"dim_PT", tc->dim_pt}};
  std::optional<P4ConicDims> p4;
  if (two_conics && a.n == 4 && a.e >= 5) p4 = p4_conics_dim(a.e);
  if (p4)
    rec["p4_conics"] = {{"dim", p4->dim}, {"expected", p4->expected}, {"dim_projective", p4->dim_projective},
                        {"expected_projective", p4->expected_projective}};
  // the b(2^(n-2)) inequality for negative expected dimension
  const bool neg_case = a.b.empty() && a.d == 2 && a.k == a.n - 2;
  long long lhs = 0, rhs = 0;
  if (neg_case) {
    lhs = static_cast<long long>(a.n - 2) * (2 * a.e - 2 * a.n - 1);
    rhs = static_cast<long long>(a.e + 1) * (a.n + 1);
    rec["negative_dimension_test"] = {{"lhs", lhs}, {"rhs", rhs}, {"negative", lhs >= rhs}};
  }

  Sink sink(g.out);
  if (g.records()) {
    sink.record("expected", rec);
    return kOk;
  }
  std::ostream& os = sink.os();
  os << "splitting:      " << fmt(b.twists) << '\n'
     << "dim Mor:        " << mor << '\n'
     << "expected codim: " << codim << '\n';
  if (closed) os << "closed form:    " << *closed << '\n';
  os << "expected dim:   " << mor - codim << '\n';
  if (tc) os << "dim G, dim PT:  (" << tc->dim_g << "," << tc->dim_pt << ")\n";
  if (p4)
    os << "P4 conic pairs: dim " << p4->dim << ", expected " << p4->expected << " (projective " << p4->dim_projective
       << ", " << p4->expected_projective << ")\n";
  if (neg_case)
    os << "(n-2)(2e-2n-1) = " << lhs << (lhs >= rhs ? " >= " : " < ") << rhs << " = (e+1)(n+1): expected dimension "
       << (lhs >= rhs ? "negative" : "not forced negative") << '\n';
  return kOk;
}

// ---- witness ----

struct WitnessArgs {
  int n = 0, e = 0, d = 2, k = 2, d1 = 0, d2 = 0;
  std::vector<std::string> files;
};

int cmd_witness(const Global& g, const WitnessArgs& a) {
  const Field F = g.make_field();
  std::vector<CurveMap> curves;
  std::vector<std::string> ids;
  std::vector<WitnessReport> failed;
  SplittingType b;
  auto attempt = [&](const std::string& id, const std::function<Witness()>& make) {
    try {
      curves.push_back(make().curve);
      ids.push_back(id);
    } catch (const Error& ex) {
      WitnessReport r;
      r.id = id;
      r.error = ex.what();
      failed.push_back(r);
    }
  };
  if (a.d1 > 0 && a.d2 > 0) {
    const int rest = 2 * a.e - 2 - a.d1 - a.d2;
    need(a.n >= 4, "mixed witnesses need n >= 4");
    std::vector<int> tw{a.d1, a.d2};
    for (int i = 0; i < a.n - 3; ++i) tw.push_back(rest / (a.n - 3) + (i >= a.n - 3 - rest % (a.n - 3) ? 1 : 0));
    b = SplittingType::sorted(a.e, tw);
    for (MixedVariant v : {MixedVariant::ChainedBlock, MixedVariant::SeparatedBlock})
      attempt(std::string(mixed_variant_name(v)), [&] { return witness_mixed(F, a.n, a.e, a.d1, a.d2, v, g.seed); });
  } else {
    b = b_spec_dk(a.n, a.e, a.d, a.k);
    if (a.d == 2) {
      for (int j = 1; j <= a.k; ++j)
        attempt("chain-" + std::to_string(j), [&] { return conics_witness(F, a.n, a.e, a.k, j, g.seed); });
    } else {
      for (int j = 0; j <= a.k / 2; ++j)
        attempt("pairs-" + std::to_string(j),
                [&] { return from_delta_sequence(F, a.n, a.e, delta_seq_ddk(a.n, a.e, a.d, a.k, j), g.seed); });
    }
  }
  for (const auto& path : a.files) {
    curves.push_back(read_curve_file(path));
    ids.push_back(path);
  }
  StratumReport rep = stratum_report(a.n, a.e, b, curves, ids);
  for (auto& r : failed) rep.witnesses.push_back(r);

  Sink sink(g.out);
  if (g.records()) {
    ojson head = stratum_report_to_json(rep);
    head.erase("witnesses");
    sink.record("stratum", head);
    for (const auto& w : rep.witnesses) sink.record("witness", witness_report_to_json(w));
  } else {
    std::ostream& os = sink.os();
    os << "stratum " << fmt(b.twists) << " in P^" << a.n << ", e=" << a.e << ": dim Mor " << rep.dim_mor
       << ", expected codim " << rep.expected_codim << ", expected dim " << rep.expected_dim << '\n';
    for (const auto& w : rep.witnesses) {
      os << w.id << ": ";
      if (!w.ok) {
        os << "FAILED " << w.error << '\n';
        continue;
      }
      os << "splitting " << (w.splitting ? fmt(w.splitting->twists) : "?") << (w.matches ? " (matches)" : " (differs)")
         << ", unramified " << yes(w.unramified) << ", " << w.relation_count << " relations of degree "
         << w.relation_degree << ", tangency pairs " << w.tangency_pairs << ", longest chain " << w.longest_chain
         << '\n';
      print_plane_matrix(os, w.plane_matrix);
    }
  }
  for (const auto& w : rep.witnesses)
    if (!w.ok || !w.matches) return kVerifyFailed;
  return kOk;
}

// ---- verify-paper ----

int cmd_verify(const Global& g, const std::string& scope, bool inject) {
  VerifyOptions opts;
  opts.scope = scope;
  opts.inject_fault = inject;
  opts.seed = g.seed;
  const auto rows = verify_paper(opts);
  Sink sink(g.out);
  int failed = 0;
  for (const auto& r : rows) failed += r.pass ? 0 : 1;
  if (g.records()) {
    for (const auto& r : rows)
      sink.record("check", {{"id", r.id},
                            {"scope", r.scope},
                            {"criterion", r.criterion},
                            {"expected", r.expected},
                            {"computed", r.computed},
                            {"status", r.pass ? "PASS" : "FAIL"}});
    sink.record("summary", {{"checks", rows.size()}, {"failed", failed}});
  } else {
    std::size_t w = 0;
    for (const auto& r : rows) w = std::max(w, r.id.size());
    std::ostream& os = sink.os();
    for (const auto& r : rows) {
      os << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(w)) << r.id
         << "  expected: " << r.expected << '\n'
         << std::string(6 + w, ' ') << "  computed: " << r.computed << '\n';
    }
    os << rows.size() - static_cast<std::size_t>(failed) << "/" << rows.size() << " checks passed\n";
  }
  return failed ? kVerifyFailed : kOk;
}

// ---- sample ----

int cmd_sample(const Global& g, int n, int e, int count) {
  const Field F = g.make_field();
  need(F.is_prime_field(), "sample needs --field fp");
  need(e >= n && n >= 2, "sample needs e >= n >= 2");
  need(count >= 0, "count must be nonnegative");
  std::mt19937_64 rng(g.seed);
  std::map<std::vector<int>, int> freq;
  int accepted = 0, draws = 0, rejected_bpf = 0, rejected_unram = 0;
  const int max_draws = 20 * count + 100;
  while (accepted < count && draws < max_draws) {
    ++draws;
    const CurveMap f = random_curve(F, n, e, rng);
    if (!is_basepoint_free(f) || !is_nondegenerate(f)) {
      ++rejected_bpf;
      continue;
    }
    if (!is_unramified(f)) {
      ++rejected_unram;
      continue;
    }
    ++accepted;
    ++freq[normal_splitting(f).twists];
  }
  std::vector<std::pair<std::vector<int>, int>> rows(freq.begin(), freq.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.second > y.second; });
  int balanced = 0;
  for (const auto& [tw, c] : rows)
    if (SplittingType{e, tw}.is_balanced()) balanced += c;

  Sink sink(g.out);
  if (g.records()) {
    for (const auto& [tw, c] : rows)
      sink.record("splitting_frequency", {{"twists", tw}, {"count", c}, {"balanced", SplittingType{e, tw}.is_balanced()}});
    sink.record("sample_summary", {{"n", n},
                                   {"e", e},
                                   {"seed", g.seed},
                                   {"requested", count},
                                   {"accepted", accepted},
                                   {"draws", draws},
                                   {"rejected_degenerate", rejected_bpf},
                                   {"rejected_ramified", rejected_unram},
                                   {"balanced", balanced}});
  } else {
    std::ostream& os = sink.os();
    os << "n=" << n << " e=" << e << ": " << accepted << " unramified curves from " << draws << " draws ("
       << rejected_bpf << " degenerate, " << rejected_unram << " ramified)\n";
    for (const auto& [tw, c] : rows) os << "  " << std::left << std::setw(24) << fmt(tw) << c << '\n';
    if (accepted > 0)
      os << "balanced: " << balanced << "/" << accepted << " (" << std::fixed << std::setprecision(1)
         << 100.0 * balanced / accepted << "%)\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Splitting types of normal and restricted tangent bundles of rational curves"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--field", g.field, "coefficient field")->check(CLI::IsMember({"q", "fp"}));
  app.add_option("--modulus", g.modulus, "prime modulus for --field fp");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--emit", g.emit, "text or newline-delimited records")->check(CLI::IsMember({"text", "records"}));
  app.add_option("--out", g.out, "output path");

  std::string analyze_file;
  auto* analyze = app.add_subcommand("analyze", "splittings, generators and relation geometry of a curve file");
  analyze->add_option("file", analyze_file)->required();

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a curve with a prescribed splitting");
  construct->add_option("builder", ca.builder)
      ->required()
      ->check(CLI::IsMember({"sacchiero", "delta", "monomial", "conics", "delta-ddk", "mixed"}));
  construct->add_option("--n", ca.n);
  construct->add_option("--e", ca.e);
  construct->add_option("--d", ca.d);
  construct->add_option("--k", ca.k);
  construct->add_option("--j", ca.j);
  construct->add_option("--d1", ca.d1);
  construct->add_option("--d2", ca.d2);
  construct->add_option("--b", ca.b)->delimiter(',');
  construct->add_option("--deltas", ca.deltas)->delimiter(',');
  construct->add_option("--exponents", ca.exponents)->delimiter(',');
  construct->add_option("--variant", ca.variant)->check(CLI::IsMember({"chained", "separated"}));
  construct->add_flag("--allow-ramified", ca.allow_ramified);

  ExpectedArgs ea;
  auto* expected = app.add_subcommand("expected", "dimension bookkeeping for a splitting type");
  expected->add_option("--n", ea.n)->required();
  expected->add_option("--e", ea.e)->required();
  expected->add_option("--d", ea.d);
  expected->add_option("--k", ea.k);
  expected->add_option("--b", ea.b)->delimiter(',');

  WitnessArgs wa;
  auto* witness = app.add_subcommand("witness", "build and compare witnesses for a stratum");
  witness->add_option("--n", wa.n)->required();
  witness->add_option("--e", wa.e)->required();
  witness->add_option("--d", wa.d);
  witness->add_option("--k", wa.k);
  witness->add_option("--d1", wa.d1);
  witness->add_option("--d2", wa.d2);
  witness->add_option("files", wa.files, "extra curve files");

  std::string scope = "all";
  bool inject = false;
  auto* verify = app.add_subcommand("verify-paper", "run the verification suite");
  std::vector<std::string> scopes{"all"};
  for (const auto& s : verify_scopes()) scopes.push_back(s);
  verify->add_option("--scope", scope)->check(CLI::IsMember(scopes));
  verify->add_flag("--inject-fault", inject, "corrupt every constructed curve (negative control)");

  int sn = 0, se = 0, scount = 200;
  auto* sample = app.add_subcommand("sample", "splitting frequencies of random curves");
  sample->add_option("--n", sn)->required();
  sample->add_option("--e", se)->required();
  sample->add_option("--count", scount);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*analyze) return cmd_analyze(g, analyze_file);
    if (*construct) return cmd_construct(g, ca);
    if (*expected) return cmd_expected(g, ea);
    if (*witness) return cmd_witness(g, wa);
    if (*verify) return cmd_verify(g, scope, inject);
    if (*sample) return cmd_sample(g, sn, se, scount);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
