#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mulab/constructors.hpp"
#include "mulab/homology.hpp"
#include "mulab/io.hpp"
#include "mulab/isomorphism.hpp"
#include "mulab/mu.hpp"
#include "mulab/pi1.hpp"
#include "mulab/poset.hpp"
#include "mulab/recognizers.hpp"
#include "mulab/verify.hpp"

using nlohmann::json;
using namespace mulab;

namespace {

struct GlobalOpts {
  std::string field = "q";
  std::uint64_t seed = 7;
  std::int64_t samples = 8;
  std::string format = "json";
  int budget_subsets = 22;
  std::int64_t budget_tietze = 10000;
  int serre_r = 2;
};

VerifyOptions make_verify_options(const GlobalOpts& g) {
  VerifyOptions v;
  v.field = FieldSpec::parse(g.field);
  v.seed = g.seed;
  v.samples = g.samples;
  v.serre_r = g.serre_r;
  v.mu.subset_budget = g.budget_subsets;
  v.tietze_budget = g.budget_tietze;
  return v;
}

json betti_json(const BettiVector& b) {
  json j;
  j["field"] = b.field.str();
  j["top_dim"] = b.top_dim;
  json red = json::array(), unred = json::array();
  for (int i = -1; i <= b.top_dim; ++i) red.push_back(b.reduced_at(i));
  for (int i = 0; i <= b.top_dim; ++i) unred.push_back(b.unreduced_at(i));
  j["reduced_from_dim_minus1"] = red;
  j["unreduced"] = unred;
  if (!b.rational_path.empty()) j["rational_path"] = b.rational_path;
  return j;
}

json mu_to_json(const MuVector& m) {
  json j;
  j["field"] = m.field.str();
  json a = json::array();
  for (const auto& q : m.mu) a.push_back(rational_str(q));
  j["mu"] = a;
  if (m.prov.method == MuMethod::sampled) {
    j["samples"] = m.prov.samples;
    j["seed"] = m.prov.seed;
    json e = json::array();
    for (double s : m.prov.stderrs) e.push_back(s);
    j["stderrs"] = e;
  }
  return j;
}

Ordering parse_ordering(const std::string& csv, int n) {
  Ordering s;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) s.perm.push_back(std::stoi(tok));
  s.validate(n);
  return s;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_inspect(const std::string& path, const GlobalOpts& g) {
  FieldSpec k = FieldSpec::parse(g.field);
  json out;
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
    PosetPair p = read_poset_pair_file(path);
    out["kind"] = "poset-pair";
    out["faces"] = p.delta.size();
    out["vertices"] = p.delta.vertex_count();
    out["dim"] = p.dim();
    FHVectors fh = poset_f_h(p);
    out["f"] = fh.f;
    out["h"] = fh.h;
    out["betti"] = betti_json(poset_betti(p, k));
    emit(out);
    return 0;
  }
  RelativePair p = read_pair_file(path);
  out["kind"] = p.gamma_void() ? "complex" : "pair";
  out["vertices"] = p.vertex_count();
  out["dim"] = p.dim();
  FHVectors fh = f_h_vectors(p);
  out["f"] = fh.f;
  out["h"] = fh.h;
  if (fh.h.size() >= 3) out["g2"] = fh.g2();
  out["betti"] = betti_json(reduced_betti(p, k));
  out["pure"] = is_pure(p).holds;
  if (p.gamma_void()) {
    const SimplicialComplex& x = p.delta();
    out["connected_components"] = connected_components(x).size();
    out["normal_pseudomanifold"] = is_normal_pseudomanifold(x).holds;
  }
  emit(out);
  return 0;
}

bool is_poset_path(const std::string& path) {
  return path.size() > 5 && path.substr(path.size() - 5) == ".json";
}

int run_mu(const std::string& path, const std::string& method, const std::string& ordering_csv,
           const GlobalOpts& g) {
  FieldSpec k = FieldSpec::parse(g.field);
  MuOptions opt;
  opt.subset_budget = g.budget_subsets;
  if (is_poset_path(path)) {
    PosetPair p = read_poset_pair_file(path);
    MuVector m;
    if (method == "exact")
      m = poset_mu_exact(p, k, opt);
    else if (method == "enumerated")
      m = poset_mu_enumerated(p, k, opt);
    else if (method == "ordering") {
      Ordering s = ordering_csv.empty() ? Ordering::identity(p.delta.vertex_count())
                                        : parse_ordering(ordering_csv, p.delta.vertex_count());
      m = poset_mu_ordering(p, s, k, opt);
    } else {
      throw InputError("mu method '" + method + "' is not available for posets");
    }
    json out = mu_to_json(m);
    out["method"] = method;
    if (p.dim() >= 0) {
      BettiVector b = poset_betti(p, k);
      json d = json::array();
      Rational acc(0);
      for (std::size_t i = 0; i < m.mu.size(); ++i) {
        acc = m.mu[i] - Rational(b.unreduced_at(static_cast<int>(i))) - acc;
        d.push_back(rational_str(acc));
      }
      out["morse_defects"] = d;
    }
    emit(out);
    return 0;
  }
  RelativePair p = read_pair_file(path);
  MuVector m;
  if (method == "exact")
    m = mu_exact(p, k, opt);
  else if (method == "enumerated")
    m = mu_enumerated(p, k, opt);
  else if (method == "sampled")
    m = mu_sampled(p, k, g.samples, g.seed, opt);
  else if (method == "ordering") {
    Ordering s = ordering_csv.empty() ? Ordering::identity(p.vertex_count())
                                      : parse_ordering(ordering_csv, p.vertex_count());
    m = mu_ordering(p, s, k, opt);
  } else {
    throw InputError("unknown mu method '" + method + "'");
  }
  json out = mu_to_json(m);
  out["method"] = method;
  if (p.dim() >= 0) {
    json d = json::array();
    for (const auto& q : morse_defect(p, m, k, opt)) d.push_back(rational_str(q));
    out["morse_defects"] = d;
  }
  emit(out);
  return 0;
}

int run_pi1(const std::string& path, const GlobalOpts& g) {
  SimplicialComplex x = is_poset_path(path)
                            ? barycentric_subdivision(read_poset_pair_file(path).delta)
                            : read_complex_file(path);
  GroupPresentation pres = edge_path_presentation(x);
  SimplifyResult simp = tietze_simplify(pres, g.budget_tietze);
  MBracket mb = m_bracket(x, {2, 3, 5}, g.budget_tietze);
  json out;
  out["generators"] = pres.generators();
  out["relators"] = pres.relators.size();
  out["generators_simplified"] = simp.pres.generators();
  out["relators_simplified"] = simp.pres.relators.size();
  out["moves"] = simp.moves;
  out["budget_exhausted"] = simp.exhausted;
  out["m_lb"] = mb.lower;
  out["m_ub"] = mb.upper;
  out["exact"] = mb.exact;
  out["h1_by_field"] = mb.h1_by_field;
  emit(out);
  return 0;
}

int run_gen(const std::string& kind, const std::string& out_path, const std::string& cert_path,
            int dim, int n, int stackings, int handles, int max_dim, int count,
            const GlobalOpts& g) {
  auto write_cert = [&](const Certificate& c) {
    if (cert_path.empty()) return;
    std::ofstream f(cert_path);
    if (!f) throw ResourceError("cannot write '" + cert_path + "'");
    f << certificate_json(c).dump(2) << "\n";
  };
  if (kind == "parallel-edges" || kind == "random-poset") {
    PosetPair p = kind == "parallel-edges"
                      ? PosetPair::whole(parallel_edges(count))
                      : PosetPair::whole(random_poset(n, max_dim, g.seed));
    std::ofstream f(out_path);
    if (!f) throw ResourceError("cannot write '" + out_path + "'");
    write_poset_pair_json(f, p);
    return 0;
  }
  if (kind == "random-pair") {
    RelativePair p = random_pair(n, max_dim, g.seed);
    write_pair_file(out_path, p);
    return 0;
  }
  if (kind == "random") {
    write_complex_file(out_path, random_complex(n, max_dim, g.seed));
    return 0;
  }
  CertifiedComplex c;
  if (kind == "simplex-boundary")
    c = simplex_boundary(dim);
  else if (kind == "stacked")
    c = stacked_manifold(dim, stackings, handles, g.seed);
  else if (kind == "cyclic")
    c = cyclic_boundary(n);
  else if (kind == "csaszar")
    c = csaszar_torus();
  else if (kind == "rp2-6")
    c = projective_plane_6();
  else
    throw InputError("unknown generator kind '" + kind + "'");
  write_complex_file(out_path, c.complex);
  write_cert(c.cert);
  return 0;
}

int run_verify(const std::string& path, const std::string& theorem, const std::string& cert_path,
               const GlobalOpts& g) {
  VerifyOptions opt = make_verify_options(g);
  if (!cert_path.empty()) {
    std::ifstream f(cert_path);
    if (!f) throw ResourceError("cannot read '" + cert_path + "'");
    json cj = json::parse(f);
    opt.cert = certificate_from_json(cj);
  }
  VerificationReport rep;
  if (theorem == "poset-sd") {
    rep = verify_poset_sd(path, read_poset_pair_file(path), opt);
  } else if (is_poset_path(path)) {
    PosetPair p = read_poset_pair_file(path);
    if (theorem == "h2")
      rep = verify_h2(path, p, opt);
    else if (theorem == "hi")
      rep = verify_hi(path, p, opt);
    else
      throw InputError("theorem '" + theorem + "' does not take a poset input");
  } else {
    RelativePair p = read_pair_file(path);
    if (theorem == "g2")
      rep = verify_g2(path, p.delta(), opt);
    else if (theorem == "h2")
      rep = verify_h2(path, p.delta(), opt);
    else if (theorem == "hi")
      rep = verify_hi(path, p, opt);
    else if (theorem == "morse")
      rep = verify_morse(path, p, opt);
    else
      throw InputError("unknown theorem '" + theorem + "'");
  }
  if (g.format == "csv")
    std::cout << reports_csv({rep});
  else
    emit(rep.to_json());
  return rep.outcome == "violated" ? 2 : 0;
}

int run_corpus(const std::string& config_path, const std::string& json_out,
               const std::string& csv_out, const GlobalOpts& g, bool had_field,
               bool had_seed, bool had_samples) {
  std::ifstream f(config_path);
  if (!f) throw ResourceError("cannot read '" + config_path + "'");
  json config = json::parse(f);
  // command-line values override the config file only when given explicitly
  if (had_field || !config.contains("field")) config["field"] = g.field;
  if (had_seed || !config.contains("seed")) config["seed"] = g.seed;
  if (had_samples || !config.contains("samples")) config["samples"] = g.samples;
  CorpusResult res = corpus_run(config);
  if (!json_out.empty()) {
    std::ofstream jf(json_out);
    if (!jf) throw ResourceError("cannot write '" + json_out + "'");
    jf << res.json.dump(2) << "\n";
  }
  if (!csv_out.empty()) {
    std::ofstream cf(csv_out);
    if (!cf) throw ResourceError("cannot write '" + csv_out + "'");
    cf << res.csv;
  }
  if (g.format == "csv")
    std::cout << res.csv;
  else
    emit(res.json);
  return res.any_violated ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relative simplicial pairs: h-vectors, mu-numbers, verification"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOpts g;
  auto* field_opt =
      app.add_option("--field", g.field, "coefficient field: q or p:<prime>")
          ->capture_default_str();
  auto* seed_opt = app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  auto* samples_opt =
      app.add_option("--samples", g.samples, "sampled orderings")->capture_default_str();
  app.add_option("--format", g.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--budget-subsets", g.budget_subsets, "max vertices for 2^n subset sweeps")
      ->capture_default_str();
  app.add_option("--budget-tietze", g.budget_tietze, "presentation simplification move budget")
      ->capture_default_str();
  app.add_option("--serre-r", g.serre_r, "r for the depth-style bounds")->capture_default_str();

  std::string path, method = "exact", ordering_csv, theorem = "morse", cert_path;
  std::string kind, out_path, json_out, csv_out;
  int dim = 3, n = 8, stackings = 3, handles = 0, max_dim = 3, count = 3;

  auto* inspect = app.add_subcommand("inspect", "f/h-vectors, Betti numbers, recognizers");
  inspect->add_option("file", path)->required();

  auto* mu = app.add_subcommand("mu", "mu-numbers of a pair");
  mu->add_option("file", path)->required();
  mu->add_option("--method", method, "exact | enumerated | sampled | ordering")
      ->check(CLI::IsMember({"exact", "enumerated", "sampled", "ordering"}))
      ->capture_default_str();
  mu->add_option("--ordering", ordering_csv, "comma-separated vertex ordering");

  auto* pi1 = app.add_subcommand("pi1", "fundamental-group generator bracket");
  pi1->add_option("file", path)->required();

  auto* gen = app.add_subcommand("gen", "write a generated complex, pair, or poset");
  gen->add_option("kind", kind,
                  "simplex-boundary | stacked | cyclic | csaszar | rp2-6 | random | "
                  "random-pair | parallel-edges | random-poset")
      ->required();
  gen->add_option("-o,--out", out_path)->required();
  gen->add_option("--cert", cert_path, "certificate sidecar path");
  gen->add_option("--dim", dim)->capture_default_str();
  gen->add_option("-n,--n", n)->capture_default_str();
  gen->add_option("--stackings", stackings)->capture_default_str();
  gen->add_option("--handles", handles)->capture_default_str();
  gen->add_option("--max-dim", max_dim)->capture_default_str();
  gen->add_option("--count", count)->capture_default_str();

  auto* verify = app.add_subcommand("verify", "check one theorem on one subject");
  verify->add_option("file", path)->required();
  verify->add_option("--theorem", theorem, "g2 | h2 | hi | morse | poset-sd")
      ->check(CLI::IsMember({"g2", "h2", "hi", "morse", "poset-sd"}))
      ->capture_default_str();
  verify->add_option("--cert", cert_path, "certificate sidecar to trust");

  auto* corpus = app.add_subcommand("corpus", "run a verification corpus from a config");
  corpus->add_option("config", path)->required();
  corpus->add_option("--json", json_out, "write the full report here");
  corpus->add_option("--csv", csv_out, "write the summary table here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (inspect->parsed()) return run_inspect(path, g);
    if (mu->parsed()) return run_mu(path, method, ordering_csv, g);
    if (pi1->parsed()) return run_pi1(path, g);
    if (gen->parsed())
      return run_gen(kind, out_path, cert_path, dim, n, stackings, handles, max_dim, count, g);
    if (verify->parsed()) return run_verify(path, theorem, cert_path, g);
    if (corpus->parsed())
      return run_corpus(path, json_out, csv_out, g, field_opt->count() > 0,
                        seed_opt->count() > 0, samples_opt->count() > 0);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
