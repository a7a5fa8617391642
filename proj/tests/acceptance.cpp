// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mulab/constructors.hpp"
#include "mulab/hochster.hpp"
#include "mulab/homology.hpp"
#include "mulab/io.hpp"
#include "mulab/mu.hpp"
#include "mulab/pair.hpp"
#include "mulab/pi1.hpp"
#include "mulab/poset.hpp"
#include "mulab/recognizers.hpp"
#include "mulab/verify.hpp"

using namespace mulab;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

int failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
  std::cout << name << ": " << (pass ? "PASS" : "FAIL") << " (" << detail << ")" << std::endl;
  if (!pass) ++failures;
}

std::string secs(double s) {
  std::ostringstream o;
  o.precision(1);
  o << std::fixed << s << "s";
  return o.str();
}

// the certified corpus shared by several criteria
struct Member {
  std::string id;
  CertifiedComplex cc;
};

std::vector<Member> certified_corpus() {
  std::vector<Member> out;
  for (int d = 2; d <= 5; ++d)
    out.push_back({"simplex-boundary-" + std::to_string(d), simplex_boundary(d)});
  for (int n = 6; n <= 9; ++n) out.push_back({"cyclic-" + std::to_string(n), cyclic_boundary(n)});
  out.push_back({"csaszar", csaszar_torus()});
  out.push_back({"rp2-6", projective_plane_6()});
  for (int d : {3, 4})
    for (int s = 3; s <= 6; ++s)
      for (int h = 0; h <= 2; ++h)
        out.push_back({"stacked-" + std::to_string(d) + "-" + std::to_string(s) + "-" +
                           std::to_string(h),
                       stacked_manifold(d, s, h, 1)});
  return out;
}

Rational parse_q(const std::string& s) { return parse_rational(s); }

// --- criteria ---------------------------------------------------------------

void criterion1() {
  Stopwatch sw;
  int complexes = 0, mismatches = 0;
  for (int seed = 1; seed <= 200; ++seed) {
    int n = 4 + (seed % 4);
    int max_dim = 1 + (seed % 4);
    SimplicialComplex x = random_complex(n, max_dim, static_cast<std::uint64_t>(seed));
    RelativePair p(x);
    ++complexes;
    for (const FieldSpec& k : {F2, F3, Q}) {
      MuVector a = mu_exact(p, k);
      MuVector b = mu_enumerated(p, k);
      if (a.mu != b.mu) ++mismatches;
    }
  }
  double t = sw.seconds();
  bool pass = mismatches == 0 && complexes >= 200 && t < 300.0;
  report("C1 averaged mu equals enumerated mu on random complexes", pass,
         std::to_string(complexes) + " complexes x {F2,F3,Q}, " + std::to_string(mismatches) +
             " mismatches, " + secs(t));
}

void criterion2(const std::vector<Member>& corpus) {
  Stopwatch sw;
  int subjects = 0, bad = 0;
  VerifyOptions opt;
  opt.samples = 50;
  for (const auto& m : corpus) {
    ++subjects;
    VerificationReport r = verify_morse(m.id, RelativePair(m.cc.complex), opt);
    if (r.outcome != "verified") ++bad;
  }
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    ++subjects;
    VerificationReport r = verify_morse("random-pair", random_pair(6, 3, seed), opt);
    if (r.outcome != "verified") ++bad;
  }
  // poset members: defects from sampled vertex orderings against pair Betti
  std::vector<PosetPair> posets = {PosetPair::whole(parallel_edges(3)),
                                   PosetPair::whole(random_poset(5, 2, 1)),
                                   PosetPair::whole(random_poset(6, 2, 2))};
  for (const auto& p : posets) {
    ++subjects;
    BettiVector b = poset_betti(p, Q);
    const int n = p.delta.vertex_count();
    bool ok = true;
    for (int t = 0; t <= 50 && ok; ++t) {
      Ordering s = Ordering::identity(n);
      if (t > 0) {
        Rng rng(11, static_cast<std::uint64_t>(t));
        rng.shuffle(s.perm);
      }
      MuVector mu = poset_mu_ordering(p, s, Q);
      Rational acc(0);
      for (std::size_t i = 0; i < mu.mu.size(); ++i) {
        acc = mu.mu[i] - Rational(b.unreduced_at(static_cast<int>(i))) - acc;
        if (acc < 0) ok = false;
      }
    }
    if (!ok) ++bad;
  }
  report("C2 Morse defects stay nonnegative over sampled orderings", bad == 0,
         std::to_string(subjects) + " subjects, 50 samples each, " + std::to_string(bad) +
             " with negative defects, " + secs(sw.seconds()));
}

void criterion3() {
  Stopwatch sw;
  int checked = 0, bad = 0;
  for (int s = 3; s <= 6; ++s) {
    for (int h = 0; h <= 2; ++h) {
      CertifiedComplex c4 = stacked_manifold(4, s, h, 1);
      ++checked;
      std::int64_t g2 = f_h_vectors(RelativePair(c4.complex)).g2();
      MBracket mb = m_bracket(c4.complex);
      if (g2 != 15 * h || mb.lower != h || mb.upper != h || !mb.exact) ++bad;

      CertifiedComplex c3 = stacked_manifold(3, s, h, 1);
      ++checked;
      if (f_h_vectors(RelativePair(c3.complex)).g2() != 10 * h) ++bad;
    }
  }
  report("C3 stacked manifolds meet the g2 equality with exact handle count", bad == 0,
         std::to_string(checked) + " members, " + std::to_string(bad) + " off, " +
             secs(sw.seconds()));
}

void criterion4(const std::vector<Member>& corpus) {
  Stopwatch sw;
  int checked = 0, bad = 0, equalities = 0;
  for (const auto& m : corpus) {
    if (!m.cc.cert.m) continue;
    ++checked;
    MuVector mu = mu_exact(RelativePair(m.cc.complex), Q);
    Rational gap = (mu.mu.size() > 1 ? mu.mu[1] : Rational(0)) - mu.mu[0] + 1;
    if (gap < Rational(*m.cc.cert.m)) ++bad;
    if (m.id.rfind("stacked-4-", 0) == 0) {
      if (gap != Rational(*m.cc.cert.m)) ++bad;
      ++equalities;
    }
  }
  report("C4 mu gap bounds the generator count, exactly on high-dim stacked", bad == 0,
         std::to_string(checked) + " certified members, " + std::to_string(equalities) +
             " equality cases, " + std::to_string(bad) + " off, " + secs(sw.seconds()));
}

void criterion5(const std::vector<Member>& corpus) {
  Stopwatch sw;
  int checked = 0, bad = 0;
  auto check = [&](const SimplicialComplex& x, std::int64_t m_exact) {
    ++checked;
    FHVectors fh = f_h_vectors(RelativePair(x));
    Rational bound = Rational(binom_mpz(x.dim() + 1, 2)) * Rational(m_exact);
    if (Rational(fh.h[2]) < bound) ++bad;
  };
  for (const auto& m : corpus)
    if (m.cc.cert.m) check(m.cc.complex, *m.cc.cert.m);
  SimplicialComplex c = cone("apex", projective_plane_6().complex);
  MBracket mb = m_bracket(c);
  if (!mb.exact) {
    ++bad;
    ++checked;
  } else {
    check(c, mb.upper);
  }
  report("C5 h2 dominates the weighted generator count", bad == 0,
         std::to_string(checked) + " subjects incl. a projective-plane cone, " +
             std::to_string(bad) + " violations, " + secs(sw.seconds()));
}

void criterion6() {
  Stopwatch sw;
  int subjects = 0, bad = 0;
  auto run = [&](const std::string& id, const SimplicialComplex& x) {
    ++subjects;
    const int d = x.dim();
    VerifyOptions opt;
    opt.serre_r = d;
    VerificationReport r = verify_hi(id, RelativePair(x), opt);
    bool ok = r.outcome == "verified" && r.hypotheses_ok;
    for (int i = 1; i <= d && ok; ++i) {
      auto it = r.slacks.find("h" + std::to_string(i));
      ok = it != r.slacks.end() && parse_q(it->second) >= 0;
    }
    for (int i = 1; i <= d + 1 && ok; ++i) {
      auto it = r.slacks.find("link-sum-h" + std::to_string(i));
      ok = it != r.slacks.end() && it->second == "0";
    }
    if (ok) {
      auto it = r.slacks.find("link-partial-sums-min");
      ok = it != r.slacks.end() && parse_q(it->second) >= 0;
    }
    if (!ok) ++bad;
  };
  for (int d = 3; d <= 5; ++d)
    run("simplex-boundary-" + std::to_string(d), simplex_boundary(d).complex);
  for (int n = 6; n <= 9; ++n) run("cyclic-" + std::to_string(n), cyclic_boundary(n).complex);
  report("C6 alternating h bounds, link partial sums, and the vertex h-identity", bad == 0,
         std::to_string(subjects) + " subjects, " + std::to_string(bad) + " failing, " +
             secs(sw.seconds()));
}

void criterion7() {
  Stopwatch sw;
  int posets = 0, mu_bad = 0, betti_bad = 0;
  auto sd_rel = [](const PosetPair& p) {
    return RelativePair::with_gamma_facets(barycentric_subdivision(p.delta), sd_gamma_facets(p));
  };
  auto mu_matches = [&](const PosetPair& p, const Ordering& s) {
    RelativePair rel = sd_rel(p);
    return poset_mu_ordering(p, s, Q).mu == mu_ordering(rel, sd_ordering(p.delta, s), Q).mu;
  };
  auto betti_matches = [&](const PosetPair& p) {
    RelativePair rel = sd_rel(p);
    for (const FieldSpec& k : {F2, Q}) {
      BettiVector a = poset_betti(p, k);
      BettiVector c = reduced_betti(rel, k);
      for (int i = -1; i <= std::max(a.top_dim, c.top_dim); ++i)
        if (a.reduced_at(i) != c.reduced_at(i)) return false;
    }
    return true;
  };

  SimplicialPoset doubled = SimplicialPoset::from_faces({{"a", 1, {}},
                                                         {"b", 1, {}},
                                                         {"c", 1, {}},
                                                         {"ab", 2, {0, 1}},
                                                         {"bc", 2, {1, 2}},
                                                         {"ca", 2, {0, 2}},
                                                         {"t", 3, {3, 4, 5}},
                                                         {"t2", 3, {3, 4, 5}}});
  std::vector<PosetPair> small = {
      PosetPair::whole(parallel_edges(2)),
      PosetPair::whole(parallel_edges(3)),
      PosetPair::with_ideal(parallel_edges(3), {0, 1, 2}),
      PosetPair::whole(doubled),
      PosetPair::whole(face_poset(SimplicialComplex::build({{"a", "b", "c"}, {"b", "c", "d"}}))),
      PosetPair::whole(random_poset(4, 2, 1)),
      PosetPair::whole(random_poset(5, 2, 2)),
  };
  for (const auto& p : small) {
    ++posets;
    const int n = p.delta.vertex_count();
    Ordering s = Ordering::identity(n);
    std::sort(s.perm.begin(), s.perm.end());
    do {
      if (!mu_matches(p, s)) {
        ++mu_bad;
        break;
      }
    } while (std::next_permutation(s.perm.begin(), s.perm.end()));
    if (!betti_matches(p)) ++betti_bad;
  }
  for (std::uint64_t seed = 3; seed <= 4; ++seed) {
    PosetPair p = PosetPair::whole(random_poset(static_cast<int>(seed) + 3, 2, seed));
    ++posets;
    const int n = p.delta.vertex_count();
    for (int t = 0; t < 20; ++t) {
      Ordering s = Ordering::identity(n);
      Rng rng(17, static_cast<std::uint64_t>(t));
      rng.shuffle(s.perm);
      if (!mu_matches(p, s)) {
        ++mu_bad;
        break;
      }
    }
    if (!betti_matches(p)) ++betti_bad;
  }
  report("C7 poset mu transports to the subdivision; sd preserves Betti over {F2,Q}",
         mu_bad == 0 && betti_bad == 0,
         std::to_string(posets) + " posets, " + std::to_string(mu_bad) + " mu mismatches, " +
             std::to_string(betti_bad) + " Betti mismatches, " + secs(sw.seconds()));
}

void criterion8() {
  Stopwatch sw;
  int bad = 0;
  auto expect = [&](const SimplicialComplex& x, std::int64_t lo, std::int64_t hi) {
    MBracket mb = m_bracket(x);
    if (mb.lower != lo || mb.upper != hi || !mb.exact) ++bad;
  };
  expect(simplex_boundary(4).complex, 0, 0);
  expect(projective_plane_6().complex, 1, 1);
  expect(csaszar_torus().complex, 2, 2);

  int corank_checks = 0;
  auto coranks_preserved = [&](const SimplicialComplex& x) {
    GroupPresentation before = edge_path_presentation(x);
    SimplifyResult after = tietze_simplify(before);
    for (std::uint32_t p : {2u, 3u, 5u}) {
      ++corank_checks;
      if (abelianization_corank(before, p) != abelianization_corank(after.pres, p)) ++bad;
    }
  };
  coranks_preserved(simplex_boundary(4).complex);
  coranks_preserved(projective_plane_6().complex);
  coranks_preserved(csaszar_torus().complex);
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    SimplicialComplex x = random_complex(7, 2, seed);
    if (connected_components(x).size() != 1) continue;
    coranks_preserved(x);
  }
  report("C8 fundamental-group brackets are exact; Tietze keeps mod-p coranks", bad == 0,
         "3 pinned brackets, " + std::to_string(corank_checks) + " corank checks, " +
             std::to_string(bad) + " failures, " + secs(sw.seconds()));
}

void criterion9() {
  setenv("MULAB_THREADS", "1", 1);
  Stopwatch sw_mu;
  CertifiedComplex big = stacked_manifold(3, 7, 0, 1);
  bool shape_ok = big.complex.vertex_count() == 12 && big.complex.dim() == 3 &&
                  is_normal_pseudomanifold(big.complex).holds;
  MuVector mu = mu_exact(RelativePair(big.complex), Q);
  double t_mu = sw_mu.seconds();
  bool mu_ok = shape_ok && !mu.mu.empty() && t_mu < 60.0;

  setenv("MULAB_THREADS", "8", 1);
  Stopwatch sw_gb;
  CertifiedComplex huge = stacked_manifold(3, 13, 0, 1);
  bool huge_ok = huge.complex.vertex_count() == 18;
  GradedBettiTable gb = graded_betti(RelativePair(huge.complex), Q);
  double t_gb = sw_gb.seconds();
  bool gb_ok = huge_ok && !gb.beta.empty() && t_gb < 600.0;

  nlohmann::json config = {
      {"seed", 5},
      {"samples", 3},
      {"subjects",
       {{{"id", "sb3"}, {"kind", "simplex-boundary"}, {"dim", 3}},
        {{"id", "cy6"}, {"kind", "cyclic"}, {"n", 6}},
        {{"id", "pe"}, {"kind", "parallel-edges"}},
        {{"id", "rp"}, {"kind", "random-poset"}, {"n", 5}, {"seed", 2}},
        {{"id", "cz"}, {"kind", "csaszar"}}}}};
  std::vector<std::string> outs;
  for (const char* tc : {"1", "2", "4"}) {
    setenv("MULAB_THREADS", tc, 1);
    CorpusResult r = corpus_run(config);
    outs.push_back(r.csv + "\n---\n" + r.json.dump());
  }
  bool det_ok = outs[0] == outs[1] && outs[1] == outs[2];
  setenv("MULAB_THREADS", "1", 1);

  report("C9 performance envelopes and thread-count determinism",
         mu_ok && gb_ok && det_ok,
         "mu n=12 " + secs(t_mu) + ", graded Betti n=18 " + secs(t_gb) +
             ", corpus identical across 1/2/4 threads: " + (det_ok ? "yes" : "no"));
}

}  // namespace

int main() {
  std::vector<Member> corpus = certified_corpus();
  criterion1();
  criterion2(corpus);
  criterion3();
  criterion4(corpus);
  criterion5(corpus);
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (failures) std::cout << failures << " criterion(s) failed" << std::endl;
  return failures == 0 ? 0 : 1;
}
