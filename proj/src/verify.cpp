#include "mulab/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mulab/io.hpp"
#include "mulab/pi1.hpp"
#include "mulab/recognizers.hpp"

namespace mulab {

namespace {

Rational binom_q(int n, int k) { return Rational(binom_mpz(n, k)); }

std::string qstr(const Rational& r) { return rational_str(r); }

nlohmann::json mu_json(const MuVector& m) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& q : m.mu) a.push_back(qstr(q));
  return a;
}

nlohmann::json vec_json(const std::vector<std::int64_t>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

struct OutcomeTracker {
  bool exact_fail = false;
  bool gap = false;
  void fail() { exact_fail = true; }
  void unknown() { gap = true; }
  std::string fold(bool hypotheses_ok) const {
    if (!hypotheses_ok) return "inconclusive";
    if (exact_fail) return "violated";
    if (gap) return "inconclusive";
    return "verified";
  }
};

// records the slack, tracks min, and flags failures below zero
void push_slack(VerificationReport& rep, OutcomeTracker& tr, const std::string& name,
                const Rational& slack, std::optional<Rational>* min_slot = nullptr) {
  rep.slacks[name] = qstr(slack);
  if (slack < 0) tr.fail();
  if (min_slot) {
    if (!min_slot->has_value() || slack < **min_slot) *min_slot = slack;
  }
}

struct BracketInfo {
  std::optional<std::int64_t> lb, ub;
  nlohmann::json js = nlohmann::json::object();
};

BracketInfo bracket_m(VerificationReport& rep, const SimplicialComplex& x,
                      const VerifyOptions& opt) {
  BracketInfo out;
  try {
    MBracket mb = m_bracket(x, {2, 3, 5}, opt.tietze_budget);
    out.lb = mb.lower;
    out.ub = mb.upper;
    out.js["m_lb"] = mb.lower;
    out.js["m_ub"] = mb.upper;
    out.js["exact"] = mb.exact;
    out.js["budget_exhausted"] = mb.budget_exhausted;
    if (mb.budget_exhausted) rep.notes.push_back("generator simplification budget exhausted");
  } catch (const InputError& e) {
    rep.notes.push_back(std::string("fundamental group bracket unavailable: ") + e.what());
  }
  if (opt.cert && opt.cert->m) {
    out.js["m_certified"] = *opt.cert->m;
    if ((out.lb && *opt.cert->m < *out.lb) || (out.ub && *opt.cert->m > *out.ub))
      rep.notes.push_back("certificate m lies outside the computed bracket");
    else {
      out.lb = *opt.cert->m;  // the construction pins m exactly
      out.ub = *opt.cert->m;
    }
  }
  rep.m_lb = out.lb;
  rep.m_ub = out.ub;
  return out;
}

}  // namespace

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["subject"] = subject;
  j["theorem"] = theorem;
  j["hypotheses"] = hypotheses;
  j["hypotheses_ok"] = hypotheses_ok;
  j["quantities"] = quantities;
  j["outcome"] = outcome;
  j["slacks"] = slacks;
  j["notes"] = notes;
  return j;
}

VerificationReport verify_g2(const std::string& subject, const SimplicialComplex& x,
                             const VerifyOptions& opt) {
  VerificationReport rep;
  rep.subject = subject;
  rep.theorem = "g2";
  OutcomeTracker tr;
  const int d = x.dim();
  rep.d = d;
  rep.n = x.vertex_count();
  rep.hypotheses["dimension>=3"] = d >= 3;
  rep.hypotheses["connected"] = !x.is_void() && connected_components(x).size() == 1;
  rep.hypotheses["normal-pseudomanifold"] = is_normal_pseudomanifold(x).holds;
  for (const auto& kv : rep.hypotheses) rep.hypotheses_ok = rep.hypotheses_ok && kv.second;
  if (d < 2) {
    rep.notes.push_back("g2 undefined below dimension 2");
    rep.outcome = "inconclusive";
    return rep;
  }

  RelativePair p(x);
  FHVectors fh = f_h_vectors(p);
  const std::int64_t g2v = fh.g2();
  rep.g2 = g2v;
  const Rational coeff = binom_q(d + 2, 2);
  MuVector mu = mu_exact(p, opt.field, opt.mu);
  const Rational mu0 = mu.mu[0], mu1 = mu.mu.size() > 1 ? mu.mu[1] : Rational(0);
  rep.mu0 = mu0;
  rep.mu1 = mu1;
  const Rational mu_term = mu1 - mu0 + 1;
  BettiVector b = reduced_betti(p, opt.field, opt.mu.hom);
  const std::int64_t b1 = b.reduced_at(1);

  rep.quantities["d"] = d;
  rep.quantities["n"] = x.vertex_count();
  rep.quantities["f"] = vec_json(fh.f);
  rep.quantities["h"] = vec_json(fh.h);
  rep.quantities["g2"] = g2v;
  rep.quantities["coefficient"] = qstr(coeff);
  rep.quantities["mu"] = mu_json(mu);
  rep.quantities["mu1_minus_mu0_plus_1"] = qstr(mu_term);
  rep.quantities["b1"] = b1;
  rep.quantities["field"] = opt.field.str();

  // exact chain: g2 >= C·(μ1-μ0+1) >= C·b1
  push_slack(rep, tr, "g2-vs-mu", Rational(g2v) - coeff * mu_term, &rep.primary_slack);
  push_slack(rep, tr, "mu-vs-b1", mu_term - Rational(b1));

  BracketInfo mb = bracket_m(rep, x, opt);
  rep.quantities["m"] = mb.js;
  if (mb.ub) {
    // closing the theorem needs the upper end of the bracket
    Rational slack_m = Rational(g2v) - coeff * Rational(*mb.ub);
    rep.slacks["g2-vs-m-ub"] = qstr(slack_m);
    Rational slack_mu_m = mu_term - Rational(*mb.ub);
    rep.slacks["mu-vs-m-ub"] = qstr(slack_mu_m);
    if (slack_m < 0 || slack_mu_m < 0) {
      // not yet a violation unless the lower bound already fails
      tr.unknown();
    }
    rep.primary_slack = Rational(g2v) - coeff * Rational(*mb.ub);
  } else {
    tr.unknown();
  }
  if (mb.lb) {
    if (Rational(g2v) < coeff * Rational(*mb.lb)) tr.fail();
    if (mu_term < Rational(*mb.lb)) tr.fail();
  }
  if (mb.lb && mb.ub && *mb.lb == *mb.ub) {
    rep.quantities["g2_equals_bound"] = (Rational(g2v) == coeff * Rational(*mb.ub));
  }
  rep.outcome = tr.fold(rep.hypotheses_ok);
  return rep;
}

VerificationReport verify_h2(const std::string& subject, const SimplicialComplex& x,
                             const VerifyOptions& opt) {
  VerificationReport rep;
  rep.subject = subject;
  rep.theorem = "h2";
  OutcomeTracker tr;
  const int d = x.dim();
  rep.d = d;
  rep.n = x.vertex_count();
  rep.hypotheses["dimension>=2"] = d >= 2;
  rep.hypotheses["connected"] = !x.is_void() && connected_components(x).size() == 1;
  RecognizerVerdict s2 = serre2_combinatorial(x);
  rep.hypotheses["pure-with-connected-low-links"] = s2.holds;
  for (const auto& kv : rep.hypotheses) rep.hypotheses_ok = rep.hypotheses_ok && kv.second;
  if (d < 2) {
    rep.notes.push_back("h2 bound needs dimension >= 2");
    rep.outcome = "inconclusive";
    return rep;
  }

  FHVectors fh = f_h_vectors(x);
  const std::int64_t h2 = fh.h[2];
  const Rational coeff = binom_q(d + 1, 2);
  rep.quantities["d"] = d;
  rep.quantities["n"] = x.vertex_count();
  rep.quantities["f"] = vec_json(fh.f);
  rep.quantities["h"] = vec_json(fh.h);
  rep.quantities["h2"] = h2;
  rep.quantities["coefficient"] = qstr(coeff);

  BracketInfo mb = bracket_m(rep, x, opt);
  rep.quantities["m"] = mb.js;
  if (mb.ub) {
    Rational slack = Rational(h2) - coeff * Rational(*mb.ub);
    rep.slacks["h2-vs-m-ub"] = qstr(slack);
    rep.primary_slack = slack;
    if (slack < 0) tr.unknown();
  } else {
    tr.unknown();
  }
  if (mb.lb && Rational(h2) < coeff * Rational(*mb.lb)) tr.fail();
  rep.outcome = tr.fold(rep.hypotheses_ok);
  return rep;
}

VerificationReport verify_hi(const std::string& subject, const RelativePair& p,
                             const VerifyOptions& opt) {
  VerificationReport rep;
  rep.subject = subject;
  rep.theorem = "hi";
  OutcomeTracker tr;
  const int D = p.dim();
  const int r = opt.serre_r;
  rep.d = D;
  rep.n = p.vertex_count();
  if (D < 0) {
    rep.notes.push_back("pair has no faces");
    rep.outcome = "inconclusive";
    return rep;
  }
  rep.hypotheses["pure"] = is_pure(p).holds;
  RecognizerVerdict links = vertex_links_serre(p, r, opt.field);
  rep.hypotheses["vertex-links-serre-" + std::to_string(r)] = links.holds;
  for (const auto& kv : rep.hypotheses) rep.hypotheses_ok = rep.hypotheses_ok && kv.second;
  for (auto& note : links.notes) rep.notes.push_back(note);

  FHVectors fh = f_h_vectors(p);
  MuVector mu = mu_exact(p, opt.field, opt.mu);
  rep.mu0 = mu.mu[0];
  if (mu.mu.size() > 1) rep.mu1 = mu.mu[1];
  const std::int64_t f_minus1 = fh.f.empty() ? 0 : fh.f[0];
  rep.quantities["d"] = D;
  rep.quantities["n"] = p.vertex_count();
  rep.quantities["f"] = vec_json(fh.f);
  rep.quantities["h"] = vec_json(fh.h);
  rep.quantities["mu"] = mu_json(mu);
  rep.quantities["r"] = r;
  rep.quantities["field"] = opt.field.str();

  // main alternating bounds: h_i >= C(D+1,i)·(Σ (-1)^{i-j} μ_{j-1} + (-1)^i f_{-1})
  const int top_i = std::min(r, D + 1);
  for (int i = 1; i <= top_i; ++i) {
    Rational alt(0);
    for (int j = 1; j <= i; ++j) {
      Rational term = mu.mu[static_cast<std::size_t>(j - 1)];
      if ((i - j) % 2 == 0)
        alt += term;
      else
        alt -= term;
    }
    alt += ((i % 2 == 0) ? Rational(f_minus1) : Rational(-f_minus1));
    Rational rhs = binom_q(D + 1, i) * alt;
    Rational slack = Rational(fh.h[static_cast<std::size_t>(i)]) - rhs;
    push_slack(rep, tr, "h" + std::to_string(i), slack, &rep.primary_slack);
  }

  // vertex-sum identity: i·h_i + (D-i+2)·h_{i-1} = Σ_v h_{i-1}(link pair)
  PairFacets pf = p.facets();
  std::vector<FHVectors> link_fh;
  std::vector<PairFacets> link_pairs;
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    PairFacets lk = link_pair(pf, Face{v});
    link_pairs.push_back(lk);
    link_fh.push_back(f_h_vectors(lk, D));
  }
  for (int i = 1; i <= D + 1; ++i) {
    std::int64_t lhs = i * fh.h[static_cast<std::size_t>(i)] +
                       (D - i + 2) * fh.h[static_cast<std::size_t>(i - 1)];
    std::int64_t rhs = 0;
    for (const auto& lfh : link_fh) rhs += lfh.h[static_cast<std::size_t>(i - 1)];
    Rational slack = Rational(lhs) - Rational(rhs);
    rep.slacks["link-sum-h" + std::to_string(i)] = qstr(slack);
    if (slack != 0) tr.fail();
  }

  // per-link partial sums: Σ_{j<=i} (-1)^{i-j} σ~_{j-1}  <=
  //   (1/(D+1)) Σ_{j<=i} (-1)^{i-j} h_j / C(D,j), for i <= r-1
  std::optional<Rational> worst_link_slack;
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    if (pair_dim(link_pairs[static_cast<std::size_t>(v)]) < -1) continue;
    SigmaVector sig = sigma_tilde(link_pairs[static_cast<std::size_t>(v)], opt.field, opt.mu);
    const FHVectors& lfh = link_fh[static_cast<std::size_t>(v)];
    for (int i = 0; i <= std::min(r - 1, D); ++i) {
      Rational lhs(0), rhs(0);
      for (int j = 0; j <= i; ++j) {
        Rational sterm = sig.at_index(j - 1);
        Rational hterm = Rational(lfh.h[static_cast<std::size_t>(j)]) / binom_q(D, j);
        if ((i - j) % 2 == 0) {
          lhs += sterm;
          rhs += hterm;
        } else {
          lhs -= sterm;
          rhs -= hterm;
        }
      }
      rhs /= Rational(D + 1);
      Rational slack = rhs - lhs;
      if (!worst_link_slack || slack < *worst_link_slack) worst_link_slack = slack;
      if (slack < 0) tr.fail();
    }
  }
  if (worst_link_slack) rep.slacks["link-partial-sums-min"] = qstr(*worst_link_slack);

  rep.outcome = tr.fold(rep.hypotheses_ok);
  return rep;
}

namespace {

// distinct faces with distinct vertex sets: the poset is the face poset of a
// simplicial complex, so restriction-sum σ̃ agrees with the complex σ̃
bool poset_faces_distinct(const SimplicialPoset& p) {
  std::set<Face> seen;
  for (int i = 0; i < p.size(); ++i)
    if (!seen.insert(p.vertex_set(i)).second) return false;
  return true;
}

// every maximal face of Δ∖Γ has the dimension of the pair
bool poset_pair_pure(const PosetPair& p) {
  const int d = p.dim();
  if (d < 0) return true;
  for (int i = 0; i < p.delta.size(); ++i) {
    if (p.gamma[static_cast<std::size_t>(i)]) continue;
    bool maximal = true;
    for (int j = 0; j < p.delta.size(); ++j)
      if (j != i && p.delta.leq(i, j)) {
        maximal = false;
        break;
      }
    if (maximal && p.delta.face(i).rank - 1 != d) return false;
  }
  return true;
}

// H~_i of the pair vanishes for -1 <= i < min(r-1, pair dim)
bool poset_vanishing_below(const PosetPair& lk, int r, FieldSpec k, const MuOptions& opt) {
  const int ld = lk.dim();
  if (ld < -1) return true;  // no faces: vacuous
  const int lim = std::min(r - 1, ld);
  if (lim <= -1) return true;
  BettiVector b = reduced_betti(sd_pair(lk), k, opt.hom);
  for (int i = -1; i < lim; ++i)
    if (b.reduced_at(i) != 0) return false;
  return true;
}

// (S_r) for a poset pair: vanishing for the pair itself and for the link of
// every nonempty face
bool poset_pair_serre(const PosetPair& q, int r, FieldSpec k, const MuOptions& opt) {
  if (!poset_vanishing_below(q, r, k, opt)) return false;
  for (int i = 0; i < q.delta.size(); ++i)
    if (!poset_vanishing_below(poset_face_link(q, i), r, k, opt)) return false;
  return true;
}

bool sd_connected(const SimplicialPoset& p) {
  SimplicialComplex sd = barycentric_subdivision(p);
  return !sd.is_void() && !sd.is_empty_complex() && connected_components(sd).size() == 1;
}

}  // namespace

VerificationReport verify_h2(const std::string& subject, const PosetPair& p,
                             const VerifyOptions& opt) {
  VerificationReport rep;
  rep.subject = subject;
  rep.theorem = "h2";
  OutcomeTracker tr;
  const int d = p.dim();
  rep.d = d;
  rep.n = p.delta.vertex_count();
  rep.hypotheses["dimension>=2"] = d >= 2;
  rep.hypotheses["connected"] = sd_connected(p.delta);
  bool low_links = poset_pair_pure(p);
  PosetPair whole = PosetPair::whole(p.delta);
  for (int i = 0; low_links && i < p.delta.size(); ++i) {
    if (p.delta.face(i).rank - 1 > d - 2) continue;
    low_links = sd_connected(poset_face_link(whole, i).delta);
  }
  rep.hypotheses["pure-with-connected-low-links"] = low_links;
  for (const auto& kv : rep.hypotheses) rep.hypotheses_ok = rep.hypotheses_ok && kv.second;
  if (d < 2) {
    rep.notes.push_back("h2 bound needs dimension >= 2");
    rep.outcome = "inconclusive";
    return rep;
  }

  FHVectors fh = poset_f_h(p);
  const std::int64_t h2 = fh.h[2];
  const Rational coeff = binom_q(d + 1, 2);
  rep.quantities["d"] = d;
  rep.quantities["n"] = p.delta.vertex_count();
  rep.quantities["f"] = vec_json(fh.f);
  rep.quantities["h"] = vec_json(fh.h);
  rep.quantities["h2"] = h2;
  rep.quantities["coefficient"] = qstr(coeff);

  // the minimal generator count is a topological quantity: read it off sd
  SimplicialComplex sdx = barycentric_subdivision(p.delta);
  BracketInfo mb = bracket_m(rep, sdx, opt);
  rep.quantities["m"] = mb.js;
  if (mb.ub) {
    Rational slack = Rational(h2) - coeff * Rational(*mb.ub);
    rep.slacks["h2-vs-m-ub"] = qstr(slack);
    rep.primary_slack = slack;
    if (slack < 0) tr.unknown();
  } else {
    tr.unknown();
  }
  if (mb.lb && Rational(h2) < coeff * Rational(*mb.lb)) tr.fail();
  rep.outcome = tr.fold(rep.hypotheses_ok);
  return rep;
}

VerificationReport verify_hi(const std::string& subject, const PosetPair& p,
                             const VerifyOptions& opt) {
  VerificationReport rep;
  rep.subject = subject;
  rep.theorem = "hi";
  OutcomeTracker tr;
  const int D = p.dim();
  const int r = opt.serre_r;
  rep.d = D;
  rep.n = p.delta.vertex_count();
  if (D < 0) {
    rep.notes.push_back("pair has no faces");
    rep.outcome = "inconclusive";
    return rep;
  }
  rep.hypotheses["pure"] = poset_pair_pure(p);
  bool links_ok = true;
  std::vector<PosetPair> links;
  for (int v = 0; v < p.delta.vertex_count(); ++v) {
    links.push_back(poset_link(p, v));
    if (links_ok) links_ok = poset_pair_serre(links.back(), r, opt.field, opt.mu);
  }
  rep.hypotheses["vertex-links-serre-" + std::to_string(r)] = links_ok;
  for (const auto& kv : rep.hypotheses) rep.hypotheses_ok = rep.hypotheses_ok && kv.second;

  FHVectors fh = poset_f_h(p);
  MuVector mu = poset_mu_exact(p, opt.field, opt.mu);
  rep.mu0 = mu.mu[0];
  if (mu.mu.size() > 1) rep.mu1 = mu.mu[1];
  const std::int64_t f_minus1 = fh.f.empty() ? 0 : fh.f[0];
  rep.quantities["d"] = D;
  rep.quantities["n"] = p.delta.vertex_count();
  rep.quantities["f"] = vec_json(fh.f);
  rep.quantities["h"] = vec_json(fh.h);
  rep.quantities["mu"] = mu_json(mu);
  rep.quantities["r"] = r;
  rep.quantities["field"] = opt.field.str();

  const int top_i = std::min(r, D + 1);
  for (int i = 1; i <= top_i; ++i) {
    Rational alt(0);
    for (int j = 1; j <= i; ++j) {
      Rational term = mu.mu[static_cast<std::size_t>(j - 1)];
      if ((i - j) % 2 == 0)
        alt += term;
      else
        alt -= term;
    }
    alt += ((i % 2 == 0) ? Rational(f_minus1) : Rational(-f_minus1));
    Rational rhs = binom_q(D + 1, i) * alt;
    Rational slack = Rational(fh.h[static_cast<std::size_t>(i)]) - rhs;
    push_slack(rep, tr, "h" + std::to_string(i), slack, &rep.primary_slack);
  }

  std::vector<FHVectors> link_fh;
  for (const auto& lk : links) link_fh.push_back(poset_f_h(lk, D));
  for (int i = 1; i <= D + 1; ++i) {
    std::int64_t lhs = i * fh.h[static_cast<std::size_t>(i)] +
                       (D - i + 2) * fh.h[static_cast<std::size_t>(i - 1)];
    std::int64_t rhs = 0;
    for (const auto& lfh : link_fh) rhs += lfh.h[static_cast<std::size_t>(i - 1)];
    Rational slack = Rational(lhs) - Rational(rhs);
    rep.slacks["link-sum-h" + std::to_string(i)] = qstr(slack);
    if (slack != 0) tr.fail();
  }

  // the partial-sum bound needs σ̃ of each link pair; restriction sums pin it
  // down only when the link has no repeated vertex sets
  std::optional<Rational> worst_link_slack;
  bool skipped_links = false;
  for (std::size_t v = 0; v < links.size(); ++v) {
    const PosetPair& lk = links[v];
    if (lk.dim() < -1) continue;
    if (!poset_faces_distinct(lk.delta)) {
      skipped_links = true;
      continue;
    }
    SigmaVector sig = poset_sigma_tilde(lk, opt.field, opt.mu);
    const FHVectors& lfh = link_fh[v];
    for (int i = 0; i <= std::min(r - 1, D); ++i) {
      Rational lhs(0), rhs(0);
      for (int j = 0; j <= i; ++j) {
        Rational sterm = sig.at_index(j - 1);
        Rational hterm = Rational(lfh.h[static_cast<std::size_t>(j)]) / binom_q(D, j);
        if ((i - j) % 2 == 0) {
          lhs += sterm;
          rhs += hterm;
        } else {
          lhs -= sterm;
          rhs -= hterm;
        }
      }
      rhs /= Rational(D + 1);
      Rational slack = rhs - lhs;
      if (!worst_link_slack || slack < *worst_link_slack) worst_link_slack = slack;
      if (slack < 0) tr.fail();
    }
  }
  if (worst_link_slack) rep.slacks["link-partial-sums-min"] = qstr(*worst_link_slack);
  if (skipped_links)
    rep.notes.push_back(
        "partial-sum check skipped for links with repeated vertex sets");

  rep.outcome = tr.fold(rep.hypotheses_ok);
  return rep;
}

VerificationReport verify_morse(const std::string& subject, const RelativePair& p,
                                const VerifyOptions& opt) {
  VerificationReport rep;
  rep.subject = subject;
  rep.theorem = "morse";
  OutcomeTracker tr;
  const int dim = p.dim();
  rep.d = dim;
  rep.n = p.vertex_count();
  if (dim < 0) {
    rep.notes.push_back("pair has no faces; nothing to check");
    rep.outcome = "verified";
    return rep;
  }
  const int n = p.vertex_count();
  std::vector<Ordering> orderings{Ordering::identity(n)};
  for (std::int64_t t = 0; t < opt.samples; ++t) {
    Rng rng(opt.seed, 1000 + static_cast<std::uint64_t>(t));
    Ordering s = Ordering::identity(n);
    rng.shuffle(s.perm);
    orderings.push_back(std::move(s));
  }
  std::optional<Rational> min_defect;
  for (const auto& s : orderings) {
    MuVector mu = mu_ordering(p, s, opt.field, opt.mu);
    auto defects = morse_defect(p, mu, opt.field, opt.mu);
    for (const auto& dft : defects) {
      if (!min_defect || dft < *min_defect) min_defect = dft;
      if (dft < 0) tr.fail();
    }
  }
  MuVector mu_id = mu_ordering(p, orderings[0], opt.field, opt.mu);
  rep.mu0 = mu_id.mu.empty() ? Rational(0) : mu_id.mu[0];
  if (mu_id.mu.size() > 1) rep.mu1 = mu_id.mu[1];
  rep.quantities["orderings_checked"] = static_cast<std::int64_t>(orderings.size());
  rep.quantities["field"] = opt.field.str();
  if (min_defect) {
    rep.slacks["min-defect"] = qstr(*min_defect);
    rep.primary_slack = *min_defect;
  }
  rep.outcome = tr.fold(true);
  return rep;
}

VerificationReport verify_poset_sd(const std::string& subject, const PosetPair& p,
                                   const VerifyOptions& opt) {
  VerificationReport rep;
  rep.subject = subject;
  rep.theorem = "poset-sd";
  OutcomeTracker tr;
  const int n = p.delta.vertex_count();
  rep.d = p.dim();
  rep.n = n;

  // the subdivided pair as a plain simplicial pair
  PairFacets sd = sd_pair(p);
  std::vector<std::string> labels;
  for (int i = 0; i < p.delta.size(); ++i) labels.push_back(p.delta.face(i).ext_id);
  SimplicialComplex sd_delta =
      sd.delta.empty() ? SimplicialComplex::void_complex()
                       : SimplicialComplex::from_faces(sd.delta, labels);
  RelativePair sd_rel = RelativePair::with_gamma_facets(sd_delta, sd.gamma);

  // Euler characteristic: combinatorial, from the poset ranks, vs homological
  FHVectors pfh = poset_f_h(p);
  Rational chi_comb(0);
  for (std::size_t k = 0; k < pfh.f.size(); ++k) {
    if (k % 2 == 0)
      chi_comb -= pfh.f[k];  // (-1)^{k-1} for dimension k-1
    else
      chi_comb += pfh.f[k];
  }
  BettiVector bq = poset_betti(p, opt.field, opt.mu.hom);
  Rational chi_hom(0);
  for (int i = -1; i <= bq.top_dim; ++i) {
    if ((i % 2 + 2) % 2 == 0)
      chi_hom += bq.reduced_at(i);
    else
      chi_hom -= bq.reduced_at(i);
  }
  rep.slacks["euler-mismatch"] = qstr(chi_comb - chi_hom);
  if (chi_comb != chi_hom) tr.fail();

  // μ^{sd(ς)} must reproduce μ^ς ordering by ordering
  std::vector<Ordering> orderings;
  std::int64_t all = 1;
  for (int i = 2; i <= n && all <= 120; ++i) all *= i;
  if (n > 0 && all <= 120) {
    Ordering s = Ordering::identity(n);
    do {
      orderings.push_back(s);
    } while (std::next_permutation(s.perm.begin(), s.perm.end()));
  } else if (n > 0) {
    orderings.push_back(Ordering::identity(n));
    for (std::int64_t t = 0; t < opt.samples; ++t) {
      Rng rng(opt.seed, 2000 + static_cast<std::uint64_t>(t));
      Ordering s = Ordering::identity(n);
      rng.shuffle(s.perm);
      orderings.push_back(std::move(s));
    }
  }
  std::int64_t mismatches = 0;
  for (std::size_t oi = 0; oi < orderings.size(); ++oi) {
    const auto& s = orderings[oi];
    MuVector mu_p = poset_mu_ordering(p, s, opt.field, opt.mu);
    Ordering sd_ord = (oi % 2 == 0)
                          ? sd_ordering(p.delta, s)
                          : sd_ordering_sampled(p.delta, s, opt.seed + oi);
    MuVector mu_s = mu_ordering(sd_rel, sd_ord, opt.field, opt.mu);
    std::size_t len = std::max(mu_p.mu.size(), mu_s.mu.size());
    for (std::size_t i = 0; i < len; ++i) {
      Rational a = i < mu_p.mu.size() ? mu_p.mu[i] : Rational(0);
      Rational b = i < mu_s.mu.size() ? mu_s.mu[i] : Rational(0);
      if (a != b) {
        ++mismatches;
        tr.fail();
      }
    }
  }
  rep.quantities["orderings_checked"] = static_cast<std::int64_t>(orderings.size());
  rep.quantities["mu_mismatches"] = mismatches;
  rep.quantities["field"] = opt.field.str();
  rep.slacks["mu-mismatches"] = std::to_string(mismatches);
  rep.primary_slack = Rational(mismatches);
  rep.outcome = tr.fold(true);
  return rep;
}

namespace {
std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}
}  // namespace

std::string reports_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "subject,theorem,d,n,g2,mu0,mu1,m_lb,m_ub,outcome,slack\n";
  for (const auto& r : reports) {
    out << csv_cell(r.subject) << ',' << csv_cell(r.theorem) << ',';
    if (r.d) out << *r.d;
    out << ',';
    if (r.n) out << *r.n;
    out << ',';
    if (r.g2) out << *r.g2;
    out << ',';
    if (r.mu0) out << qstr(*r.mu0);
    out << ',';
    if (r.mu1) out << qstr(*r.mu1);
    out << ',';
    if (r.m_lb) out << *r.m_lb;
    out << ',';
    if (r.m_ub) out << *r.m_ub;
    out << ',';
    out << csv_cell(r.outcome) << ',';
    if (r.primary_slack) out << qstr(*r.primary_slack);
    out << '\n';
  }
  return out.str();
}

namespace {

struct Subject {
  std::string id;
  // exactly one of these is set
  std::optional<CertifiedComplex> complex;
  std::optional<RelativePair> pair;
  std::optional<PosetPair> poset;
};

Subject build_subject(const nlohmann::json& js) {
  Subject s;
  if (!js.contains("id") || !js.contains("kind"))
    throw InputError("corpus subject needs \"id\" and \"kind\"");
  s.id = js["id"].get<std::string>();
  const std::string kind = js["kind"].get<std::string>();
  auto geti = [&](const char* key, std::optional<int> dflt = {}) -> int {
    if (js.contains(key)) return js[key].get<int>();
    if (dflt) return *dflt;
    throw InputError("subject '" + s.id + "' needs \"" + key + "\"");
  };
  auto getu = [&](const char* key, std::uint64_t dflt) -> std::uint64_t {
    return js.contains(key) ? js[key].get<std::uint64_t>() : dflt;
  };
  if (kind == "simplex-boundary") {
    s.complex = simplex_boundary(geti("dim"));
  } else if (kind == "stacked") {
    s.complex = stacked_manifold(geti("dim"), geti("stackings"), geti("handles", 0),
                                 getu("seed", 1));
  } else if (kind == "cyclic") {
    s.complex = cyclic_boundary(geti("n"));
  } else if (kind == "csaszar") {
    s.complex = csaszar_torus();
  } else if (kind == "rp2-6") {
    s.complex = projective_plane_6();
  } else if (kind == "random") {
    s.complex = CertifiedComplex{random_complex(geti("n"), geti("max_dim", 3),
                                                getu("seed", 1)),
                                 {}};
  } else if (kind == "random-pair") {
    s.pair = random_pair(geti("n"), geti("max_dim", 3), getu("seed", 1));
  } else if (kind == "file") {
    if (!js.contains("path")) throw InputError("file subject needs \"path\"");
    if (js.value("pair", false))
      s.pair = read_pair_file(js["path"].get<std::string>());
    else
      s.complex = CertifiedComplex{read_complex_file(js["path"].get<std::string>()), {}};
  } else if (kind == "poset-file") {
    if (!js.contains("path")) throw InputError("poset-file subject needs \"path\"");
    s.poset = read_poset_pair_file(js["path"].get<std::string>());
  } else if (kind == "parallel-edges") {
    s.poset = PosetPair::whole(parallel_edges(geti("count", 3)));
  } else if (kind == "random-poset") {
    s.poset = PosetPair::whole(random_poset(geti("n"), geti("max_dim", 2), getu("seed", 1)));
  } else {
    throw InputError("unknown subject kind '" + kind + "'");
  }
  return s;
}

}  // namespace

CorpusResult corpus_run(const nlohmann::json& config) {
  CorpusResult out;
  VerifyOptions opt;
  if (config.contains("field")) opt.field = FieldSpec::parse(config["field"].get<std::string>());
  opt.seed = config.value("seed", std::uint64_t{7});
  opt.samples = config.value("samples", std::int64_t{8});
  opt.serre_r = config.value("serre_r", 2);
  opt.mu.subset_budget = config.value("budget_subsets", 22);
  opt.tietze_budget = config.value("budget_tietze", std::int64_t{10000});

  std::vector<std::string> theorems;
  if (config.contains("theorems"))
    for (const auto& t : config["theorems"]) theorems.push_back(t.get<std::string>());
  else
    theorems = {"g2", "h2", "hi", "morse", "poset-sd"};

  if (!config.contains("subjects") || !config["subjects"].is_array())
    throw InputError("corpus config needs a \"subjects\" array");

  for (const auto& js : config["subjects"]) {
    Subject s = build_subject(js);
    VerifyOptions sopt = opt;
    if (s.complex) sopt.cert = s.complex->cert;
    for (const std::string& thm : theorems) {
      if (thm == "g2" && s.complex)
        out.reports.push_back(verify_g2(s.id, s.complex->complex, sopt));
      else if (thm == "h2" && s.complex)
        out.reports.push_back(verify_h2(s.id, s.complex->complex, sopt));
      else if (thm == "h2" && s.poset)
        out.reports.push_back(verify_h2(s.id, *s.poset, sopt));
      else if (thm == "hi" && (s.complex || s.pair))
        out.reports.push_back(verify_hi(
            s.id, s.pair ? *s.pair : RelativePair(s.complex->complex), sopt));
      else if (thm == "hi" && s.poset)
        out.reports.push_back(verify_hi(s.id, *s.poset, sopt));
      else if (thm == "morse" && (s.complex || s.pair))
        out.reports.push_back(verify_morse(
            s.id, s.pair ? *s.pair : RelativePair(s.complex->complex), sopt));
      else if (thm == "poset-sd" && s.poset)
        out.reports.push_back(verify_poset_sd(s.id, *s.poset, sopt));
    }
  }

  out.json["field"] = opt.field.str();
  out.json["seed"] = opt.seed;
  out.json["samples"] = opt.samples;
  out.json["reports"] = nlohmann::json::array();
  for (const auto& r : out.reports) {
    out.json["reports"].push_back(r.to_json());
    if (r.outcome == "violated") out.any_violated = true;
  }
  out.csv = reports_csv(out.reports);
  return out;
}

}  // namespace mulab
