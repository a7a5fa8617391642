#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mulab/constructors.hpp"
#include "mulab/hochster.hpp"
#include "mulab/mu.hpp"
#include "mulab/pair.hpp"
#include "mulab/poset.hpp"

namespace mulab {

struct VerifyOptions {
  FieldSpec field = FieldSpec::rationals();
  std::uint64_t seed = 7;
  std::int64_t samples = 8;  // sampled orderings for the Morse/sd checks
  int serre_r = 2;           // r for the depth-style h-vector bounds
  MuOptions mu;
  std::int64_t tietze_budget = 10000;
  std::optional<Certificate> cert;
};

// Outcome semantics: "violated" only on exact evidence (an exact inequality
// fails, or the bound fails against a proven lower bound); "verified" when
// every exact check passes and bracketed quantities close the gap;
// "inconclusive" otherwise. Failed hypotheses never abort a run — they are
// recorded and the inequalities are still evaluated.
struct VerificationReport {
  std::string subject;
  std::string theorem;
  std::map<std::string, bool> hypotheses;
  bool hypotheses_ok = true;
  nlohmann::json quantities = nlohmann::json::object();
  std::string outcome = "inconclusive";
  std::map<std::string, std::string> slacks;
  std::vector<std::string> notes;

  // summary fields for the CSV table
  std::optional<int> d, n;
  std::optional<std::int64_t> g2;
  std::optional<Rational> mu0, mu1;
  std::optional<std::int64_t> m_lb, m_ub;
  std::optional<Rational> primary_slack;

  nlohmann::json to_json() const;
};

// g_2 >= C(d+2,2)·m through the chain g_2 >= C(d+2,2)(μ_1-μ_0+1) >= C(d+2,2)·b_1.
VerificationReport verify_g2(const std::string& subject, const SimplicialComplex& x,
                             const VerifyOptions& opt = {});
// h_2 >= C(d+1,2)·m for pure connected complexes with connected low links.
VerificationReport verify_h2(const std::string& subject, const SimplicialComplex& x,
                             const VerifyOptions& opt = {});
// Poset form of the same bound; m is read off the barycentric subdivision.
VerificationReport verify_h2(const std::string& subject, const PosetPair& p,
                             const VerifyOptions& opt = {});
// Alternating-sum h-vector bounds for pairs whose vertex links satisfy (S_r),
// plus the per-link partial-sum bound and the vertex-sum h-identity.
VerificationReport verify_hi(const std::string& subject, const RelativePair& p,
                             const VerifyOptions& opt = {});
// Poset form; the per-link partial-sum check runs only on links without
// repeated vertex sets, where the restriction-sum σ̃ is the complex σ̃.
VerificationReport verify_hi(const std::string& subject, const PosetPair& p,
                             const VerifyOptions& opt = {});
// Nonnegativity of the alternating Morse defects for sampled orderings.
VerificationReport verify_morse(const std::string& subject, const RelativePair& p,
                                const VerifyOptions& opt = {});
// μ^{sd(ς)} of the subdivided pair matches μ^ς of the poset pair; Euler
// characteristics of the pair agree combinatorially and homologically.
VerificationReport verify_poset_sd(const std::string& subject, const PosetPair& p,
                                   const VerifyOptions& opt = {});

std::string reports_csv(const std::vector<VerificationReport>& reports);

struct CorpusResult {
  std::vector<VerificationReport> reports;
  nlohmann::json json;
  std::string csv;
  bool any_violated = false;
};

// Config: {"seed": .., "samples": .., "field": "q", "serre_r": 2,
//          "budget_subsets": 22, "budget_tietze": 10000,
//          "theorems": ["g2","h2","hi","morse","poset-sd"],
//          "subjects": [{"id": "..", "kind": "..", ...}, ...]}
CorpusResult corpus_run(const nlohmann::json& config);

}  // namespace mulab
