#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "mulab/constructors.hpp"
#include "mulab/hochster.hpp"
#include "mulab/homology.hpp"
#include "mulab/io.hpp"
#include "mulab/mu.hpp"
#include "mulab/pair.hpp"
#include "mulab/pi1.hpp"
#include "mulab/recognizers.hpp"
#include "mulab/verify.hpp"

namespace py = pybind11;
using namespace mulab;

namespace {

using LabelFacets = std::vector<std::vector<std::string>>;

RelativePair to_pair(const LabelFacets& delta, const LabelFacets& gamma) {
  SimplicialComplex d = SimplicialComplex::build(delta);
  if (gamma.empty()) return RelativePair(std::move(d));
  return RelativePair(std::move(d), SimplicialComplex::build(gamma));
}

LabelFacets from_complex(const SimplicialComplex& x) {
  LabelFacets out;
  for (const Face& f : x.facets()) {
    std::vector<std::string> g;
    for (VertexId v : f) g.push_back(x.label(v));
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<std::string> rat_strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& q : v) out.push_back(rational_str(q));
  return out;
}

py::dict fh_py(const LabelFacets& delta, const LabelFacets& gamma, std::optional<int> d) {
  FHVectors fh = f_h_vectors(to_pair(delta, gamma), d);
  py::dict out;
  out["f"] = fh.f;
  out["h"] = fh.h;
  out["d"] = fh.d;
  if (fh.d >= 2) out["g2"] = fh.g2();
  return out;
}

py::dict betti_py(const LabelFacets& delta, const LabelFacets& gamma, const std::string& field) {
  BettiVector b = reduced_betti(to_pair(delta, gamma), FieldSpec::parse(field));
  py::dict out;
  out["field"] = b.field.str();
  out["top_dim"] = b.top_dim;
  std::vector<std::int64_t> red, unred;
  for (int i = -1; i <= b.top_dim; ++i) red.push_back(b.reduced_at(i));
  for (int i = 0; i <= b.top_dim; ++i) unred.push_back(b.unreduced_at(i));
  out["reduced_from_dim_minus1"] = red;
  out["unreduced"] = unred;
  if (!b.rational_path.empty()) out["rational_path"] = b.rational_path;
  return out;
}

py::dict mu_py(const LabelFacets& delta, const LabelFacets& gamma, const std::string& method,
               const std::string& field, std::int64_t samples, std::uint64_t seed,
               std::optional<std::vector<int>> ordering) {
  RelativePair p = to_pair(delta, gamma);
  FieldSpec k = FieldSpec::parse(field);
  MuVector m;
  if (method == "exact")
    m = mu_exact(p, k);
  else if (method == "enumerated")
    m = mu_enumerated(p, k);
  else if (method == "sampled")
    m = mu_sampled(p, k, samples, seed);
  else if (method == "ordering") {
    Ordering s;
    if (ordering)
      s.perm = *ordering;
    else
      s = Ordering::identity(p.vertex_count());
    s.validate(p.vertex_count());
    m = mu_ordering(p, s, k);
  } else {
    throw InputError("unknown mu method '" + method + "'");
  }
  py::dict out;
  out["field"] = m.field.str();
  out["mu"] = rat_strings(m.mu);
  if (m.prov.method == MuMethod::sampled) out["stderrs"] = m.prov.stderrs;
  if (p.dim() >= 0) out["morse_defects"] = rat_strings(morse_defect(p, m, k));
  return out;
}

std::vector<std::string> sigma_py(const LabelFacets& delta, const LabelFacets& gamma,
                                  const std::string& field) {
  return rat_strings(sigma_tilde(to_pair(delta, gamma), FieldSpec::parse(field)).sigma);
}

std::vector<std::tuple<int, int, std::int64_t>> graded_betti_py(const LabelFacets& delta,
                                                                const LabelFacets& gamma,
                                                                const std::string& field) {
  GradedBettiTable t = graded_betti(to_pair(delta, gamma), FieldSpec::parse(field));
  std::vector<std::tuple<int, int, std::int64_t>> out;
  for (const auto& kv : t.beta)
    out.emplace_back(kv.first.first, kv.first.second, kv.second);
  return out;
}

py::dict m_bracket_py(const LabelFacets& delta, std::int64_t budget) {
  MBracket mb = m_bracket(SimplicialComplex::build(delta), {2, 3, 5}, budget);
  py::dict out;
  out["lb"] = mb.lower;
  out["ub"] = mb.upper;
  out["exact"] = mb.exact;
  out["h1_by_field"] = mb.h1_by_field;
  return out;
}

py::dict generate_py(const std::string& kind, int dim, int n, int stackings, int handles,
                     int max_dim, int count, std::uint64_t seed) {
  py::dict out;
  auto pack = [&](const CertifiedComplex& c) {
    out["facets"] = from_complex(c.complex);
    out["cert"] = certificate_json(c.cert).dump();
  };
  if (kind == "simplex-boundary")
    pack(simplex_boundary(dim));
  else if (kind == "stacked")
    pack(stacked_manifold(dim, stackings, handles, seed));
  else if (kind == "cyclic")
    pack(cyclic_boundary(n));
  else if (kind == "csaszar")
    pack(csaszar_torus());
  else if (kind == "rp2-6")
    pack(projective_plane_6());
  else if (kind == "random")
    out["facets"] = from_complex(random_complex(n, max_dim, seed));
  else if (kind == "random-pair") {
    RelativePair p = random_pair(n, max_dim, seed);
    out["facets"] = from_complex(p.delta());
    LabelFacets g;
    for (const Face& f : p.gamma_facets()) {
      std::vector<std::string> labels;
      for (VertexId v : f) labels.push_back(p.delta().label(v));
      g.push_back(std::move(labels));
    }
    out["gamma"] = g;
  } else if (kind == "parallel-edges") {
    (void)count;
    throw InputError("poset kinds are only reachable through the command-line tool");
  } else {
    throw InputError("unknown generator kind '" + kind + "'");
  }
  return out;
}

std::string verify_py(const std::string& theorem, const LabelFacets& delta,
                      const LabelFacets& gamma, const std::string& field, std::uint64_t seed,
                      std::int64_t samples, int serre_r) {
  VerifyOptions opt;
  opt.field = FieldSpec::parse(field);
  opt.seed = seed;
  opt.samples = samples;
  opt.serre_r = serre_r;
  RelativePair p = to_pair(delta, gamma);
  VerificationReport rep;
  if (theorem == "g2")
    rep = verify_g2("python", p.delta(), opt);
  else if (theorem == "h2")
    rep = verify_h2("python", p.delta(), opt);
  else if (theorem == "hi")
    rep = verify_hi("python", p, opt);
  else if (theorem == "morse")
    rep = verify_morse("python", p, opt);
  else
    throw InputError("unknown theorem '" + theorem + "'");
  return rep.to_json().dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "relative simplicial pairs: h-vectors, mu-numbers, verification";

  py::register_exception<InputError>(m, "InputError");
  py::register_exception<ResourceError>(m, "ResourceError");

  m.def("f_h", &fh_py, py::arg("delta"), py::arg("gamma") = LabelFacets{},
        py::arg("d") = std::nullopt);
  m.def("betti", &betti_py, py::arg("delta"), py::arg("gamma") = LabelFacets{},
        py::arg("field") = "q");
  m.def("mu", &mu_py, py::arg("delta"), py::arg("gamma") = LabelFacets{},
        py::arg("method") = "exact", py::arg("field") = "q", py::arg("samples") = 64,
        py::arg("seed") = 7, py::arg("ordering") = std::nullopt);
  m.def("sigma", &sigma_py, py::arg("delta"), py::arg("gamma") = LabelFacets{},
        py::arg("field") = "q");
  m.def("graded_betti", &graded_betti_py, py::arg("delta"), py::arg("gamma") = LabelFacets{},
        py::arg("field") = "q");
  m.def("m_bracket", &m_bracket_py, py::arg("delta"), py::arg("budget") = 10000);
  m.def("generate", &generate_py, py::arg("kind"), py::arg("dim") = 3, py::arg("n") = 8,
        py::arg("stackings") = 3, py::arg("handles") = 0, py::arg("max_dim") = 3,
        py::arg("count") = 3, py::arg("seed") = 1);
  m.def("verify", &verify_py, py::arg("theorem"), py::arg("delta"),
        py::arg("gamma") = LabelFacets{}, py::arg("field") = "q", py::arg("seed") = 7,
        py::arg("samples") = 8, py::arg("serre_r") = 2);
  m.def("is_pure",
        [](const LabelFacets& delta) { return is_pure(SimplicialComplex::build(delta)).holds; },
        py::arg("delta"));
  m.def("is_normal_pseudomanifold",
        [](const LabelFacets& delta) {
          return is_normal_pseudomanifold(SimplicialComplex::build(delta)).holds;
        },
        py::arg("delta"));
}
