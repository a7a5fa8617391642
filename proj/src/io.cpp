#include "mulab/io.hpp"

#include <fstream>
#include <sstream>

#include "mulab/util.hpp"

namespace mulab {

namespace {

// facet lines per section; returns {delta lines, gamma lines, had gamma section}
struct ParsedSections {
  std::vector<std::vector<std::string>> delta;
  std::vector<std::vector<std::string>> gamma;
  bool has_gamma_section = false;
};

ParsedSections parse_sections(std::istream& in) {
  ParsedSections out;
  std::string line;
  int section = 0;  // 0 = delta, 1 = gamma
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks[0] == "[DELTA]" || toks[0] == "[GAMMA]") {
      if (toks.size() != 1)
        throw InputError("line " + std::to_string(lineno) + ": section header with trailing tokens");
      section = (toks[0] == "[GAMMA]") ? 1 : 0;
      if (section == 1) out.has_gamma_section = true;
      continue;
    }
    if (toks.size() == 1 && toks[0] == "{}") toks.clear();  // the empty facet
    (section == 0 ? out.delta : out.gamma).push_back(std::move(toks));
  }
  return out;
}

SimplicialComplex complex_from_lines(const std::vector<std::vector<std::string>>& lines) {
  if (lines.empty()) return SimplicialComplex::void_complex();
  return SimplicialComplex::build(lines);
}

}  // namespace

SimplicialComplex read_complex(std::istream& in) {
  ParsedSections s = parse_sections(in);
  if (s.has_gamma_section)
    throw InputError("file contains a [GAMMA] section; read it as a pair");
  return complex_from_lines(s.delta);
}

RelativePair read_pair(std::istream& in) {
  ParsedSections s = parse_sections(in);
  SimplicialComplex delta = complex_from_lines(s.delta);
  std::vector<Face> gamma;
  for (const auto& toks : s.gamma) {
    Face f;
    for (const auto& lab : toks) {
      VertexId v = delta.id_of(lab);
      if (v < 0) throw InputError("gamma vertex '" + lab + "' is not a vertex of delta");
      f.push_back(v);
    }
    gamma.push_back(make_face(std::move(f)));
  }
  return RelativePair::with_gamma_facets(std::move(delta), std::move(gamma));
}

namespace {
std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}
}  // namespace

SimplicialComplex read_complex_file(const std::string& path) {
  auto in = open_input(path);
  return read_complex(in);
}

RelativePair read_pair_file(const std::string& path) {
  auto in = open_input(path);
  return read_pair(in);
}

namespace {
void write_facets(std::ostream& out, const SimplicialComplex& x,
                  const std::vector<Face>& facets) {
  for (const auto& f : facets) {
    if (f.empty()) {
      out << "{}\n";
      continue;
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out << ' ';
      out << x.label(f[i]);
    }
    out << '\n';
  }
}
}  // namespace

void write_complex(std::ostream& out, const SimplicialComplex& x) {
  if (x.is_void()) {
    out << "# void complex\n";
    return;
  }
  write_facets(out, x, x.facets());
}

void write_pair(std::ostream& out, const RelativePair& p) {
  out << "[DELTA]\n";
  write_complex(out, p.delta());
  if (!p.gamma_void()) {
    out << "[GAMMA]\n";
    write_facets(out, p.delta(), p.gamma_facets());
  }
}

void write_complex_file(const std::string& path, const SimplicialComplex& x) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  write_complex(out, x);
}

void write_pair_file(const std::string& path, const RelativePair& p) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  write_pair(out, p);
}

namespace {
std::string id_str(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  throw InputError("poset face id must be a string or an integer");
}
}  // namespace

PosetPair read_poset_pair_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad poset JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("faces") || !j["faces"].is_array())
    throw InputError("poset JSON must be an object with a \"faces\" array");
  std::vector<PosetFace> faces;
  std::map<std::string, int> index;
  for (const auto& jf : j["faces"]) {
    if (!jf.is_object() || !jf.contains("id") || !jf.contains("rank"))
      throw InputError("each poset face needs \"id\" and \"rank\"");
    PosetFace f;
    f.ext_id = id_str(jf["id"]);
    f.rank = jf["rank"].get<int>();
    if (index.count(f.ext_id)) throw InputError("duplicate poset face id '" + f.ext_id + "'");
    index[f.ext_id] = static_cast<int>(faces.size());
    faces.push_back(std::move(f));
  }
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto& jf = j["faces"][i];
    if (!jf.contains("covers")) continue;
    for (const auto& jc : jf["covers"]) {
      std::string cid = id_str(jc);
      auto it = index.find(cid);
      if (it == index.end())
        throw InputError("cover id '" + cid + "' does not name a poset face");
      faces[i].covers.push_back(it->second);
    }
  }
  SimplicialPoset poset = SimplicialPoset::from_faces(std::move(faces));
  if (!j.contains("gamma")) return PosetPair::whole(std::move(poset));
  if (!j["gamma"].is_array()) throw InputError("\"gamma\" must be an array of face ids");
  std::vector<int> gamma;
  for (const auto& jg : j["gamma"]) {
    int idx = poset.face_index(id_str(jg));
    if (idx < 0) throw InputError("gamma id '" + id_str(jg) + "' does not name a poset face");
    gamma.push_back(idx);
  }
  return PosetPair::with_ideal(std::move(poset), gamma);
}

PosetPair read_poset_pair_file(const std::string& path) {
  auto in = open_input(path);
  return read_poset_pair_json(in);
}

void write_poset_pair_json(std::ostream& out, const PosetPair& p) {
  nlohmann::json j;
  j["faces"] = nlohmann::json::array();
  for (int i = 0; i < p.delta.size(); ++i) {
    const PosetFace& f = p.delta.face(i);
    nlohmann::json jf;
    jf["id"] = f.ext_id;
    jf["rank"] = f.rank;
    jf["covers"] = nlohmann::json::array();
    for (int c : f.covers) jf["covers"].push_back(p.delta.face(c).ext_id);
    j["faces"].push_back(std::move(jf));
  }
  if (p.gamma_has_min) {
    j["gamma"] = nlohmann::json::array();
    for (int i = 0; i < p.delta.size(); ++i)
      if (p.gamma[static_cast<std::size_t>(i)]) j["gamma"].push_back(p.delta.face(i).ext_id);
  }
  out << j.dump(2) << '\n';
}

nlohmann::json certificate_json(const Certificate& c) {
  nlohmann::json j = nlohmann::json::object();
  if (c.m) j["m"] = *c.m;
  if (c.b1) j["b1"] = *c.b1;
  if (c.g2) j["g2"] = *c.g2;
  j["trace"] = c.trace;
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  Certificate c;
  if (j.contains("m")) c.m = j["m"].get<std::int64_t>();
  if (j.contains("b1")) c.b1 = j["b1"].get<std::int64_t>();
  if (j.contains("g2")) c.g2 = j["g2"].get<std::int64_t>();
  if (j.contains("trace"))
    for (const auto& t : j["trace"]) c.trace.push_back(t.get<std::string>());
  return c;
}

}  // namespace mulab
