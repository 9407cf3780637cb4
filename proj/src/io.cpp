#include "tanglesig/io.hpp"

#include <fstream>

#include "tanglesig/error.hpp"

namespace tanglesig::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

cplx parse_entry(const json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return {e[0].get<double>(), e[1].get<double>()};
  }
  fail("matrix entries must be numbers or [re, im] pairs");
}

std::vector<int> parse_sign_key(const std::string& key) {
  std::vector<int> eps;
  for (char ch : key) {
    if (ch == '+')
      eps.push_back(1);
    else if (ch == '-')
      eps.push_back(-1);
    else
      fail("sign vector keys use only '+' and '-': " + key);
  }
  return eps;
}

}  // namespace

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(path + ": " + e.what());
  }
}

CMatrix parse_matrix(const json& j) {
  if (!j.is_array()) fail("matrix must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (rows == 0) return CMatrix(0, 0);
  if (!j[0].is_array()) fail("matrix rows must be arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) fail("ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = parse_entry(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

json matrix_to_json(const CMatrix& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    out.push_back(row);
  }
  return out;
}

ColouredObject parse_object(const json& j) {
  try {
    return ColouredObject(as_int(field(j, "mu"), "mu"), int_list(field(j, "colours"), "colours"));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    fail(e.what());
  }
}

bool is_braid_document(const json& j) { return j.is_object() && j.contains("word"); }

ColouredBraid parse_braid(const json& j) {
  ColouredObject c = parse_object(j);
  try {
    return ColouredBraid(std::move(c), int_list(field(j, "word"), "word"));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    fail(e.what());
  }
}

TangleWord parse_tangle(const json& j) {
  if (is_braid_document(j)) return TangleWord::from_braid(parse_braid(j));
  ColouredObject c = parse_object(j);
  const json& list = field(j, "slices");
  if (!list.is_array()) fail("slices must be an array");
  std::vector<Slice> slices;
  for (const auto& s : list) {
    const std::string kind = field(s, "kind").is_string() ? s.at("kind").get<std::string>() : "";
    const int pos = as_int(field(s, "pos"), "pos");
    if (kind == "crossing") {
      slices.push_back(Slice::crossing(pos, as_int(field(s, "sign"), "sign")));
    } else if (kind == "cup") {
      const json& up = field(s, "up");
      if (!up.is_boolean()) fail("up must be a boolean");
      slices.push_back(Slice::cup(pos, as_int(field(s, "colour"), "colour"), up.get<bool>()));
    } else if (kind == "cap") {
      slices.push_back(Slice::cap(pos));
    } else {
      fail("unknown slice kind \"" + kind + "\"");
    }
  }
  try {
    return TangleWord(std::move(c), std::move(slices));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    fail(e.what());
  }
}

json tangle_to_json(const TangleWord& t) {
  json slices = json::array();
  for (const auto& s : t.slices()) {
    switch (s.kind) {
      case Slice::Kind::Crossing:
        slices.push_back({{"kind", "crossing"}, {"pos", s.pos}, {"sign", s.sign}});
        break;
      case Slice::Kind::Cup:
        slices.push_back({{"kind", "cup"}, {"pos", s.pos}, {"colour", s.colour}, {"up", s.up}});
        break;
      case Slice::Kind::Cap:
        slices.push_back({{"kind", "cap"}, {"pos", s.pos}});
        break;
    }
  }
  return {{"mu", t.source().mu}, {"colours", t.source().entries}, {"slices", slices}};
}

SeifertData parse_seifert(const json& j) {
  SeifertData d{parse_matrix(field(j, "A"))};
  if (d.A.rows() != d.A.cols()) fail("Seifert matrix must be square");
  return d;
}

CComplexData parse_ccomplex(const json& j) {
  CComplexData d;
  d.mu = as_int(field(j, "mu"), "mu");
  if (d.mu < 1) fail("mu must be positive");
  const json& mats = field(j, "matrices");
  if (!mats.is_object()) fail("matrices must be an object keyed by sign vectors");
  for (const auto& [key, value] : mats.items()) {
    auto eps = parse_sign_key(key);
    if (eps.size() != static_cast<std::size_t>(d.mu)) fail("sign vector " + key + " has wrong length");
    d.matrices[eps] = parse_matrix(value);
  }
  d.validate();
  return d;
}

ClosureData parse_closure(const json& j) {
  if (j.is_object() && j.contains("A")) return parse_seifert(j);
  if (j.is_object() && j.contains("matrices")) return parse_ccomplex(j);
  fail("closure fixture needs \"A\" or \"matrices\"");
}

}  // namespace tanglesig::io
