#include "skewverify/spec_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace skewverify {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

class Reader {
 public:
  Reader(const json& doc, std::string origin) : doc_(doc), origin_(std::move(origin)) {}

  [[noreturn]] void fail(const std::string& where, const std::string& what) const {
    throw ValidationError(origin_ + ": " + where + ": " + what);
  }

  const json& field(const std::string& key) const {
    if (!doc_.contains(key)) fail(key, "missing");
    return doc_.at(key);
  }

  Scalar scalar(const json& v, const Field& f, const std::string& where) const {
    try {
      if (v.is_string()) return f.parse(v.get<std::string>());
      if (v.is_number_integer()) return f.from_int(v.get<long long>());
    } catch (const std::exception& e) {
      fail(where, e.what());
    }
    fail(where, "expected a scalar string or integer, got " + v.dump());
  }

  std::vector<Scalar> vector(const json& v, std::size_t n, const Field& f, const std::string& where) const {
    if (!v.is_array()) fail(where, "expected an array");
    if (v.size() != n) fail(where, "expected " + std::to_string(n) + " scalars, got " + std::to_string(v.size()));
    std::vector<Scalar> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(scalar(v[k], f, where + "[" + std::to_string(k) + "]"));
    return out;
  }

  // rows × cols table; column c of the map is row c of the table
  LinMap table(const std::string& key, std::size_t nrows, std::size_t ncols, const Space& dom, const Space& cod,
               const Field& f) const {
    const json& v = field(key);
    if (!v.is_array() || v.size() != nrows) {
      fail(key, "expected " + std::to_string(nrows) + " rows");
    }
    std::vector<Triplet> ts;
    for (std::size_t c = 0; c < nrows; ++c) {
      auto row = vector(v[c], ncols, f, key + "[" + std::to_string(c) + "]");
      for (std::size_t r = 0; r < ncols; ++r) {
        if (!row[r].is_zero()) ts.push_back({r, c, row[r]});
      }
    }
    return LinMap::from_triplets(dom, cod, f, std::move(ts));
  }

  LinMap functional(const std::string& key, std::size_t n, const Space& dom, const Field& f) const {
    auto row = vector(field(key), n, f, key);
    std::vector<Triplet> ts;
    for (std::size_t c = 0; c < n; ++c) {
      if (!row[c].is_zero()) ts.push_back({0, c, row[c]});
    }
    return LinMap::from_triplets(dom, Space::unit(), f, std::move(ts));
  }

 private:
  const json& doc_;
  std::string origin_;
};

}  // namespace

Cobraiding BialgebraSpec::cobraiding() const {
  if (!r) throw ValidationError(name + ": no cobraiding table r");
  if (rbar) return Cobraiding{*r, *rbar};
  try {
    return make_cobraiding(bialgebra, *r);
  } catch (const NotInvertible& e) {
    throw ValidationError(name + ": r has no convolution inverse");
  }
}

BialgebraSpec parse_spec_text(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what(), line, col);
  }
  if (!doc.is_object()) throw ValidationError(origin + ": top level must be an object");
  Reader rd(doc, origin);

  const json& fd = rd.field("field");
  if (!fd.is_object() || !fd.contains("kind") || !fd["kind"].is_string()) rd.fail("field", "expected {\"kind\": ...}");
  std::optional<Field> field;
  const std::string kind = fd["kind"].get<std::string>();
  if (kind == "rational") {
    field = Field::rational();
  } else if (kind == "prime") {
    if (!fd.contains("p") || !fd["p"].is_number_unsigned()) rd.fail("field.p", "expected a positive integer");
    try {
      field = Field::prime(fd["p"].get<std::uint64_t>());
    } catch (const std::invalid_argument& e) {
      rd.fail("field.p", e.what());
    }
  } else {
    rd.fail("field.kind", "unknown kind '" + kind + "'");
  }
  const Field f = *field;

  const json& dj = rd.field("dim");
  if (!dj.is_number_unsigned() || dj.get<std::size_t>() == 0) rd.fail("dim", "expected a positive integer");
  const std::size_t n = dj.get<std::size_t>();
  if (n > 64) rd.fail("dim", "at most 64 supported");

  std::string name = doc.value("name", origin);
  std::vector<std::string> basis;
  if (doc.contains("basis")) {
    const json& bj = doc["basis"];
    if (!bj.is_array() || bj.size() != n) rd.fail("basis", "expected " + std::to_string(n) + " names");
    for (const auto& x : bj) {
      if (!x.is_string()) rd.fail("basis", "names must be strings");
      basis.push_back(x.get<std::string>());
    }
  } else {
    for (std::size_t k = 0; k < n; ++k) basis.push_back("e" + std::to_string(k));
  }

  const Space B = Space::generator("B", n, basis);
  const Space K = Space::unit();
  const Space BB = B * B;
  LinMap mu = rd.table("mu", n * n, n, BB, B, f);
  LinMap delta = rd.table("delta", n, n * n, B, BB, f);
  LinMap eps = rd.functional("eps", n, B, f);
  auto eta_v = rd.vector(rd.field("eta"), n, f, "eta");
  std::vector<Triplet> eta_t;
  for (std::size_t k = 0; k < n; ++k) {
    if (!eta_v[k].is_zero()) eta_t.push_back({k, 0, eta_v[k]});
  }
  std::optional<LinMap> r, rbar;
  if (doc.contains("r")) r = rd.functional("r", n * n, BB, f);
  if (doc.contains("rbar")) {
    if (!r) rd.fail("rbar", "given without r");
    rbar = rd.functional("rbar", n * n, BB, f);
  }
  return BialgebraSpec{std::move(name), std::move(basis),
                       Bialgebra{B, mu, LinMap::from_triplets(K, B, f, std::move(eta_t)), delta, eps}, r, rbar};
}

BialgebraSpec parse_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read spec file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec_text(ss.str(), path);
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"trivial", "z2_sign", "z4_f5", "s3_flip", "sweedler_lambda1"};
  return names;
}

std::string fixture_dir() {
  if (const char* env = std::getenv("SKEWVERIFY_FIXTURES")) return env;
  return SKEWVERIFY_FIXTURE_DIR;
}

std::string fixture_path(const std::string& name) { return fixture_dir() + "/" + name + ".json"; }

}  // namespace skewverify
