#include "skewverify/skewmon.hpp"

#include <random>

namespace skewverify {

ProbeFamily::ProbeFamily(std::array<std::size_t, 4> dims, Space unit) : dims_(dims), unit_(std::move(unit)) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (dims[i] == 0) throw ShapeError("probe dimensions must be at least 1");
    std::vector<std::string> basis;
    for (std::size_t k = 0; k < dims[i]; ++k) basis.push_back("p" + std::to_string(i + 1) + "_" + std::to_string(k));
    gens_.push_back(Space::generator("P" + std::to_string(i + 1), dims[i], basis));
  }
}

std::vector<std::array<Space, 4>> ProbeFamily::quadruples() const {
  const std::vector<Space> pool = {gens_[1], gens_[2], gens_[3], unit_};
  std::vector<std::array<Space, 4>> out;
  for (const Space& x : {gens_[0], unit_}) {
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = 0; b < 4; ++b) {
        for (std::size_t c = 0; c < 4; ++c) {
          if ((a == b && a != 3) || (a == c && a != 3) || (b == c && b != 3)) continue;
          out.push_back({x, pool[a], pool[b], pool[c]});
        }
      }
    }
  }
  return out;
}

std::vector<std::array<Space, 3>> ProbeFamily::triples() const {
  const std::vector<Space> pool = {gens_[1], gens_[2], unit_};
  std::vector<std::array<Space, 3>> out;
  for (const Space& x : {gens_[0], unit_}) {
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = 0; b < 3; ++b) {
        if (a == b && a != 2) continue;
        out.push_back({x, pool[a], pool[b]});
      }
    }
  }
  return out;
}

std::vector<std::array<Space, 2>> ProbeFamily::pairs() const {
  std::vector<std::array<Space, 2>> out;
  for (const Space& a : {gens_[0], unit_}) {
    for (const Space& b : {gens_[1], unit_}) out.push_back({a, b});
  }
  return out;
}

std::string ProbeFamily::name(const Space& s) const { return s == unit_ ? "I" : s.to_string(); }

std::string ProbeFamily::describe(const std::vector<std::string>& roles, const std::vector<Space>& objs) const {
  std::string out;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    if (i) out += ' ';
    out += roles[i] + "=" + name(objs[i]);
  }
  return out;
}

std::vector<std::string> ProbeFamily::summary() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(g.to_string() + ":dim " + std::to_string(g.dim()));
  out.push_back("quadruples:" + std::to_string(quadruples().size()));
  out.push_back("triples:" + std::to_string(triples().size()));
  out.push_back("pairs:" + std::to_string(pairs().size()));
  return out;
}

LinMap random_map(std::uint64_t seed, const Space& dom, const Space& cod, Field field) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-2, 2);
  LinMap::Builder b(dom, cod, field);
  for (std::size_t j = 0; j < dom.dim(); ++j) {
    for (std::size_t i = 0; i < cod.dim(); ++i) b.add(i, field.from_int(d(rng)));
    b.finish_column();
  }
  return std::move(b).build();
}

}  // namespace skewverify
