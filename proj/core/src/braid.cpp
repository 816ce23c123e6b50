#include "skewverify/braid.hpp"

#include <cstdlib>
#include <sstream>

namespace skewverify {

namespace {

void push_reduced(std::vector<int>& w, int x) {
  if (!w.empty() && w.back() == -x) {
    w.pop_back();
  } else {
    w.push_back(x);
  }
}

void append_image(std::vector<int>& out, const std::vector<int>& img, bool inverted) {
  if (!inverted) {
    for (int x : img) push_reduced(out, x);
  } else {
    for (auto it = img.rbegin(); it != img.rend(); ++it) push_reduced(out, -*it);
  }
}

// ψ(x_j) for a single letter, as a word in x's.
std::vector<int> letter_image(const BraidLetter& l, int j) {
  const int i = static_cast<int>(l.index);
  if (l.sign > 0) {
    if (j == i) return {i, i + 1, -i};
    if (j == i + 1) return {i};
  } else {
    if (j == i) return {i + 1};
    if (j == i + 1) return {-(i + 1), i, i + 1};
  }
  return {j};
}

}  // namespace

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> im(n);
  for (std::size_t p = 0; p < n; ++p) im[p] = p + 1;
  return Permutation(std::move(im));
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v == 0 || v > images_.size() || seen[v - 1]) throw BraidError("not a permutation: " + to_string());
    seen[v - 1] = true;
  }
}

bool Permutation::is_identity() const { return *this == identity(size()); }

Permutation Permutation::inverse() const {
  std::vector<std::size_t> im(size());
  for (std::size_t p = 0; p < size(); ++p) im[images_[p] - 1] = p + 1;
  return Permutation(std::move(im));
}

Permutation Permutation::then(const Permutation& o) const {
  if (o.size() != size()) throw StrandMismatch("composing permutations of different sizes");
  std::vector<std::size_t> im(size());
  for (std::size_t p = 0; p < size(); ++p) im[p] = o.images_[images_[p] - 1];
  return Permutation(std::move(im));
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t p = 0; p < images_.size(); ++p) out += (p ? " " : "") + std::to_string(images_[p]);
  return out + "]";
}

BraidWord::BraidWord(std::size_t strands, const std::vector<BraidLetter>& letters) : strands_(strands) {
  for (const auto& l : letters) {
    if (l.index < 1 || l.index + 1 > strands || (l.sign != 1 && l.sign != -1)) {
      throw BraidError("generator σ" + std::to_string(l.index) + " out of range for " + std::to_string(strands) +
                       " strands");
    }
    if (!letters_.empty() && letters_.back().index == l.index && letters_.back().sign == -l.sign) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

BraidWord BraidWord::from_signed(std::size_t strands, const std::vector<int>& letters) {
  std::vector<BraidLetter> ls;
  ls.reserve(letters.size());
  for (int x : letters) {
    if (x == 0) throw BraidError("0 is not a generator");
    ls.push_back({static_cast<std::size_t>(std::abs(x)), x > 0 ? 1 : -1});
  }
  return BraidWord(strands, ls);
}

BraidWord BraidWord::generator(std::size_t strands, std::size_t i, int sign) {
  return BraidWord(strands, {{i, sign}});
}

BraidWord BraidWord::inverse() const {
  BraidWord out(strands_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back({it->index, -it->sign});
  out.b1_ = b1_;
  return out;
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
  if (o.strands_ != strands_) {
    throw StrandMismatch("B" + std::to_string(strands_) + " vs B" + std::to_string(o.strands_));
  }
  std::vector<BraidLetter> ls = letters_;
  ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
  BraidWord out(strands_, ls);
  out.b1_ = b1_ && o.b1_;
  return out;
}

std::string BraidWord::to_string() const {
  std::string out = std::to_string(strands_) + ":";
  for (const auto& l : letters_) out += " " + std::to_string(l.sign * static_cast<long long>(l.index));
  return out;
}

BraidWord BraidWord::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw BraidError("braid word needs 'strands:' prefix: " + std::string(text));
  std::istringstream head{std::string(text.substr(0, colon))};
  long long n = -1;
  if (!(head >> n) || n < 0 || !(head >> std::ws).eof()) throw BraidError("bad strand count in: " + std::string(text));
  std::istringstream body{std::string(text.substr(colon + 1))};
  std::vector<int> ls;
  std::string tok;
  while (body >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok.empty()) throw BraidError("bad letter '" + tok + "' in: " + std::string(text));
    ls.push_back(v);
  }
  return from_signed(static_cast<std::size_t>(n), ls);
}

std::vector<std::vector<int>> artin_images(const BraidWord& u) {
  const std::size_t n = u.strands();
  std::vector<std::vector<int>> img(n);
  for (std::size_t j = 0; j < n; ++j) img[j] = {static_cast<int>(j + 1)};
  // φ ← φ∘ψ_l, so the result is ψ_{l₁}∘…∘ψ_{l_k}
  for (const auto& l : u.letters()) {
    const std::size_t i = l.index - 1;
    std::vector<int> a, b;
    for (int x : letter_image(l, static_cast<int>(i + 1))) append_image(a, img[std::abs(x) - 1], x < 0);
    for (int x : letter_image(l, static_cast<int>(i + 2))) append_image(b, img[std::abs(x) - 1], x < 0);
    img[i] = std::move(a);
    img[i + 1] = std::move(b);
  }
  return img;
}

bool braid_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) {
    throw StrandMismatch("B" + std::to_string(u.strands()) + " vs B" + std::to_string(v.strands()));
  }
  if (u == v) return true;
  return artin_images(u) == artin_images(v);
}

Permutation braid_to_perm(const BraidWord& u) {
  // pos[k] = strand at position k; follow strands left to right
  std::vector<std::size_t> at(u.strands());
  for (std::size_t k = 0; k < at.size(); ++k) at[k] = k;
  for (const auto& l : u.letters()) std::swap(at[l.index - 1], at[l.index]);
  std::vector<std::size_t> im(at.size());
  for (std::size_t k = 0; k < at.size(); ++k) im[at[k]] = k + 1;
  return Permutation(std::move(im));
}

Permutation perm_subst(const Permutation& s, const std::vector<Permutation>& parts) {
  if (parts.size() != s.size()) {
    throw ArityMismatch(std::to_string(parts.size()) + " parts for arity " + std::to_string(s.size()));
  }
  // bundle i starts at offset start[i]; it lands at block position s(i)
  const std::size_t n = s.size();
  std::vector<std::size_t> start(n, 0), target(n, 0);
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    start[i] = total;
    total += parts[i].size();
  }
  const Permutation inv = s.inverse();
  std::size_t off = 0;
  for (std::size_t q = 1; q <= n; ++q) {
    const std::size_t i = inv(q) - 1;
    target[i] = off;
    off += parts[i].size();
  }
  std::vector<std::size_t> im(total);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 1; k <= parts[i].size(); ++k) im[start[i] + k - 1] = target[i] + parts[i](k);
  }
  return Permutation(std::move(im));
}

BraidWord operad_subst(const BraidWord& s, const std::vector<BraidWord>& parts) {
  if (parts.size() != s.strands()) {
    throw ArityMismatch(std::to_string(parts.size()) + " parts for B" + std::to_string(s.strands()));
  }
  std::size_t total = 0;
  std::vector<std::size_t> size(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) total += size[i] = parts[i].strands();

  std::vector<BraidLetter> out;
  std::size_t off = 0;
  for (const auto& t : parts) {
    for (const auto& l : t.letters()) out.push_back({l.index + off, l.sign});
    off += t.strands();
  }
  for (const auto& l : s.letters()) {
    const std::size_t i = l.index - 1;
    std::size_t p = 0;
    for (std::size_t k = 0; k < i; ++k) p += size[k];
    // σ⁻¹ from (a, b) undoes σ from (b, a)
    const std::size_t a = l.sign > 0 ? size[i] : size[i + 1], b = l.sign > 0 ? size[i + 1] : size[i];
    // bundle a crosses bundle b: ∏_{r=a−1..0} σ_{p+r+1}…σ_{p+r+b}
    std::vector<BraidLetter> crossing;
    for (std::size_t r = a; r-- > 0;) {
      for (std::size_t c = 1; c <= b; ++c) crossing.push_back({p + r + c, 1});
    }
    if (l.sign > 0) {
      out.insert(out.end(), crossing.begin(), crossing.end());
    } else {
      for (auto it = crossing.rbegin(); it != crossing.rend(); ++it) out.push_back({it->index, -1});
    }
    std::swap(size[i], size[i + 1]);
  }
  BraidWord w(total, out);
  if (s.in_b1() && !parts.empty() && parts[0].in_b1()) {
    bool avoids_one = true;
    for (const auto& l : w.letters()) avoids_one = avoids_one && l.index != 1;
    w.b1_ = avoids_one;
  }
  return w;
}

BraidWord b1_word(const std::vector<int>& letters, std::size_t n) {
  for (int x : letters) {
    if (std::abs(x) == 1) throw UsesGeneratorOne("σ1 is not in B¹" + std::to_string(n));
  }
  BraidWord w = BraidWord::from_signed(n, letters);
  w.b1_ = true;
  return w;
}

}  // namespace skewverify
