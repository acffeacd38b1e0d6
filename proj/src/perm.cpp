#include "desc/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "desc/errors.hpp"

namespace desc {

Permutation Permutation::identity(int degree) {
  Permutation p;
  p.degree = degree;
  p.images.resize(degree);
  for (int i = 0; i < degree; ++i) p.images[i] = (uint8_t)i;
  return p;
}

Permutation Permutation::compose(const Permutation& other) const {
  Permutation r;
  r.degree = degree;
  r.images.resize(degree);
  for (int x = 0; x < degree; ++x) r.images[x] = images[other.images[x]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.degree = degree;
  r.images.resize(degree);
  for (int x = 0; x < degree; ++x) r.images[images[x]] = (uint8_t)x;
  return r;
}

int Permutation::sign() const {
  std::vector<bool> seen(degree, false);
  int cycles = 0;
  for (int i = 0; i < degree; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = images[j]) seen[j] = true;
  }
  return ((degree - cycles) % 2 == 0) ? 1 : -1;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree; ++i)
    if (images[i] != i) return false;
  return true;
}

bool Permutation::operator<(const Permutation& o) const {
  return images < o.images;
}

uint64_t Permutation::key() const {
  if (degree > kMaxPackedDegree) fail(Err::DegreeTooLarge, "packed keys require degree <= 16");
  uint64_t k = 0;
  for (int i = 0; i < degree; ++i) k = (k << 4) | images[i];
  return k;
}

Permutation Permutation::from_key(uint64_t key, int degree) {
  Permutation p;
  p.degree = degree;
  p.images.resize(degree);
  for (int i = degree - 1; i >= 0; --i) {
    p.images[i] = key & 0xF;
    key >>= 4;
  }
  return p;
}

std::string Permutation::cycle_string() const {
  std::vector<bool> seen(degree, false);
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < degree; ++i) {
    if (seen[i] || images[i] == i) {
      seen[i] = true;
      continue;
    }
    any = true;
    out << '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << (j + 1);
      first = false;
      j = images[j];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation Permutation::parse_cycles(const std::string& text, int degree) {
  Permutation result = Permutation::identity(degree);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  };
  skip_ws();
  std::vector<Permutation> cycles;
  while (pos < text.size()) {
    if (text[pos] != '(') fail(Err::ParseError, "expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<int> pts;
    while (true) {
      skip_ws();
      if (pos >= text.size()) fail(Err::ParseError, "unterminated cycle: " + text);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit((unsigned char)text[pos]))
        fail(Err::ParseError, "expected point in cycle notation: " + text);
      int v = 0;
      while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
      }
      if (v < 1 || v > degree)
        fail(Err::IndexOutOfRange, "cycle point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      pts.push_back(v - 1);
    }
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j)
        if (pts[i] == pts[j]) fail(Err::ParseError, "repeated point in cycle: " + text);
    Permutation c = Permutation::identity(degree);
    for (size_t i = 0; i < pts.size(); ++i) c.images[pts[i]] = (uint8_t)pts[(i + 1) % pts.size()];
    cycles.push_back(c);
    skip_ws();
  }
  // Cycles multiply as group elements, so the rightmost factor acts first:
  // result = c1 . c2 ... ck composed right to left.
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) result = it->compose(result);
  return result;
}

}  // namespace desc
