#include "burnside/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "burnside/error.hpp"

namespace burnside::perm {

Perm identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

bool is_perm(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Perm compose(const Perm& f, const Perm& g) {
  Perm r(g.size());
  for (size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::int64_t lex_rank(const Perm& p) {
  const int n = static_cast<int>(p.size());
  std::int64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    rank += smaller * factorial(n - 1 - i);
  }
  return rank;
}

Perm lex_unrank(int n, std::int64_t rank) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  Perm p(n);
  for (int i = 0; i < n; ++i) {
    const std::int64_t f = factorial(n - 1 - i);
    const int idx = static_cast<int>(rank / f);
    rank %= f;
    p[i] = pool[idx];
    pool.erase(pool.begin() + idx);
  }
  return p;
}

std::vector<Perm> parse_cycles(const std::string& text, int points) {
  std::vector<Perm> gens;
  Perm current = identity(points);
  bool haveCurrent = false;
  size_t i = 0;
  auto flush = [&]() {
    if (haveCurrent) {
      gens.push_back(current);
      current = identity(points);
      haveCurrent = false;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == ',' || c == ';') {
      flush();
      ++i;
      continue;
    }
    if (c != '(') throw InputError("expected '(' in cycle expression: " + text);
    const size_t close = text.find(')', i);
    if (close == std::string::npos) throw InputError("unbalanced '(' in cycle expression");
    std::istringstream body(text.substr(i + 1, close - i - 1));
    std::vector<int> cyc;
    int v;
    while (body >> v) {
      if (v < 1 || v > points)
        throw InputError("cycle point out of range: " + std::to_string(v));
      cyc.push_back(v - 1);
    }
    // cycles within one parenthesized string multiply into one generator
    Perm cp = identity(points);
    for (size_t k = 0; k < cyc.size(); ++k)
      cp[cyc[k]] = cyc[(k + 1) % cyc.size()];
    current = compose(cp, current);
    haveCurrent = true;
    i = close + 1;
  }
  flush();
  return gens;
}

std::string cycle_string(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace burnside::perm
