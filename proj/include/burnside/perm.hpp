#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace burnside::perm {

// A permutation of {0,...,n-1} in one-line form: p[i] is the image of i.
using Perm = std::vector<int>;

Perm identity(int n);
bool is_perm(const Perm& p);

// compose(f, g) applies g first: (f∘g)(i) = f[g[i]].
Perm compose(const Perm& f, const Perm& g);
Perm inverse(const Perm& p);

std::int64_t factorial(int n);

// Lexicographic rank of a permutation among all permutations of the same
// length, and its inverse. The identity has rank 0.
std::int64_t lex_rank(const Perm& p);
Perm lex_unrank(int n, std::int64_t rank);

// Cycle notation with 1-based points, e.g. "(1 2)(3 4 5)". Several
// generators may be separated by commas or semicolons. Whitespace is free.
std::vector<Perm> parse_cycles(const std::string& text, int points);
std::string cycle_string(const Perm& p);

}  // namespace burnside::perm
