#pragma once

#include <map>
#include <string>
#include <vector>

#include "twistgen/catalog.hpp"

namespace twistgen {

struct Factor {
    std::string gen;
    int exp = 1;
    bool operator==(const Factor&) const = default;
};

// Freely reduced word over the generator alphabet; rightmost factor acts
// first, matching the composition convention of the source text.
struct Word {
    std::vector<Factor> factors;
    bool operator==(const Word&) const = default;
    bool empty() const { return factors.empty(); }
};

Word reduce_word(const std::vector<Factor>& factors);
Word multiply(const Word& u, const Word& v);
Word inverse(const Word& u);
Word conjugate(const Word& u, const Word& by);  // by * u * by^-1
Word word_power(const Word& u, int e);
std::string print_word(const Word& w);

struct MacroTable {
    std::string scope;                 // suite identifier
    std::map<std::string, Word> defs;  // macro name -> replacement (may reference other macros)
};

// Grammar: word := term ("*" term)*; term := ident ("^" int)? | "(" word ")".
// Macro names expand recursively; cycles are rejected.
Word parse_word(const std::string& text, const MacroTable& macros = {});

// Named composite elements of the per-theorem proofs, with theorem scope.
// Suite identifiers: g12, r-odd, r-even, odd-4k1, odd-4k1-tau, odd-4k3,
// g7, g5g9, gensets-even, gensets-odd, g10, g8, g6.
MacroTable builtin_macros(const std::string& suite, const SurfaceParams& params);

}  // namespace twistgen
