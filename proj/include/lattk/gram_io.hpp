#pragma once

#include <string>
#include <vector>

#include "lattk/intmat.hpp"

namespace lattk {

// JSON lattice file: {"rank": n, "gram": [[...]], "labels": [...]};
// entries are JSON integers or canonical "p/q" strings. Floating point and
// non-canonical fractions are rejected with a diagnostic.
struct GramFile {
  std::size_t rank = 0;
  RatMat gram;
  std::vector<std::string> labels;  // empty or rank entries

  bool is_integral() const { return gram.is_integral(); }
};

// strict "p" or "p/q": canonical, positive denominator > 1
Rat parse_rational_string(const std::string& s);

GramFile parse_gram_file(const std::string& text);
std::string serialize_gram_file(const GramFile& f);

// builtin export table: U, E8minus, K3, Mukai, PicSP, TwistedAlg, TX
const std::vector<std::string>& exportable_names();
GramFile builtin_gram_file(const std::string& name);

}  // namespace lattk
