#include "qgal/coeffpoly.hpp"

#include <sstream>

namespace qgal {

namespace {

const char* var_name(int v, bool unicode) {
  switch (v) {
    case CoeffPoly::A:
      return "a";
    case CoeffPoly::Alpha:
      return unicode ? "α" : "alpha";
    case CoeffPoly::Beta:
      return unicode ? "β" : "beta";
    case CoeffPoly::Gamma:
      return unicode ? "γ" : "gamma";
    case CoeffPoly::E:
      return "E";
    default:
      return "?";
  }
}

}  // namespace

std::string CoeffPoly::to_string(bool unicode) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    Rat mag = c;
    if (first) {
      if (sgn(c) < 0) {
        os << "-";
        mag = -c;
      }
    } else {
      if (sgn(c) < 0) {
        os << " - ";
        mag = -c;
      } else {
        os << " + ";
      }
    }
    bool has_vars = key != Key{};
    bool coeff_printed = false;
    if (!has_vars || mag != Rat(1)) {
      os << qgal::to_string(mag);
      coeff_printed = true;
    }
    if (has_vars) {
      bool first_var = !coeff_printed;
      for (int v = 0; v < kNumVars; ++v) {
        if (key[v] == 0) continue;
        if (!first_var) os << "*";
        first_var = false;
        os << var_name(v, unicode);
        if (key[v] != 1) os << "^" << key[v];
      }
    }
    first = false;
  }
  return os.str();
}

}  // namespace qgal
