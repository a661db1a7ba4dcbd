#pragma once

#include <stdexcept>
#include <string>

#include "qgal/ncelement.hpp"
#include "qgal/presentation.hpp"

namespace qgal {

// Raised on malformed expression input; `pos` is the 0-based character
// offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg), pos_(pos) {}
  size_t pos() const { return pos_; }

 private:
  size_t pos_;
};

// Grammar (explicit '*' everywhere; juxtaposition is not multiplication):
//   expr       := ['-'] term (('+'|'-') term)*
//   term       := product
//   product    := factor ('*' factor)*
//   factor     := atom ('^' ['-'] INT)?
//   atom       := INT ('/' INT)? | NAME | '(' expr ')'
// NAME is a generator of the presentation or one of the scalar symbols
// a, alpha, beta, gamma, E. A negative exponent is only accepted on a.
NCElement parse_element(const std::string& text, const Presentation& pres);

// Same grammar extended with '@' between products inside a term:
//   term := product '@' product
// Both slots must be written explicitly in every term.
Tensor2 parse_tensor(const std::string& text, const Presentation& pres);

}  // namespace qgal
