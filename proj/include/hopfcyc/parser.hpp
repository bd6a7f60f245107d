#pragma once

#include "hopfcyc/hopf.hpp"

#include <stdexcept>
#include <string>

namespace hc {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

// texpr   := ['-'] tterm (('+'|'-') tterm)*
// tterm   := product ('#' product)*
// product := factor ('*' factor)*
// factor  := rational | primary ['^' nat]
// primary := '(' texpr ')' | generator | '1'
// Generators are whatever the slot algebra accepts: X, Y, Z, d<k>, s, s^-<k>, dT[...].
Tensor parse_tensor(const HopfAlgebra& H, const std::string& text);
Tensor parse_tensor(const Slots& slots, const std::string& text);
Elem parse_element(const HopfAlgebra& H, const std::string& text);

}  // namespace hc
