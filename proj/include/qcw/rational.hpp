#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qcw {

// Exact rational scalar used for all linear algebra over the ground field.
using Rat = mpq_class;

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long long to_ll(const Rat& r) {
  if (!is_integer(r)) throw std::domain_error("to_ll: rational is not an integer: " + r.get_str());
  if (!r.get_num().fits_slong_p()) throw std::overflow_error("to_ll: integer too large: " + r.get_str());
  return r.get_num().get_si();
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace qcw
