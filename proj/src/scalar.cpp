#include "summandlab/scalar.hpp"

#include "summandlab/errors.hpp"

namespace summandlab {

Scalar parse_scalar(const std::string& text) {
  try {
    Scalar q(text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw AlgebraError(Errc::SyntaxError, "invalid rational literal: " + text);
  }
}

std::string to_string(const Scalar& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

}  // namespace summandlab
