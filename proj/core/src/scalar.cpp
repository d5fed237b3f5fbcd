#include "bicross/scalar.hpp"

namespace bicross {

std::string rational_str(const Rational& q) { return q.get_str(); }

std::string Scalar::str() const {
  if (im_ == 0) return re_.get_str();
  std::string s;
  if (re_ != 0) s += re_.get_str();
  if (im_ > 0 && re_ != 0) s += "+";
  if (im_ == -1) {
    s += "-";
  } else if (im_ != 1) {
    s += im_.get_str();
  }
  s += "i";
  return s;
}

}  // namespace bicross
