#include "supchev/scalar.hpp"

#include <sstream>

namespace supchev {

std::string Scalar::str() const {
  if (b_ == 0) return a_.str();
  std::ostringstream os;
  bool head = false;
  if (a_ != 0) { os << a_.str(); head = true; }
  if (b_ == 1) os << (head ? "+" : "");
  else if (b_ == -1) os << "-";
  else {
    if (head && b_ > 0) os << "+";
    os << b_.str() << "*";
  }
  os << "s2";
  return os.str();
}

} // namespace supchev
