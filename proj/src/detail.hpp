#ifndef EVIDENCE_SRC_DETAIL_HPP
#define EVIDENCE_SRC_DETAIL_HPP

#include <sstream>
#include <string>

namespace evidence::detail {

// Short round-trippable-enough rendering for messages.
inline std::string num(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace evidence::detail

#endif  // EVIDENCE_SRC_DETAIL_HPP
