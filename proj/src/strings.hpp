#ifndef SEMINF_SRC_STRINGS_HPP
#define SEMINF_SRC_STRINGS_HPP

#include <sstream>
#include <string>

namespace seminf {

template <class... Parts>
std::string concat(const Parts&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

}  // namespace seminf

#endif  // SEMINF_SRC_STRINGS_HPP
