#include "ewkit/certificate.hpp"

namespace ewkit {

void Certificate::write(std::ostream& os) const {
  os << "property=" << property << "\n";
  os << "pass=" << (pass ? "true" : "false") << "\n";
  for (const auto& [key, value] : fields) os << key << "=" << value << "\n";
  os << "\n";
}

}  // namespace ewkit
