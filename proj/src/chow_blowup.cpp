#include "charnum/chow_blowup.hpp"

#include <array>
#include <mutex>

namespace charnum {

const BlowupRing<Rational>& blowup_ring(int r) {
  if (r < 1 || r > 5) throw std::invalid_argument("blowup ring supports 1 <= r <= 5");
  static std::array<std::unique_ptr<BlowupRing<Rational>>, 6> rings;
  static std::array<std::once_flag, 6> flags;
  const auto i = static_cast<std::size_t>(r);
  std::call_once(flags[i], [&] { rings[i] = std::make_unique<BlowupRing<Rational>>(r); });
  return *rings[i];
}

}  // namespace charnum
