#include "tensorlab/conjecture_lab.hpp"

namespace tensorlab {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::holds: return "holds";
    case Status::not_applicable: return "not_applicable";
    case Status::counterexample: return "COUNTEREXAMPLE";
  }
  return "unknown";
}

std::string_view to_string(Target t) noexcept {
  switch (t) {
    case Target::conj13: return "conj13";
    case Target::thm32: return "thm32";
    case Target::thm41: return "thm41";
    case Target::conj52: return "conj52";
  }
  return "unknown";
}

Target parse_target(std::string_view text) {
  if (text == "conj13") return Target::conj13;
  if (text == "thm32") return Target::thm32;
  if (text == "thm41" || text == "kr_thm41") return Target::thm41;
  if (text == "conj52") return Target::conj52;
  throw Error(Errc::InvalidArgument, "unknown target '" + std::string(text) + "'", "target");
}

}  // namespace tensorlab
