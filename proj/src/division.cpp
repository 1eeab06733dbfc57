#include "stabdiv/division.hpp"

namespace stabdiv {

Strategy Strategy::parse(std::string_view name) {
  if (name == "CLO_DEFAULT") return clo_default();
  if (name == "BIVARIATE_STABLE") return bivariate_stable();
  if (name == "DOMINANT_MIN_TERM") return dominant_min_term();
  throw ValidationError("unknown division strategy '" + std::string(name) +
                        "' (expected CLO_DEFAULT, BIVARIATE_STABLE or DOMINANT_MIN_TERM)");
}

std::string Strategy::name() const {
  if (*this == clo_default()) return "CLO_DEFAULT";
  if (*this == bivariate_stable()) return "BIVARIATE_STABLE";
  if (*this == dominant_min_term()) return "DOMINANT_MIN_TERM";
  std::string out = algorithm == DivisionAlgorithm::I ? "I" : "II";
  out += divisor == DivisorChoice::min_index ? "/min-index" : "/max-index";
  if (algorithm == DivisionAlgorithm::II) out += term == TermChoice::leading ? "/leading" : "/minimal-reducible";
  return out;
}

}  // namespace stabdiv
