#include "stabdiv/polynomial.hpp"

#include <cctype>
#include <set>

namespace stabdiv {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

}  // namespace

Ambient::Ambient(std::vector<std::string> names, int channels) : names_(std::move(names)), channels_(channels) {
  if (names_.empty()) throw ValidationError("at least one variable is required");
  if (channels_ < 1) throw ValidationError("channel count must be positive");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw ValidationError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw ValidationError("duplicate variable name '" + n + "'");
  }
}

Ambient Ambient::standard(std::size_t nvars, int channels) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
  return Ambient(std::move(names), channels);
}

int Ambient::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

CPoly chop(const CPoly& p, double tol) {
  CPoly out(p.shared_ambient());
  for (const auto& [key, c] : p.terms()) {
    if (std::abs(c) > tol) out.add_term(key.index, c, key.channel);
  }
  return out;
}

}  // namespace stabdiv
