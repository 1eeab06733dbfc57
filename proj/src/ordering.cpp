#include "stabdiv/ordering.hpp"

#include <algorithm>
#include <cctype>

namespace stabdiv {

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  if (priority_.empty()) throw ValidationError("monomial order needs at least one variable");
  std::vector<bool> seen(priority_.size(), false);
  for (std::size_t v : priority_) {
    if (v >= priority_.size() || seen[v]) throw ValidationError("variable priority must be a permutation");
    seen[v] = true;
  }
}

MonomialOrder MonomialOrder::graded_lex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  for (std::size_t i = 0; i < nvars; ++i) p[i] = i;
  return {OrderKind::graded_lex, std::move(p)};
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  for (std::size_t i = 0; i < nvars; ++i) p[i] = i;
  return {OrderKind::lex, std::move(p)};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

MonomialOrder MonomialOrder::parse(std::string_view spec, const Ambient& ambient) {
  const std::string_view whole = trim(spec);
  const auto colon = whole.find(':');
  const std::string_view kind_text = trim(whole.substr(0, colon));
  OrderKind kind;
  if (kind_text == "grlex") {
    kind = OrderKind::graded_lex;
  } else if (kind_text == "lex") {
    kind = OrderKind::lex;
  } else {
    throw ParseError("unknown order kind '" + std::string(kind_text) + "' (expected grlex or lex)", 1);
  }
  if (colon == std::string_view::npos) {
    return kind == OrderKind::graded_lex ? graded_lex(ambient.nvars()) : lex(ambient.nvars());
  }

  std::vector<std::size_t> priority;
  std::size_t pos = colon + 1;
  while (true) {
    const auto gt = whole.find('>', pos);
    const std::string_view name = trim(whole.substr(pos, gt == std::string_view::npos ? gt : gt - pos));
    if (name.empty()) throw ParseError("empty variable name in order spec", pos + 1);
    const int idx = ambient.find(std::string(name));
    if (idx < 0) throw ValidationError("order refers to undeclared variable '" + std::string(name) + "'");
    if (std::find(priority.begin(), priority.end(), static_cast<std::size_t>(idx)) != priority.end()) {
      throw ValidationError("variable '" + std::string(name) + "' repeated in order spec");
    }
    priority.push_back(static_cast<std::size_t>(idx));
    if (gt == std::string_view::npos) break;
    pos = gt + 1;
  }
  if (priority.size() != ambient.nvars()) {
    throw ValidationError("order spec must list all " + std::to_string(ambient.nvars()) + " variables");
  }
  return {kind, std::move(priority)};
}

std::strong_ordering MonomialOrder::compare(const MultiIndex& a, const MultiIndex& b) const {
  if (kind_ == OrderKind::graded_lex) {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da <=> db;
  }
  for (std::size_t v : priority_) {
    if (a[v] != b[v]) return a[v] <=> b[v];
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::to_string(const Ambient& ambient) const {
  std::string out = is_graded() ? "grlex:" : "lex:";
  for (std::size_t k = 0; k < priority_.size(); ++k) {
    if (k > 0) out += '>';
    out += ambient.names().at(priority_[k]);
  }
  return out;
}

std::optional<std::uint64_t> height(const MonomialOrder& order, const MultiIndex& gamma) {
  if (!order.is_graded()) return std::nullopt;
  const std::size_t d = order.nvars();
  const int n = gamma.degree();
  // monomials of degree < n: C(n - 1 + d, d)
  std::uint64_t below = 0;
  for (int m = 0; m < n; ++m) below += count_monomials(d, m);
  // degree-n monomials lexicographically below gamma, walking variables by priority
  std::uint64_t rank = 0;
  int remaining = n;
  const auto& prio = order.priority();
  for (std::size_t k = 0; k + 1 < d; ++k) {
    const int g = gamma[prio[k]];
    for (int v = 0; v < g; ++v) rank += count_monomials(d - k - 1, remaining - v);
    remaining -= g;
  }
  return below + rank + 1;
}

}  // namespace stabdiv
