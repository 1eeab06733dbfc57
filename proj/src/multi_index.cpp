#include "stabdiv/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "stabdiv/errors.hpp"

namespace stabdiv {

MultiIndex::MultiIndex(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw ValidationError("negative exponent in multi-index");
  }
}

MultiIndex MultiIndex::unit(std::size_t nvars, std::size_t j) {
  MultiIndex out(nvars);
  out.exps_.at(j) = 1;
  return out;
}

int MultiIndex::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool MultiIndex::divides(const MultiIndex& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& other) {
  if (other.size() != size()) throw DimensionError("multi-index length mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  return *this;
}

MultiIndex& MultiIndex::operator-=(const MultiIndex& other) {
  if (other.size() != size()) throw DimensionError("multi-index length mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    exps_[i] -= other.exps_[i];
    if (exps_[i] < 0) throw ValidationError("multi-index subtraction went negative");
  }
  return *this;
}

MultiIndex MultiIndex::shifted(std::size_t j, int delta) const {
  MultiIndex out(*this);
  out.exps_.at(j) += delta;
  if (out.exps_[j] < 0) throw ValidationError("multi-index shift went negative");
  return out;
}

MultiIndex lcm(const MultiIndex& a, const MultiIndex& b) {
  std::vector<int> e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
  return MultiIndex(std::move(e));
}

bool coprime(const MultiIndex& a, const MultiIndex& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

namespace {

void fill(std::size_t pos, int remaining, std::vector<int>& cur, std::vector<MultiIndex>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[pos] = e;
    fill(pos + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<MultiIndex> monomials_of_degree(std::size_t nvars, int n) {
  std::vector<MultiIndex> out;
  if (n < 0 || nvars == 0) return out;
  std::vector<int> cur(nvars, 0);
  fill(0, n, cur, out);
  return out;
}

std::size_t count_monomials(std::size_t nvars, int n) {
  if (n < 0) return 0;
  // C(n + d - 1, d - 1)
  std::size_t num = 1;
  for (std::size_t k = 1; k < nvars; ++k) num = num * (static_cast<std::size_t>(n) + k) / k;
  return num;
}

}  // namespace stabdiv
