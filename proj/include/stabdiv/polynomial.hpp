#pragma once

// Sparse multivariate polynomials with values in C^r (r = 1 is the scalar
// ring A_d), over the coefficient domains declared in coeff.hpp.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "stabdiv/coeff.hpp"
#include "stabdiv/errors.hpp"
#include "stabdiv/multi_index.hpp"

namespace stabdiv {

/// Variable names and channel count of a polynomial ring (r = 1) or of the
/// free module A_d (x) C^r.
class Ambient {
 public:
  explicit Ambient(std::vector<std::string> names, int channels = 1);

  /// Variables x1, ..., xd.
  static Ambient standard(std::size_t nvars, int channels = 1);

  std::size_t nvars() const { return names_.size(); }
  int channels() const { return channels_; }
  const std::vector<std::string>& names() const { return names_; }

  /// Same (d, r). Names only affect printing and parsing.
  bool compatible(const Ambient& other) const {
    return nvars() == other.nvars() && channels() == other.channels();
  }

  Ambient with_channels(int channels) const { return Ambient(names_, channels); }

  /// Index of a variable name, or -1.
  int find(const std::string& name) const;

 private:
  std::vector<std::string> names_;
  int channels_;
};

struct TermKey {
  MultiIndex index;
  int channel = 0;

  friend bool operator==(const TermKey&, const TermKey&) = default;
  friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

/// c z^alpha (x) e_channel with c != 0.
template <Coefficient K>
struct Term {
  K coeff;
  MultiIndex index;
  int channel = 0;
};

template <Coefficient K>
class Polynomial {
 public:
  using coeff_type = K;
  using TermMap = std::map<TermKey, K>;

  explicit Polynomial(const Ambient& ambient) : ambient_(std::make_shared<const Ambient>(ambient)) {}
  explicit Polynomial(std::shared_ptr<const Ambient> ambient) : ambient_(std::move(ambient)) {}

  static Polynomial monomial(const Ambient& ambient, const MultiIndex& index, const K& coeff,
                             int channel = 0) {
    Polynomial p(ambient);
    p.add_term(index, coeff, channel);
    return p;
  }

  static Polynomial constant(const Ambient& ambient, const K& coeff, int channel = 0) {
    return monomial(ambient, MultiIndex(ambient.nvars()), coeff, channel);
  }

  /// The coordinate function z_j (scalar ambients only).
  static Polynomial variable(const Ambient& ambient, std::size_t j) {
    return monomial(ambient, MultiIndex::unit(ambient.nvars(), j), K(1));
  }

  static Polynomial from_term(const Ambient& ambient, const Term<K>& t) {
    return monomial(ambient, t.index, t.coeff, t.channel);
  }

  const Ambient& ambient() const { return *ambient_; }
  const std::shared_ptr<const Ambient>& shared_ambient() const { return ambient_; }
  std::size_t nvars() const { return ambient_->nvars(); }
  int channels() const { return ambient_->channels(); }
  bool is_scalar() const { return channels() == 1; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  std::vector<Term<K>> term_list() const {
    std::vector<Term<K>> out;
    out.reserve(terms_.size());
    for (const auto& [key, c] : terms_) out.push_back({c, key.index, key.channel});
    return out;
  }

  K coeff(const MultiIndex& index, int channel = 0) const {
    auto it = terms_.find(TermKey{index, channel});
    return it == terms_.end() ? K(0) : it->second;
  }

  /// Largest |alpha| among stored terms; -1 for the zero polynomial.
  int total_degree() const {
    int deg = -1;
    for (const auto& [key, c] : terms_) deg = std::max(deg, key.index.degree());
    return deg;
  }

  /// Smallest |alpha| among stored terms; -1 for the zero polynomial.
  int min_degree() const {
    if (terms_.empty()) return -1;
    int deg = terms_.begin()->first.index.degree();
    for (const auto& [key, c] : terms_) deg = std::min(deg, key.index.degree());
    return deg;
  }

  /// True for 0 and for polynomials whose terms all share one total degree.
  bool is_homogeneous() const { return total_degree() == min_degree(); }

  /// Adds c z^index (x) e_channel, merging with an existing term.
  void add_term(const MultiIndex& index, const K& c, int channel = 0) {
    check_key(index, channel);
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(TermKey{index, channel}, c);
    if (!inserted) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  void add_term(const Term<K>& t) { add_term(t.index, t.coeff, t.channel); }

  Polynomial& operator+=(const Polynomial& other) {
    require_compatible(other);
    for (const auto& [key, c] : other.terms_) add_term(key.index, c, key.channel);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& other) {
    require_compatible(other);
    for (const auto& [key, c] : other.terms_) add_term(key.index, K(-c), key.channel);
    return *this;
  }

  Polynomial& operator*=(const K& scalar) {
    if (coeff_is_zero(scalar)) {
      terms_.clear();
      return *this;
    }
    for (auto& [key, c] : terms_) c *= scalar;
    return *this;
  }

  Polynomial scaled(const K& scalar) const {
    Polynomial out(*this);
    out *= scalar;
    return out;
  }

  /// (c z^beta) * p; the workhorse of division.
  Polynomial times_monomial(const MultiIndex& beta, const K& c) const {
    Polynomial out(ambient_);
    if (coeff_is_zero(c)) return out;
    for (const auto& [key, v] : terms_) {
      out.terms_.emplace_hint(out.terms_.end(), TermKey{key.index + beta, key.channel}, K(v * c));
    }
    return out;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& [key, c] : a.terms_) c = K(-c);
    return a;
  }

  /// Exact equality of ambient shape and terms.
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ambient_->compatible(*b.ambient_) && a.terms_ == b.terms_;
  }

  void require_compatible(const Polynomial& other) const {
    if (!ambient_->compatible(*other.ambient_)) {
      throw DimensionError("ambient mismatch: (d, r) = (" + std::to_string(nvars()) + ", " +
                           std::to_string(channels()) + ") vs (" + std::to_string(other.nvars()) +
                           ", " + std::to_string(other.channels()) + ")");
    }
  }

 private:
  void check_key(const MultiIndex& index, int channel) const {
    if (index.size() != nvars()) throw DimensionError("multi-index length does not match variable count");
    if (channel < 0 || channel >= channels()) throw DimensionError("channel index out of range");
  }

  std::shared_ptr<const Ambient> ambient_;
  TermMap terms_;
};

using QPoly = Polynomial<Rational>;
using GPoly = Polynomial<GaussianRational>;
using CPoly = Polynomial<Complex>;

template <Coefficient K>
Polynomial<K> poly_add(const Polynomial<K>& p, const Polynomial<K>& q) {
  return p + q;
}

/// Product in A_d, or the module action A_d x (A_d (x) C^r) when exactly one
/// factor is vector valued.
template <Coefficient K>
Polynomial<K> poly_mul(const Polynomial<K>& p, const Polynomial<K>& q) {
  if (p.nvars() != q.nvars()) throw DimensionError("variable count mismatch in product");
  if (!p.is_scalar() && !q.is_scalar()) {
    throw UnsupportedError("product of two vector-valued polynomials is not defined");
  }
  const Polynomial<K>& scalar = q.is_scalar() ? q : p;
  const Polynomial<K>& other = q.is_scalar() ? p : q;
  Polynomial<K> out(other.shared_ambient());
  for (const auto& [sk, sc] : scalar.terms()) {
    for (const auto& [ok, oc] : other.terms()) out.add_term(sk.index + ok.index, K(sc * oc), ok.channel);
  }
  return out;
}

template <Coefficient K>
Polynomial<K> operator*(const Polynomial<K>& p, const Polynomial<K>& q) {
  return poly_mul(p, q);
}

/// Formal partial derivative with respect to variable j (0-based).
template <Coefficient K>
Polynomial<K> partial_derivative(const Polynomial<K>& p, std::size_t j) {
  if (j >= p.nvars()) throw DimensionError("derivative variable out of range");
  Polynomial<K> out(p.shared_ambient());
  for (const auto& [key, c] : p.terms()) {
    const int e = key.index[j];
    if (e == 0) continue;
    out.add_term(key.index.shifted(j, -1), K(c * K(static_cast<long>(e))), key.channel);
  }
  return out;
}

/// The degree-n part p_n of p.
template <Coefficient K>
Polynomial<K> homogeneous_component(const Polynomial<K>& p, int n) {
  Polynomial<K> out(p.shared_ambient());
  for (const auto& [key, c] : p.terms()) {
    if (key.index.degree() == n) out.add_term(key.index, c, key.channel);
  }
  return out;
}

/// All nonzero homogeneous components, keyed by degree.
template <Coefficient K>
std::map<int, Polynomial<K>> homogeneous_components(const Polynomial<K>& p) {
  std::map<int, Polynomial<K>> out;
  for (const auto& [key, c] : p.terms()) {
    auto it = out.try_emplace(key.index.degree(), p.shared_ambient()).first;
    it->second.add_term(key.index, c, key.channel);
  }
  return out;
}

template <Coefficient K>
using CoeffMatrix = std::vector<std::vector<K>>;

namespace detail {

template <Coefficient K>
bool is_diagonal(const CoeffMatrix<K>& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (i != j && !coeff_is_zero(a[i][j])) return false;
    }
  }
  return true;
}

template <Coefficient K>
K power(const K& base, int e) {
  K out(1);
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace detail

/// p(lambda_1 z_1, ..., lambda_d z_d): coefficient of z^alpha scaled by lambda^alpha.
template <Coefficient K>
Polynomial<K> scale_variables(const Polynomial<K>& p, const std::vector<K>& lambda) {
  if (lambda.size() != p.nvars()) throw DimensionError("scaling vector length does not match variable count");
  Polynomial<K> out(p.shared_ambient());
  for (const auto& [key, c] : p.terms()) {
    K factor(1);
    for (std::size_t i = 0; i < lambda.size(); ++i) factor *= detail::power(lambda[i], key.index[i]);
    out.add_term(key.index, K(c * factor), key.channel);
  }
  return out;
}

/// p(Az): every z_i is replaced by sum_j A[i][j] z_j. Channels are untouched.
/// In the float domain a singular A is rejected; in the exact domains the
/// caller is responsible for invertibility.
template <Coefficient K>
Polynomial<K> substitute_linear(const Polynomial<K>& p, const CoeffMatrix<K>& a) {
  const std::size_t d = p.nvars();
  if (a.size() != d) throw DimensionError("substitution matrix must be d x d");
  for (const auto& row : a) {
    if (row.size() != d) throw DimensionError("substitution matrix must be d x d");
  }
  if constexpr (std::is_same_v<K, Complex>) {
    Eigen::MatrixXcd m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) m(i, j) = a[i][j];
    }
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(m);
    if (lu.rank() < static_cast<Eigen::Index>(d)) throw SingularMatrixError("substitution matrix is singular");
  }
  if (detail::is_diagonal(a)) {
    std::vector<K> diag(d);
    for (std::size_t i = 0; i < d; ++i) diag[i] = a[i][i];
    return scale_variables(p, diag);
  }

  const Ambient scalar_ambient = p.ambient().with_channels(1);
  std::vector<Polynomial<K>> images;
  images.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    Polynomial<K> li(scalar_ambient);
    for (std::size_t j = 0; j < d; ++j) li.add_term(MultiIndex::unit(d, j), a[i][j]);
    images.push_back(std::move(li));
  }
  // powers[i][k] = (row i of A . z)^k, grown on demand
  std::vector<std::vector<Polynomial<K>>> powers(d);
  auto power_of = [&](std::size_t i, int k) -> const Polynomial<K>& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial<K>::constant(scalar_ambient, K(1)));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(poly_mul(cache.back(), images[i]));
    return cache[static_cast<std::size_t>(k)];
  };

  Polynomial<K> out(p.shared_ambient());
  for (const auto& [key, c] : p.terms()) {
    Polynomial<K> prod = Polynomial<K>::constant(scalar_ambient, c);
    for (std::size_t i = 0; i < d; ++i) {
      if (key.index[i] > 0) prod = poly_mul(prod, power_of(i, key.index[i]));
    }
    for (const auto& [pk, pc] : prod.terms()) out.add_term(pk.index, pc, key.channel);
  }
  return out;
}

/// Exact -> complex double, coefficient by coefficient (nearest double).
template <Coefficient K>
Polynomial<Complex> to_float(const Polynomial<K>& p) {
  Polynomial<Complex> out(p.shared_ambient());
  for (const auto& [key, c] : p.terms()) out.add_term(key.index, to_complex(c), key.channel);
  return out;
}

/// Rational -> Gaussian rational (lossless).
inline GPoly to_gaussian(const QPoly& p) {
  GPoly out(p.shared_ambient());
  for (const auto& [key, c] : p.terms()) out.add_term(key.index, GaussianRational(c), key.channel);
  return out;
}

/// Drops float coefficients with |c| <= tol.
CPoly chop(const CPoly& p, double tol);

/// Component of p in channel j, as a scalar polynomial.
template <Coefficient K>
Polynomial<K> channel_component(const Polynomial<K>& p, int channel) {
  Polynomial<K> out(p.ambient().with_channels(1));
  for (const auto& [key, c] : p.terms()) {
    if (key.channel == channel) out.add_term(key.index, c);
  }
  return out;
}

/// Scalar polynomial placed in channel j of A_d (x) C^r.
template <Coefficient K>
Polynomial<K> embed_channel(const Polynomial<K>& p, const Ambient& target, int channel) {
  if (!p.is_scalar()) throw UnsupportedError("only scalar polynomials can be embedded in a channel");
  Polynomial<K> out(target);
  for (const auto& [key, c] : p.terms()) out.add_term(key.index, c, channel);
  return out;
}

}  // namespace stabdiv
