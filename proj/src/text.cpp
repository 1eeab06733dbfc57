#include "stabdiv/text.hpp"

#include <cctype>
#include <optional>

namespace stabdiv {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// A resolved name: a variable index or a channel marker.
struct Atom {
  int variable = -1;
  int channel = -1;
};

class Parser {
 public:
  Parser(std::string_view text, const Ambient& ambient) : text_(text), ambient_(ambient) {}

  QPoly run() {
    QPoly out(ambient_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    while (true) {
      parse_term(out, negate);
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail(std::string("unexpected '") + peek() + "'");
      negate = peek() == '-';
      ++pos_;
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_ + 1); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t pos) const { throw ParseError(what, pos + 1); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Integer parse_int() {
    const std::size_t start = pos_;
    while (!at_end() && digit(peek())) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::optional<Atom> resolve(std::string_view name) const {
    const int v = ambient_.find(std::string(name));
    if (v >= 0) return Atom{v, -1};
    if (name.size() >= 2 && name[0] == 'e' && name[1] != '0') {
      bool all_digits = true;
      for (char c : name.substr(1)) all_digits = all_digits && digit(c);
      if (all_digits && name.size() <= 10) {
        const int j = std::stoi(std::string(name.substr(1)));
        if (j >= 1 && j <= ambient_.channels()) return Atom{-1, j - 1};
      }
    }
    return std::nullopt;
  }

  // Splits an identifier run greedily into declared names, longest prefix first.
  std::vector<std::pair<Atom, std::size_t>> split(std::size_t start, std::size_t end) const {
    std::vector<std::pair<Atom, std::size_t>> out;
    std::size_t at = start;
    while (at < end) {
      std::optional<Atom> found;
      std::size_t len = end - at;
      for (; len > 0; --len) {
        found = resolve(text_.substr(at, len));
        if (found) break;
      }
      if (!found) fail_at("unknown name '" + std::string(text_.substr(at, end - at)) + "'", at);
      out.emplace_back(*found, at);
      at += len;
    }
    return out;
  }

  void parse_term(QPoly& out, bool negate) {
    Rational coeff = negate ? -1 : 1;
    MultiIndex index(ambient_.nvars());
    int channel = -1;
    std::size_t factors = 0;
    const std::size_t term_start = pos_;

    while (true) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c == '*') {
        if (factors == 0) fail("'*' without a preceding factor");
        ++pos_;
        skip_ws();
        if (at_end() || !(digit(peek()) || ident_start(peek()))) fail("expected a factor after '*'");
        continue;
      }
      if (digit(c)) {
        Integer num = parse_int();
        Integer den = 1;
        skip_ws();
        if (!at_end() && peek() == '/') {
          ++pos_;
          skip_ws();
          const std::size_t den_pos = pos_;
          den = parse_int();
          if (den == 0) fail_at("zero denominator", den_pos);
        }
        Rational q(num, den);
        q.canonicalize();
        coeff *= q;
        ++factors;
        continue;
      }
      if (ident_start(c)) {
        const std::size_t start = pos_;
        while (!at_end() && ident_char(peek())) ++pos_;
        auto atoms = split(start, pos_);
        int power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          const Integer e = parse_int();
          if (!e.fits_sint_p() || e > 100000) fail("exponent too large");
          power = static_cast<int>(e.get_si());
        }
        // an exponent binds to the last name of a juxtaposed run
        for (std::size_t k = 0; k < atoms.size(); ++k) {
          const auto& [atom, at] = atoms[k];
          const int e = (k + 1 == atoms.size()) ? power : 1;
          if (atom.channel >= 0) {
            if (e != 1) fail_at("channel marker cannot carry an exponent", at);
            if (channel >= 0) fail_at("term has more than one channel marker", at);
            channel = atom.channel;
          } else {
            index = index.shifted(static_cast<std::size_t>(atom.variable), e);
          }
        }
        ++factors;
        continue;
      }
      break;
    }
    if (factors == 0) {
      if (at_end()) fail("expected a term");
      fail(std::string("unexpected '") + peek() + "'");
    }
    if (channel < 0) {
      if (ambient_.channels() > 1) fail_at("term needs a channel marker e1..e" + std::to_string(ambient_.channels()), term_start);
      channel = 0;
    }
    out.add_term(index, coeff, channel);
  }

  std::string_view text_;
  const Ambient& ambient_;
  std::size_t pos_ = 0;
};

template <Coefficient K>
std::string coeff_text(const K& c) {
  return to_string(c);
}

template <Coefficient K>
std::string join_terms(const std::vector<Term<K>>& terms, const Ambient& ambient) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    std::string s = term_to_string(t, ambient);
    if (out.empty()) {
      out = std::move(s);
    } else if (s.front() == '-') {
      out += " - " + s.substr(1);
    } else {
      out += " + " + s;
    }
  }
  return out;
}

template <Coefficient K>
std::string print(const Polynomial<K>& p) {
  return join_terms(sorted_terms(p, MonomialOrder::graded_lex(p.nvars())), p.ambient());
}

}  // namespace

QPoly parse_polynomial(std::string_view text, const Ambient& ambient) { return Parser(text, ambient).run(); }

std::vector<QPoly> parse_polynomials(const std::vector<std::string>& texts, const Ambient& ambient) {
  std::vector<QPoly> out;
  out.reserve(texts.size());
  for (std::size_t i = 0; i < texts.size(); ++i) {
    try {
      out.push_back(parse_polynomial(texts[i], ambient));
    } catch (const ParseError& e) {
      throw ParseError("entry " + std::to_string(i + 1) + ": " + e.what(), e.column(), i + 1);
    }
  }
  return out;
}

std::string monomial_to_string(const MultiIndex& index, const Ambient& ambient) {
  std::string out;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (index[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ambient.names().at(i);
    if (index[i] > 1) out += "^" + std::to_string(index[i]);
  }
  return out.empty() ? "1" : out;
}

template <Coefficient K>
std::string term_to_string(const Term<K>& t, const Ambient& ambient) {
  std::vector<std::string> parts;
  if (t.index.degree() > 0) parts.push_back(monomial_to_string(t.index, ambient));
  if (ambient.channels() > 1) parts.push_back("e" + std::to_string(t.channel + 1));

  std::string c = coeff_text(t.coeff);
  std::string out;
  if (parts.empty()) return c;
  if (c == "1") {
    out.clear();
  } else if (c == "-1") {
    out = "-";
  } else {
    out = c + "*";
  }
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k == 0 ? "" : "*") + parts[k];
  return out;
}

template std::string term_to_string(const Term<Rational>&, const Ambient&);
template std::string term_to_string(const Term<GaussianRational>&, const Ambient&);
template std::string term_to_string(const Term<Complex>&, const Ambient&);

std::string to_string(const QPoly& p) { return print(p); }
std::string to_string(const GPoly& p) { return print(p); }
std::string to_string(const CPoly& p) { return print(p); }

std::string to_string(const QPoly& p, const MonomialOrder& order) {
  return join_terms(sorted_terms(p, order), p.ambient());
}

}  // namespace stabdiv
